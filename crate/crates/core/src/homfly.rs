//! HOMFLY polynomials of braid closures through the Hecke algebra.
//!
//! Generators satisfy `g_i² = z·g_i + 1`, so `g_i⁻¹ = g_i - z` and the
//! basis `{g_w : w ∈ S_n}` has coefficients in `Z[z]`. The Markov trace is
//! unnormalised: closing `n` trivial strands gives `δ^{n-1}` with
//! `δ = (a - a⁻¹)/z`, and a positive stabilisation multiplies by `a`.
//! After dividing by `a^{writhe}` the result satisfies
//!
//! ```text
//! a·P(L₊) - a⁻¹·P(L₋) = z·P(L₀),   P(unknot) = 1,
//! ```
//!
//! and the right-handed trefoil is `(z² + 2)a⁻² - a⁻⁴`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::braid::{exponent_sum, BraidWord, Permutation};
use crate::error::{invalid, Error, Result};
use crate::poly::{LaurentPoly1, LaurentPoly2};

/// Largest strand count accepted; the basis has `n!` elements.
pub const MAX_STRANDS: usize = 6;

/// An element of the Hecke algebra `H_n`, coefficients in `Z[z^±1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    terms: BTreeMap<Permutation, LaurentPoly1>,
}

impl HeckeElement {
    pub fn one(strands: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Permutation::identity(strands), LaurentPoly1::one());
        HeckeElement { strands, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Basis coefficients, permutations in lexicographic order.
    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentPoly1> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly1 {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly1::zero)
    }

    fn add_term(&mut self, w: Permutation, c: &LaurentPoly1) {
        let entry = self.terms.entry(w).or_insert_with(LaurentPoly1::zero);
        *entry += c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// Right multiplication by `g_i` (0-based `i`, swapping positions `i`
    /// and `i+1`).
    fn times_gen(&self, i: usize) -> HeckeElement {
        let z = LaurentPoly1::var();
        let mut out = HeckeElement { strands: self.strands, terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.0.swap(i, i + 1);
            if w.0[i] < w.0[i + 1] {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, c);
                out.add_term(w.clone(), &(c * &z));
            }
        }
        out
    }

    /// Right multiplication by `g_i⁻¹ = g_i - z`.
    fn times_gen_inverse(&self, i: usize) -> HeckeElement {
        let mut out = self.times_gen(i);
        let z = LaurentPoly1::var();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &-&(c * &z));
        }
        out
    }

    /// Right multiplication by a braid letter.
    fn times_letter(&self, l: i32) -> HeckeElement {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            self.times_gen(i)
        } else {
            self.times_gen_inverse(i)
        }
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut out = HeckeElement { strands: self.strands, terms: BTreeMap::new() };
        for (w, c) in &other.terms {
            let mut prod = self.clone();
            for i in reduced_word(w) {
                prod = prod.times_gen(i);
            }
            for (v, d) in prod.terms {
                out.add_term(v, &(&d * c));
            }
        }
        Ok(out)
    }
}

/// A reduced word `[i1, .., ik]` with `w = s_{i1} ⋯ s_{ik}`.
fn reduced_word(w: &Permutation) -> Vec<usize> {
    let mut w = w.clone();
    let mut rev = Vec::new();
    while let Some(j) = (0..w.len().saturating_sub(1)).find(|&j| w.0[j] > w.0[j + 1]) {
        w.0.swap(j, j + 1);
        rev.push(j);
    }
    rev.reverse();
    rev
}

fn check_strands(w: &BraidWord) -> Result<()> {
    if w.strands() > MAX_STRANDS {
        return Err(Error::Resource(format!(
            "{} strands exceeds the Hecke algebra limit of {MAX_STRANDS}",
            w.strands()
        )));
    }
    Ok(())
}

/// Image of `w` under `σ_i ↦ g_i`.
pub fn hecke_image(w: &BraidWord) -> Result<HeckeElement> {
    check_strands(w)?;
    let mut h = HeckeElement::one(w.strands());
    for &l in w.letters() {
        h = h.times_letter(l);
    }
    Ok(h)
}

/// Memoised Markov trace of basis elements.
struct Trace {
    delta: LaurentPoly2,
    a: LaurentPoly2,
    memo: HashMap<Permutation, LaurentPoly2>,
}

impl Trace {
    fn new() -> Self {
        // δ = (a - a⁻¹) z⁻¹
        let delta = LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), -1)]);
        Trace { delta, a: LaurentPoly2::monomial((1, 0), 1), memo: HashMap::new() }
    }

    fn of_element(&mut self, h: &HeckeElement) -> LaurentPoly2 {
        let mut acc = LaurentPoly2::zero();
        for (w, c) in h.terms() {
            acc += &(&LaurentPoly2::from_z(c) * &self.of_basis(w));
        }
        acc
    }

    fn of_basis(&mut self, w: &Permutation) -> LaurentPoly2 {
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let n = w.len();
        let value = if n <= 1 {
            LaurentPoly2::one()
        } else if w.0[n - 1] == n - 1 {
            let smaller = Permutation(w.0[..n - 1].to_vec());
            let t = self.of_basis(&smaller);
            &self.delta * &t
        } else {
            // w = v · s_{n-2} s_{n-3} ⋯ s_k where k is the position of n-1;
            // by cyclicity tr(g_v g_{n-2} g_{n-3}⋯g_k) = a · tr(g_v g_{n-3}⋯g_k)
            let k = w.0.iter().position(|&x| x == n - 1).unwrap();
            let v: Vec<usize> = w.0.iter().copied().filter(|&x| x != n - 1).collect();
            let mut h = HeckeElement {
                strands: n - 1,
                terms: BTreeMap::from([(Permutation(v), LaurentPoly1::one())]),
            };
            for i in (k..n.saturating_sub(2)).rev() {
                h = h.times_gen(i);
            }
            let t = self.of_element(&h);
            &self.a * &t
        };
        self.memo.insert(w.clone(), value.clone());
        value
    }
}

/// HOMFLY polynomial of the closure of `w`.
pub fn homfly(w: &BraidWord) -> Result<LaurentPoly2> {
    let h = hecke_image(w)?;
    let mut trace = Trace::new();
    let raw = trace.of_element(&h);
    Ok(raw.shift((-exponent_sum(w), 0)))
}

/// Morton–Franks–Williams lower bound on braid index: `a`-breadth/2 + 1.
pub fn mfw_bound(p: &LaurentPoly2) -> Result<i64> {
    match p.a_span() {
        Some((lo, hi)) => Ok((hi - lo) / 2 + 1),
        None => invalid("the zero polynomial has no a-breadth"),
    }
}

/// `|Δ(-1)|` through the Conway specialisation `∇(z) = P(1, z)` and
/// `Δ(-1) = ∇(2i)`.
pub fn det_from_homfly(p: &LaurentPoly2) -> Result<u64> {
    let conway = p.at_a_one();
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for (j, c) in conway.terms() {
        if j < 0 {
            return Err(Error::InvalidArgument(format!(
                "Conway polynomial has a negative power z^{j}; not the polynomial of a link"
            )));
        }
        // (2i)^j = 2^j · i^j
        let term = c * (BigInt::from(1) << j as usize);
        match j % 4 {
            0 => re += term,
            1 => im += term,
            2 => re -= term,
            _ => im -= term,
        }
    }
    let value = if im.is_zero() {
        re
    } else if re.is_zero() {
        im
    } else {
        return Err(Error::InvalidArgument(
            "Conway polynomial mixes parities; not the polynomial of a link".into(),
        ));
    };
    value
        .magnitude()
        .to_u64()
        .ok_or_else(|| Error::Resource("determinant does not fit in u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_braid, quotient_braid_odd, torus_braid};

    fn p(s: &str, n: usize) -> LaurentPoly2 {
        homfly(&parse_braid(s, n).unwrap()).unwrap()
    }

    #[test]
    fn unknot_and_trefoil() {
        assert_eq!(p("", 1), LaurentPoly2::one());
        assert_eq!(p("1", 2), LaurentPoly2::one());
        assert_eq!(p("1 -2", 3), LaurentPoly2::one());
        let t = p("1 1 1", 2);
        let expected = LaurentPoly2::from_terms([((-2, 2), 1), ((-2, 0), 2), ((-4, 0), -1)]);
        assert_eq!(t, expected);
        assert_eq!(t.to_string(), "-1*a^-4 + 2*a^-2 + 1*a^-2*z^2");
        assert_eq!(mfw_bound(&t).unwrap(), 2);
        assert_eq!(det_from_homfly(&t).unwrap(), 3);
        assert_eq!(mfw_bound(&LaurentPoly2::one()).unwrap(), 1);
        assert!(mfw_bound(&LaurentPoly2::zero()).is_err());
    }

    #[test]
    fn skein_relation_on_trefoil() {
        let a = LaurentPoly2::monomial((1, 0), 1);
        let a_inv = LaurentPoly2::monomial((-1, 0), 1);
        let z = LaurentPoly2::monomial((0, 1), 1);
        let lhs = &(&a * &p("1 1 1", 2)) - &(&a_inv * &p("-1 1 1", 2));
        assert_eq!(lhs, &z * &p("1 1", 2));
    }

    #[test]
    fn square_of_generator() {
        let h = hecke_image(&parse_braid("1 1", 2).unwrap()).unwrap();
        assert_eq!(h.coeff(&Permutation(vec![0, 1])), LaurentPoly1::one());
        assert_eq!(h.coeff(&Permutation(vec![1, 0])), LaurentPoly1::var());
        assert_eq!(hecke_image(&BraidWord::identity(3).unwrap()).unwrap(), HeckeElement::one(3));
    }

    #[test]
    fn torus_34_from_both_sides() {
        let a = homfly(&torus_braid(3, 4).unwrap()).unwrap();
        let b = homfly(&torus_braid(4, 3).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(det_from_homfly(&a).unwrap(), 3);
    }

    #[test]
    fn quotient_braid_index() {
        let w = quotient_braid_odd(3, 3, 1).unwrap();
        let h = hecke_image(&w).unwrap();
        assert_eq!(h.terms().len(), 24);
        let poly = homfly(&w).unwrap();
        assert_eq!(mfw_bound(&poly).unwrap(), 4);
        assert_eq!(det_from_homfly(&homfly(&quotient_braid_odd(3, 3, 5).unwrap()).unwrap()).unwrap(), 5);
    }

    #[test]
    fn guard_and_multiplicativity() {
        assert!(matches!(hecke_image(&BraidWord::identity(7).unwrap()), Err(Error::Resource(_))));
        let u = parse_braid("1 -2 3 2", 4).unwrap();
        let v = parse_braid("-3 1 1 2 -1", 4).unwrap();
        let hu = hecke_image(&u).unwrap();
        let hv = hecke_image(&v).unwrap();
        assert_eq!(hu.mul(&hv).unwrap(), hecke_image(&u.concat(&v).unwrap()).unwrap());
    }
}
