//! Closed-form invariants and the interval bounds that certificates are
//! built from.
//!
//! Rasmussen invariant and genus are only available for positive (or
//! negative) diagrams, where Seifert's algorithm is genus-minimising and
//! `s = 2g = c - O + 1`.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{self, LinkDiagram};
use crate::error::{invalid, Error, Result};
use crate::poly::LaurentPoly1;

/// A closed interval of even integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntInterval {
    lo: i64,
    hi: i64,
}

impl IntInterval {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo % 2 != 0 || hi % 2 != 0 {
            return invalid(format!("interval bounds must be even, got [{lo}, {hi}]"));
        }
        if lo > hi {
            return invalid(format!("empty interval [{lo}, {hi}]"));
        }
        Ok(IntInterval { lo, hi })
    }

    pub fn point(v: i64) -> Result<Self> {
        Self::new(v, v)
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn width(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Minkowski sum.
    pub fn add(&self, other: &IntInterval) -> IntInterval {
        IntInterval { lo: self.lo + other.lo, hi: self.hi + other.hi }
    }

    /// `{x - y : x ∈ self, y ∈ other}`.
    pub fn sub(&self, other: &IntInterval) -> IntInterval {
        IntInterval { lo: self.lo - other.hi, hi: self.hi - other.lo }
    }

    pub fn shift(&self, by: i64) -> Result<IntInterval> {
        Self::new(self.lo + by, self.hi + by)
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The invariants of a positive knot, all computed from one diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub s: i64,
    pub sigma: i64,
    pub det: u64,
    pub genus: i64,
    pub slice_genus: i64,
}

impl InvariantRecord {
    /// Requires a positive knot diagram; `s = 2g = 2g_*`.
    pub fn for_positive_knot(d: &LinkDiagram) -> Result<Self> {
        let genus = positive_genus(d)?;
        Ok(InvariantRecord {
            s: 2 * genus,
            sigma: diagram::signature(d)?,
            det: diagram::determinant(d),
            genus,
            slice_genus: genus,
        })
    }
}

fn check_coprime(a: i64, b: i64) -> Result<()> {
    if a < 1 || b < 1 {
        return invalid(format!("torus knot parameters must be positive, got ({a}, {b})"));
    }
    if a.gcd(&b) != 1 {
        return invalid(format!("T({a},{b}) is a link, not a knot: gcd = {}", a.gcd(&b)));
    }
    Ok(())
}

fn torus_f(a: i64, b: i64) -> LaurentPoly1 {
    LaurentPoly1::power_minus_one(a * b) * LaurentPoly1::power_minus_one(1)
}

fn torus_g(a: i64, b: i64) -> LaurentPoly1 {
    LaurentPoly1::power_minus_one(a) * LaurentPoly1::power_minus_one(b)
}

/// `(t^{ab}-1)(t-1) / ((t^a-1)(t^b-1))`, unnormalised.
pub fn torus_alexander(a: i64, b: i64) -> Result<LaurentPoly1> {
    check_coprime(a, b)?;
    torus_f(a, b).div_exact(&torus_g(a, b))
}

/// `|p(-1)|`.
pub fn det_from_alexander(p: &LaurentPoly1) -> u64 {
    let v = p.eval(-1).expect("evaluation at -1 is always exact");
    v.magnitude().to_u64().expect("determinant fits in u64")
}

/// `det(T(4,x)) = x`, computed through `f'(-1)/g'(-1)` and cross-checked
/// against the Alexander polynomial.
pub fn torus_det_4x(x: i64) -> Result<i64> {
    if x < 1 || x % 2 == 0 {
        return invalid(format!("x must be an odd positive integer, got {x}"));
    }
    let (f, g) = (torus_f(4, x), torus_g(4, x));
    // both vanish at -1, so take the ratio of derivatives
    if !f.eval(-1)?.is_zero() || !g.eval(-1)?.is_zero() {
        return Err(Error::Internal(format!("f or g does not vanish at -1 for x = {x}")));
    }
    let df = f.derivative().eval(-1)?;
    let dg = g.derivative().eval(-1)?;
    if dg.is_zero() || !(&df % &dg).is_zero() {
        return Err(Error::Internal(format!("f'(-1) = {df} is not a multiple of g'(-1) = {dg}")));
    }
    let ratio = (&df / &dg).abs().to_i64().ok_or_else(|| Error::Resource("ratio overflow".into()))?;
    let via_alexander = det_from_alexander(&torus_alexander(4, x)?) as i64;
    if ratio != via_alexander {
        return Err(Error::Internal(format!(
            "derivative ratio {ratio} disagrees with |Δ(-1)| = {via_alexander}"
        )));
    }
    Ok(ratio)
}

fn check_positive_knot(d: &LinkDiagram) -> Result<()> {
    if !d.is_positive() {
        return invalid("diagram is not positive");
    }
    if d.component_count() != 1 {
        return invalid(format!("diagram has {} components, not a knot", d.component_count()));
    }
    Ok(())
}

/// `c - O + 1`, which is `2g` for positive or negative diagrams.
fn seifert_euler(d: &LinkDiagram) -> i64 {
    d.crossing_count() as i64 - d.seifert_circle_count() as i64 + 1
}

/// `(c(D) - O(D) + 1) / 2` for a positive knot diagram.
pub fn positive_genus(d: &LinkDiagram) -> Result<i64> {
    check_positive_knot(d)?;
    Ok(seifert_euler(d) / 2)
}

/// `s = c(D) - O(D) + 1` for a positive knot diagram.
pub fn rasmussen_positive(d: &LinkDiagram) -> Result<i64> {
    check_positive_knot(d)?;
    Ok(seifert_euler(d))
}

/// Rasmussen invariant of a positive or negative knot diagram; negative
/// diagrams are mirrors of positive ones, so `s` changes sign.
pub fn rasmussen_signed(d: &LinkDiagram) -> Result<i64> {
    if d.is_positive() {
        rasmussen_positive(d)
    } else if d.is_negative() {
        Ok(-rasmussen_positive(&d.mirror())?)
    } else {
        invalid("diagram has crossings of both signs")
    }
}

/// `3(p+q) + (r-3)/2`.
#[allow(non_snake_case)]
pub fn genus_Ko(p: i64, q: i64, r: i64) -> Result<i64> {
    if r % 2 == 0 {
        return invalid(format!("r = {r} is even, so the quotient is a link"));
    }
    for (name, v) in [("p", p), ("q", q)] {
        if v < 3 || v % 2 == 0 {
            return invalid(format!("{name} must be an odd integer >= 3, got {v}"));
        }
    }
    Ok(3 * (p + q) + (r - 3) / 2)
}

/// `6n+3q-1` for `r = 4q+1`, `6n+3q-2` for `r = 4q-1`.
#[allow(non_snake_case)]
pub fn genus_Ke(n: i64, q: i64, r: i64) -> Result<i64> {
    if n < 1 || q < 3 || q % 2 == 0 {
        return invalid(format!("need n >= 1 and odd q >= 3, got n = {n}, q = {q}"));
    }
    if r == 4 * q + 1 {
        Ok(6 * n + 3 * q - 1)
    } else if r == 4 * q - 1 {
        Ok(6 * n + 3 * q - 2)
    } else {
        invalid(format!("r must be 4q-1 or 4q+1 = {} or {}, got {r}", 4 * q - 1, 4 * q + 1))
    }
}

/// `(a-1)(b-1)/2`.
pub fn torus_genus(a: i64, b: i64) -> Result<i64> {
    check_coprime(a, b)?;
    Ok((a - 1) * (b - 1) / 2)
}

fn check_even(name: &str, v: i64) -> Result<()> {
    if v % 2 != 0 {
        return invalid(format!("{name} = {v} is odd; this invariant is always even"));
    }
    Ok(())
}

/// Bounds on `σ(K₋)` from `σ(K₊)`: `σ(K₊) ≤ σ(K₋) ≤ σ(K₊) + 2`.
pub fn crossing_change_sigma_bound(sigma_plus: i64) -> Result<IntInterval> {
    check_even("sigma", sigma_plus)?;
    IntInterval::new(sigma_plus, sigma_plus + 2)
}

/// Bounds on `s(K₊)` from `s(K₋)`: `s(K₋) ≤ s(K₊) ≤ s(K₋) + 2`.
pub fn crossing_change_s_bound(s_minus: i64) -> Result<IntInterval> {
    check_even("s", s_minus)?;
    IntInterval::new(s_minus, s_minus + 2)
}

/// Range of `σ(K') - σ(K)` across a #-move, by the number of components
/// of the resolved diagram `D₀`.
pub fn sharp_move_sigma_jump(d0_components: usize) -> Result<IntInterval> {
    match d0_components {
        2 => IntInterval::new(2, 4),
        1 => IntInterval::new(2, 6),
        c => invalid(format!("D0 must have 1 or 2 components, got {c}")),
    }
}

/// Bounds on `σ(K')` where `K'` is obtained from `K` by a #-move.
pub fn sharp_move_sigma_bound(sigma_k: i64, d0_components: usize) -> Result<IntInterval> {
    check_even("sigma", sigma_k)?;
    sharp_move_sigma_jump(d0_components)?.shift(sigma_k)
}

/// `s(K) - s(K')` for positive knots related by a #-move.
pub fn sharp_move_s_delta() -> i64 {
    8
}
