//! The explicit braid families: torus braids and the four-strand quotient
//! braids whose closures are the Montesinos-trick quotients of `P(p,q,q)`.

use super::{full_twist, BraidWord};
use crate::error::{invalid, Result};

/// `σ2 σ3 σ1 σ2`: the pair of strands {1,2} crossing the pair {3,4}.
const PAIR_CROSS: [i32; 4] = [2, 3, 1, 2];
/// `σ2 σ3² σ2`.
const CLASP: [i32; 4] = [2, 3, 3, 2];

fn block(letters: &mut Vec<i32>, pattern: &[i32], times: usize) {
    for _ in 0..times {
        letters.extend_from_slice(pattern);
    }
}

/// `(σ2σ3σ1σ2)^a (σ2σ3²σ2)^b σ1^c`, optionally prefixed by `Δ4²`.
fn quotient_word(pair: usize, clasp: usize, tail: i64, twist: bool) -> Result<BraidWord> {
    if tail < 0 {
        return invalid(format!("final σ1 exponent {tail} is negative"));
    }
    let mut letters = Vec::new();
    if twist {
        letters.extend_from_slice(full_twist(4)?.letters());
    }
    block(&mut letters, &PAIR_CROSS, pair);
    block(&mut letters, &CLASP, clasp);
    letters.extend(std::iter::repeat(1).take(tail as usize));
    BraidWord::new(4, letters)
}

fn check_odd_at_least_3(name: &str, v: i64) -> Result<()> {
    if v < 3 || v % 2 == 0 {
        return invalid(format!("{name} must be an odd integer >= 3, got {v}"));
    }
    Ok(())
}

/// `β_o(p,q,r) = (σ2σ3σ1σ2)^q (σ2σ3²σ2)^p σ1^{2p+2q+r}`.
pub fn quotient_braid_odd(p: i64, q: i64, r: i64) -> Result<BraidWord> {
    check_odd_at_least_3("p", p)?;
    check_odd_at_least_3("q", q)?;
    quotient_word(q as usize, p as usize, 2 * p + 2 * q + r, false)
}

/// The full-twist form `Δ4² (σ2σ3σ1σ2)^{q-2} (σ2σ3²σ2)^p σ1^{2p+2q+r-4}`.
pub fn quotient_braid_odd_rewritten(p: i64, q: i64, r: i64) -> Result<BraidWord> {
    check_odd_at_least_3("p", p)?;
    check_odd_at_least_3("q", q)?;
    quotient_word((q - 2) as usize, p as usize, 2 * p + 2 * q + r - 4, true)
}

/// `β_e(n,q,r) = (σ2σ3σ1σ2)^q (σ2σ3²σ2)^{2n} σ1^{2(2n-q)+r}`.
pub fn quotient_braid_even(n: i64, q: i64, r: i64) -> Result<BraidWord> {
    if n < 1 {
        return invalid(format!("n must be >= 1, got {n}"));
    }
    check_odd_at_least_3("q", q)?;
    quotient_word(q as usize, (2 * n) as usize, 2 * (2 * n - q) + r, false)
}

/// `Δ4² (σ2σ3σ1σ2)^{q-2} (σ2σ3²σ2)^{2n} σ1^{2(2n-q)+r-4}`.
pub fn quotient_braid_even_rewritten(n: i64, q: i64, r: i64) -> Result<BraidWord> {
    if n < 1 {
        return invalid(format!("n must be >= 1, got {n}"));
    }
    check_odd_at_least_3("q", q)?;
    quotient_word((q - 2) as usize, (2 * n) as usize, 2 * (2 * n - q) + r - 4, true)
}

/// The #-move partner of `β_o(p,q,r)`: two fewer pair crossings.
///
/// `(σ2σ3σ1σ2)²` is pure, so dropping it keeps the closure a knot, keeps the
/// four Seifert circles and removes exactly eight positive crossings.
pub fn sharp_partner_odd(p: i64, q: i64, r: i64) -> Result<BraidWord> {
    check_odd_at_least_3("p", p)?;
    check_odd_at_least_3("q", q)?;
    quotient_word((q - 2) as usize, p as usize, 2 * p + 2 * q + r, false)
}

/// The #-move partner of `β_e(n,q,r)`.
pub fn sharp_partner_even(n: i64, q: i64, r: i64) -> Result<BraidWord> {
    if n < 1 {
        return invalid(format!("n must be >= 1, got {n}"));
    }
    check_odd_at_least_3("q", q)?;
    quotient_word((q - 2) as usize, (2 * n) as usize, 2 * (2 * n - q) + r, false)
}

/// `σ1⁴σ3²`. Conjugating a quotient braid by it gives its full-twist form:
/// `c · β · c⁻¹ = Δ4² ⋯`. The two words have the same closure but are not
/// equal in `B_4`.
pub fn quotient_conjugator() -> BraidWord {
    BraidWord { strands: 4, letters: vec![1, 1, 1, 1, 3, 3] }
}

/// `(σ1σ2⋯σ_{a-1})^b` on `a` strands.
pub fn torus_braid(a: usize, b: usize) -> Result<BraidWord> {
    if a < 2 || b < 1 {
        return invalid(format!("torus braid needs a >= 2 and b >= 1, got ({a}, {b})"));
    }
    let row: Vec<i32> = (1..a as i32).collect();
    BraidWord::new(a, row.repeat(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braids_equal, contains_full_twist, permutation_of};

    #[test]
    fn odd_family_shape() {
        let w = quotient_braid_odd(3, 3, -7).unwrap();
        assert_eq!(w.len(), 29);
        assert!(w.is_positive());
        assert_eq!(w.strands(), 4);
        // Δ4² does not divide the word itself, only a conjugate of it
        assert!(!contains_full_twist(&w).unwrap());
        let c = quotient_conjugator();
        let conj = c.concat(&w).unwrap().concat(&c.inverse()).unwrap();
        let rewritten = quotient_braid_odd_rewritten(3, 3, -7).unwrap();
        assert!(braids_equal(&conj, &rewritten).unwrap());
        assert!(contains_full_twist(&rewritten).unwrap());
        assert_eq!(permutation_of(&quotient_braid_odd(3, 3, 1).unwrap()).cycle_count(), 1);
        assert!(quotient_braid_odd(3, 3, -13).is_err());
        assert!(quotient_braid_odd(4, 3, 1).is_err());
    }

    #[test]
    fn even_family_shape() {
        let w = quotient_braid_even(1, 3, 13).unwrap();
        assert_eq!(w.len(), 31);
        let c = quotient_conjugator();
        let conj = c.concat(&w).unwrap().concat(&c.inverse()).unwrap();
        let rewritten = quotient_braid_even_rewritten(1, 3, 13).unwrap();
        assert!(braids_equal(&conj, &rewritten).unwrap());
        assert!(contains_full_twist(&rewritten).unwrap());
        for q in [3, 5, 7] {
            for r in [4 * q - 1, 4 * q + 1] {
                let w = quotient_braid_even(2, q, r).unwrap();
                assert_eq!(permutation_of(&w).cycle_count(), 1);
            }
        }
        assert!(quotient_braid_even(1, 3, -100).is_err());
    }

    #[test]
    fn sharp_partner_drops_eight_letters() {
        let w = quotient_braid_odd(5, 3, 3).unwrap();
        let w2 = sharp_partner_odd(5, 3, 3).unwrap();
        assert_eq!(w.len(), w2.len() + 8);
        assert_eq!(permutation_of(&w), permutation_of(&w2));
    }

    #[test]
    fn torus_braids() {
        assert_eq!(torus_braid(2, 3).unwrap().letters(), &[1, 1, 1]);
        assert_eq!(torus_braid(4, 1).unwrap().letters(), &[1, 2, 3]);
        assert!(torus_braid(1, 3).is_err());
    }
}
