//! Braid words in the Artin braid group `B_n`.
//!
//! A letter `+i` stands for the generator `σ_i`, `-i` for its inverse.
//! Words are kept exactly as written; the only place letters get rewritten is
//! [`normal_form`].

mod families;
mod garside;
pub mod rewrite;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use families::{
    quotient_braid_even, quotient_braid_even_rewritten, quotient_braid_odd,
    quotient_braid_odd_rewritten, quotient_conjugator, sharp_partner_even, sharp_partner_odd, torus_braid,
};
pub use garside::{
    braids_equal, contains_full_twist, normal_form, GarsideNormalForm, PermutationBraid,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return invalid("a braid needs at least one strand");
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::Malformed(format!(
                "letter {bad} is out of range for {strands} strands"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Same letters on more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return invalid(format!("cannot narrow {} strands to {strands}", self.strands));
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Every letter inverted (the mirror braid).
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// `self` repeated `k` times.
    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses whitespace-separated signed generator indices.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return invalid("a braid needs at least one strand");
    }
    let mut letters = Vec::new();
    for (pos, token) in text.split_whitespace().enumerate() {
        let value: i32 = token.parse().map_err(|_| {
            Error::Malformed(format!("token {} ('{token}') is not an integer", pos + 1))
        })?;
        if value == 0 || value.unsigned_abs() as usize >= strands {
            return Err(Error::Malformed(format!(
                "token {} ('{token}') is out of range for {strands} strands",
                pos + 1
            )));
        }
        letters.push(value);
    }
    Ok(BraidWord { strands, letters })
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters.iter().map(|l| l.signum() as i64).sum()
}

/// A permutation of `{0, .., n-1}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// Cycle decomposition, each cycle starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on `1..=n`, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Image under `B_n → S_n`, `σ_i ↦ (i i+1)`; a homomorphism for composition.
pub fn permutation_of(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands);
    for &l in &w.letters {
        // right-multiplying by a transposition swaps positions i-1 and i
        let i = l.unsigned_abs() as usize;
        p.0.swap(i - 1, i);
    }
    p
}

/// A word for the positive full twist `Δ_n²`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return invalid(format!("full twist needs at least 2 strands, got {n}"));
    }
    let half = half_twist(n);
    Ok(half.pow(2))
}

/// `Δ_n = (σ_1⋯σ_{n-1})(σ_1⋯σ_{n-2})⋯(σ_1)`.
pub fn half_twist(n: usize) -> BraidWord {
    let mut letters = Vec::new();
    for top in (1..n).rev() {
        letters.extend(1..=top as i32);
    }
    BraidWord { strands: n.max(1), letters }
}
