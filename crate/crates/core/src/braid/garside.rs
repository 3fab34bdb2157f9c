//! Left-greedy Garside normal form in the classical Garside structure of
//! `B_n`, whose simple elements are the positive permutation braids.
//!
//! A permutation `π` stands for the positive braid read off any reduced word
//! `s_{i1}⋯s_{ik}` of `π = s_{i1} ∘ ⋯ ∘ s_{ik}`. With that convention a
//! product of simple elements is simple exactly when lengths add, the right
//! descent set of `π` is `{i : π(i) > π(i+1)}` and the left descent set is
//! the right descent set of `π⁻¹`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BraidWord, Permutation};
use crate::error::{invalid, Error, Result};

/// A positive permutation braid (a simple element of the Garside structure).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PermutationBraid(pub Permutation);

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        PermutationBraid(Permutation::identity(n))
    }

    /// The half twist `Δ_n`, i.e. the longest permutation.
    pub fn delta(n: usize) -> Self {
        PermutationBraid(Permutation((0..n).rev().collect()))
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.0 .0.iter().enumerate().all(|(i, &v)| v == n - 1 - i)
    }

    /// Number of crossings (inversions).
    pub fn length(&self) -> usize {
        let p = &self.0 .0;
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    fn in_right_descent(&self, i: usize) -> bool {
        self.0 .0[i] > self.0 .0[i + 1]
    }

    fn in_left_descent(&self, i: usize) -> bool {
        let p = &self.0 .0;
        let a = p.iter().position(|&v| v == i).unwrap();
        let b = p.iter().position(|&v| v == i + 1).unwrap();
        a > b
    }

    /// `self · s_i`: swap entries at positions `i`, `i+1`.
    fn times_gen(&mut self, i: usize) {
        self.0 .0.swap(i, i + 1);
    }

    /// `s_i · self`: swap values `i`, `i+1`.
    fn gen_times(&mut self, i: usize) {
        for v in self.0 .0.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n-i}`.
    fn flip(&self) -> Self {
        let n = self.strands();
        PermutationBraid(Permutation(
            (0..n).map(|j| n - 1 - self.0 .0[n - 1 - j]).collect(),
        ))
    }

    /// A positive reduced word (1-based letters) for this factor.
    pub fn to_letters(&self) -> Vec<i32> {
        // bubble sort the one-line notation; each adjacent swap peels a
        // right descent, giving the word right-to-left
        let mut p = self.0 .0.clone();
        let mut rev = Vec::new();
        loop {
            match (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
                Some(i) => {
                    p.swap(i, i + 1);
                    rev.push(i as i32 + 1);
                }
                None => break,
            }
        }
        rev.reverse();
        rev
    }
}

impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_letters().iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `Δ^infimum · A_1 ⋯ A_l` with every `A_j` a proper simple factor and every
/// adjacent pair left-weighted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<PermutationBraid>,
}

impl GarsideNormalForm {
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    /// A braid word representing this normal form.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = PermutationBraid::delta(n).to_letters();
        let mut letters = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend_from_slice(&delta);
            }
        } else {
            for _ in 0..(-self.infimum) {
                letters.extend(delta.iter().rev().map(|l| -l));
            }
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord { strands: n, letters }
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for a in &self.factors {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

/// Makes the pair `(a, b)` left-weighted in place. Returns whether it changed.
fn left_weight(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let n = a.strands();
    let mut changed = false;
    loop {
        let step = (0..n - 1).find(|&i| b.in_left_descent(i) && !a.in_right_descent(i));
        match step {
            Some(i) => {
                a.times_gen(i);
                b.gen_times(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Left-greedy normal form of `w`.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    if n == 1 {
        return GarsideNormalForm { strands: 1, infimum: 0, factors: Vec::new() };
    }
    let delta = PermutationBraid::delta(n);

    // σ_i⁻¹ = Δ⁻¹ · (Δ s_i); pushing every Δ⁻¹ to the front conjugates each
    // factor once per Δ⁻¹ standing to its right.
    let letters = w.letters();
    let mut infimum = 0i64;
    let mut raw = Vec::with_capacity(letters.len());
    let mut flips_to_right = 0usize;
    for &l in letters.iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let mut f = if l > 0 {
            let mut f = PermutationBraid::identity(n);
            f.times_gen(i);
            f
        } else {
            let mut f = delta.clone();
            f.times_gen(i);
            f
        };
        if flips_to_right % 2 == 1 {
            f = f.flip();
        }
        raw.push(f);
        if l < 0 {
            flips_to_right += 1;
            infimum -= 1;
        }
    }
    raw.reverse();

    let mut factors: Vec<PermutationBraid> = Vec::with_capacity(raw.len());
    for f in raw {
        factors.push(f);
        let mut j = factors.len() - 1;
        while j > 0 {
            let (left, right) = factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
    }
    // Thurston's lemma says one backward sweep per insertion suffices; sweep
    // again until stable to be safe against a broken invariant.
    loop {
        let mut changed = false;
        for j in 1..factors.len() {
            let (left, right) = factors.split_at_mut(j);
            changed |= left_weight(&mut left[j - 1], &mut right[0]);
        }
        if !changed {
            break;
        }
    }

    let leading = factors.iter().take_while(|f| f.is_delta()).count();
    infimum += leading as i64;
    let factors: Vec<_> = factors
        .into_iter()
        .skip(leading)
        .filter(|f| !f.is_identity())
        .collect();
    GarsideNormalForm { strands: n, infimum, factors }
}

/// Word problem in `B_n`.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    Ok(normal_form(a) == normal_form(b))
}

/// For a positive word: whether `Δ_n²` divides it, i.e. infimum ≥ 2.
pub fn contains_full_twist(w: &BraidWord) -> Result<bool> {
    if !w.is_positive() {
        return invalid("full-twist criterion is only defined for positive braid words");
    }
    if w.strands() < 2 {
        return Ok(false);
    }
    Ok(normal_form(w).infimum >= 2)
}
