//! Random rewriting of braid words by the defining relations of `B_n`.
//! Used to exercise invariance of normal forms and link invariants.

use rand::Rng;

use super::BraidWord;

/// One relation-preserving rewrite applied at a random spot. The result is
/// equal to `w` in `B_n` (not merely conjugate).
pub fn random_relation_move<R: Rng + ?Sized>(w: &BraidWord, rng: &mut R) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    if n < 2 {
        return w.clone();
    }
    for _ in 0..8 {
        match rng.gen_range(0..4) {
            0 => {
                // insert σ_i^ε σ_i^-ε
                let i = rng.gen_range(1..n as i32);
                let e = if rng.gen_bool(0.5) { i } else { -i };
                let at = rng.gen_range(0..=letters.len());
                letters.splice(at..at, [e, -e]);
                return rebuild(n, letters);
            }
            1 => {
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&k| letters[k] == -letters[k + 1])
                    .collect();
                if let Some(&k) = pick(&spots, rng) {
                    letters.drain(k..k + 2);
                    return rebuild(n, letters);
                }
            }
            2 => {
                // σ_i^ε σ_j^δ = σ_j^δ σ_i^ε for |i - j| ≥ 2
                let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                    .filter(|&k| (letters[k].abs() - letters[k + 1].abs()).abs() >= 2)
                    .collect();
                if let Some(&k) = pick(&spots, rng) {
                    letters.swap(k, k + 1);
                    return rebuild(n, letters);
                }
            }
            _ => {
                // σ_i σ_j σ_i = σ_j σ_i σ_j for |i - j| = 1, all signs equal
                let spots: Vec<usize> = (0..letters.len().saturating_sub(2))
                    .filter(|&k| {
                        let (a, b, c) = (letters[k], letters[k + 1], letters[k + 2]);
                        a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1
                    })
                    .collect();
                if let Some(&k) = pick(&spots, rng) {
                    let (a, b) = (letters[k], letters[k + 1]);
                    letters[k] = b;
                    letters[k + 1] = a;
                    letters[k + 2] = b;
                    return rebuild(n, letters);
                }
            }
        }
    }
    w.clone()
}

/// Applies `moves` random relation moves in sequence.
pub fn random_rewrite<R: Rng + ?Sized>(w: &BraidWord, moves: usize, rng: &mut R) -> BraidWord {
    let mut cur = w.clone();
    for _ in 0..moves {
        cur = random_relation_move(&cur, rng);
    }
    cur
}

/// A uniformly random word of the given length.
pub fn random_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    rebuild(strands, letters)
}

fn pick<'a, T, R: Rng + ?Sized>(v: &'a [T], rng: &mut R) -> Option<&'a T> {
    if v.is_empty() {
        None
    } else {
        Some(&v[rng.gen_range(0..v.len())])
    }
}

fn rebuild(strands: usize, letters: Vec<i32>) -> BraidWord {
    BraidWord { strands, letters }
}
