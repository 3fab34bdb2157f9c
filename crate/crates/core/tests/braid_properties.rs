use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use knotcert::braid::{
    braids_equal, contains_full_twist, exponent_sum, full_twist, normal_form, parse_braid,
    permutation_of, quotient_braid_even, quotient_braid_even_rewritten, quotient_braid_odd,
    quotient_braid_odd_rewritten, quotient_conjugator, rewrite, BraidWord,
};

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let n = strands as i32;
    prop::collection::vec((1..n, any::<bool>()), 0..max_len).prop_map(move |v| {
        let letters = v.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
        BraidWord::new(strands, letters).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_survives_rewriting(w in word(4, 14), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w2 = rewrite::random_rewrite(&w, 10, &mut rng);
        prop_assert_eq!(normal_form(&w), normal_form(&w2));
        prop_assert_eq!(exponent_sum(&w), exponent_sum(&w2));
    }

    #[test]
    fn normal_form_is_idempotent(w in word(5, 16)) {
        let nf = normal_form(&w);
        prop_assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word(5, 10), v in word(5, 10)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(permutation_of(&uv), permutation_of(&u).compose(&permutation_of(&v)));
    }

    #[test]
    fn full_twist_is_central(w in word(4, 12)) {
        let t = full_twist(4).unwrap();
        prop_assert!(braids_equal(&t.concat(&w).unwrap(), &w.concat(&t).unwrap()).unwrap());
    }

    #[test]
    fn exponent_sum_is_conjugation_invariant(w in word(4, 10), c in word(4, 6)) {
        let conj = c.concat(&w).unwrap().concat(&c.inverse()).unwrap();
        prop_assert_eq!(exponent_sum(&conj), exponent_sum(&w));
    }

    #[test]
    fn inverse_cancels(w in word(4, 12)) {
        let id = BraidWord::identity(4).unwrap();
        prop_assert!(braids_equal(&w.concat(&w.inverse()).unwrap(), &id).unwrap());
    }
}

#[test]
fn braid_relation_examples() {
    let a = parse_braid("1 2 1", 3).unwrap();
    let b = parse_braid("2 1 2", 3).unwrap();
    assert_eq!(normal_form(&a), normal_form(&b));
    assert!(!braids_equal(&parse_braid("1", 3).unwrap(), &parse_braid("2", 3).unwrap()).unwrap());
    let nf = normal_form(&parse_braid("1 -1", 2).unwrap());
    assert_eq!(nf.infimum, 0);
    assert!(nf.factors.is_empty());
    assert!(braids_equal(&parse_braid("1", 3).unwrap(), &parse_braid("1", 4).unwrap()).is_err());
}

#[test]
fn full_twist_normal_forms() {
    for n in 2..=5 {
        let nf = normal_form(&full_twist(n).unwrap());
        assert_eq!(nf.infimum, 2);
        assert!(nf.factors.is_empty());
    }
    assert!(contains_full_twist(&parse_braid("1 1 1", 2).unwrap()).unwrap());
    assert!(!contains_full_twist(&parse_braid("1", 2).unwrap()).unwrap());
    assert!(contains_full_twist(&parse_braid("1 -1", 2).unwrap()).is_err());
}

/// The quotient braids are not literally equal to their full-twist forms,
/// but conjugating by `σ1⁴σ3²` makes them so.
#[test]
fn quotient_braids_are_conjugate_to_full_twist_forms() {
    let c = quotient_conjugator();
    let conj = |w: &BraidWord| c.concat(w).unwrap().concat(&c.inverse()).unwrap();
    for p in [3, 5] {
        for q in [3, 5] {
            for r in (-7..=7).step_by(2) {
                let w = quotient_braid_odd(p, q, r).unwrap();
                let t = quotient_braid_odd_rewritten(p, q, r).unwrap();
                assert!(!braids_equal(&w, &t).unwrap(), "({p},{q},{r})");
                assert!(braids_equal(&conj(&w), &t).unwrap(), "({p},{q},{r})");
                assert!(contains_full_twist(&t).unwrap());
                assert_eq!(exponent_sum(&w), exponent_sum(&t));
            }
        }
    }
    for n in [1, 2] {
        for q in [3, 5] {
            for r in [4 * q - 1, 4 * q + 1] {
                let w = quotient_braid_even(n, q, r).unwrap();
                let t = quotient_braid_even_rewritten(n, q, r).unwrap();
                assert!(braids_equal(&conj(&w), &t).unwrap(), "({n},{q},{r})");
                assert!(contains_full_twist(&t).unwrap());
            }
        }
    }
}

#[test]
fn quotient_words_contain_no_full_twist_as_written() {
    assert!(!contains_full_twist(&quotient_braid_odd(3, 3, -7).unwrap()).unwrap());
    assert!(!contains_full_twist(&quotient_braid_even(1, 3, 13).unwrap()).unwrap());
}

/// Unreduced Burau matrix at `t = 2` of a positive word. A homomorphism, so
/// differing matrices prove two braids differ without using normal forms.
fn burau_at_two(w: &BraidWord) -> Vec<Vec<i64>> {
    let n = w.strands();
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for &l in w.letters() {
        assert!(l > 0);
        let i = l as usize - 1;
        // right-multiply by the block [[1-t, t], [1, 0]] in rows/cols i, i+1
        for row in m.iter_mut() {
            let (a, b) = (row[i], row[i + 1]);
            row[i] = -a + b;
            row[i + 1] = 2 * a;
        }
    }
    m
}

#[test]
fn burau_confirms_conjugacy_not_equality() {
    let c = quotient_conjugator();
    for (p, q, r) in [(3, 3, -7), (3, 5, 1), (5, 3, 7)] {
        let w = quotient_braid_odd(p, q, r).unwrap();
        let t = quotient_braid_odd_rewritten(p, q, r).unwrap();
        assert_ne!(burau_at_two(&w), burau_at_two(&t));
        assert_eq!(burau_at_two(&c.concat(&w).unwrap()), burau_at_two(&t.concat(&c).unwrap()));
    }
}
