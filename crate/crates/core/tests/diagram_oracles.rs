use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use knotcert::braid::{parse_braid, permutation_of, rewrite, torus_braid};
use knotcert::diagram::{
    braid_closure, determinant, goeritz_with_shading, parse_pd, pretzel_diagram, signature, Shading,
};

/// Determinant of the reduced signed Laplacian of the Tait graph of
/// `P(a_1, .., a_l)`: two vertices joined by one path per tangle, the path for
/// `a_i` having `|a_i|` edges of sign `sign(a_i)`. Row-reduced over the
/// rationals so it shares no code with the crate's integer elimination.
fn tait_oracle(tangles: &[i64]) -> BigInt {
    // vertex 0 and 1 are the poles; interior path vertices follow
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut next = 2;
    for &a in tangles {
        let m = a.unsigned_abs() as usize;
        let w = a.signum();
        let mut prev = 0;
        for k in 0..m {
            let v = if k + 1 == m { 1 } else { next };
            if k + 1 != m {
                next += 1;
            }
            edges.push((prev, v, w));
            prev = v;
        }
    }
    let n = next;
    let mut lap = vec![vec![BigRational::zero(); n]; n];
    for &(u, v, w) in &edges {
        let w = BigRational::from_integer(w.into());
        lap[u][u] += &w;
        lap[v][v] += &w;
        lap[u][v] -= &w;
        lap[v][u] -= &w;
    }
    // delete vertex 0
    let mut m: Vec<Vec<BigRational>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    let size = m.len();
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            for c in col..size {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer().abs()
}

fn odd_values() -> Vec<i64> {
    (1..=7).step_by(2).flat_map(|v| [v, -v]).collect()
}

#[test]
fn pretzel_determinant_matches_tait_graph() {
    for &a in &odd_values() {
        for &b in &odd_values() {
            for &c in &odd_values() {
                let d = pretzel_diagram(&[a, b, c]).unwrap();
                assert_eq!(d.component_count(), 1, "P({a},{b},{c})");
                let expected = (a * b + b * c + c * a).unsigned_abs();
                assert_eq!(determinant(&d), expected, "P({a},{b},{c})");
                assert_eq!(tait_oracle(&[a, b, c]), BigInt::from(expected), "P({a},{b},{c})");
            }
        }
    }
}

#[test]
fn pretzel_with_more_tangles() {
    for t in [[1i64, 3, 5, 7], [-3, 5, 3, -1], [2, 3, 5, -7]] {
        let d = pretzel_diagram(&t).unwrap();
        assert_eq!(BigInt::from(determinant(&d)), tait_oracle(&t), "{t:?}");
    }
}

#[test]
fn pretzel_trefoil_agrees_with_braid_closure() {
    let p = pretzel_diagram(&[-1, -1, -1]).unwrap();
    let b = braid_closure(&parse_braid("1 1 1", 2).unwrap());
    assert_eq!(signature(&p).unwrap(), -2);
    assert_eq!(signature(&b).unwrap(), -2);
    assert_eq!(p.writhe(), b.writhe());
    assert_eq!(determinant(&p), 3);
    let left = pretzel_diagram(&[1, 1, 1]).unwrap();
    assert_eq!(signature(&left).unwrap(), 2);
}

#[test]
fn known_signatures() {
    // figure-eight, T(2,5), T(3,4)
    let cases = [("1 -2 1 -2", 3, 0), ("1 1 1 1 1", 2, -4), ("1 2 1 2 1 2 1 2", 3, -6)];
    for (w, n, sigma) in cases {
        let d = braid_closure(&parse_braid(w, n).unwrap());
        assert_eq!(signature(&d).unwrap(), sigma, "{w}");
    }
    assert_eq!(determinant(&braid_closure(&parse_braid("1 -2 1 -2", 3).unwrap())), 5);
}

#[test]
fn shading_choice_does_not_change_signature() {
    // odd length: a 4-cycle is an odd permutation
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 40 {
        let w = rewrite::random_word(4, 13, &mut rng);
        let d = braid_closure(&w);
        if d.component_count() != 1 || !d.is_connected() || d.crossing_count() == 0 {
            continue;
        }
        let a = goeritz_with_shading(&d, Shading::FirstCornerBlack).unwrap();
        let b = goeritz_with_shading(&d, Shading::FirstCornerWhite).unwrap();
        let sa = knotcert::linalg::signature(&a.matrix) - a.correction;
        let sb = knotcert::linalg::signature(&b.matrix) - b.correction;
        assert_eq!(sa, sb, "{w}");
        checked += 1;
    }
}

#[test]
fn mirror_flips_signature_and_keeps_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 100 {
        let w = rewrite::random_word(4, 15, &mut rng);
        let d = braid_closure(&w);
        if d.component_count() != 1 {
            continue;
        }
        let m = d.mirror();
        assert_eq!(signature(&m).unwrap(), -signature(&d).unwrap(), "{w}");
        assert_eq!(determinant(&m), determinant(&d), "{w}");
        assert_eq!(determinant(&d) % 2, 1, "knot determinants are odd: {w}");
        checked += 1;
    }
}

#[test]
fn closure_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let w = rewrite::random_word(5, 10, &mut rng);
        let d = braid_closure(&w);
        assert_eq!(d.seifert_circle_count(), 5, "{w}");
        assert_eq!(d.component_count(), permutation_of(&w).cycle_count(), "{w}");
        assert_eq!(d.writhe(), knotcert::braid::exponent_sum(&w), "{w}");
    }
}

#[test]
fn rewriting_preserves_diagram_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let w = torus_braid(3, 4).unwrap();
    let (s0, d0) = (signature(&braid_closure(&w)).unwrap(), determinant(&braid_closure(&w)));
    for _ in 0..30 {
        let w2 = rewrite::random_rewrite(&w, 8, &mut rng);
        let d = braid_closure(&w2);
        assert_eq!(signature(&d).unwrap(), s0);
        assert_eq!(determinant(&d), d0);
    }
}

#[test]
fn pd_round_trip() {
    let d = pretzel_diagram(&[3, -5, 7]).unwrap();
    let back = parse_pd(&d.to_pd_string()).unwrap();
    assert_eq!(signature(&back).unwrap(), signature(&d).unwrap());
    assert_eq!(determinant(&back), determinant(&d));
    assert!(parse_pd("X[1,2,3]").is_err());
}
