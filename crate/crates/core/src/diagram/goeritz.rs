//! Checkerboard colouring, Goeritz matrix and the Gordon–Litherland
//! signature formula `σ = sign(G) - μ`.
//!
//! Faces are traced from the PD code: the corner of crossing `X` between
//! positions `k` and `k+1` continues, along the arc at position `k+1`, to
//! the corner of the neighbouring crossing that starts at that arc.
//!
//! Conventions, with the black faces forming the spanning surface:
//! * `η(c) = +1` when turning the over-strand counterclockwise sweeps the
//!   black corners (positions 1-2 and 3-0), else `-1`;
//! * `G[i][j] = -Σ η(c)` over crossings meeting white faces `i ≠ j`, rows
//!   summing to zero, with the last white face deleted;
//! * a crossing is of type II when its oriented smoothing joins its two
//!   black corners, and `μ = Σ η(c)` over type II crossings.
//!
//! These fix `σ(right-handed trefoil) = -2` and make the result independent
//! of which colour class is shaded.

use serde::{Deserialize, Serialize};

use super::LinkDiagram;
use crate::error::{Error, Result};
use crate::linalg;

/// Which colour class is shaded (black).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shading {
    /// The face at corner 0 of the first crossing is black.
    FirstCornerBlack,
    /// The face at corner 0 of the first crossing is white.
    FirstCornerWhite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzData {
    /// Face index of each corner, `4 * crossing + position`.
    pub corner_faces: Vec<usize>,
    /// `true` for black faces, indexed by face.
    pub black: Vec<bool>,
    /// Face indices of the white faces, in matrix order.
    pub white_faces: Vec<usize>,
    /// Goeritz matrix over all white faces (rows sum to zero).
    pub full_matrix: Vec<Vec<i64>>,
    /// `full_matrix` with the last white face deleted.
    pub matrix: Vec<Vec<i64>>,
    /// Gordon–Litherland correction `μ`.
    pub correction: i64,
}

impl GoeritzData {
    pub fn face_count(&self) -> usize {
        self.black.len()
    }
}

pub fn goeritz(d: &LinkDiagram) -> Result<GoeritzData> {
    goeritz_with_shading(d, Shading::FirstCornerBlack)
}

pub fn goeritz_with_shading(d: &LinkDiagram, shading: Shading) -> Result<GoeritzData> {
    if !d.is_connected() {
        return Err(Error::Unsupported(
            "Goeritz matrix of a disconnected (split) diagram".into(),
        ));
    }
    let n = d.crossing_count();
    if n == 0 {
        return Ok(GoeritzData {
            corner_faces: Vec::new(),
            black: vec![true, false],
            white_faces: vec![1],
            full_matrix: vec![vec![0]],
            matrix: Vec::new(),
            correction: 0,
        });
    }
    let ends = d.arc_endpoints();
    let crossings = d.crossings();

    // trace faces
    let mut corner_faces = vec![usize::MAX; 4 * n];
    let mut faces = 0;
    for start in 0..4 * n {
        if corner_faces[start] != usize::MAX {
            continue;
        }
        let mut cur = start;
        while corner_faces[cur] == usize::MAX {
            corner_faces[cur] = faces;
            let (x, k) = (cur / 4, cur % 4);
            let pos = (k + 1) % 4;
            let arc = crossings[x].arcs[pos];
            let e = &ends[&arc];
            let (y, j) = if e[0] == (x, pos) { e[1] } else { e[0] };
            cur = 4 * y + j;
        }
        faces += 1;
    }
    if faces != n + 2 {
        return Err(Error::Malformed(format!(
            "PD code is not planar: {faces} faces for {n} crossings"
        )));
    }

    // two-colour the faces; corners k and k+1 of a crossing differ
    let mut colour: Vec<Option<bool>> = vec![None; faces];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); faces];
    for x in 0..n {
        for k in 0..4 {
            let (f, g) = (corner_faces[4 * x + k], corner_faces[4 * x + (k + 1) % 4]);
            adj[f].push(g);
            adj[g].push(f);
        }
    }
    let first = corner_faces[0];
    colour[first] = Some(shading == Shading::FirstCornerBlack);
    let mut stack = vec![first];
    while let Some(f) = stack.pop() {
        let c = colour[f].unwrap();
        for &g in &adj[f] {
            match colour[g] {
                None => {
                    colour[g] = Some(!c);
                    stack.push(g);
                }
                Some(cg) if cg == c => {
                    return Err(Error::Malformed("faces admit no checkerboard colouring".into()))
                }
                Some(_) => {}
            }
        }
    }
    let black: Vec<bool> = colour.into_iter().map(|c| c.unwrap()).collect();

    let white_faces: Vec<usize> = (0..faces).filter(|&f| !black[f]).collect();
    let mut white_index = vec![usize::MAX; faces];
    for (i, &f) in white_faces.iter().enumerate() {
        white_index[f] = i;
    }
    let w = white_faces.len();
    let mut full = vec![vec![0i64; w]; w];
    let mut correction = 0i64;
    for (x, c) in crossings.iter().enumerate() {
        let odd_black = black[corner_faces[4 * x + 1]];
        let eta: i64 = if odd_black { 1 } else { -1 };
        // positive crossings smooth 0-1 | 3-2 and merge corners 1 and 3
        let merges_odd = c.sign > 0;
        if merges_odd == odd_black {
            correction += eta;
        }
        let white_corners = if odd_black { [0, 2] } else { [1, 3] };
        let f1 = white_index[corner_faces[4 * x + white_corners[0]]];
        let f2 = white_index[corner_faces[4 * x + white_corners[1]]];
        if f1 != f2 {
            full[f1][f2] -= eta;
            full[f2][f1] -= eta;
            full[f1][f1] += eta;
            full[f2][f2] += eta;
        }
    }
    let matrix: Vec<Vec<i64>> = full[..w - 1].iter().map(|row| row[..w - 1].to_vec()).collect();
    Ok(GoeritzData { corner_faces, black, white_faces, full_matrix: full, matrix, correction })
}

/// Knot signature, normalised so the right-handed trefoil has `σ = -2`.
pub fn signature(d: &LinkDiagram) -> Result<i64> {
    if d.component_count() != 1 {
        return Err(Error::Unsupported(format!(
            "signature is only computed for knots; diagram has {} components",
            d.component_count()
        )));
    }
    let g = goeritz(d)?;
    Ok(linalg::signature(&g.matrix) - g.correction)
}

/// `|det G|`; zero for split diagrams.
pub fn determinant(d: &LinkDiagram) -> u64 {
    if !d.is_connected() {
        return 0;
    }
    let g = goeritz(d).expect("connected diagrams always have a Goeritz matrix");
    let det = linalg::determinant(&g.matrix);
    u64::try_from(det.magnitude()).expect("determinant fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_braid, torus_braid};
    use crate::diagram::{braid_closure, parse_pd};

    fn closure(s: &str, n: usize) -> LinkDiagram {
        braid_closure(&parse_braid(s, n).unwrap())
    }

    #[test]
    fn trefoil_calibration() {
        let d = closure("1 1 1", 2);
        let g = goeritz(&d).unwrap();
        assert_eq!(g.face_count(), 5);
        assert_eq!(g.matrix.len(), 2);
        assert_eq!(linalg::determinant(&g.matrix).magnitude().to_string(), "3");
        assert_eq!(signature(&d).unwrap(), -2);
        assert_eq!(signature(&d.mirror()).unwrap(), 2);
        assert_eq!(determinant(&d), 3);
    }

    #[test]
    fn row_sums_vanish() {
        let d = closure("1 -2 1 -2 3 2 -3", 4);
        for shading in [Shading::FirstCornerBlack, Shading::FirstCornerWhite] {
            let g = goeritz_with_shading(&d, shading).unwrap();
            for row in &g.full_matrix {
                assert_eq!(row.iter().sum::<i64>(), 0);
            }
        }
    }

    #[test]
    fn both_shadings_agree() {
        for (s, n) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("1 1 1 1 1", 2), ("1 2 1 2 1 2 1 2", 3)] {
            let d = closure(s, n);
            let mut sigs = Vec::new();
            for shading in [Shading::FirstCornerBlack, Shading::FirstCornerWhite] {
                let g = goeritz_with_shading(&d, shading).unwrap();
                sigs.push(linalg::signature(&g.matrix) - g.correction);
                assert_eq!(linalg::determinant(&g.matrix).magnitude().to_string(), determinant(&d).to_string());
            }
            assert_eq!(sigs[0], sigs[1], "{s}");
        }
    }

    #[test]
    fn known_small_knots() {
        // figure-eight
        assert_eq!(signature(&closure("1 -2 1 -2", 3)).unwrap(), 0);
        assert_eq!(determinant(&closure("1 -2 1 -2", 3)), 5);
        // T(2,5)
        assert_eq!(signature(&closure("1 1 1 1 1", 2)).unwrap(), -4);
        // T(3,4): σ = -6, det = 3
        let t34 = braid_closure(&torus_braid(3, 4).unwrap());
        assert_eq!(signature(&t34).unwrap(), -6);
        assert_eq!(determinant(&t34), 3);
    }

    #[test]
    fn unknot_diagrams() {
        assert_eq!(signature(&LinkDiagram::unknot()).unwrap(), 0);
        assert_eq!(determinant(&LinkDiagram::unknot()), 1);
        let kink = parse_pd("X 1 1 2 2 +").unwrap();
        assert_eq!(signature(&kink).unwrap(), 0);
        assert_eq!(determinant(&kink), 1);
        assert_eq!(signature(&kink.mirror()).unwrap(), 0);
        let d = closure("1 2 3", 4);
        assert_eq!(signature(&d).unwrap(), 0);
        assert_eq!(determinant(&d), 1);
    }

    #[test]
    fn links_and_split_diagrams() {
        assert!(signature(&closure("1 1", 2)).is_err());
        assert_eq!(determinant(&closure("1 1", 2)), 2);
        assert_eq!(determinant(&closure("1", 3)), 0);
        assert!(goeritz(&closure("1 3", 4)).is_err());
    }
}
