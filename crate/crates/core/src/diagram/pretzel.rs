//! Standard pretzel diagrams `P(a_1, .., a_l)`.
//!
//! Twist regions sit side by side; region `i` is a vertical column of
//! `|a_i|` crossings. Neighbouring columns are joined by an arc at the top
//! and one at the bottom, the outermost pair by arcs around the outside.
//! With the sign convention used here `P(-1,-1,-1)` is the right-handed
//! trefoil.

use std::collections::HashMap;

use super::{ArcId, Crossing, LinkDiagram};
use crate::error::{Error, Result};

/// A crossing before orientation: arcs counterclockwise, and whether the
/// strand through slots 1 and 3 is the over-strand.
struct RawCrossing {
    slots: [ArcId; 4],
    over_13: bool,
}

pub fn pretzel_diagram(tangles: &[i64]) -> Result<LinkDiagram> {
    if tangles.is_empty() {
        return Err(Error::InvalidArgument("pretzel needs at least one tangle".into()));
    }
    if let Some(i) = tangles.iter().position(|&a| a == 0) {
        return Err(Error::Unsupported(format!(
            "tangle {} is 1/0; zero twist regions are not supported",
            i + 1
        )));
    }
    let l = tangles.len();
    // top arc i joins column i to column i+1; bottom arcs likewise
    let top = |i: usize| i as ArcId;
    let bottom = |i: usize| (l + i) as ArcId;
    let mut next = 2 * l as ArcId;
    let mut raw = Vec::new();
    for (i, &a) in tangles.iter().enumerate() {
        let m = a.unsigned_abs() as usize;
        let prev = (i + l - 1) % l;
        let (mut tl, mut tr) = (top(prev), top(i));
        for j in 0..m {
            let (bl, br) = if j + 1 == m {
                (bottom(prev), bottom(i))
            } else {
                let pair = (next, next + 1);
                next += 2;
                pair
            };
            raw.push(RawCrossing { slots: [tl, bl, br, tr], over_13: a > 0 });
            tl = bl;
            tr = br;
        }
    }
    orient(&raw)
}

/// Orients every component by walking through crossings and rotates each
/// crossing so that its first slot is the incoming under-arc.
fn orient(raw: &[RawCrossing]) -> Result<LinkDiagram> {
    let mut ends: HashMap<ArcId, Vec<(usize, usize)>> = HashMap::new();
    for (x, c) in raw.iter().enumerate() {
        for (k, &a) in c.slots.iter().enumerate() {
            ends.entry(a).or_default().push((x, k));
        }
    }
    if let Some((a, _)) = ends.iter().find(|(_, v)| v.len() != 2) {
        return Err(Error::Internal(format!("arc {a} does not have two ends")));
    }
    let other_end = |arc: ArcId, here: (usize, usize)| -> (usize, usize) {
        let v = &ends[&arc];
        if v[0] == here {
            v[1]
        } else {
            v[0]
        }
    };

    // incoming slot for each strand (slot parity) of each crossing
    let mut entry: Vec<[Option<usize>; 2]> = vec![[None, None]; raw.len()];
    for start in 0..raw.len() {
        for parity in 0..2 {
            if entry[start][parity].is_some() {
                continue;
            }
            let (mut x, mut k) = (start, parity);
            while entry[x][k % 2].is_none() {
                entry[x][k % 2] = Some(k);
                let out = (k + 2) % 4;
                let (y, j) = other_end(raw[x].slots[out], (x, out));
                x = y;
                k = j;
            }
        }
    }

    let crossings = raw
        .iter()
        .zip(&entry)
        .map(|(c, e)| {
            let (under, over) = if c.over_13 { (0, 1) } else { (1, 0) };
            let u = e[under].unwrap();
            let o = e[over].unwrap();
            let arcs = [0, 1, 2, 3].map(|m| c.slots[(u + m) % 4]);
            let sign = if (o + 4 - u) % 4 == 3 { 1 } else { -1 };
            Crossing { arcs, sign }
        })
        .collect();
    Ok(LinkDiagram::new(crossings, 0)?.canonical_labels())
}
