//! Oriented planar link diagrams stored as PD codes.
//!
//! Each crossing lists its four arcs counterclockwise, starting from the
//! incoming under-arc. The crossing is positive when the over-strand runs from
//! position 3 to position 1, negative when it runs from 1 to 3. Unknotted
//! components that meet no crossing are kept as a separate count of free
//! loops so that braid closures stay faithful to their words.

mod goeritz;
mod pretzel;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub use goeritz::{determinant, goeritz, goeritz_with_shading, signature, GoeritzData, Shading};
pub use pretzel::pretzel_diagram;

pub type ArcId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
    /// +1 or -1.
    pub sign: i8,
}

impl Crossing {
    /// Positions of the incoming arcs (under, over).
    pub fn incoming(&self) -> [usize; 2] {
        if self.sign > 0 {
            [0, 3]
        } else {
            [0, 1]
        }
    }

    /// Positions of the outgoing arcs (under, over).
    pub fn outgoing(&self) -> [usize; 2] {
        if self.sign > 0 {
            [2, 1]
        } else {
            [2, 3]
        }
    }

    /// Position pairs joined by the orientation-respecting smoothing.
    pub fn seifert_pairs(&self) -> [(usize, usize); 2] {
        if self.sign > 0 {
            [(0, 1), (3, 2)]
        } else {
            [(0, 3), (1, 2)]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// Minimal union-find over dense indices.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

impl LinkDiagram {
    /// Builds a diagram after checking that every arc occurs exactly twice
    /// and that each arc leaves one crossing and enters another.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let mut ends: HashMap<ArcId, (usize, usize)> = HashMap::new();
        for (x, c) in crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::Malformed(format!("crossing {} has sign {}", x + 1, c.sign)));
            }
            for &p in &c.incoming() {
                ends.entry(c.arcs[p]).or_default().1 += 1;
            }
            for &p in &c.outgoing() {
                ends.entry(c.arcs[p]).or_default().0 += 1;
            }
        }
        for (arc, (outs, ins)) in &ends {
            if outs + ins != 2 {
                return Err(Error::Malformed(format!(
                    "arc {arc} occurs {} times, expected 2",
                    outs + ins
                )));
            }
            if *outs != 1 {
                return Err(Error::Malformed(format!(
                    "arc {arc} is not oriented consistently with the crossing signs"
                )));
            }
        }
        Ok(LinkDiagram { crossings, free_loops })
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        LinkDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Arc ids mapped to dense indices `0..arc_count`.
    pub(crate) fn arc_index(&self) -> BTreeMap<ArcId, usize> {
        let mut ids: Vec<ArcId> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        ids.sort_unstable();
        ids.dedup();
        ids.into_iter().enumerate().map(|(i, a)| (a, i)).collect()
    }

    /// Both endpoints `(crossing, position)` of every arc.
    pub(crate) fn arc_endpoints(&self) -> HashMap<ArcId, Vec<(usize, usize)>> {
        let mut ends: HashMap<ArcId, Vec<(usize, usize)>> = HashMap::new();
        for (x, c) in self.crossings.iter().enumerate() {
            for (p, &a) in c.arcs.iter().enumerate() {
                ends.entry(a).or_default().push((x, p));
            }
        }
        ends
    }

    fn union_arcs(&self, pairs: impl Fn(&Crossing) -> [(usize, usize); 2]) -> (UnionFind, BTreeMap<ArcId, usize>) {
        let index = self.arc_index();
        let mut uf = UnionFind::new(index.len());
        for c in &self.crossings {
            for (p, q) in pairs(c) {
                uf.union(index[&c.arcs[p]], index[&c.arcs[q]]);
            }
        }
        (uf, index)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn component_count(&self) -> usize {
        let (mut uf, _) = self.union_arcs(|_| [(0, 2), (1, 3)]);
        uf.classes() + self.free_loops
    }

    pub fn seifert_circle_count(&self) -> usize {
        let (mut uf, _) = self.union_arcs(|c| c.seifert_pairs());
        uf.classes() + self.free_loops
    }

    /// Component label of each arc; labels are `0..k` in order of first
    /// appearance among sorted arc ids. Free loops are not labelled.
    pub fn arc_components(&self) -> BTreeMap<ArcId, usize> {
        let (mut uf, index) = self.union_arcs(|_| [(0, 2), (1, 3)]);
        let mut label: HashMap<usize, usize> = HashMap::new();
        let mut out = BTreeMap::new();
        for (&arc, &i) in &index {
            let root = uf.find(i);
            let next = label.len();
            out.insert(arc, *label.entry(root).or_insert(next));
        }
        out
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.crossings.iter().all(|c| c.sign < 0)
    }

    /// Whether the underlying projection is a connected planar graph.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops <= 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let ends = self.arc_endpoints();
        let mut uf = UnionFind::new(self.crossings.len());
        for e in ends.values() {
            uf.union(e[0].0, e[1].0);
        }
        uf.classes() == 1
    }

    /// All crossings changed. Positions rotate so that position 0 is again
    /// the incoming under-arc.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.arcs;
                let arcs = if c.sign > 0 { [d, a, b, cc] } else { [b, cc, d, a] };
                Crossing { arcs, sign: -c.sign }
            })
            .collect();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// The diagram of one component, obtained by deleting every other
    /// component. `index` follows [`arc_components`](Self::arc_components).
    pub fn component_sublink(&self, index: usize) -> Result<LinkDiagram> {
        let comp = self.arc_components();
        let ncomp = comp.values().copied().max().map_or(0, |m| m + 1);
        if index >= ncomp {
            return Err(Error::InvalidArgument(format!(
                "component {index} out of range ({ncomp} components meet crossings)"
            )));
        }
        let arc_index = self.arc_index();
        let mut uf = UnionFind::new(arc_index.len());
        let mut kept = Vec::new();
        for c in &self.crossings {
            let under = comp[&c.arcs[0]] == index;
            let over = comp[&c.arcs[1]] == index;
            match (under, over) {
                (true, true) => kept.push(*c),
                (true, false) => uf.union(arc_index[&c.arcs[0]], arc_index[&c.arcs[2]]),
                (false, true) => uf.union(arc_index[&c.arcs[1]], arc_index[&c.arcs[3]]),
                (false, false) => {}
            }
        }
        if kept.is_empty() {
            return Ok(LinkDiagram::unknot());
        }
        let ids: Vec<ArcId> = arc_index.keys().copied().collect();
        let crossings = kept
            .into_iter()
            .map(|c| Crossing {
                arcs: c.arcs.map(|a| ids[uf.find(arc_index[&a])]),
                sign: c.sign,
            })
            .collect();
        LinkDiagram::new(crossings, 0)
    }

    /// Arc ids renumbered `1..=2c` in order of first appearance.
    pub fn canonical_labels(&self) -> LinkDiagram {
        let mut map: HashMap<ArcId, ArcId> = HashMap::new();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let arcs = c.arcs.map(|a| {
                    let next = map.len() as ArcId + 1;
                    *map.entry(a).or_insert(next)
                });
                Crossing { arcs, sign: c.sign }
            })
            .collect();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// PD text: one `X a b c d s` line per crossing, then one `O` line per
    /// free loop.
    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            let s = if c.sign > 0 { '+' } else { '-' };
            let [a, b, cc, d] = c.arcs;
            out.push_str(&format!("X {a} {b} {cc} {d} {s}\n"));
        }
        for _ in 0..self.free_loops {
            out.push_str("O\n");
        }
        out
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Parses PD text (see [`LinkDiagram::to_pd_string`]). Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut crossings = Vec::new();
    let mut free_loops = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let bad = |what: &str| Error::Malformed(format!("line {}: {what}: '{line}'", lineno + 1));
        match toks.as_slice() {
            ["O"] => free_loops += 1,
            ["X", a, b, c, d, s] => {
                let mut arcs = [0 as ArcId; 4];
                for (slot, t) in arcs.iter_mut().zip([a, b, c, d]) {
                    *slot = t.parse().map_err(|_| bad("arc id is not a non-negative integer"))?;
                }
                let sign = match *s {
                    "+" => 1,
                    "-" => -1,
                    _ => return Err(bad("sign must be + or -")),
                };
                crossings.push(Crossing { arcs, sign });
            }
            _ => return Err(bad("expected 'X a b c d s' or 'O'")),
        }
    }
    if crossings.is_empty() && free_loops == 0 {
        return Err(Error::Malformed("empty diagram".into()));
    }
    LinkDiagram::new(crossings, free_loops)
}

/// Closure of a braid drawn top to bottom, strands oriented downward.
/// `σ_i` becomes a positive crossing, `σ_i⁻¹` a negative one.
pub fn braid_closure(w: &BraidWord) -> LinkDiagram {
    let n = w.strands();
    let mut current: Vec<ArcId> = (0..n as ArcId).collect();
    let mut next = n as ArcId;
    let mut crossings = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (current[i], current[i + 1]);
        let (c, d) = (next, next + 1);
        next += 2;
        let arcs = if l > 0 { [a, c, d, b] } else { [b, a, c, d] };
        crossings.push(Crossing { arcs, sign: l.signum() as i8 });
        current[i] = c;
        current[i + 1] = d;
    }
    let mut free_loops = 0;
    let mut rename: HashMap<ArcId, ArcId> = HashMap::new();
    for (j, &arc) in current.iter().enumerate() {
        if arc == j as ArcId {
            free_loops += 1;
        } else {
            rename.insert(arc, j as ArcId);
        }
    }
    for c in crossings.iter_mut() {
        for a in c.arcs.iter_mut() {
            if let Some(&r) = rename.get(a) {
                *a = r;
            }
        }
    }
    LinkDiagram { crossings, free_loops }.canonical_labels()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_braid, quotient_braid_odd};

    fn closure(s: &str, n: usize) -> LinkDiagram {
        braid_closure(&parse_braid(s, n).unwrap())
    }

    #[test]
    fn trefoil_closure() {
        let d = closure("1 1 1", 2);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.seifert_circle_count(), 2);
        assert_eq!(d.writhe(), 3);
        assert!(d.is_positive());
        assert!(d.is_connected());
    }

    #[test]
    fn empty_closure_is_unknot() {
        let d = closure("", 1);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.seifert_circle_count(), 1);
        assert!(d.is_positive());
        let d = closure("1", 3);
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.component_count(), 2);
        assert!(!d.is_connected());
    }

    #[test]
    fn quotient_link_components() {
        let d = braid_closure(&quotient_braid_odd(3, 3, 2).unwrap());
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.seifert_circle_count(), 4);
        assert_eq!(braid_closure(&quotient_braid_odd(3, 3, 1).unwrap()).writhe(), 37);
    }

    #[test]
    fn mirror_flips_signs_and_keeps_validity() {
        let d = closure("1 -2 1 3 -2", 4);
        let m = d.mirror();
        assert_eq!(m.writhe(), -d.writhe());
        assert!(LinkDiagram::new(m.crossings().to_vec(), 0).is_ok());
        assert_eq!(m.mirror(), d);
        assert!(!closure("-1", 2).is_positive());
    }

    #[test]
    fn pd_text_round_trip() {
        let d = closure("1 -2 1 -2", 3);
        let text = d.to_pd_string();
        assert_eq!(parse_pd(&text).unwrap(), d);
        assert_eq!(parse_pd("O\n").unwrap(), LinkDiagram::unknot());
    }

    #[test]
    fn pd_validation() {
        // kinked unknot
        assert!(parse_pd("X 1 1 2 2 +").is_ok());
        assert!(parse_pd("X 1 1 2 2 -").is_err());
        assert!(parse_pd("X 1 2 3 4 +").is_err());
        assert!(parse_pd("X 1 2 3 +").is_err());
        assert!(parse_pd("").is_err());
    }

    #[test]
    fn sublinks() {
        let d = braid_closure(&quotient_braid_odd(3, 3, 2).unwrap());
        let k0 = d.component_sublink(0).unwrap();
        let k1 = d.component_sublink(1).unwrap();
        assert_eq!(k0.component_count(), 1);
        assert_eq!(k1.component_count(), 1);
        assert!(d.component_sublink(2).is_err());
    }
}
