//! The relative index `i(F, Q) = χ(F) - a(F, Q)/2` of a surface against boundary patches.
//!
//! Indices are half-integers and are handled doubled, as `2χ - a`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Name of a patch of the boundary sphere or string tubes, such as `P+` or `U-`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PatchLabel(pub String);

impl PatchLabel {
    pub fn new(name: impl Into<String>) -> Self {
        PatchLabel(name.into())
    }
}

impl From<&str> for PatchLabel {
    fn from(s: &str) -> Self {
        PatchLabel::new(s)
    }
}

/// Euler characteristic and the number of arcs and circles in which the surface meets each patch.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SurfacePiece {
    pub euler_char: i64,
    #[serde(default)]
    pub arc_counts: BTreeMap<PatchLabel, u64>,
    #[serde(default)]
    pub circle_counts: BTreeMap<PatchLabel, u64>,
}

impl SurfacePiece {
    pub fn new(euler_char: i64) -> Self {
        SurfacePiece { euler_char, ..Default::default() }
    }

    pub fn with_arcs(mut self, patch: impl Into<PatchLabel>, arcs: u64) -> Self {
        *self.arc_counts.entry(patch.into()).or_insert(0) += arcs;
        self
    }

    pub fn arcs(&self, patch: &PatchLabel) -> u64 {
        self.arc_counts.get(patch).copied().unwrap_or(0)
    }

    /// Disjoint union: all counters add.
    pub fn disjoint_union(&self, other: &SurfacePiece) -> SurfacePiece {
        let mut out = self.clone();
        out.euler_char += other.euler_char;
        for (p, &a) in &other.arc_counts {
            *out.arc_counts.entry(p.clone()).or_insert(0) += a;
        }
        for (p, &c) in &other.circle_counts {
            *out.circle_counts.entry(p.clone()).or_insert(0) += c;
        }
        out
    }
}

/// `2 i(F, Q) = 2χ(F) - a(F, Q)`, with `Q` the union of `patches`.
pub fn index(piece: &SurfacePiece, patches: &BTreeSet<PatchLabel>) -> i64 {
    2 * piece.euler_char - patches.iter().map(|p| piece.arcs(p) as i64).sum::<i64>()
}

/// `i(F, Q)` as an exact rational.
pub fn index_value(piece: &SurfacePiece, patches: &BTreeSet<PatchLabel>) -> Ratio<i64> {
    Ratio::new(index(piece, patches), 2)
}

/// The two copies of `q_prime` left on a piece after cutting along it.
pub fn cut_copies(q_prime: &PatchLabel) -> (PatchLabel, PatchLabel) {
    (PatchLabel(format!("{}_1", q_prime.0)), PatchLabel(format!("{}_2", q_prime.0)))
}

/// Cuts along a surface `Q'` disjoint from the reference patches, meeting the piece in
/// `k` arcs and `c` circles.
///
/// Each arc raises `χ` by one and leaves one arc on each copy of `Q'`; circles
/// are recorded on both copies and change nothing else.
pub fn cut_along(piece: &SurfacePiece, q_prime: &PatchLabel, k: u64, c: u64) -> SurfacePiece {
    let (q1, q2) = cut_copies(q_prime);
    let mut out = piece.clone();
    out.euler_char += k as i64;
    for q in [q1, q2] {
        *out.arc_counts.entry(q.clone()).or_insert(0) += k;
        if c > 0 {
            *out.circle_counts.entry(q).or_insert(0) += c;
        }
    }
    out
}

/// `2 i(F, Q) = 2 i(F1, Q1) + 2 i(F2, Q2)`.
pub fn additivity_check(
    whole: &SurfacePiece,
    part1: &SurfacePiece,
    part2: &SurfacePiece,
    q: &BTreeSet<PatchLabel>,
    q1: &BTreeSet<PatchLabel>,
    q2: &BTreeSet<PatchLabel>,
) -> bool {
    index(whole, q) == index(part1, q1) + index(part2, q2)
}

/// A graph on a closed torus whose vertices are disks of valence four.
///
/// Each face records its Euler characteristic and, under the patch `U`, the
/// number of its corners that lie on `U`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FatGraph {
    pub vertex_count: usize,
    pub arc_edges: Vec<(usize, usize)>,
    pub circle_edge_count: usize,
    pub faces: Vec<SurfacePiece>,
}

impl FatGraph {
    pub fn u_patch() -> PatchLabel {
        PatchLabel::new("U")
    }

    pub fn disjoint_union(&self, other: &FatGraph) -> FatGraph {
        let shift = self.vertex_count;
        let mut out = self.clone();
        out.vertex_count += other.vertex_count;
        out.arc_edges.extend(other.arc_edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        out.circle_edge_count += other.circle_edge_count;
        out.faces.extend(other.faces.iter().cloned());
        out
    }
}

/// `Σ 2 i(F_j, U)` over the faces, which is zero whenever the graph is a
/// valence-4 graph on a torus with two `U` corners per vertex.
pub fn fat_graph_index_sum(g: &FatGraph) -> Result<i64> {
    let v = g.vertex_count as i64;
    let mut valence = vec![0usize; g.vertex_count];
    for &(a, b) in &g.arc_edges {
        if a >= g.vertex_count || b >= g.vertex_count {
            return Err(Error::Contract(format!("edge ({a}, {b}) names a missing vertex")));
        }
        valence[a] += 1;
        valence[b] += 1;
    }
    if let Some((i, d)) = valence.iter().enumerate().find(|(_, &d)| d != 4) {
        return Err(Error::Contract(format!("valence: vertex {i} has valence {d}, not 4")));
    }
    let e = g.arc_edges.len() as i64;
    if e != 2 * v {
        return Err(Error::Contract(format!("edge count: E = {e} but 2V = {}", 2 * v)));
    }
    let u = FatGraph::u_patch();
    let corners: i64 = g.faces.iter().map(|f| f.arcs(&u) as i64).sum();
    if corners != 2 * v {
        return Err(Error::Contract(format!("corner count: C = {corners} but 2V = {}", 2 * v)));
    }
    let chi: i64 = g.faces.iter().map(|f| f.euler_char).sum();
    if v - e + chi != 0 {
        return Err(Error::Contract(format!("Euler characteristic: V - E + Σχ = {} on a torus", v - e + chi)));
    }
    let patches = BTreeSet::from([u]);
    Ok(g.faces.iter().map(|f| index(f, &patches)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> BTreeSet<PatchLabel> {
        BTreeSet::from([PatchLabel::new("Q")])
    }

    #[test]
    fn index_examples() {
        assert_eq!(index(&SurfacePiece::new(1).with_arcs("Q", 2), &q()), 0);
        assert_eq!(index(&SurfacePiece::new(0), &q()), 0);
        let half = SurfacePiece::new(1).with_arcs("Q", 1);
        assert_eq!(index(&half, &q()), 1);
        assert_eq!(index_value(&half, &q()), Ratio::new(1, 2));
    }

    #[test]
    fn cutting_keeps_index() {
        let qp = PatchLabel::new("Q'");
        let (q1, q2) = cut_copies(&qp);
        let enlarged: BTreeSet<_> = [PatchLabel::new("Q"), q1, q2].into();
        let annulus = SurfacePiece::new(0);
        let cut = cut_along(&annulus, &qp, 3, 0);
        assert_eq!(cut.euler_char, 3);
        assert_eq!(cut.arc_counts.values().sum::<u64>(), 6);
        assert_eq!(index(&cut, &enlarged), 0);
        let disk = SurfacePiece::new(1).with_arcs("Q", 2);
        assert_eq!(index(&cut_along(&disk, &qp, 1, 0), &enlarged), 0);
        let circles = cut_along(&disk, &qp, 0, 5);
        assert_eq!(circles.euler_char, 1);
        assert_eq!(index(&circles, &enlarged), index(&disk, &q()));
    }

    #[test]
    fn additivity() {
        let whole = SurfacePiece::new(1).with_arcs("Q", 2);
        let p1 = SurfacePiece::new(1).with_arcs("Q", 1);
        let p2 = SurfacePiece::new(1).with_arcs("Q", 1).with_arcs("Q'", 2);
        let q2: BTreeSet<_> = [PatchLabel::new("Q"), PatchLabel::new("Q'")].into();
        assert_eq!(index(&p2, &q2), -1);
        assert!(additivity_check(&whole, &p1, &p2, &q(), &q(), &q2));
        assert!(additivity_check(&whole, &whole, &SurfacePiece::new(0), &q(), &q(), &q()));
        let corrupted = p1.clone().with_arcs("Q", 1);
        assert!(!additivity_check(&whole, &corrupted, &p2, &q(), &q(), &q2));
    }

    fn one_vertex_torus() -> FatGraph {
        // Two loops at one vertex cut the torus into a single square.
        FatGraph {
            vertex_count: 1,
            arc_edges: vec![(0, 0), (0, 0)],
            circle_edge_count: 0,
            faces: vec![SurfacePiece::new(1).with_arcs("U", 2)],
        }
    }

    #[test]
    fn fat_graph_identity() {
        let g = one_vertex_torus();
        assert_eq!(fat_graph_index_sum(&g).unwrap(), 0);
        assert_eq!(fat_graph_index_sum(&g.disjoint_union(&g)).unwrap(), 0);
        let circles = FatGraph { circle_edge_count: 2, faces: vec![SurfacePiece::new(0); 2], ..Default::default() };
        assert_eq!(fat_graph_index_sum(&circles).unwrap(), 0);
    }

    #[test]
    fn fat_graph_contract_errors() {
        let mut g = one_vertex_torus();
        g.arc_edges.pop();
        let err = fat_graph_index_sum(&g).unwrap_err();
        assert!(matches!(&err, Error::Contract(m) if m.starts_with("valence")));
        let mut g = one_vertex_torus();
        g.faces[0] = SurfacePiece::new(1).with_arcs("U", 3);
        assert!(matches!(fat_graph_index_sum(&g), Err(Error::Contract(m)) if m.starts_with("corner")));
        let mut g = one_vertex_torus();
        g.faces.push(SurfacePiece::new(1));
        assert!(matches!(fat_graph_index_sum(&g), Err(Error::Contract(m)) if m.starts_with("Euler")));
    }
}
