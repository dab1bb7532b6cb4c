use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::diagram::compile_net;
use super::endpoint::{EndpointLabel, Pairing};
use super::expr::TangleExpr;
use super::net::{MarkerPass, Net};
use crate::diagram::{OrientedDiagram, PDCode};
use crate::error::{Error, Result};
use crate::slope::Slope;

/// Identification of the boundary of one tangle with the boundary of another,
/// restricted to the four endpoints: a symmetry of the square.
///
/// `reverses_orientation` is set when the map reverses the cyclic order of
/// the corners, i.e. it is a reflection of the square rather than a rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GluingRepr", into = "GluingRepr")]
pub struct GluingMap {
    image: [EndpointLabel; 4],
    reverses_orientation: bool,
}

#[derive(Serialize, Deserialize)]
struct GluingRepr {
    permutation: BTreeMap<EndpointLabel, EndpointLabel>,
    reverses_orientation: bool,
}

impl TryFrom<GluingRepr> for GluingMap {
    type Error = Error;
    fn try_from(r: GluingRepr) -> Result<Self> {
        let g = GluingMap::from_map(&r.permutation)?;
        if g.reverses_orientation != r.reverses_orientation {
            return Err(Error::Malformed("reverses_orientation disagrees with the permutation".into()));
        }
        Ok(g)
    }
}

impl From<GluingMap> for GluingRepr {
    fn from(g: GluingMap) -> Self {
        GluingRepr { permutation: g.permutation(), reverses_orientation: g.reverses_orientation }
    }
}

const CYCLE: [EndpointLabel; 4] = [EndpointLabel::NW, EndpointLabel::NE, EndpointLabel::SE, EndpointLabel::SW];

fn cyclic_position(l: EndpointLabel) -> usize {
    CYCLE.iter().position(|&c| c == l).unwrap()
}

impl GluingMap {
    fn from_fn(f: impl Fn(EndpointLabel) -> EndpointLabel) -> Self {
        let image = EndpointLabel::ALL.map(&f);
        // Adjacent corners NW, NE go one step backwards around the cycle under a reflection.
        let (a, b) = (cyclic_position(f(CYCLE[0])), cyclic_position(f(CYCLE[1])));
        GluingMap { image, reverses_orientation: (b + 4 - a) % 4 == 3 }
    }

    /// Accepts only the eight symmetries of the square.
    pub fn from_map(map: &BTreeMap<EndpointLabel, EndpointLabel>) -> Result<Self> {
        if map.len() != 4 {
            return Err(Error::Malformed("a gluing map must send all four endpoints".into()));
        }
        let g = GluingMap::from_fn(|l| map[&l]);
        if enumerate_gluings().contains(&g) {
            Ok(g)
        } else {
            Err(Error::Malformed(format!("{map:?} is not a symmetry of the four endpoints")))
        }
    }

    pub fn apply(&self, l: EndpointLabel) -> EndpointLabel {
        self.image[l.index()]
    }

    pub fn reverses_orientation(&self) -> bool {
        self.reverses_orientation
    }

    pub fn permutation(&self) -> BTreeMap<EndpointLabel, EndpointLabel> {
        EndpointLabel::ALL.iter().map(|&l| (l, self.apply(l))).collect()
    }

    pub fn inverse(&self) -> Self {
        GluingMap::from_fn(|l| EndpointLabel::ALL.into_iter().find(|&m| self.apply(m) == l).unwrap())
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &GluingMap) -> Self {
        GluingMap::from_fn(|l| self.apply(other.apply(l)))
    }
}

impl std::fmt::Display for GluingMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = EndpointLabel::ALL.iter().map(|&l| format!("{l}→{}", self.apply(l))).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Quarter turn counterclockwise, then reflection in the vertical axis.
pub fn standard_eta() -> GluingMap {
    GluingMap::from_fn(|l| l.rotate_ccw().reflect_y())
}

/// The four rotations followed by the four reflections of the square.
pub fn enumerate_gluings() -> Vec<GluingMap> {
    let rot = |l: EndpointLabel, k: usize| (0..k).fold(l, |l, _| l.rotate_ccw());
    let mut out: Vec<GluingMap> = (0..4).map(|k| GluingMap::from_fn(|l| rot(l, k))).collect();
    out.extend((0..4).map(|k| GluingMap::from_fn(|l| rot(l.reflect_y(), k))));
    out
}

/// A closed diagram made from two tangles, with the leaf bookkeeping needed to
/// read off string orientations inside each side.
#[derive(Debug, Clone)]
pub struct GluedDiagram {
    pub oriented: OrientedDiagram,
    /// Keyed by side (1 or 2), leaf index within that side, and leaf endpoint.
    pub markers: BTreeMap<(u8, usize, EndpointLabel), MarkerPass>,
    pub leaves: [Vec<Slope>; 2],
}

impl GluedDiagram {
    pub fn pd(&self) -> &PDCode {
        self.oriented.pd()
    }
}

/// Joins endpoint `e` of `t1` to endpoint `g(e)` of `t2`.
///
/// `t2` is moved rigidly so that its endpoint `g(e)` lands opposite `e` when
/// placed to the right of `t1`, then the ends are joined by planar arcs.
pub fn glue_diagram(t1: &TangleExpr, t2: &TangleExpr, g: &GluingMap) -> GluedDiagram {
    let left = compile_net(t1, 1);
    let mut right = compile_net(t2, 2);
    // Where each endpoint of t2 has to go: e ↦ reflect_y(g⁻¹(e)).
    let motion = GluingMap::from_fn(|l| g.inverse().apply(l).reflect_y());
    let rot = |l: EndpointLabel, k: usize| (0..k).fold(l, |l, _| l.rotate_ccw());
    let (flip, turns) = (0..4)
        .map(|k| (false, k))
        .chain((0..4).map(|k| (true, k)))
        .find(|&(flip, k)| {
            EndpointLabel::ALL
                .iter()
                .all(|&l| rot(if flip { l.reflect_y() } else { l }, k) == motion.apply(l))
        })
        .expect("motion is a symmetry of the square");
    if flip {
        right.flip_over();
    }
    for _ in 0..turns {
        right.rotate_ccw();
    }
    let out = Net::glue_side_by_side(left, right).export();
    let oriented = OrientedDiagram::with_heads(out.pd, out.head).expect("exported orientation is consistent");
    GluedDiagram { oriented, markers: out.markers, leaves: [t1.leaves(), t2.leaves()] }
}

/// Closed link diagram of `t1 ∪_g t2`.
pub fn glue(t1: &TangleExpr, t2: &TangleExpr, g: &GluingMap) -> PDCode {
    glue_diagram(t1, t2, g).oriented.pd().clone()
}

/// Whether gluing tangles with string pairings `p1`, `p2` along `g` gives a knot:
/// the ends of each string of the first tangle must land on different strings of the second.
pub fn knot_filter(g: &GluingMap, p1: &Pairing, p2: &Pairing) -> bool {
    p1.pairs().iter().all(|&(a, b)| !p2.same_string(g.apply(a), g.apply(b)))
}
