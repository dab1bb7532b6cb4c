//! Mutable strand network used to assemble tangle diagrams before export to PD codes.
//!
//! Crossings keep their four slots in counterclockwise order; a flag records
//! which opposite pair is the under-strand. Plane rotations then only relabel
//! the boundary, and reflections reverse the slot order. Marker nodes sit on
//! the boundary of each rational leaf so the exported diagram can say how the
//! final orientation passes through that leaf.

use std::collections::BTreeMap;

use super::endpoint::EndpointLabel;
use crate::diagram::{ArcId, PDCode, Port};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Node {
    /// `under02`: the under-strand joins slots 0 and 2.
    Crossing { under02: bool },
    /// Slot 0 faces out of the leaf, slot 1 faces in.
    Marker { side: u8, leaf: usize, label: EndpointLabel },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum P {
    Node(usize, u8),
    /// Boundary endpoint; ids 0..4 are the labels of this net, higher ids are scratch.
    End(u8),
}

fn end(l: EndpointLabel) -> P {
    P::End(l.index() as u8)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Net {
    pub nodes: Vec<Node>,
    link: BTreeMap<P, P>,
    pub free_loops: usize,
}

/// How the final orientation crosses one leaf endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MarkerPass {
    /// Arc carrying the strand there, if the strand has any crossings.
    pub arc: Option<ArcId>,
    /// The strand runs into the leaf at this endpoint.
    pub entering: bool,
}

pub(crate) struct Exported {
    pub pd: PDCode,
    pub head: BTreeMap<ArcId, Port>,
    pub markers: BTreeMap<(u8, usize, EndpointLabel), MarkerPass>,
}

impl Net {
    fn connect(&mut self, a: P, b: P) {
        self.link.insert(a, b);
        self.link.insert(b, a);
    }

    fn with_links(pairs: &[(EndpointLabel, EndpointLabel)]) -> Net {
        let mut net = Net { nodes: Vec::new(), link: BTreeMap::new(), free_loops: 0 };
        for &(a, b) in pairs {
            net.connect(end(a), end(b));
        }
        net
    }

    /// Two horizontal arcs.
    pub fn zero() -> Net {
        use EndpointLabel::*;
        Net::with_links(&[(NW, NE), (SW, SE)])
    }

    /// Two vertical arcs.
    pub fn infinity() -> Net {
        use EndpointLabel::*;
        Net::with_links(&[(NW, SW), (NE, SE)])
    }

    /// One crossing; `positive` puts the over-strand on the SW–NE diagonal.
    pub fn crossing(positive: bool) -> Net {
        use EndpointLabel::*;
        let mut net = Net { nodes: vec![Node::Crossing { under02: positive }], link: BTreeMap::new(), free_loops: 0 };
        for (slot, l) in [SE, NE, NW, SW].into_iter().enumerate() {
            net.connect(P::Node(0, slot as u8), end(l));
        }
        net
    }

    /// Joins two boundary points by an arc, removing both from the boundary.
    fn join(&mut self, x: P, y: P) {
        let p = self.link.remove(&x).expect("joined end exists");
        if p == y {
            self.link.remove(&y);
            self.free_loops += 1;
            return;
        }
        let q = self.link.remove(&y).expect("joined end exists");
        self.connect(p, q);
    }

    fn map_ends(&mut self, f: impl Fn(u8) -> u8) {
        self.link = std::mem::take(&mut self.link)
            .into_iter()
            .map(|(a, b)| {
                let g = |p| match p {
                    P::End(e) => P::End(f(e)),
                    other => other,
                };
                (g(a), g(b))
            })
            .collect();
    }

    fn map_slots(&mut self, f: impl Fn(usize, u8) -> u8) {
        let nodes = &self.nodes;
        self.link = std::mem::take(&mut self.link)
            .into_iter()
            .map(|(a, b)| {
                let g = |p| match p {
                    P::Node(n, s) if matches!(nodes[n], Node::Crossing { .. }) => P::Node(n, f(n, s)),
                    other => other,
                };
                (g(a), g(b))
            })
            .collect();
    }

    /// Places `a` and `b` in one net, joins the listed endpoint pairs and
    /// assigns the listed outer labels.
    fn combine(
        a: Net,
        b: Net,
        joins: &[(EndpointLabel, EndpointLabel)],
        outer: &[(EndpointLabel, bool, EndpointLabel)],
    ) -> Net {
        let offset = a.nodes.len();
        let mut out = Net { nodes: a.nodes, link: a.link, free_loops: a.free_loops + b.free_loops };
        out.nodes.extend(b.nodes);
        for (x, y) in b.link {
            let shift = |p| match p {
                P::Node(n, s) => P::Node(n + offset, s),
                P::End(e) => P::End(e + 4),
            };
            out.link.insert(shift(x), shift(y));
        }
        for &(x, y) in joins {
            out.join(end(x), P::End(y.index() as u8 + 4));
        }
        let mut relabel = [u8::MAX; 8];
        for &(new, from_b, old) in outer {
            relabel[old.index() + if from_b { 4 } else { 0 }] = new.index() as u8;
        }
        out.map_ends(|e| relabel[e as usize]);
        out
    }

    /// `a` on the left, `b` on the right.
    pub fn sum(a: Net, b: Net) -> Net {
        use EndpointLabel::*;
        Net::combine(a, b, &[(NE, NW), (SE, SW)], &[(NW, false, NW), (SW, false, SW), (NE, true, NE), (SE, true, SE)])
    }

    /// `a` above `b`.
    pub fn stack(a: Net, b: Net) -> Net {
        use EndpointLabel::*;
        Net::combine(a, b, &[(SW, NW), (SE, NE)], &[(NW, false, NW), (NE, false, NE), (SW, true, SW), (SE, true, SE)])
    }

    /// Closes the four ends with two planar arcs.
    pub fn close(mut self, pairs: [(EndpointLabel, EndpointLabel); 2]) -> Net {
        for (x, y) in pairs {
            self.join(end(x), end(y));
        }
        self
    }

    /// Joins `a` to `b` placed on its right: NE–NW and SE–SW directly, NW–NE over the top, SW–SE underneath.
    pub fn glue_side_by_side(a: Net, b: Net) -> Net {
        use EndpointLabel::*;
        Net::combine(a, b, &[(NE, NW), (SE, SW), (NW, NE), (SW, SE)], &[])
    }

    /// Counterclockwise quarter turn in the plane.
    pub fn rotate_ccw(&mut self) {
        self.map_ends(|e| EndpointLabel::ALL[e as usize].rotate_ccw().index() as u8);
    }

    /// Reflection across the vertical axis in the plane. Not an isotopy on its own.
    pub fn reflect_y(&mut self) {
        self.map_ends(|e| EndpointLabel::ALL[e as usize].reflect_y().index() as u8);
        self.map_slots(|_, s| (4 - s) % 4);
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&mut self) {
        for n in &mut self.nodes {
            if let Node::Crossing { under02 } = n {
                *under02 = !*under02;
            }
        }
    }

    /// Half turn about the vertical axis in space: a planar reflection that also swaps every crossing.
    pub fn flip_over(&mut self) {
        self.reflect_y();
        self.mirror();
    }

    /// Inserts markers at the four ends, tagging them as the boundary of a leaf.
    pub fn mark_leaf(&mut self, side: u8, leaf: usize) {
        let base = self.nodes.len();
        let inside: Vec<P> = EndpointLabel::ALL.iter().map(|&l| self.link[&end(l)]).collect();
        for (i, l) in EndpointLabel::ALL.into_iter().enumerate() {
            self.nodes.push(Node::Marker { side, leaf, label: l });
            self.link.remove(&end(l));
            self.link.remove(&inside[i]);
        }
        for (i, l) in EndpointLabel::ALL.into_iter().enumerate() {
            self.connect(end(l), P::Node(base + i, 0));
            let target = match inside[i] {
                P::End(e) => P::Node(base + e as usize, 1),
                p => p,
            };
            self.connect(P::Node(base + i, 1), target);
        }
    }

    /// Which endpoint each endpoint is joined to through the net.
    pub fn endpoint_partner(&self, l: EndpointLabel) -> EndpointLabel {
        let mut p = self.link[&end(l)];
        loop {
            match p {
                P::End(e) => return EndpointLabel::ALL[e as usize],
                P::Node(n, s) => {
                    let exit = match self.nodes[n] {
                        Node::Crossing { .. } => P::Node(n, (s + 2) % 4),
                        Node::Marker { .. } => P::Node(n, 1 - s),
                    };
                    p = self.link[&exit];
                }
            }
        }
    }

    /// Exports to a PD code with arcs numbered along a traversal.
    ///
    /// Open strands are walked first, from their smallest free endpoint label;
    /// closed components then start at the lowest crossing, leaving its
    /// lowest unused slot. Markers are contracted away. Only the slot order
    /// decides the traversal, so mirrored nets export identically up to the
    /// over/under swap.
    pub fn export(&self) -> Exported {
        let mut arc_at: BTreeMap<(usize, u8), ArcId> = BTreeMap::new();
        let mut entered: BTreeMap<(usize, u8), bool> = BTreeMap::new();
        let mut head: BTreeMap<ArcId, P> = BTreeMap::new();
        let mut open_ends = BTreeMap::new();
        let mut markers = BTreeMap::new();
        let mut marker_seen = vec![false; self.nodes.len()];
        let mut next: ArcId = 0;

        // Walks starting on an arc that leaves `from`, stopping at an open end or at `stop`.
        let walk = |from: P,
                        stop: Option<P>,
                        arc_at: &mut BTreeMap<(usize, u8), ArcId>,
                        entered: &mut BTreeMap<(usize, u8), bool>,
                        head: &mut BTreeMap<ArcId, P>,
                        open_ends: &mut BTreeMap<EndpointLabel, ArcId>,
                        markers: &mut BTreeMap<(u8, usize, EndpointLabel), MarkerPass>,
                        marker_seen: &mut Vec<bool>,
                        next: &mut ArcId,
                        with_arcs: bool| {
            let mut cur = *next;
            if with_arcs {
                *next += 1;
            }
            match from {
                P::End(e) => {
                    open_ends.insert(EndpointLabel::ALL[e as usize], cur);
                }
                P::Node(n, s) if with_arcs => {
                    arc_at.insert((n, s), cur);
                    entered.insert((n, s), false);
                }
                P::Node(..) => {}
            }
            let mut exit = from;
            loop {
                let p = self.link[&exit];
                match p {
                    P::End(e) => {
                        open_ends.insert(EndpointLabel::ALL[e as usize], cur);
                        head.insert(cur, p);
                        return;
                    }
                    P::Node(n, s) => match self.nodes[n] {
                        Node::Marker { side, leaf, label } => {
                            marker_seen[n] = true;
                            markers.insert(
                                (side, leaf, label),
                                MarkerPass { arc: with_arcs.then_some(cur), entering: s == 0 },
                            );
                            exit = P::Node(n, 1 - s);
                            if Some(exit) == stop {
                                return;
                            }
                        }
                        Node::Crossing { .. } => {
                            arc_at.insert((n, s), cur);
                            entered.insert((n, s), true);
                            head.insert(cur, p);
                            if Some(p) == stop {
                                return;
                            }
                            cur = *next;
                            *next += 1;
                            let out = (s + 2) % 4;
                            arc_at.insert((n, out), cur);
                            entered.insert((n, out), false);
                            exit = P::Node(n, out);
                        }
                    },
                }
            }
        };

        for l in EndpointLabel::ALL {
            if self.link.contains_key(&end(l)) && !open_ends.contains_key(&l) {
                walk(
                    end(l), None, &mut arc_at, &mut entered, &mut head, &mut open_ends, &mut markers,
                    &mut marker_seen, &mut next, true,
                );
            }
        }
        for (n, node) in self.nodes.iter().enumerate() {
            if !matches!(node, Node::Crossing { .. }) {
                continue;
            }
            while let Some(s) = (0..4u8).find(|&s| !arc_at.contains_key(&(n, s))) {
                let stop = P::Node(n, (s + 2) % 4);
                walk(
                    P::Node(n, s), Some(stop), &mut arc_at, &mut entered, &mut head, &mut open_ends,
                    &mut markers, &mut marker_seen, &mut next, true,
                );
            }
        }
        // Loops made only of markers carry no arcs.
        let mut loops = self.free_loops;
        for n in 0..self.nodes.len() {
            if matches!(self.nodes[n], Node::Marker { .. }) && !marker_seen[n] {
                loops += 1;
                walk(
                    P::Node(n, 1), Some(P::Node(n, 1)), &mut arc_at, &mut entered, &mut head,
                    &mut open_ends, &mut markers, &mut marker_seen, &mut next, false,
                );
            }
        }

        // Crossing index in the PD code = rank among crossing nodes.
        let mut pd_index = vec![usize::MAX; self.nodes.len()];
        let mut crossings = Vec::new();
        let mut rotation = Vec::new();
        for (n, node) in self.nodes.iter().enumerate() {
            if let Node::Crossing { under02 } = node {
                let under = if *under02 { [0u8, 2] } else { [1, 3] };
                let u_in = *under.iter().find(|&&s| entered[&(n, s)]).expect("under-strand is entered once");
                pd_index[n] = crossings.len();
                let tuple = [0u8, 1, 2, 3].map(|i| arc_at[&(n, (u_in + i) % 4)]);
                crossings.push(tuple);
                rotation.push(u_in);
            }
        }
        let head = head
            .into_iter()
            .map(|(a, p)| {
                let port = match p {
                    P::End(e) => Port::Open(EndpointLabel::ALL[e as usize]),
                    P::Node(n, s) => {
                        let c = pd_index[n];
                        Port::Slot { crossing: c, slot: ((s + 4 - rotation[c]) % 4) as usize }
                    }
                };
                (a, port)
            })
            .collect();
        let open_ends = if self.link.keys().any(|p| matches!(p, P::End(_))) { Some(open_ends) } else { None };
        Exported { pd: PDCode { crossings, open_ends, loops }, head, markers }
    }
}
