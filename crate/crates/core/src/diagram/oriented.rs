use std::collections::{BTreeMap, BTreeSet};

use super::pd::{ArcId, Components, PDCode, Port};
use crate::error::{Error, Result};

/// A PD code together with a direction on every arc.
///
/// `head` records the port each arc runs into. Under-strands always enter at
/// slot 0 and leave at slot 2; the over-strand runs either from slot 3 to
/// slot 1 or from slot 1 to slot 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedDiagram {
    pd: PDCode,
    head: BTreeMap<ArcId, Port>,
    components: Components,
}

fn partner(port: Port) -> Port {
    match port {
        Port::Slot { crossing, slot } => Port::Slot { crossing, slot: (slot + 2) % 4 },
        open => open,
    }
}

fn other(ports: &[Port; 2], p: Port) -> Port {
    if ports[0] == p {
        ports[1]
    } else {
        ports[0]
    }
}

impl OrientedDiagram {
    /// Orients every component of `pd` consistently with its under-passages.
    ///
    /// Open strands start from their smaller endpoint label unless that
    /// contradicts an under-passage; closed components with no under-passage
    /// run from the first port of their minimum arc.
    pub fn from_pd(pd: PDCode) -> Result<Self> {
        let ports = pd.arc_ports()?;
        let components = pd.trace_components()?;
        let mut head = BTreeMap::new();
        for label in components.labels() {
            let start_arc = label;
            let arcs = components.arcs_of(label);
            let open_port = arcs
                .iter()
                .flat_map(|a| ports[a].iter().copied())
                .filter(|p| matches!(p, Port::Open(_)))
                .min();
            // A walk is fixed by the arc it starts on and the port it leaves from.
            let starts: Vec<(ArcId, Port)> = match open_port {
                Some(p) => {
                    let a = pd.arc_at(p).unwrap();
                    let end = Self::walk_end(&pd, &ports, a, p);
                    vec![(a, p), (pd.arc_at(end).unwrap(), end)]
                }
                None => {
                    let [p0, p1] = ports[&start_arc];
                    vec![(start_arc, p1), (start_arc, p0)]
                }
            };
            let mut chosen = None;
            for (arc, tail) in starts {
                let walk = Self::walk(&pd, &ports, arc, tail);
                let consistent = walk.iter().all(|&(_, h)| match h {
                    Port::Slot { slot, .. } => slot != 2,
                    Port::Open(_) => true,
                });
                if consistent {
                    chosen = Some(walk);
                    break;
                }
            }
            let walk = chosen.ok_or_else(|| {
                Error::Malformed(format!(
                    "component {label} passes under in both directions; no consistent orientation"
                ))
            })?;
            head.extend(walk);
        }
        Self::with_heads(pd, head)
    }

    /// Walks from `arc`, leaving `tail`, until the walk closes or hits an open end.
    fn walk(
        pd: &PDCode,
        ports: &BTreeMap<ArcId, [Port; 2]>,
        arc: ArcId,
        tail: Port,
    ) -> Vec<(ArcId, Port)> {
        let mut out = Vec::new();
        let (mut arc, mut tail) = (arc, tail);
        loop {
            let h = other(&ports[&arc], tail);
            out.push((arc, h));
            if matches!(h, Port::Open(_)) {
                return out;
            }
            let next_tail = partner(h);
            let next = pd.arc_at(next_tail).unwrap();
            if out.iter().any(|&(a, _)| a == next) {
                return out;
            }
            arc = next;
            tail = next_tail;
        }
    }

    fn walk_end(pd: &PDCode, ports: &BTreeMap<ArcId, [Port; 2]>, arc: ArcId, tail: Port) -> Port {
        Self::walk(pd, ports, arc, tail).last().map(|&(_, h)| h).unwrap()
    }

    /// Wraps a PD code with explicit arc heads, checking the slot conventions.
    pub fn with_heads(pd: PDCode, head: BTreeMap<ArcId, Port>) -> Result<Self> {
        let ports = pd.arc_ports()?;
        if head.len() != ports.len() || ports.keys().any(|a| !head.contains_key(a)) {
            return Err(Error::Malformed("orientation must cover every arc".into()));
        }
        for (a, h) in &head {
            if !ports[a].contains(h) {
                return Err(Error::Malformed(format!("head of arc {a} is not one of its ports")));
            }
        }
        for c in 0..pd.crossings.len() {
            let is_head = |slot| {
                let port = Port::Slot { crossing: c, slot };
                head[&pd.crossings[c][slot]] == port
            };
            if !is_head(0) || is_head(2) {
                return Err(Error::Malformed(format!(
                    "crossing {c}: under-strand must enter at slot 0 and leave at slot 2"
                )));
            }
            if is_head(1) == is_head(3) {
                return Err(Error::Malformed(format!("crossing {c}: over-strand direction inconsistent")));
            }
        }
        let components = pd.trace_components()?;
        Ok(OrientedDiagram { pd, head, components })
    }

    pub fn pd(&self) -> &PDCode {
        &self.pd
    }

    pub fn components(&self) -> &Components {
        &self.components
    }

    pub fn head(&self, arc: ArcId) -> Option<Port> {
        self.head.get(&arc).copied()
    }

    pub fn tail(&self, arc: ArcId) -> Option<Port> {
        let ports = self.pd.arc_ports().ok()?;
        let h = self.head(arc)?;
        Some(other(&ports[&arc], h))
    }

    pub fn component_of(&self, arc: ArcId) -> Option<ArcId> {
        self.components.label_of.get(&arc).copied()
    }

    /// Right-hand rule: `+1` when the over-strand direction, turned a quarter
    /// counterclockwise, points along the under-strand.
    pub fn crossing_sign(&self, crossing: usize) -> i64 {
        let over_enters_at_3 =
            self.head[&self.pd.crossings[crossing][3]] == Port::Slot { crossing, slot: 3 };
        if over_enters_at_3 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.pd.crossings.len()).map(|c| self.crossing_sign(c)).sum()
    }

    fn under_component(&self, c: usize) -> ArcId {
        self.components.label_of[&self.pd.crossings[c][0]]
    }

    fn over_component(&self, c: usize) -> ArcId {
        self.components.label_of[&self.pd.crossings[c][1]]
    }

    pub fn linking_number(&self, a: ArcId, b: ArcId) -> Result<i64> {
        let labels = self.components.labels();
        for l in [a, b] {
            if !labels.contains(&l) {
                return Err(Error::Domain(format!("unknown component label {l}")));
            }
        }
        if a == b {
            return Err(Error::Domain("linking number needs two distinct components".into()));
        }
        let total: i64 = (0..self.pd.crossings.len())
            .filter(|&c| {
                let pair = (self.under_component(c), self.over_component(c));
                pair == (a, b) || pair == (b, a)
            })
            .map(|c| self.crossing_sign(c))
            .sum();
        if total % 2 != 0 {
            return Err(Error::Domain(format!(
                "odd mutual crossing sum {total} between {a} and {b}; components are not both closed"
            )));
        }
        Ok(total / 2)
    }

    /// Sum of the signs of the crossings at which a `gamma` arc passes under a `tau` arc.
    pub fn relative_linking(&self, tau: &BTreeSet<ArcId>, gamma: &BTreeSet<ArcId>) -> Result<i64> {
        if let Some(a) = tau.intersection(gamma).next() {
            return Err(Error::Domain(format!("arc {a} lies in both tau and gamma")));
        }
        Ok((0..self.pd.crossings.len())
            .filter(|&c| {
                let x = self.pd.crossings[c];
                gamma.contains(&x[0]) && tau.contains(&x[1])
            })
            .map(|c| self.crossing_sign(c))
            .sum())
    }

    /// The crossing-flipped diagram, with the same arc ids and directions.
    pub fn mirror(&self) -> OrientedDiagram {
        let mut crossings = Vec::with_capacity(self.pd.crossings.len());
        // new slot of an old slot, per crossing
        let mut shift = Vec::with_capacity(self.pd.crossings.len());
        for c in 0..self.pd.crossings.len() {
            let [a, b, cc, d] = self.pd.crossings[c];
            if self.crossing_sign(c) > 0 {
                crossings.push([d, a, b, cc]);
                shift.push(1);
            } else {
                crossings.push([b, cc, d, a]);
                shift.push(3);
            }
        }
        let head = self
            .head
            .iter()
            .map(|(&arc, &h)| {
                let h = match h {
                    Port::Slot { crossing, slot } => {
                        Port::Slot { crossing, slot: (slot + shift[crossing]) % 4 }
                    }
                    open => open,
                };
                (arc, h)
            })
            .collect();
        let pd = PDCode { crossings, open_ends: self.pd.open_ends.clone(), loops: self.pd.loops };
        OrientedDiagram::with_heads(pd, head).expect("mirror preserves slot conventions")
    }

    /// Reverses the direction of one component.
    pub fn reverse_component(&self, label: ArcId) -> Result<OrientedDiagram> {
        if !self.components.labels().contains(&label) {
            return Err(Error::Domain(format!("unknown component label {label}")));
        }
        let ports = self.pd.arc_ports()?;
        let arcs = self.components.arcs_of(label);
        let mut head: BTreeMap<ArcId, Port> = self
            .head
            .iter()
            .map(|(&a, &h)| (a, if arcs.contains(&a) { other(&ports[&a], h) } else { h }))
            .collect();
        // Crossings whose under-strand is reversed now start from the old slot 2.
        let rotated: BTreeSet<usize> =
            (0..self.pd.crossings.len()).filter(|&c| arcs.contains(&self.pd.crossings[c][0])).collect();
        let mut crossings = self.pd.crossings.clone();
        for &c in &rotated {
            crossings[c].rotate_left(2);
        }
        for h in head.values_mut() {
            if let Port::Slot { crossing, slot } = h {
                if rotated.contains(crossing) {
                    *slot = (*slot + 2) % 4;
                }
            }
        }
        let pd = PDCode { crossings, open_ends: self.pd.open_ends.clone(), loops: self.pd.loops };
        OrientedDiagram::with_heads(pd, head)
    }
}
