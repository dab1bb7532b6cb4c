use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tangle::EndpointLabel;

pub type ArcId = usize;

/// Planar diagram code.
///
/// Each crossing lists its four arc ids counterclockwise, starting from the
/// incoming under-strand, so slots 0 and 2 carry the under-strand and slots 1
/// and 3 the over-strand. Tangle diagrams additionally pin one arc to each
/// boundary endpoint. Closed components without crossings have no arcs and are
/// counted in `loops`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PDCode {
    pub crossings: Vec<[ArcId; 4]>,
    #[serde(default)]
    pub open_ends: Option<BTreeMap<EndpointLabel, ArcId>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub loops: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

/// Where one end of an arc sits: a crossing slot or a tangle endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Port {
    Slot { crossing: usize, slot: usize },
    Open(EndpointLabel),
}

/// Component count and the component label of every arc.
///
/// Labels are the minimum arc id on each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub label_of: BTreeMap<ArcId, ArcId>,
}

impl Components {
    pub fn labels(&self) -> BTreeSet<ArcId> {
        self.label_of.values().copied().collect()
    }

    pub fn arcs_of(&self, label: ArcId) -> BTreeSet<ArcId> {
        self.label_of.iter().filter(|(_, &l)| l == label).map(|(&a, _)| a).collect()
    }
}

impl PDCode {
    pub fn closed(crossings: Vec<[ArcId; 4]>) -> Self {
        PDCode { crossings, open_ends: None, loops: 0 }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_closed(&self) -> bool {
        self.open_ends.as_ref().map_or(true, |o| o.is_empty())
    }

    /// The two ports of every arc, in port order.
    pub fn arc_ports(&self) -> Result<BTreeMap<ArcId, [Port; 2]>> {
        let mut seen: BTreeMap<ArcId, Vec<Port>> = BTreeMap::new();
        for (c, slots) in self.crossings.iter().enumerate() {
            for (slot, &arc) in slots.iter().enumerate() {
                seen.entry(arc).or_default().push(Port::Slot { crossing: c, slot });
            }
        }
        if let Some(open) = &self.open_ends {
            for (&label, &arc) in open {
                seen.entry(arc).or_default().push(Port::Open(label));
            }
        }
        seen.into_iter()
            .map(|(arc, ports)| match ports.as_slice() {
                [a, b] => Ok((arc, [*a, *b])),
                _ => Err(Error::Malformed(format!(
                    "arc {arc} occurs {} times; every arc must occur exactly twice",
                    ports.len()
                ))),
            })
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        self.arc_ports().map(|_| ())
    }

    pub fn arc_at(&self, port: Port) -> Option<ArcId> {
        match port {
            Port::Slot { crossing, slot } => self.crossings.get(crossing).map(|c| c[slot]),
            Port::Open(l) => self.open_ends.as_ref().and_then(|o| o.get(&l).copied()),
        }
    }

    /// Connected components of the diagram. Open strands count as components.
    pub fn trace_components(&self) -> Result<Components> {
        let ports = self.arc_ports()?;
        let index: BTreeMap<ArcId, usize> = ports.keys().enumerate().map(|(i, &a)| (a, i)).collect();
        let arcs: Vec<ArcId> = ports.keys().copied().collect();
        let mut parent: Vec<usize> = (0..arcs.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for slots in &self.crossings {
            for (i, j) in [(0, 2), (1, 3)] {
                let (a, b) = (find(&mut parent, index[&slots[i]]), find(&mut parent, index[&slots[j]]));
                // Keep the smaller index as root so that the root is the minimum arc id.
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
        let mut label_of = BTreeMap::new();
        let mut roots = BTreeSet::new();
        for (i, &arc) in arcs.iter().enumerate() {
            let r = find(&mut parent, i);
            roots.insert(r);
            label_of.insert(arc, arcs[r]);
        }
        Ok(Components { count: roots.len() + self.loops, label_of })
    }

    /// Renumbers arcs to `0..m` in order of first appearance.
    pub fn renumbered(&self) -> PDCode {
        let mut map = BTreeMap::new();
        let mut next = 0;
        let mut id = |a: ArcId, map: &mut BTreeMap<ArcId, ArcId>| {
            *map.entry(a).or_insert_with(|| {
                next += 1;
                next - 1
            })
        };
        let crossings = self.crossings.iter().map(|c| c.map(|a| id(a, &mut map))).collect();
        let open_ends =
            self.open_ends.as_ref().map(|o| o.iter().map(|(&l, &a)| (l, id(a, &mut map))).collect());
        PDCode { crossings, open_ends, loops: self.loops }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("PD codes serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let pd: PDCode =
            serde_json::from_str(s).map_err(|e| Error::Malformed(format!("PD code JSON: {e}")))?;
        pd.validate()?;
        Ok(pd)
    }
}
