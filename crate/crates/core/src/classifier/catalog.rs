use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::PDCode;
use crate::error::{Error, Result};
use crate::slope::Slope;
use crate::tangle::{glue, mirror_tangle, montesinos, standard_eta, GluingMap, TangleExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KnotId {
    K1,
    K2,
    K3,
}

impl KnotId {
    pub const ALL: [KnotId; 3] = [KnotId::K1, KnotId::K2, KnotId::K3];

    /// Side signs: `+1` for `T(1/3, -1/2; 4)`, `-1` for its mirror.
    pub fn sides(self) -> (i64, i64) {
        match self {
            KnotId::K1 => (1, 1),
            KnotId::K2 => (1, -1),
            KnotId::K3 => (-1, -1),
        }
    }

    /// The knot made from sides with these signs, in either order.
    pub fn from_sides(sigma1: i64, sigma2: i64) -> Self {
        match sigma1 + sigma2 {
            2 => KnotId::K1,
            0 => KnotId::K2,
            _ => KnotId::K3,
        }
    }

    pub fn expected_slope(self) -> i64 {
        match self {
            KnotId::K1 => 3,
            KnotId::K2 => 0,
            KnotId::K3 => -3,
        }
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for KnotId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "K1" => Ok(KnotId::K1),
            "K2" => Ok(KnotId::K2),
            "K3" => Ok(KnotId::K3),
            other => Err(Error::Malformed(format!("unknown knot id {other:?}; expected K1, K2 or K3"))),
        }
    }
}

/// `T(1/3, -1/2; 4)` for `sigma = 1`, its mirror `T(-1/3, 1/2; -4)` otherwise.
pub fn catalog_side(sigma: i64) -> TangleExpr {
    let side = montesinos(Slope::new(1, 3).unwrap(), Slope::new(-1, 2).unwrap(), 4).expect("valid leaves");
    if sigma > 0 {
        side
    } else {
        mirror_tangle(&side)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotCatalogEntry {
    pub id: KnotId,
    #[serde(serialize_with = "as_strings")]
    pub sides: [TangleExpr; 2],
    pub gluing: GluingMap,
    pub pd: PDCode,
    pub component_count: usize,
    pub expected_slope: i64,
}

fn as_strings<S: serde::Serializer>(sides: &[TangleExpr; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(sides.iter().map(|t| t.to_string()))
}

pub fn catalog_entry(id: KnotId) -> KnotCatalogEntry {
    let (a, b) = id.sides();
    let sides = [catalog_side(a), catalog_side(b)];
    let gluing = standard_eta();
    let pd = glue(&sides[0], &sides[1], &gluing);
    let component_count = pd.trace_components().expect("glued diagrams are well formed").count;
    KnotCatalogEntry { id, sides, gluing, pd, component_count, expected_slope: id.expected_slope() }
}

/// `K1`, `K2`, `K3`: two copies of `T(1/3, -1/2; 4)` glued by the standard map,
/// with the right side mirrored for `K2` and both sides mirrored for `K3`.
pub fn build_catalog() -> Vec<KnotCatalogEntry> {
    KnotId::ALL.into_iter().map(catalog_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::OrientedDiagram;

    #[test]
    fn eighteen_crossing_knots() {
        for e in build_catalog() {
            assert_eq!(e.pd.crossings.len(), 18, "{}", e.id);
            assert_eq!(e.component_count, 1, "{}", e.id);
        }
    }

    #[test]
    fn k3_is_the_crossing_flip_of_k1() {
        let cat = build_catalog();
        let k1 = OrientedDiagram::from_pd(cat[0].pd.clone()).unwrap();
        assert_eq!(k1.mirror().pd(), &cat[2].pd);
        assert_eq!(cat[1].sides[1], mirror_tangle(&cat[1].sides[0]));
    }

    #[test]
    fn side_order_does_not_matter_for_ids() {
        assert_eq!(KnotId::from_sides(-1, 1), KnotId::K2);
        assert_eq!("k3".parse::<KnotId>().unwrap(), KnotId::K3);
    }
}
