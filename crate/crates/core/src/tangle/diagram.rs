use serde::Serialize;

use super::endpoint::{EndpointLabel, Pairing};
use super::expr::TangleExpr;
use super::net::Net;
use crate::diagram::{OrientedDiagram, PDCode};
use crate::slope::{continued_fraction, Slope};

/// A compiled tangle: PD code with four open ends and the traced string pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangleDiagram {
    pub pd: PDCode,
    pub string_pairing: Pairing,
    #[serde(skip)]
    pub(crate) net: Net,
}

impl TangleDiagram {
    fn from_net(net: Net) -> Self {
        use EndpointLabel::*;
        let pairing = Pairing::new((NW, net.endpoint_partner(NW)), {
            let rest: Vec<_> = [NE, SW, SE].into_iter().filter(|&l| l != net.endpoint_partner(NW)).collect();
            (rest[0], rest[1])
        })
        .expect("a net pairs its four ends");
        TangleDiagram { pd: net.export().pd, string_pairing: pairing, net }
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.crossings.len()
    }

    /// Joins NW–SW and NE–SE. For `T(p/q)` this is a knot exactly when `q` is odd.
    pub fn numerator_closure(&self) -> OrientedDiagram {
        use EndpointLabel::*;
        close(self.net.clone(), [(NW, SW), (NE, SE)])
    }

    /// Joins NW–NE and SW–SE.
    pub fn denominator_closure(&self) -> OrientedDiagram {
        use EndpointLabel::*;
        close(self.net.clone(), [(NW, NE), (SW, SE)])
    }
}

fn close(net: Net, pairs: [(EndpointLabel, EndpointLabel); 2]) -> OrientedDiagram {
    let out = net.close(pairs).export();
    OrientedDiagram::with_heads(out.pd, out.head).expect("exported orientation is consistent")
}

fn twist_region(crossings: i64) -> impl Iterator<Item = Net> {
    (0..crossings.unsigned_abs()).map(move |_| Net::crossing(crossings > 0))
}

pub(crate) fn rational_net(s: Slope) -> Net {
    if s.is_infinite() {
        return Net::infinity();
    }
    let terms = continued_fraction(s).expect("finite slope");
    let mut net = if terms.len() % 2 == 1 { Net::infinity() } else { Net::zero() };
    for (i, &a) in terms.iter().enumerate().rev() {
        net = if i % 2 == 0 {
            twist_region(a).fold(net, Net::stack)
        } else {
            twist_region(a).fold(net, Net::sum)
        };
    }
    net
}

/// Compiles with every rational leaf wrapped in boundary markers tagged with `side`.
pub(crate) fn compile_net(t: &TangleExpr, side: u8) -> Net {
    fn build(t: &TangleExpr, side: u8, leaf: &mut usize) -> Net {
        match t {
            TangleExpr::Rational(s) => {
                let mut net = rational_net(*s);
                net.mark_leaf(side, *leaf);
                *leaf += 1;
                net
            }
            TangleExpr::Sum(a, b) => {
                let a = build(a, side, leaf);
                Net::sum(a, build(b, side, leaf))
            }
            TangleExpr::BottomTwist(inner, k) => {
                // Left-handed half twists are negative crossings stacked below.
                twist_region(-k).fold(build(inner, side, leaf), Net::stack)
            }
            TangleExpr::Mirror(inner) => {
                let mut net = build(inner, side, leaf);
                net.mirror();
                net
            }
        }
    }
    build(t, side, &mut 0)
}

/// The standard diagram of the rational tangle of slope `s`, built from its continued fraction.
pub fn rational_tangle(s: Slope) -> TangleDiagram {
    TangleDiagram::from_net(rational_net(s))
}

pub fn compile(t: &TangleExpr) -> TangleDiagram {
    TangleDiagram::from_net(compile_net(t, 0))
}

/// Which endpoints are joined by the same string.
pub fn endpoint_permutation(t: &TangleExpr) -> Pairing {
    compile(t).string_pairing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::expr::{bottom_twist, montesinos, tangle_sum};

    fn slope(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn zero_tangle() {
        let d = rational_tangle(Slope::ZERO);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.string_pairing, Pairing::HORIZONTAL);
        assert_eq!(d.pd.open_ends.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn small_rational_closures() {
        let third = rational_tangle(slope(1, 3));
        assert_eq!(third.crossing_count(), 3);
        assert_eq!(third.numerator_closure().components().count, 1);
        let half = rational_tangle(slope(1, 2));
        assert_eq!(half.crossing_count(), 2);
        assert_eq!(half.string_pairing, Pairing::VERTICAL);
        assert_eq!(half.numerator_closure().components().count, 2);
    }

    #[test]
    fn sum_and_twist_counts() {
        let s = tangle_sum(TangleExpr::Rational(slope(1, 3)), TangleExpr::Rational(slope(-1, 2)));
        let d = compile(&s);
        assert_eq!(d.crossing_count(), 5);
        for (a, b) in d.string_pairing.pairs() {
            assert_ne!(a.is_upper(), b.is_upper());
        }
        assert_eq!(compile(&bottom_twist(s, 4)).crossing_count(), 9);
    }

    #[test]
    fn zero_summand_passes_strings_through() {
        let t = TangleExpr::Rational(slope(1, 3));
        let with_zero = tangle_sum(TangleExpr::Rational(Slope::ZERO), t.clone());
        assert_eq!(endpoint_permutation(&with_zero), endpoint_permutation(&t));
    }

    #[test]
    fn catalog_side_pairs_vertically() {
        let side = montesinos(slope(1, 3), slope(-1, 2), 4).unwrap();
        assert_eq!(endpoint_permutation(&side), Pairing::VERTICAL);
        assert_eq!(endpoint_permutation(&TangleExpr::mirror(side)), Pairing::VERTICAL);
    }

    #[test]
    fn mirror_compiles_to_crossing_flip() {
        let side = montesinos(slope(1, 3), slope(-1, 2), 4).unwrap();
        let a = compile(&side).numerator_closure();
        let b = compile(&crate::tangle::mirror_tangle(&side)).numerator_closure();
        assert_eq!(a.mirror().pd(), b.pd());
    }
}
