use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// One of the four boundary points of a tangle, at `(±1, ±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EndpointLabel {
    NW,
    NE,
    SW,
    SE,
}

impl EndpointLabel {
    pub const ALL: [EndpointLabel; 4] =
        [EndpointLabel::NW, EndpointLabel::NE, EndpointLabel::SW, EndpointLabel::SE];

    pub fn coordinates(self) -> (i32, i32) {
        match self {
            EndpointLabel::NW => (-1, 1),
            EndpointLabel::NE => (1, 1),
            EndpointLabel::SW => (-1, -1),
            EndpointLabel::SE => (1, -1),
        }
    }

    pub fn from_coordinates(x: i32, y: i32) -> Option<Self> {
        match (x, y) {
            (-1, 1) => Some(EndpointLabel::NW),
            (1, 1) => Some(EndpointLabel::NE),
            (-1, -1) => Some(EndpointLabel::SW),
            (1, -1) => Some(EndpointLabel::SE),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Position after a counterclockwise quarter turn about the origin.
    pub fn rotate_ccw(self) -> Self {
        let (x, y) = self.coordinates();
        Self::from_coordinates(-y, x).unwrap()
    }

    /// Position after reflecting across the `y`-axis.
    pub fn reflect_y(self) -> Self {
        let (x, y) = self.coordinates();
        Self::from_coordinates(-x, y).unwrap()
    }

    pub fn is_upper(self) -> bool {
        matches!(self, EndpointLabel::NW | EndpointLabel::NE)
    }
}

impl fmt::Display for EndpointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for EndpointLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NW" => Ok(EndpointLabel::NW),
            "NE" => Ok(EndpointLabel::NE),
            "SW" => Ok(EndpointLabel::SW),
            "SE" => Ok(EndpointLabel::SE),
            other => Err(Error::Malformed(format!("unknown endpoint label {other:?}"))),
        }
    }
}

/// A partition of the four endpoints into the two pairs joined by strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pairing {
    pairs: [(EndpointLabel, EndpointLabel); 2],
}

impl Pairing {
    /// Normalizes so that each pair is ordered and the pair containing `NW` comes first.
    pub fn new(a: (EndpointLabel, EndpointLabel), b: (EndpointLabel, EndpointLabel)) -> Option<Self> {
        let order = |(x, y): (EndpointLabel, EndpointLabel)| if x <= y { (x, y) } else { (y, x) };
        let (a, b) = (order(a), order(b));
        let mut seen = [false; 4];
        for l in [a.0, a.1, b.0, b.1] {
            if seen[l.index()] {
                return None;
            }
            seen[l.index()] = true;
        }
        let pairs = if a <= b { [a, b] } else { [b, a] };
        Some(Pairing { pairs })
    }

    pub const HORIZONTAL: Pairing = Pairing {
        pairs: [(EndpointLabel::NW, EndpointLabel::NE), (EndpointLabel::SW, EndpointLabel::SE)],
    };
    pub const VERTICAL: Pairing = Pairing {
        pairs: [(EndpointLabel::NW, EndpointLabel::SW), (EndpointLabel::NE, EndpointLabel::SE)],
    };
    pub const DIAGONAL: Pairing = Pairing {
        pairs: [(EndpointLabel::NW, EndpointLabel::SE), (EndpointLabel::NE, EndpointLabel::SW)],
    };

    pub fn pairs(&self) -> [(EndpointLabel, EndpointLabel); 2] {
        self.pairs
    }

    pub fn partner(&self, l: EndpointLabel) -> EndpointLabel {
        for (x, y) in self.pairs {
            if x == l {
                return y;
            }
            if y == l {
                return x;
            }
        }
        unreachable!("pairing covers all four labels")
    }

    pub fn same_string(&self, a: EndpointLabel, b: EndpointLabel) -> bool {
        a != b && self.partner(a) == b
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(a, b), (c, d)] = self.pairs;
        write!(f, "{{{a}–{b}, {c}–{d}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_has_order_four() {
        for l in EndpointLabel::ALL {
            assert_eq!(l.rotate_ccw().rotate_ccw().rotate_ccw().rotate_ccw(), l);
            assert_ne!(l.rotate_ccw(), l);
        }
        assert_eq!(EndpointLabel::NE.rotate_ccw(), EndpointLabel::NW);
    }

    #[test]
    fn pairing_normalizes() {
        use EndpointLabel::*;
        let p = Pairing::new((SE, SW), (NE, NW)).unwrap();
        assert_eq!(p, Pairing::HORIZONTAL);
        assert!(Pairing::new((NW, NE), (NE, SE)).is_none());
        assert!(Pairing::VERTICAL.same_string(SW, NW));
        assert!(!Pairing::VERTICAL.same_string(NW, NE));
    }
}
