//! Rational slopes and the continued fractions used to lay out rational tangles.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced rational number `p/q` with `q >= 1`, or the distinguished infinity slope `1/0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SlopeRepr", into = "SlopeRepr")]
pub struct Slope {
    numerator: i64,
    denominator: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { numerator: 0, denominator: 1 };
    pub const INFINITY: Slope = Slope { numerator: 1, denominator: 0 };

    /// Reduces `p/q`. A zero denominator is rejected; use [`Slope::INFINITY`].
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain(format!(
                "{numerator}/0 is not an ordinary slope; use the infinity constant"
            )));
        }
        let g = numerator.gcd(&denominator);
        let sign = denominator.signum();
        Ok(Slope { numerator: sign * numerator / g, denominator: sign * denominator / g })
    }

    pub fn integer(value: i64) -> Self {
        Slope { numerator: value, denominator: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_infinite(&self) -> bool {
        self.denominator == 0
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            *self
        } else {
            Slope { numerator: -self.numerator, denominator: self.denominator }
        }
    }

    /// Builds a slope from a projective pair `(p, q)`, allowing `q = 0`.
    fn from_projective(p: i64, q: i64) -> Self {
        if q == 0 {
            return Slope::INFINITY;
        }
        Slope::new(p, q).expect("nonzero denominator")
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Malformed(format!("bad integer {t:?} in slope {s:?}")))
        };
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Slope::INFINITY);
        }
        match s.split_once('/') {
            Some((p, q)) => {
                let (p, q) = (parse(p)?, parse(q)?);
                if q == 0 {
                    if p == 0 {
                        return Err(Error::Malformed("0/0 is not a slope".into()));
                    }
                    Ok(Slope::INFINITY)
                } else {
                    Slope::new(p, q)
                }
            }
            None => Ok(Slope::integer(parse(s)?)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SlopeRepr(String);

impl TryFrom<SlopeRepr> for Slope {
    type Error = Error;
    fn try_from(r: SlopeRepr) -> Result<Self> {
        r.0.parse()
    }
}

impl From<Slope> for SlopeRepr {
    fn from(s: Slope) -> Self {
        SlopeRepr(s.to_string())
    }
}

/// Continued-fraction expansion `[a1, ..., ak]` of a finite slope.
///
/// The expansion evaluates as `1/(a1 + 1/(a2 + ... + 1/ak))`, with the empty
/// expansion standing for `0`. Each term is one twist region of the rational
/// tangle: the last term is a vertical twist region on the infinity tangle when
/// `k` is odd, a horizontal one on the zero tangle when `k` is even, and the
/// regions alternate outward from there.
pub fn continued_fraction(s: Slope) -> Result<Vec<i64>> {
    if s.is_infinite() {
        return Err(Error::Domain("the infinity slope has no continued fraction".into()));
    }
    let sign = s.numerator.signum();
    let (mut p, mut q) = (s.numerator.abs(), s.denominator);
    let mut terms = Vec::new();
    while p != 0 {
        terms.push(sign * (q / p));
        (p, q) = (q % p, p);
    }
    Ok(terms)
}

/// Evaluates an expansion produced by [`continued_fraction`] (or any integer list)
/// exactly, returning [`Slope::INFINITY`] when a partial denominator vanishes.
pub fn evaluate_continued_fraction(terms: &[i64]) -> Slope {
    // v = p/q projectively; 1/(a + v) = q/(a q + p).
    let (mut p, mut q) = (0i64, 1i64);
    for &a in terms.iter().rev() {
        (p, q) = (q, a * q + p);
    }
    Slope::from_projective(p, q)
}
