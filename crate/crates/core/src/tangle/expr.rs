use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::slope::Slope;

/// A tangle built from rational tangles by sums, bottom twists and mirrors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Rational(Slope),
    Sum(Box<TangleExpr>, Box<TangleExpr>),
    /// `k` half twists of the two lower endpoints; left-handed for `k > 0`.
    BottomTwist(Box<TangleExpr>, i64),
    Mirror(Box<TangleExpr>),
}

impl TangleExpr {
    /// A rational leaf. Integer slopes other than 0 are rejected; write them as twists or sums.
    pub fn rational(s: Slope) -> Result<Self> {
        if s.is_infinite() || s.numerator() == 0 || s.denominator() >= 2 {
            Ok(TangleExpr::Rational(s))
        } else {
            Err(Error::Domain(format!("rational leaf T({s}) needs denominator at least 2, or 0 or infinity")))
        }
    }

    /// Mirror node; a double mirror cancels.
    pub fn mirror(t: TangleExpr) -> Self {
        match t {
            TangleExpr::Mirror(inner) => *inner,
            t => TangleExpr::Mirror(Box::new(t)),
        }
    }

    pub fn crossing_count(&self) -> usize {
        match self {
            TangleExpr::Rational(s) => rational_crossings(*s),
            TangleExpr::Sum(a, b) => a.crossing_count() + b.crossing_count(),
            TangleExpr::BottomTwist(t, k) => t.crossing_count() + k.unsigned_abs() as usize,
            TangleExpr::Mirror(t) => t.crossing_count(),
        }
    }

    /// Leaves in left-to-right order, as they are numbered when compiled.
    pub fn leaves(&self) -> Vec<Slope> {
        let mut out = Vec::new();
        self.collect_leaves(false, &mut out);
        out
    }

    fn collect_leaves(&self, mirrored: bool, out: &mut Vec<Slope>) {
        match self {
            TangleExpr::Rational(s) => out.push(if mirrored { s.neg() } else { *s }),
            TangleExpr::Sum(a, b) => {
                a.collect_leaves(mirrored, out);
                b.collect_leaves(mirrored, out);
            }
            TangleExpr::BottomTwist(t, _) => t.collect_leaves(mirrored, out),
            TangleExpr::Mirror(t) => t.collect_leaves(!mirrored, out),
        }
    }
}

fn rational_crossings(s: Slope) -> usize {
    if s.is_infinite() {
        return 0;
    }
    crate::slope::continued_fraction(s)
        .expect("finite slope")
        .iter()
        .map(|a| a.unsigned_abs() as usize)
        .sum()
}

/// `T(r1, r2)`.
pub fn tangle_sum(t1: TangleExpr, t2: TangleExpr) -> TangleExpr {
    TangleExpr::Sum(Box::new(t1), Box::new(t2))
}

/// `k` left-handed half twists of the lower endpoints; `k = 0` returns `t` unchanged.
pub fn bottom_twist(t: TangleExpr, k: i64) -> TangleExpr {
    if k == 0 {
        t
    } else {
        TangleExpr::BottomTwist(Box::new(t), k)
    }
}

/// Mirror pushed down to the leaves: slopes and twist counts change sign.
pub fn mirror_tangle(t: &TangleExpr) -> TangleExpr {
    match t {
        TangleExpr::Rational(s) => TangleExpr::Rational(s.neg()),
        TangleExpr::Sum(a, b) => tangle_sum(mirror_tangle(a), mirror_tangle(b)),
        TangleExpr::BottomTwist(inner, k) => TangleExpr::BottomTwist(Box::new(mirror_tangle(inner)), -k),
        TangleExpr::Mirror(inner) => (**inner).clone(),
    }
}

/// `T(r1, r2; n)`.
pub fn montesinos(r1: Slope, r2: Slope, n: i64) -> Result<TangleExpr> {
    Ok(bottom_twist(tangle_sum(TangleExpr::rational(r1)?, TangleExpr::rational(r2)?), n))
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Rational(s) if s.is_infinite() => write!(f, "T(inf)"),
            TangleExpr::Rational(s) => write!(f, "T({s})"),
            TangleExpr::Sum(a, b) => write!(f, "sum({a},{b})"),
            TangleExpr::BottomTwist(t, k) => write!(f, "twist({t},{k})"),
            TangleExpr::Mirror(t) => write!(f, "mirror({t})"),
        }
    }
}

impl FromStr for TangleExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Malformed(format!("{what} at offset {} in tangle expression {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let n = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        self.pos += n;
        &rest[..n]
    }

    /// Raw text up to the next `,` or `)` at this nesting level.
    fn atom(&mut self) -> &str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let n = rest.find([',', ')']).unwrap_or(rest.len());
        self.pos += n;
        rest[..n].trim()
    }

    fn expr(&mut self) -> Result<TangleExpr> {
        let head = self.word().to_string();
        self.eat('(')?;
        let e = match head.as_str() {
            "T" => {
                let slope: Slope = self.atom().parse()?;
                TangleExpr::rational(slope)?
            }
            "sum" => {
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                tangle_sum(a, b)
            }
            "twist" => {
                let t = self.expr()?;
                self.eat(',')?;
                let k = self.atom();
                let k: i64 = k.parse().map_err(|_| Error::Malformed(format!("bad twist count {k:?}")))?;
                bottom_twist(t, k)
            }
            "mirror" => TangleExpr::mirror(self.expr()?),
            "" => return Err(self.error("expected T, sum, twist or mirror")),
            other => return Err(Error::Malformed(format!("unknown tangle constructor {other:?}"))),
        };
        self.eat(')')?;
        Ok(e)
    }
}
