use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::{Deserialize, Serialize};

/// Integer Laurent polynomial in one variable.
///
/// Exponents are stored as integer numerators over a fixed `exponent_denominator`
/// (1 for the bracket in `A`, 4 for the Jones polynomial in `t`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolyRepr", from = "PolyRepr")]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
    exponent_denominator: u32,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    exponent_denominator: u32,
    terms: Vec<[i64; 2]>,
}

impl From<LaurentPolynomial> for PolyRepr {
    fn from(p: LaurentPolynomial) -> Self {
        PolyRepr {
            exponent_denominator: p.exponent_denominator,
            terms: p.terms.into_iter().map(|(e, c)| [e, c]).collect(),
        }
    }
}

impl From<PolyRepr> for LaurentPolynomial {
    fn from(r: PolyRepr) -> Self {
        let mut p = LaurentPolynomial::zero_with(r.exponent_denominator.max(1));
        for [e, c] in r.terms {
            p.add_term(e, c);
        }
        p
    }
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::zero_with(1)
    }

    pub fn zero_with(exponent_denominator: u32) -> Self {
        LaurentPolynomial { terms: BTreeMap::new(), exponent_denominator }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coefficient: i64, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn from_terms(exponent_denominator: u32, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero_with(exponent_denominator);
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let c = self.terms.entry(exponent).or_insert(0);
        *c += coefficient;
        if *c == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn exponent_denominator(&self) -> u32 {
        self.exponent_denominator
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `x ↦ x⁻¹`.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
            exponent_denominator: self.exponent_denominator,
        }
    }

    /// Multiplies every exponent by `k` (for `k = -4` this is `A ↦ t^(-1/4)` in quarter units).
    pub fn scale_exponents(&self, k: i64, exponent_denominator: u32) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (k * e, c)).collect(),
            exponent_denominator,
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e + by, c)).collect(),
            exponent_denominator: self.exponent_denominator,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        out.exponent_denominator = self.exponent_denominator;
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Renders with the given variable name, e.g. `-A^3 + A^-1`.
    pub fn display(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let d = self.exponent_denominator as i64;
        let mut out = String::new();
        for (&e, &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.abs();
            let power = if e == 0 {
                String::new()
            } else if e % d == 0 {
                if e / d == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{}", e / d)
                }
            } else {
                let g = num_integer::gcd(e, d);
                format!("{var}^({}/{})", e / g, d / g)
            };
            match (a, power.is_empty()) {
                (_, true) => out.push_str(&a.to_string()),
                (1, false) => out.push_str(&power),
                (_, false) => out.push_str(&format!("{a}{power}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.exponent_denominator, rhs.exponent_denominator);
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.exponent_denominator, rhs.exponent_denominator);
        let mut out = LaurentPolynomial::zero_with(self.exponent_denominator);
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
            exponent_denominator: self.exponent_denominator,
        }
    }
}
