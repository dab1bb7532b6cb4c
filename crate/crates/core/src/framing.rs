//! Special disks, weight equations, train-track types and relative framings
//! of surfaces in the exterior of a Montesinos tangle `T(1/3, -1/2; 4)`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The six special disks in a rational tangle space `T(p/q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpecialDiskType {
    /// `q` odd, boundary curve `c0`.
    A1,
    /// `q = 3`, boundary curve `c1`.
    A2,
    /// `q = 3`, boundary curve `c2`.
    A3,
    /// `q = 2`, boundary curve `c1`.
    A4,
    /// `q = 2`, boundary curve `c2`.
    A5,
    /// `q = 2`, boundary curve `c3`.
    A6,
}

impl SpecialDiskType {
    pub const ALL: [SpecialDiskType; 6] = [Self::A1, Self::A2, Self::A3, Self::A4, Self::A5, Self::A6];

    pub fn curve(self) -> &'static str {
        match self {
            Self::A1 => "c0",
            Self::A2 | Self::A4 => "c1",
            Self::A3 | Self::A5 => "c2",
            Self::A6 => "c3",
        }
    }

    pub fn allows(self, q: i64) -> bool {
        match self {
            Self::A1 => q.is_odd(),
            Self::A2 | Self::A3 => q == 3,
            Self::A4 | Self::A5 | Self::A6 => q == 2,
        }
    }
}

fn check_denominator(q: i64) -> Result<()> {
    if q < 2 || (q.is_even() && q != 2) {
        return Err(Error::Domain(format!("denominator {q} must be 2 or odd and at least 3")));
    }
    Ok(())
}

pub fn allowed_disk_types(q: i64) -> Result<BTreeSet<SpecialDiskType>> {
    check_denominator(q)?;
    Ok(SpecialDiskType::ALL.into_iter().filter(|t| t.allows(q)).collect())
}

/// Whether a side `T(1/q, ...)` can carry a surface meeting the upper string tube.
/// For `q > 3` only disks of type A1 exist there, which miss that tube.
pub fn montesinos_side_feasible(q: i64) -> Result<bool> {
    Ok(allowed_disk_types(q)?.contains(&SpecialDiskType::A2))
}

/// Weights `a1..a6` of the six disk types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[i64; 6]", try_from = "[i64; 6]")]
pub struct DiskWeights(pub [i64; 6]);

impl From<DiskWeights> for [i64; 6] {
    fn from(w: DiskWeights) -> Self {
        w.0
    }
}

impl TryFrom<[i64; 6]> for DiskWeights {
    type Error = Error;
    fn try_from(a: [i64; 6]) -> Result<Self> {
        let w = DiskWeights(a);
        w.check()?;
        Ok(w)
    }
}

impl DiskWeights {
    /// Nonnegativity, `a2 = a3`, `a4 = a5 = a1 + a2` and `2 a2 = a5 + 2 a6`.
    pub fn check(&self) -> Result<()> {
        let [a1, a2, a3, a4, a5, a6] = self.0;
        let ok = self.0.iter().all(|&a| a >= 0) && a2 == a3 && a4 == a5 && a4 == a1 + a2 && 2 * a2 == a5 + 2 * a6;
        if ok {
            Ok(())
        } else {
            Err(Error::Contract(format!("weights {:?} violate the matching equations", self.0)))
        }
    }
}

fn half(n: i64) -> Result<i64> {
    if n <= 0 || n.is_odd() {
        return Err(Error::Domain(format!("n = {n} must be a positive even integer")));
    }
    Ok(n / 2)
}

/// The unique weights for `n` meridian intersections and `s` disks of type A6.
pub fn solve_weights(n: i64, s: i64) -> Result<DiskWeights> {
    let r = half(n)?;
    if !(0..=r).contains(&s) {
        return Err(Error::Domain(format!("s = {s} is outside [0, {r}]")));
    }
    let w = DiskWeights([r - s, r + s, r + s, n, n, s]);
    w.check()?;
    Ok(w)
}

/// How the weighted train track on one side splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TrainTrackType {
    /// `r - s > s > 0`
    TT1,
    /// `s > r - s > 0`
    TT2,
    /// `s = 0`
    TT3,
    /// `s = r`
    TT4,
    /// `r - s = s`
    TT5,
}

impl fmt::Display for TrainTrackType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn train_track_type(r: i64, s: i64) -> Result<TrainTrackType> {
    if r < 1 || !(0..=r).contains(&s) {
        return Err(Error::Domain(format!("need r >= 1 and 0 <= s <= r, got r = {r}, s = {s}")));
    }
    Ok(if r - s == s {
        TrainTrackType::TT5
    } else if s == 0 {
        TrainTrackType::TT3
    } else if s == r {
        TrainTrackType::TT4
    } else if r - s > s {
        TrainTrackType::TT1
    } else {
        TrainTrackType::TT2
    })
}

/// Relative framing contribution of each disk type for the A2∪A3 and A4∪A5 pairs,
/// indexed by `a1, a2, a4, a6`.
fn disk_framings(eps: i64) -> [i64; 4] {
    [6, 4, -2 * eps, 0]
}

/// Framing of the surface in `T(1/3, -1/2)`: `(5 - 2ε) n - 2s`.
pub fn theta_montesinos(n: i64, s: i64, eps: i64) -> Result<i64> {
    check_sign(eps, "epsilon")?;
    let w = solve_weights(n, s)?.0;
    let by_formula = (5 - 2 * eps) * n - 2 * s;
    let [t1, t2, t4, t6] = disk_framings(eps);
    let by_disks = w[0] * t1 + w[1] * t2 + w[3] * t4 + w[5] * t6;
    if by_formula != by_disks {
        return Err(Error::Contract(format!("framing {by_formula} disagrees with disk sum {by_disks}")));
    }
    Ok(by_formula)
}

/// Change from untwisting the `n` bottom half twists: `(2 - 2ε) n`.
pub fn twist_correction(n: i64, eps: i64) -> i64 {
    (2 - 2 * eps) * n
}

/// Change from sliding the `n` endpoints clockwise around the boundary: `-n`.
pub fn rotation_correction(n: i64) -> i64 {
    -n
}

fn check_sign(v: i64, what: &str) -> Result<()> {
    if v == 1 || v == -1 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be +1 or -1, got {v}")))
    }
}

/// `(n, r, s, ε, σ)` for one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramingContext {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub epsilon: i64,
    pub sigma: i64,
}

impl FramingContext {
    pub fn new(n: i64, s: i64, epsilon: i64, sigma: i64) -> Result<Self> {
        let r = half(n)?;
        if !(0..=r).contains(&s) {
            return Err(Error::Domain(format!("s = {s} is outside [0, {r}]")));
        }
        check_sign(epsilon, "epsilon")?;
        check_sign(sigma, "sigma")?;
        Ok(FramingContext { n, r, s, epsilon, sigma })
    }
}

/// Framing of the surface in `T(1/3, -1/2; 4)` (σ = +1) or its mirror (σ = -1): `σ((6 - 4ε) n - 2s)`.
pub fn theta_twisted_side(ctx: &FramingContext) -> i64 {
    ctx.sigma * ((6 - 4 * ctx.epsilon) * ctx.n - 2 * ctx.s)
}

/// Framing after the half-twist normalization of a type 1/2 track: `(4 - 4ε) n - 2 s2`.
pub fn type12_half_twist_correction(n: i64, eps: i64, s2: i64) -> i64 {
    (4 - 4 * eps) * n - 2 * s2
}

/// Integer data of a boundary slope: `m` circles of slope `p/q`, with `m q = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurgerySlope {
    pub p: i64,
    pub q: i64,
    pub m: i64,
}

impl SurgerySlope {
    pub fn is_integral(&self) -> bool {
        self.q == 1
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{} ({} circles)", self.p, self.m)
        } else {
            write!(f, "{}/{} ({} circles)", self.p, self.q, self.m)
        }
    }
}

/// `m p = θ1 + θ2` and `m q = n`.
pub fn boundary_slope(theta1: i64, theta2: i64, n: i64) -> Result<SurgerySlope> {
    half(n)?;
    let total = theta1 + theta2;
    let m = total.gcd(&n);
    Ok(SurgerySlope { p: total / m, q: n / m, m })
}

/// Residue of `θ1 + θ2` mod `n` when one side has a type 1/2 track with `s2` type A6 disks.
///
/// Matching the two tracks forces `2 s1 = r - 2 s2`; after normalizing the
/// type 1/2 side by a half twist the sum is `(10 - 8ε) n - r ≡ r`.
pub fn type12_obstruction_residue(n: i64, eps: i64, s2: i64) -> Result<i64> {
    let r = half(n)?;
    check_sign(eps, "epsilon")?;
    let theta1 = (6 - 4 * eps) * n - (r - 2 * s2);
    let theta2 = type12_half_twist_correction(n, eps, s2);
    Ok((theta1 + theta2).rem_euclid(n))
}

/// Residue of `θ1 + θ2` mod `n` when a type 5 track (`2 s1 = r`) meets a type 3 or 4 track.
pub fn type34_mixed_residue(n: i64) -> Result<i64> {
    let r = half(n)?;
    // Each framing is ≡ -2s mod n; the type 3/4 side contributes 0 or -2r ≡ 0.
    Ok((-r).rem_euclid(n))
}

/// Everything needed to re-check one side's framing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FramingCertificate {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub epsilon: i64,
    pub sigma: i64,
    pub theta: i64,
    pub weights: DiskWeights,
    pub track_type: TrainTrackType,
}

impl FramingCertificate {
    pub fn new(ctx: &FramingContext) -> Result<Self> {
        Ok(FramingCertificate {
            n: ctx.n,
            r: ctx.r,
            s: ctx.s,
            epsilon: ctx.epsilon,
            sigma: ctx.sigma,
            theta: theta_twisted_side(ctx),
            weights: solve_weights(ctx.n, ctx.s)?,
            track_type: train_track_type(ctx.r, ctx.s)?,
        })
    }

    /// Recomputes every field from `(n, s, ε, σ)`.
    pub fn verify(&self) -> bool {
        FramingContext::new(self.n, self.s, self.epsilon, self.sigma)
            .and_then(|ctx| FramingCertificate::new(&ctx))
            .is_ok_and(|c| c == *self)
    }
}
