//! Exhaustive search over side tangles, train-track types and gluing maps for
//! integral boundary slopes of punctured tori, with re-checkable certificates.

mod catalog;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use catalog::{build_catalog, catalog_entry, catalog_side, KnotCatalogEntry, KnotId};

use crate::diagram::{jones, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::framing::{
    boundary_slope, theta_twisted_side, train_track_type, type12_half_twist_correction, FramingCertificate,
    FramingContext, SurgerySlope, TrainTrackType,
};
use crate::tangle::{enumerate_gluings, glue_diagram, standard_eta, EndpointLabel, GluedDiagram, GluingMap};

/// String-orientation sign of the `T(±1/2)` leaf on `side` (1 or 2) of a glued knot:
/// `+1` when both strings run the same way between the upper and lower endpoints.
pub fn epsilon_of(glued: &GluedDiagram, side: u8) -> Result<i64> {
    if !(1..=2).contains(&side) {
        return Err(Error::Domain(format!("side must be 1 or 2, got {side}")));
    }
    let count = glued.oriented.components().count;
    if count != 1 {
        return Err(Error::Domain(format!("the glued diagram has {count} components, not a knot")));
    }
    let halves: Vec<usize> = glued.leaves[side as usize - 1]
        .iter()
        .enumerate()
        .filter(|(_, s)| s.denominator() == 2)
        .map(|(i, _)| i)
        .collect();
    let [leaf] = halves[..] else {
        return Err(Error::Domain(format!("side {side} has {} leaves of denominator 2, need one", halves.len())));
    };
    let entering = |l| glued.markers[&(side, leaf, l)].entering;
    Ok(if entering(EndpointLabel::NW) == entering(EndpointLabel::NE) { 1 } else { -1 })
}

/// Whether the result is backed by the explicit surface at `n = 4` or only by the slope arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultStatus {
    Constructed,
    SlopeCandidate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: i64,
    pub sides: [FramingCertificate; 2],
    pub gluing: GluingMap,
    pub component_count: usize,
    /// Gluing maps giving this knot with an integral slope; all have equal Jones polynomials.
    pub knot_gluings: usize,
    /// Distinct nonzero residues `θ1 + θ2 mod n` of the rejected branches.
    pub rejected_residues: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub knot_id: KnotId,
    pub slope: SurgerySlope,
    pub status: ResultStatus,
    pub certificate: Certificate,
}

/// Why a branch of the search was discarded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectionKind {
    /// A side carries a type 1 or 2 track; the slope residue is `r mod n`.
    Type12Track,
    /// A type 5 track meets a type 3 or 4 track; the slope residue is `r mod n`.
    MixedTrack,
    /// Both tracks are of type 3 or 4, which separates the strings.
    SeparatedStrings,
    /// The gluing map joins the strings into a two-component link.
    LinkGluing,
    NonIntegralSlope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub branch: String,
    pub kind: RejectionKind,
    pub reason: String,
    pub residue: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: i64,
    pub results: Vec<ClassificationResult>,
    pub rejected: Vec<Rejection>,
}

/// What a gluing of two catalog sides looks like, independent of `n`.
#[derive(Debug, Clone)]
struct GluingOutcome {
    gluing: GluingMap,
    components: usize,
    epsilon: Option<[i64; 2]>,
    jones: Option<LaurentPolynomial>,
}

/// All eight gluings for each pair of side signs, computed once per process.
fn gluing_outcomes(sigma1: i64, sigma2: i64) -> &'static [GluingOutcome] {
    static TABLE: OnceLock<BTreeMap<(i64, i64), Vec<GluingOutcome>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut table = BTreeMap::new();
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                let (t1, t2) = (catalog_side(s1), catalog_side(s2));
                let outcomes = enumerate_gluings()
                    .into_iter()
                    .map(|g| {
                        let glued = glue_diagram(&t1, &t2, &g);
                        let components = glued.oriented.components().count;
                        let (epsilon, jones) = if components == 1 {
                            let eps = [1, 2].map(|side| epsilon_of(&glued, side).expect("catalog knot"));
                            (Some(eps), Some(jones(&glued.oriented).expect("18 crossings is within the cap")))
                        } else {
                            (None, None)
                        };
                        GluingOutcome { gluing: g, components, epsilon, jones }
                    })
                    .collect();
                table.insert((s1, s2), outcomes);
            }
        }
        table
    });
    &table[&(sigma1, sigma2)]
}

struct Survivor {
    sigma: (i64, i64),
    s: (i64, i64),
    outcome: &'static GluingOutcome,
    sides: [FramingCertificate; 2],
    slope: SurgerySlope,
}

/// Runs the full pipeline for one even `n`, keeping the rejected branches.
pub fn classify_report(n: i64) -> Result<ClassificationReport> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Domain(format!("n = {n} must be an even integer at least 2")));
    }
    let r = n / 2;
    let mut rejected = Vec::new();
    let mut survivors = Vec::new();
    for sigma1 in [1, -1] {
        for sigma2 in [1, -1] {
            for s1 in 0..=r {
                for s2 in 0..=r {
                    let branch = format!("sigma=({sigma1:+},{sigma2:+}) s=({s1},{s2})");
                    let types = (train_track_type(r, s1)?, train_track_type(r, s2)?);
                    if let Some(rej) = reject_by_track_types(n, (sigma1, sigma2), (s1, s2), types, &branch)? {
                        rejected.push(rej);
                        continue;
                    }
                    for outcome in gluing_outcomes(sigma1, sigma2) {
                        let branch = format!("{branch} gluing=[{}]", outcome.gluing);
                        let Some(eps) = outcome.epsilon else {
                            rejected.push(Rejection {
                                branch,
                                kind: RejectionKind::LinkGluing,
                                reason: format!("gluing gives a {}-component link", outcome.components),
                                residue: None,
                            });
                            continue;
                        };
                        let side = |sigma, s, e| FramingCertificate::new(&FramingContext::new(n, s, e, sigma)?);
                        let sides = [side(sigma1, s1, eps[0])?, side(sigma2, s2, eps[1])?];
                        let slope = boundary_slope(sides[0].theta, sides[1].theta, n)?;
                        if !slope.is_integral() {
                            rejected.push(Rejection {
                                branch,
                                kind: RejectionKind::NonIntegralSlope,
                                reason: format!("non-integral slope {}/{}", slope.p, slope.q),
                                residue: Some((sides[0].theta + sides[1].theta).rem_euclid(n)),
                            });
                            continue;
                        }
                        survivors.push(Survivor { sigma: (sigma1, sigma2), s: (s1, s2), outcome, sides, slope });
                    }
                }
            }
        }
    }
    let residues: Vec<i64> = rejected
        .iter()
        .filter_map(|r| r.residue)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let results = collapse(n, survivors, &residues)?;
    Ok(ClassificationReport { n, results, rejected })
}

/// Track-type obstructions that do not need a diagram.
fn reject_by_track_types(
    n: i64,
    sigma: (i64, i64),
    s: (i64, i64),
    types: (TrainTrackType, TrainTrackType),
    branch: &str,
) -> Result<Option<Rejection>> {
    use TrainTrackType::*;
    let r = n / 2;
    let is12 = |t| matches!(t, TT1 | TT2);
    let is34 = |t| matches!(t, TT3 | TT4);
    // Catalog sides have consistently oriented T(±1/2) strings.
    let eps = 1;
    if is12(types.0) || is12(types.1) {
        // Normalize the type 1/2 track by a half twist and match edge weights with the other side.
        let s2 = if is12(types.1) { s.1 } else { s.0 };
        let theta1 = (6 - 4 * eps) * n - (r - 2 * s2);
        let theta2 = type12_half_twist_correction(n, eps, s2);
        return Ok(Some(Rejection {
            branch: branch.to_string(),
            kind: RejectionKind::Type12Track,
            reason: "type 1/2 train track".into(),
            residue: Some((theta1 + theta2).rem_euclid(n)),
        }));
    }
    if is34(types.0) && is34(types.1) {
        return Ok(Some(Rejection {
            branch: branch.to_string(),
            kind: RejectionKind::SeparatedStrings,
            reason: "type 3/4 tracks on both sides separate the strings: a link".into(),
            residue: None,
        }));
    }
    if is34(types.0) || is34(types.1) {
        let theta = |sigma, s| -> Result<i64> { Ok(theta_twisted_side(&FramingContext::new(n, s, eps, sigma)?)) };
        let sum = theta(sigma.0, s.0)? + theta(sigma.1, s.1)?;
        return Ok(Some(Rejection {
            branch: branch.to_string(),
            kind: RejectionKind::MixedTrack,
            reason: "type 5 track glued to a type 3/4 track".into(),
            residue: Some(sum.rem_euclid(n)),
        }));
    }
    Ok(None)
}

fn collapse(n: i64, survivors: Vec<Survivor>, residues: &[i64]) -> Result<Vec<ClassificationResult>> {
    let mut by_knot: BTreeMap<KnotId, Vec<Survivor>> = BTreeMap::new();
    for s in survivors {
        by_knot.entry(KnotId::from_sides(s.sigma.0, s.sigma.1)).or_default().push(s);
    }
    let mut results = Vec::new();
    for (id, group) in by_knot {
        let first = &group[0];
        for s in &group {
            if s.outcome.jones != first.outcome.jones {
                return Err(Error::Contract(format!("{id}: gluings with equal side data give different Jones polynomials")));
            }
            if s.slope != first.slope {
                return Err(Error::Contract(format!("{id}: gluings give different slopes")));
            }
        }
        // Canonical representative: sides sorted by sign, standard gluing when available.
        let eta = standard_eta();
        let canonical = group
            .iter()
            .filter(|s| s.sigma.0 >= s.sigma.1)
            .min_by_key(|s| (s.outcome.gluing != eta, s.s, s.outcome.gluing))
            .unwrap_or(first);
        let knot_gluings = group
            .iter()
            .filter(|s| s.sigma == canonical.sigma && s.s == canonical.s)
            .count();
        results.push(ClassificationResult {
            knot_id: id,
            slope: canonical.slope,
            status: if n == 4 { ResultStatus::Constructed } else { ResultStatus::SlopeCandidate },
            certificate: Certificate {
                n,
                sides: canonical.sides,
                gluing: canonical.outcome.gluing,
                component_count: canonical.outcome.components,
                knot_gluings,
                rejected_residues: residues.to_vec(),
            },
        });
    }
    Ok(results)
}

/// Knot and integral slope pairs for `n` meridian intersections.
pub fn classify(n: i64) -> Result<Vec<ClassificationResult>> {
    Ok(classify_report(n)?.results)
}

/// Recomputes weights, framings, slope, component count and ε for a result.
pub fn verify_certificate(result: &ClassificationResult) -> bool {
    let c = &result.certificate;
    let side_ok = |f: &FramingCertificate| {
        f.verify() && f.n == c.n && f.track_type == TrainTrackType::TT5 && 2 * f.s == f.r
    };
    if !c.sides.iter().all(side_ok) {
        return false;
    }
    let (sigma1, sigma2) = (c.sides[0].sigma, c.sides[1].sigma);
    if KnotId::from_sides(sigma1, sigma2) != result.knot_id {
        return false;
    }
    let glued = glue_diagram(&catalog_side(sigma1), &catalog_side(sigma2), &c.gluing);
    let components = glued.oriented.components().count;
    if components != 1 || c.component_count != components {
        return false;
    }
    for (i, side) in c.sides.iter().enumerate() {
        if epsilon_of(&glued, i as u8 + 1).ok() != Some(side.epsilon) {
            return false;
        }
    }
    let (t1, t2) = (c.sides[0].theta, c.sides[1].theta);
    let Ok(slope) = boundary_slope(t1, t2, c.n) else {
        return false;
    };
    let counts_ok = slope.m * slope.p == t1 + t2 && slope.m * slope.q == c.n;
    let boundary_ok = c.n != 4 || slope.m == 4;
    slope == result.slope && slope.is_integral() && counts_ok && boundary_ok
}
