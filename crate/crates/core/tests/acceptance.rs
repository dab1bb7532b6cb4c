//! End-to-end acceptance suite. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use arborescent::classifier::{
    build_catalog, catalog_entry, catalog_side, classify_report, epsilon_of, KnotId, RejectionKind, ResultStatus,
};
use arborescent::cli;
use arborescent::diagram::{jones, kauffman_bracket, OrientedDiagram};
use arborescent::framing::{
    rotation_correction, solve_weights, theta_montesinos, theta_twisted_side, twist_correction, FramingContext,
};
use arborescent::surface_index::{cut_along, cut_copies, fat_graph_index_sum, index, PatchLabel, SurfacePiece};
use arborescent::tangle::{enumerate_gluings, glue, glue_diagram, rational_tangle};
use arborescent::Slope;
use common::{braid_closure, random_torus_graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLASSIFY_BUDGET: Duration = Duration::from_secs(1);
const RESIDUE_BUDGET: Duration = Duration::from_secs(1);
const MIRROR_BUDGET: Duration = Duration::from_secs(10);
const FRAMING_SAMPLES: usize = 200;
const INDEX_SAMPLES: usize = 1000;
const MAX_RESIDUE_N: i64 = 64;
const MAX_CLOSURE_Q: i64 = 9;
const SEED: u64 = 0x5eed_2024;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn classification() -> Outcome {
    // Runs first so the gluing cache starts cold.
    let start = Instant::now();
    let (code, out) = cli::run(["arborescent", "classify", "--n", "4", "--json"]);
    let elapsed = start.elapsed();
    ensure(code == 0, format!("classify exited with {code}: {out}"))?;
    let report: arborescent::classifier::ClassificationReport =
        serde_json::from_str(out.trim()).map_err(|e| e.to_string())?;
    let found: BTreeSet<(KnotId, i64)> = report.results.iter().map(|r| (r.knot_id, r.slope.p)).collect();
    let expected = BTreeSet::from([(KnotId::K1, 3), (KnotId::K2, 0), (KnotId::K3, -3)]);
    ensure(report.results.len() == 3 && found == expected, format!("got {found:?}"))?;
    ensure(report.results.iter().all(|r| r.slope.q == 1), "non-integral slope in results")?;
    ensure(elapsed < CLASSIFY_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("(K1, 3), (K2, 0), (K3, -3) in {elapsed:?}"))
}

fn surface_data() -> Outcome {
    let w = solve_weights(4, 1).map_err(|e| e.to_string())?;
    ensure(w.0 == [1, 3, 3, 4, 4, 1], format!("weights {:?}", w.0))?;
    let report = classify_report(4).map_err(|e| e.to_string())?;
    for r in &report.results {
        ensure(r.slope.m == 4, format!("{} has {} boundary circles", r.knot_id, r.slope.m))?;
        ensure(r.status == ResultStatus::Constructed, format!("{} is not constructed", r.knot_id))?;
        for side in &r.certificate.sides {
            ensure(side.weights == w, format!("{} side weights {:?}", r.knot_id, side.weights.0))?;
        }
    }
    Ok("weights (1,3,3,4,4,1), m = 4 for every result".into())
}

fn framing_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..FRAMING_SAMPLES {
        let n = 2 * rng.gen_range(1..=500i64);
        let s = rng.gen_range(0..=n / 2);
        let eps = if rng.gen_bool(0.5) { 1 } else { -1 };
        let plus = FramingContext::new(n, s, eps, 1).map_err(|e| e.to_string())?;
        let minus = FramingContext::new(n, s, eps, -1).map_err(|e| e.to_string())?;
        let composed =
            theta_montesinos(n, s, eps).map_err(|e| e.to_string())? + twist_correction(n, eps) + rotation_correction(n);
        ensure(composed == theta_twisted_side(&plus), format!("composition fails at n={n} s={s} eps={eps}"))?;
        ensure(
            theta_twisted_side(&minus) == -theta_twisted_side(&plus),
            format!("negation fails at n={n} s={s} eps={eps}"),
        )?;
    }
    Ok(format!("{FRAMING_SAMPLES} samples"))
}

fn residue_obstructions() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in (2..=MAX_RESIDUE_N).step_by(2) {
        let report = classify_report(n).map_err(|e| e.to_string())?;
        for rej in &report.rejected {
            if matches!(rej.kind, RejectionKind::Type12Track | RejectionKind::MixedTrack) {
                let residue = rej.residue.ok_or_else(|| format!("n={n} {}: no residue", rej.branch))?;
                ensure(
                    residue == n / 2 && residue.rem_euclid(n) != 0,
                    format!("n={n} {}: residue {residue}", rej.branch),
                )?;
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(checked > 0, "no obstructed branches")?;
    ensure(elapsed < RESIDUE_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("{checked} branches over even n <= {MAX_RESIDUE_N} in {elapsed:?}"))
}

fn index_calculus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let labels = ["Q", "R", "S"];
    for i in 0..INDEX_SAMPLES {
        let mut piece = SurfacePiece::new(rng.gen_range(-6..3));
        for l in labels {
            piece = piece.with_arcs(l, rng.gen_range(0..10));
        }
        let q: BTreeSet<PatchLabel> = labels.iter().filter(|_| rng.gen_bool(0.5)).map(|&l| l.into()).collect();
        let qp = PatchLabel::new(format!("C{i}"));
        let (q1, q2) = cut_copies(&qp);
        let mut enlarged = q.clone();
        enlarged.extend([q1, q2]);
        let cut = cut_along(&piece, &qp, rng.gen_range(0..8), rng.gen_range(0..3));
        ensure(index(&cut, &enlarged) == index(&piece, &q), format!("cut {i} changes the index"))?;
    }
    for i in 0..INDEX_SAMPLES {
        let g = random_torus_graph(&mut rng);
        let sum = fat_graph_index_sum(&g).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(sum == 0, format!("graph {i} has index sum {sum}"))?;
    }
    Ok(format!("{INDEX_SAMPLES} cuts, {INDEX_SAMPLES} torus graphs"))
}

fn knot_filter() -> Outcome {
    let mut lines = Vec::new();
    for (a, b) in [(1, 1), (1, -1), (-1, -1)] {
        let (t1, t2) = (catalog_side(a), catalog_side(b));
        let mut survivors = Vec::new();
        for g in enumerate_gluings() {
            let pd = glue(&t1, &t2, &g);
            if pd.trace_components().map_err(|e| e.to_string())?.count == 1 {
                let od = OrientedDiagram::from_pd(pd).map_err(|e| e.to_string())?;
                survivors.push(jones(&od).map_err(|e| e.to_string())?);
            }
        }
        ensure(survivors.len() == 4, format!("sides ({a:+}, {b:+}): {} knots", survivors.len()))?;
        ensure(survivors.windows(2).all(|w| w[0] == w[1]), format!("sides ({a:+}, {b:+}): Jones differs"))?;
        lines.push(format!("({a:+},{b:+})"));
    }
    Ok(format!("4 of 8 gluings are knots with one Jones polynomial for sides {}", lines.join(" ")))
}

fn mirror_oracle() -> Outcome {
    let start = Instant::now();
    let k1 = catalog_entry(KnotId::K1).pd;
    let k3 = catalog_entry(KnotId::K3).pd;
    let b1 = kauffman_bracket(&k1).map_err(|e| e.to_string())?;
    let b3 = kauffman_bracket(&k3).map_err(|e| e.to_string())?;
    ensure(b3 == b1.invert_variable(), "bracket(K3) is not bracket(K1) at A^-1")?;
    let j1 = jones(&OrientedDiagram::from_pd(k1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let j3 = jones(&OrientedDiagram::from_pd(k3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(j3 == j1.invert_variable(), "jones(K3) is not jones(K1) at t^-1")?;
    ensure(j1 != j3, "K1 has a symmetric Jones polynomial; the check is vacuous")?;
    let elapsed = start.elapsed();
    ensure(elapsed < MIRROR_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("V(K1) = {} in {elapsed:?}", j1.display("t")))
}

fn epsilon_trace() -> Outcome {
    for e in build_catalog() {
        let glued = glue_diagram(&e.sides[0], &e.sides[1], &e.gluing);
        for side in [1, 2] {
            let eps = epsilon_of(&glued, side).map_err(|err| err.to_string())?;
            ensure(eps == 1, format!("{} side {side}: epsilon {eps}", e.id))?;
        }
    }
    Ok("epsilon = +1 on both sides of K1, K2, K3".into())
}

fn diagram_sanity() -> Outcome {
    let mut count = 0;
    for q in 1..=MAX_CLOSURE_Q {
        for p in -3 * q..=3 * q {
            let s = Slope::new(p, q).map_err(|e| e.to_string())?;
            if s.denominator() != q {
                continue;
            }
            let comps = rational_tangle(s).pd.clone();
            let closed = rational_tangle(s).numerator_closure();
            let n = closed.pd().trace_components().map_err(|e| e.to_string())?.count;
            ensure((n == 1) == (q % 2 == 1), format!("T({s}) numerator closure has {n} components"))?;
            ensure(comps.trace_components().map_err(|e| e.to_string())?.count == 2, format!("T({s}) has a loop"))?;
            count += 1;
        }
    }
    let bracket = |strands, word: &[i32]| kauffman_bracket(&braid_closure(strands, word)).map_err(|e| e.to_string());
    let moves: [(&str, usize, &[i32], &[i32]); 4] = [
        ("II", 3, &[1, 2, -2, 1], &[1, 1]),
        ("II", 2, &[1, 1, -1, 1, 1], &[1, 1, 1]),
        ("III", 3, &[1, 2, 1], &[2, 1, 2]),
        ("III", 3, &[-1, -2, -1, 2], &[-2, -1, -2, 2]),
    ];
    for (name, strands, a, b) in moves {
        ensure(bracket(strands, a)? == bracket(strands, b)?, format!("move {name}: {a:?} vs {b:?}"))?;
    }
    Ok(format!("{count} rational closures, {} move pairs", moves.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 classification at n = 4", classification),
        ("2 surface data", surface_data),
        ("3 framing identities", framing_identities),
        ("4 residue obstructions", residue_obstructions),
        ("5 index calculus", index_calculus),
        ("6 knot-vs-link filter", knot_filter),
        ("7 mirror symmetry", mirror_oracle),
        ("8 epsilon trace", epsilon_trace),
        ("9 diagram sanity", diagram_sanity),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
