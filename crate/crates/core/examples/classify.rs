//! Full search for integral toroidal slopes; pass `n` as the first argument (default 4).
use std::collections::BTreeMap;

use arborescent::classifier::classify_report;

fn main() -> arborescent::Result<()> {
    let n = std::env::args().nth(1).map_or(Ok(4), |a| a.parse()).expect("n must be an integer");
    let report = classify_report(n)?;
    for r in &report.results {
        println!("{} slope {} with {} boundary circles ({:?})", r.knot_id, r.slope.p, r.slope.m, r.status);
    }
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
    for rej in &report.rejected {
        *kinds.entry(format!("{:?}", rej.kind)).or_default() += 1;
    }
    println!("rejected branches: {kinds:?}");
    Ok(())
}
