//! Round-trip a certificate through JSON, re-check it, then tamper with it.
use arborescent::classifier::{classify, verify_certificate, ClassificationResult};

fn main() -> arborescent::Result<()> {
    let result = classify(4)?.into_iter().next().expect("n = 4 has results");
    let json = serde_json::to_string_pretty(&result).expect("results serialize");
    println!("{json}");
    let back: ClassificationResult = serde_json::from_str(&json).expect("and parse back");
    println!("verified: {}", verify_certificate(&back));
    let mut forged = back.clone();
    forged.slope.p += 1;
    println!("with the slope changed: {}", verify_certificate(&forged));
    Ok(())
}
