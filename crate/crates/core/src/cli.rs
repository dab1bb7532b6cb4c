//! Command-line front end. [`run`] returns the exit code and stdout so it can be tested in-process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::classifier::{self, build_catalog, verify_certificate, ClassificationReport, ClassificationResult, KnotId};
use crate::diagram::{jones, OrientedDiagram, PDCode};
use crate::error::{Error, Result};
use crate::framing::{
    boundary_slope, rotation_correction, theta_montesinos, twist_correction, FramingCertificate, FramingContext,
};
use crate::tangle::{compile, TangleExpr};

#[derive(Debug, Parser)]
#[command(name = "arborescent", version, about = "Tangles, framings and integral toroidal surgery slopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build tangle diagrams and their closures.
    #[command(subcommand)]
    Tangle(TangleCommand),
    /// Knot invariants and the catalog of glued knots.
    #[command(subcommand)]
    Knot(KnotCommand),
    /// Evaluate the framing formulas for one side.
    #[command(subcommand)]
    Framing(FramingCommand),
    /// Run the full classification for `n` meridian intersections.
    Classify {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        json: bool,
    },
    /// Re-check a classification result, or every result in a report.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum TangleCommand {
    Build {
        #[arg(short, long)]
        expr: String,
        /// Print the PD code as JSON instead of a summary.
        #[arg(long)]
        pd: bool,
    },
    Closure {
        #[arg(short, long)]
        expr: String,
        #[command(flatten)]
        which: ClosureKind,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ClosureKind {
    #[arg(long)]
    numerator: bool,
    #[arg(long)]
    denominator: bool,
}

#[derive(Debug, Subcommand)]
enum KnotCommand {
    Invariants {
        #[arg(long)]
        pd: PathBuf,
        #[arg(long)]
        jones: bool,
    },
    Catalog {
        #[arg(long)]
        id: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum FramingCommand {
    Eval {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        s: i64,
        #[arg(long, allow_hyphen_values = true)]
        eps: i64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: i64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Contract(_) => 1,
        Error::Malformed(_) => 2,
        Error::Resource(_) => 3,
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
///
/// Exit codes: 0 success, 1 domain error or failed verification, 2 malformed input, 3 resource limit.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli.command) {
        Ok((code, out)) => (code, out),
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report types serialize")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn dispatch(command: Command) -> Result<(i32, String)> {
    let mut out = String::new();
    match command {
        Command::Tangle(TangleCommand::Build { expr, pd }) => {
            let t: TangleExpr = expr.parse()?;
            let d = compile(&t);
            if pd {
                writeln!(out, "{}", d.pd.to_json()).unwrap();
            } else {
                writeln!(out, "tangle: {t}").unwrap();
                writeln!(out, "crossings: {}", d.crossing_count()).unwrap();
                writeln!(out, "strings: {}", d.string_pairing).unwrap();
            }
        }
        Command::Tangle(TangleCommand::Closure { expr, which }) => {
            let t: TangleExpr = expr.parse()?;
            let d = compile(&t);
            let closed = if which.numerator { d.numerator_closure() } else { d.denominator_closure() };
            writeln!(out, "{}", closed.pd().to_json()).unwrap();
            writeln!(out, "components: {}", closed.components().count).unwrap();
        }
        Command::Knot(KnotCommand::Invariants { pd, jones: with_jones }) => {
            let pd = PDCode::from_json(&read(&pd)?)?;
            if !pd.is_closed() {
                return Err(Error::Domain("invariants need a closed diagram".into()));
            }
            let od = OrientedDiagram::from_pd(pd)?;
            writeln!(out, "crossings: {}", od.pd().crossings.len()).unwrap();
            writeln!(out, "components: {}", od.components().count).unwrap();
            writeln!(out, "writhe: {}", od.writhe()).unwrap();
            if with_jones {
                writeln!(out, "jones: {}", jones(&od)?.display("t")).unwrap();
            }
        }
        Command::Knot(KnotCommand::Catalog { id }) => {
            let wanted = id.map(|s| s.parse::<KnotId>()).transpose()?;
            for e in build_catalog().into_iter().filter(|e| wanted.map_or(true, |w| w == e.id)) {
                writeln!(out, "{}", to_json(&e)).unwrap();
            }
        }
        Command::Framing(FramingCommand::Eval { n, s, eps, sigma }) => {
            let ctx = FramingContext::new(n, s, eps, sigma)?;
            let cert = FramingCertificate::new(&ctx)?;
            let montesinos = theta_montesinos(n, s, eps)?;
            let twist = twist_correction(n, eps);
            let rotation = rotation_correction(n);
            writeln!(out, "{}", to_json(&cert)).unwrap();
            writeln!(out, "weights: {:?}", cert.weights.0).unwrap();
            writeln!(out, "theta: {} = {montesinos} (untwisted) + {twist} (twist) + {rotation} (rotation), times sigma", cert.theta).unwrap();
            let doubled = boundary_slope(cert.theta, cert.theta, n)?;
            writeln!(out, "slope contribution: {}/{n}; glued to an identical side: {doubled}", cert.theta).unwrap();
        }
        Command::Classify { n, json } => {
            let report = classifier::classify_report(n)?;
            if json {
                writeln!(out, "{}", to_json(&report)).unwrap();
            } else {
                write_report(&mut out, &report);
            }
        }
        Command::Verify { certificate } => {
            let text = read(&certificate)?;
            let results = parse_results(&text)?;
            let mut all = true;
            for r in &results {
                let ok = verify_certificate(r);
                all &= ok;
                writeln!(out, "{} slope {}: {}", r.knot_id, r.slope.p, if ok { "verified" } else { "FAILED" }).unwrap();
            }
            return Ok((if all { 0 } else { 1 }, out));
        }
    }
    Ok((0, out))
}

fn parse_results(text: &str) -> Result<Vec<ClassificationResult>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("certificate JSON: {e}")))?;
    let parsed = if value.get("results").is_some() {
        serde_json::from_value::<ClassificationReport>(value).map(|r| r.results)
    } else if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value::<ClassificationResult>(value).map(|r| vec![r])
    };
    parsed.map_err(|e| Error::Malformed(format!("certificate JSON: {e}")))
}

fn write_report(out: &mut String, report: &ClassificationReport) {
    writeln!(out, "n = {}: {} result(s), {} rejected branch(es)", report.n, report.results.len(), report.rejected.len())
        .unwrap();
    for r in &report.results {
        let c = &r.certificate;
        writeln!(
            out,
            "{} slope {} boundary circles {} theta ({}, {}) epsilon ({}, {}) gluings {} [{:?}]",
            r.knot_id,
            r.slope.p,
            r.slope.m,
            c.sides[0].theta,
            c.sides[1].theta,
            c.sides[0].epsilon,
            c.sides[1].epsilon,
            c.knot_gluings,
            r.status,
        )
        .unwrap();
    }
    let mut reasons: std::collections::BTreeMap<&str, usize> = Default::default();
    for rej in &report.rejected {
        *reasons.entry(rej.reason.as_str()).or_default() += 1;
    }
    for (reason, count) in reasons {
        writeln!(out, "rejected {count}: {reason}").unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        run(std::iter::once("arborescent").chain(args.iter().copied()))
    }

    #[test]
    fn classify_text() {
        let (code, out) = run_args(&["classify", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("K1 slope 3 "), "{out}");
        assert!(out.contains("K2 slope 0 "));
        assert!(out.contains("K3 slope -3 "));
    }

    #[test]
    fn framing_eval() {
        let (code, out) = run_args(&["framing", "eval", "--n", "4", "--s", "1", "--eps", "1", "--sigma", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains(r#""theta":6"#));
        assert!(out.contains("weights: [1, 3, 3, 4, 4, 1]"));
        let (code, _) = run_args(&["framing", "eval", "--n", "4", "--s", "3", "--eps", "1", "--sigma", "-1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn tangle_build_zero() {
        let (code, out) = run_args(&["tangle", "build", "-e", "T(0/1)"]);
        assert_eq!(code, 0);
        assert!(out.contains("crossings: 0"));
        let (code, out) = run_args(&["tangle", "closure", "-e", "T(1/2)", "--numerator"]);
        assert_eq!(code, 0);
        assert!(out.contains("components: 2"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["tangle", "build", "-e", "T(1/"]).0, 2);
        assert_eq!(run_args(&["classify", "--n", "5"]).0, 1);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["knot", "catalog", "--id", "K9"]).0, 2);
    }
}
