use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trace_forge::census::{self, census_bound};
use trace_forge::oracle::parse_polynomial_list;
use trace_forge::parse::{parse_ideal_over, parse_semigroup};
use trace_forge::report::{self, Status};
use trace_forge::{Error, RationalAlgebra, RationalIdeal, SemigroupIdeal};

const EXIT_USAGE: u8 = 1;
const EXIT_MATH: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;
const EXIT_PRECISION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "trace-forge",
    version,
    about = "Trace ideals, stable ideals and Arf rings of numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Semigroup invariants and ring-classification flags.
    Sgp {
        #[command(subcommand)]
        command: SgpCommand,
    },
    /// One operation on a monomial ideal.
    Ideal {
        op: IdealOp,
        /// Generators `5,12` or a tail-notation set `{5,8,10->}`.
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long)]
        sgp: String,
        #[arg(long)]
        json: bool,
    },
    /// All ideals containing the conductor, optionally filtered.
    Census {
        #[arg(long)]
        sgp: String,
        #[arg(long, value_enum, default_value_t = CensusKind::All)]
        kind: CensusKind,
        #[arg(long)]
        json: bool,
    },
    /// Monomial trace ideals with integral closure `{h in H : h >= min}`.
    Tfiber {
        #[arg(long)]
        sgp: String,
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long)]
        json: bool,
    },
    /// Non-monomial ideals through exact linear algebra modulo `t^N`.
    Oracle {
        op: OracleOp,
        /// Comma-separated algebra generators, e.g. `t^4, t^5, t^6`.
        #[arg(long, allow_hyphen_values = true)]
        algebra: String,
        /// Comma-separated ideal generators, e.g. `t^4 - t^5, t^6`.
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        /// Working precision `N`; chosen automatically when absent.
        #[arg(long)]
        precision: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Runs every worked example and law check; exits 3 if any fails.
    VerifyPaper {
        /// Write the JSON report to PATH, or to stdout without a path.
        #[arg(long, value_name = "PATH", num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
    },
}

#[derive(Subcommand)]
enum SgpCommand {
    Info {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealOp {
    Trace,
    Stable,
    Dual,
    Closure,
    Reflexive,
    Blowup,
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusKind {
    All,
    Trace,
    StableTrace,
    IntegrallyClosed,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleOp {
    Trace,
    Stable,
    Closure,
}

/// A failed command: an exit code and a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            _ if e.is_precision_failure() => EXIT_PRECISION,
            Error::Parse(_) | Error::EmptyInput => EXIT_USAGE,
            _ => EXIT_MATH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn emit(json_mode: bool, value: Value, human: impl FnOnce() -> String) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serialisable")
        );
    } else {
        println!("{}", human());
    }
}

fn list(items: &[i64]) -> String {
    items
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn ideal_value(e: &SemigroupIdeal) -> Value {
    let mut v = serde_json::to_value(e.to_json()).expect("serialisable");
    v["display"] = json!(e.to_string());
    v
}

fn sgp_info(gens: &str, json_mode: bool) -> Outcome {
    let h = parse_semigroup(gens)?;
    let flags = h.gorenstein_flavors();
    let k = h.canonical_ideal();
    let value = json!({
        "minimalGenerators": h.minimal_generators(),
        "frobenius": h.frobenius(),
        "conductor": h.conductor(),
        "multiplicity": h.multiplicity(),
        "embeddingDimension": h.embedding_dimension(),
        "gaps": h.gaps(),
        "genus": h.genus(),
        "canonicalIdeal": k.to_string(),
        "arfClosure": h.arf_closure().minimal_generators(),
        "flags": flags,
    });
    emit(json_mode, value, || {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = vec![
            format!(
                "semigroup            {h}{}",
                if h.is_naturals() {
                    " (the naturals)"
                } else {
                    ""
                }
            ),
            format!("frobenius            {}", h.frobenius()),
            format!("conductor            {}", h.conductor()),
            format!("multiplicity         {}", h.multiplicity()),
            format!("embedding dimension  {}", h.embedding_dimension()),
            format!("gaps                 {{{}}}", list(&h.gaps())),
            format!("canonical ideal      {k}"),
            format!("arf closure          {}", h.arf_closure()),
        ];
        out.push(format!("gorenstein           {}", yes(flags.gorenstein)));
        out.push(format!(
            "nearly gorenstein    {}",
            yes(flags.nearly_gorenstein)
        ));
        out.push(format!(
            "almost gorenstein    {}",
            yes(flags.almost_gorenstein)
        ));
        out.push(format!(
            "minimal multiplicity {}",
            yes(flags.minimal_multiplicity)
        ));
        out.push(format!("arf                  {}", yes(flags.arf)));
        out.join("\n")
    });
    Ok(0)
}

fn ideal_op(op: IdealOp, gens: &str, sgp: &str, json_mode: bool) -> Outcome {
    let h = parse_semigroup(sgp)?;
    let e = parse_ideal_over(&h, gens)?;
    let (name, result, human) = match op {
        IdealOp::Trace => {
            let t = e.trace();
            ("trace", ideal_value(&t), t.to_string())
        }
        IdealOp::Dual => {
            let d = e.dual();
            ("dual", ideal_value(&d), d.to_string())
        }
        IdealOp::Closure => {
            let c = e.integral_closure()?;
            ("closure", ideal_value(&c), c.to_string())
        }
        IdealOp::Stable => {
            let s = e.is_stable();
            ("stable", json!(s), s.to_string())
        }
        IdealOp::Reflexive => {
            let r = e.is_reflexive();
            let d = e.is_self_dual();
            (
                "reflexive",
                json!({ "reflexive": r, "selfDual": d }),
                format!("reflexive {r}\nself-dual {d}"),
            )
        }
        IdealOp::Blowup => {
            let b = e.blowup();
            let c = e.blowup_conductor();
            (
                "blowup",
                json!({ "blowup": ideal_value(&b), "conductor": ideal_value(&c) }),
                format!("blowup    {b}\nconductor {c}"),
            )
        }
    };
    let value = json!({
        "operation": name,
        "semigroup": h.minimal_generators(),
        "ideal": ideal_value(&e),
        "result": result,
    });
    emit(json_mode, value, || human);
    Ok(0)
}

fn census_cmd(sgp: &str, kind: CensusKind, json_mode: bool) -> Outcome {
    let h = parse_semigroup(sgp)?;
    let bound = census_bound();
    let ideals = match kind {
        CensusKind::All => census::conductor_ideals(&h, bound)?,
        CensusKind::Trace => census::trace_ideals(&h, bound)?,
        CensusKind::StableTrace => census::stable_trace_ideals(&h, bound)?,
        CensusKind::IntegrallyClosed => census::integrally_closed_ideals(&h, bound)?,
    };
    let value = json!({
        "semigroup": h.minimal_generators(),
        "count": ideals.len(),
        "ideals": ideals.iter().map(|e| {
            let mut v = ideal_value(e);
            v["trace"] = json!(e.is_trace_ideal());
            v["stable"] = json!(e.is_stable());
            v
        }).collect::<Vec<_>>(),
    });
    emit(json_mode, value, || {
        let mut out = vec![format!("{} ideals over {h}", ideals.len())];
        for e in &ideals {
            let mut tags = Vec::new();
            if e.is_trace_ideal() {
                tags.push("trace");
            }
            if e.is_stable() {
                tags.push("stable");
            }
            out.push(
                format!("  {:<24} {}", e.to_string(), tags.join(" "))
                    .trim_end()
                    .to_string(),
            );
        }
        out.join("\n")
    });
    Ok(0)
}

fn tfiber_cmd(sgp: &str, m: i64, json_mode: bool) -> Outcome {
    let h = parse_semigroup(sgp)?;
    let fiber = census::trace_fiber(&h, m, census_bound())?;
    let value = serde_json::to_value(&fiber).expect("serialisable");
    emit(json_mode, value, || {
        let mut out = vec![format!(
            "trace ideals with closure {} (monomial members only)",
            fiber.closure
        )];
        for member in &fiber.members {
            let tag = if member.stable { "stable" } else { "" };
            out.push(
                format!("  {:<24} {tag}", member.ideal.to_string())
                    .trim_end()
                    .to_string(),
            );
        }
        if fiber.members.is_empty() {
            out.push("  (empty)".into());
        }
        out.join("\n")
    });
    Ok(0)
}

/// The algebra at precision `N`: as requested, or the least admissible
/// value `max(4c + 4, 3c + maxdeg)` for the ideal generators.
fn build_algebra(
    algebra: &str,
    max_degree: usize,
    precision: Option<usize>,
) -> Result<Arc<RationalAlgebra>, Error> {
    let gens = parse_polynomial_list(algebra)?;
    let built = match precision {
        Some(n) => RationalAlgebra::build(gens, n)?,
        None => {
            let probe = RationalAlgebra::build_auto(gens.clone(), 0)?;
            let c = probe.conductor();
            let n = (4 * c + 4).max(3 * c + max_degree + 1);
            if n == probe.precision() {
                probe
            } else {
                RationalAlgebra::build(gens, n)?
            }
        }
    };
    Ok(Arc::new(built))
}

fn oracle_cmd(
    op: OracleOp,
    algebra: &str,
    ideal: &str,
    precision: Option<usize>,
    json_mode: bool,
) -> Outcome {
    let gens = parse_polynomial_list(ideal)?;
    let max_degree = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let a = build_algebra(algebra, max_degree, precision)?;
    let i = RationalIdeal::from_generators(&a, &gens)?;
    let describe = |j: &RationalIdeal| {
        json!({
            "valuationSet": j.valuation_set().to_string(),
            "generators": j.low_generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "precision": j.precision(),
        })
    };
    let (name, result) = match op {
        OracleOp::Trace => ("trace", describe(&i.trace()?)),
        OracleOp::Closure => ("closure", describe(&i.integral_closure()?)),
        OracleOp::Stable => ("stable", json!(i.is_stable()?)),
    };
    let value = json!({
        "operation": name,
        "valueSemigroup": a.value_semigroup().minimal_generators(),
        "precision": a.precision(),
        "ideal": describe(&i),
        "result": result,
    });
    emit(json_mode, value.clone(), || {
        let mut out = vec![
            format!(
                "value semigroup {}, N = {}",
                a.value_semigroup(),
                a.precision()
            ),
            format!("ideal values    {}", i.valuation_set()),
        ];
        match &value["result"] {
            Value::Bool(b) => out.push(format!("{name:<16}{b}")),
            r => {
                out.push(format!(
                    "{:<16}{}",
                    format!("{name} values"),
                    r["valuationSet"].as_str().unwrap_or("")
                ));
                out.push(format!(
                    "generators      {}",
                    r["generators"].as_array().map_or(String::new(), |g| {
                        g.iter()
                            .filter_map(Value::as_str)
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                ));
            }
        }
        out.join("\n")
    });
    Ok(0)
}

fn verify_paper(json_target: Option<Option<PathBuf>>) -> Outcome {
    let report = report::run();
    let text = serde_json::to_string_pretty(&report).expect("serialisable");
    match &json_target {
        Some(None) => println!("{text}"),
        Some(Some(path)) => std::fs::write(path, &text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        })?,
        None => {}
    }
    if !matches!(json_target, Some(None)) {
        for item in &report.items {
            let status = match item.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            println!("{status:<5} {}", item.id);
        }
        let s = &report.summary;
        println!(
            "{} items: {} passed, {} failed, {} skipped",
            s.total, s.pass, s.fail, s.skipped
        );
    }
    Ok(if report.has_failures() {
        EXIT_VERIFICATION
    } else {
        0
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Sgp {
            command: SgpCommand::Info { gens, json },
        } => sgp_info(&gens, json),
        Command::Ideal {
            op,
            gens,
            sgp,
            json,
        } => ideal_op(op, &gens, &sgp, json),
        Command::Census { sgp, kind, json } => census_cmd(&sgp, kind, json),
        Command::Tfiber { sgp, min, json } => tfiber_cmd(&sgp, min, json),
        Command::Oracle {
            op,
            algebra,
            ideal,
            precision,
            json,
        } => oracle_cmd(op, &algebra, &ideal, precision, json),
        Command::VerifyPaper { json } => verify_paper(json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
