use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use e7tensor::coset72::{
    data_checksums, orbit_decompose_with, validate_table_with, CosetTable,
};
use e7tensor::tensor::{verify_decomposition, Decomposition};
use e7tensor::{
    character, coset_words, dim, paper_point_1param, subdominants, tensor_decompose, AlgebraId,
    DynkinWeight, Error, PointSampler, RatFunc, Rational,
};

const VERIFY_TRIALS: usize = 3;

#[derive(Parser)]
#[command(name = "e7tensor", version, about = "Exact characters and tensor products for A_n and E7")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weyl-formula dimension
    Dim(WeightArgs),
    /// Character value at the one-parameter point or a seeded rational point
    Char(WeightArgs),
    /// The 72 signed A7 weights of a strictly dominant E7 weight
    Orbit72(WeightArgs),
    /// Dominant weights strictly below a weight
    Subdom(WeightArgs),
    /// Decompose R(w) x R(w2) into irreducibles
    Tensor(WeightArgs),
    /// Check the coset table and the embedded data
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Rational,
    Poly1,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args)]
struct WeightArgs {
    /// a1 .. a7 or e7
    #[arg(long, value_parser = parse_algebra)]
    algebra: AlgebraId,
    /// Comma-separated Dynkin labels
    #[arg(long, value_parser = parse_labels, allow_hyphen_values = true)]
    w: Labels,
    /// Second weight, for `tensor`
    #[arg(long, value_parser = parse_labels, allow_hyphen_values = true)]
    w2: Option<Labels>,
    #[arg(long, value_enum, default_value = "rational")]
    backend: Backend,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

#[derive(Args)]
struct ValidateArgs {
    /// Coset table to check instead of the embedded one
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

fn parse_algebra(s: &str) -> Result<AlgebraId, String> {
    s.parse().map_err(|_| format!("unknown algebra `{s}` (expected a1..a7 or e7)"))
}

#[derive(Clone)]
struct Labels(Vec<i64>);

fn parse_labels(s: &str) -> Result<Labels, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
        .collect::<Result<_, _>>()
        .map(Labels)
}

enum Failure {
    Usage(String),
    Consistency(&'static str, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let invariant = match &e {
            Error::NoConsistentLabeling => "e7_labeling",
            Error::AmbiguousLabeling(_) => "e7_labeling",
            Error::Inconsistent => "linear_system_consistency",
            Error::RankDeficient { .. } => "full_column_rank",
            Error::NonIntegerSolution { .. } => "integer_coefficients",
            Error::NegativeCoefficient { .. } => "nonnegative_coefficients",
            Error::TopMultiplicity(_) => "top_multiplicity_one",
            Error::DimensionMismatch { .. } => "dimension_identity",
            Error::HeldOutMismatch(_) => "held_out_points",
            Error::NegativeRemainder(_) => "peeling_remainder",
            Error::Overflow(_) => "overflow",
            Error::TableParse(_) => "table_format",
            _ => return Failure::Usage(e.to_string()),
        };
        Failure::Consistency(invariant, e.to_string())
    }
}

type CmdResult = Result<(Value, String), Failure>;

fn weight(alg: AlgebraId, labels: &Labels, flag: &str) -> Result<DynkinWeight, Failure> {
    DynkinWeight::new(alg, labels.0.clone()).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn labels_text(w: &DynkinWeight) -> String {
    w.labels().iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Integers beyond `u64` are written as strings.
fn big(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| json!(n.to_string()), |v| json!(v))
}

fn poly_json(f: &RatFunc) -> Value {
    let coeffs = |p: &e7tensor::Poly<Rational>| -> Vec<String> {
        p.coeffs().iter().map(ToString::to_string).collect()
    };
    json!({ "numerator": coeffs(f.numer()), "denominator": coeffs(f.denom()) })
}

fn cmd_dim(a: &WeightArgs) -> CmdResult {
    let w = weight(a.algebra, &a.w, "w")?;
    let d = dim(&w)?;
    Ok((
        json!({ "algebra": a.algebra.to_string(), "weight": w.labels(), "dim": big(d) }),
        d.to_string(),
    ))
}

fn cmd_char(a: &WeightArgs) -> CmdResult {
    let w = weight(a.algebra, &a.w, "w")?;
    match a.backend {
        Backend::Poly1 => {
            if e7tensor::SpecPoint::<Rational>::required_len(a.algebra) != 8 {
                return Err(Failure::Usage(
                    "--backend poly1 needs an algebra with 8 coordinates (a7 or e7)".into(),
                ));
            }
            let v = character(&w, &paper_point_1param())?;
            Ok((
                json!({
                    "algebra": a.algebra.to_string(),
                    "weight": w.labels(),
                    "backend": "poly1",
                    "point": ["1", "2", "3", "4", "5", "6", "x", "1/(720x)"],
                    "value": poly_json(&v),
                }),
                v.to_string(),
            ))
        }
        Backend::Rational => {
            let p = PointSampler::for_algebra(a.algebra, a.seed).next_point();
            let v: Rational = character(&w, &p)?;
            let point: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
            Ok((
                json!({
                    "algebra": a.algebra.to_string(),
                    "weight": w.labels(),
                    "backend": "rational",
                    "seed": a.seed,
                    "point": point,
                    "value": v.to_string(),
                }),
                format!("{v}\npoint {}", point.join(" ")),
            ))
        }
    }
}

fn cmd_orbit72(a: &WeightArgs) -> CmdResult {
    if !a.algebra.is_e7() {
        return Err(Failure::Usage("--algebra: orbit72 requires e7".into()));
    }
    let w = weight(a.algebra, &a.w, "w")?;
    let rows = orbit_decompose_with(coset_words(), &w)?;
    let text = rows
        .iter()
        .map(|r| format!("{} {:+} {}", r.source_index, r.sign, labels_text(&r.weight)))
        .collect::<Vec<_>>()
        .join("\n");
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "s": r.source_index, "sign": r.sign, "weight": r.weight.labels() }))
        .collect();
    Ok((json!({ "weight": w.labels(), "orbit": json_rows }), text))
}

fn cmd_subdom(a: &WeightArgs) -> CmdResult {
    let w = weight(a.algebra, &a.w, "w")?;
    let list = subdominants(&w)?;
    let text = list.iter().map(labels_text).collect::<Vec<_>>().join("\n");
    let json_list: Vec<&[i64]> = list.iter().map(DynkinWeight::labels).collect();
    Ok((
        json!({ "algebra": a.algebra.to_string(), "top": w.labels(), "subdominants": json_list }),
        text,
    ))
}

fn decomposition_json(d: &Decomposition, verification: Value) -> Value {
    let entries: Vec<Value> = d
        .entries
        .iter()
        .map(|e| json!({ "weight": e.weight.labels(), "mult": e.mult }))
        .collect();
    let zeros: Vec<&[i64]> = d.zero_candidates.iter().map(DynkinWeight::labels).collect();
    let p = &d.provenance;
    json!({
        "algebra": d.algebra().to_string(),
        "lhs": [d.lhs.0.labels(), d.lhs.1.labels()],
        "entries": entries,
        "zero_candidates": zeros,
        "dim_check": { "lhs": big(d.dim_lhs), "rhs": big(d.dim_rhs) },
        "provenance": {
            "backend": p.backend,
            "seed": p.seed,
            "points": p.points,
            "held_out": p.held_out,
            "candidates": p.candidates,
            "attempts": p.attempts,
            "verification_trials": VERIFY_TRIALS,
        },
        "verification": verification,
    })
}

fn cmd_tensor(a: &WeightArgs) -> CmdResult {
    if matches!(a.backend, Backend::Poly1) {
        return Err(Failure::Usage("--backend: tensor supports only rational".into()));
    }
    let w = weight(a.algebra, &a.w, "w")?;
    let Some(w2) = &a.w2 else {
        return Err(Failure::Usage("--w2: tensor requires a second weight".into()));
    };
    let w2 = weight(a.algebra, w2, "w2")?;
    let d = tensor_decompose(&w, &w2, a.seed)?;
    let report = verify_decomposition(&d, VERIFY_TRIALS, a.seed)?;
    if !report.passed() {
        return Err(Failure::Consistency(
            "verification_residual",
            format!("max residual {}", report.max_residual),
        ));
    }
    let mut text: Vec<String> = d
        .entries
        .iter()
        .map(|e| format!("{:>3}  {}", e.mult, labels_text(&e.weight)))
        .collect();
    text.push(format!("dim {} = {}", d.dim_lhs, d.dim_rhs));
    let verification = json!({
        "trials": report.trials,
        "max_residual": report.max_residual,
        "passed": report.passed(),
    });
    Ok((decomposition_json(&d, verification), text.join("\n")))
}

fn cmd_validate(a: &ValidateArgs) -> CmdResult {
    let owned;
    let table = match &a.table {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("--table {}: {e}", path.display())))?;
            owned = CosetTable::parse(&text)?;
            &owned
        }
        None => coset_words(),
    };
    let report = validate_table_with(table);
    let mut checks: Vec<(String, bool, String)> = report
        .checks
        .iter()
        .map(|c| (c.name.to_string(), c.passed, c.detail.clone()))
        .collect();
    for (file, computed, pinned) in data_checksums() {
        checks.push((format!("checksum {file}"), computed == pinned, computed));
    }
    let json_checks: Vec<Value> = checks
        .iter()
        .map(|(n, ok, d)| json!({ "name": n, "passed": ok, "detail": d }))
        .collect();
    let text = checks
        .iter()
        .map(|(n, ok, d)| format!("{} {n}: {d}", if *ok { "ok  " } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n");
    if let Some((name, _, detail)) = checks.iter().find(|c| !c.1) {
        let name: &'static str = if name.starts_with("checksum") {
            "data_checksum"
        } else {
            report
                .failures()
                .next()
                .map_or("coset_table", |c| c.name)
        };
        return Err(Failure::Consistency(name, format!("{detail}\n{text}")));
    }
    Ok((
        json!({
            "table_checksum": report.checksum,
            "probe": report.probe,
            "checks": json_checks,
        }),
        text,
    ))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (result, output) = match &cli.command {
        Command::Dim(a) => (cmd_dim(a), a.output),
        Command::Char(a) => (cmd_char(a), a.output),
        Command::Orbit72(a) => (cmd_orbit72(a), a.output),
        Command::Subdom(a) => (cmd_subdom(a), a.output),
        Command::Tensor(a) => (cmd_tensor(a), a.output),
        Command::Validate(a) => (cmd_validate(a), a.output),
    };
    match result {
        Ok((value, text)) => {
            let body = match output {
                Output::Json => serde_json::to_string_pretty(&value).expect("json"),
                Output::Text => text,
            };
            // A closed pipe downstream is not an error here.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Consistency(name, msg)) => {
            eprintln!("consistency failure [{name}]: {msg}");
            ExitCode::from(2)
        }
    }
}
