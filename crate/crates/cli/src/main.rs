//! `copositivity` command-line tool.
//!
//! Every command writes one JSON line to stdout and a human-readable
//! rendering to stderr (`--format text` puts the rendering on stdout instead).
//!
//! Exit codes: 0 strictly copositive, 10 copositive but not strict, 20 not
//! copositive, 2 usage or input error, 3 internal inconsistency, 4 indecisive.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use copositivity::enumeration::{evaluate_family, member_label, Agreement, Family};
use copositivity::oracle::{
    find_negative, find_positive_witness, find_zero_nonneg, oracle_verdict, OracleConfig, OracleStage, OracleVerdict,
};
use copositivity::sign::{dispatch_with, ClassifierReport, Rule};
use copositivity::{io, Error, NumericMode, Scalar, SymTensor, Verdict, Witness};

const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;
const EXIT_INDECISIVE: u8 = 4;

#[derive(Parser)]
#[command(name = "copositivity", version, about = "Decide copositivity of 4th-order symmetric tensors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a tensor file
    Check {
        file: PathBuf,
        /// Default: both for exact tensors, oracle for float ones
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate T x^4 at a point
    Eval {
        file: PathBuf,
        /// Comma-separated coordinates; integers, fractions p/q or decimals
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Search for a witness point
    Witness {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-check a built-in sign-tensor family against the oracle
    Enumerate {
        /// L25, L26, T32, T33, T36 or C34
        #[arg(long)]
        family: String,
        /// Oracle resolution (default 240 in dimension 2, 60 in dimension 3)
        #[arg(long)]
        resolution: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(clap::Args)]
struct OracleArgs {
    /// Lattice resolution N (default 240 in dimension 2, 60 in dimension 3)
    #[arg(long)]
    resolution: Option<u32>,
    /// Relative tolerance for float tensors
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

impl OracleArgs {
    fn config(&self, dim: usize) -> OracleConfig {
        let mut cfg = OracleConfig::for_dim(dim).with_env_cap();
        if let Some(n) = self.resolution {
            cfg.resolution = n;
        }
        cfg.tol = self.tol;
        cfg
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Analytic,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Negative,
    Zero,
    Positive,
}

#[derive(Serialize)]
struct InputInfo {
    path: String,
    sha256: String,
    order: usize,
    dim: usize,
    mode: NumericMode,
}

#[derive(Serialize)]
struct OracleInfo {
    resolution: u32,
    tol: f64,
    max_lattice: String,
    verdict: Verdict,
    decisive: bool,
    stage: OracleStage,
    /// `T k^4` at the lattice argmin.
    min_value: String,
    argmin: Vec<u32>,
}

impl OracleInfo {
    fn new(v: &OracleVerdict, cfg: &OracleConfig) -> Self {
        OracleInfo {
            resolution: v.resolution,
            tol: cfg.tol,
            max_lattice: cfg.max_lattice.to_string(),
            verdict: v.verdict,
            decisive: v.decisive,
            stage: v.stage,
            min_value: v.min_value.to_string(),
            argmin: v.argmin.0.clone(),
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    command: &'static str,
    input: InputInfo,
    mode: Mode,
    /// Present iff the exit code is 0, 10 or 20.
    verdict: Option<Verdict>,
    /// The best guess when no source is decisive.
    heuristic_verdict: Option<Verdict>,
    rule: Option<Rule>,
    decisive: bool,
    witness: Option<Witness>,
    oracle: Option<OracleInfo>,
    /// Analytic verdict when it disagrees with the oracle.
    analytic_verdict: Option<Verdict>,
    exit_code: u8,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct EvalReport {
    command: &'static str,
    input: InputInfo,
    x: Vec<String>,
    value: String,
    exit_code: u8,
}

#[derive(Serialize)]
struct WitnessReport {
    command: &'static str,
    input: InputInfo,
    kind: Kind,
    witness: Option<Witness>,
    resolution: Option<u32>,
    exit_code: u8,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct EnumerateRow {
    member: String,
    classifier: Option<Verdict>,
    oracle: Verdict,
    oracle_decisive: bool,
    agreement: &'static str,
}

#[derive(Serialize)]
struct EnumerateReport {
    command: &'static str,
    family: &'static str,
    resolution: u32,
    members: usize,
    strict: usize,
    mismatches: usize,
    indecisive: usize,
    rows: Vec<EnumerateRow>,
    exit_code: u8,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    command: &'a str,
    error: String,
    exit_code: u8,
}

/// A finished command: the JSON report, its text rendering and exit code.
struct Outcome {
    json: String,
    text: String,
    code: u8,
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::StrictlyCopositive => 0,
        Verdict::CopositiveNotStrict => 10,
        Verdict::NotCopositive => 20,
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

fn load(path: &Path) -> Result<(SymTensor, InputInfo), Error> {
    let bytes = std::fs::read(path).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::parse(path.display().to_string(), "file is not UTF-8"))?;
    let t = io::parse_tensor(&text)?;
    let info = InputInfo {
        path: path.display().to_string(),
        sha256: format!("{:x}", Sha256::digest(&bytes)),
        order: t.order(),
        dim: t.dim(),
        mode: t.mode(),
    };
    Ok((t, info))
}

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn render_witness(w: &Witness) -> String {
    let x: Vec<String> = w.x.iter().map(Scalar::to_string).collect();
    format!(
        "x = ({}), value {}{}",
        x.join(", "),
        w.value,
        if w.approximate { " (approximate zero)" } else { "" }
    )
}

fn check(file: &Path, mode: Option<Mode>, args: &OracleArgs) -> Result<Outcome, Error> {
    let start = Instant::now();
    let (t, input) = load(file)?;
    let cfg = args.config(t.dim());
    let analytic_ok = t.order() == 4 && (2..=3).contains(&t.dim());
    let mode = mode.unwrap_or(if t.is_exact() && analytic_ok { Mode::Both } else { Mode::Oracle });

    let analytic: Option<ClassifierReport> = match mode {
        Mode::Oracle => None,
        _ => Some(dispatch_with(&t, &cfg)?),
    };
    let oracle: Option<OracleVerdict> = match (&analytic, mode) {
        (_, Mode::Analytic) => analytic.as_ref().and_then(|a| a.oracle.clone()),
        (Some(a), Mode::Both) if a.oracle.is_some() => a.oracle.clone(),
        _ => Some(oracle_verdict(&t, &cfg)?),
    };

    let mut analytic_verdict = None;
    let (best, rule, decisive, witness, inconsistent) = match (&analytic, &oracle, mode) {
        (Some(a), _, Mode::Analytic) => (a.verdict, a.rule, a.decisive, a.evidence.clone(), false),
        (_, Some(o), Mode::Oracle) => (Some(o.verdict), Some(Rule::Oracle), o.decisive, o.witness.clone(), false),
        (Some(a), Some(o), _) => {
            if a.verdict != Some(o.verdict) {
                analytic_verdict = a.verdict;
                (Some(o.verdict), a.rule, false, a.evidence.clone().or(o.witness.clone()), true)
            } else {
                let witness = a.evidence.clone().or_else(|| o.witness.clone());
                (a.verdict, a.rule, a.decisive || o.decisive, witness, false)
            }
        }
        _ => unreachable!("every mode runs at least one source"),
    };
    let code = if inconsistent {
        EXIT_INCONSISTENT
    } else {
        match best {
            Some(v) if decisive => verdict_code(v),
            _ => EXIT_INDECISIVE,
        }
    };
    let verdict = best.filter(|_| code != EXIT_INDECISIVE && code != EXIT_INCONSISTENT);
    let witness = witness.filter(|_| best != Some(Verdict::StrictlyCopositive));

    let mut text = String::new();
    match verdict {
        Some(v) => text += &format!("verdict: {v}"),
        None if inconsistent => {
            text += &format!(
                "INCONSISTENT: analytic says {}, oracle says {}",
                analytic_verdict.map_or("nothing".into(), |v| v.to_string()),
                best.map_or("nothing".into(), |v| v.to_string())
            )
        }
        None => text += &format!("indecisive (best guess: {})", best.map_or("none".into(), |v| v.to_string())),
    }
    if let Some(r) = rule {
        text += &format!(" [rule {r}]");
    }
    text.push('\n');
    if let Some(w) = &witness {
        text += &format!("witness: {}\n", render_witness(w));
    }
    if let Some(o) = &oracle {
        text += &format!(
            "oracle: N = {}, min T(k) = {} at k = {:?}, {} ({})\n",
            o.resolution,
            o.min_value,
            o.argmin.0,
            o.verdict,
            if o.decisive { "decisive" } else { "heuristic" }
        );
    }

    let report = CheckReport {
        command: "check",
        input,
        mode,
        verdict,
        heuristic_verdict: if verdict.is_none() && !inconsistent { best } else { None },
        rule,
        decisive: decisive && !inconsistent,
        witness,
        oracle: oracle.as_ref().map(|o| OracleInfo::new(o, &cfg)),
        analytic_verdict,
        exit_code: code,
        elapsed_ms: ms(start),
    };
    Ok(Outcome {
        json: serde_json::to_string(&report).expect("report serializes"),
        text,
        code,
    })
}

fn parse_point(s: &str) -> Result<Vec<Scalar>, Error> {
    s.split(',')
        .map(|c| c.trim().parse::<Scalar>().map_err(|_| Error::parse("--at", format!("`{c}` is not a number"))))
        .collect()
}

fn eval(file: &Path, at: &str) -> Result<Outcome, Error> {
    let (t, input) = load(file)?;
    let x = parse_point(at)?;
    let value = t.evaluate(&x)?;
    let report = EvalReport {
        command: "eval",
        input,
        x: x.iter().map(Scalar::to_string).collect(),
        value: value.to_string(),
        exit_code: 0,
    };
    Ok(Outcome {
        json: serde_json::to_string(&report).expect("report serializes"),
        text: format!("{value}\n"),
        code: 0,
    })
}

fn witness(file: &Path, kind: Kind, args: &OracleArgs) -> Result<Outcome, Error> {
    let start = Instant::now();
    let (t, input) = load(file)?;
    let cfg = args.config(t.dim());
    let (found, resolution) = match kind {
        Kind::Positive => (find_positive_witness(&t)?, None),
        Kind::Zero => (find_zero_nonneg(&t, &cfg)?, Some(cfg.resolution)),
        Kind::Negative => (find_negative(&t, &cfg)?, Some(cfg.resolution)),
    };
    let code = if found.is_some() { 0 } else { EXIT_INDECISIVE };
    let text = match &found {
        Some(w) => format!("witness: {}\n", render_witness(w)),
        None => format!("no {} witness found\n", serde_json::to_value(kind).unwrap().as_str().unwrap()),
    };
    let report = WitnessReport {
        command: "witness",
        input,
        kind,
        witness: found,
        resolution,
        exit_code: code,
        elapsed_ms: ms(start),
    };
    Ok(Outcome {
        json: serde_json::to_string(&report).expect("report serializes"),
        text,
        code,
    })
}

fn enumerate(family: &str, resolution: Option<u32>) -> Result<Outcome, Error> {
    let start = Instant::now();
    let family: Family = family.parse()?;
    let mut cfg = OracleConfig::for_dim(family.dim()).with_env_cap();
    cfg.resolution = resolution.unwrap_or(family.default_resolution());
    let results = evaluate_family(family, &cfg)?;

    let mut text = format!("{:<16} {:<22} {:<22} agreement\n", "member", "classifier", "oracle");
    let rows: Vec<EnumerateRow> = results
        .iter()
        .map(|r| {
            let agreement = match r.agreement {
                Agreement::Agree => "agree",
                Agreement::Mismatch => "mismatch",
                Agreement::Indecisive => "indecisive",
            };
            let row = EnumerateRow {
                member: member_label(&r.tensor),
                classifier: r.classifier,
                oracle: r.oracle.verdict,
                oracle_decisive: r.oracle.decisive,
                agreement,
            };
            text += &format!(
                "{:<16} {:<22} {:<22} {}\n",
                row.member,
                row.classifier.map_or("-".into(), |v| v.to_string()),
                row.oracle.to_string(),
                agreement
            );
            row
        })
        .collect();
    let mismatches = results.iter().filter(|r| r.agreement == Agreement::Mismatch).count();
    let indecisive = results.iter().filter(|r| r.agreement == Agreement::Indecisive).count();
    let strict = results.iter().filter(|r| r.oracle.verdict.is_strict()).count();
    text += &format!(
        "{family}: {} members, {strict} strictly copositive, {mismatches} mismatches, {indecisive} indecisive\n",
        rows.len()
    );
    let code = if mismatches > 0 {
        EXIT_INCONSISTENT
    } else if indecisive > 0 {
        EXIT_INDECISIVE
    } else {
        0
    };
    let report = EnumerateReport {
        command: "enumerate",
        family: family.name(),
        resolution: cfg.resolution,
        members: rows.len(),
        strict,
        mismatches,
        indecisive,
        rows,
        exit_code: code,
        elapsed_ms: ms(start),
    };
    Ok(Outcome {
        json: serde_json::to_string(&report).expect("report serializes"),
        text,
        code,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, format, result) = match &cli.command {
        Command::Check {
            file,
            mode,
            oracle,
            format,
        } => ("check", *format, check(file, *mode, oracle)),
        Command::Eval { file, at, format } => ("eval", *format, eval(file, at)),
        Command::Witness {
            file,
            kind,
            oracle,
            format,
        } => ("witness", *format, witness(file, *kind, oracle)),
        Command::Enumerate {
            family,
            resolution,
            format,
        } => ("enumerate", *format, enumerate(family, *resolution)),
    };
    let outcome = result.unwrap_or_else(|e| {
        let code = error_code(&e);
        Outcome {
            json: serde_json::to_string(&ErrorReport {
                command: name,
                error: e.to_string(),
                exit_code: code,
            })
            .expect("report serializes"),
            text: format!("error: {e}\n"),
            code,
        }
    });
    match format {
        Format::Json => {
            println!("{}", outcome.json);
            eprint!("{}", outcome.text);
        }
        Format::Text => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.code)
}
