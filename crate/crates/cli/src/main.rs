//! `iwasawa`: λ-invariants, prime splitting and cyclic-group cohomology from
//! the command line. Every command prints one JSON document (or CSV for the
//! tabular ones) and exits with 0 (ok), 2 (invalid input), 3 (formula and
//! oracle disagree) or 4 (oracle did not stabilize).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use iwasawa::arith::IntMatrix;
use iwasawa::cohomology::{cohomology, CyclicGModule, Indecomposable};
use iwasawa::lambda::{
    decomposition_solve, ferrero_lambda, fit_growth, kida_general, main_lambda, riemann_hurwitz, LambdaResult,
    RHInput,
};
use iwasawa::oracle::{lambda_from_oracle_bounded, DEFAULT_LEVEL_BOUND};
use iwasawa::splitting::{
    primes_above_in_Qinf, primes_above_in_fermat_tower, splitting_in_Qn, stable_primes_above_in_fermat_tower,
};
use iwasawa::Error;

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "iwasawa", version, about = "Iwasawa lambda-invariants of imaginary quadratic Z2-towers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Trivial,
    Regular,
    Augmentation,
}

impl From<Builtin> for Indecomposable {
    fn from(b: Builtin) -> Self {
        match b {
            Builtin::Trivial => Indecomposable::Trivial,
            Builtin::Regular => Indecomposable::Regular,
            Builtin::Augmentation => Indecomposable::Augmentation,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// λ₂ of Q(√-d), or of k(√-d) over a Fermat base.
    Lambda {
        #[arg(long)]
        d: u64,
        /// Fermat prime of the base field (2 means the tower over Q).
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Highest level fed to the oracle.
        #[arg(long, default_value_t = 4)]
        max_level: u32,
        /// Refuse oracle levels above this.
        #[arg(long, default_value_t = DEFAULT_LEVEL_BOUND)]
        level_bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Splitting of an odd prime q in the layers of the tower.
    Splitting {
        #[arg(long)]
        q: u64,
        /// Fermat base prime; omit for the tower over Q.
        #[arg(long)]
        base_prime: Option<u64>,
        /// Number of levels, starting at n = 0.
        #[arg(long, default_value_t = 6)]
        levels: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// H¹, H² and χ of a module over a cyclic p-group.
    Cohomology {
        /// JSON presentation {p, order, relations, action}.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, requires = "p")]
        builtin: Option<Builtin>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Riemann–Hurwitz: λ_L = p λ_K - (p-1) χ + Σ (e - 1).
    Rh {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        lambda_k: u64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        /// Ramification indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        ram: Vec<u64>,
    },
    /// Kida: λ⁻ = δ - τ - 1 + dim + s.
    Kida {
        #[arg(long)]
        delta: u8,
        #[arg(long)]
        tau: u8,
        #[arg(long)]
        dim2: u64,
        #[arg(long)]
        s: u64,
    },
    /// The family Z_p^a ⊕ (Z_pG)^b ⊕ (I_pG)^c.
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        lambda_k: u64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        #[arg(long)]
        s: u64,
    },
    /// Fit e_n = λ n + μ p^n + ν.
    Fit {
        #[arg(long)]
        p: u64,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        seq: Vec<i64>,
    },
}

/// A finished command: document or table, plus exit status.
struct Output {
    body: String,
    code: u8,
}

enum Failure {
    Invalid(String),
    NotStabilized(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotStabilized { .. } | Error::MuSignature { .. } => Failure::NotStabilized(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::NotStabilized(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::NotStabilized(m) => m,
        }
    }
}

fn envelope(command: &str, inputs: Value, result: Value, assumptions: Vec<String>, provenance: &str) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "inputs": inputs,
        "result": result,
        "assumptions": assumptions,
        "provenance": provenance,
    })
}

fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents are plain JSON");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

/// Small integers as JSON numbers, the rest as strings.
fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_value).collect())
}

fn merge_assumptions(results: &[&LambdaResult]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for r in results {
        for a in &r.assumptions {
            if !out.contains(a) {
                out.push(a.clone());
            }
        }
    }
    out
}

fn run_lambda(
    d: u64,
    p: u64,
    method: Method,
    max_level: u32,
    level_bound: u32,
    format: Format,
) -> Result<Output, Failure> {
    let inputs = json!({
        "d": d, "p": p, "method": method.name(), "max-level": max_level,
        "level-bound": level_bound, "format": format.name(),
    });
    if method != Method::Formula && p != 2 {
        return Err(Failure::Invalid(format!(
            "the oracle only covers the tower over Q (p = 2), got p = {p}"
        )));
    }
    let formula = match method {
        Method::Oracle => None,
        _ if p == 2 => Some(ferrero_lambda(d)?),
        _ => Some(main_lambda(d, p)?),
    };
    let oracle = match method {
        Method::Formula => None,
        _ => Some(lambda_from_oracle_bounded(d, max_level, level_bound)?),
    };
    let agree = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(f.lambda == o.lambda),
        _ => None,
    };
    let code = if agree == Some(false) { 3 } else { 0 };

    if format == Format::Csv {
        let mut rows = Vec::new();
        if let Some(f) = &formula {
            rows.extend(f.breakdown.iter().map(|(q, c)| {
                vec!["formula".into(), "prime".into(), q.to_string(), c.to_string()]
            }));
            rows.push(vec!["formula".into(), "lambda".into(), String::new(), f.lambda.to_string()]);
        }
        if let Some(o) = &oracle {
            rows.extend(o.levels.iter().map(|(n, v)| {
                vec!["oracle".into(), "ord2_h_minus".into(), n.to_string(), v.to_string()]
            }));
            rows.push(vec!["oracle".into(), "lambda".into(), String::new(), o.lambda.to_string()]);
        }
        return Ok(Output { body: csv_table(&["source", "quantity", "index", "value"], rows), code });
    }

    let mut result = Map::new();
    let mut used = Vec::new();
    if let Some(f) = &formula {
        result.insert("formula".into(), serde_json::to_value(f).expect("serializable"));
        used.push(f);
    }
    if let Some(o) = &oracle {
        result.insert("oracle".into(), serde_json::to_value(o).expect("serializable"));
        used.push(o);
    }
    if let Some(a) = agree {
        result.insert("verdict".into(), json!(if a { "agree" } else { "disagree" }));
    }
    let doc = envelope("lambda", inputs, Value::Object(result), merge_assumptions(&used), method.name());
    Ok(Output { body: render(&doc), code })
}

fn run_splitting(q: u64, base_prime: Option<u64>, levels: u32, format: Format) -> Result<Output, Failure> {
    let inputs = json!({ "q": q, "base-prime": base_prime, "levels": levels, "format": format.name() });
    let stable = match base_prime {
        None => primes_above_in_Qinf(q)?,
        Some(p) => stable_primes_above_in_fermat_tower(q, p)?,
    };
    let reports = (0..levels)
        .map(|n| match base_prime {
            None => splitting_in_Qn(q, n),
            Some(p) => primes_above_in_fermat_tower(q, p, n),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let stabilized_at = reports.iter().position(|r| r.g == stable);

    if format == Format::Csv {
        let rows = reports.iter().map(|r| {
            vec![
                r.n.to_string(),
                r.g.to_string(),
                r.f.to_string(),
                r.e.to_string(),
                (r.g == stable).to_string(),
            ]
        });
        return Ok(Output { body: csv_table(&["n", "g", "f", "e", "stable"], rows), code: 0 });
    }
    let base = reports.first().map(|r| r.base.to_string());
    let table: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "n": r.n, "g": r.g, "f": r.f, "e": r.e, "stable": r.g == stable }))
        .collect();
    let result = json!({
        "base": base,
        "levels": table,
        "stable_count": stable,
        "stabilized_at": stabilized_at,
    });
    Ok(Output { body: render(&envelope("splitting", inputs, result, vec![], "formula")), code: 0 })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Presentation {
    p: u64,
    order: Option<u64>,
    #[serde(default)]
    relations: Vec<Vec<i64>>,
    action: Vec<Vec<i64>>,
}

fn grid(rows: &[Vec<i64>], what: &str) -> Result<IntMatrix, Failure> {
    let cols = rows.first().map_or(0, Vec::len);
    IntMatrix::from_rows(rows, cols).ok_or_else(|| Failure::Invalid(format!("{what} rows have different lengths")))
}

fn load_presentation(path: &PathBuf) -> Result<CyclicGModule, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let pres: Presentation = serde_json::from_str(&text)
        .map_err(|e| Failure::Invalid(format!("malformed presentation {}: {e}", path.display())))?;
    let action = grid(&pres.action, "action")?;
    let relations = if pres.relations.is_empty() || pres.relations.iter().all(Vec::is_empty) {
        IntMatrix::zeros(action.rows(), 0)
    } else {
        grid(&pres.relations, "relations")?
    };
    Ok(CyclicGModule::new(pres.p, pres.order.unwrap_or(pres.p), relations, action)?)
}

fn run_cohomology(file: Option<PathBuf>, builtin: Option<Builtin>, p: Option<u64>) -> Result<Output, Failure> {
    let inputs = json!({
        "file": file.as_ref().map(|f| f.display().to_string()),
        "builtin": builtin.map(|b| Indecomposable::from(b).name()),
        "p": p,
    });
    let module = match (&file, builtin, p) {
        (Some(path), _, _) => load_presentation(path)?,
        (None, Some(kind), Some(p)) => CyclicGModule::indecomposable(p, kind.into())?,
        _ => return Err(Failure::Invalid("give --file or --builtin with --p".into())),
    };
    let rep = cohomology(&module);
    let result = json!({
        "p": module.p(),
        "group_order": module.group_order(),
        "generators": module.generator_count(),
        "structure": ints(&module.structure()),
        "rank": module.rank(),
        "fixed": ints(&module.fixed_invariants()),
        "h1": ints(&rep.h1),
        "h2": ints(&rep.h2),
        "h1_order": rep.h1_order().as_ref().map(int_value),
        "h2_order": rep.h2_order().as_ref().map(int_value),
        "chi": rep.chi,
    });
    Ok(Output { body: render(&envelope("cohomology", inputs, result, vec![], "formula")), code: 0 })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Lambda { d, p, method, max_level, level_bound, format } => {
            run_lambda(d, p, method, max_level, level_bound, format)
        }
        Command::Splitting { q, base_prime, levels, format } => run_splitting(q, base_prime, levels, format),
        Command::Cohomology { file, builtin, p } => run_cohomology(file, builtin, p),
        Command::Rh { p, lambda_k, chi, ram } => {
            let inputs = json!({ "p": p, "lambda-k": lambda_k, "chi": chi, "ram": join(&ram) });
            let lambda_l = riemann_hurwitz(&RHInput { p, lambda_k, chi_p: chi, ram })?;
            let doc = envelope("rh", inputs, json!({ "lambda_l": lambda_l }), vec!["mu_K = 0".into()], "formula");
            Ok(Output { body: render(&doc), code: 0 })
        }
        Command::Kida { delta, tau, dim2, s } => {
            let inputs = json!({ "delta": delta, "tau": tau, "dim2": dim2, "s": s });
            let lambda_minus = kida_general(delta, tau, dim2, s)?;
            let doc = envelope("kida", inputs, json!({ "lambda_minus": lambda_minus }), vec![], "formula");
            Ok(Output { body: render(&doc), code: 0 })
        }
        Command::Decompose { p, lambda_k, chi, s } => {
            let inputs = json!({ "p": p, "lambda-k": lambda_k, "chi": chi, "s": s });
            let family = decomposition_solve(p, lambda_k, chi, s)?;
            let result = serde_json::to_value(&family).expect("serializable");
            let doc = envelope("decompose", inputs, result, vec!["mu_K = 0".into()], "formula");
            Ok(Output { body: render(&doc), code: 0 })
        }
        Command::Fit { p, seq } => {
            let inputs = json!({ "p": p, "seq": join(&seq) });
            let fit = fit_growth(p, &seq)?;
            let result = json!({ "lambda": fit.lambda, "mu": fit.mu, "nu": fit.nu, "n0": fit.n0 });
            Ok(Output { body: render(&envelope("fit", inputs, result, vec![], "formula")), code: 0 })
        }
    }
}

fn emit(out: &str, to_stderr: bool) {
    // one write per stream so the document lands in a single piece
    let res = if to_stderr {
        std::io::stderr().lock().write_all(out.as_bytes())
    } else {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush())
    };
    let _ = res;
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_error = e.use_stderr();
            emit(&e.render().to_string(), is_error);
            return ExitCode::from(if is_error { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            emit(&out.body, false);
            ExitCode::from(out.code)
        }
        Err(failure) => {
            let doc = json!({ "schema": SCHEMA, "error": failure.message(), "exit_code": failure.code() });
            emit(&render(&doc), false);
            emit(&format!("error: {}\n", failure.message()), true);
            ExitCode::from(failure.code())
        }
    }
}
