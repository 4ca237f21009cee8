//! Command-line front end: argument definitions and command execution.
//!
//! Every command produces one [`Report`]. Human mode prints text; `--json`
//! prints one object `{command, inputs, result, diagnostics}` with all
//! Gaussian integers in canonical text form.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage or parse errors,
//! 3 domain errors.

pub mod bench;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use gaussphi::verify::{self, BoxSpec, Status, VerifyReport};
use gaussphi::{
    gauss_divide, minimal_divide, minimal_expansion, phi, phi_parts, xgcd_with, Engine, Error,
    EuclidTrace, GInt,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Largest `--bound` the level-set export accepts.
pub const LEVELSET_MAX_BOUND: u32 = 2048;

#[derive(Debug, Parser)]
#[command(name = "gaussphi", version, about = "Minimal Euclidean function and division on the Gaussian integers")]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized suites and benchmarks.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Minimal,
    Norm,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Minimal => Engine::Minimal,
            EngineArg::Norm => Engine::Norm,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// φ(z) with the pieces of the closed form.
    Phi {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Gauss division and the φ-decreasing division of a by b.
    Divide {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Euclidean algorithm with the full trace.
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value = "minimal")]
        engine: EngineArg,
        /// Also print Bezout coefficients s, t with s·a + t·b = gcd.
        #[arg(long)]
        extended: bool,
    },
    /// Least-degree (1+i)-ary expansion, little-endian.
    Expand {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Run a verification suite over a box of the lattice.
    Verify {
        /// phi-oracle, phi-properties, expansion, division, lemmas,
        /// corollary4, gcd or gcd-random.
        suite: String,
        /// Coordinate bound for per-element suites.
        #[arg(long)]
        bound: Option<u32>,
        /// Coordinate bound for both operands of pair suites.
        #[arg(long)]
        pair_bound: Option<u32>,
        /// Pairs drawn by gcd-random.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Operand size for gcd-random.
        #[arg(long, default_value_t = 256)]
        bits: u64,
    },
    /// CSV rows "x,y,phi" for every nonzero point with |x|, |y| ≤ bound.
    Levelset {
        #[arg(long)]
        bound: u32,
        /// Print an "x,y,phi" header line first.
        #[arg(long)]
        header: bool,
    },
    /// Time phi, gauss_divide and minimal_divide on random operands.
    Bench {
        #[arg(long, default_value_t = 100_000)]
        bits: u64,
        #[arg(long, default_value_t = 21)]
        trials: usize,
        /// Bit sizes of the scaling table.
        #[arg(long, value_delimiter = ',', default_values_t = bench::DEFAULT_SIZES)]
        sizes: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::Parse { .. } | Error::BoxTooLarge { .. } | Error::NormCapExceeded { .. } => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        CliError { code, message: e.to_string() }
    }
}

/// Outcome of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub diagnostics: Value,
    pub human: String,
    pub exit: i32,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "diagnostics": self.diagnostics,
        })
    }
}

fn parse(text: &str) -> Result<GInt, CliError> {
    text.parse::<GInt>().map_err(CliError::from)
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Phi { .. } => "phi",
            Command::Divide { .. } => "divide",
            Command::Gcd { .. } => "gcd",
            Command::Expand { .. } => "expand",
            Command::Verify { .. } => "verify",
            Command::Levelset { .. } => "levelset",
            Command::Bench { .. } => "bench",
        }
    }
}

pub fn cmd_phi(z: &str) -> Result<Report, CliError> {
    let z = parse(z)?;
    let parts = phi_parts(&z)?;
    let human = format!(
        "phi({z}) = {}\n  j = {}, n = {}, branch = {}\n",
        parts.value,
        parts.j,
        parts.n,
        serde_json::to_value(parts.branch).unwrap().as_str().unwrap()
    );
    Ok(Report {
        command: "phi",
        inputs: json!({ "z": z }),
        result: json!({ "phi": parts.value, "j": parts.j, "n": parts.n, "branch": parts.branch }),
        diagnostics: json!({}),
        human,
        exit: EXIT_OK,
    })
}

pub fn cmd_divide(a: &str, b: &str) -> Result<Report, CliError> {
    let (a, b) = (parse(a)?, parse(b)?);
    let (gq, gr) = gauss_divide(&a, &b)?;
    let out = minimal_divide(&a, &b)?;
    let condition = out.condition.map(|c| c.as_str()).unwrap_or("none");
    let phi_r = out.phi_r.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
    let human = format!(
        "gauss: q = {gq}, r = {gr}\nfinal: q = {}, r = {}\n  strategy = {}, condition = {condition}, phi(b) = {}, phi(r) = {phi_r}\n",
        out.quotient,
        out.remainder,
        out.strategy.as_str(),
        out.phi_b,
    );
    Ok(Report {
        command: "divide",
        inputs: json!({ "a": a, "b": b }),
        result: json!({
            "gauss": { "quotient": gq, "remainder": gr },
            "final": {
                "quotient": out.quotient,
                "remainder": out.remainder,
                "strategy": out.strategy,
                "condition": out.condition,
                "phi_b": out.phi_b,
                "phi_r": out.phi_r,
            },
        }),
        diagnostics: json!({}),
        human,
        exit: EXIT_OK,
    })
}

fn trace_table(trace: &EuclidTrace) -> String {
    let measure = match trace.engine {
        Engine::Minimal => "phi(b)",
        Engine::Norm => "Nm(b)",
    };
    let mut s = format!("{:>4}  {:>20} {:>20} {:>16} {:>20} {:>10}  strategy\n", "step", "a", "b", "q", "r", measure);
    for (k, st) in trace.steps.iter().enumerate() {
        s.push_str(&format!(
            "{:>4}  {:>20} {:>20} {:>16} {:>20} {:>10}  {}\n",
            k + 1,
            st.dividend.to_string(),
            st.divisor.to_string(),
            st.quotient.to_string(),
            st.remainder.to_string(),
            st.measure_divisor.to_string(),
            st.strategy.as_str()
        ));
    }
    s
}

pub fn cmd_gcd(a: &str, b: &str, engine: Engine, extended: bool) -> Result<Report, CliError> {
    let (a, b) = (parse(a)?, parse(b)?);
    let trace = gaussphi::euclid::gcd_trace(&a, &b, engine)?;
    let other = gaussphi::euclid::gcd_trace(
        &a,
        &b,
        if engine == Engine::Minimal { Engine::Norm } else { Engine::Minimal },
    )?;
    let (steps_minimal, steps_norm) = match engine {
        Engine::Minimal => (trace.steps.len(), other.steps.len()),
        Engine::Norm => (other.steps.len(), trace.steps.len()),
    };
    let mut human = format!("gcd({a}, {b}) = {}\n", trace.gcd_canonical);
    human.push_str(&trace_table(&trace));
    let mut result = json!({
        "gcd": trace.gcd_canonical,
        "gcd_raw": trace.gcd_raw,
        "engine": trace.engine,
        "steps": trace.steps,
    });
    if extended {
        let bz = xgcd_with(&a, &b, engine)?;
        human.push_str(&format!("bezout: s = {}, t = {}  (s·a + t·b = {})\n", bz.s, bz.t, bz.g));
        result["bezout"] = json!({ "s": bz.s, "t": bz.t });
    }
    Ok(Report {
        command: "gcd",
        inputs: json!({ "a": a, "b": b, "engine": engine, "extended": extended }),
        result,
        diagnostics: json!({ "steps_minimal": steps_minimal, "steps_norm": steps_norm }),
        human,
        exit: EXIT_OK,
    })
}

pub fn cmd_expand(z: &str) -> Result<Report, CliError> {
    let z = parse(z)?;
    let e = minimal_expansion(&z)?;
    let degree = e.degree().expect("nonzero input has digits");
    let back = e.eval();
    let human = format!(
        "{e}\n  degree = {degree}, phi = {}, re-evaluates to {back} ({})\n",
        phi(&z)?,
        if back == z { "ok" } else { "MISMATCH" }
    );
    Ok(Report {
        command: "expand",
        inputs: json!({ "z": z }),
        result: json!({ "digits": e, "degree": degree, "evaluates_to": back, "round_trip": back == z }),
        diagnostics: json!({}),
        human,
        exit: EXIT_OK,
    })
}

/// Default box bound for each suite.
pub fn default_bound(suite: &str) -> u32 {
    match suite {
        "phi-oracle" | "phi-properties" => 40,
        "expansion" => 32,
        "division" => 25,
        "corollary4" => 20,
        "lemmas" => 15,
        "gcd" => 12,
        _ => 10,
    }
}

fn render_verify(r: &VerifyReport) -> String {
    let status = match (r.status(), r.reporting_only) {
        (_, true) => "report",
        (Status::Passed, _) => "pass",
        (Status::Failed, _) => "FAIL",
        (Status::Vacuous, _) => "pass (vacuous checks)",
    };
    let mut s = format!(
        "{}: {status}  cases={} failures={} elapsed={:.1}ms\n",
        r.suite,
        r.cases,
        r.failure_count,
        r.elapsed.as_secs_f64() * 1e3
    );
    for c in &r.checks {
        let note = if c.is_vacuous() { "  0 cases matched" } else { "" };
        s.push_str(&format!("  {:<36} matched={:<10} failed={}{note}\n", c.name, c.matched, c.failed));
    }
    for (k, v) in &r.tallies {
        s.push_str(&format!("  tally {k} = {v}\n"));
    }
    for (k, v) in &r.first_seen {
        s.push_str(&format!("  first {k}: {v}\n"));
    }
    for f in &r.failures {
        s.push_str(&format!("  counterexample [{}] {}: observed {}, expected {}\n", f.check, f.input, f.observed, f.expected));
    }
    if r.failures.len() as u64 > 0 && (r.failures.len() as u64) < r.failure_count {
        s.push_str(&format!("  ({} more not shown)\n", r.failure_count - r.failures.len() as u64));
    }
    s
}

pub fn cmd_verify(
    suite: &str,
    bound: Option<u32>,
    pair_bound: Option<u32>,
    count: usize,
    bits: u64,
    seed: u64,
) -> Result<Report, CliError> {
    let bound = bound.unwrap_or_else(|| default_bound(suite));
    let pair_bound = pair_bound.unwrap_or_else(|| default_bound(suite));
    let report = if suite == "gcd-random" {
        verify::check_gcd_random(count, bits, seed)?
    } else {
        let spec = BoxSpec::new(bound, pair_bound);
        verify::run_suite(suite, &spec).ok_or_else(|| {
            CliError::usage(format!("unknown suite {suite:?}; expected one of {:?} or \"gcd-random\"", verify::SUITES))
        })??
    };
    let vacuous: Vec<&str> = report.vacuous_checks();
    let exit = if report.passed() || report.reporting_only { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let inputs = if suite == "gcd-random" {
        json!({ "suite": suite, "count": count, "bits": bits, "seed": seed })
    } else {
        json!({ "suite": suite, "bound": bound, "pair_bound": pair_bound })
    };
    let mut diagnostics = json!({ "status": report.status(), "vacuous_checks": vacuous });
    if !vacuous.is_empty() {
        diagnostics["warning"] = json!(format!("checks with no matching cases: {}", vacuous.join(", ")));
    }
    Ok(Report {
        command: "verify",
        inputs,
        human: render_verify(&report),
        result: serde_json::to_value(&report).expect("report serializes"),
        diagnostics,
        exit,
    })
}

/// Streams level-set rows; returns the number of rows written.
pub fn write_levelset(out: &mut dyn Write, bound: u32, header: bool) -> Result<u64, CliError> {
    if bound > LEVELSET_MAX_BOUND {
        return Err(CliError::usage(format!("bound {bound} exceeds the level-set limit {LEVELSET_MAX_BOUND}")));
    }
    let io = |e: std::io::Error| CliError { code: EXIT_USAGE, message: e.to_string() };
    if header {
        writeln!(out, "x,y,phi").map_err(io)?;
    }
    let b = i64::from(bound);
    let mut rows = 0;
    for y in -b..=b {
        for x in -b..=b {
            if x == 0 && y == 0 {
                continue;
            }
            let value = phi(&GInt::new(x, y))?;
            writeln!(out, "{x},{y},{value}").map_err(io)?;
            rows += 1;
        }
    }
    Ok(rows)
}

pub fn cmd_levelset_json(bound: u32) -> Result<Report, CliError> {
    let mut buf = Vec::new();
    let rows = write_levelset(&mut buf, bound, false)?;
    let csv = String::from_utf8(buf).expect("ascii");
    let table: Vec<Value> = csv
        .lines()
        .map(|l| {
            let v: Vec<i64> = l.split(',').map(|t| t.parse().unwrap()).collect();
            json!({ "x": v[0], "y": v[1], "phi": v[2] })
        })
        .collect();
    Ok(Report {
        command: "levelset",
        inputs: json!({ "bound": bound }),
        result: json!({ "rows": table }),
        diagnostics: json!({ "row_count": rows }),
        human: csv,
        exit: EXIT_OK,
    })
}

pub fn cmd_bench(bits: u64, trials: usize, sizes: &[u64], seed: u64) -> Result<Report, CliError> {
    if bits == 0 || sizes.contains(&0) {
        return Err(CliError::usage("bit sizes must be positive"));
    }
    if trials == 0 {
        return Err(CliError::usage("trials must be positive"));
    }
    let report = bench::run(bits, trials, seed, sizes);
    Ok(Report {
        command: "bench",
        inputs: json!({ "bits": bits, "trials": trials, "sizes": sizes, "seed": seed }),
        human: bench::render(&report),
        result: serde_json::to_value(&report).expect("bench report serializes"),
        diagnostics: json!({ "note": "wall-clock measurement; no bound is asserted" }),
        exit: EXIT_OK,
    })
}

fn inputs_of(cli: &Cli) -> Value {
    match &cli.command {
        Command::Phi { z } | Command::Expand { z } => json!({ "z": z }),
        Command::Divide { a, b } | Command::Gcd { a, b, .. } => json!({ "a": a, "b": b }),
        Command::Verify { suite, .. } => json!({ "suite": suite }),
        Command::Levelset { bound, .. } => json!({ "bound": bound }),
        Command::Bench { bits, .. } => json!({ "bits": bits }),
    }
}

/// Runs the parsed command, writing its output, and returns the exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let seed = cli.seed.unwrap_or(0);
    let outcome = match &cli.command {
        Command::Phi { z } => cmd_phi(z),
        Command::Divide { a, b } => cmd_divide(a, b),
        Command::Gcd { a, b, engine, extended } => cmd_gcd(a, b, (*engine).into(), *extended),
        Command::Expand { z } => cmd_expand(z),
        Command::Verify { suite, bound, pair_bound, count, bits } => {
            cmd_verify(suite, *bound, *pair_bound, *count, *bits, seed)
        }
        Command::Levelset { bound, header } if !cli.json => {
            return match write_levelset(out, *bound, *header) {
                Ok(_) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {}", e.message);
                    e.code
                }
            };
        }
        Command::Levelset { bound, .. } => cmd_levelset_json(*bound),
        Command::Bench { bits, trials, sizes } => cmd_bench(*bits, *trials, sizes, seed),
    };
    match outcome {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(out, "{}", report.to_json())
            } else {
                write!(out, "{}", report.human)
            };
            if report.exit == EXIT_OK {
                if let Some(w) = report.diagnostics.get("warning").and_then(Value::as_str) {
                    let _ = writeln!(err, "warning: {w}");
                }
            }
            report.exit
        }
        Err(e) => {
            if cli.json {
                let obj = json!({
                    "command": cli.command.name(),
                    "inputs": inputs_of(cli),
                    "result": Value::Null,
                    "diagnostics": { "error": e.message, "exit_code": e.code },
                });
                let _ = writeln!(out, "{obj}");
            }
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
