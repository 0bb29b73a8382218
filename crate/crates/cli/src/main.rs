//! `borel`: command-line front end.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 1 on a domain error (with an error object on stdout), 2 when a
//! verification or property run finds a disagreement.

use std::collections::BTreeSet;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use borel_core::fuzz::{fuzz_borel, FuzzConfig, Op};
use borel_core::oracle::{betti_table_with, BettiTable, Field, ScaleGuard};
use borel_core::properties::{run_properties, Fault, PropertiesReport};
use borel_core::{
    borel_check, compare_routes, compare_routes_with, corrupted_decomposition, decompose,
    ideal_to_json, parse_ideal, report, sequential_chain, Error, MonomialIdeal, Route, Verdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "borel",
    version,
    about = "Invariants of Borel-type monomial ideals"
)]
struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealInput {
    /// The ideal, e.g. "vars x,y; x^2, x*y". Read from stdin when absent or `-`.
    ideal: Option<String>,

    /// Read the ideal from a file.
    #[arg(long, conflicts_with = "ideal")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    exp_max: u32,
    /// Comma-separated subset of intersect, sum, product.
    #[arg(long, value_delimiter = ',', default_value = "intersect,sum")]
    ops: Vec<Op>,
    #[arg(long, default_value_t = 2)]
    depth: usize,
}

impl FuzzArgs {
    fn config(&self) -> FuzzConfig {
        FuzzConfig {
            seed: self.seed,
            count: self.count,
            n_max: self.n_max,
            exp_max: self.exp_max,
            ops: self.ops.iter().copied().collect::<BTreeSet<_>>(),
            depth: self.depth,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Decomposition,
    Chain,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    /// Feed route comparison a decomposition with one exponent bumped.
    CorruptDecomposition,
}

impl From<FaultArg> for Fault {
    fn from(f: FaultArg) -> Self {
        match f {
            FaultArg::CorruptDecomposition => Fault::CorruptDecomposition,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Test whether the ideal is of Borel type.
    Check(IdealInput),
    /// Irredundant irreducible decomposition.
    Decompose(IdealInput),
    /// Sequential chain of a Borel-type ideal.
    Chain(IdealInput),
    /// a_i, reg_t and a*_t of S/I and of I.
    Invariants {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "decomposition")]
        route: RouteArg,
    },
    /// Graded Betti numbers of S/I.
    Betti {
        #[command(flatten)]
        input: IdealInput,
        /// Prime characteristic; rationals when absent.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Compare every route on one ideal.
    Verify {
        #[command(flatten)]
        input: IdealInput,
        /// Negative control.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Emit random Borel-type ideals.
    Fuzz(FuzzArgs),
    /// Run the property suite over fuzzed samples.
    Properties {
        #[command(flatten)]
        fuzz: FuzzArgs,
        /// Negative control.
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            ok: true,
        }
    }
}

fn read_ideal(input: &IdealInput) -> Result<MonomialIdeal, Failure> {
    let text = match (&input.ideal, &input.file) {
        (_, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        (Some(s), None) if s != "-" => s.clone(),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            s
        }
    };
    Ok(parse_ideal(text.trim())?)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Check(input) => {
            let i = read_ideal(input)?;
            let c = borel_check(&i)?;
            let text = match c.failing_index {
                None => "borel type: yes\n".to_string(),
                Some(k) => format!("borel type: no (first failing index {k})\n"),
            };
            Ok(Output::ok(serde_json::to_value(c).unwrap(), text))
        }
        Command::Decompose(input) => {
            let i = read_ideal(input)?;
            let d = decompose(&i)?;
            let names = i.names();
            let text = d
                .components()
                .iter()
                .map(|q| {
                    let b: Vec<String> = q.b().iter().map(u32::to_string).collect();
                    let ideal = q.ideal().with_names(Some(names.clone()));
                    format!(
                        "m^({}) = ({})\n",
                        b.join(","),
                        ideal.render_gens().join(", ")
                    )
                })
                .collect();
            Ok(Output::ok(d.to_json(), text))
        }
        Command::Chain(input) => {
            let i = read_ideal(input)?;
            let c = sequential_chain(&i)?;
            let mut text = String::new();
            for (l, (&nl, j)) in c.indices.iter().zip(&c.restricted).enumerate() {
                text.push_str(&format!(
                    "I_{l} = ({})  n_{l} = {nl}  J_{l} = ({})\n",
                    c.ideals[l].render_gens().join(", "),
                    j.render_gens().join(", ")
                ));
            }
            text.push_str(&format!("I_{} = S\n", c.len()));
            Ok(Output::ok(c.to_json(), text))
        }
        Command::Invariants { input, route } => {
            let i = read_ideal(input)?;
            let single = match route {
                RouteArg::Decomposition => Some(Route::Decomposition),
                RouteArg::Chain => Some(Route::Chain),
                RouteArg::Oracle => Some(Route::Oracle),
                RouteArg::All => None,
            };
            if let Some(r) = single {
                let rep = report(&i, r)?;
                return Ok(Output::ok(serde_json::to_value(&rep).unwrap(), rep.table()));
            }
            let reports = Route::ALL
                .iter()
                .map(|&r| report(&i, r))
                .collect::<Result<Vec<_>, _>>()?;
            let verdict = compare_routes(&i)?;
            let mut text: String = reports.iter().map(|r| r.table() + "\n").collect();
            text.push_str(&verdict_text(&verdict));
            Ok(Output {
                json: json!({ "reports": reports, "verdict": verdict.to_json() }),
                text,
                ok: verdict.agree,
            })
        }
        Command::Betti { input, prime } => {
            let i = read_ideal(input)?;
            let field = prime.map_or(Field::Rational, Field::Prime);
            let t = betti_table_with(&i, field, ScaleGuard::from_env())?;
            Ok(Output::ok(t.to_json(), betti_text(&t)))
        }
        Command::Verify {
            input,
            inject_fault,
        } => {
            let i = read_ideal(input)?;
            let verdict = match inject_fault {
                None => compare_routes(&i)?,
                Some(FaultArg::CorruptDecomposition) => {
                    compare_routes_with(&i, &corrupted_decomposition(&i)?)?
                }
            };
            Ok(Output {
                json: verdict.to_json(),
                text: verdict_text(&verdict),
                ok: verdict.agree,
            })
        }
        Command::Fuzz(args) => {
            let cfg = args.config();
            let out = fuzz_borel(&cfg)?;
            let text = out.samples.iter().map(|i| format!("{i}\n")).collect();
            Ok(Output::ok(
                json!({
                    "config": cfg,
                    "discarded": out.discarded,
                    "samples": out.samples.iter().map(ideal_to_json).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Command::Properties { fuzz, inject_fault } => {
            let cfg = fuzz.config();
            let rep = run_properties(&cfg, inject_fault.map(Fault::from))?;
            for w in &rep.warnings {
                eprintln!("warning: {w}");
            }
            Ok(Output {
                json: serde_json::to_value(&rep).unwrap(),
                text: properties_text(&rep),
                ok: rep.all_pass,
            })
        }
    }
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("{}\n", v.ideal);
    for c in &v.checks {
        let vals: Vec<String> = c
            .values
            .iter()
            .map(|(k, x)| format!("{k}={}", serde_json::to_string(x).unwrap()))
            .collect();
        out.push_str(&format!(
            "{:<5} {:<15} {}\n",
            if c.equal { "ok" } else { "DIFF" },
            c.quantity,
            vals.join("  ")
        ));
    }
    out.push_str(if v.agree {
        "all routes agree\n"
    } else {
        "routes DISAGREE\n"
    });
    out
}

fn betti_text(t: &BettiTable) -> String {
    // rows j - i, columns i
    let n = t.n();
    let max_row = t
        .entries()
        .keys()
        .map(|&(i, j)| j - i as u64)
        .max()
        .unwrap_or(0);
    let mut out = format!("field {}\n      ", t.field().label());
    for i in 0..=n {
        out.push_str(&format!("{i:>6}"));
    }
    out.push('\n');
    out.push_str("total:");
    for i in 0..=n {
        out.push_str(&format!("{:>6}", t.total_rank(i)));
    }
    out.push('\n');
    for row in 0..=max_row {
        out.push_str(&format!("{row:>5}:"));
        for i in 0..=n {
            let b = t.beta(i, row + i as u64);
            let cell = if b == 0 {
                ".".to_string()
            } else {
                b.to_string()
            };
            out.push_str(&format!("{cell:>6}"));
        }
        out.push('\n');
    }
    out
}

fn properties_text(r: &PropertiesReport) -> String {
    let mut out = format!(
        "seed {}  samples {}  pairs {}  discarded {}\n",
        r.config.seed, r.samples, r.pairs, r.discarded
    );
    for p in &r.properties {
        out.push_str(&format!(
            "{:<5} {:<38} passed {:>5}  failed {:>5}\n",
            if p.failed == 0 { "PASS" } else { "FAIL" },
            p.name,
            p.passed,
            p.failed
        ));
    }
    out.push_str(&format!(
        "a*_t(S/(K+L)) bound attained with equality in {}/{} cases\n",
        r.sum_astar_equality.hits, r.sum_astar_equality.total
    ));
    out
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.table {
                emit(&out.text);
            } else {
                emit(&(serde_json::to_string_pretty(&out.json).unwrap() + "\n"));
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(2)
            }
        }
        Err(fail) => {
            let (kind, message) = match fail {
                Failure::Domain(e) => (e.kind(), e.to_string()),
                Failure::Io(m) => ("io", m),
            };
            let body = json!({ "error": { "kind": kind, "message": message } });
            emit(&(serde_json::to_string_pretty(&body).unwrap() + "\n"));
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
