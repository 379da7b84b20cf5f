//! `qtop`: exact quantum invariants of 3-manifolds from the command line.
//!
//! Results go to standard output as JSON (or a plain table with
//! `--format table`). Exit codes: 1 for parse and argument errors, 2 for
//! inadmissible input, 3 for failed internal consistency checks.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtop_core::hopf::QuantumGroup;
use qtop_core::nonsemisimple::{
    hennings_invariant, nss_normalization, renormalized_all_cuts, renormalized_invariant, ModifiedTrace,
};
use qtop_core::rep::{catalogue, catalogue_module, projective_module};
use qtop_core::semisimple::{rt_invariant, smatrix, ss_normalization, verlinde_dim, Normalization};
use qtop_core::tangle::{parse_cut, parse_diagram, Diagram};
use qtop_core::verify::run_suite;
use qtop_core::{fixtures, CycScalar, Error};

#[derive(Parser, Debug)]
#[command(name = "qtop", version, about = "Exact quantum invariants from the small quantum group of sl2")]
struct Cli {
    /// Odd order r ≥ 3 of the root of unity q = e^{2πi/r}.
    #[arg(long, global = true, default_value_t = 3)]
    r: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semisimple (Reshetikhin–Turaev) invariant of a surgery diagram.
    Rt(DiagramArgs),
    /// Hennings-type invariant of an all-red surgery diagram.
    Hennings(DiagramArgs),
    /// Renormalized invariant of a surgery diagram with a projective decoration.
    Lprime {
        #[command(flatten)]
        diagram: DiagramArgs,
        /// Edge to cut, as `boundary:position`; all cuts are tried when omitted.
        #[arg(long)]
        cut: Option<String>,
    },
    /// S-matrix of the semisimplified category.
    Smatrix,
    /// Dimension of the semisimple state space of a closed surface.
    Verlinde {
        #[arg(long)]
        genus: usize,
    },
    /// Runs the property suite.
    Verify,
    /// Quantum dimensions, modified trace values and normalization constants.
    Tables,
}

#[derive(clap::Args, Debug)]
struct DiagramArgs {
    /// Diagram file; names of shipped fixtures (e.g. `unknot_P0.tg`) also work.
    #[arg(long)]
    diagram: PathBuf,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::OpenDiagram
            | Error::UnexpectedRed
            | Error::InadmissibleCut(_)
            | Error::InadmissibleGraph
            | Error::NotProjective => 2,
            Error::Consistency(_) | Error::Decomposition(_) => 3,
            Error::Scalar(qtop_core::ScalarError::InvalidOrder(_)) => 1,
            Error::Scalar(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn read_diagram(path: &Path) -> Result<Diagram, Failure> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let name = path.to_string_lossy();
            match fixtures::FILES.iter().find(|(n, _)| *n == name) {
                Some((_, t)) => t.to_string(),
                None => return Err(Failure { code: 1, message: format!("cannot read {}: {}", name, e) }),
            }
        }
    };
    Ok(parse_diagram(&text)?)
}

fn scalar_entry(x: &CycScalar) -> Value {
    x.to_json()
}

fn normalization_json(n: &Normalization) -> Value {
    json!({
        "delta_plus": scalar_entry(&n.delta_plus),
        "delta_minus": scalar_entry(&n.delta_minus),
        "D": scalar_entry(&n.d),
        "delta": scalar_entry(&n.delta),
    })
}

/// Table lines for a JSON object: `key  value`, with exact scalars shown
/// through their approximation.
fn table_lines(v: &Value, prefix: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(map) if map.contains_key("coeffs") => {
            // snap rounding noise so that -0.0 never shows up
            let part = |x: &Value| {
                let v = x.as_f64().unwrap_or(0.0);
                if v.abs() < 1e-12 {
                    0.0
                } else {
                    v
                }
            };
            let a = &map["approx"];
            out.push(format!("{}  {:.10}{:+.10}i", prefix, part(&a[0]), part(&a[1])));
        }
        Value::Object(map) => {
            for (k, x) in map {
                let p = if prefix.is_empty() { k.clone() } else { format!("{}.{}", prefix, k) };
                table_lines(x, &p, out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                table_lines(x, &format!("{}[{}]", prefix, i), out);
            }
        }
        Value::String(x) => out.push(format!("{}  {}", prefix, x)),
        other => out.push(format!("{}  {}", prefix, other)),
    }
}

fn run(cli: &Cli) -> Result<(Value, bool), Failure> {
    let h = QuantumGroup::new(cli.r).map_err(Error::from)?;
    let r = cli.r;
    let value = match &cli.command {
        Command::Rt(args) => {
            let x = rt_invariant(h, &read_diagram(&args.diagram)?)?;
            json!({"command": "rt", "r": r, "value": scalar_entry(&x), "exact": x.to_string()})
        }
        Command::Hennings(args) => {
            let x = hennings_invariant(h, &read_diagram(&args.diagram)?)?;
            json!({"command": "hennings", "r": r, "value": scalar_entry(&x), "exact": x.to_string()})
        }
        Command::Lprime { diagram, cut } => {
            let d = read_diagram(&diagram.diagram)?;
            let (x, cuts) = match cut {
                Some(c) => {
                    let c = parse_cut(c)?;
                    (renormalized_invariant(h, &d, c)?, vec![c.to_string()])
                }
                None => {
                    let all = renormalized_all_cuts(h, &d)?;
                    let first = all.first().ok_or(Error::InadmissibleGraph)?.1.clone();
                    if all.iter().any(|(_, v)| *v != first) {
                        return Err(Error::Consistency("renormalized invariant depends on the cut".into()).into());
                    }
                    (first, all.iter().map(|(c, _)| c.to_string()).collect())
                }
            };
            json!({"command": "lprime", "r": r, "cuts": cuts, "value": scalar_entry(&x), "exact": x.to_string()})
        }
        Command::Smatrix => {
            let s = smatrix(h)?;
            let rows: Vec<Value> = (0..s.rows()).map(|i| s.row(i).iter().map(scalar_entry).collect()).collect();
            json!({"command": "smatrix", "r": r, "matrix": rows, "invertible": s.inverse().is_some()})
        }
        Command::Verlinde { genus } => {
            json!({"command": "verlinde", "r": r, "genus": genus, "dim": verlinde_dim(r, *genus)})
        }
        Command::Verify => {
            let checks = run_suite(r)?;
            let passed = checks.iter().all(|c| c.passed);
            let v = json!({"command": "verify", "r": r, "passed": passed, "checks": checks});
            return Ok((v, passed));
        }
        Command::Tables => {
            let mt = ModifiedTrace::new(h)?;
            let mut qdims = serde_json::Map::new();
            for label in catalogue(r) {
                qdims.insert(label.to_string(), scalar_entry(&catalogue_module(h, &label)?.qdim()));
            }
            let mut traces = serde_json::Map::new();
            for n in 0..r - 1 {
                let p = projective_module(h, n)?;
                traces.insert(format!("P{}", n), scalar_entry(&mt.trace(&p, &p.identity())?));
            }
            json!({
                "command": "tables",
                "r": r,
                "qdim": qdims,
                "modified_trace": traces,
                "semisimple": normalization_json(&ss_normalization(h)?),
                "nonsemisimple": normalization_json(&nss_normalization(h)?),
            })
        }
    };
    Ok((value, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok((v, passed)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).expect("JSON values serialize")),
                Format::Table => {
                    let mut lines = Vec::new();
                    if let Command::Verify = cli.command {
                        for c in v["checks"].as_array().into_iter().flatten() {
                            let status = if c["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                            let line = format!("{}  {}  {}", status, c["name"].as_str().unwrap_or(""), c["detail"].as_str().unwrap_or(""));
                            lines.push(line.trim_end().to_string());
                        }
                    } else {
                        table_lines(&v, "", &mut lines);
                    }
                    println!("{}", lines.join("\n"));
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
