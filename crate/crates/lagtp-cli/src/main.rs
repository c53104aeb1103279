//! `lagtp`: batch front end for the lagtp library.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

mod gen;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lagtp::digraphs;
use lagtp::exec::Exec;
use lagtp::matrix::{tp_check_sampled_with, tp_check_symbolic_with, Mat, Sampler};
use lagtp::poly::{Poly, Var};
use lagtp::srpaths::{self, KappaFamily, SRCoeffs};
use lagtp::verify::{self, Suite, VerifyOptions};
use serde_json::{json, Value};

use gen::{DigraphMode, GenArgs, Selector};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: String) -> CliError {
        CliError { code: 2, msg }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Symbolic,
    Sampled,
}

#[derive(Parser, Debug)]
#[command(name = "lagtp", version, about = "Laguerre-type families, production matrices and total positivity checks")]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a matrix or polynomial sequence.
    Gen {
        /// laguerre-coeff, laguerre-poly, first-mv, second-mv, prodmat:<name>,
        /// smj, quad-general or quad-variant
        selector: Selector,
        /// `sym` or an integer
        #[arg(long, default_value = "sym", allow_hyphen_values = true, value_parser = gen::parse_alpha)]
        alpha: Poly,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Table cell for `smj`, e.g. `j1a0` or `j2a1:1/2`
        #[arg(long)]
        family: Option<KappaFamily>,
        /// Flat variant of `second-mv`.
        #[arg(long)]
        flat: bool,
        /// Reversed polynomials for `laguerre-poly`.
        #[arg(long)]
        reversed: bool,
        /// Print the output triangle of `smj` instead of its production matrix.
        #[arg(long)]
        triangle: bool,
        /// `name=value` substituted into the result; `name=sym` leaves it alone.
        #[arg(long = "set", value_parser = gen::parse_binding)]
        bindings: Vec<(Var, Option<Poly>)>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a matrix for total positivity up to some order.
    TpCheck {
        /// Matrix JSON file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, value_enum, default_value = "symbolic")]
        mode: Mode,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Run a named invariant suite.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Include per-check milliseconds in the JSON report.
        #[arg(long)]
        timings: bool,
    },
    /// Query a brute-force oracle directly.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Weighted sum over Laguerre digraphs on [n] with k paths.
    Digraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "first-mv")]
        mode: DigraphMode,
        #[arg(long, default_value = "sym", allow_hyphen_values = true, value_parser = gen::parse_alpha)]
        alpha: Poly,
    },
    /// Cycle-statistics polynomial over S_n.
    Cyclic {
        #[arg(long)]
        n: usize,
    },
    /// Word-statistics polynomial over S_n with zero boundary letters.
    Linear00 {
        #[arg(long)]
        n: usize,
    },
    /// Weighted partial m-Dyck paths.
    Paths {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

/// Accepts gen output, the library's structured matrix JSON, or a bare
/// array of rows whose entries are integers or polynomial strings.
pub fn parse_matrix(v: &Value) -> Result<Mat, String> {
    let rows = match v {
        Value::Array(rows) => rows,
        Value::Object(o) => match o.get("entries") {
            Some(Value::Array(rows)) if rows.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(|e| !e.is_object()))) => rows,
            _ => return Mat::from_json(v).map_err(|e| e.to_string()),
        },
        _ => return Err("expected an array of rows or a matrix object".into()),
    };
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or("row is not an array")?;
        let entries = row
            .iter()
            .map(|e| match e {
                Value::Number(n) => Poly::parse(&n.to_string()).map_err(|e| e.to_string()),
                Value::String(s) => Poly::parse(s).map_err(|e| e.to_string()),
                other => Poly::from_json(other).map_err(|e| e.to_string()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(entries);
    }
    if let Some(w) = out.first().map(Vec::len) {
        if out.iter().any(|r| r.len() != w) {
            return Err("rows have different lengths".into());
        }
    }
    Ok(Mat::from_rows(out))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut s = String::new();
    let r = if path.as_os_str() == "-" { io::stdin().read_to_string(&mut s).map(|_| ()) } else { fs::read_to_string(path).map(|t| s = t) };
    r.map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    let io_err = |e: io::Error| CliError::usage(e.to_string());
    match cli.cmd {
        Cmd::Gen { selector, alpha, n, m, j, family, flat, reversed, triangle, bindings, format, output } => {
            let g = gen::generate(&GenArgs { selector, alpha, n, m, j, family, flat, reversed, triangle, bindings })?;
            let text = g.render(format);
            match output {
                Some(p) => fs::write(&p, text).map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
            Ok(0)
        }
        Cmd::TpCheck { input, order, mode, seed, samples } => {
            let text = read_input(&input)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError::usage(format!("malformed JSON: {e}")))?;
            let m = parse_matrix(&v).map_err(|e| CliError::usage(format!("bad matrix: {e}")))?;
            if order == 0 {
                return Err(CliError::usage("--order must be at least 1".into()));
            }
            let r = match mode {
                Mode::Symbolic => tp_check_symbolic_with(&m, order, exec),
                Mode::Sampled => tp_check_sampled_with(&m, order, Sampler { seed, samples }, exec),
            };
            out.write_all(pretty(&r.to_json()).as_bytes()).map_err(io_err)?;
            Ok(if r.ok { 0 } else { 1 })
        }
        Cmd::Verify { suite, max_n, seed, timings } => {
            let opts = VerifyOptions { max_n, seed, exec, ..Default::default() };
            let report = verify::run_suite(suite, &opts);
            for c in &report.checks {
                eprintln!("{:<5} {}/{} ({} ms)", if c.ok { "ok" } else { "FAIL" }, c.suite, c.name, c.elapsed.as_millis());
            }
            out.write_all(pretty(&report.to_json(timings)).as_bytes()).map_err(io_err)?;
            Ok(if report.ok() { 0 } else { 1 })
        }
        Cmd::Oracle { which } => {
            let e = |e: &dyn std::fmt::Display| CliError::usage(e.to_string());
            let (name, value) = match which {
                OracleCmd::Digraph { n, k, mode, alpha } => {
                    ("digraph", digraphs::oracle_entry(n, k, &mode.weights(), &alpha).map_err(|x| e(&x))?)
                }
                OracleCmd::Cyclic { n } => ("cyclic", digraphs::permutation_oracle(n, digraphs::PermKind::Cyclic).map_err(|x| e(&x))?),
                OracleCmd::Linear00 { n } => {
                    ("linear00", digraphs::permutation_oracle(n, digraphs::PermKind::Linear00).map_err(|x| e(&x))?)
                }
                OracleCmd::Paths { m, j, n, k } => {
                    if m == 0 {
                        return Err(CliError::usage("--m must be at least 1".into()));
                    }
                    ("paths", srpaths::sr_path_oracle(&SRCoeffs::symbolic(m), j, n, k).map_err(|x| e(&x))?)
                }
            };
            out.write_all(pretty(&json!({"oracle": name, "value": value.to_string()})).as_bytes()).map_err(io_err)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("lagtp: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
