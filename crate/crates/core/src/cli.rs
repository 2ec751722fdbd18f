//! Command-line front end.
//!
//! JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 malformed input, 2 failed verification, 3 numerical failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bodies::{make_body, BodyKind, BodySpec};
use crate::chain::verify_chain;
use crate::error::GeometryError;
use crate::functionals::{gauge, max_chord, radius_fn, support, width_fn, GaugeBody};
use crate::polytope::VPolytope;
use crate::radii::{circumradius, diameter, inradius, min_width};
use crate::report::{sig9, ChainEntry, RadiiReport, ValueReport};
use crate::worked::ReuleauxRow;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

pub const APPROX_HEADER: &str = "n,R,r,D,omega,err_R,err_r,err_D,err_omega";

#[derive(Debug, Parser)]
#[command(
    name = "gauge-radii",
    version,
    about = "Extremal radii of polytopes with respect to convex gauge bodies"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a reference body as polytope JSON.
    Body {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 96)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
    },
    /// Evaluate a functional of a body in one direction.
    Eval {
        #[arg(long)]
        body: PathBuf,
        #[arg(long = "fn", value_enum)]
        function: Functional,
        #[arg(long, allow_hyphen_values = true)]
        dir: String,
    },
    /// Circumradius, inradius, diameter and minimum width.
    Radii {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        gauge: PathBuf,
        #[arg(long, value_enum, default_value_t = QuantityArg::All)]
        quantity: QuantityArg,
    },
    /// Check the diameter/circumradius inequality chain.
    Verify {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        gauge: PathBuf,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
    },
    /// Convergence table for a polygonal approximation study.
    Approx {
        #[arg(long, default_value = "reuleaux")]
        example: String,
        #[arg(long, default_value = "24,48,96,192")]
        n_list: String,
        /// Append `gap_hKK`, the largest deviation of the sampled difference
        /// body's support function from the disc.
        #[arg(long)]
        with_gap: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Functional {
    Support,
    Width,
    Gauge,
    Chord,
    Radius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    #[value(name = "R")]
    R,
    #[value(name = "r")]
    LowerR,
    #[value(name = "D")]
    D,
    #[value(name = "omega")]
    Omega,
    #[value(name = "all")]
    All,
}

/// Failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

/// Exit code reported for a library error: solver trouble is numerical,
/// everything else is a problem with the input.
pub fn exit_code(e: &GeometryError) -> i32 {
    match e {
        GeometryError::Solver { .. } | GeometryError::Lp(_) => EXIT_NUMERIC,
        _ => EXIT_INPUT,
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        Self {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn read_polytope(path: &Path) -> Result<VPolytope, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    VPolytope::from_json(&text)
        .map_err(|e| Failure::input(format!("invalid polytope in {}: {e}", path.display())))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Failure::input(format!("invalid {what} `{}`", t.trim())))
        })
        .collect()
}

/// Runs the tool on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::input(format!("write failed: {e}"));
    match command {
        Command::Body {
            kind,
            dim,
            n,
            scale,
        } => {
            let kind: BodyKind = kind.parse()?;
            let body = make_body(&BodySpec {
                kind,
                dim,
                n,
                scale,
            })?;
            writeln!(out, "{}", body.to_json()).map_err(io)?;
        }
        Command::Eval {
            body,
            function,
            dir,
        } => {
            let k = read_polytope(&body)?;
            let u: Vec<f64> = parse_list(&dir, "direction component")?;
            if u.iter().any(|v| !v.is_finite()) {
                return Err(Failure::input("direction must be finite"));
            }
            let value = match function {
                Functional::Support => support(&k, &u)?,
                Functional::Width => width_fn(&k, &u)?,
                Functional::Gauge => gauge(&GaugeBody::new(k)?, &u)?,
                Functional::Chord => max_chord(&k, &u)?,
                Functional::Radius => radius_fn(&k, &u)?,
            };
            let json = serde_json::to_string(&ValueReport::from(&value)).expect("serializes");
            writeln!(out, "{json}").map_err(io)?;
        }
        Command::Radii {
            body,
            gauge,
            quantity,
        } => {
            let k = read_polytope(&body)?;
            let c = read_polytope(&gauge)?;
            let mut report = RadiiReport::default();
            let want = |q: QuantityArg| quantity == q || quantity == QuantityArg::All;
            if want(QuantityArg::R) {
                report.insert(&circumradius(&k, &c)?);
            }
            if want(QuantityArg::LowerR) {
                report.insert(&inradius(&k, &c)?);
            }
            if want(QuantityArg::D) {
                report.insert(&diameter(&k, &c)?);
            }
            if want(QuantityArg::Omega) {
                report.insert(&min_width(&k, &c)?);
            }
            if quantity == QuantityArg::All {
                report.chain = Some(ChainEntry::from(&verify_chain(&k, &c, 1e-7)?));
            }
            writeln!(out, "{}", report.to_json()).map_err(io)?;
        }
        Command::Verify { body, gauge, tol } => {
            if !tol.is_finite() || tol < 0.0 {
                return Err(Failure::input("tolerance must be a non-negative number"));
            }
            let k = read_polytope(&body)?;
            let c = read_polytope(&gauge)?;
            let chain = verify_chain(&k, &c, tol)?;
            let entry = ChainEntry::from(&chain);
            let json = serde_json::to_string(&entry).expect("serializes");
            writeln!(out, "{json}").map_err(io)?;
            if !chain.all_hold() {
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Approx {
            example,
            n_list,
            with_gap,
        } => {
            if example != "reuleaux" {
                return Err(Failure::input(format!("unknown example `{example}`")));
            }
            let ns: Vec<usize> = parse_list(&n_list, "sample count")?;
            let header = if with_gap {
                format!("{APPROX_HEADER},gap_hKK")
            } else {
                APPROX_HEADER.to_string()
            };
            writeln!(out, "{header}").map_err(io)?;
            for n in ns {
                let row = ReuleauxRow::compute(n)?;
                let e = row.errors();
                let mut line = format!(
                    "{},{},{},{},{},{:e},{:e},{:e},{:e}",
                    n,
                    sig9(row.circumradius),
                    sig9(row.inradius),
                    sig9(row.diameter),
                    sig9(row.min_width),
                    sig9(e[0]),
                    sig9(e[1]),
                    sig9(e[2]),
                    sig9(e[3]),
                );
                if with_gap {
                    line.push_str(&format!(",{:e}", sig9(row.support_gap)));
                }
                writeln!(out, "{line}").map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}
