//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite records a
//! failure, 2 on usage or parse errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chebyshev;
use crate::error::{Error, Result};
use crate::euler;
use crate::exact::{parse_poly, BigRational, GaussianRational, MultiPoly};
use crate::gcn::{self, GcnUnit, PowerMethod};
use crate::higher_order;
use crate::linalg::Mat2;
use crate::matrix_unit::{self, CMat2, MatPowerMethod};
use crate::verify::{self, VerificationReport, VerifyConfig, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(
    name = "gencheb",
    version,
    about = "Generalized complex units, Chebyshev polynomials and third-order Hermite polynomials in exact arithmetic"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Powers and roots of a unit h^2 = a + b*h
    Gcn {
        #[command(subcommand)]
        action: GcnAction,
    },
    /// The cos- and sin-like pair C, S of a unit
    Euler {
        #[command(subcommand)]
        action: EulerAction,
    },
    /// Chebyshev polynomials T_n, U_n and the pair A_n, B_n
    Cheb {
        #[command(subcommand)]
        action: ChebAction,
    },
    /// 2x2 matrices: Pauli coordinates, powers, benchmark
    Mat {
        #[command(subcommand)]
        action: MatAction,
    },
    /// Two-variable Chebyshev polynomials U2_n(u, v)
    U2 {
        #[command(subcommand)]
        action: U2Action,
    },
    /// Third-order Hermite polynomial H3_n(x, y, z)
    Hermite3 {
        #[arg(long)]
        n: u64,
    },
    /// Run verification suites
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Args, Debug, Clone)]
struct UnitArgs {
    /// Constant term a of h^2 = a + b*h (rational, e.g. -1 or 3/2)
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Linear coefficient b of h^2 = a + b*h
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Subcommand, Debug)]
enum GcnAction {
    /// Coefficients (a_n, b_n) of h^n
    Powers {
        #[command(flatten)]
        unit: UnitArgs,
        #[arg(long)]
        n: u64,
        /// recurrence, matrix, binet or all
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// The conjugate roots h+ and h-
    Roots {
        #[command(flatten)]
        unit: UnitArgs,
    },
}

#[derive(Subcommand, Debug)]
enum EulerAction {
    /// Series summation
    Series {
        #[command(flatten)]
        unit: UnitArgs,
        #[arg(long, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, default_value_t = euler::DEFAULT_TOL)]
        tol: f64,
    },
    /// Closed form through the conjugate roots
    Closed {
        #[command(flatten)]
        unit: UnitArgs,
        #[arg(long, allow_hyphen_values = true)]
        phi: f64,
    },
    /// ODE residuals on an evenly spaced grid
    Ode {
        #[command(flatten)]
        unit: UnitArgs,
        #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, default_value_t = 41)]
        points: usize,
        #[arg(long, default_value_t = euler::DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Args, Debug, Clone)]
struct IndexArgs {
    /// A single index
    #[arg(long, conflicts_with = "nmax", required_unless_present = "nmax")]
    n: Option<u64>,
    /// Tabulate indices 0..=nmax
    #[arg(long)]
    nmax: Option<u64>,
}

impl IndexArgs {
    fn range(&self) -> (u64, u64) {
        match (self.n, self.nmax) {
            (Some(n), _) => (n, n),
            (None, Some(m)) => (0, m),
            (None, None) => unreachable!("clap enforces one of --n/--nmax"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum ChebAction {
    /// First kind T_n
    T(IndexArgs),
    /// Second kind U_n
    U(IndexArgs),
    /// A_n, B_n with H^n = A_n + B_n*H
    Ab(IndexArgs),
    /// Exact Chebyshev identity suite
    Verify(SuiteArgs),
}

#[derive(Subcommand, Debug)]
enum MatAction {
    /// Pauli coordinates alpha, beta_k and gamma
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
    /// M^n by chebyshev, squaring or general_recurrence
    Pow {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "squaring")]
        method: String,
    },
    /// Time the Chebyshev closed form against squaring
    Bench {
        #[arg(long, default_value = "2,1;1,1", allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_delimiter = ',', default_value = "16,256,1024")]
        sizes: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
enum U2Action {
    /// Coefficient extraction from 1/(1 - u t + v t^2 - t^3)
    Series(IndexArgs),
    /// Third-order recurrence
    Rec(IndexArgs),
    /// Exact Laplace-Gamma evaluation (needs n >= 1)
    Laplace(IndexArgs),
    /// Triple-agreement suite
    Verify(SuiteArgs),
}

#[derive(Args, Debug, Clone)]
struct SuiteArgs {
    #[arg(long, default_value_t = 24)]
    nmax: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override every floating-point threshold
    #[arg(long)]
    tol: Option<f64>,
    /// Report wall time (makes output non-reproducible)
    #[arg(long)]
    timing: bool,
}

impl SuiteArgs {
    fn config(&self) -> VerifyConfig {
        VerifyConfig {
            nmax: self.nmax,
            seed: self.seed,
            tol: self.tol,
        }
    }
}

#[derive(Subcommand, Debug)]
enum VerifyAction {
    /// Every suite
    All(SuiteArgs),
    /// One suite: exact, gcn, euler, cheb, mat or u2
    Suite {
        name: String,
        #[command(flatten)]
        args: SuiteArgs,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn json_rows(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|r| {
                let obj: serde_json::Map<String, Value> = self
                    .header
                    .iter()
                    .zip(r)
                    .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                    .collect();
                Value::Object(obj)
            })
            .collect()
    }

    /// Text output: a lone value prints bare, tables print `key = value`
    /// pairs separated by blank-free lines.
    fn emit(&self, kind: &str, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "kind": kind,
                    "rows": self.json_rows(),
                });
                writeln!(out, "{doc}")
            }
            Format::Csv => {
                writeln!(out, "{}", self.header.join(","))?;
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(|c| csv_cell(c)).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
                Ok(())
            }
            Format::Text => {
                let single_value = self.rows.len() == 1 && self.header.first() == Some(&"n");
                for r in &self.rows {
                    if single_value && r.len() == 2 {
                        writeln!(out, "{}", r[1])?;
                    } else {
                        let parts: Vec<String> = self
                            .header
                            .iter()
                            .zip(r)
                            .map(|(h, v)| format!("{h} = {v}"))
                            .collect();
                        writeln!(out, "{}", parts.join("; "))?;
                    }
                }
                Ok(())
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

fn parse_scalar(text: &str) -> Result<GaussianRational> {
    parse_poly::<&str>(text, &[])?
        .as_constant()
        .ok_or_else(|| Error::Usage(format!("`{text}` is not a constant")))
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let g = parse_scalar(text)?;
    if g.is_real() {
        Ok(g.re)
    } else {
        Err(Error::Usage(format!("`{text}` must be real")))
    }
}

fn parse_unit(args: &UnitArgs) -> Result<GcnUnit<BigRational>> {
    Ok(GcnUnit::new(parse_rational(&args.a)?, parse_rational(&args.b)?))
}

/// `"m11,m12;m21,m22"`, entries in the polynomial text format.
fn parse_matrix(text: &str) -> Result<CMat2> {
    let rows: Vec<&str> = text.split(';').collect();
    let cells: Vec<Vec<&str>> = rows.iter().map(|r| r.split(',').collect()).collect();
    if cells.len() != 2 || cells.iter().any(|r| r.len() != 2) {
        return Err(Error::Usage(format!(
            "matrix must look like `m11,m12;m21,m22`, got `{text}`"
        )));
    }
    Ok(Mat2::new(
        parse_scalar(cells[0][0])?,
        parse_scalar(cells[0][1])?,
        parse_scalar(cells[1][0])?,
        parse_scalar(cells[1][1])?,
    ))
}

fn render_matrix(m: &CMat2) -> String {
    format!("{},{};{},{}", m.m11, m.m12, m.m21, m.m22)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let format = cli.format;
    let io = |e: std::io::Error| Error::Usage(format!("cannot write output: {e}"));
    match &cli.command {
        Command::Gcn { action } => gcn_command(action, format, out)?,
        Command::Euler { action } => euler_command(action, format, out)?,
        Command::Cheb { action } => {
            let (kind, table) = match action {
                ChebAction::T(ix) => ("cheb_t", poly_table(ix, |n| chebyshev::cheb_t(n).poly)),
                ChebAction::U(ix) => ("cheb_u", poly_table(ix, |n| chebyshev::cheb_u(n).poly)),
                ChebAction::Ab(ix) => {
                    let (lo, hi) = ix.range();
                    let mut t = Table::new(&["n", "A_n", "B_n"]);
                    for ab in chebyshev::cheb_ab_sequence(hi).into_iter().skip(lo as usize) {
                        t.push(vec![ab.n.to_string(), ab.a_n.to_string(), ab.b_n.to_string()]);
                    }
                    ("cheb_ab", t)
                }
                ChebAction::Verify(args) => {
                    let r = verify::run_suite("cheb", &args.config(), args.timing).unwrap();
                    return emit_report(&r, format, out);
                }
            };
            table.emit(kind, format, out).map_err(io)?;
        }
        Command::Mat { action } => mat_command(action, format, out)?,
        Command::U2 { action } => {
            let (kind, table) = match action {
                U2Action::Series(ix) => {
                    let (lo, hi) = ix.range();
                    let seq = higher_order::u2_by_series(hi.max(1))?;
                    ("u2_series", poly_table(ix, |n| seq[n as usize].poly.clone()).skip_before(lo))
                }
                U2Action::Rec(ix) => {
                    let (lo, hi) = ix.range();
                    let seq = higher_order::u2_by_recurrence(hi.max(2))?;
                    ("u2_rec", poly_table(ix, |n| seq[n as usize].poly.clone()).skip_before(lo))
                }
                U2Action::Laplace(ix) => {
                    let (lo, _) = ix.range();
                    if lo == 0 {
                        return Err(Error::Usage(
                            "the Laplace route yields U2_n for n >= 1".into(),
                        ));
                    }
                    ("u2_laplace", poly_table(ix, |n| higher_order::u2_by_laplace(n - 1).poly))
                }
                U2Action::Verify(args) => {
                    let r = verify::run_suite("u2", &args.config(), args.timing).unwrap();
                    return emit_report(&r, format, out);
                }
            };
            table.emit(kind, format, out).map_err(io)?;
        }
        Command::Hermite3 { n } => {
            let mut t = Table::new(&["n", "poly"]);
            t.push(vec![n.to_string(), higher_order::hermite3(*n).to_string()]);
            t.emit("hermite3", format, out).map_err(io)?;
        }
        Command::Verify { action } => {
            let r = match action {
                VerifyAction::All(args) => verify::run_all(&args.config(), args.timing),
                VerifyAction::Suite { name, args } => {
                    verify::run_suite(name, &args.config(), args.timing).ok_or_else(|| {
                        Error::Usage(format!(
                            "unknown suite `{name}`; expected one of {}",
                            verify::SUITES.join(", ")
                        ))
                    })?
                }
            };
            return emit_report(&r, format, out);
        }
    }
    Ok(0)
}

impl Table {
    fn skip_before(mut self, lo: u64) -> Self {
        self.rows.retain(|r| r[0].parse::<u64>().map_or(true, |n| n >= lo));
        self
    }
}

fn poly_table(ix: &IndexArgs, f: impl Fn(u64) -> MultiPoly) -> Table {
    let (lo, hi) = ix.range();
    let mut t = Table::new(&["n", "poly"]);
    for n in lo..=hi {
        t.push(vec![n.to_string(), f(n).to_string()]);
    }
    t
}

fn emit_report(r: &VerificationReport, format: Format, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Usage(format!("cannot write output: {e}"));
    match format {
        Format::Json => {
            let doc = serde_json::to_string(r).expect("report serializes");
            writeln!(out, "{doc}").map_err(io)?;
        }
        Format::Csv => {
            writeln!(out, "suite,cases,failures").map_err(io)?;
            for s in r.suites.iter().chain(std::iter::once(r)) {
                writeln!(out, "{},{},{}", s.suite, s.cases, s.failures.len()).map_err(io)?;
            }
        }
        Format::Text => write!(out, "{}", r.render_text()).map_err(io)?,
    }
    Ok(r.exit_code())
}

fn gcn_command(action: &GcnAction, format: Format, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::Usage(format!("cannot write output: {e}"));
    match action {
        GcnAction::Powers { unit, n, method } => {
            let unit = parse_unit(unit)?;
            let methods: Vec<PowerMethod> = if method == "all" {
                PowerMethod::ALL.to_vec()
            } else {
                vec![method.parse()?]
            };
            let mut t = Table::new(&["method", "n", "a_n", "b_n"]);
            for m in methods {
                let c = gcn::power_coeffs(&unit, *n, m);
                t.push(vec![m.name().into(), n.to_string(), c.a_n.to_string(), c.b_n.to_string()]);
            }
            t.emit("gcn_powers", format, out).map_err(io)?;
        }
        GcnAction::Roots { unit } => {
            let unit = parse_unit(unit)?;
            let roots = gcn::conjugate_roots(&unit);
            let (hp, hm) = roots.to_complex();
            let surd = |s: &gcn::QuadSurd<BigRational>| {
                format!("{} + {}*sqrt({})", s.p, s.q, s.disc)
            };
            let mut t = Table::new(&["root", "exact", "value", "degenerate"]);
            for (name, s, z) in [("h+", &roots.plus, hp), ("h-", &roots.minus, hm)] {
                t.push(vec![
                    name.into(),
                    surd(s),
                    format!("{}{:+}i", z.re, z.im),
                    roots.degenerate.to_string(),
                ]);
            }
            t.emit("gcn_roots", format, out).map_err(io)?;
        }
    }
    Ok(())
}

fn euler_command(action: &EulerAction, format: Format, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::Usage(format!("cannot write output: {e}"));
    let pair_table = |p: euler::EulerPair| {
        let mut t = Table::new(&["phi", "C", "S", "terms"]);
        t.push(vec![p.phi.to_string(), p.c.to_string(), p.s.to_string(), p.terms.to_string()]);
        t
    };
    match action {
        EulerAction::Series { unit, phi, tol } => {
            let p = euler::euler_series(&parse_unit(unit)?, *phi, *tol)?;
            pair_table(p).emit("euler_series", format, out).map_err(io)?;
        }
        EulerAction::Closed { unit, phi } => {
            let p = euler::euler_closed_form(&parse_unit(unit)?, *phi);
            pair_table(p).emit("euler_closed", format, out).map_err(io)?;
        }
        EulerAction::Ode { unit, lo, hi, points, tol } => {
            let grid = euler::linspace(*lo, *hi, *points);
            let r = euler::ode_residual(&parse_unit(unit)?, &grid, *tol)?;
            let mut t = Table::new(&["points", "max_c_residual", "max_s_residual"]);
            t.push(vec![r.points.to_string(), format!("{:e}", r.max_c), format!("{:e}", r.max_s)]);
            t.emit("euler_ode", format, out).map_err(io)?;
        }
    }
    Ok(())
}

fn mat_command(action: &MatAction, format: Format, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::Usage(format!("cannot write output: {e}"));
    match action {
        MatAction::Decompose { m } => {
            let c = matrix_unit::pauli_decompose(&parse_matrix(m)?);
            let mut t = Table::new(&["alpha", "beta1", "beta2", "beta3", "gamma"]);
            t.push(vec![
                c.alpha.to_string(),
                c.beta[0].to_string(),
                c.beta[1].to_string(),
                c.beta[2].to_string(),
                c.gamma.to_string(),
            ]);
            t.emit("mat_decompose", format, out).map_err(io)?;
        }
        MatAction::Pow { m, n, method } => {
            let method: MatPowerMethod = method.parse()?;
            let p = matrix_unit::mat_power(&parse_matrix(m)?, *n, method)?;
            let mut t = Table::new(&["method", "n", "matrix"]);
            t.push(vec![method.name().into(), n.to_string(), render_matrix(&p)]);
            t.emit("mat_pow", format, out).map_err(io)?;
        }
        MatAction::Bench { m, sizes, trials } => {
            let r = matrix_unit::bench_power(&parse_matrix(m)?, sizes, *trials)?;
            match format {
                Format::Csv | Format::Text => write!(out, "{}", r.to_csv()).map_err(io)?,
                Format::Json => {
                    let rows: Vec<Value> = r
                        .rows
                        .iter()
                        .map(|row| {
                            json!({
                                "method": row.method.name(),
                                "n": row.n,
                                "median_ns": row.median_ns as u64,
                                "max_coeff_bits": row.max_coeff_bits,
                            })
                        })
                        .collect();
                    let doc = json!({
                        "schema": SCHEMA_VERSION,
                        "kind": "mat_bench",
                        "rows": rows,
                        "disagreements": r.disagreements,
                    });
                    writeln!(out, "{doc}").map_err(io)?;
                }
            }
        }
    }
    Ok(())
}
