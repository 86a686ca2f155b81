//! Command-line interface.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use invsq_core::entire::{cos_entire, cos_entire_deriv, sinc_entire};
use invsq_core::solutions::{a_sol, b_sol, u_theta, v_sol, CouplingPoint};
use invsq_core::spectral::{
    big_t, build_measure, eigenvalues, frak_t, integrate_measure, j_func, m_func, phase_region, point_mass, r_func,
    s_func, t_density,
};
use invsq_core::transform::{
    bump, forward, parseval_from, roundtrip_check, EnergyGrid, DEFAULT_E_MAX, DEFAULT_E_MIN, DEFAULT_ORDER,
    DEFAULT_PANELS,
};
use invsq_core::{CutPlanePoint, Error};
use num_complex::Complex64;

use crate::figures::{DensityMap, EigenBranches, Figure, MPlane, PhaseDiagram};
use crate::grid::{parse_number, parse_pair, GridSpec, ParseError};
use crate::suites::Suite;
use crate::table::{Format, Table};

type C = Complex64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_ACCURACY: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

#[derive(Debug, Parser)]
#[command(name = "invsq", version, about = "Spectral data for the half-line inverse-square Schrodinger operator")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity along a grid.
    Eval(EvalArgs),
    /// List eigenvalues in an energy window.
    Eigen(EigenArgs),
    /// Classify (alpha, theta) by the number of eigenvalues.
    Phase(PhaseArgs),
    /// Spectral density t(E) along an energy grid.
    Density(DensityArgs),
    /// Point masses of the spectral measure, or its integral against a test function.
    Measure(MeasureArgs),
    /// Forward transform of a smooth bump.
    Transform(TransformArgs),
    /// Data behind one of the figures.
    Figure(FigureArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

fn number(s: &str) -> Result<f64, ParseError> {
    parse_number(s)
}

fn pair(s: &str) -> Result<(f64, f64), ParseError> {
    parse_pair(s)
}

fn grid(s: &str) -> Result<GridSpec, ParseError> {
    s.parse()
}

#[derive(Debug, Clone, Copy)]
pub enum TestFunction {
    Gauss { centre: f64, width: f64 },
    Lorentz { centre: f64, width: f64 },
}

impl TestFunction {
    pub fn eval(&self, e: f64) -> f64 {
        match *self {
            TestFunction::Gauss { centre, width } => (-((e - centre) / width).powi(2)).exp(),
            TestFunction::Lorentz { centre, width } => 1.0 / (1.0 + ((e - centre) / width).powi(2)),
        }
    }
}

fn test_function(s: &str) -> Result<TestFunction, ParseError> {
    let (kind, body) = s.split_once(':').ok_or_else(|| ParseError(format!("expected kind:c,w, got {s:?}")))?;
    let (centre, width) = parse_pair(body)?;
    if !(width > 0.0) {
        return Err(ParseError("the width must be positive".into()));
    }
    match kind {
        "gauss" => Ok(TestFunction::Gauss { centre, width }),
        "lorentz" => Ok(TestFunction::Lorentz { centre, width }),
        _ => Err(ParseError(format!("unknown test function {kind:?}; use gauss or lorentz"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Cos(x) for real x.
    Cos,
    /// Sinc(x) for real x.
    Sinc,
    /// Cos'(x) for real x.
    CosDeriv,
    /// Regular solution A(alpha, z | r) along r.
    A,
    /// Regular solution B(alpha, z | r) along r.
    B,
    /// Boundary solution U(alpha, theta, z | r) along r.
    U,
    /// Weyl solution V(alpha, z | r) along r.
    V,
    /// R(alpha, theta, z) along |z| at fixed phase.
    R,
    /// The m-function along |z| at fixed phase.
    M,
    /// T = 2|R|^2 along |z| at fixed phase.
    T,
    /// S(alpha, theta) along alpha.
    S,
    /// Normalized density along s = ln E.
    FrakT,
    /// Normalized Im M along s at fixed phase.
    J,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    pub quantity: Quantity,
    /// Grid of the running variable (x, r, |z|, alpha or s depending on the quantity).
    #[arg(long, value_parser = grid)]
    pub grid: GridSpec,
    #[arg(long, value_parser = number, default_value = "0")]
    pub alpha: f64,
    #[arg(long, value_parser = number, default_value = "0")]
    pub theta: f64,
    /// Spectral parameter re,im for A, B, U and V.
    #[arg(long, value_parser = pair, default_value = "1,0")]
    pub z: (f64, f64),
    /// Phase of z for R, M, T and J.
    #[arg(long, value_parser = number, default_value = "0")]
    pub phi: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EigenArgs {
    #[arg(long, value_parser = number)]
    pub alpha: f64,
    #[arg(long, value_parser = number)]
    pub theta: f64,
    /// Energy window lo,hi with lo < hi < 0.
    #[arg(long, value_parser = pair, default_value = "-1e6,-1e-6")]
    pub window: (f64, f64),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PhaseArgs {
    /// A number or a grid.
    #[arg(long, value_parser = grid)]
    pub alpha: GridSpec,
    /// A number or a grid.
    #[arg(long, value_parser = grid)]
    pub theta: GridSpec,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct DensityArgs {
    #[arg(long, value_parser = number)]
    pub alpha: f64,
    #[arg(long, value_parser = number)]
    pub theta: f64,
    #[arg(long = "e-grid", value_parser = grid)]
    pub e_grid: GridSpec,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MeasureArgs {
    #[arg(long, value_parser = number)]
    pub alpha: f64,
    #[arg(long, value_parser = number)]
    pub theta: f64,
    /// Test function `gauss:c,w` or `lorentz:c,w`; without it the point masses are listed.
    #[arg(long, value_parser = test_function)]
    pub phi: Option<TestFunction>,
    /// Eigenvalues whose weighted mass is below this are dropped.
    #[arg(long, value_parser = number, default_value = "1e-15")]
    pub floor: f64,
    #[arg(long = "quad-tol", value_parser = number, default_value = "1e-12")]
    pub quad_tol: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TransformArgs {
    #[arg(long, value_parser = number)]
    pub alpha: f64,
    #[arg(long, value_parser = number)]
    pub theta: f64,
    /// Support a,b of the bump exp(-2/(1-x^2)).
    #[arg(long, value_parser = pair, default_value = "1,2")]
    pub bump: (f64, f64),
    #[arg(long = "e-max", value_parser = number, default_value_t = DEFAULT_E_MAX)]
    pub e_max: f64,
    #[arg(long, default_value_t = DEFAULT_PANELS)]
    pub panels: usize,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Print Parseval and round-trip errors instead of the coefficients.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct FigureArgs {
    pub figure: Figure,
    #[arg(long = "alpha-grid", value_parser = grid)]
    pub alpha_grid: Option<GridSpec>,
    #[arg(long = "theta-grid", value_parser = grid)]
    pub theta_grid: Option<GridSpec>,
    /// Boundary angles for eigen-branches and density-map.
    #[arg(long, value_parser = number, value_delimiter = ',')]
    pub thetas: Option<Vec<f64>>,
    #[arg(long = "s-grid", value_parser = grid)]
    pub s_grid: Option<GridSpec>,
    #[arg(long = "phi-grid", value_parser = grid)]
    pub phi_grid: Option<GridSpec>,
    #[arg(long = "s-window", value_parser = pair)]
    pub s_window: Option<(f64, f64)>,
    /// Coupling for m-plane.
    #[arg(long, value_parser = number)]
    pub alpha: Option<f64>,
    /// Boundary angle for m-plane.
    #[arg(long, value_parser = number)]
    pub theta: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    All,
    Identities,
    Wronskians,
    Ode,
    Eigenvalues,
    Residues,
    Herglotz,
    Transform,
    Bounds,
    Smoothness,
}

impl SuiteChoice {
    fn suites(self) -> Vec<Suite> {
        let one = match self {
            SuiteChoice::All => return Suite::ALL.to_vec(),
            SuiteChoice::Identities => Suite::Identities,
            SuiteChoice::Wronskians => Suite::Wronskians,
            SuiteChoice::Ode => Suite::Ode,
            SuiteChoice::Eigenvalues => Suite::Eigenvalues,
            SuiteChoice::Residues => Suite::Residues,
            SuiteChoice::Herglotz => Suite::Herglotz,
            SuiteChoice::Transform => Suite::Transform,
            SuiteChoice::Bounds => Suite::Bounds,
            SuiteChoice::Smoothness => Suite::Smoothness,
        };
        vec![one]
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(default_value = "all")]
    pub suite: SuiteChoice,
}

/// Everything that can stop a run, with its exit status.
#[derive(Debug)]
pub enum RunError {
    Core(Error),
    Usage(String),
    Io(io::Error),
    /// A verification suite ran but missed its tolerance.
    Failed(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Core(Error::Domain(_) | Error::Pole(_) | Error::Unsupported(_)) => EXIT_DOMAIN,
            RunError::Core(Error::Accuracy { .. } | Error::Range(_)) | RunError::Failed(_) => EXIT_ACCURACY,
            RunError::Core(Error::InvalidArgument(_)) | RunError::Usage(_) => EXIT_USAGE,
            RunError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Core(e) => write!(f, "{e}"),
            RunError::Usage(m) => write!(f, "usage: {m}"),
            RunError::Io(e) => write!(f, "i/o error: {e}"),
            RunError::Failed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Core(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

/// What a command produced.
pub enum Output {
    Table(Table),
    /// A bare line of text.
    Line(String),
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "invsq: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), RunError> {
    let (out, failure) = run(&cli.command, cli.format)?;
    match &cli.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit(&out, cli.format, &mut w)?;
            w.flush()?;
        }
        None => emit(&out, cli.format, stdout)?,
    }
    failure.map_or(Ok(()), |m| Err(RunError::Failed(m)))
}

fn emit(out: &Output, format: Format, w: &mut dyn Write) -> io::Result<()> {
    match out {
        Output::Table(t) => t.write(format, w),
        Output::Line(s) => writeln!(w, "{s}"),
    }
}

fn point(alpha: f64, theta: f64) -> Result<CouplingPoint, RunError> {
    Ok(CouplingPoint::new(alpha, theta)?)
}

/// Runs one command. The second element carries a failure message for `verify`,
/// reported after the output is written.
pub fn run(command: &Command, format: Format) -> Result<(Output, Option<String>), RunError> {
    let table = match command {
        Command::Eval(a) => eval(a)?,
        Command::Eigen(a) => {
            let p = point(a.alpha, a.theta)?;
            let mut t = Table::new(&["branch", "s", "energy", "mass"]);
            for s in eigenvalues(p, a.window)? {
                t.push(vec![s.branch.into(), s.s.into(), s.energy.into(), point_mass(p, s.energy)?.into()]);
            }
            t
        }
        Command::Phase(a) => {
            let (alphas, thetas) = (a.alpha.points(), a.theta.points());
            if alphas.len() == 1 && thetas.len() == 1 && format == Format::Csv {
                let region = phase_region(point(alphas[0], thetas[0])?)?;
                return Ok((Output::Line(region.label().to_string()), None));
            }
            PhaseDiagram { alphas: a.alpha.clone(), thetas: a.theta.clone() }.render()?
        }
        Command::Density(a) => {
            let p = point(a.alpha, a.theta)?;
            let mut t = Table::new(&["energy", "density"]);
            for e in a.e_grid.points() {
                t.push(vec![e.into(), t_density(p, e)?.into()]);
            }
            t
        }
        Command::Measure(a) => measure(a)?,
        Command::Transform(a) => transform(a)?,
        Command::Figure(a) => figure(a)?,
        Command::Verify(a) => return verify(a),
    };
    Ok((Output::Table(table), None))
}

fn eval(a: &EvalArgs) -> Result<Table, RunError> {
    let xs = a.grid.points();
    let z = C::new(a.z.0, a.z.1);
    let p = point(a.alpha, a.theta)?;
    let mut t;
    match a.quantity {
        Quantity::Cos | Quantity::Sinc | Quantity::CosDeriv => {
            t = Table::new(&["x", "value"]);
            for x in xs {
                let x_c = C::new(x, 0.0);
                let v = match a.quantity {
                    Quantity::Cos => cos_entire(x_c)?,
                    Quantity::Sinc => sinc_entire(x_c)?,
                    _ => cos_entire_deriv(x_c)?,
                };
                t.push(vec![x.into(), v.re.into()]);
            }
        }
        Quantity::A | Quantity::B | Quantity::U | Quantity::V => {
            t = Table::new(&["r", "re", "im"]);
            for r in xs {
                let v = match a.quantity {
                    Quantity::A => a_sol(a.alpha, z, r)?,
                    Quantity::B => b_sol(a.alpha, z, r)?,
                    Quantity::U => u_theta(p, z, r)?,
                    _ => v_sol(a.alpha, CutPlanePoint::from_complex(z)?, r)?,
                };
                t.push(vec![r.into(), v.re.into(), v.im.into()]);
            }
        }
        Quantity::R | Quantity::M => {
            t = Table::new(&["modulus", "phase", "re", "im"]);
            for m in xs {
                let zp = CutPlanePoint::new(m, a.phi)?;
                let v = if a.quantity == Quantity::R { r_func(p, zp) } else { m_func(p, zp)? };
                t.push(vec![m.into(), a.phi.into(), v.re.into(), v.im.into()]);
            }
        }
        Quantity::T => {
            t = Table::new(&["modulus", "phase", "value"]);
            for m in xs {
                t.push(vec![m.into(), a.phi.into(), big_t(p, CutPlanePoint::new(m, a.phi)?).into()]);
            }
        }
        Quantity::S => {
            t = Table::new(&["alpha", "s"]);
            for alpha in xs {
                t.push(vec![alpha.into(), s_func(alpha, a.theta)?.into()]);
            }
        }
        Quantity::FrakT => {
            t = Table::new(&["s", "value"]);
            for s in xs {
                t.push(vec![s.into(), frak_t(p, s)?.into()]);
            }
        }
        Quantity::J => {
            t = Table::new(&["s", "phi", "value"]);
            for s in xs {
                t.push(vec![s.into(), a.phi.into(), j_func(p, s, a.phi)?.into()]);
            }
        }
    }
    Ok(t)
}

fn measure(a: &MeasureArgs) -> Result<Table, RunError> {
    let p = point(a.alpha, a.theta)?;
    match a.phi {
        None => {
            let m = build_measure(p, a.floor, &|e: f64| 1.0 / (1.0 + e * e))?;
            let mut t = Table::new(&["energy", "mass"]);
            for &(e, w) in &m.points {
                t.push(vec![e.into(), w.into()]);
            }
            Ok(t)
        }
        Some(phi) => {
            let f = move |e: f64| phi.eval(e);
            let m = build_measure(p, a.floor, &|e: f64| f(e).abs())?;
            let v = integrate_measure(&m, &f, a.quad_tol)?;
            let mut t = Table::new(&["integral", "points", "near_zero", "near_infinity"]);
            t.push(vec![v.into(), m.points.len().into(), m.truncation.near_zero.into(), m.truncation.near_infinity.into()]);
            Ok(t)
        }
    }
}

fn transform(a: &TransformArgs) -> Result<Table, RunError> {
    let p = point(a.alpha, a.theta)?;
    let (lo, hi) = a.bump;
    let f = bump(lo, hi, 2.0);
    let psi = invsq_core::solutions::RadialGridFunction::gauss_legendre(lo, hi, 8, 16, |r| Ok(C::new(f(r), 0.0)))?;
    let grid = EnergyGrid::log_gauss(DEFAULT_E_MIN, a.e_max, a.panels, a.order)?;
    let m = build_measure(p, 1e-16, &|e: f64| (-2.0 * e.abs().sqrt()).exp())?;
    let coeffs = forward(p, &psi, &grid, &m)?;
    if a.summary {
        let par = parseval_from(p, &psi, &coeffs, &grid, &m)?;
        let rt = roundtrip_check(p, &psi, &grid, &m)?;
        let mut t = Table::new(&["parseval_lhs", "parseval_rhs", "parseval_rel_err", "roundtrip_rel_err"]);
        t.push(vec![par.lhs.into(), par.rhs.into(), par.rel_err.into(), rt.into()]);
        return Ok(t);
    }
    let mut t = Table::new(&["energy", "kind", "re", "im"]);
    for (&e, c) in grid.energies().iter().zip(&coeffs.continuous_part) {
        t.push(vec![e.into(), "continuous".into(), c.re.into(), c.im.into()]);
    }
    for &(e, c) in &coeffs.point_part {
        t.push(vec![e.into(), "point".into(), c.re.into(), c.im.into()]);
    }
    Ok(t)
}

fn figure(a: &FigureArgs) -> Result<Table, RunError> {
    let t = match a.figure {
        Figure::PhaseDiagram => {
            let mut f = PhaseDiagram::default();
            f.alphas = a.alpha_grid.clone().unwrap_or(f.alphas);
            f.thetas = a.theta_grid.clone().unwrap_or(f.thetas);
            f.render()?
        }
        Figure::EigenBranches => {
            let mut f = EigenBranches::default();
            f.alphas = a.alpha_grid.clone().unwrap_or(f.alphas);
            f.thetas = a.thetas.clone().unwrap_or(f.thetas);
            f.s_window = a.s_window.unwrap_or(f.s_window);
            if !(f.s_window.0 < f.s_window.1) {
                return Err(RunError::Usage("s-window must satisfy lo < hi".into()));
            }
            f.render()?
        }
        Figure::DensityMap => {
            let mut f = DensityMap::default();
            f.alphas = a.alpha_grid.clone().unwrap_or(f.alphas);
            f.thetas = a.thetas.clone().unwrap_or(f.thetas);
            f.s = a.s_grid.clone().unwrap_or(f.s);
            f.render()?
        }
        Figure::MPlane => {
            let mut f = MPlane::default();
            f.alpha = a.alpha.unwrap_or(f.alpha);
            f.theta = a.theta.unwrap_or(f.theta);
            f.s = a.s_grid.clone().unwrap_or(f.s);
            f.phi = a.phi_grid.clone().unwrap_or(f.phi);
            f.render()?
        }
    };
    Ok(t)
}

fn verify(a: &VerifyArgs) -> Result<(Output, Option<String>), RunError> {
    let mut t = Table::new(&["criterion", "suite", "probe", "samples", "max_rel_err", "tolerance", "pass"]);
    let mut failed = Vec::new();
    for suite in a.suite.suites() {
        let c = suite.run()?;
        if !c.pass() {
            failed.push(suite.id());
        }
        for r in &c.reports {
            t.push(vec![
                (suite.number() as i64).into(),
                suite.id().into(),
                r.name.as_str().into(),
                r.samples.into(),
                r.max_rel_err.into(),
                r.tolerance.into(),
                r.pass.into(),
            ]);
        }
    }
    let failure = (!failed.is_empty()).then(|| failed.join(", "));
    Ok((Output::Table(t), failure))
}
