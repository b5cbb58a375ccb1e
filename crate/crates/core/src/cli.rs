//! Command-line front end for the `cu3m` binary.
//!
//! Every subcommand resolves its flags into library calls and formats the
//! result; no physics lives here. Exit codes: 0 success, 2 invalid input,
//! 3 numerical failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cycles::{evaluate_cycle, CycleKind, CycleOptions, CycleResult, Performance, Protocol, StrokeKind};
use crate::error::Error;
use crate::param_file::{load_params, to_json};
use crate::spin_model::{preset, CompoundParams, Direction, MagneticField, PRESET_NAMES};
use crate::sweep::{
    csv_row, export_csv, export_pgm, format_full, sweep_b0_b1, sweep_b1_th, AxisVariable, CellValues, GridAxis,
    PgmLayer, SweepOptions, CSV_HEADER,
};
use crate::thermodynamics::{spectrum_at, thermo_point, trace_isentrope};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cu3m",
    version,
    about = "Spectra, thermodynamics and quantum thermal cycles of Cu3 spin triangles",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of the Hamiltonian in Kelvin, ascending.
    Spectrum(SpectrumArgs),
    /// Internal energy, entropy and level populations at one (T, B).
    Thermo(ThermoArgs),
    /// One reversible cycle with its stroke breakdown.
    Cycle(CycleArgs),
    /// Mode / efficiency map over a two-parameter grid.
    Sweep(SweepArgs),
    /// Temperature along the isentrope through (T0, B0).
    Isentrope(IsentropeArgs),
    /// Built-in parameter sets.
    Preset {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum PresetAction {
    /// Names of the built-in parameter sets.
    List,
    /// A preset in parameter-file JSON.
    Show { name: String },
}

/// Exactly one of `--compound` and `--params`.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in parameter set (see `preset list`).
    #[arg(long)]
    pub compound: Option<String>,
    /// JSON parameter file.
    #[arg(long)]
    pub params: Option<PathBuf>,
}

impl Source {
    pub fn load(&self) -> Result<CompoundParams, Error> {
        match (&self.compound, &self.params) {
            (Some(name), None) => preset(name),
            (None, Some(path)) => load_params(path),
            _ => Err(Error::InvalidParameter(
                "give exactly one of --compound, --params".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Field orientation: x, y, z or a comma-separated 3-vector.
    #[arg(long, default_value = "z", value_parser = parse_direction)]
    pub direction: Direction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Human,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapFormat {
    Csv,
    Pgm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layer {
    Mode,
    Efficiency,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlaneArg {
    B0b1,
    B1th,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Carnot,
    Otto,
    Stirling,
}

impl From<KindArg> for CycleKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Carnot => CycleKind::Carnot,
            KindArg::Otto => CycleKind::Otto,
            KindArg::Stirling => CycleKind::Stirling,
        }
    }
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub orientation: FieldArgs,
    /// Field in Tesla: `bx,by,bz`, or a magnitude along --direction.
    #[arg(long, default_value = "0")]
    pub field: String,
    #[arg(long, value_enum, default_value = "human")]
    pub format: TextFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ThermoArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub orientation: FieldArgs,
    #[arg(long, default_value = "0")]
    pub field: String,
    /// Kelvin.
    #[arg(long, short = 'T')]
    pub temperature: f64,
    #[arg(long, value_enum, default_value = "human")]
    pub format: TextFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CycleSettings {
    /// Bracket for the Carnot intermediate fields, `lo:hi` in Tesla.
    #[arg(long, default_value = "0:10", value_parser = parse_bracket)]
    pub field_bracket: (f64, f64),
    /// Magnitudes below this count as zero when classifying, Kelvin.
    #[arg(long, default_value_t = crate::cycles::DEFAULT_MODE_TOL)]
    pub mode_tol: f64,
}

impl CycleSettings {
    fn options(&self) -> CycleOptions {
        CycleOptions {
            mode_tol: self.mode_tol,
            field_bracket: self.field_bracket,
        }
    }
}

#[derive(Debug, Args)]
pub struct CycleArgs {
    #[arg(value_enum)]
    pub kind: KindArg,
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub orientation: FieldArgs,
    #[arg(long)]
    pub tl: f64,
    #[arg(long)]
    pub th: f64,
    #[arg(long)]
    pub b0: f64,
    #[arg(long)]
    pub b1: f64,
    #[command(flatten)]
    pub settings: CycleSettings,
    #[arg(long, value_enum, default_value = "human")]
    pub format: TextFormat,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub kind: KindArg,
    #[arg(value_enum)]
    pub plane: PlaneArg,
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub orientation: FieldArgs,
    #[arg(long)]
    pub tl: f64,
    /// Hot bath, required for the b0b1 plane.
    #[arg(long)]
    pub th: Option<f64>,
    /// Fixed B0, required for the b1th plane.
    #[arg(long)]
    pub b0: Option<f64>,
    /// x axis as `min:max:count` (B0 for b0b1, B1 for b1th).
    #[arg(long, value_parser = parse_grid)]
    pub x: (f64, f64, usize),
    /// y axis as `min:max:count` (B1 for b0b1, T_h for b1th).
    #[arg(long, value_parser = parse_grid)]
    pub y: (f64, f64, usize),
    #[command(flatten)]
    pub settings: CycleSettings,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: MapFormat,
    /// PGM layer.
    #[arg(long, value_enum, default_value = "mode")]
    pub layer: Layer,
    /// Evaluate cells on one thread.
    #[arg(long)]
    pub serial: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IsentropeArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub orientation: FieldArgs,
    /// Starting temperature, Kelvin.
    #[arg(long)]
    pub t0: f64,
    /// Starting field magnitude, Tesla.
    #[arg(long, default_value_t = 0.0)]
    pub b0: f64,
    /// Final field magnitude, Tesla.
    #[arg(long)]
    pub b_max: f64,
    /// Number of grid points including both ends.
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    /// Temperature search bracket, `lo:hi` in Kelvin.
    #[arg(long, default_value = "0.001:50", value_parser = parse_bracket)]
    pub t_bracket: (f64, f64),
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_floats(s: &str, sep: char) -> Result<Vec<f64>, String> {
    s.split(sep)
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}")))
        .collect()
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    let v = match s {
        "x" => [1.0, 0.0, 0.0],
        "y" => [0.0, 1.0, 0.0],
        "z" => [0.0, 0.0, 1.0],
        _ => match parse_floats(s, ',')?[..] {
            [a, b, c] => [a, b, c],
            _ => return Err("expected x, y, z or three comma-separated numbers".into()),
        },
    };
    Direction::new(v).map_err(|e| e.to_string())
}

fn parse_bracket(s: &str) -> Result<(f64, f64), String> {
    match parse_floats(s, ':')?[..] {
        [lo, hi] if lo.is_finite() && hi.is_finite() && lo < hi => Ok((lo, hi)),
        [_, _] => Err("bracket needs finite lo < hi".into()),
        _ => Err("expected `lo:hi`".into()),
    }
}

fn parse_grid(s: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err("expected `min:max:count`".into());
    };
    let lo: f64 = lo.trim().parse().map_err(|e| format!("`{lo}`: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("`{hi}`: {e}"))?;
    let n: usize = n.trim().parse().map_err(|e| format!("`{n}`: {e}"))?;
    Ok((lo, hi, n))
}

/// `bx,by,bz`, or a bare magnitude along `direction`.
pub fn parse_field(s: &str, direction: Direction) -> Result<MagneticField, Error> {
    let bad = |why: String| Error::InvalidParameter(format!("field `{s}`: {why}"));
    let v = parse_floats(s, ',').map_err(bad)?;
    let field = match v[..] {
        [m] => MagneticField::along(direction, m),
        [x, y, z] => MagneticField::new(x, y, z),
        _ => return Err(bad("expected one or three numbers".into())),
    };
    if !field.is_finite() {
        return Err(bad("components must be finite".into()));
    }
    Ok(field)
}

/// `%g`-style rendering with `digits` significant digits.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}").to_lowercase();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if exp < -4 || exp >= digits as i32 {
        return sci;
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let fixed = format!("{v:.decimals$}");
    if fixed.contains('.') {
        fixed.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        fixed
    }
}

fn g6(v: f64) -> String {
    format_sig(v, 6)
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(bytes: &[u8], output: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Failure::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))),
        None => Ok(stdout.write_all(bytes)?),
    }
}

fn cmd_spectrum(a: &SpectrumArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = a.source.load()?;
    let field = parse_field(&a.field, a.orientation.direction)?;
    let spec = spectrum_at(&params, field)?;
    let mut s = String::new();
    match a.format {
        TextFormat::Human => {
            let [bx, by, bz] = field.components();
            writeln!(s, "# {}  B = ({}, {}, {}) T", params.name, g6(bx), g6(by), g6(bz)).unwrap();
            for (i, e) in spec.energies().iter().enumerate() {
                writeln!(s, "{:>2}  {:>20}", i + 1, format_sig(*e, 12)).unwrap();
            }
        }
        TextFormat::Csv => {
            s.push_str("level,energy\n");
            for (i, e) in spec.energies().iter().enumerate() {
                writeln!(s, "{},{}", i + 1, format_full(*e)).unwrap();
            }
        }
    }
    emit(s.as_bytes(), &a.output, stdout)
}

fn cmd_thermo(a: &ThermoArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = a.source.load()?;
    let field = parse_field(&a.field, a.orientation.direction)?;
    let tp = thermo_point(&params, a.temperature, field)?;
    let mut s = String::new();
    match a.format {
        TextFormat::Human => {
            let [bx, by, bz] = field.components();
            writeln!(
                s,
                "# {}  T = {} K  B = ({}, {}, {}) T",
                params.name,
                g6(tp.temperature),
                g6(bx),
                g6(by),
                g6(bz)
            )
            .unwrap();
            writeln!(s, "U     = {} K", g6(tp.internal_energy)).unwrap();
            writeln!(s, "S     = {} k_B", g6(tp.entropy)).unwrap();
            writeln!(s, "ln Z  = {}", g6(tp.log_z)).unwrap();
            writeln!(s, "level  energy/K        p").unwrap();
            for (i, (e, p)) in tp.energies.iter().zip(tp.probs.iter()).enumerate() {
                writeln!(s, "{:>5}  {:<12}  {}", i + 1, g6(*e), g6(*p)).unwrap();
            }
        }
        TextFormat::Csv => {
            s.push_str("quantity,value\n");
            writeln!(s, "U,{}", format_full(tp.internal_energy)).unwrap();
            writeln!(s, "S,{}", format_full(tp.entropy)).unwrap();
            writeln!(s, "lnZ,{}", format_full(tp.log_z)).unwrap();
            for (i, p) in tp.probs.iter().enumerate() {
                writeln!(s, "p{},{}", i + 1, format_full(*p)).unwrap();
            }
        }
    }
    emit(s.as_bytes(), &a.output, stdout)
}

fn stroke_kind(k: StrokeKind) -> &'static str {
    match k {
        StrokeKind::Isothermal => "isothermal",
        StrokeKind::Isochoric => "isochoric",
        StrokeKind::Adiabatic => "adiabatic",
    }
}

/// Human-readable cycle report.
pub fn cycle_report(params: &CompoundParams, protocol: &Protocol, r: &CycleResult) -> String {
    let mut s = String::new();
    let [dx, dy, dz] = protocol.direction.components();
    writeln!(s, "{} cycle, {}", r.kind, params.name).unwrap();
    writeln!(
        s,
        "T_l = {} K, T_h = {} K, B0 = {} T, B1 = {} T, direction ({}, {}, {})",
        g6(protocol.t_cold),
        g6(protocol.t_hot),
        g6(protocol.b0),
        g6(protocol.b1),
        g6(dx),
        g6(dy),
        g6(dz)
    )
    .unwrap();
    if let Some((bb, bd)) = r.switch_fields {
        writeln!(s, "B_b = {} T, B_d = {} T", g6(bb), g6(bd)).unwrap();
    }
    match &r.strokes {
        Some(strokes) => {
            writeln!(
                s,
                "stroke  kind        {:>12}  {:>12}  {:>12}",
                "heat/K", "work/K", "dU/K"
            )
            .unwrap();
            for st in strokes {
                writeln!(
                    s,
                    "{:<6}  {:<10}  {:>12}  {:>12}  {:>12}",
                    st.label.as_str(),
                    stroke_kind(st.kind),
                    g6(st.heat),
                    g6(st.work),
                    g6(st.delta_u)
                )
                .unwrap();
            }
        }
        None => writeln!(s, "strokes: intermediate fields not found in the bracket").unwrap(),
    }
    writeln!(s, "w_net = {} K", g6(r.w_net)).unwrap();
    writeln!(s, "q_in  = {} K", g6(r.q_in)).unwrap();
    writeln!(s, "q_out = {} K", g6(r.q_out)).unwrap();
    writeln!(s, "mode  = {}", r.mode).unwrap();
    match r.performance {
        Some(Performance::Efficiency(eta)) => writeln!(s, "eta   = {}", g6(eta)).unwrap(),
        Some(Performance::Cop { cop, kappa }) => {
            writeln!(s, "COP   = {}", g6(cop)).unwrap();
            writeln!(s, "kappa = {}", g6(kappa)).unwrap();
        }
        None => {}
    }
    writeln!(s, "closure |w_net - (q_in + q_out)| = {:e} K", r.closure_residual()).unwrap();
    s
}

fn cmd_cycle(a: &CycleArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = a.source.load()?;
    let protocol = Protocol::new(a.tl, a.th, a.b0, a.b1).with_direction(a.orientation.direction);
    let options = a.settings.options();
    let r = evaluate_cycle(a.kind.into(), &params, &protocol, &options)?;
    let text = match a.format {
        TextFormat::Human => cycle_report(&params, &protocol, &r),
        TextFormat::Csv => format!(
            "{CSV_HEADER}\n{}\n",
            csv_row(a.b0, a.b1, &Ok(CellValues::from(&r)), options.mode_tol)
        ),
    };
    emit(text.as_bytes(), &a.output, stdout)
}

fn cmd_sweep(a: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let params = a.source.load()?;
    let options = SweepOptions {
        cycle: a.settings.options(),
        parallel: !a.serial,
    };
    let dir = a.orientation.direction;
    let kind = a.kind.into();
    let result = match a.plane {
        PlaneArg::B0b1 => {
            let th = a.th.ok_or_else(|| Failure::Usage("the b0b1 plane needs --th".into()))?;
            if a.b0.is_some() {
                return Err(Failure::Usage("--b0 is an axis of the b0b1 plane; use --x".into()));
            }
            let x = GridAxis::new(AxisVariable::B0, a.x.0, a.x.1, a.x.2)?;
            let y = GridAxis::new(AxisVariable::B1, a.y.0, a.y.1, a.y.2)?;
            sweep_b0_b1(&params, a.tl, th, x, y, kind, dir, &options)?
        }
        PlaneArg::B1th => {
            let b0 = a.b0.ok_or_else(|| Failure::Usage("the b1th plane needs --b0".into()))?;
            if a.th.is_some() {
                return Err(Failure::Usage("--th is an axis of the b1th plane; use --y".into()));
            }
            let x = GridAxis::new(AxisVariable::B1, a.x.0, a.x.1, a.x.2)?;
            let y = GridAxis::new(AxisVariable::Th, a.y.0, a.y.1, a.y.2)?;
            sweep_b1_th(&params, a.tl, b0, x, y, kind, dir, &options)?
        }
    };
    let bytes = match a.format {
        MapFormat::Csv => export_csv(&result),
        MapFormat::Pgm => export_pgm(
            &result,
            match a.layer {
                Layer::Mode => PgmLayer::Mode,
                Layer::Efficiency => PgmLayer::Efficiency,
            },
        ),
    };
    emit(&bytes, &a.output, stdout)?;
    let d = &result.diagnostics;
    writeln!(
        stderr,
        "{} {} {}x{}: {d}",
        result.cycle,
        result.plane.as_str(),
        a.x.2,
        a.y.2
    )?;
    if let Some(msg) = result.cells.iter().find_map(|c| c.outcome.as_ref().err()) {
        writeln!(stderr, "first cell error: {msg}")?;
    }
    Ok(if d.error == d.total() { EXIT_NUMERICAL } else { EXIT_OK })
}

fn cmd_isentrope(a: &IsentropeArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let params = a.source.load()?;
    if a.steps < 2 {
        return Err(Failure::Lib(Error::InvalidParameter(format!(
            "--steps must be at least 2, got {}",
            a.steps
        ))));
    }
    if !a.b_max.is_finite() || !a.b0.is_finite() || a.b_max == a.b0 {
        return Err(Failure::Lib(Error::InvalidParameter(
            "need finite --b0 != --b-max".into(),
        )));
    }
    let n = a.steps;
    let grid: Vec<f64> = (0..n)
        .map(|i| {
            if i + 1 == n {
                a.b_max
            } else {
                a.b0 + (a.b_max - a.b0) * i as f64 / (n - 1) as f64
            }
        })
        .collect();
    let points = trace_isentrope(&params, a.t0, a.b0, &grid, a.orientation.direction, a.t_bracket)?;
    let mut s = String::from("B,T\n");
    for p in &points {
        writeln!(
            s,
            "{},{}",
            format_full(p.field),
            format_full(p.temperature.unwrap_or(f64::NAN))
        )
        .unwrap();
    }
    emit(s.as_bytes(), &a.output, stdout)
}

fn cmd_preset(action: &PresetAction, stdout: &mut dyn Write) -> Result<(), Failure> {
    match action {
        PresetAction::List => {
            for name in PRESET_NAMES {
                writeln!(stdout, "{name}")?;
            }
            Ok(())
        }
        PresetAction::Show { name } => {
            let json = to_json(&preset(name)?);
            Ok(writeln!(stdout, "{json}")?)
        }
    }
}

/// Runs one already-parsed command and returns its exit code.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a, stdout).map(|_| EXIT_OK),
        Command::Thermo(a) => cmd_thermo(a, stdout).map(|_| EXIT_OK),
        Command::Cycle(a) => cmd_cycle(a, stdout).map(|_| EXIT_OK),
        Command::Sweep(a) => cmd_sweep(a, stdout, stderr),
        Command::Isentrope(a) => cmd_isentrope(a, stdout).map(|_| EXIT_OK),
        Command::Preset { action } => cmd_preset(action, stdout).map(|_| EXIT_OK),
    };
    let (code, msg) = match outcome {
        Ok(code) => return code,
        Err(Failure::Lib(e)) if e.is_numerical() => (EXIT_NUMERICAL, e.to_string()),
        Err(Failure::Lib(e)) => (EXIT_INVALID, e.to_string()),
        Err(Failure::Usage(m)) => (EXIT_INVALID, m),
        Err(Failure::Io(e)) => (EXIT_INVALID, e.to_string()),
    };
    let _ = writeln!(stderr, "error: {msg}");
    code
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, stdout, stderr),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_INVALID
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["cu3m"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8_lossy(&out).into_owned(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(0.5, 6), "0.5");
        assert_eq!(format_sig(1.0 / 3.0, 6), "0.333333");
        assert_eq!(format_sig(-123456.7, 6), "-123457");
        assert_eq!(format_sig(1234567.0, 6), "1.23457e6");
        assert_eq!(format_sig(1.5e-7, 6), "1.50000e-7");
        assert_eq!(format_sig(0.0, 6), "0");
        assert_eq!(format_sig(2.0, 12), "2");
    }

    #[test]
    fn field_parsing() {
        let f = parse_field("0,0,5", Direction::Z).unwrap();
        assert_eq!(f.components(), [0.0, 0.0, 5.0]);
        let f = parse_field("2", parse_direction("x").unwrap()).unwrap();
        assert_eq!(f.components(), [2.0, 0.0, 0.0]);
        assert!(parse_field("1,2", Direction::Z).is_err());
        assert!(parse_field("inf", Direction::Z).is_err());
        assert!(parse_direction("0,0,0").is_err());
        assert_eq!(parse_grid("0:6:200").unwrap(), (0.0, 6.0, 200));
        assert!(parse_bracket("3:1").is_err());
    }

    #[test]
    fn carnot_engine_report() {
        let (code, out, _) = call(&[
            "cycle",
            "carnot",
            "--compound",
            "cu3-as",
            "--tl",
            "0.5",
            "--th",
            "1",
            "--b0",
            "0",
            "--b1",
            "2",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("mode  = engine"), "{out}");
        assert!(out.contains("eta   = 0.5\n"), "{out}");
        assert!(out.contains("closure"));
    }

    #[test]
    fn source_is_exclusive_and_required() {
        let (code, _, err) = call(&["spectrum"]);
        assert_eq!(code, 2, "{err}");
        let (code, _, _) = call(&["spectrum", "--compound", "cu3-as", "--params", "x.json"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = call(&["thermo", "--compound", "cu3-as", "-T", "-1"]);
        assert_eq!(code, 2, "{err}");
        let (code, _, _) = call(&[
            "cycle",
            "otto",
            "--compound",
            "cu3-as",
            "--tl",
            "1",
            "--th",
            "0.5",
            "--b0",
            "0",
            "--b1",
            "1",
        ]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["spectrum", "--compound", "nope"]);
        assert_eq!(code, 2);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("sweep"));
    }

    #[test]
    fn sweep_plane_needs_its_scalar() {
        let (code, _, err) = call(&[
            "sweep",
            "otto",
            "b0b1",
            "--compound",
            "cu3-as",
            "--tl",
            "0.5",
            "--x",
            "0:1:2",
            "--y",
            "0:1:2",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("--th"));
    }

    #[test]
    fn preset_commands() {
        let (_, out, _) = call(&["preset", "list"]);
        assert_eq!(out, "cu3-as\ncu3-sb\n");
        let (code, out, _) = call(&["preset", "show", "cu3-sb"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"name\": \"cu3-sb\""));
    }
}
