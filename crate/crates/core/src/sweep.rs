//! Operating-mode and efficiency maps over two-parameter grids.
//!
//! Two planes are supported: `(B0, B1)` at fixed bath temperatures and
//! `(B1, T_h)` at fixed `T_l` and `B0`. Cells are stored row-major with `y`
//! outer and `x` inner. A failing cell is recorded as an error cell and the
//! sweep carries on.
//!
//! Spectra are computed once per distinct field on each axis, and the Carnot
//! intermediate fields once per distinct entropy target. Every input to a
//! cell is the same deterministic function of its coordinates that the
//! standalone cycle functions use, so cell values do not depend on caching,
//! evaluation order or thread count.

use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::cycles::{
    carnot_from_parts, otto_from_spectra, stirling_from_spectra, switch_field, CycleKind, CycleOptions, CycleResult,
    OperationMode, Performance, Protocol, SwitchField,
};
use crate::eigensolver::Spectrum;
use crate::error::{Error, Result};
use crate::spin_model::{CompoundParams, Direction, MagneticField};
use crate::thermodynamics::{entropy, spectrum_at};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisVariable {
    B0,
    B1,
    Th,
}

impl AxisVariable {
    pub fn as_str(self) -> &'static str {
        match self {
            AxisVariable::B0 => "B0",
            AxisVariable::B1 => "B1",
            AxisVariable::Th => "Th",
        }
    }
}

/// Evenly spaced axis, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub variable: AxisVariable,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn new(variable: AxisVariable, min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::InvalidParameter(format!(
                "{} axis needs finite min < max, got [{min}, {max}]",
                variable.as_str()
            )));
        }
        if count < 2 {
            return Err(Error::InvalidParameter(format!(
                "{} axis needs at least 2 points, got {count}",
                variable.as_str()
            )));
        }
        Ok(Self {
            variable,
            min,
            max,
            count,
        })
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            self.max
        } else {
            self.min + (self.max - self.min) * (i as f64) / ((self.count - 1) as f64)
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.count).map(|i| self.value(i)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Plane {
    B0B1,
    B1Th,
}

impl Plane {
    pub fn as_str(self) -> &'static str {
        match self {
            Plane::B0B1 => "b0b1",
            Plane::B1Th => "b1th",
        }
    }
}

/// Scalars held constant across a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedScalars {
    pub compound: String,
    pub t_cold: f64,
    /// Set for `(B0, B1)` sweeps.
    pub t_hot: Option<f64>,
    /// Set for `(B1, T_h)` sweeps.
    pub b0: Option<f64>,
    pub direction: Direction,
    pub mode_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellValues {
    pub mode: OperationMode,
    pub w_net: f64,
    pub q_in: f64,
    pub q_out: f64,
    pub performance: Option<Performance>,
}

impl From<&CycleResult> for CellValues {
    fn from(r: &CycleResult) -> Self {
        Self {
            mode: r.mode,
            w_net: r.w_net,
            q_in: r.q_in,
            q_out: r.q_out,
            performance: r.performance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub x: f64,
    pub y: f64,
    pub outcome: std::result::Result<CellValues, String>,
}

/// Cell counts per operating mode.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ModeCounts {
    pub engine: usize,
    pub refrigerator: usize,
    pub heater: usize,
    pub accelerator: usize,
    pub none: usize,
    pub error: usize,
}

impl ModeCounts {
    fn tally(cells: &[SweepCell]) -> Self {
        let mut c = Self::default();
        for cell in cells {
            match &cell.outcome {
                Err(_) => c.error += 1,
                Ok(v) => *c.get_mut(v.mode) += 1,
            }
        }
        c
    }

    fn get_mut(&mut self, mode: OperationMode) -> &mut usize {
        match mode {
            OperationMode::Engine => &mut self.engine,
            OperationMode::Refrigerator => &mut self.refrigerator,
            OperationMode::Heater => &mut self.heater,
            OperationMode::Accelerator => &mut self.accelerator,
            OperationMode::None => &mut self.none,
        }
    }

    pub fn get(&self, mode: OperationMode) -> usize {
        let mut copy = *self;
        *copy.get_mut(mode)
    }

    pub fn total(&self) -> usize {
        self.engine + self.refrigerator + self.heater + self.accelerator + self.none + self.error
    }
}

impl fmt::Display for ModeCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "engine={} refrigerator={} heater={} accelerator={} none={} error={}",
            self.engine, self.refrigerator, self.heater, self.accelerator, self.none, self.error
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub cycle: CycleKind,
    pub plane: Plane,
    pub axis_x: GridAxis,
    pub axis_y: GridAxis,
    pub fixed: FixedScalars,
    /// `axis_y.count` rows of `axis_x.count` cells.
    pub cells: Vec<SweepCell>,
    pub diagnostics: ModeCounts,
}

impl SweepResult {
    pub fn cell(&self, ix: usize, iy: usize) -> &SweepCell {
        &self.cells[iy * self.axis_x.count + ix]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub cycle: CycleOptions,
    /// Evaluate cells on the rayon thread pool.
    pub parallel: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            cycle: CycleOptions::default(),
            parallel: true,
        }
    }
}

fn map_indices<T: Send>(n: usize, parallel: bool, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

type Shared<T> = std::result::Result<T, String>;

fn spectra_for(
    params: &CompoundParams,
    axis: &GridAxis,
    direction: Direction,
    parallel: bool,
) -> Vec<Shared<Spectrum>> {
    map_indices(axis.count, parallel, |i| {
        spectrum_at(params, MagneticField::along(direction, axis.value(i))).map_err(|e| e.to_string())
    })
}

fn carnot_switch(
    params: &CompoundParams,
    t: f64,
    spec: &Spectrum,
    t_spec: f64,
    direction: Direction,
    bracket: (f64, f64),
) -> Shared<Option<SwitchField>> {
    entropy(spec, t_spec)
        .and_then(|s| switch_field(params, t, s, direction, bracket))
        .map_err(|e| e.to_string())
}

/// Non-cached inputs of one cell, validated the same way as the standalone
/// cycle functions.
fn check_cell(kind: CycleKind, protocol: &Protocol) -> Shared<()> {
    protocol.validate().map_err(|e| e.to_string())?;
    if kind == CycleKind::Carnot && (protocol.b0 < 0.0 || protocol.b1 < 0.0) {
        return Err(format!(
            "Carnot field magnitudes must be non-negative, got B0 = {}, B1 = {}",
            protocol.b0, protocol.b1
        ));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cell_from_parts(
    kind: CycleKind,
    s0: &Shared<Spectrum>,
    s1: &Shared<Spectrum>,
    t_l: f64,
    t_h: f64,
    b_b: Option<&Shared<Option<SwitchField>>>,
    b_d: Option<&Shared<Option<SwitchField>>>,
    mode_tol: f64,
) -> Shared<CellValues> {
    let s0 = s0.as_ref().map_err(Clone::clone)?;
    let s1 = s1.as_ref().map_err(Clone::clone)?;
    let r = match kind {
        CycleKind::Otto => otto_from_spectra(s0, s1, t_l, t_h, mode_tol),
        CycleKind::Stirling => stirling_from_spectra(s0, s1, t_l, t_h, mode_tol),
        CycleKind::Carnot => {
            let b_b = b_b.expect("carnot switch field").as_ref().map_err(Clone::clone)?;
            let b_d = b_d.expect("carnot switch field").as_ref().map_err(Clone::clone)?;
            carnot_from_parts(s0, s1, t_l, t_h, b_b.as_ref(), b_d.as_ref(), mode_tol)
        }
    };
    r.map(|r| CellValues::from(&r)).map_err(|e| e.to_string())
}

fn expect_variable(axis: &GridAxis, v: AxisVariable) -> Result<()> {
    if axis.variable == v {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "expected a {} axis, got {}",
            v.as_str(),
            axis.variable.as_str()
        )))
    }
}

/// Cycle over the `(B0, B1)` plane at fixed bath temperatures; `x = B0`,
/// `y = B1`.
#[allow(clippy::too_many_arguments)]
pub fn sweep_b0_b1(
    params: &CompoundParams,
    t_l: f64,
    t_h: f64,
    axis_b0: GridAxis,
    axis_b1: GridAxis,
    kind: CycleKind,
    direction: Direction,
    options: &SweepOptions,
) -> Result<SweepResult> {
    Protocol::new(t_l, t_h, 0.0, 0.0).validate()?;
    params.validate()?;
    expect_variable(&axis_b0, AxisVariable::B0)?;
    expect_variable(&axis_b1, AxisVariable::B1)?;
    let par = options.parallel;
    let tol = options.cycle.mode_tol;
    let bracket = options.cycle.field_bracket;

    let spec_x = spectra_for(params, &axis_b0, direction, par);
    let spec_y = spectra_for(params, &axis_b1, direction, par);

    // B_b depends on B1 only, B_d on B0 only
    let (switch_b, switch_d) = if kind == CycleKind::Carnot {
        let b = map_indices(axis_b1.count, par, |j| match &spec_y[j] {
            Ok(s1) => carnot_switch(params, t_l, s1, t_h, direction, bracket),
            Err(e) => Err(e.clone()),
        });
        let d = map_indices(axis_b0.count, par, |i| match &spec_x[i] {
            Ok(s0) => carnot_switch(params, t_h, s0, t_l, direction, bracket),
            Err(e) => Err(e.clone()),
        });
        (b, d)
    } else {
        (Vec::new(), Vec::new())
    };

    let nx = axis_b0.count;
    let cells = map_indices(nx * axis_b1.count, par, |idx| {
        let (i, j) = (idx % nx, idx / nx);
        let (x, y) = (axis_b0.value(i), axis_b1.value(j));
        let protocol = Protocol::new(t_l, t_h, x, y).with_direction(direction);
        let outcome = check_cell(kind, &protocol).and_then(|_| {
            cell_from_parts(
                kind,
                &spec_x[i],
                &spec_y[j],
                t_l,
                t_h,
                switch_b.get(j),
                switch_d.get(i),
                tol,
            )
        });
        SweepCell { x, y, outcome }
    });

    Ok(SweepResult {
        cycle: kind,
        plane: Plane::B0B1,
        axis_x: axis_b0,
        axis_y: axis_b1,
        fixed: FixedScalars {
            compound: params.name.clone(),
            t_cold: t_l,
            t_hot: Some(t_h),
            b0: None,
            direction,
            mode_tol: tol,
        },
        diagnostics: ModeCounts::tally(&cells),
        cells,
    })
}

/// Cycle over the `(B1, T_h)` plane at fixed `T_l` and `B0`; `x = B1`,
/// `y = T_h`.
#[allow(clippy::too_many_arguments)]
pub fn sweep_b1_th(
    params: &CompoundParams,
    t_l: f64,
    b0: f64,
    axis_b1: GridAxis,
    axis_th: GridAxis,
    kind: CycleKind,
    direction: Direction,
    options: &SweepOptions,
) -> Result<SweepResult> {
    if !(t_l > 0.0 && t_l.is_finite()) {
        return Err(Error::NonPositiveTemperature(t_l));
    }
    params.validate()?;
    expect_variable(&axis_b1, AxisVariable::B1)?;
    expect_variable(&axis_th, AxisVariable::Th)?;
    if axis_th.min <= t_l {
        return Err(Error::Domain(format!(
            "every T_h on the axis must exceed T_l = {t_l}, but the axis starts at {}",
            axis_th.min
        )));
    }
    let par = options.parallel;
    let tol = options.cycle.mode_tol;
    let bracket = options.cycle.field_bracket;

    let spec_0: Shared<Spectrum> = spectrum_at(params, MagneticField::along(direction, b0)).map_err(|e| e.to_string());
    let spec_x = spectra_for(params, &axis_b1, direction, par);

    // B_d depends on T_h only; B_b on both coordinates
    let switch_d = if kind == CycleKind::Carnot {
        map_indices(axis_th.count, par, |j| match &spec_0 {
            Ok(s0) => carnot_switch(params, axis_th.value(j), s0, t_l, direction, bracket),
            Err(e) => Err(e.clone()),
        })
    } else {
        Vec::new()
    };

    let nx = axis_b1.count;
    let cells = map_indices(nx * axis_th.count, par, |idx| {
        let (i, j) = (idx % nx, idx / nx);
        let (x, y) = (axis_b1.value(i), axis_th.value(j));
        let protocol = Protocol::new(t_l, y, b0, x).with_direction(direction);
        let outcome = check_cell(kind, &protocol).and_then(|_| {
            let switch_b = if kind == CycleKind::Carnot {
                Some(match &spec_x[i] {
                    Ok(s1) => carnot_switch(params, t_l, s1, y, direction, bracket),
                    Err(e) => Err(e.clone()),
                })
            } else {
                None
            };
            cell_from_parts(
                kind,
                &spec_0,
                &spec_x[i],
                t_l,
                y,
                switch_b.as_ref(),
                switch_d.get(j),
                tol,
            )
        });
        SweepCell { x, y, outcome }
    });

    Ok(SweepResult {
        cycle: kind,
        plane: Plane::B1Th,
        axis_x: axis_b1,
        axis_y: axis_th,
        fixed: FixedScalars {
            compound: params.name.clone(),
            t_cold: t_l,
            t_hot: None,
            b0: Some(b0),
            direction,
            mode_tol: tol,
        },
        diagnostics: ModeCounts::tally(&cells),
        cells,
    })
}

/// Full-precision decimal: 17 significant digits, `0` for zero, `nan` for
/// missing values. Parses back to the identical `f64`.
pub fn format_full(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.16e}")
    }
}

pub const CSV_HEADER: &str = "x,y,mode,w_net,q_in,q_out,eff,kappa";

/// One CSV row. `eff` is η for engines and the COP otherwise; `kappa` is set
/// for COP modes only. Heats and work below `mode_tol` print as `0`.
pub fn csv_row(x: f64, y: f64, outcome: &std::result::Result<CellValues, String>, mode_tol: f64) -> String {
    let snap = |v: f64| if v.abs() < mode_tol { 0.0 } else { v };
    match outcome {
        Err(_) => format!("{},{},error,nan,nan,nan,nan,nan", format_full(x), format_full(y)),
        Ok(c) => {
            let (eff, kappa) = match c.performance {
                Some(Performance::Efficiency(eta)) => (eta, f64::NAN),
                Some(Performance::Cop { cop, kappa }) => (cop, kappa),
                None => (f64::NAN, f64::NAN),
            };
            format!(
                "{},{},{},{},{},{},{},{}",
                format_full(x),
                format_full(y),
                c.mode,
                format_full(snap(c.w_net)),
                format_full(snap(c.q_in)),
                format_full(snap(c.q_out)),
                format_full(eff),
                format_full(kappa)
            )
        }
    }
}

pub fn write_csv(result: &SweepResult, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for cell in &result.cells {
        writeln!(out, "{}", csv_row(cell.x, cell.y, &cell.outcome, result.fixed.mode_tol))?;
    }
    Ok(())
}

pub fn export_csv(result: &SweepResult) -> Vec<u8> {
    let mut buf = Vec::new();
    write_csv(result, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PgmLayer {
    Mode,
    Efficiency,
}

pub fn mode_gray(mode: OperationMode) -> u8 {
    match mode {
        OperationMode::Engine => 60,
        OperationMode::Refrigerator => 120,
        OperationMode::Heater => 180,
        OperationMode::Accelerator => 240,
        OperationMode::None => 0,
    }
}

pub const ERROR_GRAY: u8 = 255;

fn pixel(cell: &SweepCell, layer: PgmLayer) -> u8 {
    match (&cell.outcome, layer) {
        (Err(_), PgmLayer::Mode) => ERROR_GRAY,
        (Err(_), PgmLayer::Efficiency) => 0,
        (Ok(c), PgmLayer::Mode) => mode_gray(c.mode),
        (Ok(c), PgmLayer::Efficiency) => match c.performance {
            Some(p) => (p.unit_interval_value().clamp(0.0, 1.0) * 255.0).round() as u8,
            None => 0,
        },
    }
}

/// Binary PGM (P5), one pixel per cell, maximum `y` in the top row.
pub fn export_pgm(result: &SweepResult, layer: PgmLayer) -> Vec<u8> {
    let (w, h) = (result.axis_x.count, result.axis_y.count);
    let mut buf = format!("P5\n{w} {h}\n255\n").into_bytes();
    buf.reserve(w * h);
    for j in (0..h).rev() {
        for i in 0..w {
            buf.push(pixel(result.cell(i, j), layer));
        }
    }
    buf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin_model::preset;

    fn axis(v: AxisVariable, min: f64, max: f64, n: usize) -> GridAxis {
        GridAxis::new(v, min, max, n).unwrap()
    }

    #[test]
    fn axis_values_hit_endpoints() {
        let a = axis(AxisVariable::B1, 0.0, 6.0, 7);
        assert_eq!(a.values(), vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let a = axis(AxisVariable::B1, 0.1, 0.7, 3);
        assert_eq!(a.value(2), 0.7);
        assert!(GridAxis::new(AxisVariable::B0, 1.0, 1.0, 5).is_err());
        assert!(GridAxis::new(AxisVariable::B0, 0.0, 1.0, 1).is_err());
        assert!(GridAxis::new(AxisVariable::B0, 0.0, f64::NAN, 3).is_err());
    }

    #[test]
    fn format_full_round_trips() {
        for v in [0.1, -1.0 / 3.0, 6.02e23, 1e-300, 4.7] {
            assert_eq!(format_full(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(format_full(0.0), "0");
        assert_eq!(format_full(-0.0), "0");
        assert_eq!(format_full(f64::NAN), "nan");
    }

    #[test]
    fn diagonal_otto_grid_is_none() {
        let p = preset("cu3-as").unwrap();
        // both axes [1, 2] with 2 points: cells (1,1),(2,1),(1,2),(2,2)
        let r = sweep_b0_b1(
            &p,
            0.5,
            1.0,
            axis(AxisVariable::B0, 1.0, 2.0, 2),
            axis(AxisVariable::B1, 1.0, 2.0, 2),
            CycleKind::Otto,
            Direction::Z,
            &SweepOptions::default(),
        )
        .unwrap();
        for (ix, iy) in [(0, 0), (1, 1)] {
            let c = r.cell(ix, iy).outcome.as_ref().unwrap();
            assert_eq!(c.mode, OperationMode::None);
            assert_eq!(c.w_net, 0.0);
        }
        let csv = String::from_utf8(export_csv(&r)).unwrap();
        assert_eq!(csv.lines().count(), 5);
        let first = csv.lines().nth(1).unwrap();
        assert!(
            first.starts_with("1.0000000000000000e0,1.0000000000000000e0,none,0,"),
            "{first}"
        );
    }

    #[test]
    fn pgm_header_and_orientation() {
        let p = CompoundParams::zero("zero");
        let r = sweep_b0_b1(
            &p,
            0.5,
            1.0,
            axis(AxisVariable::B0, 0.0, 1.0, 2),
            axis(AxisVariable::B1, 0.0, 1.0, 2),
            CycleKind::Otto,
            Direction::Z,
            &SweepOptions::default(),
        )
        .unwrap();
        let pgm = export_pgm(&r, PgmLayer::Mode);
        assert_eq!(&pgm[..11], b"P5\n2 2\n255\n");
        assert_eq!(&pgm[11..], &[0, 0, 0, 0]);
        assert_eq!(r.diagnostics.none, 4);
    }

    #[test]
    fn pgm_top_row_is_max_y() {
        let p = preset("cu3-as").unwrap();
        let r = sweep_b0_b1(
            &p,
            0.5,
            1.0,
            axis(AxisVariable::B0, 0.0, 1e-9, 2),
            axis(AxisVariable::B1, 0.5, 3.0, 2),
            CycleKind::Carnot,
            Direction::Z,
            &SweepOptions::default(),
        )
        .unwrap();
        // B1 = 0.5 refrigerates, B1 = 3 is an engine
        let pgm = export_pgm(&r, PgmLayer::Mode);
        assert_eq!(&pgm[11..], &[60, 60, 120, 120]);
    }

    #[test]
    fn th_axis_must_exceed_cold_bath() {
        let p = preset("cu3-as").unwrap();
        let r = sweep_b1_th(
            &p,
            0.5,
            0.0,
            axis(AxisVariable::B1, 0.0, 6.0, 3),
            axis(AxisVariable::Th, 0.5, 3.0, 3),
            CycleKind::Otto,
            Direction::Z,
            &SweepOptions::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn axis_variables_checked() {
        let p = preset("cu3-as").unwrap();
        let r = sweep_b0_b1(
            &p,
            0.5,
            1.0,
            axis(AxisVariable::B1, 0.0, 6.0, 3),
            axis(AxisVariable::B1, 0.0, 6.0, 3),
            CycleKind::Otto,
            Direction::Z,
            &SweepOptions::default(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn negative_carnot_field_is_error_cell() {
        let p = preset("cu3-as").unwrap();
        let r = sweep_b0_b1(
            &p,
            0.5,
            1.0,
            axis(AxisVariable::B0, -1.0, 0.0, 2),
            axis(AxisVariable::B1, 0.0, 1.0, 2),
            CycleKind::Carnot,
            Direction::Z,
            &SweepOptions::default(),
        )
        .unwrap();
        assert_eq!(r.diagnostics.error, 2);
        let csv = String::from_utf8(export_csv(&r)).unwrap();
        assert!(csv.lines().nth(1).unwrap().contains(",error,"));
        let pgm = export_pgm(&r, PgmLayer::Mode);
        assert_eq!(pgm[11 + 2], ERROR_GRAY);
    }
}
