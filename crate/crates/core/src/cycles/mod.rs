//! Reversible four-stroke quantum cycles with the trimer as working substance.
//!
//! Sign conventions used throughout:
//! - `work` is done **by** the working substance (positive = output);
//! - heats are positive when flowing **into** the working substance;
//! - `q_in` is the heat exchanged with the hot bath, `q_out` with the cold
//!   bath, so a heat engine has `q_in > 0`, `q_out < 0`.
//!
//! Every stroke satisfies `heat − work = delta_u`, and every cycle closes
//! with `w_net = q_in + q_out`.

mod carnot;
mod otto;
mod stirling;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::spin_model::{CompoundParams, Direction};
use crate::thermodynamics::DEFAULT_FIELD_BRACKET;

pub use carnot::carnot_cycle;
pub(crate) use carnot::{carnot_from_parts, switch_field, SwitchField};
pub use otto::otto_cycle;
pub(crate) use otto::otto_from_spectra;
pub use stirling::stirling_cycle;
pub(crate) use stirling::stirling_from_spectra;

/// Values with magnitude below this are treated as zero when classifying.
pub const DEFAULT_MODE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Carnot,
    Otto,
    Stirling,
}

impl CycleKind {
    pub const ALL: [CycleKind; 3] = [CycleKind::Carnot, CycleKind::Otto, CycleKind::Stirling];

    pub fn as_str(self) -> &'static str {
        match self {
            CycleKind::Carnot => "carnot",
            CycleKind::Otto => "otto",
            CycleKind::Stirling => "stirling",
        }
    }
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CycleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CycleKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown cycle `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrokeKind {
    Isothermal,
    Isochoric,
    Adiabatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrokeLabel {
    AB,
    BC,
    CD,
    DA,
}

impl StrokeLabel {
    pub const ALL: [StrokeLabel; 4] = [StrokeLabel::AB, StrokeLabel::BC, StrokeLabel::CD, StrokeLabel::DA];

    pub fn as_str(self) -> &'static str {
        match self {
            StrokeLabel::AB => "a-b",
            StrokeLabel::BC => "b-c",
            StrokeLabel::CD => "c-d",
            StrokeLabel::DA => "d-a",
        }
    }
}

/// Heat, work and energy change of one stroke, all in Kelvin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrokeRecord {
    pub label: StrokeLabel,
    pub kind: StrokeKind,
    pub heat: f64,
    pub work: f64,
    pub delta_u: f64,
}

impl StrokeRecord {
    /// Bath contact at fixed temperature: `work = heat − ΔU`.
    pub(crate) fn isothermal(label: StrokeLabel, heat: f64, delta_u: f64) -> Self {
        Self {
            label,
            kind: StrokeKind::Isothermal,
            heat,
            work: heat - delta_u,
            delta_u,
        }
    }

    /// Fixed field: no work, `heat = ΔU`.
    pub(crate) fn isochoric(label: StrokeLabel, delta_u: f64) -> Self {
        Self {
            label,
            kind: StrokeKind::Isochoric,
            heat: delta_u,
            work: 0.0,
            delta_u,
        }
    }

    /// Frozen populations: no heat, `work = −ΔU`.
    pub(crate) fn adiabatic(label: StrokeLabel, delta_u: f64) -> Self {
        Self {
            label,
            kind: StrokeKind::Adiabatic,
            heat: 0.0,
            work: -delta_u,
            delta_u,
        }
    }

    /// `heat − work − ΔU`.
    pub fn first_law_residual(&self) -> f64 {
        self.heat - self.work - self.delta_u
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationMode {
    Engine,
    Refrigerator,
    Heater,
    Accelerator,
    None,
}

impl OperationMode {
    pub const ALL: [OperationMode; 5] = [
        OperationMode::Engine,
        OperationMode::Refrigerator,
        OperationMode::Heater,
        OperationMode::Accelerator,
        OperationMode::None,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperationMode::Engine => "engine",
            OperationMode::Refrigerator => "refrigerator",
            OperationMode::Heater => "heater",
            OperationMode::Accelerator => "accelerator",
            OperationMode::None => "none",
        }
    }
}

impl fmt::Display for OperationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperationMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown mode `{s}`")))
    }
}

fn snapped_sign(v: f64, tol: f64) -> i8 {
    if v.abs() < tol {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

/// Operating mode from the signs of `(W_net, Q_in, Q_out)`.
///
/// | mode         | W | Q_in | Q_out |
/// |--------------|---|------|-------|
/// | engine       | + | +    | −     |
/// | refrigerator | − | −    | +     |
/// | heater       | − | −    | −     |
/// | accelerator  | − | +    | −     |
///
/// Any value with magnitude below `tol` counts as zero, and zero matches no
/// row.
pub fn classify_mode(w_net: f64, q_in: f64, q_out: f64, tol: f64) -> OperationMode {
    match (
        snapped_sign(w_net, tol),
        snapped_sign(q_in, tol),
        snapped_sign(q_out, tol),
    ) {
        (1, 1, -1) => OperationMode::Engine,
        (-1, -1, 1) => OperationMode::Refrigerator,
        (-1, -1, -1) => OperationMode::Heater,
        (-1, 1, -1) => OperationMode::Accelerator,
        _ => OperationMode::None,
    }
}

/// Figure of merit of a classified cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Performance {
    /// `η = W_net / Q_in`
    Efficiency(f64),
    /// Coefficient of performance and `κ = COP / (1 + COP)`.
    Cop { cop: f64, kappa: f64 },
}

impl Performance {
    /// η for engines, κ otherwise; the quantity plotted on efficiency maps.
    pub fn unit_interval_value(&self) -> f64 {
        match *self {
            Performance::Efficiency(eta) => eta,
            Performance::Cop { kappa, .. } => kappa,
        }
    }
}

/// `κ = COP / (1 + COP)`.
pub fn kappa(cop: f64) -> f64 {
    cop / (1.0 + cop)
}

pub fn efficiency_and_kappa(mode: OperationMode, w_net: f64, q_in: f64, q_out: f64) -> Result<Performance> {
    let cop = match mode {
        OperationMode::Engine => return Ok(Performance::Efficiency(w_net / q_in)),
        OperationMode::Refrigerator => q_in / w_net,
        OperationMode::Heater | OperationMode::Accelerator => q_out / w_net,
        OperationMode::None => return Err(Error::NoEfficiency),
    };
    Ok(Performance::Cop { cop, kappa: kappa(cop) })
}

/// Bath temperatures, field endpoints and field orientation of one cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Protocol {
    pub t_cold: f64,
    pub t_hot: f64,
    pub b0: f64,
    pub b1: f64,
    pub direction: Direction,
}

impl Protocol {
    pub fn new(t_cold: f64, t_hot: f64, b0: f64, b1: f64) -> Self {
        Self {
            t_cold,
            t_hot,
            b0,
            b1,
            direction: Direction::Z,
        }
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let Protocol {
            t_cold, t_hot, b0, b1, ..
        } = *self;
        if !(t_cold > 0.0 && t_cold < t_hot && t_hot.is_finite()) {
            return Err(Error::Domain(format!(
                "bath temperatures must satisfy 0 < T_l < T_h, got T_l = {t_cold}, T_h = {t_hot}"
            )));
        }
        if !(b0.is_finite() && b1.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "field endpoints must be finite, got {b0}, {b1}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleOptions {
    /// Zero-snap tolerance for mode classification, Kelvin.
    pub mode_tol: f64,
    /// Search bracket for the Carnot intermediate fields, Tesla.
    pub field_bracket: (f64, f64),
}

impl Default for CycleOptions {
    fn default() -> Self {
        Self {
            mode_tol: DEFAULT_MODE_TOL,
            field_bracket: DEFAULT_FIELD_BRACKET,
        }
    }
}

/// Outcome of one cycle evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleResult {
    pub kind: CycleKind,
    /// `None` only for Carnot cycles whose intermediate fields could not be
    /// located in the bracket; the net quantities are still exact.
    pub strokes: Option<[StrokeRecord; 4]>,
    /// Carnot `(B_b, B_d)` where the adiabats meet the isotherms.
    pub switch_fields: Option<(f64, f64)>,
    pub w_net: f64,
    pub q_in: f64,
    pub q_out: f64,
    pub mode: OperationMode,
    pub performance: Option<Performance>,
}

impl CycleResult {
    pub(crate) fn assemble(
        kind: CycleKind,
        strokes: Option<[StrokeRecord; 4]>,
        w_net: f64,
        q_in: f64,
        q_out: f64,
        mode_tol: f64,
    ) -> Self {
        let mode = classify_mode(w_net, q_in, q_out, mode_tol);
        Self {
            kind,
            strokes,
            switch_fields: None,
            w_net,
            q_in,
            q_out,
            mode,
            performance: efficiency_and_kappa(mode, w_net, q_in, q_out).ok(),
        }
    }

    pub fn efficiency(&self) -> Option<f64> {
        match self.performance {
            Some(Performance::Efficiency(eta)) => Some(eta),
            _ => None,
        }
    }

    pub fn cop(&self) -> Option<f64> {
        match self.performance {
            Some(Performance::Cop { cop, .. }) => Some(cop),
            _ => None,
        }
    }

    pub fn kappa(&self) -> Option<f64> {
        match self.performance {
            Some(Performance::Cop { kappa, .. }) => Some(kappa),
            _ => None,
        }
    }

    /// `|w_net − (q_in + q_out)|`.
    pub fn closure_residual(&self) -> f64 {
        (self.w_net - (self.q_in + self.q_out)).abs()
    }
}

/// Dispatches to the cycle named by `kind`.
pub fn evaluate_cycle(
    kind: CycleKind,
    params: &CompoundParams,
    protocol: &Protocol,
    options: &CycleOptions,
) -> Result<CycleResult> {
    match kind {
        CycleKind::Carnot => carnot_cycle(params, protocol, options),
        CycleKind::Otto => otto_cycle(params, protocol, options),
        CycleKind::Stirling => stirling_cycle(params, protocol, options),
    }
}
