//! Canonical-ensemble thermodynamics of one spectrum, and isentrope solving.
//!
//! All exponentials are shifted by the ground energy, so populations stay
//! finite down to `T = 1e-8 K` with Kelvin-scale gaps. Energies are in
//! Kelvin, entropy in units of `k_B`.

use crate::eigensolver::{diagonalize, Spectrum};
use crate::error::{Error, Result};
use crate::linalg::DIM;
use crate::roots::{brent, RootFailure};
use crate::spin_model::{build_hamiltonian, CompoundParams, Direction, MagneticField};

/// Residual target for isentrope solves, in `k_B`.
pub const ENTROPY_TOL: f64 = 1e-10;
/// Default field bracket, Tesla.
pub const DEFAULT_FIELD_BRACKET: (f64, f64) = (0.0, 10.0);
/// Default temperature bracket, Kelvin.
pub const DEFAULT_TEMPERATURE_BRACKET: (f64, f64) = (1e-3, 50.0);

const X_TOL: f64 = 1e-13;

fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveTemperature(t))
    }
}

/// Ground-shifted Boltzmann factors at temperature `t`.
struct Weights {
    /// `(ε_i − ε_min) / t`
    reduced: [f64; DIM],
    /// `exp(−reduced_i)`
    factors: [f64; DIM],
    /// `Σ factors`, at least 1.
    sum: f64,
}

impl Weights {
    fn new(spec: &Spectrum, t: f64) -> Result<Self> {
        check_temperature(t)?;
        let e0 = spec.ground_energy();
        let reduced = spec.energies().map(|e| (e - e0) / t);
        let factors = reduced.map(|x| (-x).exp());
        let sum = factors.iter().sum();
        Ok(Self { reduced, factors, sum })
    }

    fn probs(&self) -> [f64; DIM] {
        self.factors.map(|w| w / self.sum)
    }
}

/// Level populations `p_i = exp(−ε_i/t) / Z`.
pub fn boltzmann(spec: &Spectrum, t: f64) -> Result<[f64; DIM]> {
    Ok(Weights::new(spec, t)?.probs())
}

/// `ln Z = −ε_min/t + ln Σ_j exp(−(ε_j − ε_min)/t)`.
pub fn log_partition(spec: &Spectrum, t: f64) -> Result<f64> {
    let w = Weights::new(spec, t)?;
    Ok(-spec.ground_energy() / t + w.sum.ln())
}

/// `U = Σ ε_i p_i`, Kelvin.
pub fn internal_energy(spec: &Spectrum, t: f64) -> Result<f64> {
    let p = boltzmann(spec, t)?;
    Ok(spec.energies().iter().zip(p).map(|(e, p)| e * p).sum())
}

/// `S = −Σ p_i ln p_i`, in `k_B`.
///
/// Evaluated as `ln Σ' + Σ p_i (ε_i − ε_min)/t`, which equals the Gibbs
/// form exactly and stays accurate when excited populations underflow.
pub fn entropy(spec: &Spectrum, t: f64) -> Result<f64> {
    let w = Weights::new(spec, t)?;
    let mean: f64 = w.reduced.iter().zip(w.factors).map(|(x, f)| x * f).sum::<f64>() / w.sum;
    Ok(w.sum.ln() + mean)
}

/// Diagonalized Hamiltonian at one field.
pub fn spectrum_at(params: &CompoundParams, field: MagneticField) -> Result<Spectrum> {
    diagonalize(&build_hamiltonian(params, field)?)
}

/// Equilibrium state of the trimer at `(T, B)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermoPoint {
    pub temperature: f64,
    pub field: MagneticField,
    pub energies: [f64; DIM],
    pub probs: [f64; DIM],
    pub log_z: f64,
    pub internal_energy: f64,
    pub entropy: f64,
}

impl ThermoPoint {
    pub fn from_spectrum(spec: &Spectrum, t: f64, field: MagneticField) -> Result<Self> {
        Ok(Self {
            temperature: t,
            field,
            energies: *spec.energies(),
            probs: boltzmann(spec, t)?,
            log_z: log_partition(spec, t)?,
            internal_energy: internal_energy(spec, t)?,
            entropy: entropy(spec, t)?,
        })
    }
}

pub fn thermo_point(params: &CompoundParams, t: f64, field: MagneticField) -> Result<ThermoPoint> {
    check_temperature(t)?;
    ThermoPoint::from_spectrum(&spectrum_at(params, field)?, t, field)
}

fn check_bracket(lo: f64, hi: f64, what: &str) -> Result<()> {
    if lo.is_finite() && hi.is_finite() && lo < hi {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what} bracket [{lo}, {hi}] must be finite with lo < hi"
        )))
    }
}

/// Field magnitude `B*` along `direction` with `S(t, B*) = s_target`.
///
/// Entropy at fixed temperature need not be monotonic in the field, so the
/// bracket must show a sign change; otherwise no root is reported.
pub fn isentropic_field(
    params: &CompoundParams,
    t: f64,
    s_target: f64,
    direction: Direction,
    bracket: (f64, f64),
) -> Result<f64> {
    check_temperature(t)?;
    let (lo, hi) = bracket;
    check_bracket(lo, hi, "field")?;
    let g = |b: f64| -> Result<f64> {
        let spec = spectrum_at(params, MagneticField::along(direction, b))?;
        Ok(entropy(&spec, t)? - s_target)
    };
    match brent(g, lo, hi, ENTROPY_TOL, X_TOL)? {
        Ok(b) => Ok(b),
        Err(RootFailure::NoSignChange) => Err(Error::NoIsentropicField { lo, hi }),
        Err(RootFailure::Stalled { x, residual }) => Err(Error::RootStalled { x, residual }),
        Err(RootFailure::NonFinite { x }) => Err(Error::RootStalled { x, residual: f64::NAN }),
    }
}

/// Temperature `T*` with `S(T*, field) = s_target`.
///
/// Entropy is nondecreasing in temperature, so a root inside the bracket is
/// unique up to plateaus.
pub fn isentropic_temperature(
    params: &CompoundParams,
    field: MagneticField,
    s_target: f64,
    bracket: (f64, f64),
) -> Result<f64> {
    let (lo, hi) = bracket;
    check_bracket(lo, hi, "temperature")?;
    if lo <= 0.0 {
        return Err(Error::NonPositiveTemperature(lo));
    }
    let spec = spectrum_at(params, field)?;
    isentropic_temperature_of(&spec, s_target, bracket)
}

fn isentropic_temperature_of(spec: &Spectrum, s_target: f64, (lo, hi): (f64, f64)) -> Result<f64> {
    let g = |t: f64| -> Result<f64> { Ok(entropy(spec, t)? - s_target) };
    match brent(g, lo, hi, ENTROPY_TOL, X_TOL * lo)? {
        Ok(t) => Ok(t),
        Err(RootFailure::NoSignChange) => Err(Error::NoIsentropicTemperature { lo, hi }),
        Err(RootFailure::Stalled { x, residual }) => Err(Error::RootStalled { x, residual }),
        Err(RootFailure::NonFinite { x }) => Err(Error::RootStalled { x, residual: f64::NAN }),
    }
}

/// One point of a traced isentrope; `temperature` is `None` where the
/// entropy cannot be matched inside the temperature bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsentropePoint {
    pub field: f64,
    pub temperature: Option<f64>,
}

/// `T(B)` along the isentrope through `(t0, b0·direction)`.
///
/// Grid points are visited in order. Where the previously found temperature
/// already matches the entropy to [`ENTROPY_TOL`] it is kept, so plateaus
/// (including the fully degenerate zero-coupling case) stay flat at `t0`.
pub fn trace_isentrope(
    params: &CompoundParams,
    t0: f64,
    b0: f64,
    field_grid: &[f64],
    direction: Direction,
    t_bracket: (f64, f64),
) -> Result<Vec<IsentropePoint>> {
    check_temperature(t0)?;
    check_bracket(t_bracket.0, t_bracket.1, "temperature")?;
    check_temperature(t_bracket.0)?;
    let s0 = entropy(&spectrum_at(params, MagneticField::along(direction, b0))?, t0)?;

    let mut last = t0;
    let mut out = Vec::with_capacity(field_grid.len());
    for &b in field_grid {
        let spec = spectrum_at(params, MagneticField::along(direction, b))?;
        let temperature = if (entropy(&spec, last)? - s0).abs() <= ENTROPY_TOL {
            Some(last)
        } else {
            match isentropic_temperature_of(&spec, s0, t_bracket) {
                Ok(t) => Some(t),
                Err(Error::NoIsentropicTemperature { .. }) => None,
                Err(e) => return Err(e),
            }
        };
        if let Some(t) = temperature {
            last = t;
        }
        out.push(IsentropePoint { field: b, temperature });
    }
    Ok(out)
}
