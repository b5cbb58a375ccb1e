//! Stirling cycle: two isotherms and two isochores.
//!
//! a-b: isothermal at `T_l`, `B0 → B1` (cold bath)
//! b-c: isochoric at `B1`, `T_l → T_h` (hot bath)
//! c-d: isothermal at `T_h`, `B1 → B0` (hot bath)
//! d-a: isochoric at `B0`, `T_h → T_l` (cold bath)

use super::{CycleKind, CycleOptions, CycleResult, Protocol, StrokeLabel, StrokeRecord};
use crate::eigensolver::Spectrum;
use crate::error::Result;
use crate::spin_model::{CompoundParams, MagneticField};
use crate::thermodynamics::{entropy, internal_energy, spectrum_at};

pub(crate) fn stirling_from_spectra(
    s0: &Spectrum,
    s1: &Spectrum,
    t_l: f64,
    t_h: f64,
    mode_tol: f64,
) -> Result<CycleResult> {
    let (u_l0, u_l1) = (internal_energy(s0, t_l)?, internal_energy(s1, t_l)?);
    let (u_h0, u_h1) = (internal_energy(s0, t_h)?, internal_energy(s1, t_h)?);
    let q_ab = t_l * (entropy(s1, t_l)? - entropy(s0, t_l)?);
    let q_cd = t_h * (entropy(s0, t_h)? - entropy(s1, t_h)?);

    let strokes = [
        StrokeRecord::isothermal(StrokeLabel::AB, q_ab, u_l1 - u_l0),
        StrokeRecord::isochoric(StrokeLabel::BC, u_h1 - u_l1),
        StrokeRecord::isothermal(StrokeLabel::CD, q_cd, u_h0 - u_h1),
        StrokeRecord::isochoric(StrokeLabel::DA, u_l0 - u_h0),
    ];
    let [ab, bc, cd, da] = strokes;
    let w_net = ab.work + cd.work;
    let q_in = bc.heat + cd.heat;
    let q_out = da.heat + ab.heat;
    Ok(CycleResult::assemble(
        CycleKind::Stirling,
        Some(strokes),
        w_net,
        q_in,
        q_out,
        mode_tol,
    ))
}

/// Quantum Stirling cycle; `w_net = W_ab + W_cd`, `q_in = Q_bc + Q_cd`,
/// `q_out = Q_da + Q_ab`.
pub fn stirling_cycle(params: &CompoundParams, protocol: &Protocol, options: &CycleOptions) -> Result<CycleResult> {
    protocol.validate()?;
    let s0 = spectrum_at(params, MagneticField::along(protocol.direction, protocol.b0))?;
    let s1 = spectrum_at(params, MagneticField::along(protocol.direction, protocol.b1))?;
    stirling_from_spectra(&s0, &s1, protocol.t_cold, protocol.t_hot, options.mode_tol)
}
