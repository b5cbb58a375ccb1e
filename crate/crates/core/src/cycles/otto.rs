//! Otto cycle: two population-frozen adiabats and two isochoric bath contacts.
//!
//! a-b: adiabat `B0 → B1` with populations `p(T_l, B0)`
//! b-c: isochoric heating at `B1` to `p(T_h, B1)` (hot bath)
//! c-d: adiabat `B1 → B0` with populations `p(T_h, B1)`
//! d-a: isochoric cooling at `B0` back to `p(T_l, B0)` (cold bath)

use super::{CycleKind, CycleOptions, CycleResult, Protocol, StrokeLabel, StrokeRecord};
use crate::eigensolver::Spectrum;
use crate::error::Result;
use crate::spin_model::{CompoundParams, MagneticField};
use crate::thermodynamics::{boltzmann, spectrum_at};

pub(crate) fn otto_from_spectra(
    s0: &Spectrum,
    s1: &Spectrum,
    t_l: f64,
    t_h: f64,
    mode_tol: f64,
) -> Result<CycleResult> {
    let (e0, e1) = (s0.energies(), s1.energies());
    let p_l = boltzmann(s0, t_l)?;
    let p_h = boltzmann(s1, t_h)?;

    let dot = |e: &[f64; 8], p: &[f64; 8]| -> f64 { e.iter().zip(p).map(|(e, p)| e * p).sum() };
    let gap: [f64; 8] = std::array::from_fn(|i| e1[i] - e0[i]);
    let dp: [f64; 8] = std::array::from_fn(|i| p_h[i] - p_l[i]);

    let q_in = dot(e1, &dp);
    let q_out = -dot(e0, &dp);
    let w_net = dot(&gap, &dp);

    let strokes = [
        StrokeRecord::adiabatic(StrokeLabel::AB, dot(&gap, &p_l)),
        StrokeRecord::isochoric(StrokeLabel::BC, q_in),
        StrokeRecord::adiabatic(StrokeLabel::CD, -dot(&gap, &p_h)),
        StrokeRecord::isochoric(StrokeLabel::DA, q_out),
    ];
    Ok(CycleResult::assemble(
        CycleKind::Otto,
        Some(strokes),
        w_net,
        q_in,
        q_out,
        mode_tol,
    ))
}

/// Quantum Otto cycle: `w_net = Σ_i [ε_i(B1) − ε_i(B0)] [p_i(T_h,B1) − p_i(T_l,B0)]`.
///
/// The intermediate temperatures reached on the adiabats never enter.
pub fn otto_cycle(params: &CompoundParams, protocol: &Protocol, options: &CycleOptions) -> Result<CycleResult> {
    protocol.validate()?;
    let s0 = spectrum_at(params, MagneticField::along(protocol.direction, protocol.b0))?;
    let s1 = spectrum_at(params, MagneticField::along(protocol.direction, protocol.b1))?;
    otto_from_spectra(&s0, &s1, protocol.t_cold, protocol.t_hot, options.mode_tol)
}
