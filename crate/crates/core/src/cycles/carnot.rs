//! Carnot cycle: two isotherms joined by two population-preserving adiabats.
//!
//! a-b: isothermal magnetization at `T_l`, `B0 → B_b`
//! b-c: adiabat `B_b → B1`, `T_l → T_h`
//! c-d: isothermal demagnetization at `T_h`, `B1 → B_d`
//! d-a: adiabat `B_d → B0`, `T_h → T_l`
//!
//! The net heats need only the endpoint entropies. `B_b` and `B_d` are found
//! by entropy matching and only feed the per-stroke breakdown.

use super::{CycleKind, CycleOptions, CycleResult, Protocol, StrokeLabel, StrokeRecord};
use crate::eigensolver::Spectrum;
use crate::error::{Error, Result};
use crate::spin_model::{CompoundParams, Direction, MagneticField};
use crate::thermodynamics::{entropy, internal_energy, isentropic_field, spectrum_at};

/// An intermediate field located on an isentrope, with its spectrum.
#[derive(Debug, Clone)]
pub(crate) struct SwitchField {
    pub field: f64,
    pub spectrum: Spectrum,
}

/// Field at temperature `t` whose entropy equals `s_target`; `None` when the
/// bracket holds no sign change or the solve stalls.
pub(crate) fn switch_field(
    params: &CompoundParams,
    t: f64,
    s_target: f64,
    direction: Direction,
    bracket: (f64, f64),
) -> Result<Option<SwitchField>> {
    match isentropic_field(params, t, s_target, direction, bracket) {
        Ok(field) => Ok(Some(SwitchField {
            field,
            spectrum: spectrum_at(params, MagneticField::along(direction, field))?,
        })),
        Err(Error::NoIsentropicField { .. } | Error::RootStalled { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub(crate) fn carnot_from_parts(
    s0: &Spectrum,
    s1: &Spectrum,
    t_l: f64,
    t_h: f64,
    b_b: Option<&SwitchField>,
    b_d: Option<&SwitchField>,
    mode_tol: f64,
) -> Result<CycleResult> {
    let s_cold = entropy(s0, t_l)?;
    let s_hot = entropy(s1, t_h)?;
    let delta_s = s_cold - s_hot;
    let q_in = t_h * delta_s;
    let q_out = -t_l * delta_s;
    let w_net = q_in + q_out;

    let strokes = match (b_b, b_d) {
        (Some(b), Some(d)) => {
            let u_a = internal_energy(s0, t_l)?;
            let u_b = internal_energy(&b.spectrum, t_l)?;
            let u_c = internal_energy(s1, t_h)?;
            let u_d = internal_energy(&d.spectrum, t_h)?;
            let q_ab = t_l * (entropy(&b.spectrum, t_l)? - s_cold);
            let q_cd = t_h * (entropy(&d.spectrum, t_h)? - s_hot);
            Some([
                StrokeRecord::isothermal(StrokeLabel::AB, q_ab, u_b - u_a),
                StrokeRecord::adiabatic(StrokeLabel::BC, u_c - u_b),
                StrokeRecord::isothermal(StrokeLabel::CD, q_cd, u_d - u_c),
                StrokeRecord::adiabatic(StrokeLabel::DA, u_a - u_d),
            ])
        }
        _ => None,
    };

    let mut result = CycleResult::assemble(CycleKind::Carnot, strokes, w_net, q_in, q_out, mode_tol);
    if let (Some(b), Some(d)) = (b_b, b_d) {
        result.switch_fields = Some((b.field, d.field));
    }
    Ok(result)
}

/// Reversible Carnot cycle between `T_l` and `T_h`.
///
/// With `ΔS = S(T_l, B0) − S(T_h, B1)`: `q_in = T_h ΔS`, `q_out = −T_l ΔS`,
/// `w_net = (T_h − T_l) ΔS`.
pub fn carnot_cycle(params: &CompoundParams, protocol: &Protocol, options: &CycleOptions) -> Result<CycleResult> {
    protocol.validate()?;
    let Protocol {
        t_cold,
        t_hot,
        b0,
        b1,
        direction,
    } = *protocol;
    if b0 < 0.0 || b1 < 0.0 {
        return Err(Error::Domain(format!(
            "Carnot field magnitudes must be non-negative, got B0 = {b0}, B1 = {b1}"
        )));
    }
    let s0 = spectrum_at(params, MagneticField::along(direction, b0))?;
    let s1 = spectrum_at(params, MagneticField::along(direction, b1))?;

    let b_b = switch_field(params, t_cold, entropy(&s1, t_hot)?, direction, options.field_bracket)?;
    let b_d = switch_field(params, t_hot, entropy(&s0, t_cold)?, direction, options.field_bracket)?;
    carnot_from_parts(&s0, &s1, t_cold, t_hot, b_b.as_ref(), b_d.as_ref(), options.mode_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{OperationMode, Performance};
    use crate::spin_model::preset;

    fn run(tl: f64, th: f64, b0: f64, b1: f64) -> CycleResult {
        let p = preset("cu3-as").unwrap();
        carnot_cycle(&p, &Protocol::new(tl, th, b0, b1), &CycleOptions::default()).unwrap()
    }

    #[test]
    fn engine_cell_has_carnot_efficiency() {
        let r = run(0.5, 1.0, 0.0, 3.0);
        assert_eq!(r.mode, OperationMode::Engine);
        assert!((r.efficiency().unwrap() - 0.5).abs() < 1e-12);
        let r = run(0.7, 1.5, 0.0, 3.0);
        assert_eq!(r.mode, OperationMode::Engine);
        assert!((r.efficiency().unwrap() - 8.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn refrigerator_cell_has_carnot_cop() {
        let r = run(0.5, 1.0, 0.0, 0.5);
        assert_eq!(r.mode, OperationMode::Refrigerator);
        assert!((r.cop().unwrap() - 2.0).abs() < 1e-10);
        let Some(Performance::Cop { kappa, .. }) = r.performance else {
            panic!()
        };
        assert!((kappa - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn vanishing_window_is_none() {
        let r = run(1.0 - 1e-12, 1.0, 0.0, 3.0);
        assert!(r.w_net.abs() < 1e-10);
        assert_eq!(r.mode, OperationMode::None);
    }

    #[test]
    fn stroke_detail_closes() {
        let r = run(0.5, 1.0, 0.0, 3.0);
        let strokes = r.strokes.expect("switch fields solvable");
        for s in &strokes {
            assert!(s.first_law_residual().abs() < 1e-10);
        }
        let w: f64 = strokes.iter().map(|s| s.work).sum();
        assert!((w - (r.q_in + r.q_out)).abs() < 1e-8);
        assert_eq!(strokes[1].heat, 0.0);
        assert_eq!(strokes[3].heat, 0.0);
        let (bb, bd) = r.switch_fields.unwrap();
        assert!((0.0..=10.0).contains(&bb) && (0.0..=10.0).contains(&bd));
    }

    #[test]
    fn unsolvable_bracket_drops_detail_only() {
        let p = preset("cu3-as").unwrap();
        let opts = CycleOptions {
            field_bracket: (9.0, 10.0),
            ..CycleOptions::default()
        };
        let r = carnot_cycle(&p, &Protocol::new(0.5, 1.0, 0.0, 3.0), &opts).unwrap();
        assert!(r.strokes.is_none());
        assert_eq!(r.mode, OperationMode::Engine);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = preset("cu3-as").unwrap();
        let o = CycleOptions::default();
        assert!(carnot_cycle(&p, &Protocol::new(1.0, 0.5, 0.0, 1.0), &o).is_err());
        assert!(carnot_cycle(&p, &Protocol::new(0.5, 1.0, -1.0, 1.0), &o).is_err());
    }
}
