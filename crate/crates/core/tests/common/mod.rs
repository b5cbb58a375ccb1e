//! Generators and independent oracles shared by the integration tests and
//! the acceptance runner.
#![allow(dead_code)]

use cu3_machines::cycles::{CycleResult, Protocol};
use cu3_machines::eigensolver::Spectrum;
use cu3_machines::linalg::{HermitianMatrix8, DIM};
use cu3_machines::spin_model::{BondExchange, CompoundParams, DmVector, GTensor, MU_B_HAT};
use cu3_machines::thermodynamics::{entropy, internal_energy, log_partition};
use num_complex::Complex64;
use rand::Rng;

pub fn random_params(rng: &mut impl Rng) -> CompoundParams {
    let mut p = CompoundParams::zero("random");
    for k in 0..3 {
        p.bonds[k] = BondExchange {
            jx: rng.gen_range(-6.0..6.0),
            jy: rng.gen_range(-6.0..6.0),
            jz: rng.gen_range(-6.0..6.0),
        };
        p.dm[k] = DmVector {
            dx: rng.gen_range(-1.0..1.0),
            dy: rng.gen_range(-1.0..1.0),
            dz: rng.gen_range(-1.0..1.0),
        };
        p.g[k] = GTensor {
            gx: rng.gen_range(1.5..2.5),
            gy: rng.gen_range(1.5..2.5),
            gz: rng.gen_range(1.5..2.5),
        };
    }
    p
}

pub fn random_protocol(rng: &mut impl Rng) -> Protocol {
    let t_cold = rng.gen_range(0.05..3.0);
    let t_hot = t_cold + rng.gen_range(0.01..3.0);
    Protocol::new(t_cold, t_hot, rng.gen_range(0.0..8.0), rng.gen_range(0.0..8.0))
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Random Hermitian matrix with entries of order `scale`.
pub fn random_hermitian(rng: &mut impl Rng, scale: f64) -> HermitianMatrix8 {
    let mut h = HermitianMatrix8::zeros();
    for i in 0..DIM {
        h[(i, i)] = c(scale * rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..DIM {
            let z = c(scale * rng.gen_range(-1.0..1.0), scale * rng.gen_range(-1.0..1.0));
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

fn max_abs(m: &HermitianMatrix8) -> f64 {
    m.rows().iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Checks the eigendecomposition contract; returns a description of the
/// first violated clause.
pub fn eigen_contract(h: &HermitianMatrix8, spec: &Spectrum) -> Result<(), String> {
    let e = spec.energies();
    let v = spec.eigenvectors();
    let norm = h.frobenius_norm();
    if e.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!("not ascending: {e:?}"));
    }
    let ortho = max_abs(&(v.adjoint() * *v - HermitianMatrix8::identity()));
    if ortho > 1e-12 {
        return Err(format!("orthonormality {ortho:e}"));
    }
    let residual = (*h * *v - *v * HermitianMatrix8::diagonal(e)).frobenius_norm();
    if residual > 1e-12 * (1.0 + norm) {
        return Err(format!("residual {residual:e} for norm {norm:e}"));
    }
    let tr: f64 = e.iter().sum();
    if (tr - h.trace().re).abs() > 1e-12 * (1.0 + norm) {
        return Err(format!("trace {tr} vs {}", h.trace().re));
    }
    let sq: f64 = e.iter().map(|x| x * x).sum();
    if (sq - norm * norm).abs() > 1e-11 * (norm * norm).max(f64::MIN_POSITIVE) {
        return Err(format!("frobenius {sq} vs {}", norm * norm));
    }
    let recon = (spec.reconstruct() - *h).frobenius_norm();
    if recon > 1e-11 * (1.0 + norm) {
        return Err(format!("reconstruction {recon:e}"));
    }
    Ok(())
}

/// Eigenvalues of a 2x2 Hermitian block in closed form, ascending.
pub fn eig2(a: f64, b: f64, off: Complex64) -> [f64; 2] {
    let m = 0.5 * (a + b);
    let r = (0.25 * (a - b) * (a - b) + off.norm_sqr()).sqrt();
    [m - r, m + r]
}

/// Eigenvalues of a 3x3 Hermitian matrix from the trigonometric solution of
/// its characteristic cubic, ascending.
pub fn eig3(a: [[Complex64; 3]; 3]) -> [f64; 3] {
    let p1 = a[0][1].norm_sqr() + a[0][2].norm_sqr() + a[1][2].norm_sqr();
    let q = (a[0][0].re + a[1][1].re + a[2][2].re) / 3.0;
    let p2 = (0..3).map(|i| (a[i][i].re - q).powi(2)).sum::<f64>() + 2.0 * p1;
    let p = (p2 / 6.0).sqrt();
    if p == 0.0 {
        return [q; 3];
    }
    let mut b = a;
    for (i, row) in b.iter_mut().enumerate() {
        for (j, z) in row.iter_mut().enumerate() {
            *z = (a[i][j] - if i == j { c(q, 0.0) } else { c(0.0, 0.0) }) / p;
        }
    }
    let det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    let r = (0.5 * det.re).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    [lo, 3.0 * q - hi - lo, hi]
}

/// Zero-field spectrum of an isotropic Heisenberg triangle, from
/// `J Σ S_i·S_j = (J/2)(S_tot² − 9/4)`.
pub fn casimir_spectrum(j: f64) -> [f64; 8] {
    let doublet = 0.5 * j * (0.75 - 2.25);
    let quartet = 0.5 * j * (3.75 - 2.25);
    let mut e = [doublet, doublet, doublet, doublet, quartet, quartet, quartet, quartet];
    e.sort_by(f64::total_cmp);
    e
}

/// Uncoupled spins with isotropic site factors `g` in a field of magnitude
/// `b`: `Σ_i ±(1/2) g_i μ_B b` over all sign choices.
pub fn zeeman_spectrum(g: [f64; 3], b: f64) -> [f64; 8] {
    let mut e = [0.0; 8];
    for (s, out) in e.iter_mut().enumerate() {
        *out = (0..3)
            .map(|k| {
                let sign = if s >> k & 1 == 0 { 0.5 } else { -0.5 };
                sign * g[k] * MU_B_HAT * b
            })
            .sum();
    }
    e.sort_by(f64::total_cmp);
    e
}

/// Gibbs-identity check `S = ln Z + U/T`. Returns `(error, tolerance)`.
///
/// The tolerance is 1e-12 plus a few ulps of the two summands: at very low
/// temperature `ln Z` and `U/T` are each of order `|ε_0|/T` and cancel, so
/// their rounding alone exceeds 1e-12.
pub fn gibbs_check(spec: &Spectrum, t: f64) -> (f64, f64) {
    let ln_z = log_partition(spec, t).unwrap();
    let u = internal_energy(spec, t).unwrap();
    let s = entropy(spec, t).unwrap();
    let err = (s - (ln_z + u / t)).abs();
    let tol = 1e-12 + 4.0 * f64::EPSILON * (ln_z.abs() + (u / t).abs());
    (err, tol)
}

/// Relative error of `U` against the centered difference `−∂ln Z/∂β` with
/// relative step 1e-5, measured against `max(|U|, max|ε|)`.
pub fn fd_energy_rel_error(spec: &Spectrum, t: f64) -> f64 {
    let beta = 1.0 / t;
    let h = 1e-5 * beta;
    let ln_z = |b: f64| log_partition(spec, 1.0 / b).unwrap();
    let fd = -(ln_z(beta + h) - ln_z(beta - h)) / (2.0 * h);
    let u = internal_energy(spec, t).unwrap();
    let scale = spec.energies().iter().fold(u.abs(), |m, e| m.max(e.abs()));
    (u - fd).abs() / scale.max(f64::MIN_POSITIVE)
}

/// Worst first-law violation over the cycle and its strokes, plus the
/// deviation of the stroke-work sum from `w_net`.
pub fn closure_errors(r: &CycleResult) -> (f64, f64) {
    let mut worst = r.closure_residual();
    let mut work_sum_err = 0.0;
    if let Some(strokes) = &r.strokes {
        for s in strokes {
            worst = worst.max(s.first_law_residual().abs());
        }
        let w: f64 = strokes.iter().map(|s| s.work).sum();
        work_sum_err = (w - r.w_net).abs();
    }
    (worst, work_sum_err)
}
