//! Cyclic complex Jacobi eigensolver for 8×8 Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq`, then applies a
//! real Jacobi rotation, so the accumulated transform stays unitary. Sweeps
//! visit pairs in a fixed row-cyclic order and the final sort is stable,
//! which makes the output a deterministic function of the input bits.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{HermitianMatrix8, DIM};

/// Relative Hermiticity tolerance accepted before symmetrizing.
pub const HERMITICITY_TOL: f64 = 1e-13;
/// Off-diagonal norm target relative to `‖H‖_F`.
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching eigenvector columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    energies: [f64; DIM],
    vectors: HermitianMatrix8,
}

impl Spectrum {
    /// Spectrum of a diagonal Hamiltonian with the given level energies.
    ///
    /// Energies are sorted; the eigenvectors are the matching basis vectors.
    pub fn from_energies(energies: [f64; DIM]) -> Self {
        let mut order: [usize; DIM] = std::array::from_fn(|i| i);
        order.sort_by(|&a, &b| energies[a].total_cmp(&energies[b]));
        let vectors = HermitianMatrix8::from_fn(|i, j| {
            if i == order[j] {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        Self {
            energies: order.map(|k| energies[k]),
            vectors,
        }
    }

    pub fn energies(&self) -> &[f64; DIM] {
        &self.energies
    }

    /// Column `i` is the eigenvector of `energies()[i]`.
    pub fn eigenvectors(&self) -> &HermitianMatrix8 {
        &self.vectors
    }

    pub fn ground_energy(&self) -> f64 {
        self.energies[0]
    }

    pub fn max_energy(&self) -> f64 {
        self.energies[DIM - 1]
    }

    /// `V Λ V†`.
    pub fn reconstruct(&self) -> HermitianMatrix8 {
        let v = self.vectors;
        HermitianMatrix8::from_fn(|i, j| (0..DIM).map(|k| v[(i, k)] * self.energies[k] * v[(j, k)].conj()).sum())
    }
}

fn off_diagonal_norm(a: &[[Complex64; DIM]; DIM]) -> f64 {
    let mut acc = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                acc += z.norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Diagonalizes a Hermitian matrix.
///
/// Rejects inputs with `‖H − H†‖_F > 1e-13 (1 + ‖H‖_F)`; accepted inputs are
/// symmetrized as `(H + H†)/2` first.
pub fn diagonalize(h: &HermitianMatrix8) -> Result<Spectrum> {
    if !h.is_finite() {
        return Err(Error::InvalidParameter("matrix has non-finite entries".into()));
    }
    let norm = h.frobenius_norm();
    let deviation = h.hermiticity_deviation();
    if deviation > HERMITICITY_TOL * (1.0 + norm) {
        return Err(Error::NotHermitian { deviation });
    }

    let mut a = *h.symmetrized().rows();
    let mut v = *HermitianMatrix8::identity().rows();
    let target = OFF_DIAGONAL_TOL * norm;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..DIM - 1 {
            for q in p + 1..DIM {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let diag: [f64; DIM] = std::array::from_fn(|i| a[i][i].re);
    let mut order: [usize; DIM] = std::array::from_fn(|i| i);
    order.sort_by(|&x, &y| diag[x].total_cmp(&diag[y]));

    Ok(Spectrum {
        energies: order.map(|k| diag[k]),
        vectors: HermitianMatrix8::from_fn(|i, j| v[i][order[j]]),
    })
}

/// Zeroes `a[p][q]` with `a ← G† a G`, `v ← v G`. Requires `p < q`.
fn rotate(a: &mut [[Complex64; DIM]; DIM], v: &mut [[Complex64; DIM]; DIM], p: usize, q: usize) {
    let apq = a[p][q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[p][p].re;
    let aqq = a[q][q].re;

    // real rotation on the phase-corrected pivot
    let theta = (aqq - app) / (2.0 * mag);
    // smaller root of t² + 2θt − 1 = 0; θ → ∞ gives t → 0
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // G = diag(1, conj(phase)) · [[c, s], [-s, c]]
    let gpp = Complex64::new(c, 0.0);
    let gpq = Complex64::new(s, 0.0);
    let gqp = -phase.conj() * s;
    let gqq = phase.conj() * c;

    for row in a.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = x * gpp + y * gqp;
        row[q] = x * gpq + y * gqq;
    }
    let (lo, hi) = a.split_at_mut(q);
    for (ap, aq) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
        let (x, y) = (*ap, *aq);
        *ap = gpp.conj() * x + gqp.conj() * y;
        *aq = gpq.conj() * x + gqq.conj() * y;
    }
    a[p][q] = Complex64::new(0.0, 0.0);
    a[q][p] = Complex64::new(0.0, 0.0);
    a[p][p] = Complex64::new(a[p][p].re, 0.0);
    a[q][q] = Complex64::new(a[q][q].re, 0.0);

    for row in v.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = x * gpp + y * gqp;
        row[q] = x * gpq + y * gqq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix() {
        let s = diagonalize(&HermitianMatrix8::zeros()).unwrap();
        assert_eq!(s.energies(), &[0.0; DIM]);
        assert_eq!(*s.eigenvectors(), HermitianMatrix8::identity());
    }

    #[test]
    fn already_diagonal() {
        let d = [3.0, 1.0, 8.0, 2.0, 7.0, 5.0, 4.0, 6.0];
        let s = diagonalize(&HermitianMatrix8::diagonal(&d)).unwrap();
        assert_eq!(s.energies(), &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        // permutation eigenvectors
        for (j, &e) in s.energies().iter().enumerate() {
            let src = d.iter().position(|&x| x == e).unwrap();
            for i in 0..DIM {
                let expected = if i == src { 1.0 } else { 0.0 };
                assert_eq!(s.eigenvectors()[(i, j)], Complex64::new(expected, 0.0));
            }
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = HermitianMatrix8::identity();
        m[(0, 1)] = Complex64::new(1e-6, 0.0);
        assert!(matches!(diagonalize(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn tolerates_tiny_asymmetry() {
        let mut m = HermitianMatrix8::diagonal(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
        m[(0, 1)] = Complex64::new(1e-15, 0.0);
        assert!(diagonalize(&m).is_ok());
    }

    #[test]
    fn two_by_two_complex_block() {
        // [[1, 2i], [-2i, 1]] has eigenvalues -1, 3
        let mut m = HermitianMatrix8::zeros();
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        m[(1, 1)] = Complex64::new(1.0, 0.0);
        m[(0, 1)] = Complex64::new(0.0, 2.0);
        m[(1, 0)] = Complex64::new(0.0, -2.0);
        let s = diagonalize(&m).unwrap();
        assert!((s.energies()[0] + 1.0).abs() < 1e-14);
        assert!((s.energies()[7] - 3.0).abs() < 1e-14);
        assert!((s.reconstruct() - m).frobenius_norm() < 1e-14);
    }

    #[test]
    fn from_energies_sorts() {
        let s = Spectrum::from_energies([2.0, -1.0, 0.0, 0.0, 5.0, 3.0, -4.0, 1.0]);
        assert_eq!(s.energies(), &[-4.0, -1.0, 0.0, 0.0, 1.0, 2.0, 3.0, 5.0]);
        let back = s.reconstruct();
        assert_eq!(back[(6, 6)].re, -4.0);
        assert_eq!(back[(4, 4)].re, 5.0);
    }
}
