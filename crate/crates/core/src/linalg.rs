//! Fixed-size 8×8 complex matrices, the Hilbert space of three spin-½ sites.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

/// Hilbert-space dimension of the trimer.
pub const DIM: usize = 8;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense 8×8 complex matrix, row-major.
///
/// The name records the intended use: Hamiltonians and spin operators. The
/// type does not enforce Hermiticity on construction; the eigensolver checks
/// it with [`HermitianMatrix8::hermiticity_deviation`].
#[derive(Clone, Copy, PartialEq)]
pub struct HermitianMatrix8 {
    data: [[Complex64; DIM]; DIM],
}

impl HermitianMatrix8 {
    pub const fn zeros() -> Self {
        Self {
            data: [[ZERO; DIM]; DIM],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            m.data[i][i] = ONE;
        }
        m
    }

    pub fn from_rows(data: [[Complex64; DIM]; DIM]) -> Self {
        Self { data }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.data[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn diagonal(values: &[f64; DIM]) -> Self {
        let mut m = Self::zeros();
        for (i, &v) in values.iter().enumerate() {
            m.data[i][i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn rows(&self) -> &[[Complex64; DIM]; DIM] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.data[j][i].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..DIM).map(|i| self.data[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `H - H†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                acc += (self.data[i][j] - self.data[j][i].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `(H + H†) / 2`.
    pub fn symmetrized(&self) -> Self {
        Self::from_fn(|i, j| (self.data[i][j] + self.data[j][i].conj()) * 0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_fn(|i, j| self.data[i][j] * factor)
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }
}

impl Default for HermitianMatrix8 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl std::fmt::Debug for HermitianMatrix8 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "HermitianMatrix8 [")?;
        for row in &self.data {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for HermitianMatrix8 {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i][j]
    }
}

impl IndexMut<(usize, usize)> for HermitianMatrix8 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i][j]
    }
}

impl Add for HermitianMatrix8 {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.data[i][j] + rhs.data[i][j])
    }
}

impl AddAssign for HermitianMatrix8 {
    fn add_assign(&mut self, rhs: Self) {
        for i in 0..DIM {
            for j in 0..DIM {
                self.data[i][j] += rhs.data[i][j];
            }
        }
    }
}

impl Sub for HermitianMatrix8 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.data[i][j] - rhs.data[i][j])
    }
}

impl Mul for HermitianMatrix8 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.data[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..DIM {
                    out.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        out
    }
}

impl Mul<f64> for HermitianMatrix8 {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        Self::from_fn(|i, j| self.data[i][j] * rhs)
    }
}
