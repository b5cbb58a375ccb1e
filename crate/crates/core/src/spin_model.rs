//! Spin Hamiltonian of a spin-½ triangle with anisotropic exchange,
//! Dzyaloshinskii–Moriya coupling and site-dependent g-tensors.
//!
//! Basis: `|s1 s2 s3>` with site 1 the most significant bit and spin-up
//! encoded as 0, so basis index `4*s1 + 2*s2 + s3`. Spin operators are
//! `σ/2`; every coupling is in Kelvin.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{HermitianMatrix8, DIM};

/// Bohr magneton over Boltzmann constant, K/T.
pub const MU_B_HAT: f64 = 0.6717156644;

/// Site-pair order of `bonds` and `dm`: (1,2), (2,3), (3,1).
pub const BOND_PAIRS: [(usize, usize); 3] = [(1, 2), (2, 3), (3, 1)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Site {
    One,
    Two,
    Three,
}

impl Site {
    pub const ALL: [Site; 3] = [Site::One, Site::Two, Site::Three];

    /// 1-based site number.
    pub fn from_number(n: usize) -> Option<Site> {
        match n {
            1 => Some(Site::One),
            2 => Some(Site::Two),
            3 => Some(Site::Three),
            _ => None,
        }
    }

    fn bit(self) -> usize {
        match self {
            Site::One => 2,
            Site::Two => 1,
            Site::Three => 0,
        }
    }

    fn index(self) -> usize {
        2 - self.bit()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BondExchange {
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
}

impl BondExchange {
    pub fn xxz(jxy: f64, jz: f64) -> Self {
        Self { jx: jxy, jy: jxy, jz }
    }

    pub fn isotropic(j: f64) -> Self {
        Self { jx: j, jy: j, jz: j }
    }

    fn components(&self) -> [f64; 3] {
        [self.jx, self.jy, self.jz]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DmVector {
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl DmVector {
    fn components(&self) -> [f64; 3] {
        [self.dx, self.dy, self.dz]
    }
}

/// Diagonal g-tensor of one site.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GTensor {
    pub gx: f64,
    pub gy: f64,
    pub gz: f64,
}

impl GTensor {
    pub fn isotropic(g: f64) -> Self {
        Self { gx: g, gy: g, gz: g }
    }

    fn components(&self) -> [f64; 3] {
        [self.gx, self.gy, self.gz]
    }
}

/// Full Hamiltonian parameter set of one compound.
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundParams {
    pub name: String,
    /// Exchange on bonds (1,2), (2,3), (3,1).
    pub bonds: [BondExchange; 3],
    /// DM vectors on the same bonds, entering as `D_jk · (S_j × S_k)`.
    pub dm: [DmVector; 3],
    /// g-tensors of sites 1, 2, 3.
    pub g: [GTensor; 3],
    pub mu_b_hat: f64,
}

impl CompoundParams {
    /// Every coupling zero; the Hamiltonian vanishes identically.
    pub fn zero(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            bonds: [BondExchange::default(); 3],
            dm: [DmVector::default(); 3],
            g: [GTensor::default(); 3],
            mu_b_hat: MU_B_HAT,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let mut values = Vec::with_capacity(28);
        for (k, b) in self.bonds.iter().enumerate() {
            values.extend(b.components().map(|v| (format!("bonds[{k}]"), v)));
        }
        for (k, d) in self.dm.iter().enumerate() {
            values.extend(d.components().map(|v| (format!("dm[{k}]"), v)));
        }
        for (k, g) in self.g.iter().enumerate() {
            values.extend(g.components().map(|v| (format!("g[{k}]"), v)));
        }
        values.push(("mu_b_hat".to_string(), self.mu_b_hat));
        match values.into_iter().find(|(_, v)| !v.is_finite()) {
            Some((what, v)) => Err(Error::InvalidParameter(format!(
                "{} of compound `{}` is not finite ({v})",
                what, self.name
            ))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MagneticField {
    pub bx: f64,
    pub by: f64,
    pub bz: f64,
}

impl MagneticField {
    pub fn new(bx: f64, by: f64, bz: f64) -> Self {
        Self { bx, by, bz }
    }

    pub fn along(direction: Direction, magnitude: f64) -> Self {
        let [x, y, z] = direction.components();
        Self::new(magnitude * x, magnitude * y, magnitude * z)
    }

    pub fn components(&self) -> [f64; 3] {
        [self.bx, self.by, self.bz]
    }

    pub fn magnitude(&self) -> f64 {
        self.components().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }
}

/// Unit vector giving the orientation of a swept field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction([f64; 3]);

impl Direction {
    /// Perpendicular to the plane of the triangle.
    pub const Z: Direction = Direction([0.0, 0.0, 1.0]);

    /// Normalizes `v`; rejects zero and non-finite vectors.
    pub fn new(v: [f64; 3]) -> Result<Self> {
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "field direction {v:?} cannot be normalized"
            )));
        }
        Ok(Direction(v.map(|c| c / norm)))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }
}

impl Default for Direction {
    fn default() -> Self {
        Direction::Z
    }
}

/// Action of a Pauli matrix on one spin: `σ|s> = coeff |s'>`.
fn pauli_action(axis: Axis, s: usize) -> (usize, Complex64) {
    match axis {
        Axis::X => (s ^ 1, Complex64::new(1.0, 0.0)),
        Axis::Y => {
            if s == 0 {
                (1, Complex64::new(0.0, 1.0))
            } else {
                (0, Complex64::new(0.0, -1.0))
            }
        }
        Axis::Z => (s, Complex64::new(if s == 0 { 1.0 } else { -1.0 }, 0.0)),
    }
}

/// Adds `coeff · Π σ^axis_site` to `h`. The sites must be distinct.
fn add_pauli_string(h: &mut HermitianMatrix8, coeff: f64, factors: &[(Site, Axis)]) {
    if coeff == 0.0 {
        return;
    }
    for input in 0..DIM {
        let mut state = input;
        let mut amp = Complex64::new(coeff, 0.0);
        for &(site, axis) in factors {
            let bit = site.bit();
            let (s_new, c) = pauli_action(axis, (state >> bit) & 1);
            state = (state & !(1 << bit)) | (s_new << bit);
            amp *= c;
        }
        h[(state, input)] += amp;
    }
}

/// `S_site^axis = σ^axis / 2` embedded in the 8-dimensional space.
pub fn spin_operator(site: Site, axis: Axis) -> HermitianMatrix8 {
    let mut m = HermitianMatrix8::zeros();
    add_pauli_string(&mut m, 0.5, &[(site, axis)]);
    m
}

/// Total `S^axis` of the three sites.
pub fn total_spin(axis: Axis) -> HermitianMatrix8 {
    let mut m = HermitianMatrix8::zeros();
    for site in Site::ALL {
        add_pauli_string(&mut m, 0.5, &[(site, axis)]);
    }
    m
}

/// Levi-Civita triples with sign, `(a, b, c, ε_abc)`.
const LEVI_CIVITA: [(Axis, Axis, Axis, f64); 6] = [
    (Axis::X, Axis::Y, Axis::Z, 1.0),
    (Axis::Y, Axis::Z, Axis::X, 1.0),
    (Axis::Z, Axis::X, Axis::Y, 1.0),
    (Axis::X, Axis::Z, Axis::Y, -1.0),
    (Axis::Z, Axis::Y, Axis::X, -1.0),
    (Axis::Y, Axis::X, Axis::Z, -1.0),
];

fn axis_index(a: Axis) -> usize {
    match a {
        Axis::X => 0,
        Axis::Y => 1,
        Axis::Z => 2,
    }
}

/// Hamiltonian matrix in Kelvin.
///
/// `H = Σ_j Σ_α J^α_{j,j+1} S^α_j S^α_{j+1} + Σ_j D_{j,j+1}·(S_j × S_{j+1})
///      + μ̂_B Σ_j S_j·g_j·B`, bond index wrapping 3+1 → 1.
pub fn build_hamiltonian(params: &CompoundParams, field: MagneticField) -> Result<HermitianMatrix8> {
    params.validate()?;
    if !field.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "magnetic field {:?} is not finite",
            field.components()
        )));
    }

    let mut h = HermitianMatrix8::zeros();
    for (k, &(a, b)) in BOND_PAIRS.iter().enumerate() {
        let (sj, sk) = (Site::from_number(a).unwrap(), Site::from_number(b).unwrap());

        // S^α S^α = σ^α σ^α / 4
        for (axis, j) in Axis::ALL.into_iter().zip(params.bonds[k].components()) {
            add_pauli_string(&mut h, 0.25 * j, &[(sj, axis), (sk, axis)]);
        }

        // D·(S_j × S_k) = Σ ε_abc D^a S_j^b S_k^c
        let d = params.dm[k].components();
        for (a, b, c, sign) in LEVI_CIVITA {
            add_pauli_string(&mut h, 0.25 * sign * d[axis_index(a)], &[(sj, b), (sk, c)]);
        }
    }

    let bvec = field.components();
    for site in Site::ALL {
        let g = params.g[site.index()].components();
        for axis in Axis::ALL {
            let i = axis_index(axis);
            add_pauli_string(&mut h, 0.5 * params.mu_b_hat * g[i] * bvec[i], &[(site, axis)]);
        }
    }
    Ok(h)
}

pub const PRESET_NAMES: [&str; 2] = ["cu3-as", "cu3-sb"];

/// Tabulated parameter sets for the Cu₃-As and Cu₃-Sb compounds.
pub fn preset(name: &str) -> Result<CompoundParams> {
    let (j12, j12z, j23, j23z, d, g1, g2, g3, gz) = match name {
        "cu3-as" => (4.50, 4.56, 4.03, 4.06, 0.529, 2.25, 2.10, 2.40, 2.06),
        "cu3-sb" => (4.49, 4.54, 3.91, 3.96, 0.517, 2.24, 2.11, 2.40, 2.07),
        _ => {
            return Err(Error::UnknownPreset {
                name: name.to_string(),
                available: PRESET_NAMES.to_vec(),
            })
        }
    };
    let xy = |g: f64| GTensor { gx: g, gy: g, gz };
    Ok(CompoundParams {
        name: name.to_string(),
        bonds: [
            BondExchange::xxz(j12, j12z),
            BondExchange::xxz(j23, j23z),
            BondExchange::xxz(j23, j23z),
        ],
        dm: [
            DmVector { dx: d, dy: d, dz: d },
            DmVector {
                dx: 0.0,
                dy: 0.0,
                dz: d,
            },
            DmVector {
                dx: 0.0,
                dy: 0.0,
                dz: d,
            },
        ],
        g: [xy(g1), xy(g2), xy(g3)],
        mu_b_hat: MU_B_HAT,
    })
}
