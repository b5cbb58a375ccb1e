//! JSON parameter files.
//!
//! ```json
//! {
//!   "name": "my-trimer",
//!   "bonds": [{"pair": [1, 2], "jx": 4.5, "jy": 4.5, "jz": 4.56}, ...],
//!   "dm":    [{"pair": [1, 2], "dx": 0.529, "dy": 0.529, "dz": 0.529}, ...],
//!   "g":     [{"site": 1, "gx": 2.25, "gy": 2.25, "gz": 2.06}, ...]
//! }
//! ```
//!
//! All three bonds (1,2), (2,3), (3,1) and all three sites must appear once.
//! A bond may be written reversed; a reversed DM entry is negated since
//! `D·(S_k × S_j) = −D·(S_j × S_k)`. An optional `mu_b_hat` overrides the
//! Bohr magneton in K/T.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spin_model::{BondExchange, CompoundParams, DmVector, GTensor, BOND_PAIRS, MU_B_HAT};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct BondEntry {
    pair: [usize; 2],
    jx: f64,
    jy: f64,
    jz: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DmEntry {
    pair: [usize; 2],
    dx: f64,
    dy: f64,
    dz: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GEntry {
    site: usize,
    gx: f64,
    gy: f64,
    gz: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ParamFile {
    name: String,
    bonds: Vec<BondEntry>,
    dm: Vec<DmEntry>,
    g: Vec<GEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mu_b_hat: Option<f64>,
}

/// Index into `BOND_PAIRS` and whether the pair is written reversed.
fn bond_slot(pair: [usize; 2], key: &str) -> Result<(usize, bool)> {
    for (k, &(a, b)) in BOND_PAIRS.iter().enumerate() {
        if pair == [a, b] {
            return Ok((k, false));
        }
        if pair == [b, a] {
            return Ok((k, true));
        }
    }
    Err(Error::ParamFile(format!(
        "`{key}` entry has pair {pair:?}; expected one of [1,2], [2,3], [3,1]"
    )))
}

fn fill<T: Copy>(slots: [Option<T>; 3], key: &str, what: &str) -> Result<[T; 3]> {
    let mut out = Vec::with_capacity(3);
    for (k, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(v) => out.push(v),
            None => {
                return Err(Error::ParamFile(format!(
                    "`{key}` is missing the entry for {what} {}",
                    describe(key, k)
                )))
            }
        }
    }
    Ok([out[0], out[1], out[2]])
}

fn describe(key: &str, k: usize) -> String {
    if key == "g" {
        format!("{}", k + 1)
    } else {
        let (a, b) = BOND_PAIRS[k];
        format!("[{a},{b}]")
    }
}

fn duplicate(key: &str, k: usize) -> Error {
    Error::ParamFile(format!("`{key}` lists {} more than once", describe(key, k)))
}

fn count(key: &str, n: usize) -> Result<()> {
    if n == 3 {
        Ok(())
    } else {
        Err(Error::ParamFile(format!(
            "`{key}` must have exactly 3 entries, found {n}"
        )))
    }
}

impl TryFrom<ParamFile> for CompoundParams {
    type Error = Error;

    fn try_from(file: ParamFile) -> Result<Self> {
        count("bonds", file.bonds.len())?;
        count("dm", file.dm.len())?;
        count("g", file.g.len())?;

        let mut bonds = [None; 3];
        for e in &file.bonds {
            let (k, _) = bond_slot(e.pair, "bonds")?;
            if bonds[k].is_some() {
                return Err(duplicate("bonds", k));
            }
            bonds[k] = Some(BondExchange {
                jx: e.jx,
                jy: e.jy,
                jz: e.jz,
            });
        }

        let mut dm = [None; 3];
        for e in &file.dm {
            let (k, reversed) = bond_slot(e.pair, "dm")?;
            if dm[k].is_some() {
                return Err(duplicate("dm", k));
            }
            let s = if reversed { -1.0 } else { 1.0 };
            dm[k] = Some(DmVector {
                dx: s * e.dx,
                dy: s * e.dy,
                dz: s * e.dz,
            });
        }

        let mut g = [None; 3];
        for e in &file.g {
            if !(1..=3).contains(&e.site) {
                return Err(Error::ParamFile(format!(
                    "`g` entry has site {}; expected 1, 2 or 3",
                    e.site
                )));
            }
            let k = e.site - 1;
            if g[k].is_some() {
                return Err(duplicate("g", k));
            }
            g[k] = Some(GTensor {
                gx: e.gx,
                gy: e.gy,
                gz: e.gz,
            });
        }

        let params = CompoundParams {
            name: file.name,
            bonds: fill(bonds, "bonds", "bond")?,
            dm: fill(dm, "dm", "bond")?,
            g: fill(g, "g", "site")?,
            mu_b_hat: file.mu_b_hat.unwrap_or(MU_B_HAT),
        };
        params.validate()?;
        Ok(params)
    }
}

impl From<&CompoundParams> for ParamFile {
    fn from(p: &CompoundParams) -> Self {
        let pair = |k: usize| [BOND_PAIRS[k].0, BOND_PAIRS[k].1];
        ParamFile {
            name: p.name.clone(),
            bonds: (0..3)
                .map(|k| BondEntry {
                    pair: pair(k),
                    jx: p.bonds[k].jx,
                    jy: p.bonds[k].jy,
                    jz: p.bonds[k].jz,
                })
                .collect(),
            dm: (0..3)
                .map(|k| DmEntry {
                    pair: pair(k),
                    dx: p.dm[k].dx,
                    dy: p.dm[k].dy,
                    dz: p.dm[k].dz,
                })
                .collect(),
            g: (0..3)
                .map(|k| GEntry {
                    site: k + 1,
                    gx: p.g[k].gx,
                    gy: p.g[k].gy,
                    gz: p.g[k].gz,
                })
                .collect(),
            mu_b_hat: (p.mu_b_hat != MU_B_HAT).then_some(p.mu_b_hat),
        }
    }
}

pub fn parse_params(json: &str) -> Result<CompoundParams> {
    let file: ParamFile = serde_json::from_str(json).map_err(|e| Error::ParamFile(e.to_string()))?;
    file.try_into()
}

pub fn load_params(path: impl AsRef<Path>) -> Result<CompoundParams> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::ParamFile(format!("cannot read {}: {e}", path.display())))?;
    parse_params(&text)
}

/// Pretty-printed JSON in the parameter-file schema.
pub fn to_json(params: &CompoundParams) -> String {
    serde_json::to_string_pretty(&ParamFile::from(params)).expect("parameter file serializes")
}
