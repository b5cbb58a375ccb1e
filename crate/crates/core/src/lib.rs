//! Quantum heat machines with a spin-½ triangle (Cu₃-type molecular magnet)
//! as working substance.
//!
//! The pipeline is: [`spin_model`] builds the 8×8 Hamiltonian for a compound
//! and an applied field, [`eigensolver`] diagonalizes it, [`thermodynamics`]
//! turns the spectrum into populations, energy and entropy, [`cycles`]
//! evaluates reversible Carnot, Otto and Stirling cycles, and [`sweep`] maps
//! operating modes over two-parameter grids.
//!
//! ```
//! use cu3_machines::cycles::{otto_cycle, CycleOptions, OperationMode, Protocol};
//! use cu3_machines::spin_model::preset;
//!
//! let cu3 = preset("cu3-as").unwrap();
//! let r = otto_cycle(&cu3, &Protocol::new(0.5, 1.0, 0.1, 3.0), &CycleOptions::default()).unwrap();
//! assert_eq!(r.mode, OperationMode::Refrigerator);
//! ```

pub mod cli;
pub mod cycles;
pub mod eigensolver;
pub mod error;
pub mod linalg;
pub mod param_file;
mod roots;
pub mod spin_model;
pub mod sweep;
pub mod thermodynamics;

pub use error::{Error, Result};
