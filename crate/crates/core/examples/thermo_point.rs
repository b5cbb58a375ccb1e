//! Equilibrium state at a single temperature and field.
//!
//! `cargo run --example thermo_point -- 1.0 4.7`

use cu3_machines::spin_model::{preset, Direction, MagneticField};
use cu3_machines::thermodynamics::thermo_point;

fn main() -> cu3_machines::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("numeric argument"));
    let t = args.next().unwrap_or(1.0);
    let b = args.next().unwrap_or(4.7);

    let params = preset("cu3-as")?;
    let tp = thermo_point(&params, t, MagneticField::along(Direction::Z, b))?;
    println!("T = {t} K, B = {b} T");
    println!("U = {:.6} K", tp.internal_energy);
    println!("S = {:.6} k_B  (ln 8 = {:.6})", tp.entropy, 8f64.ln());
    for (e, p) in tp.energies.iter().zip(&tp.probs) {
        println!("  E = {e:9.4} K  p = {p:.6}");
    }
    Ok(())
}
