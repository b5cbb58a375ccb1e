//! Energy levels of the Cu3-As trimer as the field rises along z.
//!
//! `cargo run --example spectrum`

use cu3_machines::spin_model::{preset, Direction, MagneticField};
use cu3_machines::thermodynamics::spectrum_at;

fn main() -> cu3_machines::Result<()> {
    let params = preset("cu3-as")?;
    println!("B/T    E1..E8 (K)");
    for i in 0..=12 {
        let b = 0.5 * i as f64;
        let spec = spectrum_at(&params, MagneticField::along(Direction::Z, b))?;
        let row: Vec<String> = spec.energies().iter().map(|e| format!("{e:8.3}")).collect();
        println!("{b:4.1}  {}", row.join(" "));
    }
    Ok(())
}
