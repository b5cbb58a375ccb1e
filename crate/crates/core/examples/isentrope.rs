//! Magnetocaloric effect: temperature along adiabatic magnetization from
//! zero field, for a few starting temperatures.
//!
//! `cargo run --example isentrope`

use cu3_machines::spin_model::{preset, Direction};
use cu3_machines::thermodynamics::{trace_isentrope, DEFAULT_TEMPERATURE_BRACKET};

fn main() -> cu3_machines::Result<()> {
    let params = preset("cu3-as")?;
    let grid: Vec<f64> = (0..=30).map(|i| 0.2 * i as f64).collect();
    let starts = [0.25, 0.5, 1.0, 2.0];

    let curves = starts
        .iter()
        .map(|&t0| trace_isentrope(&params, t0, 0.0, &grid, Direction::Z, DEFAULT_TEMPERATURE_BRACKET))
        .collect::<Result<Vec<_>, _>>()?;

    print!("B/T ");
    for t0 in starts {
        print!("  T0={t0:<5}");
    }
    println!();
    for (i, b) in grid.iter().enumerate() {
        print!("{b:4.1}");
        for c in &curves {
            match c[i].temperature {
                Some(t) => print!("  {t:9.4}"),
                None => print!("  {:>9}", "-"),
            }
        }
        println!();
    }
    Ok(())
}
