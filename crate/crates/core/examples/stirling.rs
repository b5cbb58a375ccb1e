//! Stirling cycle: swapping the two fields near the level crossing turns an
//! engine into an accelerator.
//!
//! `cargo run --example stirling`

use cu3_machines::cycles::{stirling_cycle, CycleOptions, Protocol};
use cu3_machines::spin_model::preset;

fn main() -> cu3_machines::Result<()> {
    let params = preset("cu3-as")?;
    for (b0, b1) in [(4.5, 3.0), (3.0, 4.5), (0.0, 2.0), (2.0, 0.0)] {
        let r = stirling_cycle(&params, &Protocol::new(0.5, 1.0, b0, b1), &CycleOptions::default())?;
        println!(
            "B0 = {b0:3.1} T, B1 = {b1:3.1} T: {:<12} w_net = {:+.5}  performance = {:?}",
            r.mode.as_str(),
            r.w_net,
            r.performance
        );
    }
    Ok(())
}
