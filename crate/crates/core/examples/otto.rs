//! Otto cycle along the B1 axis at B0 = 0.1 T: the refrigerator band and the
//! modes on either side of it.
//!
//! `cargo run --example otto`

use cu3_machines::cycles::{otto_cycle, CycleOptions, Protocol};
use cu3_machines::spin_model::preset;

fn main() -> cu3_machines::Result<()> {
    let params = preset("cu3-as")?;
    let opts = CycleOptions::default();
    println!("B1/T   w_net/K      q_in/K       q_out/K      mode");
    for i in 0..=24 {
        let b1 = 0.25 * i as f64;
        let r = otto_cycle(&params, &Protocol::new(0.5, 1.0, 0.1, b1), &opts)?;
        println!(
            "{b1:5.2}  {:+.4e}  {:+.4e}  {:+.4e}  {}",
            r.w_net, r.q_in, r.q_out, r.mode
        );
    }
    Ok(())
}
