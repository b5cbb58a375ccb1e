//! One Carnot cycle with its stroke breakdown, then a scan of the work
//! output against the upper field.
//!
//! `cargo run --example carnot`

use cu3_machines::cycles::{carnot_cycle, CycleOptions, Protocol};
use cu3_machines::spin_model::preset;

fn main() -> cu3_machines::Result<()> {
    let params = preset("cu3-as")?;
    let opts = CycleOptions::default();

    let r = carnot_cycle(&params, &Protocol::new(0.5, 1.0, 0.0, 2.0), &opts)?;
    if let Some(strokes) = &r.strokes {
        for s in strokes {
            println!(
                "{}  Q = {:+.6}  W = {:+.6}  dU = {:+.6}",
                s.label.as_str(),
                s.heat,
                s.work,
                s.delta_u
            );
        }
    }
    println!("mode {}  eta = {:?}", r.mode, r.efficiency());

    println!("\nB1/T   w_net/K     mode");
    for i in 1..=12 {
        let b1 = 0.5 * i as f64;
        let r = carnot_cycle(&params, &Protocol::new(0.5, 1.0, 0.0, b1), &opts)?;
        println!("{b1:4.1}  {:+.6}  {}", r.w_net, r.mode);
    }
    Ok(())
}
