//! Build a parameter set in code, save it as JSON, read it back and compare
//! its Otto cycle with the preset it was derived from.
//!
//! `cargo run --example custom_params`

use cu3_machines::cycles::{evaluate_cycle, CycleKind, CycleOptions, Protocol};
use cu3_machines::param_file::{parse_params, to_json};
use cu3_machines::spin_model::{preset, DmVector};

fn main() -> cu3_machines::Result<()> {
    let base = preset("cu3-as")?;
    let mut no_dm = base.clone();
    no_dm.name = "cu3-as-no-dm".into();
    no_dm.dm = [DmVector::default(); 3];

    let json = to_json(&no_dm);
    println!("{json}");
    let reloaded = parse_params(&json)?;
    assert_eq!(reloaded, no_dm);

    let protocol = Protocol::new(0.5, 1.0, 0.1, 3.0);
    for p in [&base, &reloaded] {
        let r = evaluate_cycle(CycleKind::Otto, p, &protocol, &CycleOptions::default())?;
        println!(
            "{:<14} otto at B1 = 3 T: {} (w_net = {:+.5} K)",
            p.name, r.mode, r.w_net
        );
    }
    Ok(())
}
