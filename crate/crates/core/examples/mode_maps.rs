//! Operating-mode maps for all three cycles in the B0-B1 plane, written as
//! CSV and PGM into a directory.
//!
//! `cargo run --release --example mode_maps -- out/ 200`

use std::path::PathBuf;

use cu3_machines::cycles::CycleKind;
use cu3_machines::spin_model::{preset, Direction};
use cu3_machines::sweep::{export_csv, export_pgm, sweep_b0_b1, AxisVariable, GridAxis, PgmLayer, SweepOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "maps".into()));
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(60);
    std::fs::create_dir_all(&dir)?;

    let params = preset("cu3-as")?;
    let b0 = GridAxis::new(AxisVariable::B0, 0.0, 6.0, n)?;
    let b1 = GridAxis::new(AxisVariable::B1, 0.0, 6.0, n)?;
    for kind in CycleKind::ALL {
        let r = sweep_b0_b1(&params, 0.5, 1.0, b0, b1, kind, Direction::Z, &SweepOptions::default())?;
        std::fs::write(dir.join(format!("{kind}.csv")), export_csv(&r))?;
        std::fs::write(dir.join(format!("{kind}_mode.pgm")), export_pgm(&r, PgmLayer::Mode))?;
        std::fs::write(
            dir.join(format!("{kind}_eff.pgm")),
            export_pgm(&r, PgmLayer::Efficiency),
        )?;
        println!("{kind:<9} {}", r.diagnostics);
    }
    println!("wrote {}", dir.display());
    Ok(())
}
