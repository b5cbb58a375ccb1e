use cu3_machines::cycles::{
    classify_mode, evaluate_cycle, CycleKind, CycleOptions, OperationMode, Performance, Protocol,
};
use cu3_machines::spin_model::{preset, Direction};
use cu3_machines::sweep::*;

fn ax(v: AxisVariable, min: f64, max: f64, n: usize) -> GridAxis {
    GridAxis::new(v, min, max, n).unwrap()
}

fn serial() -> SweepOptions {
    SweepOptions {
        parallel: false,
        ..SweepOptions::default()
    }
}

#[test]
fn cells_match_isolated_evaluation() {
    let p = preset("cu3-as").unwrap();
    let dir = Direction::new([0.2, 0.0, 1.0]).unwrap();
    for kind in CycleKind::ALL {
        let r = sweep_b0_b1(
            &p,
            0.5,
            1.0,
            ax(AxisVariable::B0, 0.0, 6.0, 7),
            ax(AxisVariable::B1, 0.0, 6.0, 5),
            kind,
            dir,
            &SweepOptions::default(),
        )
        .unwrap();
        for cell in &r.cells {
            let protocol = Protocol::new(0.5, 1.0, cell.x, cell.y).with_direction(dir);
            let alone = evaluate_cycle(kind, &p, &protocol, &CycleOptions::default()).unwrap();
            assert_eq!(
                cell.outcome,
                Ok(CellValues::from(&alone)),
                "{kind} at ({}, {})",
                cell.x,
                cell.y
            );
        }

        let r = sweep_b1_th(
            &p,
            0.1,
            0.3,
            ax(AxisVariable::B1, 0.0, 6.0, 5),
            ax(AxisVariable::Th, 0.2, 3.0, 4),
            kind,
            dir,
            &SweepOptions::default(),
        )
        .unwrap();
        for cell in &r.cells {
            let protocol = Protocol::new(0.1, cell.y, 0.3, cell.x).with_direction(dir);
            let alone = evaluate_cycle(kind, &p, &protocol, &CycleOptions::default()).unwrap();
            assert_eq!(cell.outcome, Ok(CellValues::from(&alone)));
        }
    }
}

#[test]
fn serial_and_parallel_are_byte_identical() {
    let p = preset("cu3-sb").unwrap();
    for kind in CycleKind::ALL {
        let run = |opts: &SweepOptions| {
            sweep_b0_b1(
                &p,
                0.7,
                1.5,
                ax(AxisVariable::B0, 0.0, 6.0, 23),
                ax(AxisVariable::B1, 0.0, 6.0, 19),
                kind,
                Direction::Z,
                opts,
            )
            .unwrap()
        };
        let (a, b) = (run(&serial()), run(&SweepOptions::default()));
        assert_eq!(export_csv(&a), export_csv(&b));
        assert_eq!(export_pgm(&a, PgmLayer::Mode), export_pgm(&b, PgmLayer::Mode));
        assert_eq!(
            export_pgm(&a, PgmLayer::Efficiency),
            export_pgm(&b, PgmLayer::Efficiency)
        );
    }
}

#[test]
fn csv_round_trip_reclassifies() {
    let p = preset("cu3-as").unwrap();
    let r = sweep_b0_b1(
        &p,
        0.5,
        1.0,
        ax(AxisVariable::B0, 0.0, 6.0, 30),
        ax(AxisVariable::B1, 0.0, 6.0, 30),
        CycleKind::Otto,
        Direction::Z,
        &SweepOptions::default(),
    )
    .unwrap();
    let csv = String::from_utf8(export_csv(&r)).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let mut n = 0;
    for (line, cell) in lines.zip(&r.cells) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 8);
        let num = |i: usize| f[i].parse::<f64>().unwrap();
        assert_eq!(num(0), cell.x);
        assert_eq!(num(1), cell.y);
        let mode: OperationMode = f[2].parse().unwrap();
        assert_eq!(classify_mode(num(3), num(4), num(5), 1e-12), mode);
        assert_eq!(mode, cell.outcome.as_ref().unwrap().mode);
        n += 1;
    }
    assert_eq!(n, 900);
}

#[test]
fn carnot_efficiencies_are_universal() {
    let p = preset("cu3-as").unwrap();
    let r = sweep_b0_b1(
        &p,
        0.5,
        1.0,
        ax(AxisVariable::B0, 0.0, 6.0, 25),
        ax(AxisVariable::B1, 0.0, 6.0, 25),
        CycleKind::Carnot,
        Direction::Z,
        &SweepOptions::default(),
    )
    .unwrap();
    let d = r.diagnostics;
    assert!(d.engine > 0 && d.refrigerator > 0);
    assert_eq!((d.heater, d.accelerator, d.error), (0, 0, 0));
    for cell in &r.cells {
        match cell.outcome.as_ref().unwrap().performance {
            Some(Performance::Efficiency(eta)) => assert!((eta - 0.5).abs() <= 1e-12),
            Some(Performance::Cop { cop, .. }) => assert!((cop - 2.0).abs() <= 1e-10),
            None => {}
        }
    }
    let pgm = export_pgm(&r, PgmLayer::Mode);
    let mut levels: Vec<u8> = pgm[pgm.len() - 625..].iter().copied().filter(|&v| v != 0).collect();
    levels.sort();
    levels.dedup();
    assert_eq!(levels, vec![60, 120]);
}

#[test]
fn carnot_b1_th_has_one_boundary() {
    let p = preset("cu3-as").unwrap();
    let r = sweep_b1_th(
        &p,
        0.1,
        0.0,
        ax(AxisVariable::B1, 0.1, 6.0, 30),
        ax(AxisVariable::Th, 0.15, 3.0, 30),
        CycleKind::Carnot,
        Direction::Z,
        &SweepOptions::default(),
    )
    .unwrap();
    assert_eq!(r.diagnostics.error, 0);
    // walking up in T_h each column changes mode at most once, engine below
    for i in 0..30 {
        let modes: Vec<OperationMode> = (0..30)
            .map(|j| r.cell(i, j).outcome.as_ref().unwrap().mode)
            .filter(|m| *m != OperationMode::None)
            .collect();
        let switches = modes.windows(2).filter(|w| w[0] != w[1]).count();
        assert!(switches <= 1, "column {i}: {modes:?}");
        if switches == 1 {
            assert_eq!(modes[0], OperationMode::Engine);
        }
    }
}

#[test]
fn otto_b1_th_shows_all_four_modes() {
    let p = preset("cu3-as").unwrap();
    let r = sweep_b1_th(
        &p,
        0.1,
        0.0,
        ax(AxisVariable::B1, 0.0, 6.0, 60),
        ax(AxisVariable::Th, 0.11, 3.0, 60),
        CycleKind::Otto,
        Direction::Z,
        &SweepOptions::default(),
    )
    .unwrap();
    let d = r.diagnostics;
    assert!(
        d.engine > 0 && d.refrigerator > 0 && d.heater > 0 && d.accelerator > 0,
        "{d}"
    );
}

#[test]
fn narrow_axis_is_valid() {
    let p = preset("cu3-as").unwrap();
    let r = sweep_b0_b1(
        &p,
        0.5,
        1.0,
        ax(AxisVariable::B0, 1.0, 1.0 + 1e-12, 2),
        ax(AxisVariable::B1, 0.0, 6.0, 9),
        CycleKind::Stirling,
        Direction::Z,
        &SweepOptions::default(),
    )
    .unwrap();
    assert_eq!(r.cells.len(), 18);
    assert_eq!(r.diagnostics.total(), 18);
}
