use std::f64::consts::FRAC_PI_2;

use fmr_core::solver::{glue, Solver, StepEvent};
use fmr_core::{
    solve_orientation, FieldDirection, MaterialParams, SolverConfig, SolverError, Status,
};

fn perpendicular_kittel(p: &MaterialParams) -> f64 {
    let r = p.omega_exp / p.gamma();
    let half = p.four_pi_ms / 4.0;
    half + (half * half + r * r).sqrt()
}

#[test]
fn no_eliminated_box_contains_the_resonance() {
    let p = MaterialParams::default();
    let dir = FieldDirection::new(FRAC_PI_2, 0.0).unwrap();
    let mut solver = Solver::with_trace(&dir, &p, SolverConfig::default()).unwrap();
    let results = solver.run().unwrap();
    let h = perpendicular_kittel(&p);
    let trace = solver.trace().unwrap();
    assert!(!trace.is_empty());
    for e in trace {
        // the resonant state sits at θ = π/2, φ = 0 (equivalently 2π)
        for phi in [0.0, 2.0 * std::f64::consts::PI] {
            assert!(
                !e.bx.contains(phi, FRAC_PI_2, h),
                "{:?} eliminated by {:?}",
                e.bx,
                e.reason
            );
        }
    }
    assert_eq!(results.len(), 1);
    assert!(results[0].h_res.contains(h));
}

#[test]
fn work_list_measure_never_grows() {
    let p = MaterialParams::with_anisotropy(-1.11e5, 0.0);
    let dir = FieldDirection::from_degrees(40.0, 0.0).unwrap();
    let mut solver = Solver::new(&dir, &p, SolverConfig::default()).unwrap();
    let mut last = solver.measure();
    let mut steps = 0;
    loop {
        let ev = solver.step().unwrap();
        let m = solver.measure();
        assert!(
            m <= last * (1.0 + 1e-12),
            "measure grew from {last} to {m} at step {steps}"
        );
        last = m;
        steps += 1;
        if ev == StepEvent::Finished {
            break;
        }
    }
    assert_eq!(last, 0.0);
    assert!(steps > 100);
}

#[test]
fn solving_is_deterministic() {
    let p = MaterialParams::with_anisotropy(-1.19e5, 7.16e5);
    let dir = FieldDirection::from_degrees(90.0, 0.0).unwrap();
    let cfg = SolverConfig::default();
    let a = solve_orientation(&dir, &p, &cfg).unwrap();
    let b = solve_orientation(&dir, &p, &cfg).unwrap();
    assert_eq!(a, b);
    assert!(a.len() >= 2);
}

#[test]
fn tiny_field_range_has_no_resonance() {
    let cfg = SolverConfig {
        h_max: 1.0,
        ..SolverConfig::default()
    };
    let res = solve_orientation(
        &FieldDirection::new(0.0, 0.0).unwrap(),
        &MaterialParams::default(),
        &cfg,
    )
    .unwrap();
    assert!(res.is_empty());
}

#[test]
fn kittel_enclosures_are_tight() {
    let p = MaterialParams::default();
    let cfg = SolverConfig::default();
    let r = p.omega_exp / p.gamma();
    for (theta, expected) in [
        (0.0, r - p.four_pi_ms / 2.0),
        (FRAC_PI_2, perpendicular_kittel(&p)),
    ] {
        let res = solve_orientation(&FieldDirection::new(theta, 0.0).unwrap(), &p, &cfg).unwrap();
        assert_eq!(res.len(), 1, "{res:?}");
        assert!(res[0].h_res.contains(expected));
        assert!(res[0].h_res.width() <= 0.05);
        assert_eq!(res[0].status, Status::Resonance);
    }
}

#[test]
fn mirrored_orientations_agree() {
    // the energy is symmetric under θ_H → π − θ_H
    let p = MaterialParams::with_anisotropy(1.19e5, -2.38e5);
    let cfg = SolverConfig::default();
    for deg in [10.0, 36.0, 70.0] {
        let a =
            solve_orientation(&FieldDirection::from_degrees(deg, 0.0).unwrap(), &p, &cfg).unwrap();
        let b = solve_orientation(
            &FieldDirection::from_degrees(180.0 - deg, 0.0).unwrap(),
            &p,
            &cfg,
        )
        .unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!(
                !x.h_res.intersect(&y.h_res).is_empty(),
                "{} vs {}",
                x.h_res,
                y.h_res
            );
        }
    }
}

#[test]
fn overflow_is_reported() {
    let cfg = SolverConfig {
        max_list: 3,
        ..SolverConfig::default()
    };
    let err = solve_orientation(
        &FieldDirection::new(1.0, 0.0).unwrap(),
        &MaterialParams::default(),
        &cfg,
    )
    .unwrap_err();
    assert_eq!(err, SolverError::ListOverflow { cap: 3 });
}

#[test]
fn glue_of_nothing_is_nothing() {
    assert!(glue(&[], &SolverConfig::default()).is_empty());
}
