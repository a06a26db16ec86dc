use std::f64::consts::FRAC_PI_2;

use fmr_core::oracle::{equilibrium, scan_resonances, Oracle, ScanConfig};
use fmr_core::{solve_orientation, FieldDirection, MaterialParams, SolverConfig};

#[test]
fn oracle_roots_lie_in_solver_enclosures() {
    let p = MaterialParams::with_anisotropy(-1.11e5, 0.0);
    for deg in [0.0, 24.0, 50.0, 90.0, 132.0] {
        let dir = FieldDirection::from_degrees(deg, 0.0).unwrap();
        let roots = scan_resonances(&dir, &p, 10_000.0, 0.5).unwrap();
        let res = solve_orientation(&dir, &p, &SolverConfig::default()).unwrap();
        assert_eq!(roots.len(), res.len(), "θ_H = {deg}°");
        for r in &roots {
            assert!(
                res.iter()
                    .any(|e| e.h_res.lo() - 1e-3 <= r.h_res && r.h_res <= e.h_res.hi() + 1e-3),
                "θ_H = {deg}°: root {} not enclosed",
                r.h_res
            );
        }
    }
}

#[test]
fn equilibria_match_solver_angle_hulls() {
    let p = MaterialParams::default();
    let dir = FieldDirection::new(FRAC_PI_2, 0.0).unwrap();
    let res = solve_orientation(&dir, &p, &SolverConfig::default()).unwrap();
    let h = res[0].h_res.midpoint();
    let eqs = equilibrium(&dir, &p, h);
    assert_eq!(eqs.len(), 1);
    assert!((eqs[0].theta - res[0].theta_hull.midpoint()).abs() < 1e-4);
}

#[test]
fn residual_is_small_at_roots() {
    let p = MaterialParams::with_anisotropy(1.19e5, -2.38e5);
    let dir = FieldDirection::from_degrees(30.0, 0.0).unwrap();
    let roots = Oracle::new(&dir, &p)
        .scan_resonances(10_000.0, &ScanConfig::default())
        .unwrap();
    assert!(!roots.is_empty());
    for r in roots {
        assert!(r.omega_residual.abs() < 1e-5 * p.omega_exp, "{r:?}");
    }
}
