use std::f64::consts::PI;

use fmr_core::oracle::Oracle;
use fmr_core::{EnergyError, EnergyModel, FieldDirection, Interval, MaterialParams};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn pt(x: f64) -> Interval {
    Interval::point(x)
}

#[test]
fn partials_enclose_finite_differences() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let p = MaterialParams::with_anisotropy(rng.gen_range(-8e5..8e5), rng.gen_range(-8e5..8e5));
        let dir =
            FieldDirection::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI)).unwrap();
        let model = EnergyModel::new(&dir, &p).unwrap();
        let oracle = Oracle::new(&dir, &p);
        let (t, f, h) = (
            rng.gen_range(0.05..3.09),
            rng.gen_range(0.05..6.23),
            rng.gen_range(0.0..1e4),
        );
        let e = |t: f64, f: f64| oracle.energy(t, f, h);
        let d = model.derivatives(pt(t), pt(f), pt(h)).unwrap();
        let (s1, s2) = (1e-5, 1e-4);
        let cases = [
            (d.e_theta, (e(t + s1, f) - e(t - s1, f)) / (2.0 * s1)),
            (d.e_phi, (e(t, f + s1) - e(t, f - s1)) / (2.0 * s1)),
            (
                d.e_tt,
                (e(t + s2, f) - 2.0 * e(t, f) + e(t - s2, f)) / (s2 * s2),
            ),
            (
                d.e_pp,
                (e(t, f + s2) - 2.0 * e(t, f) + e(t, f - s2)) / (s2 * s2),
            ),
            (
                d.e_tp,
                (e(t + s2, f + s2) - e(t + s2, f - s2) - e(t - s2, f + s2) + e(t - s2, f - s2))
                    / (4.0 * s2 * s2),
            ),
        ];
        let m_s = p.m_s();
        let scale = m_s * h + 2.0 * (PI * m_s * m_s + p.k_u).abs() + 4.0 * p.k_4.abs();
        for (i, (enc, fd)) in cases.into_iter().enumerate() {
            let gap = (enc.lo() - fd).max(fd - enc.hi()).max(0.0);
            assert!(
                gap <= 1e-4 * fd.abs().max(scale),
                "partial {i}: {enc} vs {fd} at ({t}, {f}, {h})"
            );
        }
    }
}

#[test]
fn energy_matches_cartesian_form() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let p = MaterialParams::with_anisotropy(rng.gen_range(-8e5..8e5), rng.gen_range(-8e5..8e5));
        let dir =
            FieldDirection::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI)).unwrap();
        let (t, f, h) = (
            rng.gen_range(0.0..PI),
            rng.gen_range(0.0..2.0 * PI),
            rng.gen_range(0.0..1e4),
        );
        let enc = EnergyModel::new(&dir, &p)
            .unwrap()
            .energy(pt(t), pt(f), pt(h))
            .unwrap();
        let v = Oracle::new(&dir, &p).energy(t, f, h);
        assert!(enc.lo() - 1e-9 * v.abs().max(1.0) <= v && v <= enc.hi() + 1e-9 * v.abs().max(1.0));
    }
}

#[test]
fn phi_period_enclosures_overlap() {
    // φ = 0 and the float nearest 2π describe (almost) the same point
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..50 {
        let p = MaterialParams::with_anisotropy(rng.gen_range(-8e5..8e5), rng.gen_range(-8e5..8e5));
        let dir =
            FieldDirection::new(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI)).unwrap();
        let model = EnergyModel::new(&dir, &p).unwrap();
        let theta = Interval::new(0.3, 0.3 + rng.gen_range(0.0..0.5));
        let h = Interval::new(100.0, 100.0 + rng.gen_range(0.0..500.0));
        let a = model.energy(theta, pt(0.0), h).unwrap();
        let b = model.energy(theta, pt(2.0 * PI), h).unwrap();
        assert!(!a.intersect(&b).is_empty(), "{a} vs {b}");
        let (da, db) = (
            model.derivatives(theta, pt(0.0), h).unwrap(),
            model.derivatives(theta, pt(2.0 * PI), h).unwrap(),
        );
        for (x, y) in [
            (da.e_theta, db.e_theta),
            (da.e_phi, db.e_phi),
            (da.e_tt, db.e_tt),
            (da.e_pp, db.e_pp),
            (da.e_tp, db.e_tp),
        ] {
            assert!(!x.intersect(&y).is_empty(), "{x} vs {y}");
        }
    }
}

#[test]
fn zeeman_only_minimum_sits_on_the_field() {
    let p = MaterialParams::with_anisotropy(0.0, 0.0);
    let dir = FieldDirection::new(1.1, 4.0).unwrap();
    let model = EnergyModel::without_demag(&dir, &p).unwrap();
    let h = pt(800.0);
    let (nt, np) = (90, 180);
    let (dt, dp) = (PI / nt as f64, 2.0 * PI / np as f64);
    let mut best = (f64::INFINITY, 0, 0);
    for i in 0..nt {
        for j in 0..np {
            let theta = Interval::new(i as f64 * dt, ((i + 1) as f64 * dt).min(PI));
            let phi = Interval::new(j as f64 * dp, ((j + 1) as f64 * dp).min(2.0 * PI));
            let e = model.energy(theta, phi, h).unwrap();
            if e.lo() < best.0 {
                best = (e.lo(), i, j);
            }
        }
    }
    // overestimation may favour a neighbouring cell, but no further
    let (ci, cj) = ((best.1 as f64 + 0.5) * dt, (best.2 as f64 + 0.5) * dp);
    assert!((ci - 1.1).abs() <= 1.5 * dt, "θ cell centre {ci}");
    assert!((cj - 4.0).abs() <= 1.5 * dp, "φ cell centre {cj}");
}

#[test]
fn out_of_domain_boxes_are_rejected() {
    let model = EnergyModel::new(
        &FieldDirection::new(0.5, 0.0).unwrap(),
        &MaterialParams::default(),
    )
    .unwrap();
    let bad = [
        (Interval::new(-0.1, 0.2), pt(0.0), pt(10.0)),
        (pt(1.0), Interval::new(6.0, 7.0), pt(10.0)),
        (pt(1.0), pt(1.0), Interval::new(-1.0, 1.0)),
    ];
    for (t, f, h) in bad {
        assert!(matches!(model.energy(t, f, h), Err(EnergyError::Domain(_))));
    }
}
