use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

use invsq_core::entire::{cos_entire, cos_entire_deriv, sinc_entire};
use invsq_core::solutions::*;
use invsq_core::spectral::*;
use invsq_core::verify::{inverse_r_bound, ratio_bound};
use invsq_core::CutPlanePoint;
use num_complex::Complex64;
use proptest::prelude::*;

type C = Complex64;

fn sinc(x: f64) -> f64 {
    sinc_entire(C::new(x, 0.0)).unwrap().re
}

/// κ-form of R, used only as an oracle.
fn r_kappa(kappa: C, theta: f64, z: CutPlanePoint) -> C {
    let half_ln = z.ln() * 0.5;
    let tk = kappa * FRAC_PI_2;
    let i = C::new(0.0, 1.0);
    let lhs = (-kappa * half_ln + i * tk).exp() * (C::new(theta, 0.0) - tk).cos();
    let rhs = (kappa * half_ln - i * tk).exp() * (C::new(theta, 0.0) + tk).cos();
    (lhs - rhs) / kappa
}

fn root(alpha: f64) -> C {
    if alpha >= 0.0 {
        C::new(alpha.sqrt(), 0.0)
    } else {
        C::new(0.0, (-alpha).sqrt())
    }
}

fn zeta() -> impl Strategy<Value = C> {
    (0.0..100.0f64, -PI..PI).prop_map(|(m, a)| C::from_polar(m, a))
}

fn cut_point() -> impl Strategy<Value = CutPlanePoint> {
    (-8.0..8.0f64, -FRAC_PI_2 + 1e-3..1.5 * PI - 1e-3).prop_map(|(l, p)| CutPlanePoint::new(l.exp(), p).unwrap())
}

fn upper_point() -> impl Strategy<Value = CutPlanePoint> {
    (-8.0..8.0f64, 1e-3..PI - 1e-3).prop_map(|(l, p)| CutPlanePoint::new(l.exp(), p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn sinc_quadruple(z in zeta()) {
        let s4 = sinc_entire(z * 4.0).unwrap();
        let prod = sinc_entire(z).unwrap() * cos_entire(z).unwrap();
        prop_assert!((s4 - prod).norm() <= 1e-10 * (1.0 + s4.norm()));
    }

    #[test]
    fn sinc_cos_pythagoras(z in zeta()) {
        let s = sinc_entire(z).unwrap();
        let c = cos_entire(z).unwrap();
        let lhs = z * s * s + c * c;
        prop_assert!((lhs - 1.0).norm() <= 1e-10 * (1.0 + (z * s * s).norm()));
    }

    #[test]
    fn cos_derivative_matches_difference(z in zeta()) {
        let h = 1e-5 * (1.0 + z.norm());
        let fd = (cos_entire(z + h).unwrap() - cos_entire(z - h).unwrap()) / (2.0 * h);
        let d = cos_entire_deriv(z).unwrap();
        let scale = cos_entire(z).unwrap().norm() + d.norm();
        prop_assert!((fd - d).norm() <= 1e-6 * scale);
        prop_assert!((sinc_entire(z).unwrap() + d * 2.0).norm() <= 1e-12 * d.norm().max(1e-300));
    }

    #[test]
    fn cos_of_square(w in (-30.0..30.0f64, -3.0..3.0f64)) {
        let w = C::new(w.0, w.1);
        let got = cos_entire(w * w).unwrap();
        prop_assert!((got - w.cos()).norm() <= 1e-12 * w.cos().norm().max(1.0));
    }

    #[test]
    fn sinc_bounded_by_cosh(a in 0usize..4, t in 0.0..1.0f64) {
        let a = a as f64;
        let xi = -a * a + t * 200.0;
        prop_assert!(sinc(xi).abs() <= a.cosh() + 1e-12);
    }

    #[test]
    fn ab_even_in_kappa(alpha in prop_oneof![-3.0..-1e-2f64, 1e-2..0.95f64], z in zeta(), r in 0.05..3.0f64) {
        let k = root(alpha);
        let z = z / 9.0;
        for (p, m) in [(a_kappa(k, z, r).unwrap(), a_kappa(-k, z, r).unwrap()), (b_kappa(k, z, r).unwrap(), b_kappa(-k, z, r).unwrap())] {
            prop_assert!((p.value - m.value).norm() <= 1e-12 * p.value.norm().max(1e-300));
            prop_assert!((p.deriv - m.deriv).norm() <= 1e-12 * p.deriv.norm().max(1e-300));
        }
        let a = a_sol(alpha, z, r).unwrap();
        prop_assert!((a - a_kappa(k, z, r).unwrap().value).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn weyl_even_in_kappa(alpha in prop_oneof![-3.0..-1e-2f64, 1e-2..0.95f64], z in cut_point(), r in 0.05..3.0f64) {
        prop_assume!(z.modulus() * r * r < 1e3);
        // beyond Im w = 2 the κ-form cancels and the Weyl solution switches to an integral
        prop_assume!((z.sqrt() * r).im <= 2.0);
        let k = root(alpha);
        prop_assume!((k.re - k.re.round()).abs() > 1e-3 || k.re.round() == 0.0);
        let p = v_kappa(k, z, r).unwrap().value;
        let m = v_kappa(-k, z, r).unwrap().value;
        prop_assert!((p - m).norm() <= 1e-12 * p.norm().max(1e-300));
    }

    #[test]
    fn solutions_are_real_on_real_data(alpha in -3.0..0.99f64, theta in -PI..PI, e in -50.0..50.0f64, r in 1e-4..5.0f64) {
        let z = C::new(e, 0.0);
        let p = CouplingPoint::new(alpha, theta).unwrap();
        for v in [a_sol(alpha, z, r).unwrap(), b_sol(alpha, z, r).unwrap(), u_theta(p, z, r).unwrap()] {
            prop_assert!(v.im.abs() <= 1e-12 * v.norm().max(1e-300));
        }
    }

    #[test]
    fn r_matches_kappa_form(alpha in prop_oneof![-4.0..-1e-2f64, 1e-2..0.99f64], theta in -PI..PI, z in cut_point()) {
        let k = root(alpha);
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let got = r_func(p, z);
        let want = r_kappa(k, theta, z);
        let scale = want.norm() + r_kappa(k, theta + FRAC_PI_2, z).norm();
        prop_assert!((got - want).norm() <= 1e-10 * scale);
        prop_assert!((r_kappa(-k, theta, z) - want).norm() <= 1e-12 * scale);
    }

    #[test]
    fn r_at_zero_coupling(theta in -PI..PI, z in cut_point()) {
        let got = r_func(CouplingPoint::new(0.0, theta).unwrap(), z);
        let want = (C::new(0.0, PI) - z.ln()) * theta.cos() + PI * theta.sin();
        prop_assert!((got - want).norm() <= 1e-13 * (1.0 + z.ln().norm()));
    }

    #[test]
    fn r_antiperiodic(alpha in -4.0..0.99f64, theta in -PI..PI, z in cut_point()) {
        let a = r_func(CouplingPoint::new(alpha, theta).unwrap(), z);
        let b = r_func(CouplingPoint::new(alpha, theta + PI).unwrap(), z);
        prop_assert!((a + b).norm() <= 1e-13 * a.norm().max(1.0));
    }

    #[test]
    fn t_is_twice_r_squared(alpha in -4.0..0.99f64, theta in -PI..PI, z in cut_point()) {
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let t = big_t(p, z);
        let r2 = 2.0 * r_func(p, z).norm_sqr();
        let scale = r2 + 2.0 * r_func(CouplingPoint::new(alpha, theta + FRAC_PI_2).unwrap(), z).norm_sqr();
        prop_assert!((t - r2).abs() <= 1e-9 * scale);
    }

    #[test]
    fn mu_tau_identity(alpha in -4.0..0.99f64, phi in -FRAC_PI_2..1.5 * PI) {
        let (m, t) = (mu(alpha, phi), tau(alpha, phi));
        let pm = PI - phi;
        let rhs = 4.0 * PI * PI * pm * pm * sinc(PI * PI * alpha).powi(2) * sinc(pm * pm * alpha).powi(2);
        prop_assert!((m * m - t * t - rhs).abs() <= 1e-10 * (m * m + t * t));
    }

    #[test]
    fn imaginary_part_identity(alpha in -4.0..0.99f64, theta in -PI..PI, z in cut_point()) {
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let r = r_func(p, z);
        let rp = r_func(CouplingPoint::new(alpha, theta + FRAC_PI_2).unwrap(), z);
        let lhs = (rp * r.conj()).im;
        let ph = z.phase() - PI;
        let rhs = PI * ph * sinc(ph * ph * alpha) * sinc(PI * PI * alpha);
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (r.norm() * rp.norm()).max(rhs.abs()));
    }

    #[test]
    fn m_is_herglotz(alpha in -4.0..0.99f64, theta in -PI..PI, z in upper_point()) {
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let m = m_func(p, z).unwrap();
        prop_assert!(m.im > 0.0);
        let closed = im_m_closed(p, z).unwrap();
        prop_assert!((closed - m.im).abs() <= 1e-9 * m.norm());
    }

    #[test]
    fn inverse_r_is_bounded(a in prop_oneof![Just(0.5f64), Just(0.9f64)], t in 0.0..1.0f64, theta in -PI..PI,
                            l in -20.0..20.0f64, phi in 0.0..PI - 1e-6) {
        let alpha = -6.0 + t * (6.0 + a * a);
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let z = CutPlanePoint::new(l.exp(), phi).unwrap();
        prop_assert!(1.0 / r_func(p, z).norm() <= inverse_r_bound(a, l.exp(), phi));
    }

    #[test]
    fn r_ratio_is_bounded(t in 0.0..1.0f64, theta in -PI..PI, z in upper_point()) {
        let (a, b) = (0.9, 2.0);
        let alpha = -b * b + t * (a * a + b * b);
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let q = CouplingPoint::new(alpha, theta + FRAC_PI_2).unwrap();
        prop_assert!((r_func(q, z) / r_func(p, z)).norm() <= ratio_bound(a, b, z.to_complex()));
    }
}

#[test]
fn cos_and_sinc_decrease_below_pi_squared() {
    let n = 4000;
    let xs: Vec<f64> = (0..=n).map(|i| -100.0 + (100.0 + PI * PI) * i as f64 / n as f64).collect();
    let cs: Vec<f64> = xs.iter().map(|&x| cos_entire(C::new(x, 0.0)).unwrap().re).collect();
    let ss: Vec<f64> = xs.iter().map(|&x| sinc(x)).collect();
    assert!(cs.windows(2).all(|w| w[1] < w[0]));
    assert!(ss.windows(2).all(|w| w[1] < w[0]));
    assert!(ss[..n].iter().all(|&s| s > 0.0));
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

#[test]
fn wronskian_of_a_and_b_is_constant() {
    let zs = [C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(-1.0, 0.0), C::new(2.0, 3.0)];
    for alpha in [-2.0, -0.5, 0.0, 3e-5, 0.25, 0.8] {
        for z in zs {
            let want = wronskian_ab(alpha);
            for r in log_grid(1e-5, 10.0, 25) {
                let w = wronskian_jets(a_sol_jet(alpha, z, r).unwrap(), b_sol_jet(alpha, z, r).unwrap());
                assert!((w - want).norm() <= 1e-6 * want.abs(), "({alpha},{z},{r}) {w} vs {want}");
            }
            // from samples only, on a fine uniform grid
            let radii: Vec<f64> = (0..401).map(|i| 0.5 + i as f64 * 2.5e-3).collect();
            let a = RadialGridFunction::sample(radii.clone(), |r| a_sol(alpha, z, r)).unwrap();
            let b = RadialGridFunction::sample(radii, |r| b_sol(alpha, z, r)).unwrap();
            let w = wronskian_numeric(&a, &b).unwrap();
            for v in w.values() {
                assert!((v - want).norm() <= 1e-6 * want.abs(), "numeric ({alpha},{z}) {v} vs {want}");
            }
        }
    }
}

#[test]
fn wronskian_of_the_u_pair() {
    let radii: Vec<f64> = (0..401).map(|i| 0.5 + i as f64 * 2.5e-3).collect();
    for kappa in [C::new(0.3, 0.0), C::new(0.7, 0.0), C::new(0.0, 0.5)] {
        for z in [C::new(1.0, 0.0), C::new(-2.0, 1.0)] {
            let want = wronskian_u_pair(kappa);
            assert!((want + 2.0 / PI * (PI * kappa).sin()).norm() < 1e-15);
            let p = RadialGridFunction::sample(radii.clone(), |r| u_kappa(kappa, z, r)).unwrap();
            let m = RadialGridFunction::sample(radii.clone(), |r| u_kappa(-kappa, z, r)).unwrap();
            for v in wronskian_numeric(&p, &m).unwrap().values() {
                assert!((v - want).norm() <= 1e-8 * want.norm(), "{kappa} {z}: {v} vs {want}");
            }
        }
    }
}

#[test]
fn boundary_wronskian_vanishes() {
    for alpha in [-1.0, 0.0, 0.25] {
        for theta in [0.0, FRAC_PI_6, FRAC_PI_2] {
            let p = CouplingPoint::new(alpha, theta).unwrap();
            for (z, zp) in [(0.0, 1.0), (0.0, -1.0), (1.0, -1.0)] {
                let w: Vec<f64> = (2..=6)
                    .map(|k| {
                        let r = 10f64.powi(-k);
                        let f = u_theta_jet(p, C::new(z, 0.0), r).unwrap();
                        let g = u_theta_jet(p, C::new(zp, 0.0), r).unwrap();
                        wronskian_jets(f, g).norm()
                    })
                    .collect();
                assert!(w.windows(2).all(|x| x[1] < x[0]), "({alpha},{theta},{z},{zp}) {w:?}");
                // the slowest decay is W ~ r at α = 1/4
                assert!(w[4] <= 1.05e-4 * w[0], "({alpha},{theta},{z},{zp}) {w:?}");
                if alpha != 0.25 {
                    assert!(w[4] <= 1e-4 * w[0], "({alpha},{theta},{z},{zp}) {w:?}");
                }
            }
        }
    }
}

/// At α = 1/4 both sides of `W ~ c·r` are exact to leading order, so the ratio over
/// four decades is `1e−4·(1 + O(r))`; for ϑ ∈ {0, π/6} the correction is positive.
#[test]
#[ignore = "W(U(z), U(z')) decays exactly like r at alpha = 1/4; the ratio is 1.01e-4"]
fn boundary_wronskian_ratio_at_quarter() {
    let p = CouplingPoint::new(0.25, 0.0).unwrap();
    let w = |r: f64| {
        wronskian_jets(u_theta_jet(p, C::new(0.0, 0.0), r).unwrap(), u_theta_jet(p, C::new(1.0, 0.0), r).unwrap()).norm()
    };
    assert!(w(1e-6) <= 1e-4 * w(1e-2));
}

#[test]
fn eigenvalues_zero_r() {
    for (alpha, theta) in [(0.0, 0.0), (-1.0, FRAC_PI_6), (0.5, -0.3), (-0.2, 1.2), (-4.0, 3.0)] {
        let p = CouplingPoint::new(alpha, theta).unwrap();
        for s in eigenvalues(p, (-1e12, -1e-12)).unwrap() {
            let z = CutPlanePoint::negative(s.energy).unwrap();
            let q = CouplingPoint::new(alpha, theta + FRAC_PI_2).unwrap();
            assert!(r_func(p, z).norm() <= 1e-9 * r_func(q, z).norm().max(1.0), "{s:?}");
        }
    }
}

#[test]
fn region_grid_counts() {
    let window = (-(13f64).exp(), -(-13f64).exp());
    for i in 0..50 {
        let alpha = -4.0 + 5.0 * (i as f64 + 0.5) / 50.0;
        for j in 0..50 {
            let theta = -PI + 2.0 * PI * (j as f64 + 1.0) / 50.0;
            let p = CouplingPoint::new(alpha, theta).unwrap();
            let region = phase_region(p).unwrap();
            assert_eq!(region, phase_region_trig(p).unwrap());
            let n = eigenvalues(p, (-1e300, -1e-300)).map(|v| v.len());
            match region {
                PhaseRegion::Q0 => assert_eq!(n.unwrap(), 0),
                PhaseRegion::Q1 => assert_eq!(n.unwrap(), 1),
                PhaseRegion::QInfinity => {
                    let k = eigenvalues(p, window).unwrap().len();
                    let step = 2.0 * PI / (-alpha).sqrt();
                    let expect = 26.0 / step;
                    assert!((k as f64 - expect).abs() <= 1.0, "({alpha},{theta}) {k} vs {expect}");
                }
            }
        }
    }
}

#[test]
fn measure_weight_is_stable_under_floor_halving() {
    let w = |e: f64| 1.0 / (e * e + 1.0);
    for (alpha, theta) in [(-1.0, FRAC_PI_6), (-0.3, 0.0), (0.5, 0.0), (0.0, FRAC_PI_2)] {
        let p = CouplingPoint::new(alpha, theta).unwrap();
        let f = |floor: f64| {
            let m = build_measure(p, floor, &w).unwrap();
            (integrate_measure(&m, &w, 1e-13).unwrap(), m.truncation)
        };
        let ((a, note), (b, _)) = (f(1e-10), f(5e-11));
        let dropped = note.near_zero + note.near_infinity;
        assert!(a.is_finite() && (a - b).abs() <= dropped + 1e-12, "({alpha},{theta}) {a} {b} {note:?}");
    }
}
