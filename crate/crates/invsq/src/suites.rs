//! Named verification suites with fixed cases, seeds and tolerances.
//!
//! Each suite returns one [`Criterion`] made of [`ProbeReport`]s; the criterion
//! passes when every report does.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

use invsq_core::entire::{cos_entire, cos_entire_deriv, sinc_entire};
use invsq_core::quad::gauss_legendre_panels;
use invsq_core::solutions::{
    a_sol_jet, b_sol_jet, u_kappa, u_theta_jet, wronskian_ab, wronskian_jets, wronskian_numeric, wronskian_u_pair,
    CouplingPoint, RadialGridFunction,
};
use invsq_core::spectral::{
    big_t, build_measure, eigenvalues, mu, phase_region, phase_region_trig, point_mass, r_func, tau, PhaseRegion,
    SpectralMeasure,
};
use invsq_core::transform::{
    bump, eigenfunction_norm_check, forward, parseval_check, roundtrip_check, EnergyGrid,
};
use invsq_core::verify::{
    herglotz_limit_check, inverse_r_bound, ode_residual_suite, ratio_bound, residue_check, smoothness_probe,
    weyl_wronskian_check, weyl_wronskian_jets, OdeCase, ProbeReport, ProbeSample, SolutionFamily,
};
use invsq_core::{CutPlanePoint, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Complex64;
type Weight<'a> = &'a dyn Fn(f64) -> f64;

/// Base seed of every sampled suite.
pub const SEED: u64 = 20_240_917;
pub const IDENTITY_SAMPLES: usize = 1000;
pub const BOUND_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Wronskians,
    Ode,
    Eigenvalues,
    Residues,
    Herglotz,
    Transform,
    Bounds,
    Smoothness,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Identities,
        Suite::Wronskians,
        Suite::Ode,
        Suite::Eigenvalues,
        Suite::Residues,
        Suite::Herglotz,
        Suite::Transform,
        Suite::Bounds,
        Suite::Smoothness,
    ];

    pub fn number(&self) -> u8 {
        Suite::ALL.iter().position(|s| s == self).unwrap() as u8 + 1
    }

    pub fn id(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Wronskians => "wronskians",
            Suite::Ode => "ode",
            Suite::Eigenvalues => "eigenvalues",
            Suite::Residues => "residues",
            Suite::Herglotz => "herglotz",
            Suite::Transform => "transform",
            Suite::Bounds => "bounds",
            Suite::Smoothness => "smoothness",
        }
    }

    pub fn run(&self) -> Result<Criterion> {
        let reports = match self {
            Suite::Identities => identities(),
            Suite::Wronskians => wronskians(),
            Suite::Ode => ode(),
            Suite::Eigenvalues => eigen(),
            Suite::Residues => residues(),
            Suite::Herglotz => herglotz(),
            Suite::Transform => transform(),
            Suite::Bounds => bounds(),
            Suite::Smoothness => smoothness(),
        }?;
        Ok(Criterion { suite: *self, reports })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Criterion {
    pub suite: Suite,
    pub reports: Vec<ProbeReport>,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        !self.reports.is_empty() && self.reports.iter().all(|r| r.pass)
    }

    /// The report with the largest error-to-tolerance ratio.
    pub fn worst(&self) -> Option<&ProbeReport> {
        let ratio = |r: &ProbeReport| {
            let q = r.max_rel_err / r.tolerance;
            if q.is_nan() { f64::INFINITY } else { q }
        };
        self.reports.iter().max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
    }
}

fn pt(alpha: f64, theta: f64) -> Result<CouplingPoint> {
    CouplingPoint::new(alpha, theta)
}

fn probe(label: String, computed: f64, expected: f64, scale: f64) -> ProbeSample {
    ProbeSample { label, computed, expected, rel_err: (computed - expected).abs() / scale }
}

/// A sample whose `rel_err` is 0 when `ok` and 1 otherwise.
fn flag(label: String, computed: f64, expected: f64, ok: bool) -> ProbeSample {
    ProbeSample { label, computed, expected, rel_err: if ok { 0.0 } else { 1.0 } }
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

fn sinc(x: f64) -> f64 {
    sinc_entire(C::new(x, 0.0)).map_or(f64::NAN, |v| v.re)
}

fn random_zeta(r: &mut ChaCha8Rng) -> C {
    C::from_polar(r.gen_range(0.0..100.0), r.gen_range(-PI..PI))
}

fn random_cut_point(r: &mut ChaCha8Rng) -> Result<CutPlanePoint> {
    CutPlanePoint::new(r.gen_range(-8.0f64..8.0).exp(), r.gen_range(-FRAC_PI_2 + 1e-3..1.5 * PI - 1e-3))
}

/// `Cos'(ζ)` from a Cauchy integral on a circle of radius `rho`, and the largest
/// `|Cos|/rho` seen on it.
fn cauchy_derivative(z: C, rho: f64) -> Result<(C, f64)> {
    let n = 64;
    let mut sum = C::new(0.0, 0.0);
    let mut big = 0.0f64;
    for k in 0..n {
        let e = C::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
        let f = cos_entire(z + e * rho)?;
        big = big.max(f.norm() / rho);
        sum += f / e;
    }
    Ok((sum / (n as f64 * rho), big))
}

fn identities() -> Result<Vec<ProbeReport>> {
    let tol = 1e-9;
    let n = IDENTITY_SAMPLES;
    let mut out = Vec::new();

    let mut r = rng(1);
    let mut s4 = Vec::with_capacity(n);
    let mut pyth = Vec::with_capacity(n);
    let mut deriv = Vec::with_capacity(n);
    for _ in 0..n {
        let z = random_zeta(&mut r);
        let (s, c) = (sinc_entire(z)?, cos_entire(z)?);
        let lhs = sinc_entire(z * 4.0)?;
        let diff = (lhs - s * c).norm();
        s4.push(ProbeSample { label: format!("{z}"), computed: lhs.norm(), expected: (s * c).norm(), rel_err: diff / lhs.norm().max((s * c).norm()) });
        let p = z * s * s + c * c;
        let scale = 1.0 + (z * s * s).norm() + (c * c).norm();
        pyth.push(ProbeSample { label: format!("{z}"), computed: p.re, expected: 1.0, rel_err: (p - 1.0).norm() / scale });
        let d = cos_entire_deriv(z)?;
        let (cd, big) = cauchy_derivative(z, 0.5)?;
        let want = -s / 2.0;
        let rel = (d - want).norm() / want.norm() + (cd - want).norm() / big.max(want.norm());
        deriv.push(ProbeSample { label: format!("{z}"), computed: d.norm(), expected: want.norm(), rel_err: rel });
    }
    out.push(ProbeReport::from_samples("sinc(4z) = sinc(z) cos(z)", tol, s4));
    out.push(ProbeReport::from_samples("z sinc^2 + cos^2 = 1", tol, pyth));
    out.push(ProbeReport::from_samples("cos' = -sinc/2", tol, deriv));

    let mut r = rng(2);
    let (mut im, mut per, mut tt, mut mt) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for _ in 0..n {
        let alpha = r.gen_range(-4.0..0.99);
        let theta = r.gen_range(-PI..PI);
        let z = random_cut_point(&mut r)?;
        let label = format!("alpha={alpha} theta={theta} |z|={} arg={}", z.modulus(), z.phase());
        let p = pt(alpha, theta)?;
        let q = pt(alpha, theta + FRAC_PI_2)?;
        let (rv, rp) = (r_func(p, z), r_func(q, z));

        let lhs = (rp * rv.conj()).im;
        let ph = z.phase() - PI;
        let rhs = PI * ph * sinc(ph * ph * alpha) * sinc(PI * PI * alpha);
        im.push(probe(label.clone(), lhs, rhs, (rv.norm() * rp.norm()).max(rhs.abs())));

        let shifted = r_func(pt(alpha, theta + PI)?, z);
        let rel = (shifted + rv).norm() / rv.norm().max(1.0);
        per.push(ProbeSample { label: label.clone(), computed: shifted.norm(), expected: rv.norm(), rel_err: rel });

        let t = big_t(p, z);
        let r2 = 2.0 * rv.norm_sqr();
        tt.push(probe(label, t, r2, r2 + 2.0 * rp.norm_sqr()));

        let phi = r.gen_range(-FRAC_PI_2..1.5 * PI);
        let (m, t) = (mu(alpha, phi), tau(alpha, phi));
        let pm = PI - phi;
        let rhs = 4.0 * PI * PI * pm * pm * sinc(PI * PI * alpha).powi(2) * sinc(pm * pm * alpha).powi(2);
        mt.push(probe(format!("alpha={alpha} phi={phi}"), m * m - t * t, rhs, m * m + t * t));
    }
    out.push(ProbeReport::from_samples("Im(R' conj R)", tol, im));
    out.push(ProbeReport::from_samples("mu^2 - tau^2", tol, mt));
    out.push(ProbeReport::from_samples("R(theta + pi) = -R(theta)", tol, per));
    out.push(ProbeReport::from_samples("T = 2|R|^2", tol, tt));
    Ok(out)
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64)).collect()
}

fn wronskians() -> Result<Vec<ProbeReport>> {
    let mut ab = Vec::new();
    let mut uu = Vec::new();
    let combos = [
        (0.0, C::new(0.0, 0.0)),
        (FRAC_PI_6, C::new(1.0, 0.0)),
        (FRAC_PI_2, C::new(-1.0, 0.0)),
        (-1.2, C::new(2.0, 3.0)),
    ];
    for alpha in [-2.0, -0.5, 0.0, 0.25, 0.8] {
        let want = wronskian_ab(alpha);
        for (theta, z) in combos {
            let p = pt(alpha, theta)?;
            let q = pt(alpha, theta + FRAC_PI_2)?;
            let (mut e_ab, mut e_uu) = (0.0f64, 0.0f64);
            for r in log_grid(1e-5, 10.0, 25) {
                let w = wronskian_jets(a_sol_jet(alpha, z, r)?, b_sol_jet(alpha, z, r)?);
                e_ab = e_ab.max((w - want).norm() / want.abs());
                let w = wronskian_jets(u_theta_jet(p, z, r)?, u_theta_jet(q, z, r)?);
                e_uu = e_uu.max((w - want).norm() / want.abs());
            }
            let label = format!("alpha={alpha} theta={theta} z={z}");
            ab.push(ProbeSample { label: label.clone(), computed: want, expected: want, rel_err: e_ab });
            uu.push(ProbeSample { label, computed: want, expected: want, rel_err: e_uu });
        }
    }
    let mut out = vec![
        ProbeReport::from_samples("W(A,B) on a log r-grid", 1e-6, ab),
        ProbeReport::from_samples("W(U,U+pi/2) on a log r-grid", 1e-6, uu),
    ];

    let weyl = [
        (0.25, CutPlanePoint::new(1.0, FRAC_PI_2)?, vec![0.0]),
        (-0.5, CutPlanePoint::new(2.0, FRAC_PI_4)?, vec![FRAC_PI_3, -1.2]),
        (0.0, CutPlanePoint::new(1.0, 1.0)?, vec![0.0, FRAC_PI_2]),
        (-1.0, CutPlanePoint::new(0.5, PI)?, vec![FRAC_PI_6]),
        (0.8, CutPlanePoint::new(3.0, -0.3)?, vec![1.0]),
        (0.5, CutPlanePoint::new(10.0, 2.0)?, vec![-0.7, 0.2]),
        (-3.0, CutPlanePoint::new(0.1, 4.0)?, vec![2.5]),
    ];
    let mut vu = Vec::new();
    let mut jets = Vec::new();
    for (alpha, z, thetas) in weyl {
        let rep = weyl_wronskian_check(alpha, z, &thetas, 1e-8)?;
        vu.extend(rep.details);
        for t in thetas {
            let e = weyl_wronskian_jets(pt(alpha, t)?, z, &[1e-4, 0.01, 1.0, 30.0])?;
            jets.push(ProbeSample { label: format!("alpha={alpha} theta={t}"), computed: e, expected: 0.0, rel_err: e });
        }
    }
    out.push(ProbeReport::from_samples("W(V,U) = R and W(U,U+pi/2), sampled", 1e-8, vu));
    out.push(ProbeReport::from_samples("W(V,U) = R, exact derivatives", 1e-8, jets));

    let radii: Vec<f64> = (0..401).map(|i| 0.5 + i as f64 * 2.5e-3).collect();
    let mut up = Vec::new();
    for kappa in [C::new(0.3, 0.0), C::new(0.7, 0.0), C::new(0.0, 0.5)] {
        for z in [C::new(1.0, 0.0), C::new(-2.0, 1.0)] {
            let want = wronskian_u_pair(kappa);
            let p = RadialGridFunction::sample(radii.clone(), |r| u_kappa(kappa, z, r))?;
            let m = RadialGridFunction::sample(radii.clone(), |r| u_kappa(-kappa, z, r))?;
            let closed = (want + 2.0 / PI * (PI * kappa).sin()).norm() / want.norm();
            let err = wronskian_numeric(&p, &m)?.values().iter().fold(closed, |e, v| e.max((v - want).norm() / want.norm()));
            up.push(ProbeSample { label: format!("kappa={kappa} z={z}"), computed: want.norm(), expected: want.norm(), rel_err: err });
        }
    }
    out.push(ProbeReport::from_samples("W(u^k,u^-k) = -(2/pi) sin(pi k)", 1e-8, up));
    Ok(out)
}

fn ode() -> Result<Vec<ProbeReport>> {
    let mut cases = Vec::new();
    for alpha in [-1.0, 0.0, 0.25, 0.8] {
        for z in [C::new(0.0, 0.0), C::new(1.0, 0.0), C::new(-1.0, 0.0), C::new(0.0, 1.0)] {
            cases.push(OdeCase { alpha, z, family: SolutionFamily::A });
            cases.push(OdeCase { alpha, z, family: SolutionFamily::B });
            cases.push(OdeCase { alpha, z, family: SolutionFamily::U { theta: FRAC_PI_6 } });
            // the Weyl solution is not defined at z = 0
            if z.norm() > 0.0 {
                cases.push(OdeCase { alpha, z, family: SolutionFamily::V });
            }
        }
    }
    Ok(vec![ode_residual_suite(&cases, 1.8)?])
}

fn eigen() -> Result<Vec<ProbeReport>> {
    let mut out = Vec::new();

    let p = pt(0.0, 0.0)?;
    let ev = eigenvalues(p, (-1e300, -1e-300))?;
    let mut ground = vec![flag("count".into(), ev.len() as f64, 1.0, ev.len() == 1)];
    if let Some(s) = ev.first() {
        ground.push(probe("energy".into(), s.energy, -1.0, 1.0));
        let m = point_mass(p, s.energy)?;
        ground.push(probe("mass".into(), m, 0.5, 0.5));
    }
    out.push(ProbeReport::from_samples("(0,0): one eigenvalue -1 with mass 1/2", 1e-12, ground));

    let p = pt(-1.0, FRAC_PI_2)?;
    let q = pt(-1.0, PI)?;
    let window = (-(13f64).exp(), -(-13f64).exp());
    let ev = eigenvalues(p, window)?;
    let expected: Vec<f64> = (-3..3)
        .map(|k| -((2 * k + 1) as f64 * PI).exp())
        .filter(|e| *e > window.0 && *e < window.1)
        .collect();
    let mut ladder = vec![flag("count".into(), ev.len() as f64, expected.len() as f64, ev.len() == expected.len())];
    let mut residual = Vec::new();
    for (s, &want) in ev.iter().zip(&expected) {
        ladder.push(probe(format!("branch {}", s.branch), s.energy, want, want.abs()));
        let z = CutPlanePoint::negative(s.energy)?;
        let r = r_func(p, z).norm();
        let scale = r_func(q, z).norm().max(1.0);
        residual.push(ProbeSample { label: format!("E={}", s.energy), computed: r, expected: 0.0, rel_err: r / scale });
    }
    out.push(ProbeReport::from_samples("(-1,pi/2): E = -exp((2k+1)pi)", 1e-12, ladder));
    out.push(ProbeReport::from_samples("(-1,pi/2): |R(E)| post-check", 1e-9, residual));

    let mut cells = Vec::new();
    for i in 0..50 {
        let alpha = -4.0 + 5.0 * (i as f64 + 0.5) / 50.0;
        for j in 0..50 {
            let theta = -PI + 2.0 * PI * (j as f64 + 1.0) / 50.0;
            let p = pt(alpha, theta)?;
            let region = phase_region(p)?;
            let agree = region == phase_region_trig(p)?;
            let label = format!("alpha={alpha} theta={theta} {}", region.label());
            let (n, ok) = match region {
                PhaseRegion::Q0 => {
                    let n = eigenvalues(p, (-1e300, -1e-300))?.len();
                    (n as f64, n == 0)
                }
                PhaseRegion::Q1 => {
                    let n = eigenvalues(p, (-1e300, -1e-300))?.len();
                    (n as f64, n == 1)
                }
                PhaseRegion::QInfinity => {
                    // about 26/step eigenvalues in the window and unboundedly many outside
                    let n = eigenvalues(p, window)?.len();
                    let step = 2.0 * PI / (-alpha).sqrt();
                    let wider = eigenvalues(p, (-(40f64).exp(), -(-40f64).exp()))?.len();
                    (n as f64, (n as f64 - 26.0 / step).abs() <= 1.0 && wider > n)
                }
            };
            cells.push(flag(label, n, n, ok && agree));
        }
    }
    out.push(ProbeReport::from_samples("region counts on the 50x50 grid", 0.0, cells));
    Ok(out)
}

fn residues() -> Result<Vec<ProbeReport>> {
    let mut samples = Vec::new();
    for (a, t) in [(0.0, 0.0), (0.5, 0.0), (-1.0, FRAC_PI_6), (-0.5, FRAC_PI_2), (-2.0, -FRAC_PI_3)] {
        let p = pt(a, t)?;
        for s in eigenvalues(p, (-1e6, -1e-6))?.iter().take(2) {
            let rep = residue_check(p, s.energy, &[1e-3, 1e-4, 5e-5], 1e-6)?;
            let mut last = rep.details.last().cloned().expect("residue samples");
            last.label = format!("alpha={a} theta={t} E={}", s.energy);
            last.rel_err = rep.max_rel_err;
            samples.push(last);
        }
    }
    let count = samples.len();
    Ok(vec![
        ProbeReport::from_samples("residue of M = -mass/pi", 1e-6, samples),
        ProbeReport::from_samples("at least 8 eigenvalues", 0.0, vec![flag("count".into(), count as f64, 8.0, count >= 8)]),
    ])
}

fn herglotz() -> Result<Vec<ProbeReport>> {
    let gauss = |e: f64| (-e * e).exp();
    let peaked = |e: f64| (-4.0 * (e + 1.0) * (e + 1.0)).exp();
    let wide = |e: f64| (-e * e / 4.0).exp();
    let cases: [(f64, f64, Weight); 6] = [
        (0.0, FRAC_PI_2, &gauss),
        (0.0, 0.0, &peaked),
        (-1.0, FRAC_PI_6, &gauss),
        (0.25, FRAC_PI_6, &gauss),
        (0.5, 0.0, &gauss),
        (0.9, FRAC_PI_2, &wide),
    ];
    let mut limit = Vec::new();
    let mut monotone = Vec::new();
    for (a, t, phi) in cases {
        let rep = herglotz_limit_check(pt(a, t)?, phi, (-8.0, 8.0), &[1e-2, 1e-3, 1e-4], 1e-3)?;
        let errs: Vec<f64> = rep.details.iter().map(|d| d.rel_err).collect();
        let label = format!("alpha={a} theta={t}");
        let last = rep.details.last().expect("eta samples");
        limit.push(ProbeSample { label: label.clone(), computed: last.computed, expected: last.expected, rel_err: rep.max_rel_err });
        // errors at rounding level need not keep decreasing
        let ok = errs.windows(2).all(|w| w[1] < w[0] || w[1] < 1e-12);
        monotone.push(flag(label, errs[errs.len() - 1], errs[0], ok));
    }
    Ok(vec![
        ProbeReport::from_samples("eta = 1e-4 against the measure", 1e-3, limit),
        ProbeReport::from_samples("monotone in eta", 0.0, monotone),
    ])
}

/// `J₀(x) = (1/π)∫₀^π cos(x sin t) dt` by the trapezoid rule.
fn j0(x: f64) -> f64 {
    let n = 400;
    let h = PI / n as f64;
    let s: f64 = (1..n).map(|k| (x * (k as f64 * h).sin()).cos()).sum();
    (s + 1.0) * h / PI
}

fn transform_measure(p: CouplingPoint) -> Result<SpectralMeasure> {
    build_measure(p, 1e-16, &|e: f64| (-2.0 * e.abs().sqrt()).exp())
}

fn transform() -> Result<Vec<ProbeReport>> {
    let f = bump(1.0, 2.0, 2.0);
    let psi = RadialGridFunction::gauss_legendre(1.0, 2.0, 8, 16, |r| Ok(C::new(f(r), 0.0)))?;
    let grid = EnergyGrid::default();
    let mut rt = Vec::new();
    let mut par = Vec::new();
    for (a, t) in [(0.0, FRAC_PI_2), (0.0, 0.0), (0.25, FRAC_PI_6), (-1.0, FRAC_PI_6)] {
        let p = pt(a, t)?;
        let m = transform_measure(p)?;
        let label = format!("alpha={a} theta={t}");
        let rep = parseval_check(p, &psi, &grid, &m)?;
        par.push(ProbeSample { label: label.clone(), computed: rep.rhs, expected: rep.lhs, rel_err: rep.rel_err });
        let e = roundtrip_check(p, &psi, &grid, &m)?;
        rt.push(ProbeSample { label, computed: e, expected: 0.0, rel_err: e });
    }
    let mut out = vec![
        ProbeReport::from_samples("round trip, relative L2", 1e-3, rt),
        ProbeReport::from_samples("Parseval", 1e-3, par),
    ];

    let mut norms = Vec::new();
    let mut cases = vec![(0.0, 0.0, -1.0), (-1.0, FRAC_PI_2, -PI.exp())];
    cases.push((0.5, 0.0, eigenvalues(pt(0.5, 0.0)?, (-1e6, -1e-6))?[0].energy));
    for s in eigenvalues(pt(-1.0, FRAC_PI_6)?, (-1e4, -1e-4))? {
        cases.push((-1.0, FRAC_PI_6, s.energy));
    }
    for (a, t, e) in cases {
        let n = eigenfunction_norm_check(pt(a, t)?, e)?;
        norms.push(ProbeSample { label: format!("alpha={a} theta={t} E={e}"), computed: n.numeric, expected: n.closed_form, rel_err: n.rel_err });
    }
    out.push(ProbeReport::from_samples("eigenfunction norm, closed form", 1e-4, norms));

    let p = pt(0.0, FRAC_PI_2)?;
    let m = transform_measure(p)?;
    let energies: Vec<f64> = (0..24).map(|k| 10f64.powf(-2.0 + 5.0 * k as f64 / 23.0)).collect();
    let egrid = EnergyGrid::new(energies.clone(), vec![1.0; energies.len()])?;
    let got = forward(p, &psi, &egrid, &m)?.continuous_part;
    let (r, w) = gauss_legendre_panels(1.0, 2.0, 16, 16);
    let oracle: Vec<f64> = energies
        .iter()
        .map(|&e| PI * r.iter().zip(&w).map(|(&r, &w)| w * r.sqrt() * j0(e.sqrt() * r) * f(r)).sum::<f64>())
        .collect();
    let scale = oracle.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let hankel = energies
        .iter()
        .zip(&got)
        .zip(&oracle)
        .map(|((&e, g), &o)| ProbeSample { label: format!("E={e}"), computed: g.re, expected: o, rel_err: (g - o).norm() / scale })
        .collect();
    out.push(ProbeReport::from_samples("alpha=0 against the Hankel transform", 1e-6, hankel));
    Ok(out)
}

fn bounds() -> Result<Vec<ProbeReport>> {
    let mut r = rng(3);
    let mut inv = Vec::with_capacity(BOUND_SAMPLES);
    for i in 0..BOUND_SAMPLES {
        let a = if i % 2 == 0 { 0.5 } else { 0.9 };
        let alpha = -6.0 + r.gen_range(0.0..1.0) * (6.0 + a * a);
        let theta = r.gen_range(-PI..PI);
        let l: f64 = r.gen_range(-20.0..20.0);
        let phi = r.gen_range(0.0..PI - 1e-6);
        let z = CutPlanePoint::new(l.exp(), phi)?;
        let lhs = 1.0 / r_func(pt(alpha, theta)?, z).norm();
        let bound = inverse_r_bound(a, l.exp(), phi);
        inv.push(ProbeSample { label: format!("a={a} alpha={alpha} theta={theta} lnE={l} phi={phi}"), computed: lhs, expected: bound, rel_err: lhs / bound });
    }
    let mut ratio = Vec::with_capacity(BOUND_SAMPLES);
    let (a, b) = (0.9, 2.0);
    for _ in 0..BOUND_SAMPLES {
        let alpha = -b * b + r.gen_range(0.0..1.0) * (a * a + b * b);
        let theta = r.gen_range(-PI..PI);
        let z = CutPlanePoint::new(r.gen_range(-8.0f64..8.0).exp(), r.gen_range(1e-3..PI - 1e-3))?;
        let lhs = (r_func(pt(alpha, theta + FRAC_PI_2)?, z) / r_func(pt(alpha, theta)?, z)).norm();
        let bound = ratio_bound(a, b, z.to_complex());
        ratio.push(ProbeSample { label: format!("alpha={alpha} theta={theta} z={}", z.to_complex()), computed: lhs, expected: bound, rel_err: lhs / bound });
    }
    // a ratio above 1 is a violation
    Ok(vec![
        ProbeReport::from_samples("1/|R| bound, ratio to bound", 1.0, inv),
        ProbeReport::from_samples("|R(theta+pi/2)/R(theta)| bound, ratio to bound", 1.0, ratio),
    ])
}

fn smoothness() -> Result<Vec<ProbeReport>> {
    let shifted = |e: f64| (-(e + 3.0) * (e + 3.0) / 8.0).exp();
    let centred = |e: f64| (-e * e / 4.0).exp();
    let mut first = Vec::new();
    let mut second = Vec::new();
    for theta in [0.0, FRAC_PI_6, FRAC_PI_2] {
        for (name, phi) in [("exp(-(E+3)^2/8)", &shifted as &dyn Fn(f64) -> f64), ("exp(-E^2/4)", &centred)] {
            let rep = smoothness_probe(theta, phi, &[1e-2, 5e-3, 2.5e-3], 1e-11, (1e-4, 1e-2))?;
            let label = format!("theta={theta} phi={name}");
            for (dst, r) in [(&mut first, rep.first), (&mut second, rep.second)] {
                let last = r.details.last().cloned().expect("smoothness samples");
                dst.push(ProbeSample { label: label.clone(), computed: last.computed, expected: last.expected, rel_err: r.max_rel_err });
            }
        }
    }
    Ok(vec![
        ProbeReport::from_samples("first derivative across alpha = 0", 1e-4, first),
        ProbeReport::from_samples("second derivative across alpha = 0", 1e-2, second),
    ])
}
