//! Independent numerical oracles for the closed forms.
//!
//! Every probe is deterministic in its inputs and returns a [`ProbeReport`] whose
//! `pass` flag is `max_rel_err <= tolerance`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::entire::sinc_r;
use crate::error::{bail, finite, Result};
use crate::plane::CutPlanePoint;
use crate::quad::integrate_adaptive;
use crate::solutions::{
    a_sol, b_sol, u_theta, u_theta_jet, v_sol, v_sol_jet, wronskian_ab, wronskian_jets, wronskian_numeric,
    CouplingPoint, RadialGridFunction,
};
use crate::spectral::{build_measure, integrate_measure, m_func, point_mass, r_func, SpectralMeasure};

type C = Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeSample {
    pub label: String,
    pub computed: f64,
    pub expected: f64,
    pub rel_err: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub name: String,
    pub samples: usize,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub details: Vec<ProbeSample>,
}

impl ProbeReport {
    pub fn new(name: &str, tolerance: f64, max_rel_err: f64, details: Vec<ProbeSample>) -> Self {
        ProbeReport {
            name: name.to_string(),
            samples: details.len(),
            max_rel_err,
            tolerance,
            pass: max_rel_err <= tolerance,
            details,
        }
    }

    pub fn from_samples(name: &str, tolerance: f64, details: Vec<ProbeSample>) -> Self {
        let worst = details.iter().fold(0.0f64, |m, s| if s.rel_err.is_nan() { f64::INFINITY } else { m.max(s.rel_err) });
        Self::new(name, tolerance, worst, details)
    }
}

fn sample(label: String, computed: f64, expected: f64, scale: f64) -> ProbeSample {
    ProbeSample { label, computed, expected, rel_err: (computed - expected).abs() / scale }
}

/// `∫ φ(E) Im 𝓜(E+iη) dE` over `window` for each `η`, compared with `∫ φ d𝒱`.
///
/// Panel breaks cluster at `0` and at every kept eigenvalue on the scale of `η`.
/// `max_rel_err` is the error at the last (smallest) `η`; the per-`η` errors are in
/// `details`.
pub fn herglotz_limit_check(
    point: CouplingPoint,
    phi: &dyn Fn(f64) -> f64,
    window: (f64, f64),
    etas: &[f64],
    tolerance: f64,
) -> Result<ProbeReport> {
    if etas.is_empty() || etas.iter().any(|&e| !(e > 0.0)) || etas.windows(2).any(|w| w[1] >= w[0]) {
        bail!(InvalidArgument, "etas must be positive and decreasing");
    }
    let (lo, hi) = window;
    if !(lo < 0.0 && hi > 0.0) {
        bail!(InvalidArgument, "the window must straddle E = 0");
    }
    let measure = build_measure(point, 1e-15, &|e: f64| phi(e).abs())?;
    let reference = integrate_measure(&measure, phi, 1e-13)?;
    let scale = reference.abs().max(1e-300);
    let mut details = Vec::with_capacity(etas.len());
    for &eta in etas {
        let breaks = herglotz_breaks(&measure, window, eta);
        let mut err = None;
        let mut f = |e: f64| match CutPlanePoint::from_complex(C::new(e, eta)).and_then(|z| m_func(point, z)) {
            Ok(m) => phi(e) * m.im,
            Err(x) => {
                err.get_or_insert(x);
                0.0
            }
        };
        let q = integrate_adaptive(&mut f, &breaks, 1e-9 * scale, 200_000)?;
        if let Some(e) = err {
            return Err(e);
        }
        details.push(sample(format!("eta={eta:e}"), q.value, reference, scale));
    }
    let last = details.last().map_or(f64::INFINITY, |s| s.rel_err);
    Ok(ProbeReport::new("herglotz_limit", tolerance, last, details))
}

fn herglotz_breaks(measure: &SpectralMeasure, (lo, hi): (f64, f64), eta: f64) -> Vec<f64> {
    let mut centres = vec![0.0];
    centres.extend(measure.points.iter().map(|p| p.0).filter(|&e| e > lo && e < hi));
    let mut b = vec![lo, hi];
    for c in centres {
        b.push(c);
        let mut d = eta / 8.0;
        while d < hi - lo {
            for x in [c - d, c + d] {
                if x > lo && x < hi {
                    b.push(x);
                }
            }
            d *= 2.0;
        }
    }
    b.sort_by(f64::total_cmp);
    b.dedup();
    b
}

/// Estimate `lim (z−E) 𝓜(z)` along `z = E + ρ|E| e^{iπ/4}` for each relative
/// radius `ρ`, then extrapolate linearly in `ρ` from the two smallest and compare
/// with `−mass/π`.
pub fn residue_check(point: CouplingPoint, energy: f64, radii: &[f64], tolerance: f64) -> Result<ProbeReport> {
    finite(energy, "energy")?;
    if radii.len() < 2 || radii.iter().any(|&r| !(r > 0.0 && r < 0.5)) || radii.windows(2).any(|w| w[1] >= w[0]) {
        bail!(InvalidArgument, "radii must be at least two decreasing values in (0, 1/2)");
    }
    let mass = point_mass(point, energy)?;
    if crate::spectral::eigenvalues(point, (energy * (1.0 + 1e-9), energy * (1.0 - 1e-9)))?.is_empty() {
        bail!(Domain, "{energy} is not an eigenvalue");
    }
    let expected = -mass / PI;
    let dir = C::from_polar(1.0, FRAC_PI_4);
    let mut g = Vec::with_capacity(radii.len());
    let mut details = Vec::with_capacity(radii.len() + 1);
    for &rho in radii {
        let dz = dir * (rho * energy.abs());
        let z = CutPlanePoint::from_complex(C::new(energy, 0.0) + dz)?;
        let v = dz * m_func(point, z)?;
        details.push(ProbeSample {
            label: format!("rho={rho:e}"),
            computed: v.re,
            expected,
            rel_err: (v - expected).norm() / expected.abs(),
        });
        g.push(v);
    }
    let n = radii.len();
    let (r1, r2) = (radii[n - 2], radii[n - 1]);
    let limit = (g[n - 1] * r1 - g[n - 2] * r2) / (r1 - r2);
    let err = (limit - expected).norm() / expected.abs();
    details.push(ProbeSample { label: "extrapolated".into(), computed: limit.re, expected, rel_err: err });
    Ok(ProbeReport::new("residue", tolerance, err, details))
}

/// Numerical Wronskians from sampled values (five-point stencil), for each `ϑ`:
/// `W(𝒱, 𝒰_ϑ)` against `R(α,ϑ,z)` and `W(𝒰_ϑ, 𝒰_{ϑ+π/2})` against `−2π Sinc²(π²α)`.
pub fn weyl_wronskian_check(alpha: f64, z: CutPlanePoint, thetas: &[f64], tolerance: f64) -> Result<ProbeReport> {
    let r0 = 1.0 / z.modulus().sqrt().max(1.0);
    let n = 801;
    let radii: Vec<f64> = (0..n).map(|i| r0 * (0.5 + i as f64 / (n - 1) as f64)).collect();
    let zc = z.to_complex();
    let v = RadialGridFunction::sample(radii.clone(), |r| v_sol(alpha, z, r))?;
    let mut details = Vec::with_capacity(2 * thetas.len());
    let max_dev = |w: &RadialGridFunction, want: C| {
        w.values().iter().fold(0.0f64, |m, x| m.max((x - want).norm())) / want.norm()
    };
    for &theta in thetas {
        let p = CouplingPoint::new(alpha, theta)?;
        let u = RadialGridFunction::sample(radii.clone(), |r| u_theta(p, zc, r))?;
        let up = RadialGridFunction::sample(radii.clone(), |r| {
            u_theta(CouplingPoint { theta: theta + FRAC_PI_2, ..p }, zc, r)
        })?;
        let want = r_func(p, z);
        let w = wronskian_numeric(&v, &u)?;
        details.push(ProbeSample {
            label: format!("W(V,U) theta={theta}"),
            computed: w.values()[w.len() / 2].norm(),
            expected: want.norm(),
            rel_err: max_dev(&w, want),
        });
        let want = C::new(wronskian_ab(alpha), 0.0);
        let w = wronskian_numeric(&u, &up)?;
        details.push(ProbeSample {
            label: format!("W(U,U') theta={theta}"),
            computed: w.values()[w.len() / 2].re,
            expected: want.re,
            rel_err: max_dev(&w, want),
        });
    }
    Ok(ProbeReport::from_samples("weyl_wronskian", tolerance, details))
}

/// Analytic-jet variant of [`weyl_wronskian_check`] at a list of radii.
pub fn weyl_wronskian_jets(point: CouplingPoint, z: CutPlanePoint, radii: &[f64]) -> Result<f64> {
    let want = r_func(point, z);
    let mut worst: f64 = 0.0;
    for &r in radii {
        let w = wronskian_jets(v_sol_jet(point.alpha, z, r)?, u_theta_jet(point, z.to_complex(), r)?);
        worst = worst.max((w - want).norm() / want.norm());
    }
    Ok(worst)
}

/// Smoothness of `F(α) = ∫ φ d𝒱_{α,ϑ}` across `α = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothnessReport {
    /// One-sided first derivatives (second-order differences, full Richardson table).
    pub first: ProbeReport,
    /// One-sided second derivatives (first-order differences, full Richardson table).
    pub second: ProbeReport,
}

/// Difference quotients of `F` from each side of `α = 0` with steps `h_list`
/// (at least two, each half the previous). Errors are relative to
/// `max(|F(0)|, |D⁺|, |D⁻|)`.
pub fn smoothness_probe(
    theta: f64,
    phi: &dyn Fn(f64) -> f64,
    h_list: &[f64],
    quad_tol: f64,
    tolerances: (f64, f64),
) -> Result<SmoothnessReport> {
    if h_list.len() < 2 || h_list.windows(2).any(|w| (w[1] - 0.5 * w[0]).abs() > 1e-12 * w[0]) {
        bail!(InvalidArgument, "h_list must halve at each step");
    }
    if h_list[0] * 2.0 >= 0.5 {
        bail!(InvalidArgument, "steps too large");
    }
    let f = |alpha: f64| -> Result<f64> {
        let p = CouplingPoint::new(alpha, theta)?;
        let m = build_measure(p, quad_tol * 1e-3, &|e: f64| phi(e).abs())?;
        integrate_measure(&m, phi, quad_tol)
    };
    let f0 = f(0.0)?;
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    for &h in h_list {
        let (p1, p2, m1, m2) = (f(h)?, f(2.0 * h)?, f(-h)?, f(-2.0 * h)?);
        d1.push(((-3.0 * f0 + 4.0 * p1 - p2) / (2.0 * h), (3.0 * f0 - 4.0 * m1 + m2) / (2.0 * h)));
        d2.push(((f0 - 2.0 * p1 + p2) / (h * h), (f0 - 2.0 * m1 + m2) / (h * h)));
    }
    let plus1: Vec<f64> = d1.iter().map(|d| d.0).collect();
    let minus1: Vec<f64> = d1.iter().map(|d| d.1).collect();
    let plus2: Vec<f64> = d2.iter().map(|d| d.0).collect();
    let minus2: Vec<f64> = d2.iter().map(|d| d.1).collect();
    let (p1, m1) = (richardson(&plus1, 2), richardson(&minus1, 2));
    let (p2, m2) = (richardson(&plus2, 1), richardson(&minus2, 1));
    let report = |name: &str, raw: &[(f64, f64)], plus: f64, minus: f64, tol: f64| {
        let scale = f0.abs().max(plus.abs()).max(minus.abs()).max(f64::MIN_POSITIVE);
        let mut details: Vec<ProbeSample> = raw
            .iter()
            .zip(h_list)
            .map(|(&(a, b), h)| sample(format!("h={h:e}"), a, b, scale))
            .collect();
        let last = sample("richardson".into(), plus, minus, scale);
        let err = last.rel_err;
        details.push(last);
        ProbeReport::new(name, tol, err, details)
    };
    Ok(SmoothnessReport {
        first: report("smoothness_first", &d1, p1, m1, tolerances.0),
        second: report("smoothness_second", &d2, p2, m2, tolerances.1),
    })
}

/// Richardson extrapolation of values at steps `h, h/2, h/4, …` whose error
/// expansion starts at `h^order` and continues in every integer power.
fn richardson(values: &[f64], order: i32) -> f64 {
    let mut t = values.to_vec();
    let mut p = order;
    while t.len() > 1 {
        let f = 2f64.powi(p);
        t = t.windows(2).map(|w| (f * w[1] - w[0]) / (f - 1.0)).collect();
        p += 1;
    }
    t[0]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolutionFamily {
    A,
    B,
    U { theta: f64 },
    V,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeCase {
    pub alpha: f64,
    pub z: C,
    pub family: SolutionFamily,
}

/// Radii at which the residual is sampled.
pub const ODE_RADII: [f64; 3] = [0.5, 1.0, 2.0];
/// Steps `h` and `h/2`.
pub const ODE_STEPS: (f64, f64) = (1e-2, 5e-3);

/// Three-point residual `−Δ²f/h² + ((α−¼)/r² − z) f` at `h` and `h/2`.
///
/// Each sample records the observed order `log₂(res(h)/res(h/2))`; `rel_err` is the
/// ratio `res(h/2)/res(h)` so the probe passes when every ratio is at most
/// `2^{−min_order}`. Residuals already at rounding level count as ratio 0.
pub fn ode_residual_suite(cases: &[OdeCase], min_order: f64) -> Result<ProbeReport> {
    let mut details = Vec::new();
    for case in cases {
        let eval = |r: f64| -> Result<C> {
            match case.family {
                SolutionFamily::A => a_sol(case.alpha, case.z, r),
                SolutionFamily::B => b_sol(case.alpha, case.z, r),
                SolutionFamily::U { theta } => u_theta(CouplingPoint::new(case.alpha, theta)?, case.z, r),
                SolutionFamily::V => v_sol(case.alpha, CutPlanePoint::from_complex(case.z)?, r),
            }
        };
        for &r in &ODE_RADII {
            let f0 = eval(r)?;
            let q = (case.alpha - 0.25) / (r * r);
            let h = ODE_STEPS.0;
            let local = f0.norm() + eval(r - h)?.norm() + eval(r + h)?.norm();
            let scale = local * (1.0 + q.abs() + case.z.norm());
            let res = |h: f64| -> Result<f64> {
                let d2 = (eval(r + h)? - f0 * 2.0 + eval(r - h)?) / (h * h);
                Ok((-d2 + f0 * (q - case.z)).norm())
            };
            let (r1, r2) = (res(ODE_STEPS.0)?, res(ODE_STEPS.1)?);
            let ratio = if r1.max(r2) <= 1e-8 * scale { 0.0 } else { r2 / r1 };
            details.push(ProbeSample {
                label: format!("{:?} alpha={} z={} r={r}", case.family, case.alpha, case.z),
                computed: (r1 / r2).log2(),
                expected: min_order,
                rel_err: ratio,
            });
        }
    }
    Ok(ProbeReport::from_samples("ode_residual", 2f64.powf(-min_order), details))
}

/// Right-hand side of `1/|R(α,ϑ,Ee^{iφ})| ≤ (|ln E|+3π)(E^{a/2}+E^{−a/2}) / (2π(π−φ)sinc²(πa))`,
/// valid for `α ≤ a²`, `−1 < a < 1`, `0 ≤ φ < π`.
pub fn inverse_r_bound(a: f64, energy: f64, phi: f64) -> f64 {
    let s = sinc_r(PI * PI * a * a);
    (energy.ln().abs() + 3.0 * PI) * (energy.powf(a / 2.0) + energy.powf(-a / 2.0)) / (2.0 * PI * (PI - phi) * s * s)
}

/// Right-hand side of `|R(α,ϑ+π/2,z)/R(α,ϑ,z)| ≤ P(1+ln²|z|)(1+|z|)^{1+a}/Im z`,
/// `P = 12π ch(πb)/sinc²(πa)`, valid for `α ∈ [−b², a²]`, `0 ≤ a < 1`, `Im z > 0`.
pub fn ratio_bound(a: f64, b: f64, z: C) -> f64 {
    let s = sinc_r(PI * PI * a * a);
    let p = 12.0 * PI * (PI * b).cosh() / (s * s);
    let l = z.norm().ln();
    p * (1.0 + l * l) * (1.0 + z.norm()).powf(1.0 + a) / z.im
}
