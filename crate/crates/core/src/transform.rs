//! Generalized Fourier transform diagonalizing the realization `(α, ϑ)`:
//! `(Uψ)(E) = ∫ 𝒰_ϑ(E|r) ψ(r) dr`, inverted against the spectral measure.
//!
//! The continuous part lives on a finite log-spaced energy window; point energies
//! are always used exactly.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, finite, Result};
use crate::plane::CutPlanePoint;
use crate::quad::{gauss_legendre_panels, pairwise_sum};
use crate::solutions::{u_theta, v_sol, wronskian_ab, CouplingPoint, RadialGridFunction};
use crate::spectral::{eigenvalues, point_mass, r_func, t_density, SpectralMeasure};

type C = Complex64;

pub const DEFAULT_E_MIN: f64 = 1e-8;
pub const DEFAULT_E_MAX: f64 = 6400.0;
pub const DEFAULT_PANELS: usize = 128;
pub const DEFAULT_ORDER: usize = 16;
pub const R_WINDOW: (f64, f64) = (1e-6, 1e3);

/// Quadrature nodes for `∫₀^∞ · dE` truncated to `[e_min, e_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyGrid {
    energies: Vec<f64>,
    weights: Vec<f64>,
}

impl EnergyGrid {
    pub fn new(energies: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if energies.len() != weights.len() || energies.is_empty() {
            bail!(InvalidArgument, "energy grid needs matching, non-empty nodes and weights");
        }
        if energies.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
            bail!(InvalidArgument, "grid energies must be positive and finite");
        }
        Ok(EnergyGrid { energies, weights })
    }

    /// Composite Gauss–Legendre in `s = ln E` on `[ln e_min, ln e_max]`.
    pub fn log_gauss(e_min: f64, e_max: f64, panels: usize, order: usize) -> Result<Self> {
        finite(e_min, "e_min")?;
        finite(e_max, "e_max")?;
        if !(e_min > 0.0 && e_max > e_min) || panels == 0 || order == 0 {
            bail!(InvalidArgument, "bad energy window ({e_min}, {e_max}]");
        }
        let (s, w) = gauss_legendre_panels(e_min.ln(), e_max.ln(), panels, order);
        let energies: Vec<f64> = s.iter().map(|s| s.exp()).collect();
        let weights = w.iter().zip(&energies).map(|(w, e)| w * e).collect();
        Ok(EnergyGrid { energies, weights })
    }

    /// `(1e−8, e_max]` with the default node count.
    pub fn window(e_max: f64) -> Result<Self> {
        Self::log_gauss(DEFAULT_E_MIN, e_max, DEFAULT_PANELS, DEFAULT_ORDER)
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }
}

impl Default for EnergyGrid {
    fn default() -> Self {
        Self::window(DEFAULT_E_MAX).expect("default window is valid")
    }
}

/// Transform coefficients: one per grid energy, one per point mass.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult {
    pub continuous_part: Vec<C>,
    /// `(eigenvalue, coefficient)` in the order of the measure's points.
    pub point_part: Vec<(f64, C)>,
}

/// The eigenfunction `𝒰_ϑ(E|·)` at an eigenvalue `E`, evaluated as
/// `W(𝒜,ℬ) 𝒱(E|r) / R(α, ϑ+π/2, E)` so that it stays accurate where it decays.
pub fn eigenfunction(point: CouplingPoint, energy: f64, r: f64) -> Result<f64> {
    let z = CutPlanePoint::negative(energy)?;
    let rp = r_func(CouplingPoint { theta: point.theta + FRAC_PI_2, ..point }, z);
    let v = v_sol(point.alpha, z, r)?;
    Ok(wronskian_ab(point.alpha) * v.re / rp.re)
}

fn check_support(psi: &RadialGridFunction) -> Result<()> {
    let r = psi.radii();
    if r[0] < R_WINDOW.0 || r[r.len() - 1] > R_WINDOW.1 {
        bail!(InvalidArgument, "support [{}, {}] leaves the radial window", r[0], r[r.len() - 1]);
    }
    Ok(())
}

fn check_alpha(point: CouplingPoint) -> Result<()> {
    if !(point.alpha < 1.0) {
        bail!(Domain, "alpha must be < 1, got {}", point.alpha);
    }
    Ok(())
}

fn project(psi: &RadialGridFunction, w: &[f64], mut f: impl FnMut(f64) -> Result<f64>) -> Result<C> {
    let mut re = Vec::with_capacity(w.len());
    let mut im = Vec::with_capacity(w.len());
    for ((&r, v), wr) in psi.radii().iter().zip(psi.values()).zip(w) {
        let u = f(r)? * wr;
        re.push(u * v.re);
        im.push(u * v.im);
    }
    Ok(C::new(pairwise_sum(&re), pairwise_sum(&im)))
}

/// `(Uψ)(E)` on the grid energies and at the measure's eigenvalues.
pub fn forward(
    point: CouplingPoint,
    psi: &RadialGridFunction,
    grid: &EnergyGrid,
    measure: &SpectralMeasure,
) -> Result<TransformResult> {
    check_alpha(point)?;
    check_support(psi)?;
    let w = psi.quadrature_weights();
    let continuous_part = grid
        .energies
        .iter()
        .map(|&e| project(psi, &w, |r| Ok(u_theta(point, C::new(e, 0.0), r)?.re)))
        .collect::<Result<Vec<_>>>()?;
    let point_part = measure
        .points
        .iter()
        .map(|&(e, _)| Ok((e, project(psi, &w, |r| eigenfunction(point, e, r))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TransformResult { continuous_part, point_part })
}

/// `ψ(r) = ∫ 𝒰(E|r) c(E) d𝒱(E)` at the given radii.
pub fn inverse(
    point: CouplingPoint,
    coeffs: &TransformResult,
    grid: &EnergyGrid,
    measure: &SpectralMeasure,
    radii: &[f64],
) -> Result<RadialGridFunction> {
    check_alpha(point)?;
    if coeffs.continuous_part.len() != grid.len() || coeffs.point_part.len() != measure.points.len() {
        bail!(InvalidArgument, "coefficients do not match the grid and measure");
    }
    let dens = grid
        .energies
        .iter()
        .zip(&grid.weights)
        .map(|(&e, &w)| Ok(w * t_density(point, e)?))
        .collect::<Result<Vec<_>>>()?;
    let mut values = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut re = Vec::with_capacity(grid.len() + measure.points.len());
        let mut im = Vec::with_capacity(re.capacity());
        for ((&e, &d), c) in grid.energies.iter().zip(&dens).zip(&coeffs.continuous_part) {
            let u = u_theta(point, C::new(e, 0.0), r)?.re * d;
            re.push(u * c.re);
            im.push(u * c.im);
        }
        for (&(e, m), &(_, c)) in measure.points.iter().zip(&coeffs.point_part) {
            let u = eigenfunction(point, e, r)? * m;
            re.push(u * c.re);
            im.push(u * c.im);
        }
        values.push(C::new(pairwise_sum(&re), pairwise_sum(&im)));
    }
    RadialGridFunction::new(radii.to_vec(), values)
}

/// Both sides of `∫|ψ|² dr = Σ m_k |ψ̂(E_k)|² + ∫ t |ψ̂|² dE`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalReport {
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
}

pub fn parseval_check(
    point: CouplingPoint,
    psi: &RadialGridFunction,
    grid: &EnergyGrid,
    measure: &SpectralMeasure,
) -> Result<ParsevalReport> {
    let coeffs = forward(point, psi, grid, measure)?;
    parseval_from(point, psi, &coeffs, grid, measure)
}

pub fn parseval_from(
    point: CouplingPoint,
    psi: &RadialGridFunction,
    coeffs: &TransformResult,
    grid: &EnergyGrid,
    measure: &SpectralMeasure,
) -> Result<ParsevalReport> {
    let lhs = l2_norm_sq(psi);
    let mut terms = Vec::with_capacity(grid.len() + measure.points.len());
    for ((&e, &w), c) in grid.energies.iter().zip(&grid.weights).zip(&coeffs.continuous_part) {
        terms.push(w * t_density(point, e)? * c.norm_sqr());
    }
    for (&(_, m), &(_, c)) in measure.points.iter().zip(&coeffs.point_part) {
        terms.push(m * c.norm_sqr());
    }
    let rhs = pairwise_sum(&terms);
    Ok(ParsevalReport { lhs, rhs, rel_err: (rhs - lhs).abs() / lhs })
}

fn l2_norm_sq(f: &RadialGridFunction) -> f64 {
    let w = f.quadrature_weights();
    pairwise_sum(&f.values().iter().zip(&w).map(|(v, w)| v.norm_sqr() * w).collect::<Vec<_>>())
}

/// `‖inverse(forward ψ) − ψ‖₂ / ‖ψ‖₂` on the nodes of `psi`.
pub fn roundtrip_check(
    point: CouplingPoint,
    psi: &RadialGridFunction,
    grid: &EnergyGrid,
    measure: &SpectralMeasure,
) -> Result<f64> {
    let coeffs = forward(point, psi, grid, measure)?;
    let back = inverse(point, &coeffs, grid, measure, psi.radii())?;
    let diff = psi.map({
        let mut it = back.values().iter();
        move |_, v| it.next().expect("same grid") - v
    });
    Ok((l2_norm_sq(&diff) / l2_norm_sq(psi)).sqrt())
}

/// `max |U(ℒψ)(E) − E·(Uψ)(E)| / max |E·(Uψ)(E)|` over grid and point energies,
/// with `ℒψ = −ψ″ + (α−¼) r^{−2} ψ` from the fourth-order centred stencil of step `h`.
/// `psi` is sampled on `panels × order` Gauss–Legendre nodes of `support`.
#[allow(clippy::too_many_arguments)]
pub fn diagonalization_check(
    point: CouplingPoint,
    psi: &dyn Fn(f64) -> f64,
    support: (f64, f64),
    panels: usize,
    order: usize,
    h: f64,
    grid: &EnergyGrid,
    measure: &SpectralMeasure,
) -> Result<f64> {
    let (a, b) = support;
    if a - 2.0 * h <= 0.0 {
        bail!(InvalidArgument, "support must stay 2h away from the origin");
    }
    let q = point.alpha - 0.25;
    let l_psi = |r: f64| {
        let d2 = (-psi(r + 2.0 * h) + 16.0 * psi(r + h) - 30.0 * psi(r) + 16.0 * psi(r - h) - psi(r - 2.0 * h))
            / (12.0 * h * h);
        -d2 + q / (r * r) * psi(r)
    };
    let f = RadialGridFunction::gauss_legendre(a, b, panels, order, |r| Ok(C::new(psi(r), 0.0)))?;
    let lf = RadialGridFunction::gauss_legendre(a, b, panels, order, |r| Ok(C::new(l_psi(r), 0.0)))?;
    let cf = forward(point, &f, grid, measure)?;
    let cl = forward(point, &lf, grid, measure)?;
    let mut scale: f64 = 0.0;
    let mut worst: f64 = 0.0;
    let pairs = grid
        .energies
        .iter()
        .zip(cf.continuous_part.iter().zip(&cl.continuous_part))
        .map(|(&e, (x, y))| (e, *x, *y))
        .chain(cf.point_part.iter().zip(&cl.point_part).map(|(&(e, x), &(_, y))| (e, x, y)));
    for (e, x, y) in pairs {
        scale = scale.max((x * e).norm());
        worst = worst.max((y - x * e).norm());
    }
    Ok(worst / scale)
}

/// Numerical `∫₀^∞ 𝒰_ϑ(E|r)² dr` against the closed form `1/mass`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormReport {
    pub numeric: f64,
    pub closed_form: f64,
    pub rel_err: f64,
}

/// `∫₀^{r_max} f(E₁|r) f(E₂|r) dr` for eigenfunctions, on Gauss–Legendre panels in `ln r`
/// from `r = 1e−14/λ` (`λ = √max|E|`) to `r_max`.
pub fn eigen_overlap(point: CouplingPoint, e1: f64, e2: f64, r_max: f64) -> Result<f64> {
    let lam = e1.abs().max(e2.abs()).sqrt();
    let lo = (1e-14 / lam).ln();
    let hi = r_max.ln();
    let panels = ((hi - lo) / 0.5).ceil().max(1.0) as usize;
    let (t, w) = gauss_legendre_panels(lo, hi, panels, 16);
    let mut terms = Vec::with_capacity(t.len());
    for (t, w) in t.iter().zip(&w) {
        let r = t.exp();
        let a = eigenfunction(point, e1, r)?;
        let b = if e2 == e1 { a } else { eigenfunction(point, e2, r)? };
        terms.push(w * r * a * b);
    }
    Ok(pairwise_sum(&terms))
}

pub fn eigenfunction_norm_check(point: CouplingPoint, energy: f64) -> Result<NormReport> {
    finite(energy, "energy")?;
    if !(energy < 0.0) || eigenvalues(point, (energy * (1.0 + 1e-9), energy * (1.0 - 1e-9)))?.is_empty() {
        bail!(Domain, "{energy} is not an eigenvalue");
    }
    let closed_form = 1.0 / point_mass(point, energy)?;
    // the eigenfunction decays like e^{−√|E| r}; e^{−80} is far below the target
    let r_max = 40.0 / energy.abs().sqrt();
    let numeric = eigen_overlap(point, energy, energy, r_max)?;
    Ok(NormReport { numeric, closed_form, rel_err: (numeric - closed_form).abs() / closed_form })
}

/// A smooth bump supported on `[a, b]`: `exp(−c / (1 − x²))`, `x` the rescaled radius.
pub fn bump(a: f64, b: f64, c: f64) -> impl Fn(f64) -> f64 {
    move |r: f64| {
        let x = (2.0 * r - a - b) / (b - a);
        if x.abs() < 1.0 {
            (-c / (1.0 - x * x)).exp()
        } else {
            0.0
        }
    }
}

/// `ψ̂(E) = 2^{−1/2} ∫ √r J_κ(√E r) ψ(r) dr` recovered from the forward transform at
/// `α = κ²`, `ϑ = π/2 − πκ/2`, where `𝒰 = π sinc(πκ) E^{−κ/2} √r J_κ(√E r)`.
pub fn hankel_scale(kappa: f64, energy: f64) -> f64 {
    let s = if kappa == 0.0 { 1.0 } else { (PI * kappa).sin() / (PI * kappa) };
    PI * s * energy.powf(-kappa / 2.0) * core::f64::consts::SQRT_2
}
