//! Weyl–Titchmarsh data of the realization `(α, ϑ)`: the function `R`, the
//! m-function, the spectral density, phase regions, eigenvalues and the spectral
//! measure. Everything is written with `Cos`/`Sinc` of real arguments, so it is
//! analytic across `α = 0` and needs no choice of `√α`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::entire::{cos_r, sinc_r};
use crate::error::{bail, finite, Error, Result};
use crate::plane::CutPlanePoint;
use crate::quad::{integrate_adaptive, pairwise_sum};
use crate::solutions::CouplingPoint;

type C = Complex64;

/// Continuous-spectrum integrals run over `s = ln E ∈ [S_MIN, S_MAX]`.
pub const S_MIN: f64 = -60.0;
pub const S_MAX: f64 = 60.0;
const S_PANEL: f64 = 0.5;
pub const PANEL_BUDGET: usize = 10_000;
const MAX_SHEETS: usize = 1_000_000;
const EIGEN_CHECK: f64 = 1e-9;

/// `R(α, ϑ, z)` at `z = e^{lnE + iφ}`, for any real `α`.
pub fn r_func_log(alpha: f64, theta: f64, ln_e: f64, phi: f64) -> C {
    let a2 = PI * PI / 4.0;
    let at2 = phi * phi / 4.0;
    let b2 = (PI - phi) * (PI - phi) / 4.0;
    let c2 = ln_e * ln_e / 4.0;
    let (st, ct) = theta.sin_cos();
    let emi = C::new(ct, -st);
    let i = C::new(0.0, 1.0);
    let cos_b = cos_r(b2 * alpha);
    let first = i * (emi * (PI * sinc_r(a2 * alpha) * cos_b) - C::new(phi * ct * sinc_r(at2 * alpha), 0.0))
        * cos_r(-c2 * alpha);
    let second = (emi * (cos_r(a2 * alpha) * cos_b) + i * (st * cos_r(at2 * alpha))) * (ln_e * sinc_r(-c2 * alpha));
    first - second
}

/// `R(α, ϑ, z)`; its zeros in `z` are the eigenvalues and `W(𝒱, 𝒰_ϑ) = R`.
pub fn r_func(point: CouplingPoint, z: CutPlanePoint) -> C {
    r_func_log(point.alpha, point.theta, z.modulus().ln(), z.phase())
}

fn require_below_one(alpha: f64) -> Result<()> {
    finite(alpha, "alpha")?;
    if alpha >= 1.0 {
        bail!(Domain, "alpha must be < 1, got {alpha}");
    }
    Ok(())
}

fn sinc_pi2(alpha: f64) -> f64 {
    sinc_r(PI * PI * alpha)
}

/// `𝓜(z) = −R(α, ϑ+π/2, z) / (2π² Sinc²(π²α) R(α, ϑ, z))`.
pub fn m_func(point: CouplingPoint, z: CutPlanePoint) -> Result<C> {
    require_below_one(point.alpha)?;
    let r = r_func(point, z);
    if r.norm() < 1e-300 {
        bail!(Pole, "R vanishes at z = {}", z.to_complex());
    }
    let rp = r_func_log(point.alpha, point.theta + FRAC_PI_2, z.modulus().ln(), z.phase());
    let s = sinc_pi2(point.alpha);
    Ok(-rp / (r * (2.0 * PI * PI * s * s)))
}

/// `Im 𝓜(z) = (π−φ) Sinc((π−φ)²α) / (2π Sinc(π²α) |R|²)`.
pub fn im_m_closed(point: CouplingPoint, z: CutPlanePoint) -> Result<f64> {
    require_below_one(point.alpha)?;
    let r = r_func(point, z);
    let pm = PI - z.phase();
    Ok(pm * sinc_r(pm * pm * point.alpha) / (2.0 * PI * sinc_pi2(point.alpha) * r.norm_sqr()))
}

/// `τ(α, φ) = (π−φ)² Sinc²((π−φ)²α/4) − π² Sinc²(π²α/4)`.
pub fn tau(alpha: f64, phi: f64) -> f64 {
    let pm = PI - phi;
    let a = pm * sinc_r(pm * pm * alpha / 4.0);
    let b = PI * sinc_r(PI * PI * alpha / 4.0);
    a * a - b * b
}

/// `μ(α, φ) = 2π² Sinc²(π²α) + Cos(π²α) τ(α, φ)`.
pub fn mu(alpha: f64, phi: f64) -> f64 {
    let s = sinc_pi2(alpha);
    2.0 * PI * PI * s * s + cos_r(PI * PI * alpha) * tau(alpha, phi)
}

/// `Φ(α, E) = ln E · Sinc(−α ln²E / 4)`, given `ln E`.
pub fn phi_log(alpha: f64, ln_e: f64) -> f64 {
    ln_e * sinc_r(-alpha * ln_e * ln_e / 4.0)
}

/// `T(α, ϑ, e^{lnE + iφ}) = 2|R|²`, as an explicitly real expression.
pub fn big_t_log(point: CouplingPoint, ln_e: f64, phi: f64) -> f64 {
    let alpha = point.alpha;
    let (s2, c2) = (2.0 * point.theta).sin_cos();
    let f = phi_log(alpha, ln_e);
    let cp = cos_r(PI * PI * alpha);
    f * f * (1.0 + c2 * cp) - 2.0 * PI * ln_e * sinc_r(-alpha * ln_e * ln_e) * sinc_pi2(alpha) * s2
        + tau(alpha, phi) * c2
        + mu(alpha, phi)
}

pub fn big_t(point: CouplingPoint, z: CutPlanePoint) -> f64 {
    big_t_log(point, z.modulus().ln(), z.phase())
}

/// Spectral density `t(E) = 1/(2|R(α, ϑ, E)|²)` for `E > 0`, zero otherwise.
pub fn t_density(point: CouplingPoint, energy: f64) -> Result<f64> {
    require_below_one(point.alpha)?;
    finite(energy, "energy")?;
    if energy <= 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / big_t_log(point, energy.ln(), 0.0))
}

/// `𝔱_ϑ(α, s) = 2π² Sinc²(π²α) t(e^s)`.
pub fn frak_t(point: CouplingPoint, s: f64) -> Result<f64> {
    require_below_one(point.alpha)?;
    finite(s, "s")?;
    let alpha = point.alpha;
    let sp = sinc_pi2(alpha);
    let (s2, c2) = (2.0 * point.theta).sin_cos();
    let q = s * sinc_r(-alpha * s * s / 4.0);
    let inv = 1.0 + q * q / (2.0 * PI * PI * sp * sp) * (1.0 + c2 * cos_r(PI * PI * alpha))
        - s * sinc_r(-alpha * s * s) / (PI * sp) * s2;
    Ok(1.0 / inv)
}

/// `J(s, φ) = 2π² Sinc²(π²α) Im 𝓜(e^{s+iφ})`, with `J(s, 0) = 𝔱_ϑ(α, s)`.
pub fn j_func(point: CouplingPoint, s: f64, phi: f64) -> Result<f64> {
    require_below_one(point.alpha)?;
    finite(s, "s")?;
    CutPlanePoint::new(1.0, phi)?;
    let pm = PI - phi;
    let alpha = point.alpha;
    Ok(2.0 * PI * pm * sinc_r(pm * pm * alpha) * sinc_pi2(alpha) / big_t_log(point, s, phi))
}

/// Phase regions of the `(α, ϑ)` half-strip `α < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseRegion {
    /// No eigenvalues.
    Q0,
    /// Exactly one eigenvalue.
    Q1,
    /// Infinitely many eigenvalues accumulating at `0⁻` and `−∞`.
    QInfinity,
}

impl PhaseRegion {
    pub fn label(&self) -> &'static str {
        match self {
            PhaseRegion::Q0 => "Q0",
            PhaseRegion::Q1 => "Q1",
            PhaseRegion::QInfinity => "QInfinity",
        }
    }
}

fn reduce_half(theta: f64) -> f64 {
    theta - PI * (theta / PI).round()
}

/// `ω(ϑ) = (1 − 2|ϑ|/π)²` on `[−π/2, π/2]`, extended `π`-periodically.
pub fn omega(theta: f64) -> f64 {
    let t = reduce_half(theta).abs();
    let v = 1.0 - 2.0 * t / PI;
    v * v
}

pub fn phase_region(point: CouplingPoint) -> Result<PhaseRegion> {
    require_below_one(point.alpha)?;
    finite(point.theta, "theta")?;
    Ok(if point.alpha < 0.0 {
        PhaseRegion::QInfinity
    } else if point.alpha < omega(point.theta) {
        PhaseRegion::Q1
    } else {
        PhaseRegion::Q0
    })
}

/// Same classification via `sin²ϑ ≥ Cos²(π²α/4)` for `0 ≤ α < 1`.
pub fn phase_region_trig(point: CouplingPoint) -> Result<PhaseRegion> {
    require_below_one(point.alpha)?;
    if point.alpha < 0.0 {
        return Ok(PhaseRegion::QInfinity);
    }
    let s = point.theta.sin();
    let c = cos_r(PI * PI * point.alpha / 4.0);
    Ok(if s * s >= c * c { PhaseRegion::Q0 } else { PhaseRegion::Q1 })
}

/// `ϑ = ϑ̂ + π m` with `ϑ̂ ∈ (−π/2, π/2]`.
pub fn reduce_theta(theta: f64) -> (f64, i64) {
    let m = (theta / PI - 0.5).ceil();
    let mut hat = theta - PI * m;
    let mut m = m as i64;
    if hat <= -FRAC_PI_2 {
        hat += PI;
        m -= 1;
    } else if hat > FRAC_PI_2 {
        hat -= PI;
        m += 1;
    }
    (hat, m)
}

fn s_reduced(alpha: f64, hat: f64) -> f64 {
    if alpha < 0.0 {
        let sigma = (-alpha).sqrt();
        if hat == FRAC_PI_2 {
            PI / sigma
        } else {
            2.0 / sigma * (hat.tan() * (0.5 * PI * sigma).tanh()).atan()
        }
    } else if alpha == 0.0 {
        PI * hat.tan()
    } else {
        let k = alpha.sqrt();
        let x = 0.5 * PI * k;
        // ln[cos(ϑ−x)/cos(ϑ+x)] = ln(1 + 2 sinϑ sin x / cos(ϑ+x))
        (2.0 * hat.sin() * x.sin() / (hat + x).cos()).ln_1p() / k
    }
}

/// `S(α, ϑ)`: eigenvalues are `E = −e^{S(α, ϑ+πk)}`.
pub fn s_func(alpha: f64, theta: f64) -> Result<f64> {
    require_below_one(alpha)?;
    finite(theta, "theta")?;
    let (hat, m) = reduce_theta(theta);
    if alpha < 0.0 {
        let sigma = (-alpha).sqrt();
        return Ok(s_reduced(alpha, hat) + 2.0 * PI * m as f64 / sigma);
    }
    if m != 0 || hat >= FRAC_PI_2 || alpha >= omega(hat) {
        bail!(Domain, "(alpha, theta) = ({alpha}, {theta}) is outside the domain of S");
    }
    Ok(s_reduced(alpha, hat))
}

/// One eigenvalue `E = −e^s` on branch `k`, where `s = S(α, ϑ + πk)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSheet {
    pub branch: i64,
    pub s: f64,
    pub energy: f64,
}

fn eigen_residual_ok(point: CouplingPoint, s: f64) -> bool {
    let alpha = point.alpha;
    let (st, ct) = point.theta.sin_cos();
    let t1 = PI * sinc_r(PI * PI * alpha / 4.0) * st * cos_r(-s * s * alpha / 4.0);
    let t2 = s * cos_r(PI * PI * alpha / 4.0) * ct * sinc_r(-s * s * alpha / 4.0);
    let r = r_func_log(alpha, point.theta, s, PI).norm();
    r <= EIGEN_CHECK * (t1.abs() + t2.abs()).max(1.0)
}

fn sheet(point: CouplingPoint, branch: i64, s: f64) -> Result<EigenSheet> {
    if !eigen_residual_ok(point, s) {
        return Err(Error::Accuracy {
            message: alloc::format!("R does not vanish at s = {s}"),
            estimate: s,
            error: r_func_log(point.alpha, point.theta, s, PI).norm(),
        });
    }
    let energy = -s.exp();
    if !energy.is_finite() {
        bail!(Range, "eigenvalue -exp({s}) overflows");
    }
    Ok(EigenSheet { branch, s, energy })
}

/// All eigenvalues in the closed window `[lo, hi]`, `lo < hi < 0`, ascending in `s`.
pub fn eigenvalues(point: CouplingPoint, window: (f64, f64)) -> Result<Vec<EigenSheet>> {
    let (lo, hi) = window;
    finite(lo, "window")?;
    finite(hi, "window")?;
    if !(lo < hi && hi < 0.0) {
        bail!(InvalidArgument, "window must satisfy lo < hi < 0, got ({lo}, {hi})");
    }
    let (s_lo, s_hi) = ((-hi).ln(), (-lo).ln());
    let (hat, m) = reduce_theta(point.theta);
    match phase_region(point)? {
        PhaseRegion::Q0 => Ok(Vec::new()),
        PhaseRegion::Q1 => {
            let s = s_reduced(point.alpha, hat);
            if s >= s_lo && s <= s_hi {
                Ok(alloc::vec![sheet(point, -m, s)?])
            } else {
                Ok(Vec::new())
            }
        }
        PhaseRegion::QInfinity => {
            let sigma = (-point.alpha).sqrt();
            let step = 2.0 * PI / sigma;
            let s0 = s_reduced(point.alpha, hat);
            let j_lo = ((s_lo - s0) / step).ceil() as i64;
            let j_hi = ((s_hi - s0) / step).floor() as i64;
            if j_hi - j_lo > MAX_SHEETS as i64 {
                bail!(InvalidArgument, "window contains more than {MAX_SHEETS} eigenvalues");
            }
            (j_lo..=j_hi)
                .map(|j| sheet(point, j - m, s0 + step * j as f64))
                .collect()
        }
    }
}

/// Weight of the point mass at the eigenvalue `E`:
/// `|E| / (2 Sinc(π²α) (Cos²(π²α/4) − sin²ϑ))`.
pub fn point_mass(point: CouplingPoint, energy: f64) -> Result<f64> {
    if phase_region(point)? == PhaseRegion::Q0 {
        bail!(Domain, "no eigenvalues in region Q0");
    }
    finite(energy, "energy")?;
    if energy >= 0.0 {
        bail!(InvalidArgument, "eigenvalues are negative, got {energy}");
    }
    let c = cos_r(PI * PI * point.alpha / 4.0);
    let s = point.theta.sin();
    Ok(energy.abs() / (2.0 * sinc_pi2(point.alpha) * (c * c - s * s)))
}

/// Bounds on the weighted point mass dropped when truncating an infinite sequence
/// of eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TruncationNote {
    /// Dropped eigenvalues between the kept ones and `0⁻`.
    pub near_zero: f64,
    /// Dropped eigenvalues below the kept ones.
    pub near_infinity: f64,
    pub floor: f64,
}

/// The spectral measure: absolutely continuous part `t(E) dE` on `(0, ∞)` plus
/// point masses, truncated for `QInfinity`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralMeasure {
    pub point: CouplingPoint,
    /// `(eigenvalue, mass)`, ascending in `|E|`.
    pub points: Vec<(f64, f64)>,
    pub truncation: TruncationNote,
}

impl SpectralMeasure {
    pub fn density(&self, energy: f64) -> Result<f64> {
        t_density(self.point, energy)
    }
}

/// Assemble the measure. For `QInfinity` the masses `m_k` are kept while
/// `m_k · weight(E_k) ≥ floor`; `weight` should be positive and nonincreasing in
/// `|E|` on `E < 0`.
pub fn build_measure(point: CouplingPoint, floor: f64, weight: &dyn Fn(f64) -> f64) -> Result<SpectralMeasure> {
    finite(floor, "floor")?;
    if floor <= 0.0 {
        bail!(InvalidArgument, "floor must be positive");
    }
    let region = phase_region(point)?;
    let mut points = Vec::new();
    let mut truncation = TruncationNote { floor, ..Default::default() };
    match region {
        PhaseRegion::Q0 => {}
        PhaseRegion::Q1 => {
            let (hat, _) = reduce_theta(point.theta);
            let e = -s_reduced(point.alpha, hat).exp();
            points.push((e, point_mass(point, e)?));
        }
        PhaseRegion::QInfinity => {
            let sigma = (-point.alpha).sqrt();
            let step = 2.0 * PI / sigma;
            let (hat, _) = reduce_theta(point.theta);
            let s0 = s_reduced(point.alpha, hat);
            let j0 = (-s0 / step).round() as i64;
            let term = |j: i64| -> Result<(f64, f64, f64)> {
                let e = -(s0 + step * j as f64).exp();
                if !e.is_finite() {
                    return Err(Error::Accuracy {
                        message: "weighted point masses do not fall below the floor".into(),
                        estimate: 0.0,
                        error: f64::INFINITY,
                    });
                }
                let m = point_mass(point, e)?;
                Ok((e, m, m * weight(e)))
            };
            let mut j = j0;
            loop {
                let (e, m, w) = term(j)?;
                if w < floor && s0 + step * j as f64 >= 0.0 {
                    let (_, _, w2) = term(j + 1)?;
                    let ratio = w2 / w;
                    truncation.near_infinity = if ratio < 1.0 { w / (1.0 - ratio) } else { f64::INFINITY };
                    break;
                }
                points.push((e, m));
                j += 1;
                if (j - j0) as usize > MAX_SHEETS {
                    bail!(Range, "too many point masses above the floor");
                }
            }
            j = j0 - 1;
            loop {
                let (e, m, w) = term(j)?;
                if w < floor && s0 + step * j as f64 <= 0.0 {
                    truncation.near_zero = m * weight(-f64::MIN_POSITIVE) / (1.0 - (-step).exp());
                    break;
                }
                points.push((e, m));
                j -= 1;
                if (j0 - j) as usize > MAX_SHEETS {
                    bail!(Range, "too many point masses above the floor");
                }
            }
            points.sort_by(|a, b| b.0.total_cmp(&a.0));
        }
    }
    Ok(SpectralMeasure { point, points, truncation })
}

/// `∫ φ d𝒱 = Σ m_k φ(E_k) + ∫₀^∞ t(E) φ(E) dE`, the continuous part by adaptive
/// Gauss–Kronrod in `s = ln E` to absolute tolerance `quad_tol`.
pub fn integrate_measure(measure: &SpectralMeasure, phi: &dyn Fn(f64) -> f64, quad_tol: f64) -> Result<f64> {
    finite(quad_tol, "quad_tol")?;
    if quad_tol <= 0.0 {
        bail!(InvalidArgument, "quad_tol must be positive");
    }
    let point = measure.point;
    require_below_one(point.alpha)?;
    let discrete: Vec<f64> = measure.points.iter().map(|&(e, m)| m * phi(e)).collect();
    let mut f = |s: f64| {
        let e = s.exp();
        e * phi(e) / big_t_log(point, s, 0.0)
    };
    let n = ((S_MAX - S_MIN) / S_PANEL) as usize;
    let breaks: Vec<f64> = (0..=n).map(|i| S_MIN + S_PANEL * i as f64).collect();
    let cont = integrate_adaptive(&mut f, &breaks, quad_tol, PANEL_BUDGET)?;
    Ok(pairwise_sum(&discrete) + cont.value)
}
