//! Regular solutions `𝔲^κ`, `𝒜^α`, `ℬ^α`, `𝒰^α_ϑ` and the Weyl solution `𝒱^α` of
//! `−f″ + (α − ¼) r^{−2} f = z f` on the half-line, with their `r`-derivatives.
//!
//! Accuracy window: `r ∈ [1e−6, 1e3]`, `|z| ≤ 1e4`. Outside it values are returned
//! as long as they are finite.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};
use core::ops::{Add, Mul, Sub};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::bessel::{hankel_sums, k_integral, wave_prefactor, waves, x_asymptotic, x_series, y_series, ASYM_RADIUS};
use crate::entire::{cos_c, cos_r, sinc_c, sinc_r};
use crate::error::{bail, finite, Error, Result};
use crate::plane::CutPlanePoint;
use crate::quad::{gauss_legendre, gauss_legendre_panels};

type C = Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Below this `|α|` the κ-difference forms are replaced by a quadratic through
/// `α ∈ {−ALPHA_MIN, 0, ALPHA_MIN}`.
pub const ALPHA_MIN: f64 = 1e-4;
const INTEGER_GUARD: f64 = 1e-6;
/// Above this `Im(r√z)` the Weyl solution comes from the `K_κ` integral, since the
/// κ-form loses about `2 Im(r√z)/ln 10` digits to cancellation.
const K_INTEGRAL_MIN_IM: f64 = 2.0;

/// A self-adjoint realization: coupling `α` and boundary angle `ϑ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingPoint {
    pub alpha: f64,
    pub theta: f64,
}

impl CouplingPoint {
    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        finite(alpha, "alpha")?;
        finite(theta, "theta")?;
        Ok(CouplingPoint { alpha, theta })
    }

    pub fn root(&self) -> CouplingRoot {
        CouplingRoot::of(self.alpha)
    }
}

/// `κ` with `κ² = α`: `√α` for `α ≥ 0`, `i√|α|` otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingRoot {
    pub kappa: C,
}

impl CouplingRoot {
    pub fn of(alpha: f64) -> Self {
        let kappa = if alpha >= 0.0 {
            C::new(alpha.sqrt(), 0.0)
        } else {
            C::new(0.0, (-alpha).sqrt())
        };
        CouplingRoot { kappa }
    }

    pub fn alpha(&self) -> f64 {
        (self.kappa * self.kappa).re
    }
}

/// A value together with its derivative in `r`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet {
    pub value: C,
    pub deriv: C,
}

impl Jet {
    pub fn new(value: C, deriv: C) -> Self {
        Jet { value, deriv }
    }

    fn finite(self, what: &str) -> Result<Self> {
        let ok = [self.value, self.deriv].iter().all(|c| c.re.is_finite() && c.im.is_finite());
        if ok {
            Ok(self)
        } else {
            Err(Error::Range(alloc::format!("{what} overflows")))
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet::new(self.value + o.value, self.deriv + o.deriv)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet::new(self.value - o.value, self.deriv - o.deriv)
    }
}

impl Mul<C> for Jet {
    type Output = Jet;
    fn mul(self, s: C) -> Jet {
        Jet::new(self.value * s, self.deriv * s)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, s: f64) -> Jet {
        Jet::new(self.value * s, self.deriv * s)
    }
}

/// `W(f, g) = f g′ − f′ g` at a single radius.
pub fn wronskian_jets(f: Jet, g: Jet) -> C {
    f.value * g.deriv - f.deriv * g.value
}

fn check_c(z: C, what: &str) -> Result<()> {
    finite(z.re, what)?;
    finite(z.im, what)?;
    Ok(())
}

fn check_r(r: f64) -> Result<()> {
    finite(r, "r")?;
    if r <= 0.0 {
        bail!(InvalidArgument, "r must be positive, got {r}");
    }
    Ok(())
}

fn quadratic_in_alpha(minus: Jet, zero: Jet, plus: Jet, alpha: f64) -> Jet {
    let h = ALPHA_MIN;
    let d1 = (plus - minus) * (alpha / (2.0 * h));
    let d2 = (plus - zero * 2.0 + minus) * (alpha * alpha / (2.0 * h * h));
    zero + d1 + d2
}

fn asymptotic(z: C, r: f64) -> bool {
    z.norm().sqrt() * r >= ASYM_RADIUS
}

/// `X_κ(ζ) = 2^{−κ} Σ (−ζ)^n / (Γ(κ+n+1) n! 4^n)`.
pub fn xkappa(kappa: C, zeta: C) -> Result<C> {
    check_c(kappa, "kappa")?;
    check_c(zeta, "zeta")?;
    let v = if zeta.norm() < ASYM_RADIUS * ASYM_RADIUS {
        x_series(kappa, zeta).0
    } else {
        x_asymptotic(kappa, zeta).0
    };
    Jet::new(v, C::new(0.0, 0.0)).finite("X_kappa").map(|j| j.value)
}

/// `𝒴(ζ) = Σ_{n≥1} (−1)^n c_n ζ^n / ((n!)² 4^n)` with harmonic numbers `c_n`.
pub fn ycal(zeta: C) -> Result<C> {
    check_c(zeta, "zeta")?;
    let v = if zeta.norm() < ASYM_RADIUS * ASYM_RADIUS {
        y_series(zeta).0
    } else {
        // 𝔞⁰(ζ|1) = 2[(γ − ln 2) X₀(ζ) − 𝒴(ζ)]
        let a0 = asym_ab(0.0, zeta, 1.0).0.value;
        let x0 = x_asymptotic(C::new(0.0, 0.0), zeta).0;
        x0 * (EULER_GAMMA - core::f64::consts::LN_2) - a0 * 0.5
    };
    Jet::new(v, C::new(0.0, 0.0)).finite("Y").map(|j| j.value)
}

fn u_jet_raw(kappa: C, z: C, r: f64) -> Jet {
    let zeta = z * (r * r);
    if !asymptotic(z, r) {
        let (x, dx) = x_series(kappa, zeta);
        let rk = ((kappa + 0.5) * r.ln()).exp();
        Jet::new(rk * x, rk / r * ((kappa + 0.5) * x + zeta * dx * 2.0))
    } else {
        let s = z.sqrt();
        let wv = waves(kappa * kappa, s, r);
        let pre = wave_prefactor(s) * (-kappa * s.ln()).exp();
        let ph = (C::new(0.0, -FRAC_PI_2) * kappa).exp();
        Jet::new(
            pre * (ph * wv.out + wv.inc / ph),
            pre * (ph * wv.dout + wv.dinc / ph),
        )
    }
}

/// `𝔲^κ(z|r) = r^{1/2+κ} X_κ(r² z)` and its `r`-derivative.
pub fn u_kappa_jet(kappa: C, z: C, r: f64) -> Result<Jet> {
    check_c(kappa, "kappa")?;
    check_c(z, "z")?;
    check_r(r)?;
    u_jet_raw(kappa, z, r).finite("u_kappa")
}

pub fn u_kappa(kappa: C, z: C, r: f64) -> Result<C> {
    u_kappa_jet(kappa, z, r).map(|j| j.value)
}

fn a_kappa_raw(kappa: C, z: C, r: f64) -> Jet {
    let up = u_jet_raw(kappa, z, r);
    let um = u_jet_raw(-kappa, z, r);
    (up - um) * ((kappa * FRAC_PI_2).cos() / kappa)
}

fn b_kappa_raw(kappa: C, z: C, r: f64) -> Jet {
    let up = u_jet_raw(kappa, z, r);
    let um = u_jet_raw(-kappa, z, r);
    (up + um) * (sinc_c(kappa * kappa * (PI * PI / 4.0)) * FRAC_PI_2)
}

fn a0_jet(z: C, r: f64) -> Jet {
    let u0 = u_jet_raw(C::new(0.0, 0.0), z, r);
    let zeta = z * (r * r);
    let (y, dy) = y_series(zeta);
    let lg = (0.5 * r).ln() + EULER_GAMMA;
    let sr = r.sqrt();
    Jet::new(
        (u0.value * lg - y * sr) * 2.0,
        (u0.value / r + u0.deriv * lg - y / (2.0 * sr) - dy * z * (2.0 * r * sr)) * 2.0,
    )
}

/// `(𝒜, ℬ)` from the Hankel expansions; entire in `α`.
fn asym_ab(alpha: f64, z: C, r: f64) -> (Jet, Jet) {
    let s = z.sqrt();
    let l = s.ln();
    let i = C::new(0.0, 1.0);
    let x1 = l + i * FRAC_PI_2;
    let x2 = l - i * FRAC_PI_2;
    let wv = waves(C::new(alpha, 0.0), s, r);
    let pre = wave_prefactor(s);
    let ca = pre * (-2.0 * cos_r(PI * PI * alpha / 4.0));
    let a1 = x1 * sinc_c(-x1 * x1 * alpha);
    let a2 = x2 * sinc_c(-x2 * x2 * alpha);
    let cb = pre * (PI * sinc_r(PI * PI * alpha / 4.0));
    let b1 = cos_c(-x1 * x1 * alpha);
    let b2 = cos_c(-x2 * x2 * alpha);
    (
        Jet::new(ca * (a1 * wv.out + a2 * wv.inc), ca * (a1 * wv.dout + a2 * wv.dinc)),
        Jet::new(cb * (b1 * wv.out + b2 * wv.inc), cb * (b1 * wv.dout + b2 * wv.dinc)),
    )
}

fn a_jet_raw(alpha: f64, z: C, r: f64) -> Jet {
    if asymptotic(z, r) {
        return asym_ab(alpha, z, r).0;
    }
    if alpha.abs() >= ALPHA_MIN {
        return a_kappa_raw(CouplingRoot::of(alpha).kappa, z, r);
    }
    let minus = a_kappa_raw(CouplingRoot::of(-ALPHA_MIN).kappa, z, r);
    let plus = a_kappa_raw(CouplingRoot::of(ALPHA_MIN).kappa, z, r);
    quadratic_in_alpha(minus, a0_jet(z, r), plus, alpha)
}

fn b_jet_raw(alpha: f64, z: C, r: f64) -> Jet {
    if asymptotic(z, r) {
        return asym_ab(alpha, z, r).1;
    }
    b_kappa_raw(CouplingRoot::of(alpha).kappa, z, r)
}

/// `(𝒜, ℬ)` sharing the `𝔲^{±κ}` evaluations.
fn ab_jets_raw(alpha: f64, z: C, r: f64) -> (Jet, Jet) {
    if asymptotic(z, r) {
        return asym_ab(alpha, z, r);
    }
    let kappa = CouplingRoot::of(alpha).kappa;
    let up = u_jet_raw(kappa, z, r);
    let um = u_jet_raw(-kappa, z, r);
    let b = (up + um) * (sinc_c(kappa * kappa * (PI * PI / 4.0)) * FRAC_PI_2);
    let a = if alpha.abs() >= ALPHA_MIN {
        (up - um) * ((kappa * FRAC_PI_2).cos() / kappa)
    } else {
        a_jet_raw(alpha, z, r)
    };
    (a, b)
}

fn check_azr(alpha: f64, z: C, r: f64) -> Result<()> {
    finite(alpha, "alpha")?;
    check_c(z, "z")?;
    check_r(r)
}

/// κ-form `(𝔲^κ − 𝔲^{−κ}) cos(πκ/2) / κ`; `κ ≠ 0`.
pub fn a_kappa(kappa: C, z: C, r: f64) -> Result<Jet> {
    check_c(kappa, "kappa")?;
    check_c(z, "z")?;
    check_r(r)?;
    if kappa.norm() == 0.0 {
        bail!(InvalidArgument, "the kappa form of A needs kappa != 0");
    }
    a_kappa_raw(kappa, z, r).finite("A")
}

/// κ-form `(π/2)(𝔲^κ + 𝔲^{−κ}) sinc(πκ/2)`.
pub fn b_kappa(kappa: C, z: C, r: f64) -> Result<Jet> {
    check_c(kappa, "kappa")?;
    check_c(z, "z")?;
    check_r(r)?;
    b_kappa_raw(kappa, z, r).finite("B")
}

/// `𝒜^α(z|r)` and its `r`-derivative.
pub fn a_sol_jet(alpha: f64, z: C, r: f64) -> Result<Jet> {
    check_azr(alpha, z, r)?;
    a_jet_raw(alpha, z, r).finite("A")
}

pub fn a_sol(alpha: f64, z: C, r: f64) -> Result<C> {
    a_sol_jet(alpha, z, r).map(|j| j.value)
}

/// `ℬ^α(z|r)` and its `r`-derivative.
pub fn b_sol_jet(alpha: f64, z: C, r: f64) -> Result<Jet> {
    check_azr(alpha, z, r)?;
    b_jet_raw(alpha, z, r).finite("B")
}

pub fn b_sol(alpha: f64, z: C, r: f64) -> Result<C> {
    b_sol_jet(alpha, z, r).map(|j| j.value)
}

/// `𝒰^α_ϑ = 𝒜^α cos ϑ + ℬ^α sin ϑ` and its `r`-derivative.
pub fn u_theta_jet(point: CouplingPoint, z: C, r: f64) -> Result<Jet> {
    check_azr(point.alpha, z, r)?;
    finite(point.theta, "theta")?;
    let (s, c) = point.theta.sin_cos();
    let out = if c == 0.0 {
        b_jet_raw(point.alpha, z, r) * s
    } else if s == 0.0 {
        a_jet_raw(point.alpha, z, r) * c
    } else {
        let (a, b) = ab_jets_raw(point.alpha, z, r);
        a * c + b * s
    };
    out.finite("U_theta")
}

pub fn u_theta(point: CouplingPoint, z: C, r: f64) -> Result<C> {
    u_theta_jet(point, z, r).map(|j| j.value)
}

fn v_kappa_raw(kappa: C, z: CutPlanePoint, r: f64) -> Jet {
    let zc = z.to_complex();
    let half_ln = z.ln() * 0.5;
    let sp = (kappa * half_ln).exp();
    let sm = (-kappa * half_ln).exp();
    let up = u_jet_raw(kappa, zc, r);
    let um = u_jet_raw(-kappa, zc, r);
    let i = C::new(0.0, 1.0);
    let e = (i * kappa * FRAC_PI_2).exp();
    let scale = e * FRAC_PI_2 / (kappa * PI).sin();
    (um * sm - up * (sp / (e * e))) * scale
}

fn v0_jet(z: CutPlanePoint, r: f64) -> Jet {
    // H⁽¹⁾₀ = J₀ + iY₀ written through 𝒜⁰ and ℬ⁰ = π𝔲⁰
    let zc = z.to_complex();
    let a0 = a0_jet(zc, r);
    let u0 = u_jet_raw(C::new(0.0, 0.0), zc, r);
    let c = (C::new(0.0, PI) - z.ln()) * 0.5;
    a0 * -0.5 + u0 * c
}

fn near_nonzero_integer(kappa: C) -> bool {
    let n = kappa.re.round();
    n != 0.0 && kappa.im.abs() < INTEGER_GUARD && (kappa.re - n).abs() < INTEGER_GUARD
}

fn v_jet_raw(alpha: f64, z: CutPlanePoint, r: f64) -> Jet {
    let s = z.sqrt();
    if s.norm() * r >= ASYM_RADIUS {
        let wv = waves(C::new(alpha, 0.0), s, r);
        let c = wave_prefactor(s) * C::new(0.0, PI);
        return Jet::new(c * wv.out, c * wv.dout);
    }
    let w = s * r;
    if w.im > K_INTEGRAL_MIN_IM {
        // 𝒱 = √r K_κ(−i r s)
        let xi = C::new(w.im, -w.re);
        let (k, dk) = k_integral(alpha, xi);
        let sr = r.sqrt();
        return Jet::new(k * sr, k / (2.0 * sr) + dk * C::new(s.im, -s.re) * sr);
    }
    if alpha.abs() >= ALPHA_MIN {
        return v_kappa_raw(CouplingRoot::of(alpha).kappa, z, r);
    }
    let minus = v_kappa_raw(CouplingRoot::of(-ALPHA_MIN).kappa, z, r);
    let plus = v_kappa_raw(CouplingRoot::of(ALPHA_MIN).kappa, z, r);
    quadratic_in_alpha(minus, v0_jet(z, r), plus, alpha)
}

/// Weyl solution `𝒱^α(z|r)`, square integrable at infinity for `Im √z > 0`,
/// and its `r`-derivative.
pub fn v_sol_jet(alpha: f64, z: CutPlanePoint, r: f64) -> Result<Jet> {
    finite(alpha, "alpha")?;
    check_r(r)?;
    if near_nonzero_integer(CouplingRoot::of(alpha).kappa) {
        bail!(Unsupported, "kappa = sqrt({alpha}) is within {INTEGER_GUARD} of a nonzero integer");
    }
    v_jet_raw(alpha, z, r).finite("V")
}

pub fn v_sol(alpha: f64, z: CutPlanePoint, r: f64) -> Result<C> {
    v_sol_jet(alpha, z, r).map(|j| j.value)
}

/// κ-form of the Weyl solution, for non-integer `κ`.
pub fn v_kappa(kappa: C, z: CutPlanePoint, r: f64) -> Result<Jet> {
    check_c(kappa, "kappa")?;
    check_r(r)?;
    if kappa.im.abs() < INTEGER_GUARD && (kappa.re - kappa.re.round()).abs() < INTEGER_GUARD {
        bail!(Unsupported, "integer kappa {kappa}");
    }
    v_kappa_raw(kappa, z, r).finite("V")
}

/// `W(𝒜^α, ℬ^α) = −2π Sinc²(π²α)`.
pub fn wronskian_ab(alpha: f64) -> f64 {
    let s = sinc_r(PI * PI * alpha);
    -2.0 * PI * s * s
}

/// `W(𝔲^κ, 𝔲^{−κ}) = −(2/π) sin πκ`.
pub fn wronskian_u_pair(kappa: C) -> C {
    -(kappa * PI).sin() * (2.0 / PI)
}

/// Samples of a function on a strictly increasing radial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGridFunction {
    radii: Vec<f64>,
    values: Vec<C>,
    weights: Option<Vec<f64>>,
}

impl RadialGridFunction {
    pub fn new(radii: Vec<f64>, values: Vec<C>) -> Result<Self> {
        if radii.len() != values.len() {
            bail!(InvalidArgument, "{} radii but {} values", radii.len(), values.len());
        }
        if radii.is_empty() {
            bail!(InvalidArgument, "empty grid");
        }
        for &r in &radii {
            check_r(r)?;
        }
        if radii.windows(2).any(|w| !(w[1] > w[0])) {
            bail!(InvalidArgument, "radii must be strictly increasing");
        }
        Ok(RadialGridFunction { radii, values, weights: None })
    }

    pub fn from_real(radii: Vec<f64>, values: &[f64]) -> Result<Self> {
        Self::new(radii, values.iter().map(|&v| C::new(v, 0.0)).collect())
    }

    /// Evaluate `f` on the given radii.
    pub fn sample(radii: Vec<f64>, mut f: impl FnMut(f64) -> Result<C>) -> Result<Self> {
        let values = radii.iter().map(|&r| f(r)).collect::<Result<Vec<_>>>()?;
        Self::new(radii, values)
    }

    /// Sample `f` at composite Gauss–Legendre nodes on `[a, b]`, keeping the weights.
    pub fn gauss_legendre(a: f64, b: f64, panels: usize, order: usize, f: impl FnMut(f64) -> Result<C>) -> Result<Self> {
        if !(a > 0.0 && b > a) || panels == 0 || order == 0 {
            bail!(InvalidArgument, "bad Gauss-Legendre grid on [{a}, {b}]");
        }
        let (nodes, weights) = gauss_legendre_panels(a, b, panels, order);
        let mut g = Self::sample(nodes, f)?;
        g.weights = Some(weights);
        Ok(g)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    /// Same grid, new values.
    pub fn map(&self, mut f: impl FnMut(f64, C) -> C) -> Self {
        let values = self.radii.iter().zip(&self.values).map(|(&r, &v)| f(r, v)).collect();
        RadialGridFunction { radii: self.radii.clone(), values, weights: self.weights.clone() }
    }

    /// Quadrature weights for `∫ f dr` over `[r_first, r_last]`: the attached
    /// Gauss–Legendre weights if present, else the exact integral of the local
    /// cubic interpolant on each interval.
    pub fn quadrature_weights(&self) -> Vec<f64> {
        if let Some(w) = &self.weights {
            return w.clone();
        }
        let x = &self.radii;
        let n = x.len();
        let mut w = alloc::vec![0.0; n];
        if n == 1 {
            return w;
        }
        let (gx, gw) = gauss_legendre(2);
        for i in 0..n - 1 {
            let lo = i.saturating_sub(1).min(n.saturating_sub(4));
            let hi = (lo + 4).min(n);
            let (a, b) = (x[i], x[i + 1]);
            for (t, wt) in gx.iter().zip(&gw) {
                let p = 0.5 * (a + b) + 0.5 * (b - a) * t;
                for j in lo..hi {
                    let mut l = 1.0;
                    for k in lo..hi {
                        if k != j {
                            l *= (p - x[k]) / (x[j] - x[k]);
                        }
                    }
                    w[j] += 0.5 * (b - a) * wt * l;
                }
            }
        }
        w
    }

    pub fn integrate(&self) -> C {
        let w = self.quadrature_weights();
        self.values.iter().zip(&w).map(|(v, w)| v * w).sum()
    }
}

/// Finite-difference weights (Fornberg) for derivatives `0..=M` at `z` from `x`.
pub(crate) fn fd_weights<const M: usize>(z: f64, x: &[f64]) -> Vec<[f64; M]> {
    let n = x.len();
    let m = M - 1;
    let mut c = alloc::vec![[0.0; M]; n];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c
}

/// `W(f, g) = f g′ − f′ g` from five-point finite differences at the interior nodes
/// (two nodes dropped at each end). Fourth order on uniform and log-uniform grids.
pub fn wronskian_numeric(f: &RadialGridFunction, g: &RadialGridFunction) -> Result<RadialGridFunction> {
    if f.radii != g.radii {
        bail!(InvalidArgument, "Wronskian needs identical radial grids");
    }
    let n = f.len();
    if n < 5 {
        bail!(InvalidArgument, "Wronskian needs at least five grid points, got {n}");
    }
    let mut radii = Vec::with_capacity(n - 4);
    let mut values = Vec::with_capacity(n - 4);
    for i in 2..n - 2 {
        let w = fd_weights::<2>(f.radii[i], &f.radii[i - 2..=i + 2]);
        let mut df = C::new(0.0, 0.0);
        let mut dg = C::new(0.0, 0.0);
        for (k, wk) in w.iter().enumerate() {
            df += f.values[i - 2 + k] * wk[1];
            dg += g.values[i - 2 + k] * wk[1];
        }
        radii.push(f.radii[i]);
        values.push(f.values[i] * dg - df * g.values[i]);
    }
    RadialGridFunction::new(radii, values)
}

/// Asymptotic check helper: `hankel_sums` exposed for the Weyl solution tests.
#[doc(hidden)]
pub fn hankel_outgoing(alpha: f64, w: C) -> C {
    hankel_sums(C::new(alpha, 0.0), w).plus
}
