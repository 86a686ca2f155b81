//! Series and large-argument sums behind the radial solutions.
//!
//! `X_κ(ζ) = 2^{−κ} Σ (−ζ/4)^n / (Γ(κ+n+1) n!)` and
//! `𝒴(ζ) = Σ_{n≥1} c_n (−ζ/4)^n / (n!)²` (harmonic numbers `c_n`) are summed in
//! double precision for small `|ζ|` and in double-double up to `|ζ| = ASYM_RADIUS²`.
//! Beyond that the Hankel expansions take over.

use core::f64::consts::{FRAC_PI_4, PI};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::dd::{Cdd, Dd};
use crate::gamma::rgamma;

/// `|√ζ|` at and above which the Hankel expansions are used.
pub(crate) const ASYM_RADIUS: f64 = 20.0;
const PLAIN_SERIES_RADIUS: f64 = 16.0;
const MAX_TERMS: usize = 400;
const STOP: f64 = 1e-17;

type C = Complex64;

fn past_peak(n: usize, q: f64) -> bool {
    (n as f64) * (n as f64) > 4.0 * q + 4.0
}

/// `(X_κ(ζ), X_κ′(ζ))`, valid for any `ζ` but intended for `|ζ| < ASYM_RADIUS²`.
pub(crate) fn x_series(kappa: C, zeta: C) -> (C, C) {
    if kappa.im == 0.0 && kappa.re < 0.0 && kappa.re == kappa.re.round() {
        // X_{−m}(ζ) = (−1)^m ζ^m X_m(ζ)
        let m = (-kappa.re) as i32;
        let (x, dx) = x_series(C::new(m as f64, 0.0), zeta);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let zm = zeta.powi(m);
        let dzm = if m == 0 { C::new(0.0, 0.0) } else { zeta.powi(m - 1) * m as f64 };
        return (zm * x * sign, (dzm * x + zm * dx) * sign);
    }
    let c0 = (-kappa * core::f64::consts::LN_2).exp() * rgamma(kappa + 1.0);
    let q = -zeta * 0.25;
    let (s, d) = if zeta.norm() < PLAIN_SERIES_RADIUS {
        x_sum_plain(kappa, q)
    } else {
        x_sum_dd(kappa, q)
    };
    (c0 * s, c0 * d)
}

fn x_sum_plain(kappa: C, q: C) -> (C, C) {
    let mut t = C::new(1.0, 0.0);
    let mut sum = t;
    let mut dsum = C::new(0.0, 0.0);
    let qn = q.norm();
    for n in 1..MAX_TERMS {
        let inv = (kappa + n as f64).inv();
        let ti = t * inv;
        dsum += ti * -0.25;
        t = ti * q / n as f64;
        sum += t;
        if past_peak(n, qn) && t.norm() <= STOP * sum.norm() && ti.norm() <= STOP * dsum.norm() {
            break;
        }
    }
    (sum, dsum)
}

fn x_sum_dd(kappa: C, q: C) -> (C, C) {
    let kre = Dd::new(kappa.re);
    let kim = Dd::new(kappa.im);
    let qd = Cdd::new(q);
    let quarter = Dd::new(-0.25);
    let mut t = Cdd::new(C::new(1.0, 0.0));
    let mut sum = t;
    let mut dsum = Cdd::ZERO;
    let qn = q.norm();
    for n in 1..MAX_TERMS {
        let nd = Dd::new(n as f64);
        let inv = Cdd::from_parts(kre + nd, kim).recip();
        let ti = t * inv;
        dsum = dsum + ti.scale(quarter);
        t = (ti * qd).scale(nd.recip());
        sum = sum + t;
        if past_peak(n, qn) {
            let (s, tt, d, tti) = (sum.to_c64(), t.to_c64(), dsum.to_c64(), ti.to_c64());
            if tt.norm() <= STOP * s.norm() && tti.norm() <= STOP * d.norm() {
                break;
            }
        }
    }
    (sum.to_c64(), dsum.to_c64())
}

/// `(𝒴(ζ), 𝒴′(ζ))` by the power series.
pub(crate) fn y_series(zeta: C) -> (C, C) {
    let q = -zeta * 0.25;
    let qn = q.norm();
    if zeta.norm() < PLAIN_SERIES_RADIUS {
        let mut p = C::new(1.0, 0.0);
        let mut c = 0.0;
        let mut sum = C::new(0.0, 0.0);
        let mut dsum = C::new(0.0, 0.0);
        for n in 1..MAX_TERMS {
            let nf = n as f64;
            c += 1.0 / nf;
            let dterm = p * (-0.25 * c / nf);
            p = p * q / (nf * nf);
            let term = p * c;
            sum += term;
            dsum += dterm;
            if past_peak(n, qn) && term.norm() <= STOP * sum.norm() && dterm.norm() <= STOP * dsum.norm() {
                break;
            }
        }
        return (sum, dsum);
    }
    let qd = Cdd::new(q);
    let one = Dd::new(1.0);
    let mut p = Cdd::new(C::new(1.0, 0.0));
    let mut c = Dd::ZERO;
    let mut sum = Cdd::ZERO;
    let mut dsum = Cdd::ZERO;
    for n in 1..MAX_TERMS {
        let nd = Dd::new(n as f64);
        let inv_n = one.div(nd);
        c = c + inv_n;
        let dterm = p.scale(Dd::new(-0.25) * c * inv_n);
        p = (p * qd).scale(inv_n * inv_n);
        let term = p.scale(c);
        sum = sum + term;
        dsum = dsum + dterm;
        if past_peak(n, qn) {
            let (s, tt, d, dt) = (sum.to_c64(), term.to_c64(), dsum.to_c64(), dterm.to_c64());
            if tt.norm() <= STOP * s.norm() && dt.norm() <= STOP * d.norm() {
                break;
            }
        }
    }
    (sum.to_c64(), dsum.to_c64())
}

/// Hankel asymptotic sums `P_±(w) = Σ (±i)^k a_k(ν)/w^k` and their `w`-derivatives,
/// with `a_k(ν) = Π_{j≤k} (4ν² − (2j−1)²) / (k! 8^k)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HankelSums {
    pub plus: C,
    pub minus: C,
    pub dplus: C,
    pub dminus: C,
}

pub(crate) fn hankel_sums(nu2: C, w: C) -> HankelSums {
    let winv = w.inv();
    let mut a = C::new(1.0, 0.0);
    let mut wk = C::new(1.0, 0.0);
    let mut out = HankelSums {
        plus: C::new(1.0, 0.0),
        minus: C::new(1.0, 0.0),
        dplus: C::new(0.0, 0.0),
        dminus: C::new(0.0, 0.0),
    };
    let mut prev = f64::INFINITY;
    let mut ipow = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a = a * (nu2 * 4.0 - odd * odd) / (8.0 * k as f64);
        wk *= winv;
        let term = a * wk;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        prev = mag;
        ipow *= i;
        let kf = k as f64;
        let mpow = ipow.conj();
        out.plus += ipow * term;
        out.minus += mpow * term;
        out.dplus -= ipow * term * winv * kf;
        out.dminus -= mpow * term * winv * kf;
        if mag <= STOP {
            break;
        }
    }
    out
}

/// The two travelling waves `e^{±i(w−π/4)} P_±(w)` at `w = r s`, with their
/// derivatives in `r`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Waves {
    pub out: C,
    pub dout: C,
    pub inc: C,
    pub dinc: C,
}

pub(crate) fn waves(nu2: C, s: C, r: f64) -> Waves {
    let w = s * r;
    let h = hankel_sums(nu2, w);
    let i = C::new(0.0, 1.0);
    let e1 = (i * (w - FRAC_PI_4)).exp();
    let e2 = (-i * (w - FRAC_PI_4)).exp();
    Waves {
        out: e1 * h.plus,
        dout: e1 * s * (i * h.plus + h.dplus),
        inc: e2 * h.minus,
        dinc: e2 * s * (-i * h.minus + h.dminus),
    }
}

/// `½ √(2/(π s))`, the `r`-independent prefactor of the waves in `√r J(rs)`.
pub(crate) fn wave_prefactor(s: C) -> C {
    (C::new(2.0 / PI, 0.0) / s).sqrt() * 0.5
}

/// `X_κ(ζ)` and `X_κ′(ζ)` for large `|ζ|` from `X_κ(ζ) = ζ^{−κ/2} J_κ(ζ^{1/2})`.
pub(crate) fn x_asymptotic(kappa: C, zeta: C) -> (C, C) {
    let s = zeta.sqrt();
    let x_of = |k: C| {
        let wv = waves(k * k, s, 1.0);
        let phase = (C::new(0.0, -PI / 2.0) * k).exp();
        // s^{-κ} J_κ(s) = s^{-κ} √(2/(πs)) ½ [e^{−iπκ/2} out + e^{iπκ/2} in]
        (-k * s.ln()).exp() * wave_prefactor(s) * (phase * wv.out + wv.inc / phase)
    };
    let x = x_of(kappa);
    let x1 = x_of(kappa + 1.0);
    (x, x1 * -0.5)
}

/// `(K_ν(ξ), K_ν′(ξ))` from `K_ν(ξ) = ∫₀^∞ e^{−ξ cosh t} cosh(νt) dt`, `Re ξ > 0`,
/// with `cosh(νt) = Cos(−ν²t²)`. Trapezoid rule; the step is set by the strip of
/// analyticity around the real `t` axis.
pub(crate) fn k_integral(nu2: f64, xi: C) -> (C, C) {
    use crate::entire::cos_r;
    let strip = if xi.im == 0.0 { FRAC_PI_4 * 2.0 } else { (xi.re / xi.im.abs()).atan() };
    let h = 2.0 * PI * 0.8 * strip.min(1.2) / 40.0;
    let t_max = (800.0 / xi.re).max(1.0).acosh() + 2.0;
    let n = (t_max / h).ceil() as usize;
    let mut k = C::new(0.0, 0.0);
    let mut dk = C::new(0.0, 0.0);
    for j in 0..=n {
        let t = j as f64 * h;
        let ch = t.cosh();
        let e = (-xi * ch).exp() * cos_r(-nu2 * t * t);
        let wt = if j == 0 { 0.5 } else { 1.0 };
        k += e * wt;
        dk -= e * (ch * wt);
        if j > 0 && e.norm() * ch < 1e-18 * k.norm() && xi.re * ch > 40.0 {
            break;
        }
    }
    (k * h, dk * h)
}
