//! The entire functions `Cos ζ = Σ (−ζ)^k/(2k)!` and `Sinc ζ = Σ (−ζ)^k/(2k+1)!`.
//!
//! For real `ξ ≥ 0` they are `cos √ξ` and `sin √ξ / √ξ`; for `ξ < 0` the hyperbolic
//! counterparts. Small arguments use the power series, larger ones the closed forms.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{finite, Error, Result};

const SERIES_RADIUS: f64 = 1.0;
const SERIES_REL_TOL: f64 = 1e-18;
const SERIES_MAX_TERMS: usize = 200;

fn series_real(x: f64, first: f64, denom: impl Fn(usize) -> f64) -> f64 {
    let mut term = first;
    let mut sum = first;
    let mut peak = first.abs();
    for k in 1..SERIES_MAX_TERMS {
        term *= -x / denom(k);
        sum += term;
        peak = peak.max(sum.abs());
        if term.abs() <= SERIES_REL_TOL * peak {
            break;
        }
    }
    sum
}

fn series_complex(z: Complex64, first: f64, denom: impl Fn(usize) -> f64) -> Complex64 {
    let mut term = Complex64::new(first, 0.0);
    let mut sum = term;
    let mut peak = first.abs();
    for k in 1..SERIES_MAX_TERMS {
        term = term * (-z) / denom(k);
        sum += term;
        peak = peak.max(sum.norm());
        if term.norm() <= SERIES_REL_TOL * peak {
            break;
        }
    }
    sum
}

fn cos_denom(k: usize) -> f64 {
    ((2 * k - 1) * (2 * k)) as f64
}

fn sinc_denom(k: usize) -> f64 {
    ((2 * k) * (2 * k + 1)) as f64
}

/// `Cos ξ` for real `ξ`.
pub fn cos_r(x: f64) -> f64 {
    if x.abs() < SERIES_RADIUS {
        series_real(x, 1.0, cos_denom)
    } else if x > 0.0 {
        x.sqrt().cos()
    } else {
        (-x).sqrt().cosh()
    }
}

/// `Sinc ξ` for real `ξ`.
pub fn sinc_r(x: f64) -> f64 {
    if x.abs() < SERIES_RADIUS {
        series_real(x, 1.0, sinc_denom)
    } else if x > 0.0 {
        let w = x.sqrt();
        w.sin() / w
    } else {
        let w = (-x).sqrt();
        w.sinh() / w
    }
}

/// `Cos′ ξ` for real `ξ`.
pub fn cos_deriv_r(x: f64) -> f64 {
    if x.abs() < SERIES_RADIUS {
        // Σ_{k≥1} (−1)^k k ξ^{k−1} / (2k)!, written as −½ Σ_j (−ξ)^j (j+1)/((2j+2)! / 2)
        let mut fact = 2.0; // (2k)! at k = 1
        let mut pow = 1.0; // ξ^{k−1}
        let mut sum = -0.5;
        for k in 2..SERIES_MAX_TERMS {
            fact *= ((2 * k - 1) * (2 * k)) as f64;
            pow *= x;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let term = sign * k as f64 * pow / fact;
            sum += term;
            if term.abs() <= SERIES_REL_TOL * sum.abs() {
                break;
            }
        }
        sum
    } else {
        -0.5 * sinc_r(x)
    }
}

/// `Cos ζ` for complex `ζ` without argument checks.
pub fn cos_c(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(cos_r(z.re), 0.0);
    }
    if z.norm() < SERIES_RADIUS {
        series_complex(z, 1.0, cos_denom)
    } else {
        z.sqrt().cos()
    }
}

/// `Sinc ζ` for complex `ζ` without argument checks.
pub fn sinc_c(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(sinc_r(z.re), 0.0);
    }
    if z.norm() < SERIES_RADIUS {
        series_complex(z, 1.0, sinc_denom)
    } else {
        let w = z.sqrt();
        w.sin() / w
    }
}

/// `Cos′ ζ` for complex `ζ` without argument checks.
pub fn cos_deriv_c(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(cos_deriv_r(z.re), 0.0);
    }
    if z.norm() < SERIES_RADIUS {
        let mut fact = 2.0;
        let mut pow = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(-0.5, 0.0);
        for k in 2..SERIES_MAX_TERMS {
            fact *= ((2 * k - 1) * (2 * k)) as f64;
            pow *= z;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let term = pow * (sign * k as f64 / fact);
            sum += term;
            if term.norm() <= SERIES_REL_TOL * sum.norm() {
                break;
            }
        }
        sum
    } else {
        sinc_c(z) * -0.5
    }
}

fn check(z: Complex64) -> Result<Complex64> {
    finite(z.re, "real part")?;
    finite(z.im, "imaginary part")?;
    Ok(z)
}

fn check_out(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range(alloc::format!("value overflows: {v}")))
    }
}

/// Checked `Cos ζ`.
pub fn cos_entire(z: Complex64) -> Result<Complex64> {
    check_out(cos_c(check(z)?))
}

/// Checked `Sinc ζ`.
pub fn sinc_entire(z: Complex64) -> Result<Complex64> {
    check_out(sinc_c(check(z)?))
}

/// Checked `Cos′ ζ`.
pub fn cos_entire_deriv(z: Complex64) -> Result<Complex64> {
    check_out(cos_deriv_c(check(z)?))
}
