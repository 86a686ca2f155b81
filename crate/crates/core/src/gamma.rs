//! Reciprocal gamma function for complex argument (Lanczos, g = 7, with reflection).

use core::f64::consts::PI;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

const G: f64 = 7.0;
const COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `1/Γ(z)`; exact zeros at the non-positive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Complex64::new(0.0, 0.0);
    }
    if z.im == 0.0 && z.re >= 1.0 && z.re <= 30.0 && z.re == z.re.round() {
        let mut f = 1.0;
        for k in 2..(z.re as u32) {
            f *= k as f64;
        }
        return Complex64::new(1.0 / f, 0.0);
    }
    if z.re < 0.5 {
        // 1/Γ(z) = Γ(1 − z) sin(πz) / π
        let s = (z * PI).sin() / PI;
        return s / rgamma(Complex64::new(1.0, 0.0) - z);
    }
    let zm = z - 1.0;
    let mut x = Complex64::new(COEF[0], 0.0);
    for (i, c) in COEF.iter().enumerate().skip(1) {
        x += *c / (zm + i as f64);
    }
    let t = zm + (G + 0.5);
    let log_part = (zm + 0.5) * t.ln() - t;
    (-log_part).exp() / (x * (2.0 * PI).sqrt())
}
