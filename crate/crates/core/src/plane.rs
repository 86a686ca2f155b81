use core::f64::consts::{FRAC_PI_2, PI};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{bail, finite, Result};

/// A point `z = E e^{iφ}` of the plane cut along the ray `arg z = 3π/2`,
/// with `E > 0` and `φ ∈ (−π/2, 3π/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPlanePoint {
    modulus: f64,
    phase: f64,
}

impl CutPlanePoint {
    pub fn new(modulus: f64, phase: f64) -> Result<Self> {
        finite(modulus, "modulus")?;
        finite(phase, "phase")?;
        if modulus <= 0.0 {
            bail!(InvalidArgument, "modulus must be positive, got {modulus}");
        }
        if !(phase > -FRAC_PI_2 && phase < 1.5 * PI) {
            bail!(InvalidArgument, "phase {phase} outside (-pi/2, 3pi/2)");
        }
        Ok(CutPlanePoint { modulus, phase })
    }

    /// The representative of a nonzero complex number.
    pub fn from_complex(z: Complex64) -> Result<Self> {
        finite(z.re, "real part")?;
        finite(z.im, "imaginary part")?;
        if z.re == 0.0 && z.im == 0.0 {
            bail!(InvalidArgument, "z = 0 is not in the cut plane");
        }
        let mut phase = z.im.atan2(z.re);
        if phase <= -FRAC_PI_2 {
            phase += 2.0 * PI;
        }
        Self::new(z.norm(), phase)
    }

    /// A positive energy on the upper rim, `φ = 0`.
    pub fn positive(energy: f64) -> Result<Self> {
        Self::new(energy, 0.0)
    }

    /// A negative energy `−E`, `φ = π`.
    pub fn negative(energy: f64) -> Result<Self> {
        Self::new(energy.abs(), PI)
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.modulus, self.phase)
    }

    /// `ln z` on this branch.
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.modulus.ln(), self.phase)
    }

    /// `z^{1/2}` on this branch.
    pub fn sqrt(&self) -> Complex64 {
        Complex64::from_polar(self.modulus.sqrt(), 0.5 * self.phase)
    }

    /// `z^ρ = e^{ρ ln z}`.
    pub fn powc(&self, rho: Complex64) -> Complex64 {
        (rho * self.ln()).exp()
    }
}
