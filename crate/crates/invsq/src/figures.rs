//! Grids behind the phase diagram, the eigenvalue branches, the density map and the
//! m-plane map.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

use invsq_core::solutions::CouplingPoint;
use invsq_core::spectral::{frak_t, j_func, phase_region, reduce_theta, s_func};
use invsq_core::Result;

use crate::grid::GridSpec;
use crate::table::Table;

/// The four boundary angles shown in the branch and density figures; `π/2` stands
/// for `±π/2`.
pub const FIGURE_THETAS: [f64; 4] = [FRAC_PI_2, -FRAC_PI_3, 0.0, FRAC_PI_6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    PhaseDiagram,
    EigenBranches,
    DensityMap,
    MPlane,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::PhaseDiagram, Figure::EigenBranches, Figure::DensityMap, Figure::MPlane];

    pub fn id(&self) -> &'static str {
        match self {
            Figure::PhaseDiagram => "phase-diagram",
            Figure::EigenBranches => "eigen-branches",
            Figure::DensityMap => "density-map",
            Figure::MPlane => "m-plane",
        }
    }

    /// Generates the figure with its default parameters.
    pub fn render_default(&self) -> Result<Table> {
        match self {
            Figure::PhaseDiagram => PhaseDiagram::default().render(),
            Figure::EigenBranches => EigenBranches::default().render(),
            Figure::DensityMap => DensityMap::default().render(),
            Figure::MPlane => MPlane::default().render(),
        }
    }
}

/// Region label on an `(α, ϑ)` grid. The default is the 50×50 cell-centre grid in
/// `α` over `(−4, 1)` and the right cell edges in `ϑ` over `(−π, π]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDiagram {
    pub alphas: GridSpec,
    pub thetas: GridSpec,
}

impl Default for PhaseDiagram {
    fn default() -> Self {
        PhaseDiagram {
            alphas: GridSpec::Lin { a: -3.95, b: 0.95, n: 50 },
            thetas: GridSpec::Lin { a: -PI + 2.0 * PI / 50.0, b: PI, n: 50 },
        }
    }
}

impl PhaseDiagram {
    pub fn render(&self) -> Result<Table> {
        let mut t = Table::new(&["alpha", "theta", "region"]);
        for alpha in self.alphas.points() {
            for theta in self.thetas.points() {
                let region = phase_region(CouplingPoint::new(alpha, theta)?)?;
                t.push(vec![alpha.into(), theta.into(), region.label().into()]);
            }
        }
        Ok(t)
    }
}

/// Points `(α, s)` with `s = S(α, ϑ + πk)` inside an `s` window, one row per branch.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBranches {
    pub thetas: Vec<f64>,
    pub alphas: GridSpec,
    pub s_window: (f64, f64),
}

impl Default for EigenBranches {
    fn default() -> Self {
        EigenBranches {
            thetas: FIGURE_THETAS.to_vec(),
            alphas: GridSpec::Lin { a: -4.0, b: 1.0, n: 201 },
            s_window: (-20.0, 20.0),
        }
    }
}

impl EigenBranches {
    pub fn render(&self) -> Result<Table> {
        let (lo, hi) = self.s_window;
        let mut t = Table::new(&["theta", "alpha", "branch", "s"]);
        for &theta in &self.thetas {
            for alpha in self.alphas.points() {
                if alpha >= 1.0 {
                    continue;
                }
                let mut push = |k: i64, s: f64| {
                    if (lo..=hi).contains(&s) {
                        t.push(vec![theta.into(), alpha.into(), k.into(), s.into()]);
                    }
                };
                if alpha < 0.0 {
                    let step = 2.0 * PI / (-alpha).sqrt();
                    let s0 = s_func(alpha, theta)?;
                    let k_lo = ((lo - s0) / step).ceil() as i64;
                    let k_hi = ((hi - s0) / step).floor() as i64;
                    for k in k_lo - 1..=k_hi + 1 {
                        push(k, s_func(alpha, theta + PI * k as f64)?);
                    }
                } else {
                    let (hat, m) = reduce_theta(theta);
                    if let Ok(s) = s_func(alpha, hat) {
                        push(-m, s);
                    }
                }
            }
        }
        Ok(t)
    }
}

/// The normalized density `𝔱_ϑ(α, s)` on an `(α, s)` grid for each `ϑ`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMap {
    pub thetas: Vec<f64>,
    pub alphas: GridSpec,
    pub s: GridSpec,
}

impl Default for DensityMap {
    fn default() -> Self {
        DensityMap {
            thetas: FIGURE_THETAS.to_vec(),
            alphas: GridSpec::Lin { a: -4.0, b: 0.9, n: 50 },
            s: GridSpec::Lin { a: -10.0, b: 10.0, n: 41 },
        }
    }
}

impl DensityMap {
    pub fn render(&self) -> Result<Table> {
        let mut t = Table::new(&["theta", "alpha", "s", "frak_t"]);
        let ss = self.s.points();
        for &theta in &self.thetas {
            for alpha in self.alphas.points() {
                let p = CouplingPoint::new(alpha, theta)?;
                for &s in &ss {
                    t.push(vec![theta.into(), alpha.into(), s.into(), frak_t(p, s)?.into()]);
                }
            }
        }
        Ok(t)
    }
}

/// `J_{α,ϑ}(s, φ)` on an `(s, φ)` grid with `0 ≤ φ < π`.
#[derive(Debug, Clone, PartialEq)]
pub struct MPlane {
    pub alpha: f64,
    pub theta: f64,
    pub s: GridSpec,
    pub phi: GridSpec,
}

impl Default for MPlane {
    fn default() -> Self {
        MPlane {
            alpha: -0.5,
            theta: FRAC_PI_6,
            s: GridSpec::Lin { a: -15.0, b: 15.0, n: 301 },
            phi: GridSpec::Lin { a: 0.0, b: 3.1, n: 32 },
        }
    }
}

impl MPlane {
    pub fn render(&self) -> Result<Table> {
        let p = CouplingPoint::new(self.alpha, self.theta)?;
        let mut t = Table::new(&["s", "phi", "J"]);
        let phis = self.phi.points();
        for s in self.s.points() {
            for &phi in &phis {
                t.push(vec![s.into(), phi.into(), j_func(p, s, phi)?.into()]);
            }
        }
        Ok(t)
    }
}
