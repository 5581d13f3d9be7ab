//! Numerical certification of the two analytic stretch bounds used for
//! chains inside a lune.
//!
//! For a unit segment pq and a point v at distance x from q with angle
//! alpha at q,
//!
//! ```text
//! f(x, a) = (1 - x + a) / sqrt((x sin a)^2 + (1 - x cos a)^2)
//! g(x, a) = (2 (a + cos a) - (x + pi/3)) / sqrt((x sin a)^2 + (1 - x cos a)^2)
//! ```
//!
//! `f` is bounded by `sqrt(1 + (3 + 2 pi)^2 / 27)` on `0 < x <= 1`,
//! `0 < a <= pi/3`, and `g` by `2 pi / 3` on `0 < x <= 2 cos a`,
//! `pi/3 <= a <= pi/2`. Both are checked by a dense scan with local
//! refinement; the denominator is `|pv|`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on `f`.
pub fn f_bound() -> f64 {
    (1.0 + (3.0 + 2.0 * PI).powi(2) / 27.0).sqrt()
}

/// Upper bound on `g`.
pub const G_BOUND: f64 = 2.0 * PI / 3.0;

/// Lower x-limit used for `g`, whose domain is open at 0.
pub const G_X_MIN: f64 = 1e-9;

const BOUND_SLACK: f64 = 1e-9;
const REFINE_ROUNDS: usize = 3;

fn denominator(x: f64, alpha: f64) -> Result<f64> {
    let (s, c) = alpha.sin_cos();
    let d = ((x * s).powi(2) + (1.0 - x * c).powi(2)).sqrt();
    if d > 0.0 && d.is_finite() {
        Ok(d)
    } else {
        Err(Error::DomainError { x, alpha })
    }
}

pub fn eval_f(x: f64, alpha: f64) -> Result<f64> {
    Ok((1.0 - x + alpha) / denominator(x, alpha)?)
}

pub fn eval_g(x: f64, alpha: f64) -> Result<f64> {
    Ok((2.0 * (alpha + alpha.cos()) - (x + FRAC_PI_3)) / denominator(x, alpha)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundFunction {
    F,
    G,
}

impl std::str::FromStr for BoundFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(BoundFunction::F),
            "g" => Ok(BoundFunction::G),
            other => Err(Error::Spec(format!("unknown bound function {other:?}"))),
        }
    }
}

/// A rectangle in `(alpha, x)`; for `g` the x-range is further capped at
/// `2 cos alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundDomain {
    pub function: BoundFunction,
    pub x_range: (f64, f64),
    pub alpha_range: (f64, f64),
    pub steps: usize,
}

impl BoundDomain {
    /// `0 < x <= 1`, `0 < alpha <= pi/3`; the open ends are never sampled.
    pub fn f(steps: usize) -> Self {
        BoundDomain { function: BoundFunction::F, x_range: (0.0, 1.0), alpha_range: (0.0, FRAC_PI_3), steps }
    }

    /// `0 < x <= 2 cos alpha`, `pi/3 <= alpha <= pi/2`.
    pub fn g(steps: usize) -> Self {
        BoundDomain { function: BoundFunction::G, x_range: (G_X_MIN, 1.0), alpha_range: (FRAC_PI_3, FRAC_PI_2), steps }
    }

    pub fn for_function(function: BoundFunction, steps: usize) -> Self {
        match function {
            BoundFunction::F => Self::f(steps),
            BoundFunction::G => Self::g(steps),
        }
    }

    pub fn bound(&self) -> f64 {
        match self.function {
            BoundFunction::F => f_bound(),
            BoundFunction::G => G_BOUND,
        }
    }

    fn eval(&self, x: f64, alpha: f64) -> Option<f64> {
        match self.function {
            BoundFunction::F => eval_f(x, alpha).ok(),
            BoundFunction::G => eval_g(x, alpha).ok(),
        }
    }

    /// Whether `(x, alpha)` lies in the function's natural domain.
    fn admits(&self, x: f64, alpha: f64) -> bool {
        match self.function {
            BoundFunction::F => x > 0.0 && x <= 1.0 && alpha > 0.0 && alpha <= FRAC_PI_3,
            BoundFunction::G => {
                x >= G_X_MIN && x <= 2.0 * alpha.cos() && (FRAC_PI_3..=FRAC_PI_2).contains(&alpha)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub function: BoundFunction,
    pub max: f64,
    pub argmax_x: f64,
    pub argmax_alpha: f64,
    pub bound: f64,
    pub satisfied: bool,
}

/// `steps + 1` equally spaced samples of `[lo, hi]`, both ends included.
/// Points outside the open domain are filtered out by the caller.
fn samples(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> + Clone {
    let h = (hi - lo) / steps as f64;
    (0..=steps).map(move |i| if i == steps { hi } else { lo + h * i as f64 })
}

/// Best value over the box, scanning alpha rows in parallel.
fn scan_box(
    domain: &BoundDomain,
    x_range: (f64, f64),
    alpha_range: (f64, f64),
    steps: usize,
) -> Option<(f64, f64, f64)> {
    let alphas: Vec<f64> = samples(alpha_range.0, alpha_range.1, steps).collect();
    alphas
        .par_iter()
        .filter_map(|&alpha| {
            let x_hi = match domain.function {
                BoundFunction::F => x_range.1,
                BoundFunction::G => x_range.1.min(2.0 * alpha.cos()),
            };
            if x_hi < x_range.0 {
                return None;
            }
            samples(x_range.0, x_hi, steps)
                .filter(|&x| domain.admits(x, alpha))
                .filter_map(|x| domain.eval(x, alpha).map(|v| (v, x, alpha)))
                .max_by(|a, b| a.0.total_cmp(&b.0))
        })
        .max_by(|a, b| a.0.total_cmp(&b.0))
}

/// Dense grid scan followed by [`REFINE_ROUNDS`] rounds of re-gridding one
/// cell around the running argmax.
pub fn scan_max(domain: &BoundDomain) -> ScanResult {
    assert!(domain.steps >= 2, "scan needs at least 2 steps per axis");
    let (mut best, mut bx, mut ba) = scan_box(domain, domain.x_range, domain.alpha_range, domain.steps)
        .expect("domain contains sample points");
    let mut hx = (domain.x_range.1 - domain.x_range.0) / domain.steps as f64;
    let mut ha = (domain.alpha_range.1 - domain.alpha_range.0) / domain.steps as f64;
    for _ in 0..REFINE_ROUNDS {
        let xr = ((bx - hx).max(domain.x_range.0), (bx + hx).min(domain.x_range.1));
        let ar = ((ba - ha).max(domain.alpha_range.0), (ba + ha).min(domain.alpha_range.1));
        if let Some((v, x, a)) = scan_box(domain, xr, ar, domain.steps) {
            if v > best {
                (best, bx, ba) = (v, x, a);
            }
        }
        hx = (xr.1 - xr.0) / domain.steps as f64;
        ha = (ar.1 - ar.0) / domain.steps as f64;
    }
    let bound = domain.bound();
    ScanResult {
        function: domain.function,
        max: best,
        argmax_x: bx,
        argmax_alpha: ba,
        bound,
        satisfied: best <= bound + BOUND_SLACK,
    }
}
