//! Seeded instance generators.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{is_convex_position, orientation, Orientation, Point, PointSet};
use crate::grid::Grid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    ConvexRandom,
    RegularNgon,
    SymmetricConvex,
    Grid,
    GeneralRandom,
}

impl std::str::FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "convex-random" => InstanceKind::ConvexRandom,
            "regular-ngon" => InstanceKind::RegularNgon,
            "symmetric-convex" => InstanceKind::SymmetricConvex,
            "grid" => InstanceKind::Grid,
            "general-random" => InstanceKind::GeneralRandom,
            other => return Err(Error::Spec(format!("unknown instance kind {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    /// Point count; unused for grids.
    pub n: usize,
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    pub scale: f64,
}

impl InstanceSpec {
    pub fn points(kind: InstanceKind, n: usize, seed: u64) -> Self {
        InstanceSpec { kind, n, rows: 0, cols: 0, seed, scale: 1.0 }
    }

    pub fn grid(rows: usize, cols: usize, seed: u64) -> Self {
        InstanceSpec { kind: InstanceKind::Grid, n: rows * cols, rows, cols, seed, scale: 1.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Points(PointSet),
    Grid(Grid),
}

impl Instance {
    pub fn into_points(self) -> Option<PointSet> {
        match self {
            Instance::Points(p) => Some(p),
            Instance::Grid(_) => None,
        }
    }

    pub fn into_grid(self) -> Option<Grid> {
        match self {
            Instance::Grid(g) => Some(g),
            Instance::Points(_) => None,
        }
    }
}

const MAX_ATTEMPTS: usize = 1000;

pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    if !(spec.scale > 0.0 && spec.scale.is_finite()) {
        return Err(Error::Spec(format!("scale must be positive, got {}", spec.scale)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        InstanceKind::Grid => {
            if spec.rows == 0 || spec.cols == 0 {
                return Err(Error::Spec("grid needs rows >= 1 and cols >= 1".into()));
            }
            let mut lines = |count: usize| -> Vec<f64> {
                let mut acc = 0.0;
                (0..count)
                    .map(|i| {
                        if i > 0 {
                            acc += rng.gen_range(1.0..=10.0) * spec.scale;
                        }
                        acc
                    })
                    .collect()
            };
            let ys = lines(spec.rows);
            let xs = lines(spec.cols);
            Ok(Instance::Grid(Grid::new(xs, ys)?))
        }
        _ if spec.n == 0 => Err(Error::Spec("n must be at least 1".into())),
        InstanceKind::RegularNgon => Ok(Instance::Points(regular_ngon(spec.n, spec.scale))),
        InstanceKind::ConvexRandom => convex_random(&mut rng, spec.n, spec.scale).map(Instance::Points),
        InstanceKind::SymmetricConvex => {
            if !spec.n.is_multiple_of(2) {
                return Err(Error::Spec(format!("symmetric-convex needs even n, got {}", spec.n)));
            }
            symmetric_convex(&mut rng, spec.n / 2, spec.scale).map(Instance::Points)
        }
        InstanceKind::GeneralRandom => general_random(&mut rng, spec.n, spec.scale).map(Instance::Points),
    }
}

/// Vertices of a regular n-gon with circumradius `scale`, bottom edge
/// horizontal.
pub fn regular_ngon(n: usize, scale: f64) -> PointSet {
    let start = -PI / 2.0 + PI / n as f64;
    let pts = (0..n)
        .map(|k| {
            let t = start + TAU * k as f64 / n as f64;
            Point::new(scale * t.cos(), scale * t.sin())
        })
        .collect();
    PointSet::new(pts).expect("distinct polygon vertices")
}

/// Random smooth convex curve `r(t) = 1 + sum a_k cos(k t + phi_k)` under a
/// random affine stretch. Harmonic amplitudes satisfy
/// `sum a_k <= 0.3` and `sum a_k k^2 <= 0.3`, which keeps the curvature
/// positive.
struct ConvexCurve {
    harmonics: Vec<(f64, f64, f64)>,
    sx: f64,
    sy: f64,
    rot: f64,
}

impl ConvexCurve {
    fn random(rng: &mut impl Rng, even_only: bool) -> Self {
        let ks: &[f64] = if even_only { &[2.0, 4.0] } else { &[2.0, 3.0, 4.0] };
        let weights: Vec<f64> = ks.iter().map(|_| rng.gen_range(0.0..1.0)).collect();
        let norm: f64 = weights.iter().zip(ks).map(|(w, k)| w * k * k).sum::<f64>().max(1e-12);
        let harmonics = ks
            .iter()
            .zip(&weights)
            .map(|(&k, &w)| (k, 0.3 * w / norm, rng.gen_range(0.0..TAU)))
            .collect();
        ConvexCurve {
            harmonics,
            sx: rng.gen_range(0.5..=1.0),
            sy: rng.gen_range(0.5..=1.0),
            rot: rng.gen_range(0.0..PI),
        }
    }

    fn at(&self, t: f64, scale: f64) -> Point {
        let r = 1.0 + self.harmonics.iter().map(|&(k, a, phi)| a * (k * t + phi).cos()).sum::<f64>();
        let (x, y) = (self.sx * r * t.cos(), self.sy * r * t.sin());
        let (s, c) = self.rot.sin_cos();
        Point::new(scale * (c * x - s * y), scale * (s * x + c * y))
    }
}

fn sorted_angles(rng: &mut impl Rng, n: usize, span: f64) -> Vec<f64> {
    let mut a: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..span)).collect();
    a.sort_by(f64::total_cmp);
    a
}

fn convex_random(rng: &mut impl Rng, n: usize, scale: f64) -> Result<PointSet> {
    for _ in 0..MAX_ATTEMPTS {
        let curve = ConvexCurve::random(rng, false);
        let pts = sorted_angles(rng, n, TAU).into_iter().map(|t| curve.at(t, scale)).collect();
        if let Ok(set) = PointSet::new(pts) {
            if n < 3 || is_convex_position(&set) {
                return Ok(set);
            }
        }
    }
    Err(Error::Spec(format!("could not generate {n} points in convex position")))
}

fn symmetric_convex(rng: &mut impl Rng, m: usize, scale: f64) -> Result<PointSet> {
    for _ in 0..MAX_ATTEMPTS {
        let curve = ConvexCurve::random(rng, true);
        let half: Vec<Point> = sorted_angles(rng, m, PI).into_iter().map(|t| curve.at(t, scale)).collect();
        let pts = half.iter().copied().chain(half.iter().map(|p| Point::new(-p.x, -p.y))).collect();
        if let Ok(set) = PointSet::new(pts) {
            if 2 * m < 3 || is_convex_position(&set) {
                return Ok(set);
            }
        }
    }
    Err(Error::Spec(format!("could not generate {} symmetric convex points", 2 * m)))
}

/// Uniform points in `[0, scale]^2`, rejecting any point that is
/// coincident or collinear with two earlier ones.
fn general_random(rng: &mut impl Rng, n: usize, scale: f64) -> Result<PointSet> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut rejected = 0;
    while pts.len() < n {
        let c = Point::new(rng.gen_range(0.0..scale), rng.gen_range(0.0..scale));
        let bad = pts.contains(&c)
            || pts.iter().enumerate().any(|(i, &a)| {
                pts[i + 1..].iter().any(|&b| orientation(a, b, c) == Orientation::Collinear)
            });
        if bad {
            rejected += 1;
            if rejected > MAX_ATTEMPTS * n.max(1) {
                return Err(Error::Spec("could not place points in general position".into()));
            }
            continue;
        }
        pts.push(c);
    }
    PointSet::new(pts)
}
