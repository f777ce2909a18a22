//! Scale-grid scans: beta profiles over geometric scale sequences, the
//! discretized wiggliness integral, wiggly/flat/porosity/convex-density
//! scale densities, and the dyadic square-sum functionals.
//!
//! All integrals are Riemann sums of f(t)^2 dt/t over the grid, evaluated
//! at the scale itself: log(1/lambda) * sum over k of f(lambda^k)^2.
//! Windows clamp to [guard * resolution, diameter]; nothing is
//! extrapolated below resolution.

use serde::{Deserialize, Serialize};

use crate::dyadic::{DyadicSquare, Square};
use crate::error::{Error, Result};
use crate::kernel::{self, BetaValue};
use crate::sample::TaggedSample;

/// Geometric scale grid lambda^k for k in [k_min, k_max].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaleGrid {
    pub lambda: f64,
    pub k_min: i32,
    pub k_max: i32,
}

impl ScaleGrid {
    pub fn new(lambda: f64, k_min: i32, k_max: i32) -> Result<ScaleGrid> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::InvalidInput(format!("lambda must be in (0,1), got {lambda}")));
        }
        if k_max < k_min {
            return Err(Error::NotEnoughScales { have: 0, need: 1 });
        }
        Ok(ScaleGrid { lambda, k_min, k_max })
    }

    /// Grid spanning [guard * resolution, diameter] of the sample.
    pub fn spanning(sample: &TaggedSample, lambda: f64, guard: f64) -> Result<ScaleGrid> {
        let floor = (guard * sample.resolution()).max(1e-300);
        let diam = sample.diameter();
        let k_min = (diam.ln() / lambda.ln()).ceil() as i32;
        let k_max = (floor.ln() / lambda.ln()).floor() as i32;
        ScaleGrid::new(lambda, k_min, k_max)
    }

    pub fn len(&self) -> usize {
        (self.k_max - self.k_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn scale(&self, i: usize) -> f64 {
        self.lambda.powi(self.k_min + i as i32)
    }

    /// Scales from coarsest (k_min) to finest (k_max).
    pub fn scales(&self) -> impl Iterator<Item = f64> + '_ {
        (self.k_min..=self.k_max).map(move |k| self.lambda.powi(k))
    }

    pub fn log_inv_lambda(&self) -> f64 {
        (1.0 / self.lambda).ln()
    }

    /// Drops scales below `floor`, keeping the grid nonempty when possible.
    pub fn clamped_below(&self, floor: f64) -> Result<ScaleGrid> {
        let k_max = (floor.ln() / self.lambda.ln()).floor() as i32;
        ScaleGrid::new(self.lambda, self.k_min, k_max.min(self.k_max))
    }
}

/// Per-point beta values over a scale grid, coarsest scale first.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BetaProfile {
    pub x: Vec<f64>,
    pub grid: ScaleGrid,
    pub beta: Vec<f64>,
    pub empty: Vec<bool>,
    pub approximate: Vec<bool>,
}

impl BetaProfile {
    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }
}

/// Fraction of qualifying scales in a window, with the prefix densities
/// that expose liminf/limsup behavior on finite data.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DensityEstimate {
    /// count of qualifying scales / window length, in [0, 1]
    pub value: f64,
    /// inclusive exponent window [k_min, k_max] the estimate used
    pub window: (i32, i32),
    /// defining cutoff (beta0, eps, or d0)
    pub threshold: f64,
    /// density over the first m scales, m = 1..=len (coarse to fine)
    pub prefix: Vec<f64>,
    /// running minimum of `prefix` (wiggly) or maximum (flat)
    pub prefix_extreme: f64,
}

/// Beta profile of the sample at x over the grid, truncating scales that
/// fall below the resolution guard instead of failing.
pub fn beta_profile(
    sample: &TaggedSample,
    x: &[f64],
    grid: &ScaleGrid,
    guard: f64,
) -> Result<BetaProfile> {
    let usable = grid.clamped_below(guard * sample.resolution())?;
    let mut beta = Vec::with_capacity(usable.len());
    let mut empty = Vec::with_capacity(usable.len());
    let mut approximate = Vec::with_capacity(usable.len());
    for r in usable.scales() {
        let BetaValue { beta: b, empty: e, approximate: a } = kernel::beta_ball(sample, x, r, 0.0)?;
        beta.push(b);
        empty.push(e);
        approximate.push(a);
    }
    Ok(BetaProfile { x: x.to_vec(), grid: usable, beta, empty, approximate })
}

/// Riemann-sum discretization of the wiggliness integral of beta^2 dt/t
/// over the profile window.
pub fn beta_integral(profile: &BetaProfile) -> f64 {
    profile.grid.log_inv_lambda() * profile.beta.iter().map(|b| b * b).sum::<f64>()
}

/// Fraction of scales at which beta >= beta0.
pub fn wiggly_density(profile: &BetaProfile, beta0: f64) -> DensityEstimate {
    density_of(profile, beta0, |b| b >= beta0, true)
}

/// Fraction of scales at which beta <= beta0.
pub fn flat_density(profile: &BetaProfile, beta0: f64) -> DensityEstimate {
    density_of(profile, beta0, |b| b <= beta0, false)
}

fn density_of(
    profile: &BetaProfile,
    threshold: f64,
    qualifies: impl Fn(f64) -> bool,
    track_min: bool,
) -> DensityEstimate {
    let n = profile.beta.len().max(1);
    let mut count = 0usize;
    let mut prefix = Vec::with_capacity(profile.beta.len());
    for (m, b) in profile.beta.iter().enumerate() {
        if qualifies(*b) {
            count += 1;
        }
        prefix.push(count as f64 / (m + 1) as f64);
    }
    let prefix_extreme = if track_min {
        prefix.iter().copied().fold(f64::INFINITY, f64::min)
    } else {
        prefix.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    };
    let prefix_extreme = if prefix.is_empty() { 0.0 } else { prefix_extreme };
    DensityEstimate {
        value: count as f64 / n as f64,
        window: (profile.grid.k_min, profile.grid.k_max),
        threshold,
        prefix,
        prefix_extreme,
    }
}

/// Fraction of grid scales at which the empty-disk search FAILS, i.e. the
/// sample is not eps-porous there. Scales whose eps*r falls below the
/// probe floor are dropped from the window.
pub fn porosity_density(
    sample: &TaggedSample,
    x: &[f64],
    eps: f64,
    grid: &ScaleGrid,
) -> Result<DensityEstimate> {
    let floor = 2.0 * sample.resolution() / eps;
    let usable = grid.clamped_below(floor)?;
    let mut non_porous = 0usize;
    let mut prefix = Vec::with_capacity(usable.len());
    let mut count = 0usize;
    for (m, r) in usable.scales().enumerate() {
        let res = kernel::porosity_probe(sample, x, r, eps)?;
        if !res.porous {
            non_porous += 1;
        }
        count = m + 1;
        prefix.push(non_porous as f64 / count as f64);
    }
    Ok(DensityEstimate {
        value: non_porous as f64 / count.max(1) as f64,
        window: (usable.k_min, usable.k_max),
        threshold: eps,
        prefix_extreme: prefix.iter().copied().fold(f64::INFINITY, f64::min),
        prefix,
    })
}

/// Convex-density profile d(x, r) = hull diameter / 2r over the grid, with
/// the same Riemann-sum integral as the beta integral.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConvexDensityProfile {
    pub x: Vec<f64>,
    pub grid: ScaleGrid,
    pub d: Vec<f64>,
    pub integral: f64,
}

pub fn convex_density_profile(
    sample: &TaggedSample,
    x: &[f64],
    grid: &ScaleGrid,
    guard: f64,
) -> Result<ConvexDensityProfile> {
    let usable = grid.clamped_below(guard * sample.resolution())?;
    let mut d = Vec::with_capacity(usable.len());
    for r in usable.scales() {
        let i = kernel::hull_diameter(sample, x, r, 0.0)?;
        d.push((i / (2.0 * r)).clamp(0.0, 1.0));
    }
    let integral = usable.log_inv_lambda() * d.iter().map(|v| v * v).sum::<f64>();
    Ok(ConvexDensityProfile { x: x.to_vec(), grid: usable, d, integral })
}

/// The square-sum functional over all occupied dyadic squares of the root:
/// sum of beta(Q)^2 |Q|, reported with per-depth partial sums.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TspFunctional {
    pub total: f64,
    /// partial sums after including each depth 0..=max_depth
    pub partial: Vec<f64>,
}

pub fn tsp_functional(
    sample: &TaggedSample,
    root: Square,
    max_depth: u32,
) -> Result<TspFunctional> {
    if !sample.is_planar() {
        return Err(Error::InvalidInput("tsp functional requires a planar sample".into()));
    }
    let mut total = 0.0;
    let mut partial = Vec::with_capacity(max_depth as usize + 1);
    for depth in 0..=max_depth {
        let mut occupied: Vec<(u64, u64)> = sample
            .points()
            .iter()
            .filter_map(|p| {
                let c = p.coords();
                DyadicSquare::containing(root, depth, [c[0], c[1]]).map(|q| (q.ix, q.iy))
            })
            .collect();
        occupied.sort_unstable();
        occupied.dedup();
        let mut level_sum = 0.0;
        for (ix, iy) in occupied {
            let q = DyadicSquare::new(root, depth, ix, iy)?;
            let pts = kernel::points_in_triple(sample, &q);
            if pts.is_empty() {
                continue;
            }
            let fit = crate::geom::min_width_strip(&pts)?;
            let beta = (fit.width / (2.0 * q.side())).clamp(0.0, 3.0);
            level_sum += beta * beta * q.side();
        }
        total += level_sum;
        partial.push(total);
    }
    Ok(TspFunctional { total, partial })
}

/// Square-sum at a point: beta(Q)^2 over the one dyadic square per depth
/// that contains x.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BetaSumAtPoint {
    pub total: f64,
    pub per_depth: Vec<f64>,
}

pub fn beta_sum_at_point(
    sample: &TaggedSample,
    root: Square,
    x: [f64; 2],
    max_depth: u32,
) -> Result<BetaSumAtPoint> {
    if !sample.is_planar() {
        return Err(Error::InvalidInput("beta sum requires a planar sample".into()));
    }
    let mut total = 0.0;
    let mut per_depth = Vec::with_capacity(max_depth as usize + 1);
    for depth in 0..=max_depth {
        let q = DyadicSquare::containing(root, depth, x).ok_or_else(|| {
            Error::InvalidInput(format!("point ({}, {}) outside root square", x[0], x[1]))
        })?;
        let pts = kernel::points_in_triple(sample, &q);
        let beta = if pts.is_empty() {
            0.0
        } else {
            let fit = crate::geom::min_width_strip(&pts)?;
            (fit.width / (2.0 * q.side())).clamp(0.0, 3.0)
        };
        per_depth.push(beta * beta);
        total += beta * beta;
    }
    Ok(BetaSumAtPoint { total, per_depth })
}
