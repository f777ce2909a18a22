//! Tagged point samples: the discrete stand-in for a continuum K = W ∪ E.
//!
//! A sample carries per-point tags (W for the wiggly part, E for the
//! exceptional finite-length part), per-point length weights on E, and a
//! resolution guarantee h: every point of the underlying set lies within h
//! of a sample point and vice versa. Samples are immutable after
//! construction and back all kernel queries through a uniform grid built
//! once at load.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{self, Point};
use crate::grid::UniformGrid;

/// Per-point label: W carries the wiggliness hypotheses, E carries finite
/// 1-dimensional mass recorded in `e_weight`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tag {
    W,
    E,
}

/// Closed ball.
#[derive(Debug, Clone)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Result<Ball> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidInput(format!("ball radius must be positive, got {radius}")));
        }
        Ok(Ball { center, radius })
    }
}

/// Finite point sample of a continuum with tags, E-weights, and a
/// resolution guarantee.
#[derive(Debug, Clone)]
pub struct TaggedSample {
    points: Vec<Point>,
    tags: Vec<Tag>,
    e_weights: Vec<f64>,
    resolution: f64,
    ambient_dim: usize,
    diameter: f64,
    /// Planar fast path; present exactly when ambient_dim == 2.
    planar: Option<UniformGrid>,
}

impl TaggedSample {
    pub fn new(
        points: Vec<Point>,
        tags: Vec<Tag>,
        e_weights: Vec<f64>,
        resolution: f64,
    ) -> Result<TaggedSample> {
        if points.len() < 2 {
            return Err(Error::InvalidInput("sample needs at least 2 points".into()));
        }
        if points.len() != tags.len() || points.len() != e_weights.len() {
            return Err(Error::InvalidInput("points, tags, e_weights length mismatch".into()));
        }
        if !(resolution > 0.0) || !resolution.is_finite() {
            return Err(Error::InvalidInput(format!("resolution must be positive, got {resolution}")));
        }
        let dim = points[0].dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(Error::InvalidInput("mixed ambient dimensions".into()));
        }
        for (tag, w) in tags.iter().zip(&e_weights) {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::InvalidInput("e_weight must be finite and nonnegative".into()));
            }
            match tag {
                Tag::W if *w != 0.0 => {
                    return Err(Error::InvalidInput("W-tagged point with nonzero e_weight".into()))
                }
                Tag::E if *w == 0.0 => {
                    return Err(Error::InvalidInput("E-tagged point with zero e_weight".into()))
                }
                _ => {}
            }
        }
        let planar = if dim == 2 {
            let xy: Vec<[f64; 2]> =
                points.iter().map(|p| [p.coords()[0], p.coords()[1]]).collect();
            Some(UniformGrid::build(xy))
        } else {
            None
        };
        let diameter = match &planar {
            Some(grid) => geom::diameter(grid.points())?,
            None => approx_diameter(&points),
        };
        if !(diameter > 0.0) {
            return Err(Error::InvalidInput("sample has zero diameter".into()));
        }
        Ok(TaggedSample { points, tags, e_weights, resolution, ambient_dim: dim, diameter, planar })
    }

    /// Convenience constructor for all-W planar samples.
    pub fn planar_w(points: Vec<[f64; 2]>, resolution: f64) -> Result<TaggedSample> {
        let n = points.len();
        let pts = points.into_iter().map(|[x, y]| Point::xy(x, y)).collect();
        TaggedSample::new(pts, vec![Tag::W; n], vec![0.0; n], resolution)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn xy(&self, i: usize) -> [f64; 2] {
        let c = self.points[i].coords();
        [c[0], c[1]]
    }

    pub fn tag(&self, i: usize) -> Tag {
        self.tags[i]
    }

    pub fn tags(&self) -> &[Tag] {
        &self.tags
    }

    pub fn e_weight(&self, i: usize) -> f64 {
        self.e_weights[i]
    }

    pub fn total_e_weight(&self) -> f64 {
        self.e_weights.iter().sum()
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn is_planar(&self) -> bool {
        self.planar.is_some()
    }

    pub fn grid(&self) -> Option<&UniformGrid> {
        self.planar.as_ref()
    }

    /// Indices of sample points within closed distance r of x.
    pub fn within_ball(&self, x: &[f64], r: f64) -> Vec<u32> {
        match &self.planar {
            Some(grid) => grid.within([x[0], x[1]], r),
            None => self
                .points
                .iter()
                .enumerate()
                .filter(|(_, p)| geom::dist(p.coords(), x) <= r)
                .map(|(i, _)| i as u32)
                .collect(),
        }
    }

    /// Sum of E-weights over sample points within closed distance r of x:
    /// the discrete stand-in for H1(E ∩ B(x, r)).
    pub fn e_mass_within(&self, x: &[f64], r: f64) -> f64 {
        match &self.planar {
            Some(grid) => {
                let mut total = 0.0;
                grid.for_each_within([x[0], x[1]], r, |i, _| total += self.e_weights[i as usize]);
                total
            }
            None => self
                .points
                .iter()
                .zip(&self.e_weights)
                .filter(|(p, _)| geom::dist(p.coords(), x) <= r)
                .map(|(_, w)| w)
                .sum(),
        }
    }

    /// Verifies the declared resolution: every sample point must have a
    /// neighbor within `factor * resolution`. Returns the max nearest gap.
    pub fn max_nearest_gap(&self) -> f64 {
        match &self.planar {
            Some(grid) => {
                let mut worst = 0.0f64;
                for i in 0..grid.len() {
                    let d = grid.nearest_dist(grid.point(i), Some(i as u32));
                    worst = worst.max(d);
                }
                worst
            }
            None => {
                let mut worst = 0.0f64;
                for (i, p) in self.points.iter().enumerate() {
                    let mut best = f64::INFINITY;
                    for (j, q) in self.points.iter().enumerate() {
                        if i != j {
                            best = best.min(p.dist(q));
                        }
                    }
                    worst = worst.max(best);
                }
                worst
            }
        }
    }
}

/// Farthest-pair heuristic for d >= 3: repeated farthest-point sweeps.
/// Exact in the planar case is handled by the hull path instead.
fn approx_diameter(points: &[Point]) -> f64 {
    let mut a = 0usize;
    let mut best = 0.0f64;
    for _ in 0..4 {
        let mut far = a;
        let mut far_d = 0.0f64;
        for (i, p) in points.iter().enumerate() {
            let d = p.dist(&points[a]);
            if d > far_d {
                far_d = d;
                far = i;
            }
        }
        if far_d > best {
            best = far_d;
            a = far;
        } else {
            break;
        }
    }
    best
}
