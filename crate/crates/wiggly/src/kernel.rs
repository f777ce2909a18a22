//! Sample-level geometry kernel: beta numbers over balls and tripled dyadic
//! squares, convex-hull diameters inside balls, and porosity probes.
//!
//! Every operation is a pure function of an immutable sample; scales below
//! `guard * resolution` are rejected because the discrete set cannot
//! represent the continuum there.

use crate::dyadic::DyadicSquare;
use crate::error::{Error, Result};
use crate::geom;
use crate::sample::TaggedSample;

/// Scales below `guard * resolution` are rejected; 10 keeps the relative
/// beta error from discretization at or below 0.1.
pub const DEFAULT_RESOLUTION_GUARD: f64 = 10.0;

/// A beta number together with its data-quality flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaValue {
    pub beta: f64,
    /// No sample point fell in the window; beta reported as 0.
    pub empty: bool,
    /// Width computed about the principal axis (ambient dim >= 3 fallback).
    pub approximate: bool,
}

impl BetaValue {
    fn empty() -> BetaValue {
        BetaValue { beta: 0.0, empty: true, approximate: false }
    }
}

/// Scale-normalized distance of the sample inside the closed ball B(x, r)
/// from its best-fitting line. Always in [0, 1].
pub fn beta_ball(sample: &TaggedSample, x: &[f64], r: f64, guard: f64) -> Result<BetaValue> {
    let floor = guard * sample.resolution();
    if r < floor {
        return Err(Error::ScaleBelowResolution { r, floor });
    }
    let idx = sample.within_ball(x, r);
    if idx.is_empty() {
        return Ok(BetaValue::empty());
    }
    if sample.is_planar() {
        let pts: Vec<[f64; 2]> = idx.iter().map(|&i| sample.xy(i as usize)).collect();
        let fit = geom::min_width_strip(&pts)?;
        Ok(BetaValue { beta: (fit.width / (2.0 * r)).clamp(0.0, 1.0), empty: false, approximate: false })
    } else {
        let pts: Vec<Vec<f64>> =
            idx.iter().map(|&i| sample.point(i as usize).coords().to_vec()).collect();
        let width = geom::principal_axis_width(&pts)?;
        Ok(BetaValue { beta: (width / (2.0 * r)).clamp(0.0, 1.0), empty: false, approximate: true })
    }
}

/// Beta number of a dyadic square: width of the sample inside the tripled
/// square 3Q, normalized by the side of Q. Always in [0, 3].
pub fn beta_square(sample: &TaggedSample, q: &DyadicSquare, guard: f64) -> Result<BetaValue> {
    if !sample.is_planar() {
        return Err(Error::InvalidInput("beta_square requires a planar sample".into()));
    }
    let side = q.side();
    let floor = guard * sample.resolution();
    if side < floor {
        return Err(Error::ScaleBelowResolution { r: side, floor });
    }
    let pts = points_in_triple(sample, q);
    if pts.is_empty() {
        return Ok(BetaValue::empty());
    }
    let fit = geom::min_width_strip(&pts)?;
    Ok(BetaValue { beta: (fit.width / (2.0 * side)).clamp(0.0, 3.0), empty: false, approximate: false })
}

pub(crate) fn points_in_triple(sample: &TaggedSample, q: &DyadicSquare) -> Vec<[f64; 2]> {
    let (lo, hi) = q.triple_bounds();
    let center = q.center();
    let radius = 1.5 * q.side() * std::f64::consts::SQRT_2 * (1.0 + 1e-12);
    let grid = sample.grid().expect("planar sample");
    let mut pts = Vec::new();
    grid.for_each_within(center, radius, |_, p| {
        if p[0] >= lo[0] && p[0] <= hi[0] && p[1] >= lo[1] && p[1] <= hi[1] {
            pts.push(p);
        }
    });
    pts
}

/// Diameter of the convex hull of the sample inside the closed ball
/// B(x, r); 0 for empty or singleton intersections. Bounded by 2r.
pub fn hull_diameter(sample: &TaggedSample, x: &[f64], r: f64, guard: f64) -> Result<f64> {
    let floor = guard * sample.resolution();
    if r < floor {
        return Err(Error::ScaleBelowResolution { r, floor });
    }
    let idx = sample.within_ball(x, r);
    if idx.len() < 2 {
        return Ok(0.0);
    }
    if sample.is_planar() {
        let pts: Vec<[f64; 2]> = idx.iter().map(|&i| sample.xy(i as usize)).collect();
        Ok(geom::diameter(&pts)?.min(2.0 * r))
    } else {
        // farthest-pair heuristic in higher dimension
        let mut best = 0.0f64;
        let mut seed = idx[0] as usize;
        for _ in 0..4 {
            let mut far = seed;
            let mut far_d = 0.0;
            for &i in &idx {
                let d = sample.point(i as usize).dist(sample.point(seed));
                if d > far_d {
                    far_d = d;
                    far = i as usize;
                }
            }
            if far_d > best {
                best = far_d;
                seed = far;
            } else {
                break;
            }
        }
        Ok(best.min(2.0 * r))
    }
}

/// Outcome of an empty-disk search: `porous` with a certified witness
/// center when one exists at this scale.
#[derive(Debug, Clone, Copy)]
pub struct PorosityResult {
    pub porous: bool,
    pub witness: Option<[f64; 2]>,
}

/// Searches for a center z with B(z, eps*r) inside B(x, r) and
/// B(z, eps*r - h) free of sample points. Branch-and-bound over a quadtree
/// starting at pitch eps*r/4; the Lipschitz bound on the nearest-point
/// distance makes pruning exact, so a miss means no such disk exists at
/// the searched granularity.
pub fn porosity_probe(
    sample: &TaggedSample,
    x: &[f64],
    r: f64,
    eps: f64,
) -> Result<PorosityResult> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::InvalidInput(format!("porosity eps must be in (0, 1/2), got {eps}")));
    }
    let h = sample.resolution();
    let er = eps * r;
    if er < 2.0 * h {
        return Err(Error::PorosityScaleBelowResolution { er, floor: 2.0 * h });
    }
    if !sample.is_planar() {
        return Err(Error::InvalidInput("porosity probe requires a planar sample".into()));
    }
    let grid = sample.grid().expect("planar sample");
    let cx = [x[0], x[1]];
    let need = er - h; // required empty radius around the witness
    let reach = r - er; // witness center must stay this close to x
    if reach <= 0.0 {
        return Ok(PorosityResult { porous: false, witness: None });
    }

    // worklist of square cells (center, half-side), largest first
    let mut stack: Vec<([f64; 2], f64)> = Vec::new();
    let coarse = er / 4.0;
    let mut gx = -reach;
    while gx <= reach + coarse {
        let mut gy = -reach;
        while gy <= reach + coarse {
            stack.push(([cx[0] + gx, cx[1] + gy], coarse / 2.0));
            gy += coarse;
        }
        gx += coarse;
    }
    let stop_half = (h / 2.0).min(coarse / 64.0).max(1e-300);
    while let Some((c, half)) = stack.pop() {
        let d_center = ((c[0] - cx[0]).powi(2) + (c[1] - cx[1]).powi(2)).sqrt();
        // whole cell outside the admissible disk
        if d_center - half * std::f64::consts::SQRT_2 > reach {
            continue;
        }
        let dnn = grid.nearest_dist(c, None);
        if dnn > need && d_center <= reach {
            // certify before reporting
            debug_assert!(!grid.any_within(c, need));
            return Ok(PorosityResult { porous: true, witness: Some(c) });
        }
        // best possible nearest-distance anywhere in this cell
        let bound = dnn + half * std::f64::consts::SQRT_2;
        if bound <= need || half <= stop_half {
            continue;
        }
        let q = half / 2.0;
        for (sx, sy) in [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)] {
            stack.push(([c[0] + sx * q, c[1] + sy * q], q));
        }
    }
    Ok(PorosityResult { porous: false, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::TaggedSample;

    fn segment_sample(n: usize) -> TaggedSample {
        let pts: Vec<[f64; 2]> = (0..=n).map(|i| [i as f64 / n as f64, 0.0]).collect();
        TaggedSample::planar_w(pts, 1.0 / n as f64).unwrap()
    }

    #[test]
    fn beta_of_segment_is_zero() {
        let s = segment_sample(1024);
        for &(x, r) in &[(0.5, 0.1), (0.25, 0.2), (0.9, 0.05)] {
            let b = beta_ball(&s, &[x, 0.0], r, DEFAULT_RESOLUTION_GUARD).unwrap();
            assert!(b.beta.abs() < 1e-9, "beta {} at x={x}", b.beta);
            assert!(!b.empty);
        }
    }

    #[test]
    fn beta_of_witness_triangle() {
        // {(0,0),(2,0),(1,1)} inside B((1,0), 2): width-1 strip over 2r = 4
        let pts = vec![[0.0, 0.0], [2.0, 0.0], [1.0, 1.0]];
        let s = TaggedSample::planar_w(pts, 0.01).unwrap();
        let b = beta_ball(&s, &[1.0, 0.0], 2.0, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!((b.beta - 0.25).abs() < 1e-12, "beta {}", b.beta);
    }

    #[test]
    fn beta_scale_below_resolution_errors() {
        let s = segment_sample(64);
        let err = beta_ball(&s, &[0.5, 0.0], 0.01, DEFAULT_RESOLUTION_GUARD);
        assert!(matches!(err, Err(Error::ScaleBelowResolution { .. })));
    }

    #[test]
    fn beta_empty_ball_is_flagged_zero() {
        let s = segment_sample(64);
        let b = beta_ball(&s, &[0.5, 10.0], 1.0, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!(b.empty);
        assert_eq!(b.beta, 0.0);
    }

    #[test]
    fn beta_circle_matches_arc_sagitta() {
        // On the unit circle the best strip over the arc in B(x, r) has
        // width 1 - cos(2 asin(r/2)) = r^2/2, so beta = r/4 exactly.
        let n = 1 << 15;
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|i| {
                let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                [t.cos(), t.sin()]
            })
            .collect();
        let s = TaggedSample::planar_w(pts, 2.0 * std::f64::consts::PI / n as f64).unwrap();
        for &r in &[0.2, 0.1, 0.05] {
            let b = beta_ball(&s, &[1.0, 0.0], r, DEFAULT_RESOLUTION_GUARD).unwrap();
            let expect = r / 4.0;
            assert!(
                (b.beta - expect).abs() <= 0.1 * expect,
                "r={r}: beta {} vs r/4 = {expect}",
                b.beta
            );
        }
    }

    #[test]
    fn beta_square_on_straddling_segment() {
        let s = segment_sample(1024);
        let root = crate::dyadic::Square::new([-0.5, -0.5], 1.0).unwrap();
        let q = DyadicSquare::new(root, 0, 0, 0).unwrap();
        let b = beta_square(&s, &q, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!(b.beta.abs() < 1e-9);
    }

    #[test]
    fn beta_square_witness_value() {
        // side-1 square whose triple contains the width-1 triangle: 1/(2*1)
        let pts = vec![[0.0, 0.0], [2.0, 0.0], [1.0, 1.0]];
        let s = TaggedSample::planar_w(pts, 0.01).unwrap();
        let root = crate::dyadic::Square::new([0.5, -0.2], 1.0).unwrap();
        let q = DyadicSquare::new(root, 0, 0, 0).unwrap();
        let b = beta_square(&s, &q, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!((b.beta - 0.5).abs() < 1e-12, "beta {}", b.beta);
    }

    #[test]
    fn beta_square_empty_triple_flagged() {
        let s = segment_sample(64);
        let root = crate::dyadic::Square::new([10.0, 10.0], 1.0).unwrap();
        let q = DyadicSquare::new(root, 0, 0, 0).unwrap();
        let b = beta_square(&s, &q, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!(b.empty);
    }

    #[test]
    fn hull_diameter_two_points() {
        let pts = vec![[0.0, 0.0], [0.3, 0.0]];
        let s = TaggedSample::planar_w(pts, 0.01).unwrap();
        let d = hull_diameter(&s, &[0.15, 0.0], 1.0, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!((d - 0.3).abs() < 1e-12);
    }

    #[test]
    fn hull_diameter_of_through_segment() {
        let s = segment_sample(1024);
        let d = hull_diameter(&s, &[0.5, 0.0], 0.25, DEFAULT_RESOLUTION_GUARD).unwrap();
        assert!((d - 0.5).abs() < 2.0 / 1024.0, "d = {d}");
    }

    #[test]
    fn porosity_on_segment_midpoint() {
        // disks tangent off the line are empty
        let s = segment_sample(4096);
        let res = porosity_probe(&s, &[0.5, 0.0], 0.25, 0.4).unwrap();
        assert!(res.porous);
        let w = res.witness.unwrap();
        assert!(w[1].abs() > 0.05, "witness should sit off the line: {:?}", w);
    }

    #[test]
    fn porosity_false_on_filled_square() {
        let n = 64;
        let mut pts = Vec::new();
        for i in 0..=n {
            for j in 0..=n {
                pts.push([i as f64 / n as f64, j as f64 / n as f64]);
            }
        }
        let s = TaggedSample::planar_w(pts, 1.5 / n as f64).unwrap();
        let res = porosity_probe(&s, &[0.5, 0.5], 0.3, 0.3).unwrap();
        assert!(!res.porous);
    }

    #[test]
    fn porosity_scale_floor_errors() {
        let s = segment_sample(64);
        let err = porosity_probe(&s, &[0.5, 0.0], 0.05, 0.3);
        assert!(matches!(err, Err(Error::PorosityScaleBelowResolution { .. })));
    }
}
