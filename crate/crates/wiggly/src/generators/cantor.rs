//! Cantor sets on the line, embedded at y = 0.

use super::{check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::{Error, Result};
use crate::sample::TaggedSample;

/// Interval endpoints of the generation-`level` construction with piece
/// ratio `rho`: each interval [x, x + rho^k] keeps children at its two ends.
pub fn cantor_endpoints(rho: f64, level: u32) -> Vec<f64> {
    let mut lefts = vec![0.0f64];
    let mut len = 1.0;
    for _ in 0..level {
        let next_len = len * rho;
        let mut next = Vec::with_capacity(lefts.len() * 2);
        for x in lefts {
            next.push(x);
            next.push(x + len - next_len);
        }
        lefts = next;
        len = next_len;
    }
    let mut pts = Vec::with_capacity(lefts.len() * 2);
    for x in lefts {
        pts.push(x);
        pts.push(x + len);
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    pts
}

pub struct CantorThird;

impl Generator for CantorThird {
    fn family(&self) -> &'static str {
        "cantor_third"
    }

    fn describe(&self) -> &'static str {
        "middle-thirds Cantor set on [0,1], generation-level interval endpoints"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 10, 18)?;
        let h = 3f64.powi(-(level as i32));
        check_resolution_target(spec, h, None)?;
        let pts: Vec<[f64; 2]> = cantor_endpoints(1.0 / 3.0, level).into_iter().map(|x| [x, 0.0]).collect();
        let sample = TaggedSample::planar_w(pts, h)?;
        let truth = GroundTruth {
            known_dim: Some(2f64.ln() / 3f64.ln()),
            total_e_length: None,
            uniformly_wiggly: Some(false),
            notes: "one-third Cantor set; convex density bounded below by 1/4".into(),
        };
        Ok((sample, truth))
    }
}

pub struct CantorAlpha;

impl Generator for CantorAlpha {
    fn family(&self) -> &'static str {
        "cantor_alpha"
    }

    fn describe(&self) -> &'static str {
        "two-branch Cantor set with contraction ratio alpha in (0, 1/2)"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let alpha = spec.alpha.unwrap_or(0.25);
        if !(alpha > 0.0 && alpha < 0.5) {
            return Err(Error::InvalidSpec(format!("cantor_alpha needs alpha in (0, 1/2), got {alpha}")));
        }
        let level = level_or(spec, 8, 24)?;
        let h = alpha.powi(level as i32);
        if h < 1e-12 {
            return Err(Error::InvalidSpec(format!(
                "alpha^level = {h:.3e} underflows the kernel tolerance; lower the level"
            )));
        }
        check_resolution_target(spec, h, None)?;
        let pts: Vec<[f64; 2]> = cantor_endpoints(alpha, level).into_iter().map(|x| [x, 0.0]).collect();
        let sample = TaggedSample::planar_w(pts, h)?;
        let truth = GroundTruth {
            known_dim: Some(2f64.ln() / (1.0 / alpha).ln()),
            total_e_length: None,
            uniformly_wiggly: Some(false),
            notes: format!("alpha-Cantor set with ratio {alpha}"),
        };
        Ok((sample, truth))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn middle_thirds_endpoints() {
        let pts = cantor_endpoints(1.0 / 3.0, 1);
        let expect = [0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0];
        assert_eq!(pts.len(), expect.len());
        for (p, e) in pts.iter().zip(expect) {
            assert!((p - e).abs() < 1e-12, "{p} vs {e}");
        }
        let pts2 = cantor_endpoints(1.0 / 3.0, 2);
        assert_eq!(pts2.len(), 8);
        assert!((pts2[1] - 1.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn point_counts_double_per_level() {
        for level in 1..8u32 {
            assert_eq!(cantor_endpoints(0.3, level).len(), 1 << (level + 1));
        }
    }

    #[test]
    fn alpha_out_of_range_rejected() {
        let mut spec = GeneratorSpec::family("cantor_alpha");
        spec.alpha = Some(0.7);
        assert!(CantorAlpha.generate(&spec).is_err());
    }
}
