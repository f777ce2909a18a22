//! Flat reference sets: the unit segment and the unit circle.

use super::{check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::Result;
use crate::sample::TaggedSample;

pub struct Segment;

impl Generator for Segment {
    fn family(&self) -> &'static str {
        "segment"
    }

    fn describe(&self) -> &'static str {
        "unit segment [0,1] x {0}, 2^level + 1 equispaced points, all W"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 10, 24)?;
        let n = 1usize << level;
        let h = 1.0 / n as f64;
        check_resolution_target(spec, h, Some((1.0 / spec.resolution_target.unwrap_or(h)).log2().ceil() as u32))?;
        let pts: Vec<[f64; 2]> = (0..=n).map(|i| [i as f64 * h, 0.0]).collect();
        let sample = TaggedSample::planar_w(pts, h)?;
        let truth = GroundTruth {
            known_dim: Some(1.0),
            total_e_length: None,
            uniformly_wiggly: Some(false),
            notes: "unit segment; flat at every point and scale".into(),
        };
        Ok((sample, truth))
    }
}

pub struct Circle;

impl Generator for Circle {
    fn family(&self) -> &'static str {
        "circle"
    }

    fn describe(&self) -> &'static str {
        "unit-radius circle, 2^level equispaced points, all W"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 13, 24)?;
        let n = 1usize << level;
        let h = 2.0 * std::f64::consts::PI / n as f64;
        check_resolution_target(spec, h, None)?;
        let pts: Vec<[f64; 2]> = (0..n)
            .map(|i| {
                let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                [t.cos(), t.sin()]
            })
            .collect();
        let sample = TaggedSample::planar_w(pts, h)?;
        let truth = GroundTruth {
            known_dim: Some(1.0),
            total_e_length: None,
            uniformly_wiggly: Some(false),
            notes: "unit-radius circle; beta(x, r) = r/4 exactly on arcs".into(),
        };
        Ok((sample, truth))
    }
}
