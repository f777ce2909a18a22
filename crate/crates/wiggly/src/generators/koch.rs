//! Koch curve generator: 4^level segments over [0,1], vertex sample.

use super::{check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::Result;
use crate::sample::TaggedSample;

pub struct Koch;

impl Generator for Koch {
    fn family(&self) -> &'static str {
        "koch"
    }

    fn describe(&self) -> &'static str {
        "Koch curve at the given level: 4^level + 1 vertices, all W"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 7, 10)?;
        let h = 3f64.powi(-(level as i32));
        check_resolution_target(spec, h, None)?;
        let pts = koch_vertices(level);
        let sample = TaggedSample::planar_w(pts, h)?;
        let truth = GroundTruth {
            known_dim: Some(4f64.ln() / 3f64.ln()),
            total_e_length: None,
            uniformly_wiggly: Some(true),
            notes: format!(
                "Koch polyline at level {level}; approximant length (4/3)^{level} = {:.6}",
                (4f64 / 3.0).powi(level as i32)
            ),
        };
        Ok((sample, truth))
    }
}

/// Vertices of the level-n Koch polyline from (0,0) to (1,0), bump upward.
pub fn koch_vertices(level: u32) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = vec![[0.0, 0.0], [1.0, 0.0]];
    let (sin60, cos60) = (3f64.sqrt() / 2.0, 0.5);
    for _ in 0..level {
        let mut next = Vec::with_capacity((pts.len() - 1) * 4 + 1);
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            let dx = (b[0] - a[0]) / 3.0;
            let dy = (b[1] - a[1]) / 3.0;
            let p1 = [a[0] + dx, a[1] + dy];
            let p3 = [a[0] + 2.0 * dx, a[1] + 2.0 * dy];
            // rotate the middle third by +60 degrees around p1
            let p2 = [p1[0] + dx * cos60 - dy * sin60, p1[1] + dx * sin60 + dy * cos60];
            next.push(a);
            next.push(p1);
            next.push(p2);
            next.push(p3);
        }
        next.push(*pts.last().unwrap());
        pts = next;
    }
    pts
}
