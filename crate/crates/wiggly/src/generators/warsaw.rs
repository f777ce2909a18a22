//! Closure of the graph of sin(1/x): the vertical segment {0} x [-1, 1] is
//! the W part, the graph itself is the E part. The infinite graph length
//! is represented by truncating at x_min (flagged in the ground truth);
//! E-weights carry the local arc length.

use super::{check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::sample::{Tag, TaggedSample};

pub struct WarsawSine;

impl Generator for WarsawSine {
    fn family(&self) -> &'static str {
        "warsaw_sine"
    }

    fn describe(&self) -> &'static str {
        "graph of sin(1/x) on [x_min, 1] (E, arc-length sampled) plus the accumulation segment {0} x [-1,1] (W)"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 11, 14)?;
        let h = 2f64.powi(-(level as i32));
        let x_min = spec.x_min.unwrap_or(0.02);
        if !(x_min > 0.0 && x_min < 0.5) {
            return Err(Error::InvalidSpec(format!("warsaw_sine x_min must be in (0, 1/2), got {x_min}")));
        }
        if x_min < 4.0 * h {
            return Err(Error::InvalidSpec(format!(
                "warsaw_sine x_min = {x_min} below 4h = {}; raise x_min or lower the level",
                4.0 * h
            )));
        }
        check_resolution_target(spec, h, None)?;

        let mut points = Vec::new();
        let mut tags = Vec::new();
        let mut weights = Vec::new();

        // W: the accumulation segment
        let seg_n = (2.0 / h).ceil() as usize;
        for i in 0..=seg_n {
            points.push(Point::xy(0.0, -1.0 + 2.0 * i as f64 / seg_n as f64));
            tags.push(Tag::W);
            weights.push(0.0);
        }

        // E: arc-length march along the graph from x = 1 down to x_min
        let mut x = 1.0f64;
        let mut prev = [1.0, (1.0f64).sin().to_owned()];
        points.push(Point::xy(prev[0], prev[1]));
        tags.push(Tag::E);
        weights.push(h);
        let mut total_arc = h;
        while x > x_min {
            let slope = (1.0 / x).cos() / (x * x);
            let dx = (0.9 * h) / (1.0 + slope * slope).sqrt();
            x = (x - dx).max(x_min);
            let p = [x, (1.0 / x).sin()];
            let ds = ((p[0] - prev[0]).powi(2) + (p[1] - prev[1]).powi(2)).sqrt();
            points.push(Point::xy(p[0], p[1]));
            tags.push(Tag::E);
            weights.push(ds.max(1e-300));
            total_arc += ds;
            prev = p;
        }

        let sample = TaggedSample::new(points, tags, weights, 1.05 * h)?;
        let truth = GroundTruth {
            known_dim: Some(1.0),
            total_e_length: Some(total_arc),
            uniformly_wiggly: Some(false),
            notes: format!(
                "warsaw sine truncated at x_min = {x_min}; the full graph has infinite length \
                 and its closure has upper box dimension 3/2 below the oscillation scale"
            ),
        };
        Ok((sample, truth))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_length_matches_quadrature() {
        let mut spec = GeneratorSpec::family("warsaw_sine").with_level(9);
        spec.x_min = Some(0.05);
        let (_, t) = WarsawSine.generate(&spec).unwrap();
        // midpoint quadrature of the arc-length integral on [0.05, 1]
        let n = 200_000;
        let mut arc = 0.0;
        for i in 0..n {
            let x = 0.05 + (1.0 - 0.05) * (i as f64 + 0.5) / n as f64;
            let slope = (1.0 / x).cos() / (x * x);
            arc += (1.0 + slope * slope).sqrt() * (1.0 - 0.05) / n as f64;
        }
        let got = t.total_e_length.unwrap();
        assert!((got - arc).abs() <= 0.02 * arc, "arc {got} vs quadrature {arc}");
    }

    #[test]
    fn w_segment_reaches_both_ends() {
        let (s, _) = WarsawSine.generate(&GeneratorSpec::family("warsaw_sine").with_level(8)).unwrap();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..s.len() {
            if s.tag(i) == Tag::W {
                let p = s.xy(i);
                assert_eq!(p[0], 0.0);
                lo = lo.min(p[1]);
                hi = hi.max(p[1]);
            }
        }
        assert_eq!((lo, hi), (-1.0, 1.0));
    }

    #[test]
    fn rejects_x_min_below_resolution() {
        let mut spec = GeneratorSpec::family("warsaw_sine").with_level(6);
        spec.x_min = Some(0.01);
        assert!(WarsawSine.generate(&spec).is_err());
    }
}
