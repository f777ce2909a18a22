//! Four-corners Cantor square with diagonal skeleton: the W part is the
//! corner-limit Cantor set, the E part is the union of all square
//! diagonals, carrying the finite length 2*sqrt(2)*sum over generations of
//! 4^n |S_n|.

use super::{check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::sample::{Tag, TaggedSample};

pub struct FourCorners;

impl Generator for FourCorners {
    fn family(&self) -> &'static str {
        "four_corners"
    }

    fn describe(&self) -> &'static str {
        "nested corner squares (ratio a_n/4, a_n = n^2/(n+1)^2 or constant) with all diagonals as the E part"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 4, 7)?;
        if let Some(a) = spec.a_const {
            if !(a > 0.0 && a < 2.0) {
                return Err(Error::InvalidSpec(format!(
                    "four_corners a_const must keep a/4 in (0, 1/2), got {a}"
                )));
            }
        }
        let ratio = |n: u32| -> f64 {
            match spec.a_const {
                Some(a) => a / 4.0,
                None => {
                    let n = n as f64;
                    (n * n) / ((n + 1.0) * (n + 1.0)) / 4.0
                }
            }
        };

        // squares per generation, as (corner, side)
        let mut gen_squares: Vec<Vec<([f64; 2], f64)>> = vec![vec![([0.0, 0.0], 1.0)]];
        for n in 1..=level {
            let q = ratio(n);
            let prev = gen_squares.last().unwrap();
            let mut next = Vec::with_capacity(prev.len() * 4);
            for &([x, y], s) in prev {
                let t = s * q;
                next.push(([x, y], t));
                next.push(([x + s - t, y], t));
                next.push(([x, y + s - t], t));
                next.push(([x + s - t, y + s - t], t));
            }
            gen_squares.push(next);
        }
        let finest_side = gen_squares.last().unwrap()[0].1;
        let pitch = finest_side;
        let h = 1.1 * finest_side * std::f64::consts::SQRT_2;
        check_resolution_target(spec, h, None)?;

        let mut points = Vec::new();
        let mut tags = Vec::new();
        let mut weights = Vec::new();

        // W: corners of the finest squares (each corner is a limit point
        // of its own nested corner chain, so these lie on W exactly)
        for &([x, y], s) in gen_squares.last().unwrap() {
            for (dx, dy) in [(0.0, 0.0), (s, 0.0), (0.0, s), (s, s)] {
                points.push(Point::xy(x + dx, y + dy));
                tags.push(Tag::W);
                weights.push(0.0);
            }
        }

        // E: both diagonals of every square of every generation, sampled
        // at interior parameters so endpoints never collide with corners
        let mut analytic_e = 0.0;
        for squares in &gen_squares {
            for &([x, y], s) in squares {
                let diag_len = s * std::f64::consts::SQRT_2;
                analytic_e += 2.0 * diag_len;
                let count = (diag_len / pitch).ceil().max(2.0) as usize;
                let w = diag_len / count as f64;
                for (a, b) in [
                    ([x, y], [x + s, y + s]),
                    ([x + s, y], [x, y + s]),
                ] {
                    for j in 0..count {
                        let t = (j as f64 + 0.5) / count as f64;
                        points.push(Point::xy(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])));
                        tags.push(Tag::E);
                        weights.push(w);
                    }
                }
            }
        }

        let sample = TaggedSample::new(points, tags, weights, h)?;
        let schedule = match spec.a_const {
            Some(a) => format!("constant a = {a}"),
            None => "a_n = n^2/(n+1)^2".to_string(),
        };
        let truth = GroundTruth {
            // the W part has dimension 1 in the limit under the shrinking
            // schedule; the full set K = W ∪ E also has dimension 1
            known_dim: Some(1.0),
            total_e_length: Some(analytic_e),
            uniformly_wiggly: Some(false),
            notes: format!(
                "four-corners set, {schedule}, truncated at generation {level}; \
                 E-length is the truncated series value"
            ),
        };
        Ok((sample, truth))
    }
}
