//! Comb-like sets: a base segment accumulated by finer and finer
//! structure. All three families tag the base W and the attached
//! structure E with arc-length weights.

use super::{check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::Result;
use crate::geom::Point;
use crate::sample::{Tag, TaggedSample};

/// [0,1] with vertical hairs of length 2^-m centered at the odd dyadic
/// points of generation m, for m = 1..=level.
pub struct HairySegment;

impl Generator for HairySegment {
    fn family(&self) -> &'static str {
        "hairy_segment"
    }

    fn describe(&self) -> &'static str {
        "unit segment with vertical hairs of length 2^-m at odd multiples of 2^-m"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 7, 12)?;
        let h = 2f64.powi(-(level as i32 + 2));
        check_resolution_target(spec, h, None)?;

        let mut points = Vec::new();
        let mut tags = Vec::new();
        let mut weights = Vec::new();

        let base_n = (1.0 / h) as usize;
        for i in 0..=base_n {
            points.push(Point::xy(i as f64 * h, 0.0));
            tags.push(Tag::W);
            weights.push(0.0);
        }
        for m in 1..=level {
            let half = 2f64.powi(-(m as i32 + 1));
            let steps = (half / h) as i64;
            for k in (1..(1u64 << m)).step_by(2) {
                let x = k as f64 * 2f64.powi(-(m as i32));
                for j in -steps..=steps {
                    if j == 0 {
                        continue; // the center lies on the W base
                    }
                    points.push(Point::xy(x, j as f64 * h));
                    tags.push(Tag::E);
                    weights.push(h);
                }
            }
        }
        let sample = TaggedSample::new(points, tags, weights, 1.05 * h)?;
        let truth = GroundTruth {
            known_dim: Some(1.0),
            total_e_length: Some(level as f64 / 2.0),
            uniformly_wiggly: Some(false),
            notes: format!(
                "hairy segment truncated at generation {level}; the full E has infinite length"
            ),
        };
        Ok((sample, truth))
    }
}

/// Blocks of tiny intervals stacked toward the base segment: row spacing
/// shrinks quadratically with height, so porosity dies at small scales
/// while total length stays finite.
pub struct CombBlocks;

impl Generator for CombBlocks {
    fn family(&self) -> &'static str {
        "comb_blocks"
    }

    fn describe(&self) -> &'static str {
        "base segment plus rows of 2^-4m blocks spaced 2^-2m at heights around 2^-m"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 5, 6)?;
        let pitch = 2f64.powi(-10);
        check_resolution_target(spec, pitch * 1.05, None)?;

        let mut points = Vec::new();
        let mut tags = Vec::new();
        let mut weights = Vec::new();

        let base_n = (1.0 / pitch) as usize;
        for i in 0..=base_n {
            points.push(Point::xy(i as f64 * pitch, 0.0));
            tags.push(Tag::W);
            weights.push(0.0);
        }

        let mut e_len = 0.0;
        for m in 1..=level as i32 {
            let block = 2f64.powi(-4 * m);
            let spacing = 2f64.powi(-2 * m);
            let band = 2f64.powi(-m);
            let block_pts = ((block / pitch).ceil() as usize).max(1);
            for k in 0..(1i64 << m) {
                let y_abs = band + k as f64 * spacing;
                for sign in [-1.0, 1.0] {
                    let y = sign * y_abs;
                    for j in 1..(1i64 << (2 * m)) {
                        let x0 = j as f64 * spacing;
                        e_len += block;
                        if block_pts == 1 {
                            points.push(Point::xy(x0 + block / 2.0, y));
                            tags.push(Tag::E);
                            weights.push(block);
                        } else {
                            let w = block / block_pts as f64;
                            for i in 0..block_pts {
                                let t = (i as f64 + 0.5) / block_pts as f64;
                                points.push(Point::xy(x0 + t * block, y));
                                tags.push(Tag::E);
                                weights.push(w);
                            }
                        }
                    }
                }
            }
        }
        // fidelity: every true point of base/blocks lies within ~pitch of
        // a sample point; the dotted gaps between blocks are real gaps
        let sample = TaggedSample::new(points, tags, weights, 1.05 * pitch)?;
        let truth = GroundTruth {
            known_dim: Some(1.0),
            total_e_length: Some(e_len),
            uniformly_wiggly: Some(false),
            notes: format!(
                "comb of block rows truncated at generation {level}; non-porous at z in (0,1) \
                 for scales between the truncation gap 2^-{level} and the quadratic row-gap bound"
            ),
        };
        Ok((sample, truth))
    }
}

/// A chain of porosity-blocking scaffolds over alpha-Cantor sets with
/// alpha_k -> 0, scaled by beta_k with beta_k * length(R_k) <= 4^-k and
/// placed at 1/k along the base segment.
pub struct CombRAlpha;

impl Generator for CombRAlpha {
    fn family(&self) -> &'static str {
        "comb_r_alpha"
    }

    fn describe(&self) -> &'static str {
        "base segment with shrinking scaffolded alpha-Cantor copies at 1/k"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 3, 5)?;
        let pitch = 2f64.powi(-9);
        check_resolution_target(spec, pitch * 1.05, None)?;

        let mut points = Vec::new();
        let mut tags = Vec::new();
        let mut weights = Vec::new();

        let base_n = (1.0 / pitch) as usize;
        for i in 0..=base_n {
            points.push(Point::xy(i as f64 * pitch, 0.0));
            tags.push(Tag::W);
            weights.push(0.0);
        }

        let mut total_e = 0.0;
        for k in 1..=level {
            let alpha = 2f64.powi(-(k as i32));
            let (segs, r_len) = scaffold_segments(alpha, 4);
            // scale keeps neighbors at 1/k and 1/(k+1) disjoint and the
            // length budget beta_k * len(R_k) <= 4^-k
            let gap = 1.0 / (k as f64 * (k as f64 + 1.0));
            let beta_k = (4f64.powi(-(k as i32)) / r_len).min(0.3 * gap / 2.5);
            let offset = 1.0 / k as f64;
            for (a, b) in segs {
                let a = [offset + beta_k * a[0], beta_k * a[1]];
                let b = [offset + beta_k * b[0], beta_k * b[1]];
                let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
                if len < 1e-12 {
                    continue;
                }
                total_e += len;
                let n = ((len / pitch).ceil() as usize).max(1);
                let w = len / n as f64;
                for j in 0..n {
                    let t = (j as f64 + 0.5) / n as f64;
                    points.push(Point::xy(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])));
                    tags.push(Tag::E);
                    weights.push(w);
                }
            }
        }
        let sample = TaggedSample::new(points, tags, weights, 1.05 * pitch)?;
        let truth = GroundTruth {
            known_dim: Some(1.0),
            total_e_length: Some(total_e),
            uniformly_wiggly: Some(false),
            notes: format!(
                "scaffolded alpha-Cantor chain with {level} copies; copy k uses alpha = 2^-k, \
                 scaled so beta_k * len(R_k) <= 4^-k and neighbors stay disjoint"
            ),
        };
        Ok((sample, truth))
    }
}

/// Segments of the scaffold R_alpha over [0,1]: square boundaries over
/// each Cantor interval plus n horizontal rungs over the doubled interval,
/// mirrored below the axis, for generations 1..=depth.
fn scaffold_segments(alpha: f64, depth: u32) -> (Vec<([f64; 2], [f64; 2])>, f64) {
    let rho = (1.0 - alpha) / 2.0;
    let mut segs: Vec<([f64; 2], [f64; 2])> = vec![([0.0, 0.0], [1.0, 0.0])];
    let mut lefts = vec![0.0f64];
    let mut len = 1.0f64;
    for n in 1..=depth {
        let next_len = len * rho;
        let mut next = Vec::with_capacity(lefts.len() * 2);
        for x in &lefts {
            next.push(*x);
            next.push(*x + len - next_len);
        }
        lefts = next;
        len = next_len;
        for &x in &lefts {
            let side = len;
            // square boundary over the interval, mirrored
            for sign in [1.0, -1.0] {
                let y0 = 0.0;
                let y1 = sign * side;
                segs.push(([x, y0], [x, y1]));
                segs.push(([x + side, y0], [x + side, y1]));
                segs.push(([x, y1], [x + side, y1]));
            }
            // horizontal rungs over the doubled interval at heights k/n * side
            let x_lo = x - side / 2.0;
            let x_hi = x + 1.5 * side;
            for k in 1..=n {
                let y = side * k as f64 / n as f64;
                segs.push(([x_lo, y], [x_hi, y]));
                segs.push(([x_lo, -y], [x_hi, -y]));
            }
        }
    }
    let total: f64 = segs
        .iter()
        .map(|(a, b)| ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt())
        .sum();
    (segs, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hairy_segment_e_length_is_half_level() {
        let (s, t) = HairySegment.generate(&GeneratorSpec::family("hairy_segment").with_level(6)).unwrap();
        assert_eq!(t.total_e_length, Some(3.0));
        let carried = s.total_e_weight();
        assert!((carried - 3.0).abs() < 0.05, "carried {carried}");
    }

    #[test]
    fn comb_blocks_length_stays_finite() {
        let (s, t) = CombBlocks.generate(&GeneratorSpec::family("comb_blocks").with_level(4)).unwrap();
        let e = t.total_e_length.unwrap();
        // per generation: 2^{m+1} rows x (2^{2m}-1) blocks x 2^{-4m} length
        let expect: f64 = (1..=4)
            .map(|m: i32| {
                2f64.powi(m + 1) * (2f64.powi(2 * m) - 1.0) * 2f64.powi(-4 * m)
            })
            .sum();
        assert!((e - expect).abs() < 1e-9, "{e} vs {expect}");
        assert!((s.total_e_weight() - e).abs() < 1e-9);
    }

    #[test]
    fn comb_r_alpha_respects_length_budget() {
        let (_, t) = CombRAlpha.generate(&GeneratorSpec::family("comb_r_alpha").with_level(3)).unwrap();
        let budget: f64 = (1..=3).map(|k: i32| 4f64.powi(-k)).sum();
        assert!(t.total_e_length.unwrap() <= budget * 1.01 + 1.0);
    }

    #[test]
    fn comb_r_alpha_copies_stay_disjoint_from_each_other() {
        let (s, _) = CombRAlpha.generate(&GeneratorSpec::family("comb_r_alpha").with_level(3)).unwrap();
        // copy k occupies x in [1/k, 1/k + beta_k * 2.5]; verify samples
        // between 1/(k+1) and 1/k horizontal bands never overlap vertically
        let mut max_x_of_copy = vec![0.0f64; 4];
        for i in 0..s.len() {
            let p = s.xy(i);
            if p[1].abs() > 1e-12 {
                for k in 1..=3usize {
                    let lo = 1.0 / k as f64;
                    if p[0] >= lo && (k == 1 || p[0] < 1.0 / (k as f64 - 1.0)) {
                        max_x_of_copy[k] = max_x_of_copy[k].max(p[0]);
                    }
                }
            }
        }
        for k in 2..=3usize {
            assert!(max_x_of_copy[k] < 1.0 / (k as f64 - 1.0), "copy {k} bleeds into copy {}", k - 1);
        }
    }
}
