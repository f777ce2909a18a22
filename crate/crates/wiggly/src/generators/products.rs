//! Dimension-raising constructions over the one-third Cantor set: the cone
//! join to an apex and the product with a segment.

use super::{cantor::cantor_endpoints, check_resolution_target, level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::Result;
use crate::sample::TaggedSample;

/// Segments joining every point of the one-third Cantor set (on the x-axis)
/// to the apex (1, 1), sampled on equispaced horizontal slices.
pub struct ConeJoin;

impl Generator for ConeJoin {
    fn family(&self) -> &'static str {
        "cone_join"
    }

    fn describe(&self) -> &'static str {
        "cone over the one-third Cantor set with apex (1,1), slice-sampled"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 9, 12)?;
        let h = 2f64.powi(-(level as i32));
        let declared = 1.01 * std::f64::consts::SQRT_2 * h;
        check_resolution_target(spec, declared, None)?;
        let slices = 1usize << level;
        let mut pts: Vec<[f64; 2]> = Vec::new();
        for j in 0..=slices {
            let w = j as f64 * h;
            let scale = 1.0 - w;
            if scale < h {
                break;
            }
            // Cantor generation matching the slice's shrunken resolution
            let m = (((scale / h).ln() / 3f64.ln()).ceil() as i32).max(1) as u32;
            for c in cantor_endpoints(1.0 / 3.0, m) {
                pts.push([scale * c + w, w]);
            }
        }
        pts.push([1.0, 1.0]);
        let sample = TaggedSample::planar_w(pts, declared)?;
        let truth = GroundTruth {
            known_dim: Some(1.0 + 2f64.ln() / 3f64.ln()),
            total_e_length: None,
            uniformly_wiggly: Some(false),
            notes: format!("cone join over the one-third Cantor set, {slices} slices"),
        };
        Ok((sample, truth))
    }
}

/// The product of the one-third Cantor set with [0, 1].
pub struct ProductLift;

impl Generator for ProductLift {
    fn family(&self) -> &'static str {
        "product_lift"
    }

    fn describe(&self) -> &'static str {
        "one-third Cantor set times [0,1], grid-sampled"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let level = level_or(spec, 6, 9)?;
        let h = 3f64.powi(-(level as i32));
        check_resolution_target(spec, 1.01 * h, None)?;
        let xs = cantor_endpoints(1.0 / 3.0, level);
        let rows = (1.0 / h).ceil() as usize;
        let mut pts = Vec::with_capacity(xs.len() * (rows + 1));
        for j in 0..=rows {
            let y = j as f64 / rows as f64;
            for &x in &xs {
                pts.push([x, y]);
            }
        }
        let sample = TaggedSample::planar_w(pts, 1.01 * h)?;
        let truth = GroundTruth {
            known_dim: Some(1.0 + 2f64.ln() / 3f64.ln()),
            total_e_length: None,
            uniformly_wiggly: Some(true),
            notes: format!("cantor_third x [0,1] at generation {level}"),
        };
        Ok((sample, truth))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_contains_apex_and_base() {
        let (s, t) = ConeJoin.generate(&GeneratorSpec::family("cone_join").with_level(7)).unwrap();
        let pts: Vec<[f64; 2]> = (0..s.len()).map(|i| s.xy(i)).collect();
        assert!(pts.contains(&[1.0, 1.0]));
        assert!(pts.contains(&[0.0, 0.0]));
        assert!(pts.contains(&[1.0, 0.0]));
        assert!((t.known_dim.unwrap() - 1.6309).abs() < 1e-3);
    }

    #[test]
    fn product_counts() {
        let (s, _) = ProductLift.generate(&GeneratorSpec::family("product_lift").with_level(3)).unwrap();
        assert_eq!(s.len(), 16 * 28); // 2^(3+1) endpoints x (27 + 1) rows
    }

    #[test]
    fn cone_slices_shrink_toward_apex() {
        let (s, _) = ConeJoin.generate(&GeneratorSpec::family("cone_join").with_level(6)).unwrap();
        // the slice at height w spans [w, 1]
        for i in 0..s.len() {
            let p = s.xy(i);
            assert!(p[0] >= p[1] - 1e-12, "point {:?} left of the cone", p);
        }
    }
}
