//! Julia set samples by inverse iteration of z^2 + c: backward orbits of a
//! repelling fixed point under both square-root branches, deduplicated on
//! a grid so the sample density tracks the target resolution instead of
//! the highly non-uniform backward-orbit measure.

use num_complex::Complex64;

use super::{level_or, Generator, GeneratorSpec, GroundTruth};
use crate::error::{Error, Result};
use crate::sample::TaggedSample;

/// Parameters with connected Julia sets this generator vouches for.
const CURATED: &[(f64, f64, &str)] = &[
    (0.0, 0.0, "unit circle"),
    (-1.0, 0.0, "basilica"),
    (-2.0, 0.0, "segment [-2, 2]"),
    (0.0, 1.0, "dendrite"),
    (-0.122561, 0.744862, "douady rabbit"),
];

fn curated_label(c: Complex64) -> Option<&'static str> {
    CURATED
        .iter()
        .find(|(re, im, _)| (c.re - re).abs() < 1e-9 && (c.im - im).abs() < 1e-9)
        .map(|(_, _, label)| *label)
}

/// Backward orbit of the repelling fixed point of z^2 + c, deduplicated on
/// a grid of the given pitch. Deterministic: candidates are visited in
/// lexicographic cell order at every level.
pub fn julia_inverse(c: Complex64, depth: u32, pitch: f64) -> Result<Vec<[f64; 2]>> {
    if depth < 10 {
        return Err(Error::InvalidSpec(format!("julia inverse iteration needs depth >= 10, got {depth}")));
    }
    if !(pitch > 0.0) {
        return Err(Error::InvalidSpec("julia dedup pitch must be positive".into()));
    }
    if curated_label(c).is_none() {
        let list: Vec<String> =
            CURATED.iter().map(|(re, im, l)| format!("{re}+{im}i ({l})")).collect();
        return Err(Error::InvalidSpec(format!(
            "julia parameter {c} is not in the curated connected-set list: {}",
            list.join(", ")
        )));
    }
    // the fixed point (1 + sqrt(1-4c))/2 is repelling for these parameters
    let root = (Complex64::new(1.0, 0.0) - 4.0 * c).sqrt();
    let mut z0 = (Complex64::new(1.0, 0.0) + root) / 2.0;
    if (2.0 * z0).norm() <= 1.0 {
        z0 = (Complex64::new(1.0, 0.0) - root) / 2.0;
    }
    let key = |z: Complex64| -> (i64, i64) {
        ((z.re / pitch).floor() as i64, (z.im / pitch).floor() as i64)
    };
    let mut current: Vec<Complex64> = vec![z0];
    for _ in 0..depth {
        let mut next: std::collections::BTreeMap<(i64, i64), Complex64> =
            std::collections::BTreeMap::new();
        for &z in &current {
            let w = (z - c).sqrt();
            for cand in [w, -w] {
                next.entry(key(cand)).or_insert(cand);
            }
        }
        current = next.into_values().collect();
    }
    Ok(current.iter().map(|z| [z.re, z.im]).collect())
}

pub struct Julia;

impl Generator for Julia {
    fn family(&self) -> &'static str {
        "julia"
    }

    fn describe(&self) -> &'static str {
        "Julia set of z^2 + c by inverse iteration (curated c), grid-deduplicated, all W"
    }

    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
        let c = match (spec.c_re, spec.c_im) {
            (Some(re), im) => Complex64::new(re, im.unwrap_or(0.0)),
            (None, Some(im)) => Complex64::new(0.0, im),
            (None, None) => {
                return Err(Error::InvalidSpec(
                    "julia requires c_re/c_im; curated: 0, -1, -2, i, -0.122561+0.744862i".into(),
                ))
            }
        };
        // `level` doubles as the inverse-iteration depth when `depth` is absent
        let depth = spec.depth.unwrap_or_else(|| spec.level.unwrap_or(22));
        let _ = level_or(&GeneratorSpec { level: Some(depth.max(1)), ..spec.clone() }, 22, 28)?;
        let target = spec.resolution_target.unwrap_or(1.5e-3);
        let pitch = target / (2.0 * std::f64::consts::SQRT_2);
        let pts = julia_inverse(c, depth, pitch)?;
        if pts.len() < 2 {
            return Err(Error::InvalidSpec("julia orbit collapsed; raise depth".into()));
        }
        let sample = TaggedSample::planar_w(pts, target)?;
        let label = curated_label(c).unwrap_or("curated");
        let known_dim = if (c.norm() == 0.0) || (c.re == -2.0 && c.im == 0.0) {
            Some(1.0)
        } else {
            None
        };
        let truth = GroundTruth {
            known_dim,
            total_e_length: None,
            uniformly_wiggly: None,
            notes: format!("julia set of z^2 + ({c}), {label}; depth {depth}, dedup pitch {pitch:.2e}"),
        };
        Ok((sample, truth))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_zero_lands_on_the_unit_circle() {
        let pts = julia_inverse(Complex64::new(0.0, 0.0), 14, 1e-3).unwrap();
        assert!(pts.len() > 1000);
        for p in &pts {
            let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert!((r - 1.0).abs() < 1e-9, "point off the circle: {:?}", p);
        }
    }

    #[test]
    fn c_minus_two_lands_on_the_segment() {
        let pts = julia_inverse(Complex64::new(-2.0, 0.0), 16, 5e-4).unwrap();
        for p in &pts {
            assert!(p[1].abs() < 1e-9);
            assert!(p[0] >= -2.0 - 1e-9 && p[0] <= 2.0 + 1e-9);
        }
        // covers both ends
        let max_x = pts.iter().map(|p| p[0]).fold(f64::MIN, f64::max);
        let min_x = pts.iter().map(|p| p[0]).fold(f64::MAX, f64::min);
        assert!(max_x > 1.99 && min_x < -1.99, "range [{min_x}, {max_x}]");
    }

    #[test]
    fn uncurated_parameter_is_rejected() {
        let err = julia_inverse(Complex64::new(0.3, 0.3), 12, 1e-3).unwrap_err();
        assert!(err.to_string().contains("curated"));
    }

    #[test]
    fn dendrite_produces_a_spread_sample() {
        let pts = julia_inverse(Complex64::new(0.0, 1.0), 16, 2e-3).unwrap();
        assert!(pts.len() > 2000, "got {}", pts.len());
        // the dendrite is genuinely two-dimensional in extent
        let max_y = pts.iter().map(|p| p[1]).fold(f64::MIN, f64::max);
        let min_y = pts.iter().map(|p| p[1]).fold(f64::MAX, f64::min);
        assert!(max_y - min_y > 1.0);
    }
}
