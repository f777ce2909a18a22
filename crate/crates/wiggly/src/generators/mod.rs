//! Deterministic constructors for the reference corpus.
//!
//! Each set family implements [`Generator`] and is registered by name;
//! callers select a family at runtime through [`GeneratorSpec::family`]
//! (the CLI `--family` flag maps straight onto this). Every generator is
//! bit-reproducible: no wall clocks, no unseeded randomness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::TaggedSample;

mod basic;
mod cantor;
mod combs;
mod corners;
mod julia;
mod koch;
mod products;
mod warsaw;

pub use julia::julia_inverse;

/// Parametric description of a corpus set. Families read the fields they
/// need and reject specs that carry none of theirs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub family: String,
    /// construction depth/level; per-family meaning, per-family default
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
    /// contraction ratio for cantor_alpha / comb_r_alpha
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    /// julia parameter c = c_re + i c_im
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_re: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_im: Option<f64>,
    /// julia inverse-iteration depth
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    /// four_corners: constant corner ratio; default is the shrinking
    /// schedule a_n = n^2/(n+1)^2
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_const: Option<f64>,
    /// warsaw_sine: graph truncation abscissa
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_min: Option<f64>,
    /// target sample resolution; families that derive resolution from
    /// `level` use this as an override where achievable
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution_target: Option<f64>,
}

impl GeneratorSpec {
    pub fn family(family: &str) -> GeneratorSpec {
        GeneratorSpec {
            family: family.to_string(),
            level: None,
            alpha: None,
            c_re: None,
            c_im: None,
            depth: None,
            a_const: None,
            x_min: None,
            resolution_target: None,
        }
    }

    pub fn with_level(mut self, level: u32) -> GeneratorSpec {
        self.level = Some(level);
        self
    }
}

/// Analytic metadata attached to a generated sample.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct GroundTruth {
    /// analytic Hausdorff dimension when known
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_dim: Option<f64>,
    /// total E-length carried by the sample (truncated constructions
    /// record the truncated analytic value)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_e_length: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniformly_wiggly: Option<bool>,
    #[serde(default)]
    pub notes: String,
}

/// A corpus family: deterministic point-sample constructor plus its
/// analytic ground truth.
pub trait Generator: Sync {
    fn family(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn generate(&self, spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)>;
}

static REGISTRY: &[&dyn Generator] = &[
    &basic::Segment,
    &basic::Circle,
    &koch::Koch,
    &cantor::CantorThird,
    &cantor::CantorAlpha,
    &corners::FourCorners,
    &warsaw::WarsawSine,
    &combs::HairySegment,
    &combs::CombBlocks,
    &combs::CombRAlpha,
    &products::ConeJoin,
    &products::ProductLift,
    &julia::Julia,
];

/// All registered families in a fixed order.
pub fn registry() -> &'static [&'static dyn Generator] {
    REGISTRY
}

pub fn lookup(family: &str) -> Option<&'static dyn Generator> {
    REGISTRY.iter().copied().find(|g| g.family() == family)
}

/// Generates the sample described by the spec via the registry.
pub fn generate(spec: &GeneratorSpec) -> Result<(TaggedSample, GroundTruth)> {
    let generator = lookup(&spec.family).ok_or_else(|| {
        let known: Vec<&str> = REGISTRY.iter().map(|g| g.family()).collect();
        Error::InvalidSpec(format!("unknown family '{}'; known: {}", spec.family, known.join(", ")))
    })?;
    generator.generate(spec)
}

pub(crate) fn level_or(spec: &GeneratorSpec, default: u32, max: u32) -> Result<u32> {
    let level = spec.level.unwrap_or(default);
    if level == 0 || level > max {
        return Err(Error::InvalidSpec(format!(
            "family '{}' supports level 1..={max}, got {level}",
            spec.family
        )));
    }
    Ok(level)
}

/// Verifies a resolution target is reachable at the level-derived
/// resolution; reports the achievable level when not.
pub(crate) fn check_resolution_target(
    spec: &GeneratorSpec,
    achieved: f64,
    achievable_level_hint: Option<u32>,
) -> Result<()> {
    if let Some(target) = spec.resolution_target {
        if achieved > target {
            let hint =
                achievable_level_hint.map(|l| format!("; try level {l}")).unwrap_or_default();
            return Err(Error::InvalidSpec(format!(
                "resolution target {target:.3e} unreachable at this level (achieved {achieved:.3e}){hint}"
            )));
        }
    }
    Ok(())
}
