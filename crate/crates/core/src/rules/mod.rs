//! Reduction rules: forward instance maps, extraction data and declared
//! overheads.

mod catalogue;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use catalogue::shipped_rules;

use crate::error::{Error, Result};
use crate::model::{Aggregate, AggregatedValue, Configuration, Problem, Sense};
use crate::problems::{Instance, VariantKey};
use crate::symbolic::OverheadMap;

pub type ForwardFn = fn(&Instance) -> Result<ReductionOutcome>;

/// A directed edge of the reduction graph.
#[derive(Clone)]
pub struct ReductionRule {
    pub source: VariantKey,
    pub target: VariantKey,
    pub overhead: OverheadMap,
    pub witness_capable: bool,
    pub forward: ForwardFn,
}

impl ReductionRule {
    pub fn new(
        source: VariantKey,
        target: VariantKey,
        overhead: OverheadMap,
        witness_capable: bool,
        forward: ForwardFn,
    ) -> Self {
        Self { source, target, overhead, witness_capable, forward }
    }

    /// `MIS[weight=unit] -> ILP` style name, unique per endpoint pair.
    pub fn name(&self) -> String {
        format!("{} -> {}", self.source.short(), self.target.short())
    }

    pub fn apply(&self, instance: &Instance) -> Result<ReductionOutcome> {
        let found = instance.variant();
        if found != self.source {
            return Err(Error::TypeMismatch { expected: self.source.to_string(), found: found.to_string() });
        }
        (self.forward)(instance)
    }
}

impl fmt::Debug for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionRule")
            .field("name", &self.name())
            .field("overhead", &self.overhead)
            .field("witness_capable", &self.witness_capable)
            .finish()
    }
}

impl PartialEq for ReductionRule {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.overhead == other.overhead
            && self.witness_capable == other.witness_capable
    }
}

/// Maps a target configuration back to a source configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "map", rename_all = "snake_case"))]
pub enum WitnessMap {
    Identity,
    /// Keep the first `len` variables.
    Prefix {
        len: usize,
    },
    /// Flip every binary variable.
    Complement,
    /// Vertex `v` stands for literal `literals[v]`; a variable is true iff a
    /// selected vertex is its positive literal.
    LiteralSelection {
        num_variables: usize,
        literals: Vec<i32>,
    },
    /// Variable `v * colors + c` says vertex `v` has color `c`; the first true
    /// one wins, color 0 otherwise.
    OneHot {
        vertices: usize,
        colors: usize,
    },
}

impl WitnessMap {
    pub fn apply(&self, config: &[usize]) -> Vec<usize> {
        match self {
            WitnessMap::Identity => config.to_vec(),
            WitnessMap::Prefix { len } => config[..*len].to_vec(),
            WitnessMap::Complement => config.iter().map(|&x| 1 - x.min(1)).collect(),
            WitnessMap::LiteralSelection { num_variables, literals } => {
                let mut out = alloc::vec![0; *num_variables];
                for (&lit, _) in literals.iter().zip(config).filter(|(_, &x)| x == 1) {
                    if lit > 0 {
                        out[lit as usize - 1] = 1;
                    }
                }
                out
            }
            WitnessMap::OneHot { vertices, colors } => (0..*vertices)
                .map(|v| (0..*colors).find(|c| config[v * colors + c] == 1).unwrap_or(0))
                .collect(),
        }
    }
}

/// Maps a target value back to a source value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "map", rename_all = "snake_case"))]
pub enum ValueMap {
    /// `(scale * v + offset) / divisor`, reported with the source's kind.
    Affine { scale: i64, offset: i64, divisor: i64, kind: Aggregate, sense: Option<Sense> },
    /// `Or(v >= bound)` for `Maximize`, `Or(v <= bound)` for `Minimize`.
    Threshold { sense: Sense, bound: i64 },
}

impl ValueMap {
    pub fn identity(kind: Aggregate) -> Self {
        ValueMap::offset(kind, 0)
    }

    pub fn offset(kind: Aggregate, offset: i64) -> Self {
        ValueMap::Affine { scale: 1, offset, divisor: 1, kind, sense: None }
    }

    pub fn apply(&self, value: &AggregatedValue) -> AggregatedValue {
        match *self {
            ValueMap::Affine { scale, offset, divisor, kind, sense } => {
                match (value.feasible, value.payload.as_int(), value.payload.as_bool()) {
                    (_, _, Some(b)) if kind == Aggregate::And => AggregatedValue::and(b),
                    (_, _, Some(b)) => AggregatedValue::or(b),
                    (true, Some(v), _) => {
                        let mapped = (scale * v + offset).div_euclid(divisor);
                        AggregatedValue::numeric(kind, sense, mapped, true)
                    }
                    _ => AggregatedValue::identity(kind, sense),
                }
            }
            ValueMap::Threshold { sense, bound } => {
                let met = value.feasible
                    && value.payload.as_int().is_some_and(|v| match sense {
                        Sense::Maximize => v >= bound,
                        Sense::Minimize => v <= bound,
                    });
                AggregatedValue::or(met)
            }
        }
    }
}

/// Self-contained data for mapping target answers back to the source.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Extraction {
    pub rule: String,
    pub target_variables: usize,
    pub witness: Option<WitnessMap>,
    pub value: Option<ValueMap>,
}

impl Extraction {
    pub fn map_witness(&self, target_config: &[usize]) -> Result<Vec<usize>> {
        let map = self.witness.as_ref().ok_or_else(|| Error::NotWitnessCapable(self.rule.clone()))?;
        if target_config.len() != self.target_variables {
            return Err(Error::DimensionMismatch {
                expected: self.target_variables,
                found: target_config.len(),
            });
        }
        Ok(map.apply(target_config))
    }

    pub fn map_value(&self, target_value: &AggregatedValue) -> Result<AggregatedValue> {
        let map = self.value.as_ref().ok_or_else(|| Error::NoValueMap(self.rule.clone()))?;
        Ok(map.apply(target_value))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub target: Instance,
    pub extraction: Extraction,
}

impl ReductionOutcome {
    pub fn extract_solution(&self, target_config: &[usize]) -> Result<Configuration> {
        self.target.configuration_space().check(target_config)?;
        self.extraction.map_witness(target_config).map(Configuration)
    }

    pub fn extract_value(&self, target_value: &AggregatedValue) -> Result<AggregatedValue> {
        self.extraction.map_value(target_value)
    }
}

pub fn apply(rule: &ReductionRule, instance: &Instance) -> Result<ReductionOutcome> {
    rule.apply(instance)
}

pub fn extract_solution(outcome: &ReductionOutcome, target_config: &[usize]) -> Result<Configuration> {
    outcome.extract_solution(target_config)
}

pub fn extract_value(outcome: &ReductionOutcome, target_value: &AggregatedValue) -> Result<AggregatedValue> {
    outcome.extract_value(target_value)
}
