//! The uniform problem interface: configuration spaces, aggregated values and
//! the fold that brute force is built on.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::error::{Error, Result};

/// Default limit on the number of configurations a fold may visit.
pub const DEFAULT_MAX_CONFIGS: u64 = 1 << 20;

/// Optimization sense, stored with `Extremum` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Sense {
    Maximize,
    Minimize,
}

impl Sense {
    pub fn short(self) -> &'static str {
        match self {
            Sense::Maximize => "max",
            Sense::Minimize => "min",
        }
    }
}

/// How per-configuration values combine over a configuration space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Aggregate {
    Max,
    Min,
    Or,
    Sum,
    And,
    Extremum,
}

impl Aggregate {
    pub fn name(self) -> &'static str {
        match self {
            Aggregate::Max => "Max",
            Aggregate::Min => "Min",
            Aggregate::Or => "Or",
            Aggregate::Sum => "Sum",
            Aggregate::And => "And",
            Aggregate::Extremum => "Extremum",
        }
    }

    /// Whether a fold of this kind can name a configuration attaining it.
    pub fn supports_witness(self) -> bool {
        !matches!(self, Aggregate::Sum | Aggregate::And)
    }

    pub fn is_boolean(self) -> bool {
        matches!(self, Aggregate::Or | Aggregate::And)
    }
}

impl fmt::Display for Aggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Payload {
    Int(i64),
    Bool(bool),
}

impl Payload {
    pub fn as_int(self) -> Option<i64> {
        match self {
            Payload::Int(v) => Some(v),
            Payload::Bool(_) => None,
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Payload::Bool(b) => Some(b),
            Payload::Int(_) => None,
        }
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Int(v) => write!(f, "{v}"),
            Payload::Bool(b) => write!(f, "{b}"),
        }
    }
}

/// A tagged evaluation result.
///
/// `feasible` records whether the evaluated configuration satisfies the hard
/// constraints of its instance. For `Max`, `Min` and `Extremum` an infeasible
/// value never wins a combine against a feasible one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AggregatedValue {
    pub kind: Aggregate,
    pub sense: Option<Sense>,
    pub payload: Payload,
    pub feasible: bool,
}

impl AggregatedValue {
    pub fn max(payload: i64) -> Self {
        Self::numeric(Aggregate::Max, None, payload, true)
    }

    pub fn min(payload: i64) -> Self {
        Self::numeric(Aggregate::Min, None, payload, true)
    }

    pub fn or(payload: bool) -> Self {
        Self { kind: Aggregate::Or, sense: None, payload: Payload::Bool(payload), feasible: true }
    }

    pub fn and(payload: bool) -> Self {
        Self { kind: Aggregate::And, sense: None, payload: Payload::Bool(payload), feasible: true }
    }

    pub fn sum(payload: i64) -> Self {
        Self::numeric(Aggregate::Sum, None, payload, true)
    }

    pub fn extremum(sense: Sense, payload: i64) -> Self {
        Self::numeric(Aggregate::Extremum, Some(sense), payload, true)
    }

    pub fn numeric(kind: Aggregate, sense: Option<Sense>, payload: i64, feasible: bool) -> Self {
        Self { kind, sense, payload: Payload::Int(payload), feasible }
    }

    pub fn with_feasible(mut self, feasible: bool) -> Self {
        self.feasible = feasible;
        self
    }

    /// The neutral element of `combine` for a kind.
    pub fn identity(kind: Aggregate, sense: Option<Sense>) -> Self {
        match effective_sense(kind, sense) {
            Some(Sense::Maximize) => Self::numeric(kind, sense, i64::MIN, false),
            Some(Sense::Minimize) => Self::numeric(kind, sense, i64::MAX, false),
            None => match kind {
                Aggregate::Or => Self::or(false).with_feasible(false),
                Aggregate::And => Self::and(true),
                _ => Self::sum(0),
            },
        }
    }

    /// Combines two values of the same kind.
    ///
    /// Max, Min and Extremum order values by feasibility first and payload
    /// second; Or and And are disjunction and conjunction; Sum adds.
    pub fn combine(self, other: Self) -> Self {
        debug_assert_eq!(self.kind, other.kind, "combining values of different kinds");
        match self.kind {
            Aggregate::Or => Self {
                payload: Payload::Bool(self.bool_payload() || other.bool_payload()),
                feasible: self.feasible || other.feasible,
                ..self
            },
            Aggregate::And => Self {
                payload: Payload::Bool(self.bool_payload() && other.bool_payload()),
                feasible: self.feasible && other.feasible,
                ..self
            },
            Aggregate::Sum => Self {
                payload: Payload::Int(self.int_payload().wrapping_add(other.int_payload())),
                feasible: self.feasible && other.feasible,
                ..self
            },
            _ => {
                if other.improves_on(&self) {
                    other
                } else {
                    self
                }
            }
        }
    }

    /// Strict improvement in the fold order. Used to pick the first witness.
    pub fn improves_on(&self, current: &Self) -> bool {
        match self.kind {
            Aggregate::Or => self.bool_payload() && !current.bool_payload(),
            Aggregate::Sum | Aggregate::And => false,
            _ => {
                if self.feasible != current.feasible {
                    return self.feasible;
                }
                let (a, b) = (self.int_payload(), current.int_payload());
                match effective_sense(self.kind, self.sense) {
                    Some(Sense::Minimize) => a < b,
                    _ => a > b,
                }
            }
        }
    }

    /// `true` when this value denotes success: feasible for optimization
    /// kinds, `true` for boolean kinds.
    pub fn is_satisfied(&self) -> bool {
        match self.payload {
            Payload::Bool(b) => b && self.feasible,
            Payload::Int(_) => self.feasible,
        }
    }

    fn int_payload(&self) -> i64 {
        self.payload.as_int().unwrap_or_default()
    }

    fn bool_payload(&self) -> bool {
        self.payload.as_bool().unwrap_or_default()
    }
}

fn effective_sense(kind: Aggregate, sense: Option<Sense>) -> Option<Sense> {
    match kind {
        Aggregate::Max => Some(Sense::Maximize),
        Aggregate::Min => Some(Sense::Minimize),
        Aggregate::Extremum => Some(sense.unwrap_or(Sense::Maximize)),
        _ => None,
    }
}

impl fmt::Display for AggregatedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.sense) {
            (Aggregate::Extremum, Some(sense)) => {
                write!(f, "Extremum({}, {})", sense.short(), self.payload)
            }
            (kind, _) => write!(f, "{}({})", kind, self.payload),
        }
    }
}

/// Number of admissible values per variable; variable `i` ranges over
/// `0..dims[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigurationSpace {
    dims: Vec<usize>,
}

impl ConfigurationSpace {
    pub fn new(dims: Vec<usize>) -> Self {
        Self { dims }
    }

    pub fn binary(n: usize) -> Self {
        Self { dims: vec![2; n] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn num_variables(&self) -> usize {
        self.dims.len()
    }

    /// Number of configurations, `None` on overflow.
    pub fn size(&self) -> Option<u64> {
        self.dims.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
    }

    pub fn check(&self, config: &[usize]) -> Result<()> {
        if config.len() != self.dims.len() {
            return Err(Error::DimensionMismatch { expected: self.dims.len(), found: config.len() });
        }
        for (index, (&value, &bound)) in config.iter().zip(&self.dims).enumerate() {
            if value >= bound {
                return Err(Error::DomainViolation { index, value, bound });
            }
        }
        Ok(())
    }

    /// All configurations in lexicographic order, last variable fastest.
    pub fn iter(&self) -> ConfigIter<'_> {
        let done = self.dims.contains(&0);
        ConfigIter { dims: &self.dims, current: vec![0; self.dims.len()], done }
    }
}

pub struct ConfigIter<'a> {
    dims: &'a [usize],
    current: Vec<usize>,
    done: bool,
}

impl Iterator for ConfigIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = self.dims.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.dims[i] {
                break;
            }
            self.current[i] = 0;
        }
        Some(out)
    }
}

/// One value per variable of a configuration space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Configuration(pub Vec<usize>);

impl Configuration {
    pub fn new(values: Vec<usize>) -> Self {
        Self(values)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for Configuration {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for Configuration {
    fn from(values: Vec<usize>) -> Self {
        Self(values)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// The interface every problem type implements.
pub trait Problem {
    fn configuration_space(&self) -> ConfigurationSpace;

    fn aggregate(&self) -> Aggregate;

    /// Optimization sense for `Extremum` problems.
    fn sense(&self) -> Option<Sense> {
        None
    }

    /// Evaluates a configuration already known to lie in the space.
    fn evaluate_unchecked(&self, config: &[usize]) -> AggregatedValue;

    fn evaluate(&self, config: &[usize]) -> Result<AggregatedValue> {
        self.configuration_space().check(config)?;
        Ok(self.evaluate_unchecked(config))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Folded {
    pub value: AggregatedValue,
    pub witness: Option<Configuration>,
}

/// Folds `evaluate` over the whole configuration space.
pub fn fold_space<P: Problem + ?Sized>(problem: &P) -> Result<Folded> {
    fold_space_within(problem, DEFAULT_MAX_CONFIGS)
}

/// [`fold_space`] with an explicit configuration budget.
///
/// The witness is the first configuration in lexicographic order attaining
/// the folded value; it is omitted for `Sum`/`And` and when no configuration
/// succeeds.
pub fn fold_space_within<P: Problem + ?Sized>(problem: &P, max_configs: u64) -> Result<Folded> {
    let space = problem.configuration_space();
    match space.size() {
        Some(n) if n <= max_configs => {}
        _ => return Err(Error::BudgetExceeded { what: "configuration", limit: max_configs }),
    }
    let kind = problem.aggregate();
    let mut acc = AggregatedValue::identity(kind, problem.sense());
    let mut witness: Option<Vec<usize>> = None;
    for config in space.iter() {
        let value = problem.evaluate_unchecked(&config);
        if kind.supports_witness() && value.improves_on(&acc) {
            witness = Some(config);
        }
        acc = acc.combine(value);
    }
    let witness = witness.filter(|_| acc.is_satisfied()).map(Configuration);
    Ok(Folded { value: acc, witness })
}

/// A decision wrapper around a `Max` or `Min` problem: is there a feasible
/// configuration meeting `bound`?
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecisionProblem<P> {
    pub inner: Box<P>,
    pub bound: i64,
}

impl<P: Problem> DecisionProblem<P> {
    pub fn new(inner: P, bound: i64) -> Result<Self> {
        match inner.aggregate() {
            Aggregate::Max | Aggregate::Min => Ok(Self { inner: Box::new(inner), bound }),
            other => Err(Error::KindMismatch { expected: "Max or Min", found: format!("{other}") }),
        }
    }

    /// Whether an inner value meets the bound.
    pub fn accepts(&self, value: &AggregatedValue) -> bool {
        let Some(payload) = value.payload.as_int() else { return false };
        value.feasible
            && match value.kind {
                Aggregate::Max => payload >= self.bound,
                _ => payload <= self.bound,
            }
    }
}

impl<P: Problem> Problem for DecisionProblem<P> {
    fn configuration_space(&self) -> ConfigurationSpace {
        self.inner.configuration_space()
    }

    fn aggregate(&self) -> Aggregate {
        Aggregate::Or
    }

    fn evaluate_unchecked(&self, config: &[usize]) -> AggregatedValue {
        AggregatedValue::or(self.accepts(&self.inner.evaluate_unchecked(config)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Parity(usize);

    impl Problem for Parity {
        fn configuration_space(&self) -> ConfigurationSpace {
            ConfigurationSpace::binary(self.0)
        }
        fn aggregate(&self) -> Aggregate {
            Aggregate::Sum
        }
        fn evaluate_unchecked(&self, config: &[usize]) -> AggregatedValue {
            AggregatedValue::sum((config.iter().sum::<usize>() % 2) as i64)
        }
    }

    #[test]
    fn iterates_lexicographically() {
        let space = ConfigurationSpace::new(vec![2, 3]);
        let all: Vec<_> = space.iter().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
    }

    #[test]
    fn empty_space_has_one_configuration() {
        let space = ConfigurationSpace::new(vec![]);
        assert_eq!(space.size(), Some(1));
        assert_eq!(space.iter().collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn check_reports_mismatch_and_domain() {
        let space = ConfigurationSpace::binary(3);
        assert_eq!(space.check(&[0, 1]), Err(Error::DimensionMismatch { expected: 3, found: 2 }));
        assert_eq!(space.check(&[0, 2, 0]), Err(Error::DomainViolation { index: 1, value: 2, bound: 2 }));
    }

    #[test]
    fn sum_fold_has_no_witness() {
        let folded = fold_space(&Parity(3)).unwrap();
        assert_eq!(folded.value, AggregatedValue::sum(4));
        assert_eq!(folded.witness, None);
    }

    #[test]
    fn budget_is_enforced() {
        let err = fold_space_within(&Parity(5), 16).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { what: "configuration", limit: 16 });
    }

    #[test]
    fn infeasible_never_beats_feasible() {
        let bad = AggregatedValue::max(10).with_feasible(false);
        let good = AggregatedValue::max(1);
        assert_eq!(bad.combine(good), good);
        assert_eq!(good.combine(bad), good);
        let bad_min = AggregatedValue::min(-10).with_feasible(false);
        assert_eq!(bad_min.combine(AggregatedValue::min(7)), AggregatedValue::min(7));
    }

    #[test]
    fn rendering() {
        assert_eq!(format!("{}", AggregatedValue::max(2)), "Max(2)");
        assert_eq!(format!("{}", AggregatedValue::or(false)), "Or(false)");
        assert_eq!(format!("{}", AggregatedValue::extremum(Sense::Maximize, 11)), "Extremum(max, 11)");
    }
}
