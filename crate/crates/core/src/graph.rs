//! The reduction graph: validated rule registry, cheapest-path routing,
//! chaining and topology reports.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::{fold_space_within, AggregatedValue, Configuration, Problem, DEFAULT_MAX_CONFIGS};
use crate::problems::{Instance, ProblemKind, Registry, VariantKey};
use crate::rules::{shipped_rules, Extraction, ReductionRule};
use crate::symbolic::{single_scale_ordering, OverheadMap, SymbolicExpr};

/// An ordered chain of rules with its composite overhead and cost.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionPath {
    pub source: VariantKey,
    pub target: VariantKey,
    pub steps: Vec<ReductionRule>,
    /// Target measures of the last step as expressions over source measures.
    pub composite_overhead: OverheadMap,
    /// Terminal complexity evaluated at the composite overhead.
    pub estimated_cost: SymbolicExpr,
}

impl ReductionPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.steps.iter().map(ReductionRule::name).collect()
    }

    pub fn is_witness_capable(&self) -> bool {
        self.steps.iter().all(|r| r.witness_capable)
    }

    /// Variants visited, source first.
    pub fn nodes(&self) -> Vec<&VariantKey> {
        let mut nodes = alloc::vec![&self.source];
        nodes.extend(self.steps.iter().map(|r| &r.target));
        nodes
    }

    fn order(&self, other: &ReductionPath) -> Ordering {
        single_scale_ordering(&self.estimated_cost, &other.estimated_cost)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.names().cmp(&other.names()))
    }
}

/// The result of chaining reductions over an instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionEnvelope {
    pub source: Instance,
    pub path: ReductionPath,
    pub target: Instance,
    /// One extraction per step, in application order.
    pub trace: Vec<Extraction>,
}

impl ReductionEnvelope {
    pub fn extract(&self, target_config: &[usize]) -> Result<Configuration> {
        self.target.configuration_space().check(target_config)?;
        extract_along(&self.trace, target_config)
    }

    pub fn extract_value(&self, target_value: &AggregatedValue) -> Result<AggregatedValue> {
        self.trace.iter().rev().try_fold(*target_value, |v, step| step.map_value(&v))
    }
}

/// Maps a configuration of the last target back through `trace`.
pub fn extract_along(trace: &[Extraction], target_config: &[usize]) -> Result<Configuration> {
    let mut config = target_config.to_vec();
    for step in trace.iter().rev() {
        config = step.map_witness(&config)?;
    }
    Ok(Configuration(config))
}

/// Applies `steps` in order, returning the final instance and the trace.
pub fn reduce_steps(steps: &[ReductionRule], instance: &Instance) -> Result<(Instance, Vec<Extraction>)> {
    let mut current = instance.clone();
    let mut trace = Vec::with_capacity(steps.len());
    for (index, rule) in steps.iter().enumerate() {
        let outcome =
            rule.apply(&current).map_err(|e| Error::Step { index, source: alloc::boxed::Box::new(e) })?;
        current = outcome.target;
        trace.push(outcome.extraction);
    }
    Ok((current, trace))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTripReport {
    pub passed: bool,
    pub source_optimum: AggregatedValue,
    pub extracted: Option<Configuration>,
    pub extracted_value: Option<AggregatedValue>,
}

/// Reduces, solves the target by brute force, maps the witness back and
/// compares against the source's brute-force optimum.
///
/// When the target has no witness the check passes iff the source has none
/// either.
pub fn round_trip_check(steps: &[ReductionRule], instance: &Instance) -> Result<RoundTripReport> {
    round_trip_check_within(steps, instance, DEFAULT_MAX_CONFIGS)
}

pub fn round_trip_check_within(
    steps: &[ReductionRule],
    instance: &Instance,
    max_configs: u64,
) -> Result<RoundTripReport> {
    let source = fold_space_within(instance, max_configs)?;
    let (target, trace) = reduce_steps(steps, instance)?;
    let folded = fold_space_within(&target, max_configs)?;
    let Some(witness) = folded.witness else {
        return Ok(RoundTripReport {
            passed: source.witness.is_none(),
            source_optimum: source.value,
            extracted: None,
            extracted_value: None,
        });
    };
    let config = extract_along(&trace, &witness)?;
    let value = instance.evaluate(&config)?;
    Ok(RoundTripReport {
        passed: value == source.value,
        source_optimum: source.value,
        extracted: Some(config),
        extracted_value: Some(value),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TopologyReport {
    pub reachable_to_ilp: BTreeSet<VariantKey>,
    pub reachable_from_3sat: BTreeSet<VariantKey>,
    pub isolated: BTreeSet<VariantKey>,
}

/// Registered variants plus validated rules. Read-only after construction.
#[derive(Debug, Clone)]
pub struct ReductionGraph {
    registry: Registry,
    rules: Vec<ReductionRule>,
    outgoing: BTreeMap<VariantKey, Vec<usize>>,
}

impl ReductionGraph {
    /// Validates every rule against the registry: known endpoints, overhead
    /// keys equal to the target's measures, overhead variables among the
    /// source's measures, monotone polynomial overheads, one rule per pair.
    pub fn new(registry: Registry, rules: Vec<ReductionRule>) -> Result<Self> {
        let mut outgoing: BTreeMap<VariantKey, Vec<usize>> = BTreeMap::new();
        let mut pairs = BTreeSet::new();
        for (i, rule) in rules.iter().enumerate() {
            let name = rule.name();
            let invalid = |msg: String| Error::InvalidRegistration(format!("rule `{name}`: {msg}"));
            let source = registry
                .lookup(&rule.source)
                .ok_or_else(|| invalid(format!("unregistered source {}", rule.source)))?;
            let target = registry
                .lookup(&rule.target)
                .ok_or_else(|| invalid(format!("unregistered target {}", rule.target)))?;
            let keys: BTreeSet<&str> = rule.overhead.keys().collect();
            let wanted: BTreeSet<&str> = target.size_measure_names.iter().map(String::as_str).collect();
            if keys != wanted || keys.len() != rule.overhead.len() {
                return Err(invalid(format!("overhead keys must be exactly {:?}", wanted)));
            }
            for (key, expr) in rule.overhead.iter() {
                for v in expr.variables() {
                    if !source.size_measure_names.contains(&v) {
                        return Err(invalid(format!("`{key}` uses `{v}`, not a source measure")));
                    }
                }
                let monotone = expr
                    .to_polynomial()
                    .is_some_and(|p| p.has_nonnegative_coefficients() && !p.variables().is_empty());
                if !monotone {
                    return Err(invalid(format!(
                        "`{key}: {expr}` is not a non-constant polynomial with non-negative coefficients"
                    )));
                }
            }
            if !pairs.insert((rule.source.clone(), rule.target.clone())) {
                return Err(Error::DuplicateRule(name));
            }
            outgoing.entry(rule.source.clone()).or_default().push(i);
        }
        Ok(Self { registry, rules, outgoing })
    }

    /// The shipped catalogue and rules.
    pub fn shipped() -> Result<Self> {
        Self::new(Registry::catalogue()?, shipped_rules())
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn rules(&self) -> &[ReductionRule] {
        &self.rules
    }

    pub fn rule(&self, name: &str) -> Option<&ReductionRule> {
        self.rules.iter().find(|r| r.name() == name)
    }

    pub fn outgoing(&self, key: &VariantKey) -> Vec<&ReductionRule> {
        self.outgoing.get(key).into_iter().flatten().map(|&i| &self.rules[i]).collect()
    }

    pub fn incoming(&self, key: &VariantKey) -> Vec<&ReductionRule> {
        self.rules.iter().filter(|r| &r.target == key).collect()
    }

    fn complexity(&self, key: &VariantKey) -> Result<&SymbolicExpr> {
        self.registry.lookup(key).map(|d| &d.complexity).ok_or_else(|| Error::UnknownProblem(key.to_string()))
    }

    /// Builds a path from `source` along `steps`, checking endpoint
    /// compatibility and folding the overheads.
    pub fn make_path(&self, source: &VariantKey, steps: Vec<ReductionRule>) -> Result<ReductionPath> {
        let measures = self
            .registry
            .lookup(source)
            .ok_or_else(|| Error::UnknownProblem(source.to_string()))?
            .size_measure_names
            .clone();
        let mut composite = OverheadMap::identity(measures.iter().map(String::as_str));
        let mut at = source.clone();
        for rule in &steps {
            if rule.source != at {
                return Err(Error::TypeMismatch { expected: at.to_string(), found: rule.source.to_string() });
            }
            composite = OverheadMap::compose(&rule.overhead, &composite)?;
            at = rule.target.clone();
        }
        let estimated_cost = composite.apply_to(self.complexity(&at)?)?.canonical();
        Ok(ReductionPath {
            source: source.clone(),
            target: at,
            steps,
            composite_overhead: composite,
            estimated_cost,
        })
    }

    /// Resolves rule names into a path starting at `source`.
    pub fn path_from_names(&self, source: &VariantKey, names: &[String]) -> Result<ReductionPath> {
        let steps = names
            .iter()
            .map(|n| self.rule(n).cloned().ok_or_else(|| Error::UnknownProblem(format!("rule `{n}`"))))
            .collect::<Result<Vec<_>>>()?;
        self.make_path(source, steps)
    }

    /// Cheapest path from `from` to `to`, or `None` when unreachable.
    pub fn find_path(
        &self,
        from: &VariantKey,
        to: &VariantKey,
        witness_only: bool,
    ) -> Result<Option<ReductionPath>> {
        self.find_path_to_any(from, core::slice::from_ref(to), witness_only)
    }

    /// Cheapest path from `from` to any of `targets`.
    ///
    /// Composed costs are not monotone along a path (entering a node with a
    /// smaller complexity can lower the cost), so every simple path is
    /// considered. The order is: estimated cost compared on a single scale,
    /// then edge count, then the sequence of rule names.
    pub fn find_path_to_any(
        &self,
        from: &VariantKey,
        targets: &[VariantKey],
        witness_only: bool,
    ) -> Result<Option<ReductionPath>> {
        for key in core::iter::once(from).chain(targets) {
            self.complexity(key)?;
        }
        let mut best: Option<ReductionPath> = None;
        let mut stack: Vec<(VariantKey, Vec<usize>)> = alloc::vec![(from.clone(), Vec::new())];
        while let Some((at, steps)) = stack.pop() {
            if targets.contains(&at) {
                let rules = steps.iter().map(|&i| self.rules[i].clone()).collect();
                let path = self.make_path(from, rules)?;
                if best.as_ref().is_none_or(|b| path.order(b) == Ordering::Less) {
                    best = Some(path);
                }
            }
            for &i in self.outgoing.get(&at).into_iter().flatten() {
                let rule = &self.rules[i];
                if witness_only && !rule.witness_capable {
                    continue;
                }
                let revisits =
                    rule.target == *from || steps.iter().any(|&j| self.rules[j].target == rule.target);
                if revisits {
                    continue;
                }
                let mut next = steps.clone();
                next.push(i);
                stack.push((rule.target.clone(), next));
            }
        }
        Ok(best)
    }

    /// Cheapest path between two names or aliases; a target without tags
    /// matches every variant of its problem.
    pub fn find_path_by_name(&self, from: &str, to: &str) -> Result<Option<ReductionPath>> {
        let source = self.registry.resolve(from)?.variant.clone();
        let targets = self.resolve_targets(to)?;
        self.find_path_to_any(&source, &targets, true)
    }

    /// Variants named by `text`: exactly one when tags are given, otherwise
    /// every registered variant of the problem.
    pub fn resolve_targets(&self, text: &str) -> Result<Vec<VariantKey>> {
        let key: VariantKey = text.parse()?;
        if !key.tags.is_empty() {
            return Ok(alloc::vec![self.registry.resolve(text)?.variant.clone()]);
        }
        let all: Vec<VariantKey> =
            self.registry.variants_of(key.problem).into_iter().map(|d| d.variant.clone()).collect();
        if all.is_empty() {
            return Err(Error::UnknownProblem(text.into()));
        }
        Ok(all)
    }

    pub fn reduce_along(&self, path: &ReductionPath, instance: &Instance) -> Result<ReductionEnvelope> {
        let found = instance.variant();
        if found != path.source {
            return Err(Error::TypeMismatch { expected: path.source.to_string(), found: found.to_string() });
        }
        let (target, trace) = reduce_steps(&path.steps, instance)?;
        Ok(ReductionEnvelope { source: instance.clone(), path: path.clone(), target, trace })
    }

    fn reachable(&self, start: &VariantKey, forward: bool) -> BTreeSet<VariantKey> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(at) = queue.pop_front() {
            for rule in &self.rules {
                let (from, to) =
                    if forward { (&rule.source, &rule.target) } else { (&rule.target, &rule.source) };
                if from == &at && to != start && seen.insert(to.clone()) {
                    queue.push_back(to.clone());
                }
            }
        }
        seen
    }

    pub fn topology_report(&self) -> TopologyReport {
        let ilp = VariantKey::new(ProblemKind::IntegerLinearProgram);
        let three_sat = VariantKey::new(ProblemKind::ThreeSatisfiability).with_tag("k", "3");
        let isolated = self
            .registry
            .iter()
            .map(|d| d.variant.clone())
            .filter(|v| self.rules.iter().all(|r| &r.source != v && &r.target != v))
            .collect();
        TopologyReport {
            reachable_to_ilp: self.reachable(&ilp, false),
            reachable_from_3sat: self.reachable(&three_sat, true),
            isolated,
        }
    }
}
