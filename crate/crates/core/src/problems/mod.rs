//! The problem catalogue: instance data, evaluation semantics, size measures
//! and the registry of problem variants.

mod graph;
mod ilp;
mod qubo;
mod sat;
mod set_cover;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use graph::{Coloring, Graph};
pub use ilp::{Ilp, LinearConstraint, Relation};
pub use qubo::{Qubo, SpinGlass};
pub use sat::Cnf;
pub use set_cover::SetCover;

use crate::error::{Error, Result};
use crate::model::{Aggregate, AggregatedValue, ConfigurationSpace, DecisionProblem, Problem, Sense};
use crate::symbolic::SymbolicExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProblemKind {
    Satisfiability,
    ThreeSatisfiability,
    MaximumIndependentSet,
    MinimumVertexCover,
    MaximumClique,
    MinimumDominatingSet,
    MinimumSetCover,
    MaxCut,
    Qubo,
    SpinGlass,
    GraphColoring,
    IntegerLinearProgram,
    DecisionMaximumIndependentSet,
    DecisionMinimumVertexCover,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 14] = [
        ProblemKind::Satisfiability,
        ProblemKind::ThreeSatisfiability,
        ProblemKind::MaximumIndependentSet,
        ProblemKind::MinimumVertexCover,
        ProblemKind::MaximumClique,
        ProblemKind::MinimumDominatingSet,
        ProblemKind::MinimumSetCover,
        ProblemKind::MaxCut,
        ProblemKind::Qubo,
        ProblemKind::SpinGlass,
        ProblemKind::GraphColoring,
        ProblemKind::IntegerLinearProgram,
        ProblemKind::DecisionMaximumIndependentSet,
        ProblemKind::DecisionMinimumVertexCover,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Satisfiability => "Satisfiability",
            ProblemKind::ThreeSatisfiability => "ThreeSatisfiability",
            ProblemKind::MaximumIndependentSet => "MaximumIndependentSet",
            ProblemKind::MinimumVertexCover => "MinimumVertexCover",
            ProblemKind::MaximumClique => "MaximumClique",
            ProblemKind::MinimumDominatingSet => "MinimumDominatingSet",
            ProblemKind::MinimumSetCover => "MinimumSetCover",
            ProblemKind::MaxCut => "MaxCut",
            ProblemKind::Qubo => "QUBO",
            ProblemKind::SpinGlass => "SpinGlass",
            ProblemKind::GraphColoring => "GraphColoring",
            ProblemKind::IntegerLinearProgram => "IntegerLinearProgram",
            ProblemKind::DecisionMaximumIndependentSet => "DecisionMaximumIndependentSet",
            ProblemKind::DecisionMinimumVertexCover => "DecisionMinimumVertexCover",
        }
    }

    /// Short name used on the command line and in route listings.
    pub fn alias(self) -> &'static str {
        match self {
            ProblemKind::Satisfiability => "SAT",
            ProblemKind::ThreeSatisfiability => "3SAT",
            ProblemKind::MaximumIndependentSet => "MIS",
            ProblemKind::MinimumVertexCover => "MVC",
            ProblemKind::MaximumClique => "MaxClique",
            ProblemKind::MinimumDominatingSet => "MDS",
            ProblemKind::MinimumSetCover => "SetCover",
            ProblemKind::MaxCut => "MaxCut",
            ProblemKind::Qubo => "QUBO",
            ProblemKind::SpinGlass => "SpinGlass",
            ProblemKind::GraphColoring => "Coloring",
            ProblemKind::IntegerLinearProgram => "ILP",
            ProblemKind::DecisionMaximumIndependentSet => "DecisionMIS",
            ProblemKind::DecisionMinimumVertexCover => "DecisionMVC",
        }
    }

    fn extra_aliases(self) -> &'static [&'static str] {
        match self {
            ProblemKind::ThreeSatisfiability => &["KSAT", "3-SAT"],
            ProblemKind::MinimumVertexCover => &["VC", "VertexCover"],
            ProblemKind::MaximumClique => &["Clique"],
            ProblemKind::MinimumDominatingSet => &["DS", "DominatingSet"],
            ProblemKind::MinimumSetCover => &["SC"],
            ProblemKind::SpinGlass => &["Ising"],
            ProblemKind::GraphColoring => &["KColoring"],
            ProblemKind::DecisionMinimumVertexCover => &["DecisionVC", "DecisionVertexCover"],
            _ => &[],
        }
    }

    /// Resolves a full name or alias, case-insensitively.
    pub fn from_name(name: &str) -> Option<ProblemKind> {
        ProblemKind::ALL.into_iter().find(|k| {
            k.name().eq_ignore_ascii_case(name)
                || k.alias().eq_ignore_ascii_case(name)
                || k.extra_aliases().iter().any(|a| a.eq_ignore_ascii_case(name))
        })
    }

    pub fn size_measure_names(self) -> &'static [&'static str] {
        match self {
            ProblemKind::Satisfiability | ProblemKind::ThreeSatisfiability => &["n", "m", "L"],
            ProblemKind::MaximumIndependentSet
            | ProblemKind::MinimumVertexCover
            | ProblemKind::MaximumClique
            | ProblemKind::MinimumDominatingSet
            | ProblemKind::MaxCut
            | ProblemKind::DecisionMaximumIndependentSet
            | ProblemKind::DecisionMinimumVertexCover => &["V", "E"],
            ProblemKind::MinimumSetCover => &["S", "U"],
            ProblemKind::Qubo | ProblemKind::SpinGlass => &["n"],
            ProblemKind::GraphColoring => &["V", "E", "k"],
            ProblemKind::IntegerLinearProgram => &["n", "c"],
        }
    }

    pub fn aggregate(self) -> Aggregate {
        match self {
            ProblemKind::Satisfiability
            | ProblemKind::ThreeSatisfiability
            | ProblemKind::GraphColoring
            | ProblemKind::DecisionMaximumIndependentSet
            | ProblemKind::DecisionMinimumVertexCover => Aggregate::Or,
            ProblemKind::MaximumIndependentSet
            | ProblemKind::MaximumClique
            | ProblemKind::MaxCut
            | ProblemKind::Qubo
            | ProblemKind::SpinGlass => Aggregate::Max,
            ProblemKind::MinimumVertexCover
            | ProblemKind::MinimumDominatingSet
            | ProblemKind::MinimumSetCover => Aggregate::Min,
            ProblemKind::IntegerLinearProgram => Aggregate::Extremum,
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A node of the reduction graph: a problem type plus its variant tags.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariantKey {
    pub problem: ProblemKind,
    pub tags: BTreeMap<String, String>,
}

impl VariantKey {
    pub fn new(problem: ProblemKind) -> Self {
        Self { problem, tags: BTreeMap::new() }
    }

    pub fn with_tag(mut self, key: &str, value: &str) -> Self {
        self.tags.insert(key.to_string(), value.to_string());
        self
    }

    pub fn tag(&self, key: &str) -> Option<&str> {
        self.tags.get(key).map(String::as_str)
    }

    /// Short form for route listings, e.g. `MIS` or `MIS[weight=integer]`.
    pub fn short(&self) -> String {
        self.render(self.problem.alias())
    }

    fn render(&self, name: &str) -> String {
        if self.tags.is_empty() {
            return name.to_string();
        }
        let tags: Vec<String> = self.tags.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{name}[{}]", tags.join(","))
    }
}

impl fmt::Display for VariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.problem.name()))
    }
}

impl FromStr for VariantKey {
    type Err = Error;

    /// Parses `Name` or `Name[tag=value,...]`; the name may be an alias.
    fn from_str(s: &str) -> Result<Self> {
        let (name, tags) = match s.split_once('[') {
            Some((name, rest)) => {
                let body = rest
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unterminated variant tags in `{s}`")))?;
                (name, Some(body))
            }
            None => (s, None),
        };
        let problem =
            ProblemKind::from_name(name.trim()).ok_or_else(|| Error::UnknownProblem(name.into()))?;
        let mut key = VariantKey::new(problem);
        for pair in tags.into_iter().flat_map(|b| b.split(',')).filter(|p| !p.trim().is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("malformed variant tag `{pair}`")))?;
            key.tags.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(key)
    }
}

/// A concrete instance of a catalogue problem.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Instance {
    Satisfiability(Cnf),
    ThreeSatisfiability(Cnf),
    MaximumIndependentSet(Graph),
    MinimumVertexCover(Graph),
    MaximumClique(Graph),
    MinimumDominatingSet(Graph),
    MinimumSetCover(SetCover),
    MaxCut(Graph),
    Qubo(Qubo),
    SpinGlass(SpinGlass),
    GraphColoring(Coloring),
    IntegerLinearProgram(Ilp),
    Decision(DecisionProblem<Instance>),
}

impl Instance {
    /// 3-SAT instance; every clause must have at most three literals.
    pub fn three_sat(cnf: Cnf) -> Result<Self> {
        Instance::ThreeSatisfiability(cnf).validated()
    }

    /// Checks invariants that depend on the problem type rather than the data.
    pub fn validated(self) -> Result<Self> {
        match &self {
            Instance::ThreeSatisfiability(cnf) if cnf.max_clause_len() > 3 => {
                return Err(Error::InvalidInstance("3-SAT clauses have at most three literals".into()))
            }
            Instance::MinimumVertexCover(g)
            | Instance::MaximumClique(g)
            | Instance::MinimumDominatingSet(g)
            | Instance::MaxCut(g)
                if g.is_weighted() =>
            {
                return Err(Error::InvalidInstance(format!("{} takes unweighted graphs", self.problem())))
            }
            Instance::Decision(d) => {
                d.inner.clone().validated()?;
            }
            _ => {}
        }
        Ok(self)
    }

    pub fn problem(&self) -> ProblemKind {
        match self {
            Instance::Satisfiability(_) => ProblemKind::Satisfiability,
            Instance::ThreeSatisfiability(_) => ProblemKind::ThreeSatisfiability,
            Instance::MaximumIndependentSet(_) => ProblemKind::MaximumIndependentSet,
            Instance::MinimumVertexCover(_) => ProblemKind::MinimumVertexCover,
            Instance::MaximumClique(_) => ProblemKind::MaximumClique,
            Instance::MinimumDominatingSet(_) => ProblemKind::MinimumDominatingSet,
            Instance::MinimumSetCover(_) => ProblemKind::MinimumSetCover,
            Instance::MaxCut(_) => ProblemKind::MaxCut,
            Instance::Qubo(_) => ProblemKind::Qubo,
            Instance::SpinGlass(_) => ProblemKind::SpinGlass,
            Instance::GraphColoring(_) => ProblemKind::GraphColoring,
            Instance::IntegerLinearProgram(_) => ProblemKind::IntegerLinearProgram,
            Instance::Decision(d) => match d.inner.problem() {
                ProblemKind::MinimumVertexCover => ProblemKind::DecisionMinimumVertexCover,
                // Decision variants of other problems are not registered; the
                // registry lookup reports them.
                _ => ProblemKind::DecisionMaximumIndependentSet,
            },
        }
    }

    pub fn variant(&self) -> VariantKey {
        let key = VariantKey::new(self.problem());
        match self {
            Instance::MaximumIndependentSet(g) => {
                key.with_tag("weight", if g.is_weighted() { "integer" } else { "unit" })
            }
            Instance::ThreeSatisfiability(_) => key.with_tag("k", "3"),
            Instance::Decision(d) => {
                let mut inner = d.inner.variant();
                inner.problem = key.problem;
                inner
            }
            _ => key,
        }
    }

    /// Measured size of every declared size measure, in declaration order.
    pub fn size_measures(&self) -> Vec<(&'static str, u64)> {
        let values: Vec<u64> = match self {
            Instance::Satisfiability(f) | Instance::ThreeSatisfiability(f) => {
                alloc::vec![f.num_variables(), f.num_clauses(), f.num_literals()]
                    .into_iter()
                    .map(|x| x as u64)
                    .collect()
            }
            Instance::MaximumIndependentSet(g)
            | Instance::MinimumVertexCover(g)
            | Instance::MaximumClique(g)
            | Instance::MinimumDominatingSet(g)
            | Instance::MaxCut(g) => alloc::vec![g.num_vertices() as u64, g.num_edges() as u64],
            Instance::MinimumSetCover(s) => {
                alloc::vec![s.num_sets() as u64, s.num_elements() as u64]
            }
            Instance::Qubo(q) => alloc::vec![q.n() as u64],
            Instance::SpinGlass(s) => alloc::vec![s.n() as u64],
            Instance::GraphColoring(c) => {
                alloc::vec![c.graph.num_vertices() as u64, c.graph.num_edges() as u64, c.colors as u64]
            }
            Instance::IntegerLinearProgram(ilp) => {
                alloc::vec![ilp.num_vars() as u64, ilp.num_constraints() as u64]
            }
            Instance::Decision(d) => {
                return d.inner.size_measures();
            }
        };
        self.problem().size_measure_names().iter().copied().zip(values).collect()
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Instance::MaximumIndependentSet(g)
            | Instance::MinimumVertexCover(g)
            | Instance::MaximumClique(g)
            | Instance::MinimumDominatingSet(g)
            | Instance::MaxCut(g) => Some(g),
            Instance::GraphColoring(c) => Some(&c.graph),
            _ => None,
        }
    }
}

impl Problem for Instance {
    fn configuration_space(&self) -> ConfigurationSpace {
        match self {
            Instance::Satisfiability(f) | Instance::ThreeSatisfiability(f) => {
                ConfigurationSpace::binary(f.num_variables())
            }
            Instance::MaximumIndependentSet(g)
            | Instance::MinimumVertexCover(g)
            | Instance::MaximumClique(g)
            | Instance::MinimumDominatingSet(g)
            | Instance::MaxCut(g) => ConfigurationSpace::binary(g.num_vertices()),
            Instance::MinimumSetCover(s) => ConfigurationSpace::binary(s.num_sets()),
            Instance::Qubo(q) => ConfigurationSpace::binary(q.n()),
            Instance::SpinGlass(s) => ConfigurationSpace::binary(s.n()),
            Instance::GraphColoring(c) => {
                ConfigurationSpace::new(alloc::vec![c.colors; c.graph.num_vertices()])
            }
            Instance::IntegerLinearProgram(ilp) => ConfigurationSpace::new(ilp.domain_sizes()),
            Instance::Decision(d) => d.configuration_space(),
        }
    }

    fn aggregate(&self) -> Aggregate {
        self.problem().aggregate()
    }

    fn sense(&self) -> Option<Sense> {
        match self {
            Instance::IntegerLinearProgram(ilp) => Some(ilp.sense()),
            _ => None,
        }
    }

    fn evaluate_unchecked(&self, x: &[usize]) -> AggregatedValue {
        match self {
            Instance::Satisfiability(f) | Instance::ThreeSatisfiability(f) => {
                AggregatedValue::or(f.is_satisfied_by(x))
            }
            Instance::MaximumIndependentSet(g) => {
                AggregatedValue::max(g.selected_weight(x)).with_feasible(g.is_independent(x))
            }
            Instance::MinimumVertexCover(g) => {
                AggregatedValue::min(Graph::selected_count(x)).with_feasible(g.is_vertex_cover(x))
            }
            Instance::MaximumClique(g) => {
                AggregatedValue::max(Graph::selected_count(x)).with_feasible(g.is_clique(x))
            }
            Instance::MinimumDominatingSet(g) => {
                AggregatedValue::min(Graph::selected_count(x)).with_feasible(g.is_dominating(x))
            }
            Instance::MinimumSetCover(s) => {
                AggregatedValue::min(Graph::selected_count(x)).with_feasible(s.covers(x))
            }
            Instance::MaxCut(g) => AggregatedValue::max(g.cut_size(x)),
            Instance::Qubo(q) => AggregatedValue::max(q.value(x)),
            Instance::SpinGlass(s) => AggregatedValue::max(-s.energy(x)),
            Instance::GraphColoring(c) => AggregatedValue::or(c.graph.is_proper_coloring(x)),
            Instance::IntegerLinearProgram(ilp) => {
                let values = ilp.values_of(x);
                AggregatedValue::extremum(ilp.sense(), ilp.objective_value(&values))
                    .with_feasible(ilp.is_feasible(&values))
            }
            Instance::Decision(d) => d.evaluate_unchecked(x),
        }
    }
}

/// Wraps a `Max`/`Min` instance into its decision variant with bound `k`.
pub fn decision_wrap(inner: Instance, bound: i64) -> Result<Instance> {
    Ok(Instance::Decision(DecisionProblem::new(inner, bound)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveCapability {
    /// A solver specific to this type exists.
    Dedicated,
    /// Solved by reduction to ILP.
    ViaIlp,
    BruteForceOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemTypeDescriptor {
    pub variant: VariantKey,
    pub size_measure_names: Vec<String>,
    pub complexity: SymbolicExpr,
    pub solve_capability: SolveCapability,
    pub aggregate: Aggregate,
    pub summary: String,
}

impl ProblemTypeDescriptor {
    pub fn new(
        variant: VariantKey,
        complexity: &str,
        solve_capability: SolveCapability,
        summary: &str,
    ) -> Result<Self> {
        let problem = variant.problem;
        Ok(Self {
            size_measure_names: problem.size_measure_names().iter().map(|s| s.to_string()).collect(),
            complexity: SymbolicExpr::parse(complexity)?.canonical(),
            solve_capability,
            aggregate: problem.aggregate(),
            summary: summary.to_string(),
            variant,
        })
    }

    pub fn name(&self) -> &'static str {
        self.variant.problem.name()
    }
}

/// Registered problem variants. Built once, then read-only.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    descriptors: Vec<ProblemTypeDescriptor>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a variant after checking that it is new and that its complexity
    /// only mentions declared size measures.
    pub fn register(&mut self, descriptor: ProblemTypeDescriptor) -> Result<()> {
        if self.lookup(&descriptor.variant).is_some() {
            return Err(Error::DuplicateRegistration(descriptor.variant.to_string()));
        }
        for v in descriptor.complexity.variables() {
            if !descriptor.size_measure_names.contains(&v) {
                return Err(Error::InvalidRegistration(format!(
                    "complexity of {} mentions `{v}`, which is not a size measure",
                    descriptor.variant
                )));
            }
        }
        if !descriptor.complexity.is_well_formed() {
            return Err(Error::InvalidRegistration(format!(
                "complexity of {} has a negative constant or invalid base",
                descriptor.variant
            )));
        }
        self.descriptors.push(descriptor);
        Ok(())
    }

    pub fn lookup(&self, key: &VariantKey) -> Option<&ProblemTypeDescriptor> {
        self.descriptors.iter().find(|d| &d.variant == key)
    }

    /// Every variant of a problem type, in registration order.
    pub fn variants_of(&self, problem: ProblemKind) -> Vec<&ProblemTypeDescriptor> {
        self.descriptors.iter().filter(|d| d.variant.problem == problem).collect()
    }

    /// The first registered variant of a name or alias.
    pub fn lookup_name(&self, name: &str) -> Option<&ProblemTypeDescriptor> {
        let kind = ProblemKind::from_name(name)?;
        self.variants_of(kind).into_iter().next()
    }

    /// Resolves `Name`, an alias, or `Name[tag=value]` to a registered variant.
    pub fn resolve(&self, text: &str) -> Result<&ProblemTypeDescriptor> {
        let key: VariantKey = text.parse()?;
        if key.tags.is_empty() {
            self.variants_of(key.problem).into_iter().next().ok_or_else(|| Error::UnknownProblem(text.into()))
        } else {
            self.lookup(&key).ok_or_else(|| Error::UnknownProblem(text.into()))
        }
    }

    pub fn descriptor_of(&self, instance: &Instance) -> Result<&ProblemTypeDescriptor> {
        let key = instance.variant();
        self.lookup(&key).ok_or_else(|| Error::UnknownProblem(key.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProblemTypeDescriptor> {
        self.descriptors.iter()
    }

    pub fn len(&self) -> usize {
        self.descriptors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.descriptors.is_empty()
    }

    pub fn problem_count(&self) -> usize {
        let mut names: Vec<ProblemKind> = self.descriptors.iter().map(|d| d.variant.problem).collect();
        names.sort();
        names.dedup();
        names.len()
    }

    /// The shipped catalogue.
    pub fn catalogue() -> Result<Registry> {
        use ProblemKind as K;
        use SolveCapability::*;
        let mut registry = Registry::new();
        let entries: [(VariantKey, &str, SolveCapability, &str); 15] = [
            (
                VariantKey::new(K::Satisfiability),
                "2^n",
                ViaIlp,
                "CNF formula; is some assignment satisfying?",
            ),
            (
                VariantKey::new(K::ThreeSatisfiability).with_tag("k", "3"),
                "2^n",
                ViaIlp,
                "CNF formula with at most three literals per clause; is it satisfiable?",
            ),
            (
                VariantKey::new(K::MaximumIndependentSet).with_tag("weight", "unit"),
                "1.1996^V",
                ViaIlp,
                "largest set of pairwise non-adjacent vertices",
            ),
            (
                VariantKey::new(K::MaximumIndependentSet).with_tag("weight", "integer"),
                "1.1996^V",
                ViaIlp,
                "heaviest set of pairwise non-adjacent vertices",
            ),
            (
                VariantKey::new(K::MinimumVertexCover),
                "1.1996^V",
                ViaIlp,
                "smallest vertex set touching every edge",
            ),
            (VariantKey::new(K::MaximumClique), "2^V", ViaIlp, "largest set of pairwise adjacent vertices"),
            (
                VariantKey::new(K::MinimumDominatingSet),
                "2^V",
                ViaIlp,
                "smallest vertex set whose closed neighborhood is every vertex",
            ),
            (VariantKey::new(K::MinimumSetCover), "2^S", ViaIlp, "fewest sets whose union is the universe"),
            (VariantKey::new(K::MaxCut), "2^V", ViaIlp, "vertex bipartition cutting the most edges"),
            (VariantKey::new(K::Qubo), "2^n", ViaIlp, "maximize x^T Q x over binary x"),
            (
                VariantKey::new(K::SpinGlass),
                "2^n",
                ViaIlp,
                "Ising ground state: maximize -(sum J_ij s_i s_j + sum h_i s_i) over spins",
            ),
            (VariantKey::new(K::GraphColoring), "k^V", ViaIlp, "proper vertex coloring with k colors"),
            (
                VariantKey::new(K::IntegerLinearProgram),
                "2^n",
                Dedicated,
                "bounded integer program; optimize a linear objective under linear constraints",
            ),
            (
                VariantKey::new(K::DecisionMaximumIndependentSet).with_tag("weight", "unit"),
                "1.1996^V",
                ViaIlp,
                "is there an independent set of weight at least k?",
            ),
            (
                VariantKey::new(K::DecisionMinimumVertexCover),
                "1.1996^V",
                ViaIlp,
                "is there a vertex cover of size at most k?",
            ),
        ];
        for (variant, complexity, capability, summary) in entries {
            registry.register(ProblemTypeDescriptor::new(variant, complexity, capability, summary)?)?;
        }
        Ok(registry)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{fold_space, Configuration};
    use crate::symbolic::{bindings, Number, Rational};
    use alloc::vec;

    fn p4_mis() -> Instance {
        Instance::MaximumIndependentSet(Graph::path(4))
    }

    #[test]
    fn evaluate_mis_examples() {
        let mis = p4_mis();
        assert_eq!(mis.evaluate(&[1, 0, 0, 1]).unwrap(), AggregatedValue::max(2));
        assert_eq!(mis.evaluate(&[1, 1, 0, 0]).unwrap(), AggregatedValue::max(2).with_feasible(false));
        assert_eq!(mis.evaluate(&[0, 0, 0, 0]).unwrap(), AggregatedValue::max(0));
        assert!(matches!(mis.evaluate(&[1, 0, 0]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(mis.evaluate(&[2, 0, 0, 0]), Err(Error::DomainViolation { .. })));
    }

    #[test]
    fn fold_examples() {
        let folded = fold_space(&p4_mis()).unwrap();
        assert_eq!(folded.value, AggregatedValue::max(2));
        let w = folded.witness.unwrap();
        assert_eq!(p4_mis().evaluate(&w).unwrap(), AggregatedValue::max(2));

        let single = Instance::MaximumIndependentSet(Graph::new(1, vec![]).unwrap());
        let folded = fold_space(&single).unwrap();
        assert_eq!(folded.value, AggregatedValue::max(1));
        assert_eq!(folded.witness, Some(Configuration::new(vec![1])));

        let sat = Instance::Satisfiability(Cnf::new(2, vec![vec![1, -2], vec![2]]).unwrap());
        let folded = fold_space(&sat).unwrap();
        assert_eq!(folded.value, AggregatedValue::or(true));
        assert_eq!(folded.witness, Some(Configuration::new(vec![1, 1])));
    }

    #[test]
    fn decision_wrapper() {
        let yes = decision_wrap(p4_mis(), 2).unwrap();
        assert_eq!(fold_space(&yes).unwrap().value, AggregatedValue::or(true));
        let no = decision_wrap(p4_mis(), 3).unwrap();
        let folded = fold_space(&no).unwrap();
        assert_eq!(folded.value.payload, crate::model::Payload::Bool(false));
        assert_eq!(folded.witness, None);
        let single = Instance::MaximumIndependentSet(Graph::new(1, vec![]).unwrap());
        let d = decision_wrap(single, 1).unwrap();
        assert_eq!(fold_space(&d).unwrap().value, AggregatedValue::or(true));
        assert_eq!(yes.problem(), ProblemKind::DecisionMaximumIndependentSet);
        assert_eq!(yes.problem().name(), "DecisionMaximumIndependentSet");

        let sat = Instance::Satisfiability(Cnf::new(1, vec![vec![1]]).unwrap());
        assert!(matches!(decision_wrap(sat, 1), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn size_measure_examples() {
        assert_eq!(p4_mis().size_measures(), vec![("V", 4), ("E", 3)]);
        let f = Cnf::new(3, vec![vec![1, 2, 3], vec![-1, 2, -3]]).unwrap();
        assert_eq!(Instance::three_sat(f).unwrap().size_measures(), vec![("n", 3), ("m", 2), ("L", 6)]);
        let q = Qubo::new(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(Instance::Qubo(q).size_measures(), vec![("n", 2)]);
    }

    #[test]
    fn catalogue_registration() {
        let reg = Registry::catalogue().unwrap();
        assert_eq!(reg.problem_count(), 14);
        assert_eq!(reg.len(), 15);
        let mis = reg.lookup_name("MaximumIndependentSet").unwrap();
        assert_eq!(mis.size_measure_names, vec!["V".to_string(), "E".to_string()]);
        let three_sat = reg.lookup_name("ThreeSatisfiability").unwrap();
        let at_two = three_sat.complexity.evaluate(&bindings([("n", 2)])).unwrap();
        assert_eq!(at_two, Number::Exact(Rational::from_integer(4)));
    }

    #[test]
    fn registration_rejects_duplicates_and_unknown_measures() {
        let mut reg = Registry::new();
        let d = ProblemTypeDescriptor::new(
            VariantKey::new(ProblemKind::MaxCut),
            "2^V",
            SolveCapability::ViaIlp,
            "",
        )
        .unwrap();
        reg.register(d.clone()).unwrap();
        assert!(matches!(reg.register(d), Err(Error::DuplicateRegistration(_))));
        let bad = ProblemTypeDescriptor::new(
            VariantKey::new(ProblemKind::Qubo),
            "2^V",
            SolveCapability::ViaIlp,
            "",
        )
        .unwrap();
        assert!(matches!(reg.register(bad), Err(Error::InvalidRegistration(_))));
    }

    #[test]
    fn variant_keys_parse_and_render() {
        let key: VariantKey = "MIS[weight=integer]".parse().unwrap();
        assert_eq!(key.to_string(), "MaximumIndependentSet[weight=integer]");
        assert_eq!(key.short(), "MIS[weight=integer]");
        assert_eq!(p4_mis().variant().tag("weight"), Some("unit"));
        assert!("Nope".parse::<VariantKey>().is_err());
        assert_eq!(ProblemKind::from_name("vc"), Some(ProblemKind::MinimumVertexCover));
    }

    #[test]
    fn three_sat_rejects_long_clauses() {
        let f = Cnf::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(Instance::three_sat(f).is_err());
    }

    #[test]
    fn ising_and_ilp_semantics() {
        let s = SpinGlass::new(2, vec![(0, 1, 1)], vec![0, 0]).unwrap();
        let inst = Instance::SpinGlass(s);
        assert_eq!(inst.evaluate(&[0, 1]).unwrap(), AggregatedValue::max(1));
        assert_eq!(inst.evaluate(&[1, 1]).unwrap(), AggregatedValue::max(-1));

        let c = LinearConstraint::new(vec![1, 1], Relation::Le, 1);
        let ilp = Ilp::binary(2, vec![c], vec![1, 1], Sense::Maximize).unwrap();
        let inst = Instance::IntegerLinearProgram(ilp);
        assert_eq!(
            inst.evaluate(&[1, 1]).unwrap(),
            AggregatedValue::extremum(Sense::Maximize, 2).with_feasible(false)
        );
        assert_eq!(fold_space(&inst).unwrap().value, AggregatedValue::extremum(Sense::Maximize, 1));
    }
}
