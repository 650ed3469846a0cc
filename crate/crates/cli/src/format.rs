//! JSON wire formats: instance, envelope, solution and example documents.

use std::collections::BTreeMap;

use pred_core::examples::CanonicalExample;
use pred_core::graph::{ReductionEnvelope, ReductionGraph};
use pred_core::model::{Aggregate, AggregatedValue, Configuration, Payload, Sense};
use pred_core::problems::{
    decision_wrap, Cnf, Coloring, Graph, Ilp, Instance, LinearConstraint, ProblemKind, Qubo, Relation,
    SetCover, SpinGlass,
};
use pred_core::rules::Extraction;
use pred_core::solvers::SolveResult;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

/// Version of the per-step extraction records carried in envelopes.
pub const TRACE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub problem: String,
    #[serde(default)]
    pub variant: BTreeMap<String, String>,
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphData {
    pub num_vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringData {
    pub num_vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecisionData {
    pub num_vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CnfData {
    pub num_variables: usize,
    pub clauses: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SenseData {
    Max,
    Min,
}

impl From<Sense> for SenseData {
    fn from(sense: Sense) -> Self {
        match sense {
            Sense::Maximize => SenseData::Max,
            Sense::Minimize => SenseData::Min,
        }
    }
}

impl From<SenseData> for Sense {
    fn from(sense: SenseData) -> Self {
        match sense {
            SenseData::Max => Sense::Maximize,
            SenseData::Min => Sense::Minimize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationData {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintData {
    pub coeffs: Vec<i64>,
    pub rel: RelationData,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IlpData {
    pub num_vars: usize,
    pub bounds: Vec<[i64; 2]>,
    pub constraints: Vec<ConstraintData>,
    pub objective: Vec<i64>,
    pub sense: SenseData,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuboData {
    pub n: usize,
    pub q: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinGlassData {
    pub n: usize,
    pub couplings: Vec<(usize, usize, i64)>,
    pub fields: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetCoverData {
    pub num_elements: usize,
    pub sets: Vec<Vec<usize>>,
}

fn to_value<T: Serialize>(data: &T) -> Value {
    serde_json::to_value(data).expect("wire data serializes")
}

fn from_value<T: DeserializeOwned>(problem: ProblemKind, data: &Value) -> Result<T, CliError> {
    T::deserialize(data).map_err(|e| CliError::Input(format!("{} data: {e}", problem.name())))
}

fn edge_list(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().iter().map(|&(u, v)| [u, v]).collect()
}

fn graph_of(
    num_vertices: usize,
    edges: &[[usize; 2]],
    weights: Option<Vec<i64>>,
) -> pred_core::Result<Graph> {
    let g = Graph::new(num_vertices, edges.iter().map(|&[u, v]| (u, v)).collect())?;
    match weights {
        Some(w) => g.with_weights(w),
        None => Ok(g),
    }
}

fn graph_data(g: &Graph) -> GraphData {
    GraphData {
        num_vertices: g.num_vertices(),
        edges: edge_list(g),
        weights: g.weights().map(<[i64]>::to_vec),
    }
}

impl InstanceDocument {
    pub fn from_instance(instance: &Instance) -> Self {
        let data = match instance {
            Instance::Satisfiability(f) | Instance::ThreeSatisfiability(f) => {
                to_value(&CnfData { num_variables: f.num_variables(), clauses: f.clauses().to_vec() })
            }
            Instance::MaximumIndependentSet(g)
            | Instance::MinimumVertexCover(g)
            | Instance::MaximumClique(g)
            | Instance::MinimumDominatingSet(g)
            | Instance::MaxCut(g) => to_value(&graph_data(g)),
            Instance::MinimumSetCover(s) => {
                to_value(&SetCoverData { num_elements: s.num_elements(), sets: s.sets().to_vec() })
            }
            Instance::Qubo(q) => to_value(&QuboData { n: q.n(), q: q.matrix().to_vec() }),
            Instance::SpinGlass(s) => to_value(&SpinGlassData {
                n: s.n(),
                couplings: s.couplings().to_vec(),
                fields: s.fields().to_vec(),
            }),
            Instance::GraphColoring(c) => to_value(&ColoringData {
                num_vertices: c.graph.num_vertices(),
                edges: edge_list(&c.graph),
                k: c.colors,
            }),
            Instance::IntegerLinearProgram(ilp) => to_value(&IlpData {
                num_vars: ilp.num_vars(),
                bounds: ilp.bounds().iter().map(|&(lo, hi)| [lo, hi]).collect(),
                constraints: ilp
                    .constraints()
                    .iter()
                    .map(|c| ConstraintData {
                        coeffs: c.coeffs.clone(),
                        rel: match c.relation {
                            Relation::Le => RelationData::Le,
                            Relation::Ge => RelationData::Ge,
                            Relation::Eq => RelationData::Eq,
                        },
                        rhs: c.rhs,
                    })
                    .collect(),
                objective: ilp.objective().to_vec(),
                sense: ilp.sense().into(),
            }),
            Instance::Decision(d) => {
                let g = d.inner.as_graph().expect("decision variants wrap graph problems");
                to_value(&DecisionData {
                    num_vertices: g.num_vertices(),
                    edges: edge_list(g),
                    weights: g.weights().map(<[i64]>::to_vec),
                    bound: d.bound,
                })
            }
        };
        let variant = instance.variant();
        InstanceDocument { problem: variant.problem.name().to_string(), variant: variant.tags, data }
    }

    /// Builds and validates the instance; the variant tags, when present,
    /// must match the data.
    pub fn to_instance(&self) -> Result<Instance, CliError> {
        let problem = ProblemKind::from_name(&self.problem)
            .ok_or_else(|| CliError::Input(format!("unknown problem `{}`", self.problem)))?;
        let instance = self.build(problem)?.validated()?;
        let found = instance.variant();
        if !self.variant.is_empty() && self.variant != found.tags {
            return Err(CliError::Input(format!(
                "variant tags {:?} do not match the data, which is {found}",
                self.variant
            )));
        }
        Ok(instance)
    }

    fn build(&self, problem: ProblemKind) -> Result<Instance, CliError> {
        use ProblemKind as K;
        let data = &self.data;
        let instance = match problem {
            K::Satisfiability | K::ThreeSatisfiability => {
                let d: CnfData = from_value(problem, data)?;
                let cnf = Cnf::new(d.num_variables, d.clauses)?;
                if problem == K::Satisfiability {
                    Instance::Satisfiability(cnf)
                } else {
                    Instance::ThreeSatisfiability(cnf)
                }
            }
            K::MaximumIndependentSet
            | K::MinimumVertexCover
            | K::MaximumClique
            | K::MinimumDominatingSet
            | K::MaxCut => {
                let d: GraphData = from_value(problem, data)?;
                let g = graph_of(d.num_vertices, &d.edges, d.weights)?;
                match problem {
                    K::MaximumIndependentSet => Instance::MaximumIndependentSet(g),
                    K::MinimumVertexCover => Instance::MinimumVertexCover(g),
                    K::MaximumClique => Instance::MaximumClique(g),
                    K::MinimumDominatingSet => Instance::MinimumDominatingSet(g),
                    _ => Instance::MaxCut(g),
                }
            }
            K::MinimumSetCover => {
                let d: SetCoverData = from_value(problem, data)?;
                Instance::MinimumSetCover(SetCover::new(d.num_elements, d.sets)?)
            }
            K::Qubo => {
                let d: QuboData = from_value(problem, data)?;
                if d.q.len() != d.n {
                    return Err(CliError::Input(format!("QUBO matrix has {} rows, n is {}", d.q.len(), d.n)));
                }
                Instance::Qubo(Qubo::new(d.q)?)
            }
            K::SpinGlass => {
                let d: SpinGlassData = from_value(problem, data)?;
                Instance::SpinGlass(SpinGlass::new(d.n, d.couplings, d.fields)?)
            }
            K::GraphColoring => {
                let d: ColoringData = from_value(problem, data)?;
                Instance::GraphColoring(Coloring::new(graph_of(d.num_vertices, &d.edges, None)?, d.k)?)
            }
            K::IntegerLinearProgram => {
                let d: IlpData = from_value(problem, data)?;
                if d.bounds.len() != d.num_vars {
                    return Err(CliError::Input(format!(
                        "ILP has {} bounds for {} variables",
                        d.bounds.len(),
                        d.num_vars
                    )));
                }
                let constraints = d
                    .constraints
                    .into_iter()
                    .map(|c| {
                        let rel = match c.rel {
                            RelationData::Le => Relation::Le,
                            RelationData::Ge => Relation::Ge,
                            RelationData::Eq => Relation::Eq,
                        };
                        LinearConstraint::new(c.coeffs, rel, c.rhs)
                    })
                    .collect();
                let bounds = d.bounds.iter().map(|&[lo, hi]| (lo, hi)).collect();
                Instance::IntegerLinearProgram(Ilp::new(bounds, constraints, d.objective, d.sense.into())?)
            }
            K::DecisionMaximumIndependentSet | K::DecisionMinimumVertexCover => {
                let d: DecisionData = from_value(problem, data)?;
                let g = graph_of(d.num_vertices, &d.edges, d.weights)?;
                let inner = if problem == K::DecisionMaximumIndependentSet {
                    Instance::MaximumIndependentSet(g)
                } else {
                    Instance::MinimumVertexCover(g)
                };
                decision_wrap(inner, d.bound)?
            }
        };
        Ok(instance)
    }
}

/// One versioned extraction record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceStep {
    pub version: u32,
    pub extraction: Extraction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvelopeDocument {
    pub kind: String,
    pub source: InstanceDocument,
    pub path: Vec<String>,
    pub target: InstanceDocument,
    pub trace: Vec<TraceStep>,
}

impl EnvelopeDocument {
    pub const KIND: &'static str = "envelope";

    pub fn from_envelope(envelope: &ReductionEnvelope) -> Self {
        EnvelopeDocument {
            kind: Self::KIND.into(),
            source: InstanceDocument::from_instance(&envelope.source),
            path: envelope.path.names(),
            target: InstanceDocument::from_instance(&envelope.target),
            trace: envelope
                .trace
                .iter()
                .map(|e| TraceStep { version: TRACE_VERSION, extraction: e.clone() })
                .collect(),
        }
    }

    /// Rebuilds the envelope, checking that the stored target and trace are
    /// what the named path produces from the stored source.
    pub fn to_envelope(&self, graph: &ReductionGraph) -> Result<ReductionEnvelope, CliError> {
        if self.kind != Self::KIND {
            return Err(CliError::Input(format!("expected kind `envelope`, found `{}`", self.kind)));
        }
        if let Some(step) = self.trace.iter().find(|s| s.version != TRACE_VERSION) {
            return Err(CliError::Input(format!(
                "envelope trace version {} is not supported (expected {TRACE_VERSION})",
                step.version
            )));
        }
        if self.trace.len() != self.path.len() {
            return Err(CliError::Input(format!(
                "envelope has {} trace steps for a path of {}",
                self.trace.len(),
                self.path.len()
            )));
        }
        let source = self.source.to_instance()?;
        let path = graph.path_from_names(&source.variant(), &self.path)?;
        let envelope = graph.reduce_along(&path, &source)?;
        let target = self.target.to_instance()?;
        let stored: Vec<&Extraction> = self.trace.iter().map(|s| &s.extraction).collect();
        let replayed: Vec<&Extraction> = envelope.trace.iter().collect();
        if target != envelope.target || stored != replayed {
            return Err(CliError::Input("envelope target or trace does not match its path".into()));
        }
        Ok(envelope)
    }
}

/// An input stream: a bare instance or an envelope.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Instance(InstanceDocument),
    Envelope(EnvelopeDocument),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
        let is_envelope = value.get("kind").is_some();
        let parsed = if is_envelope {
            EnvelopeDocument::deserialize(&value).map(Document::Envelope)
        } else {
            InstanceDocument::deserialize(&value).map(Document::Instance)
        };
        parsed.map_err(|e| CliError::Input(format!("malformed document: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueDocument {
    pub kind: Aggregate,
    pub payload: PayloadData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sense: Option<SenseData>,
    pub feasible: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PayloadData {
    Int(i64),
    Bool(bool),
}

impl From<&AggregatedValue> for ValueDocument {
    fn from(v: &AggregatedValue) -> Self {
        ValueDocument {
            kind: v.kind,
            payload: match v.payload {
                Payload::Int(i) => PayloadData::Int(i),
                Payload::Bool(b) => PayloadData::Bool(b),
            },
            sense: v.sense.map(SenseData::from),
            feasible: v.feasible,
        }
    }
}

impl From<&ValueDocument> for AggregatedValue {
    fn from(v: &ValueDocument) -> Self {
        AggregatedValue {
            kind: v.kind,
            sense: v.sense.map(Sense::from),
            payload: match v.payload {
                PayloadData::Int(i) => Payload::Int(i),
                PayloadData::Bool(b) => Payload::Bool(b),
            },
            feasible: v.feasible,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDocument {
    pub problem: String,
    pub solver: String,
    pub solution: Option<Vec<usize>>,
    pub evaluation: String,
    pub value: ValueDocument,
}

impl SolutionDocument {
    pub fn new(source: &Instance, result: &SolveResult) -> Self {
        SolutionDocument {
            problem: source.problem().name().to_string(),
            solver: result.solver_name.clone(),
            solution: result.witness.clone().map(Configuration::into_inner),
            evaluation: result.value.to_string(),
            value: (&result.value).into(),
        }
    }

    /// The line format of an interactive session.
    pub fn pretty(&self) -> String {
        let solution = match &self.solution {
            Some(s) => {
                let items: Vec<String> = s.iter().map(usize::to_string).collect();
                format!("[{}]", items.join(", "))
            }
            None => "none".to_string(),
        };
        format!(
            "Problem: \"{}\"\nSolver: {}\nSolution: {solution}\nEvaluation: \"{}\"\n",
            self.problem, self.solver, self.evaluation
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExampleDocument {
    pub id: String,
    pub instance: InstanceDocument,
    pub known_value: ValueDocument,
    pub known_witness: Option<Vec<usize>>,
    pub narrative: String,
}

impl ExampleDocument {
    pub fn from_example(e: &CanonicalExample) -> Self {
        ExampleDocument {
            id: e.id.clone(),
            instance: InstanceDocument::from_instance(&e.instance),
            known_value: (&e.known_value).into(),
            known_witness: e.known_witness.clone().map(Configuration::into_inner),
            narrative: e.narrative.clone(),
        }
    }

    pub fn to_example(&self) -> Result<CanonicalExample, CliError> {
        Ok(CanonicalExample {
            id: self.id.clone(),
            instance: self.instance.to_instance()?,
            known_value: (&self.known_value).into(),
            known_witness: self.known_witness.clone().map(Configuration),
            narrative: self.narrative.clone(),
        })
    }
}
