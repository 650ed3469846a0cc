//! Command implementations. Each returns the text destined for stdout.

use std::fs;
use std::io::{Read, Write};

use pred_core::examples::{database, get_example};
use pred_core::graph::{ReductionGraph, ReductionPath};
use pred_core::model::Problem;
use pred_core::problems::{
    decision_wrap, Cnf, Coloring, Graph, Instance, ProblemKind, Qubo, SetCover, SolveCapability,
};
use pred_core::solvers::{solve, solve_envelope, Budget};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::format::{Document, EnvelopeDocument, ExampleDocument, InstanceDocument, SolutionDocument};
use crate::{BudgetArgs, Command, CreateArgs};

pub fn execute(command: Command, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<String, CliError> {
    let graph = ReductionGraph::shipped()?;
    match command {
        Command::Create(args) => create(&args, stdin),
        Command::Reduce { input, to, path } => reduce(&graph, &read_input(&input, stdin)?, &to, path, stderr),
        Command::Solve { input, pretty, budget } => {
            solve_document(&graph, &read_input(&input, stdin)?, pretty, budget)
        }
        Command::Path { from, to } => path(&graph, &from, &to),
        Command::Show { problem } => show(&graph, &problem),
        Command::List { stats } => list(&graph, stats),
        Command::Evaluate { input, config } => evaluate(&read_input(&input, stdin)?, &config),
        Command::Examples => examples(),
    }
}

fn read_input(input: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if input == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(input).map_err(|e| CliError::Input(format!("cannot read `{input}`: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn problem_kind(name: &str) -> Result<ProblemKind, CliError> {
    ProblemKind::from_name(name).ok_or_else(|| CliError::Input(format!("unknown problem `{name}`")))
}

fn ints<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Input(format!("malformed {what} entry `{s}`"))))
        .collect()
}

fn rows<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<Vec<T>>, CliError> {
    text.split(';').map(|row| ints(row, what)).collect()
}

/// Parses `u-v,u-v,...`; the vertex count defaults to the largest index plus one.
pub fn parse_graph(text: &str, vertices: Option<usize>) -> Result<Graph, CliError> {
    let mut edges = Vec::new();
    for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (u, v) = pair
            .split_once('-')
            .and_then(|(u, v)| Some((u.trim().parse().ok()?, v.trim().parse().ok()?)))
            .ok_or_else(|| CliError::Input(format!("malformed edge `{pair}`, expected u-v")))?;
        edges.push((u, v));
    }
    let inferred = edges.iter().map(|&(u, v): &(usize, usize)| u.max(v) + 1).max().unwrap_or(0);
    Ok(Graph::new(vertices.unwrap_or(inferred), edges)?)
}

fn create(args: &CreateArgs, stdin: &mut dyn Read) -> Result<String, CliError> {
    if args.example {
        let example = get_example(&args.problem)?;
        return to_json(&InstanceDocument::from_instance(&example.instance));
    }
    let kind = problem_kind(&args.problem)?;
    let instance = match &args.file {
        Some(file) => match Document::parse(&read_input(file, stdin)?)? {
            Document::Instance(doc) => doc.to_instance()?,
            Document::Envelope(_) => {
                return Err(CliError::Input("expected an instance, found an envelope".into()))
            }
        },
        None => from_flags(kind, args)?,
    };
    if instance.problem() != kind {
        return Err(CliError::Input(format!("file holds {}, not {}", instance.problem(), kind)));
    }
    to_json(&InstanceDocument::from_instance(&instance))
}

fn from_flags(kind: ProblemKind, args: &CreateArgs) -> Result<Instance, CliError> {
    use ProblemKind as K;
    let graph = || -> Result<Graph, CliError> {
        let text =
            args.graph.as_deref().ok_or_else(|| CliError::Input(format!("{} needs --graph", kind.name())))?;
        let g = parse_graph(text, args.vertices)?;
        match &args.weights {
            Some(w) => Ok(g.with_weights(ints(w, "weight")?)?),
            None => Ok(g),
        }
    };
    let bound = || args.bound.ok_or_else(|| CliError::Input(format!("{} needs --bound", kind.name())));
    let instance = match kind {
        K::Satisfiability | K::ThreeSatisfiability => {
            let text = args
                .clauses
                .as_deref()
                .ok_or_else(|| CliError::Input(format!("{} needs --clauses", kind.name())))?;
            let clauses: Vec<Vec<i32>> = rows(text, "literal")?;
            let inferred = clauses.iter().flatten().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0);
            let cnf = Cnf::new(args.variables.unwrap_or(inferred), clauses)?;
            if kind == K::Satisfiability {
                Instance::Satisfiability(cnf)
            } else {
                Instance::ThreeSatisfiability(cnf)
            }
        }
        K::MaximumIndependentSet => Instance::MaximumIndependentSet(graph()?),
        K::MinimumVertexCover => Instance::MinimumVertexCover(graph()?),
        K::MaximumClique => Instance::MaximumClique(graph()?),
        K::MinimumDominatingSet => Instance::MinimumDominatingSet(graph()?),
        K::MaxCut => Instance::MaxCut(graph()?),
        K::GraphColoring => Instance::GraphColoring(Coloring::new(graph()?, args.colors)?),
        K::DecisionMaximumIndependentSet => {
            decision_wrap(Instance::MaximumIndependentSet(graph()?), bound()?)?
        }
        K::DecisionMinimumVertexCover => decision_wrap(Instance::MinimumVertexCover(graph()?), bound()?)?,
        K::Qubo => {
            let text = args.matrix.as_deref().ok_or_else(|| CliError::Input("QUBO needs --matrix".into()))?;
            Instance::Qubo(Qubo::new(rows(text, "matrix")?)?)
        }
        K::MinimumSetCover => {
            let text = args.sets.as_deref().ok_or_else(|| CliError::Input("SetCover needs --sets".into()))?;
            let sets: Vec<Vec<usize>> = rows(text, "set")?;
            let inferred = sets.iter().flatten().map(|&e| e + 1).max().unwrap_or(0);
            Instance::MinimumSetCover(SetCover::new(args.elements.unwrap_or(inferred), sets)?)
        }
        K::SpinGlass | K::IntegerLinearProgram => {
            return Err(CliError::Input(format!("create {} with --file or --example", kind.name())))
        }
    };
    Ok(instance.validated()?)
}

fn render_path(path: &ReductionPath) -> String {
    let mut out = format!("{} -> {}: {} step(s)\n", path.source, path.target, path.len());
    for (i, rule) in path.steps.iter().enumerate() {
        out += &format!("  {}. {}  {}\n", i + 1, rule.name(), rule.overhead);
    }
    out += &format!("composite: {}\n", path.composite_overhead);
    out += &format!("cost: {}\n", path.estimated_cost);
    out
}

fn reduce(
    graph: &ReductionGraph,
    text: &str,
    to: &str,
    show_path: bool,
    stderr: &mut dyn Write,
) -> Result<String, CliError> {
    let (source, prefix) = match Document::parse(text)? {
        Document::Instance(doc) => (doc.to_instance()?, Vec::new()),
        Document::Envelope(doc) => {
            let envelope = doc.to_envelope(graph)?;
            (envelope.source, envelope.path.steps)
        }
    };
    let from = prefix.last().map_or_else(|| source.variant(), |r| r.target.clone());
    let targets = graph.resolve_targets(to)?;
    let tail = graph
        .find_path_to_any(&from, &targets, true)?
        .ok_or_else(|| CliError::NoPath { from: from.to_string(), to: to.to_string() })?;
    if show_path {
        write!(stderr, "{}", render_path(&tail))?;
    }
    let steps = prefix.into_iter().chain(tail.steps).collect();
    let path = graph.make_path(&source.variant(), steps)?;
    let envelope = graph.reduce_along(&path, &source)?;
    to_json(&EnvelopeDocument::from_envelope(&envelope))
}

fn solve_document(
    graph: &ReductionGraph,
    text: &str,
    pretty: bool,
    budget: BudgetArgs,
) -> Result<String, CliError> {
    let budget = Budget { max_configs: budget.max_configs, max_nodes: budget.max_nodes };
    let (source, result) = match Document::parse(text)? {
        Document::Instance(doc) => {
            let instance = doc.to_instance()?;
            let result = solve(graph, &instance, &budget)?;
            (instance, result)
        }
        Document::Envelope(doc) => {
            let envelope = doc.to_envelope(graph)?;
            let result = solve_envelope(graph, &envelope, &budget)?;
            (envelope.source, result)
        }
    };
    let doc = SolutionDocument::new(&source, &result);
    if pretty {
        Ok(doc.pretty())
    } else {
        to_json(&doc)
    }
}

fn path(graph: &ReductionGraph, from: &str, to: &str) -> Result<String, CliError> {
    let found = graph
        .find_path_by_name(from, to)?
        .ok_or_else(|| CliError::NoPath { from: from.to_string(), to: to.to_string() })?;
    Ok(render_path(&found))
}

fn capability(c: SolveCapability) -> &'static str {
    match c {
        SolveCapability::Dedicated => "dedicated",
        SolveCapability::ViaIlp => "via ILP",
        SolveCapability::BruteForceOnly => "brute force",
    }
}

fn show(graph: &ReductionGraph, name: &str) -> Result<String, CliError> {
    let variants = graph.resolve_targets(name)?;
    let mut out = String::new();
    for key in &variants {
        let d = graph
            .registry()
            .lookup(key)
            .ok_or_else(|| CliError::Input(format!("unknown problem `{name}`")))?;
        out += &format!("{key} ({})\n", key.problem.alias());
        out += &format!("  {}\n", d.summary);
        out += &format!("  size measures: {}\n", d.size_measure_names.join(", "));
        out += &format!("  complexity: {}\n", d.complexity);
        out += &format!("  value: {}\n", d.aggregate);
        out += &format!("  solver: {}\n", capability(d.solve_capability));
        out += "  reduces to:\n";
        for rule in graph.outgoing(key) {
            out += &format!("    {}  {}\n", rule.name(), rule.overhead);
        }
        out += "  reduced from:\n";
        for rule in graph.incoming(key) {
            out += &format!("    {}  {}\n", rule.name(), rule.overhead);
        }
        if let Some(e) = pred_core::examples::example_for(key) {
            out += &format!("  example {}: {}\n", e.id, e.narrative);
            out += &format!("    optimum: {}\n", e.known_value);
        }
    }
    Ok(out)
}

fn list(graph: &ReductionGraph, stats: bool) -> Result<String, CliError> {
    let registry = graph.registry();
    if stats {
        let names = |set: &std::collections::BTreeSet<_>| -> Vec<String> {
            set.iter().map(|k: &pred_core::problems::VariantKey| k.to_string()).collect()
        };
        let report = graph.topology_report();
        let variants: Vec<_> = registry
            .iter()
            .map(|d| json!({ "variant": d.variant.to_string(), "complexity": d.complexity.to_string() }))
            .collect();
        return Ok(serde_json::to_string_pretty(&json!({
            "problems": registry.problem_count(),
            "variants": variants,
            "rules": graph.rules().len(),
            "topology": {
                "reachable_to_ilp": names(&report.reachable_to_ilp),
                "reachable_from_3sat": names(&report.reachable_from_3sat),
                "isolated": names(&report.isolated),
            },
        }))? + "\n");
    }
    let rows: Vec<(String, String)> =
        registry.iter().map(|d| (d.variant.to_string(), d.complexity.to_string())).collect();
    let width = rows.iter().map(|(v, _)| v.len()).max().unwrap_or(0);
    Ok(rows.iter().map(|(v, c)| format!("{v:width$}  {c}\n")).collect())
}

fn evaluate(text: &str, config: &str) -> Result<String, CliError> {
    let instance = match Document::parse(text)? {
        Document::Instance(doc) => doc.to_instance()?,
        Document::Envelope(doc) => doc.source.to_instance()?,
    };
    let value = instance.evaluate(&ints::<usize>(config, "config")?)?;
    let status = if value.is_satisfied() { "feasible" } else { "infeasible" };
    Ok(format!("{value} {status}\n"))
}

fn examples() -> Result<String, CliError> {
    let docs: Vec<ExampleDocument> = database().iter().map(ExampleDocument::from_example).collect();
    to_json(&docs)
}
