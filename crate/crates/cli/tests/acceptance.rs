//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{golden_transcript, pipeline, pred_process, GOLDEN_PATH};
use pred::format::{ExampleDocument, InstanceDocument};
use pred_core::examples::{database, verify_all_examples};
use pred_core::graph::{round_trip_check, ReductionGraph};
use pred_core::model::{AggregatedValue, Problem};
use pred_core::problems::{Instance, ProblemKind, VariantKey};
use pred_core::rules::ReductionRule;
use pred_core::solvers::{solve, solve_brute, Budget};
use pred_core::symbolic::{bindings, compare, GrowthOrder, Number, OverheadMap, Rational, SymbolicExpr};
use pred_testkit::{instance, overhead_map, rng, routes::check_all_pairs};

type Check = fn(&ReductionGraph) -> Result<String, String>;

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn listing_one(_: &ReductionGraph) -> Result<String, String> {
    let created = pred_process(&["create", "MIS", "--graph", "0-1,1-2,2-3"], "");
    let out = pipeline(
        pred_process,
        &[
            &["create", "MIS", "--graph", "0-1,1-2,2-3"],
            &["reduce", "-", "--to", "ILP"],
            &["solve", "-", "--pretty"],
        ],
    );
    ensure(out.code == 0, || format!("exit {}: {}", out.code, out.stderr))?;
    let line = |prefix: &str| {
        out.stdout
            .lines()
            .find_map(|l| l.strip_prefix(prefix))
            .map(str::to_string)
            .ok_or_else(|| format!("missing {prefix:?} in {:?}", out.stdout))
    };
    ensure(line("Problem: ")? == "\"MaximumIndependentSet\"", || "wrong problem line".into())?;
    let solver = line("Solver: ")?;
    ensure(solver.contains("ILP"), || format!("solver {solver:?} does not name the ILP route"))?;
    ensure(line("Evaluation: ")? == "\"Max(2)\"", || "wrong evaluation".into())?;
    let solution = line("Solution: ")?;
    let witness: Vec<usize> = serde_json::from_str(&solution).map_err(|e| e.to_string())?;
    let doc: InstanceDocument = serde_json::from_str(&created.stdout).map_err(|e| e.to_string())?;
    let inst = doc.to_instance().map_err(|e| e.to_string())?;
    let value = inst.evaluate(&witness).map_err(|e| e.to_string())?;
    ensure(value == AggregatedValue::max(2) && value.feasible, || format!("witness evaluates to {value}"))?;
    Ok(format!("{solution} via {solver}"))
}

fn round_trips(g: &ReductionGraph) -> Result<String, String> {
    ensure(g.rules().len() >= 15, || format!("only {} rules", g.rules().len()))?;
    let mut checked = 0;
    for rule in g.rules() {
        let examples: Vec<_> = database().into_iter().filter(|e| e.variant() == rule.source).collect();
        ensure(!examples.is_empty(), || format!("no example for {}", rule.name()))?;
        for e in examples {
            let report =
                round_trip_check(std::slice::from_ref(rule), &e.instance).map_err(|x| x.to_string())?;
            ensure(report.passed, || format!("{} on {}: {report:?}", rule.name(), e.id))?;
            ensure(report.source_optimum == e.known_value, || format!("{} on {}", rule.name(), e.id))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} rule/example pairs"))
}

fn agrees(g: &ReductionGraph, inst: &Instance) -> Result<(), String> {
    let routed = solve(g, inst, &Budget::default()).map_err(|e| e.to_string())?;
    let brute = solve_brute(inst, &Budget::default()).map_err(|e| e.to_string())?;
    ensure(routed.value == brute.value, || format!("{inst:?}: {} vs {}", routed.value, brute.value))?;
    ensure(routed.solver_name.starts_with("ilp"), || format!("{inst:?} solved by {}", routed.solver_name))?;
    if let Some(w) = &routed.witness {
        let value = inst.evaluate(w).map_err(|e| e.to_string())?;
        ensure(value == brute.value, || format!("{inst:?}: witness evaluates to {value}"))?;
    }
    Ok(())
}

fn oracle(g: &ReductionGraph) -> Result<String, String> {
    let ilp = VariantKey::new(ProblemKind::IntegerLinearProgram);
    let mut checked = 0;
    for e in database() {
        let reachable =
            e.variant() == ilp || g.find_path(&e.variant(), &ilp, true).map_err(|x| x.to_string())?.is_some();
        ensure(reachable, || format!("{} cannot reach ILP", e.id))?;
        agrees(g, &e.instance)?;
        checked += 1;
    }
    for (i, d) in g.registry().iter().enumerate() {
        if d.variant == ilp {
            continue;
        }
        let mut r = rng(500 + i as u64);
        for _ in 0..100 {
            agrees(g, &instance(&mut r, &d.variant))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} instances"))
}

fn within_overhead(rule: &ReductionRule, source: &Instance) -> Result<(), String> {
    let target = rule.apply(source).map_err(|e| e.to_string())?.target;
    let measured = bindings(source.size_measures());
    for (name, size) in target.size_measures() {
        let expr =
            rule.overhead.get(name).ok_or_else(|| format!("{}: no overhead for {name}", rule.name()))?;
        let bound = expr.evaluate(&measured).map_err(|e| e.to_string())?;
        let size = Number::Exact(Rational::from_integer(size as i128));
        ensure(size <= bound, || format!("{}: {name} = {size} exceeds {bound}", rule.name()))?;
    }
    Ok(())
}

fn overheads(g: &ReductionGraph) -> Result<String, String> {
    let mut checked = 0;
    for (i, rule) in g.rules().iter().enumerate() {
        for e in database().iter().filter(|e| e.variant() == rule.source) {
            within_overhead(rule, &e.instance)?;
            checked += 1;
        }
        let mut r = rng(7000 + i as u64);
        for _ in 0..50 {
            within_overhead(rule, &instance(&mut r, &rule.source))?;
            checked += 1;
        }
    }
    let rule = g.rule("3SAT[k=3] -> MIS[weight=unit]").ok_or("missing 3SAT -> MIS")?;
    let mut r = rng(3);
    for _ in 0..50 {
        let src = instance(&mut r, &rule.source);
        let l = src.size_measures().into_iter().find(|m| m.0 == "L").ok_or("no L")?.1;
        let target = rule.apply(&src).map_err(|e| e.to_string())?.target;
        let m = target.size_measures();
        ensure(m[0] == ("V", l), || format!("V' = {} but L = {l}", m[0].1))?;
        ensure(m[1].0 == "E" && m[1].1 <= l * l, || format!("E' = {} exceeds L^2 = {}", m[1].1, l * l))?;
    }
    Ok(format!("{checked} instances"))
}

fn at(m: &OverheadMap, a: u64, b: u64) -> Result<Vec<Number>, String> {
    let values = m.evaluate(&bindings([("a", a), ("b", b)])).map_err(|e| e.to_string())?;
    Ok(values.into_iter().map(|(_, v)| v).collect())
}

fn as_u64(n: &Number) -> Result<u64, String> {
    let r = n.exact().ok_or("inexact")?;
    ensure(r.is_integer(), || format!("{r} is not an integer"))?;
    u64::try_from(r.to_integer()).map_err(|e| e.to_string())
}

fn symbolic_laws(_: &ReductionGraph) -> Result<String, String> {
    let mut r = rng(2024);
    let compose = |x: &OverheadMap, y: &OverheadMap| OverheadMap::compose(x, y).map_err(|e| e.to_string());
    for trial in 0..500u64 {
        let (x, y, z) = (overhead_map(&mut r), overhead_map(&mut r), overhead_map(&mut r));
        let xy = compose(&x, &y)?;
        let left = compose(&xy, &z)?;
        let right = compose(&x, &compose(&y, &z)?)?;
        ensure(left == right, || format!("associativity fails for {x} {y} {z}"))?;
        let (a, b) = (trial % 3, trial / 3 % 3);
        let inner = at(&y, a, b)?;
        let outer = at(&x, as_u64(&inner[0])?, as_u64(&inner[1])?)?;
        ensure(at(&xy, a, b)? == outer, || format!("coherence fails for {x} {y}"))?;
        let (low, high) = (at(&x, a, b)?, at(&x, a + trial % 4, b + trial % 5)?);
        ensure(low.iter().zip(&high).all(|(l, h)| l <= h), || format!("{x} is not monotone"))?;
    }
    let e = SymbolicExpr::parse("1.1996^n").map_err(|x| x.to_string())?;
    for d in 0..=10 {
        let p = SymbolicExpr::parse(&format!("1000*n^{d}")).map_err(|x| x.to_string())?;
        ensure(compare(&e, &p) == GrowthOrder::HigherGrowth, || format!("1.1996^n vs n^{d}"))?;
        ensure(compare(&p, &e) == GrowthOrder::LowerGrowth, || format!("n^{d} vs 1.1996^n"))?;
    }
    Ok("500 triples, degrees 0..=10".into())
}

fn topology(g: &ReductionGraph) -> Result<String, String> {
    let report = g.topology_report();
    let key = |name: &str| g.registry().resolve(name).map(|d| d.variant.clone()).map_err(|e| e.to_string());
    let ilp = key("ILP")?;
    for d in g.registry().iter().filter(|d| d.variant != ilp) {
        ensure(report.reachable_to_ilp.contains(&d.variant), || format!("{} cannot reach ILP", d.variant))?;
    }
    for name in ["MIS", "MVC", "MaxClique", "ILP", "QUBO"] {
        ensure(report.reachable_from_3sat.contains(&key(name)?), || format!("3SAT cannot reach {name}"))?;
    }
    ensure(report.reachable_to_ilp.len() == 14, || format!("{} reach ILP", report.reachable_to_ilp.len()))?;
    ensure(report.reachable_from_3sat.len() == 7, || {
        format!("{} reachable from 3SAT", report.reachable_from_3sat.len())
    })?;
    ensure(report.isolated.is_empty(), || format!("isolated: {:?}", report.isolated))?;
    Ok(format!("{} to ILP, {} from 3SAT", report.reachable_to_ilp.len(), report.reachable_from_3sat.len()))
}

fn path_optimality(g: &ReductionGraph) -> Result<String, String> {
    let routed = check_all_pairs(g, 5)?;
    Ok(format!("{routed} routed pairs"))
}

fn example_integrity(_: &ReductionGraph) -> Result<String, String> {
    let report = verify_all_examples().map_err(|e| e.to_string())?;
    ensure(report.is_clean(), || format!("{:?}", report.mismatches))?;
    let out = pred_process(&["examples"], "");
    ensure(out.code == 0, || out.stderr.clone())?;
    let docs: Vec<ExampleDocument> = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let back: Result<Vec<_>, _> = docs.iter().map(ExampleDocument::to_example).collect();
    ensure(back.map_err(|e| e.to_string())? == database(), || "exported examples differ".into())?;
    let again = serde_json::to_string(&docs).map_err(|e| e.to_string())? + "\n";
    ensure(again == out.stdout, || "re-serialized export differs".into())?;
    Ok(format!("{} examples", report.checked))
}

fn determinism(_: &ReductionGraph) -> Result<String, String> {
    let first = golden_transcript(pred_process);
    let second = golden_transcript(pred_process);
    ensure(first == second, || "two runs differ".into())?;
    let golden = std::fs::read_to_string(GOLDEN_PATH).map_err(|e| e.to_string())?;
    ensure(first == golden, || "transcript differs from the golden file".into())?;
    Ok(format!("{} bytes", first.len()))
}

fn main() -> ExitCode {
    let g = ReductionGraph::shipped().expect("shipped graph is valid");
    let criteria: [(&str, Check, Option<u64>); 9] = [
        ("listing 1 pipeline", listing_one, Some(1)),
        ("master round trip", round_trips, Some(30)),
        ("oracle equivalence", oracle, Some(60)),
        ("overhead soundness", overheads, None),
        ("symbolic laws", symbolic_laws, Some(5)),
        ("topology anchors", topology, None),
        ("path optimality", path_optimality, Some(10)),
        ("example integrity", example_integrity, None),
        ("determinism", determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check(&g);
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("took {elapsed:.2?}, limit {secs}s"))
            }
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS {} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
