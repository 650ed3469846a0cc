use pred_core::examples::{database, example_for};
use pred_core::graph::ReductionGraph;
use pred_core::problems::Instance;
use pred_core::rules::ReductionRule;
use pred_core::symbolic::{bindings, Number, Rational};
use pred_testkit::{instance, rng};

fn assert_within_overhead(rule: &ReductionRule, source: &Instance) {
    let target = rule.apply(source).unwrap().target;
    let measured = bindings(source.size_measures());
    for (name, size) in target.size_measures() {
        let bound = rule.overhead.get(name).unwrap().evaluate(&measured).unwrap();
        let size = Number::Exact(Rational::from_integer(size as i128));
        assert!(size <= bound, "{}: {name} = {size} exceeds {bound}", rule.name());
    }
}

#[test]
fn canonical_examples_stay_within_overheads() {
    let g = ReductionGraph::shipped().unwrap();
    for rule in g.rules() {
        for example in database().iter().filter(|e| e.variant() == rule.source) {
            assert_within_overhead(rule, &example.instance);
        }
        assert!(example_for(&rule.source).is_some());
    }
}

#[test]
fn random_instances_stay_within_overheads() {
    let g = ReductionGraph::shipped().unwrap();
    for (i, rule) in g.rules().iter().enumerate() {
        let mut r = rng(7000 + i as u64);
        for _ in 0..50 {
            assert_within_overhead(rule, &instance(&mut r, &rule.source));
        }
    }
}

#[test]
fn three_sat_to_mis_vertex_count_is_exact() {
    let g = ReductionGraph::shipped().unwrap();
    let rule = g.rule("3SAT[k=3] -> MIS[weight=unit]").unwrap();
    let mut r = rng(3);
    for _ in 0..50 {
        let src = instance(&mut r, &rule.source);
        let l = src.size_measures()[2].1;
        let target = rule.apply(&src).unwrap().target;
        let measures = target.size_measures();
        assert_eq!(measures[0], ("V", l));
        assert!(measures[1].1 <= l * l);
    }
}
