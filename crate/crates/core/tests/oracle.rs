use pred_core::examples::database;
use pred_core::graph::ReductionGraph;
use pred_core::model::{fold_space, Configuration, Problem};
use pred_core::problems::{Instance, ProblemKind, VariantKey};
use pred_core::solvers::{solve, solve_brute, solve_ilp, Budget};
use pred_core::Error;
use pred_testkit::{instance, rng};

fn reachable_to_ilp(g: &ReductionGraph, v: &VariantKey) -> bool {
    let ilp = VariantKey::new(ProblemKind::IntegerLinearProgram);
    v == &ilp || g.find_path(v, &ilp, true).unwrap().is_some()
}

fn assert_agrees(g: &ReductionGraph, inst: &Instance) {
    let routed = solve(g, inst, &Budget::default()).unwrap();
    let brute = solve_brute(inst, &Budget::default()).unwrap();
    assert_eq!(routed.value, brute.value, "{inst:?}");
    if let Some(w) = &routed.witness {
        assert_eq!(inst.evaluate(w).unwrap(), brute.value, "{inst:?}");
    }
    assert_eq!(routed.witness.is_some(), brute.witness.is_some(), "{inst:?}");
}

#[test]
fn canonical_examples_agree_with_brute_force() {
    let g = ReductionGraph::shipped().unwrap();
    for example in database() {
        assert!(reachable_to_ilp(&g, &example.variant()));
        assert_agrees(&g, &example.instance);
    }
}

#[test]
fn random_families_agree_with_brute_force() {
    let g = ReductionGraph::shipped().unwrap();
    for (i, d) in g.registry().iter().enumerate() {
        if d.variant.problem == ProblemKind::IntegerLinearProgram {
            continue;
        }
        let mut r = rng(500 + i as u64);
        for _ in 0..100 {
            assert_agrees(&g, &instance(&mut r, &d.variant));
        }
    }
}

#[test]
fn branch_and_bound_matches_enumeration_on_random_binary_ilps() {
    let mut r = rng(42);
    let mut feasible = 0;
    for _ in 0..100 {
        let ilp = pred_testkit::ilp(&mut r, 8, 6, 1);
        let inst = Instance::IntegerLinearProgram(ilp.clone());
        let brute = fold_space(&inst).unwrap();
        match solve_ilp(&ilp, &Budget::default()) {
            Ok(result) => {
                feasible += 1;
                assert_eq!(result.value, brute.value, "{ilp:?}");
                let w: &Configuration = result.witness.as_ref().unwrap();
                assert_eq!(inst.evaluate(w).unwrap(), brute.value);
            }
            Err(Error::Infeasible) => assert!(!brute.value.feasible, "{ilp:?}"),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(feasible > 20);
}

#[test]
fn branch_and_bound_matches_enumeration_on_general_bounds() {
    let mut r = rng(43);
    for _ in 0..100 {
        let ilp = pred_testkit::ilp(&mut r, 4, 4, 4);
        let inst = Instance::IntegerLinearProgram(ilp.clone());
        let brute = fold_space(&inst).unwrap().value;
        match solve_ilp(&ilp, &Budget::default()) {
            Ok(result) => assert_eq!(result.value, brute, "{ilp:?}"),
            Err(Error::Infeasible) => assert!(!brute.feasible, "{ilp:?}"),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn solving_is_deterministic() {
    let g = ReductionGraph::shipped().unwrap();
    let mut r = rng(8);
    for d in g.registry().iter() {
        let inst = instance(&mut r, &d.variant);
        let first = solve(&g, &inst, &Budget::default());
        let second = solve(&g, &inst, &Budget::default());
        assert_eq!(first, second);
    }
}
