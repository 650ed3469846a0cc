//! Seeded random instance generators for property and oracle tests.

#![allow(clippy::needless_range_loop)]

use pred_core::model::Sense;
use pred_core::problems::{
    decision_wrap, Cnf, Coloring, Graph, Ilp, Instance, LinearConstraint, ProblemKind, Qubo, Relation,
    SetCover, SpinGlass, VariantKey,
};
use pred_core::symbolic::OverheadMap;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub use rand;

pub mod routes;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `G(n, p)` on `1..=max_vertices` vertices.
pub fn graph(rng: &mut impl Rng, max_vertices: usize, p: f64) -> Graph {
    let n = rng.gen_range(1..=max_vertices);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated graph is simple")
}

pub fn weighted_graph(rng: &mut impl Rng, max_vertices: usize, p: f64) -> Graph {
    let g = graph(rng, max_vertices, p);
    let weights = (0..g.num_vertices()).map(|_| rng.gen_range(0..=5)).collect();
    g.with_weights(weights).expect("one weight per vertex")
}

/// Random CNF with clause lengths in `1..=max_len`.
pub fn cnf(rng: &mut impl Rng, max_vars: usize, max_clauses: usize, max_len: usize) -> Cnf {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_clauses);
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len)
                .map(|_| {
                    let v = rng.gen_range(1..=n) as i32;
                    if rng.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    Cnf::new(n, clauses).expect("generated literals are in range")
}

pub fn qubo(rng: &mut impl Rng, max_n: usize) -> Qubo {
    let n = rng.gen_range(1..=max_n);
    let mut q = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let c = rng.gen_range(-4..=4);
            q[i][j] = c;
            q[j][i] = c;
        }
    }
    Qubo::new(q).expect("symmetric by construction")
}

pub fn spin_glass(rng: &mut impl Rng, max_n: usize) -> SpinGlass {
    let n = rng.gen_range(1..=max_n);
    let mut couplings = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.6) {
                couplings.push((i, j, rng.gen_range(-3..=3)));
            }
        }
    }
    let fields = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    SpinGlass::new(n, couplings, fields).expect("valid couplings")
}

/// Random family over `1..=max_elements` elements whose union is the universe.
pub fn set_cover(rng: &mut impl Rng, max_elements: usize, max_sets: usize) -> SetCover {
    let u = rng.gen_range(1..=max_elements);
    let s = rng.gen_range(1..=max_sets);
    let mut sets: Vec<Vec<usize>> = (0..s).map(|_| (0..u).filter(|_| rng.gen_bool(0.4)).collect()).collect();
    for e in 0..u {
        if !sets.iter().any(|set| set.contains(&e)) {
            let i = rng.gen_range(0..s);
            sets[i].push(e);
            sets[i].sort_unstable();
        }
    }
    SetCover::new(u, sets).expect("every element is covered")
}

pub fn coloring(rng: &mut impl Rng, max_vertices: usize, max_colors: usize) -> Coloring {
    let g = graph(rng, max_vertices, 0.5);
    Coloring::new(g, rng.gen_range(1..=max_colors)).expect("at least one color")
}

/// Bounded ILP with small integer data; may be infeasible.
pub fn ilp(rng: &mut impl Rng, max_vars: usize, max_constraints: usize, max_upper: i64) -> Ilp {
    let n = rng.gen_range(1..=max_vars);
    let bounds = (0..n).map(|_| (0, rng.gen_range(1..=max_upper))).collect();
    let m = rng.gen_range(0..=max_constraints);
    let constraints = (0..m)
        .map(|_| {
            let coeffs = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let relation = match rng.gen_range(0..6) {
                0 => Relation::Eq,
                1 | 2 => Relation::Ge,
                _ => Relation::Le,
            };
            LinearConstraint::new(coeffs, relation, rng.gen_range(-2..=6))
        })
        .collect();
    let objective = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
    let sense = if rng.gen_bool(0.5) { Sense::Maximize } else { Sense::Minimize };
    Ilp::new(bounds, constraints, objective, sense).expect("shapes agree")
}

/// Polynomial over `a` and `b` with one to three terms, coefficients in
/// `1..4` and exponents in `0..3`.
pub fn polynomial(rng: &mut impl Rng) -> String {
    let terms: Vec<String> = (0..rng.gen_range(1..4))
        .map(|_| format!("{}*a^{}*b^{}", rng.gen_range(1..4), rng.gen_range(0..3), rng.gen_range(0..3)))
        .collect();
    terms.join(" + ")
}

/// Overhead map `{a, b}` over `{a, b}`, so any two compose.
pub fn overhead_map(rng: &mut impl Rng) -> OverheadMap {
    let (a, b) = (polynomial(rng), polynomial(rng));
    OverheadMap::parse(&[("a", &a), ("b", &b)]).expect("generated polynomials parse")
}

/// A small random instance of `variant`, sized for brute force of the
/// variant itself and of every single-rule target.
pub fn instance(rng: &mut impl Rng, variant: &VariantKey) -> Instance {
    let weighted = variant.tag("weight") == Some("integer");
    match variant.problem {
        ProblemKind::Satisfiability => Instance::Satisfiability(cnf(rng, 4, 5, 5)),
        ProblemKind::ThreeSatisfiability => Instance::ThreeSatisfiability(cnf(rng, 4, 4, 3)),
        ProblemKind::MaximumIndependentSet if weighted => {
            Instance::MaximumIndependentSet(weighted_graph(rng, 7, 0.4))
        }
        ProblemKind::MaximumIndependentSet => Instance::MaximumIndependentSet(graph(rng, 8, 0.4)),
        ProblemKind::MinimumVertexCover => Instance::MinimumVertexCover(graph(rng, 8, 0.4)),
        ProblemKind::MaximumClique => Instance::MaximumClique(graph(rng, 8, 0.5)),
        ProblemKind::MinimumDominatingSet => Instance::MinimumDominatingSet(graph(rng, 8, 0.3)),
        ProblemKind::MinimumSetCover => Instance::MinimumSetCover(set_cover(rng, 6, 6)),
        ProblemKind::MaxCut => Instance::MaxCut(graph(rng, 8, 0.5)),
        ProblemKind::Qubo => Instance::Qubo(qubo(rng, 4)),
        ProblemKind::SpinGlass => Instance::SpinGlass(spin_glass(rng, 6)),
        ProblemKind::GraphColoring => Instance::GraphColoring(coloring(rng, 4, 3)),
        ProblemKind::IntegerLinearProgram => Instance::IntegerLinearProgram(ilp(rng, 4, 4, 3)),
        ProblemKind::DecisionMaximumIndependentSet => {
            let g = graph(rng, 7, 0.4);
            let bound = rng.gen_range(0..=g.num_vertices() as i64);
            decision_wrap(Instance::MaximumIndependentSet(g), bound).expect("Max inner")
        }
        ProblemKind::DecisionMinimumVertexCover => {
            let g = graph(rng, 7, 0.4);
            let bound = rng.gen_range(0..=g.num_vertices() as i64);
            decision_wrap(Instance::MinimumVertexCover(g), bound).expect("Min inner")
        }
    }
}
