use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::{Extraction, ReductionOutcome, ReductionRule, ValueMap, WitnessMap};
use crate::error::{Error, Result};
use crate::model::{Aggregate, Problem, Sense};
use crate::problems::{
    Cnf, Graph, Ilp, Instance, LinearConstraint, ProblemKind as K, Qubo, Relation, SetCover, SpinGlass,
    VariantKey,
};
use crate::symbolic::OverheadMap;

fn key(kind: K) -> VariantKey {
    VariantKey::new(kind)
}

fn mis(weight: &str) -> VariantKey {
    key(K::MaximumIndependentSet).with_tag("weight", weight)
}

fn three_sat() -> VariantKey {
    key(K::ThreeSatisfiability).with_tag("k", "3")
}

fn overhead(entries: &[(&str, &str)]) -> OverheadMap {
    OverheadMap::parse(entries).expect("shipped overheads parse")
}

fn mismatch(expected: &str, found: &Instance) -> Error {
    Error::TypeMismatch { expected: expected.to_string(), found: found.variant().to_string() }
}

fn outcome(
    source: &Instance,
    target: Instance,
    witness: WitnessMap,
    value: ValueMap,
) -> Result<ReductionOutcome> {
    let target = target.validated()?;
    let extraction = Extraction {
        rule: alloc::format!("{} -> {}", source.variant().short(), target.variant().short()),
        target_variables: target.configuration_space().num_variables(),
        witness: Some(witness),
        value: Some(value),
    };
    Ok(ReductionOutcome { target, extraction })
}

/// Every rule the library ships, in registration order.
pub fn shipped_rules() -> Vec<ReductionRule> {
    let vc = || key(K::MinimumVertexCover);
    let ilp = || key(K::IntegerLinearProgram);
    let qubo = || key(K::Qubo);
    vec![
        ReductionRule::new(
            key(K::Satisfiability),
            three_sat(),
            overhead(&[("n", "n + L"), ("m", "L"), ("L", "3*L")]),
            true,
            sat_to_three_sat,
        ),
        ReductionRule::new(
            three_sat(),
            mis("unit"),
            overhead(&[("V", "L"), ("E", "L^2")]),
            true,
            three_sat_to_mis,
        ),
        ReductionRule::new(mis("unit"), vc(), overhead(&[("V", "V"), ("E", "E")]), true, mis_to_vc),
        ReductionRule::new(vc(), mis("unit"), overhead(&[("V", "V"), ("E", "E")]), true, vc_to_mis),
        ReductionRule::new(
            mis("unit"),
            key(K::MaximumClique),
            overhead(&[("V", "V"), ("E", "V^2")]),
            true,
            mis_to_clique,
        ),
        ReductionRule::new(
            key(K::MaximumClique),
            mis("unit"),
            overhead(&[("V", "V"), ("E", "V^2")]),
            true,
            clique_to_mis,
        ),
        ReductionRule::new(mis("unit"), ilp(), overhead(&[("n", "V"), ("c", "E")]), true, mis_to_ilp),
        ReductionRule::new(mis("integer"), ilp(), overhead(&[("n", "V"), ("c", "E")]), true, mis_to_ilp),
        ReductionRule::new(vc(), ilp(), overhead(&[("n", "V"), ("c", "E")]), true, vc_to_ilp),
        ReductionRule::new(
            key(K::MinimumSetCover),
            ilp(),
            overhead(&[("n", "S"), ("c", "U")]),
            true,
            set_cover_to_ilp,
        ),
        ReductionRule::new(
            key(K::MinimumDominatingSet),
            key(K::MinimumSetCover),
            overhead(&[("S", "V"), ("U", "V")]),
            true,
            dominating_set_to_set_cover,
        ),
        ReductionRule::new(key(K::MaxCut), qubo(), overhead(&[("n", "V")]), true, max_cut_to_qubo),
        ReductionRule::new(qubo(), key(K::SpinGlass), overhead(&[("n", "n")]), true, qubo_to_ising),
        ReductionRule::new(key(K::SpinGlass), qubo(), overhead(&[("n", "n")]), true, ising_to_qubo),
        ReductionRule::new(mis("unit"), qubo(), overhead(&[("n", "V")]), true, mis_to_qubo),
        ReductionRule::new(mis("integer"), qubo(), overhead(&[("n", "V")]), true, mis_to_qubo),
        ReductionRule::new(
            key(K::GraphColoring),
            key(K::Satisfiability),
            overhead(&[("n", "V*k"), ("m", "V + E*k + V*k^2"), ("L", "V*k^2 + 2*E*k")]),
            true,
            coloring_to_sat,
        ),
        ReductionRule::new(qubo(), ilp(), overhead(&[("n", "n + n^2"), ("c", "3*n^2")]), true, qubo_to_ilp),
        ReductionRule::new(
            key(K::DecisionMaximumIndependentSet).with_tag("weight", "unit"),
            mis("unit"),
            overhead(&[("V", "V"), ("E", "E")]),
            true,
            decision_to_optimization,
        ),
        ReductionRule::new(
            key(K::DecisionMinimumVertexCover),
            vc(),
            overhead(&[("V", "V"), ("E", "E")]),
            true,
            decision_to_optimization,
        ),
        ReductionRule::new(
            mis("unit"),
            mis("integer"),
            overhead(&[("V", "V"), ("E", "E")]),
            true,
            unit_to_integer_weights,
        ),
    ]
}

fn sat_to_three_sat(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::Satisfiability(cnf) = source else { return Err(mismatch("SAT", source)) };
    let n = cnf.num_variables();
    let mut next = n as i32;
    let mut clauses = Vec::new();
    for clause in cnf.clauses() {
        if clause.len() <= 3 {
            clauses.push(clause.clone());
            continue;
        }
        // (l1 ∨ l2 ∨ y1), (¬y1 ∨ l3 ∨ y2), ..., (¬y_{k-3} ∨ l_{k-1} ∨ l_k)
        let last = clause.len() - 2;
        next += 1;
        clauses.push(vec![clause[0], clause[1], next]);
        for &lit in &clause[2..last] {
            clauses.push(vec![-next, lit, next + 1]);
            next += 1;
        }
        clauses.push(vec![-next, clause[last], clause[last + 1]]);
    }
    let target = Instance::ThreeSatisfiability(Cnf::new(next as usize, clauses)?);
    outcome(source, target, WitnessMap::Prefix { len: n }, ValueMap::identity(Aggregate::Or))
}

fn three_sat_to_mis(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::ThreeSatisfiability(cnf) = source else { return Err(mismatch("3SAT", source)) };
    let literals: Vec<i32> = cnf.clauses().iter().flatten().copied().collect();
    let mut edges = BTreeSet::new();
    let mut start = 0;
    for clause in cnf.clauses() {
        for a in start..start + clause.len() {
            for b in a + 1..start + clause.len() {
                edges.insert((a, b));
            }
        }
        start += clause.len();
    }
    for a in 0..literals.len() {
        for b in a + 1..literals.len() {
            if literals[a] == -literals[b] {
                edges.insert((a, b));
            }
        }
    }
    let graph = Graph::new(literals.len(), edges.into_iter().collect())?;
    let witness = WitnessMap::LiteralSelection { num_variables: cnf.num_variables(), literals };
    let value = ValueMap::Threshold { sense: Sense::Maximize, bound: cnf.num_clauses() as i64 };
    outcome(source, Instance::MaximumIndependentSet(graph), witness, value)
}

fn mis_to_vc(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaximumIndependentSet(g) = source else { return Err(mismatch("MIS", source)) };
    let v = g.num_vertices() as i64;
    let value = ValueMap::Affine { scale: -1, offset: v, divisor: 1, kind: Aggregate::Max, sense: None };
    outcome(source, Instance::MinimumVertexCover(g.clone()), WitnessMap::Complement, value)
}

fn vc_to_mis(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MinimumVertexCover(g) = source else { return Err(mismatch("MVC", source)) };
    let v = g.num_vertices() as i64;
    let value = ValueMap::Affine { scale: -1, offset: v, divisor: 1, kind: Aggregate::Min, sense: None };
    outcome(source, Instance::MaximumIndependentSet(g.clone()), WitnessMap::Complement, value)
}

fn mis_to_clique(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaximumIndependentSet(g) = source else { return Err(mismatch("MIS", source)) };
    let target = Instance::MaximumClique(g.complement());
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Max))
}

fn clique_to_mis(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaximumClique(g) = source else { return Err(mismatch("MaxClique", source)) };
    let target = Instance::MaximumIndependentSet(g.complement());
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Max))
}

/// One 0-1 variable per vertex and one constraint `x_u + x_v (rel) 1` per edge.
fn edge_ilp(g: &Graph, relation: Relation, objective: Vec<i64>, sense: Sense) -> Result<Ilp> {
    let n = g.num_vertices();
    let constraints = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut coeffs = vec![0; n];
            coeffs[u] = 1;
            coeffs[v] = 1;
            LinearConstraint::new(coeffs, relation, 1)
        })
        .collect();
    Ilp::binary(n, constraints, objective, sense)
}

fn mis_to_ilp(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaximumIndependentSet(g) = source else { return Err(mismatch("MIS", source)) };
    let objective = (0..g.num_vertices()).map(|v| g.weight(v)).collect();
    let ilp = edge_ilp(g, Relation::Le, objective, Sense::Maximize)?;
    let target = Instance::IntegerLinearProgram(ilp);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Max))
}

fn vc_to_ilp(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MinimumVertexCover(g) = source else { return Err(mismatch("MVC", source)) };
    let ilp = edge_ilp(g, Relation::Ge, vec![1; g.num_vertices()], Sense::Minimize)?;
    let target = Instance::IntegerLinearProgram(ilp);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Min))
}

fn set_cover_to_ilp(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MinimumSetCover(sc) = source else { return Err(mismatch("SetCover", source)) };
    let s = sc.num_sets();
    let constraints = (0..sc.num_elements())
        .map(|e| {
            let coeffs = sc.sets().iter().map(|set| i64::from(set.contains(&e))).collect();
            LinearConstraint::new(coeffs, Relation::Ge, 1)
        })
        .collect();
    let ilp = Ilp::binary(s, constraints, vec![1; s], Sense::Minimize)?;
    let target = Instance::IntegerLinearProgram(ilp);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Min))
}

fn dominating_set_to_set_cover(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MinimumDominatingSet(g) = source else { return Err(mismatch("MDS", source)) };
    let sets = g
        .neighbors()
        .into_iter()
        .enumerate()
        .map(|(v, mut adj)| {
            adj.push(v);
            adj.sort_unstable();
            adj
        })
        .collect();
    let target = Instance::MinimumSetCover(SetCover::new(g.num_vertices(), sets)?);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Min))
}

fn max_cut_to_qubo(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaxCut(g) = source else { return Err(mismatch("MaxCut", source)) };
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::InvalidInstance("MaxCut to QUBO needs at least one vertex".into()));
    }
    // cut = Σ_uv (x_u + x_v - 2 x_u x_v)
    let mut q = vec![vec![0i64; n]; n];
    for &(u, v) in g.edges() {
        q[u][u] += 1;
        q[v][v] += 1;
        q[u][v] -= 1;
        q[v][u] -= 1;
    }
    let target = Instance::Qubo(Qubo::new(q)?);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Max))
}

fn qubo_to_ising(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::Qubo(qubo) = source else { return Err(mismatch("QUBO", source)) };
    let q = qubo.matrix();
    let n = qubo.n();
    // With x = (1 + s) / 2: 4 x^T Q x = -(Σ J s s + Σ h s) + C.
    let mut couplings = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if q[i][j] != 0 {
                couplings.push((i, j, -2 * q[i][j]));
            }
        }
    }
    let fields = q.iter().map(|row| -2 * row.iter().sum::<i64>()).collect();
    let trace: i64 = (0..n).map(|i| q[i][i]).sum();
    let total: i64 = q.iter().flatten().sum();
    let value =
        ValueMap::Affine { scale: 1, offset: trace + total, divisor: 4, kind: Aggregate::Max, sense: None };
    let target = Instance::SpinGlass(SpinGlass::new(n, couplings, fields)?);
    outcome(source, target, WitnessMap::Identity, value)
}

fn ising_to_qubo(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::SpinGlass(sg) = source else { return Err(mismatch("SpinGlass", source)) };
    let n = sg.n();
    // With s = 2x - 1: -(Σ J s s + Σ h s) = x^T Q x + Σ h - Σ J.
    let mut q = vec![vec![0i64; n]; n];
    for &(i, j, w) in sg.couplings() {
        q[i][j] -= 2 * w;
        q[j][i] -= 2 * w;
        q[i][i] += 2 * w;
        q[j][j] += 2 * w;
    }
    for (i, h) in sg.fields().iter().enumerate() {
        q[i][i] -= 2 * h;
    }
    let offset = sg.fields().iter().sum::<i64>() - sg.couplings().iter().map(|c| c.2).sum::<i64>();
    let target = Instance::Qubo(Qubo::new(q)?);
    outcome(source, target, WitnessMap::Identity, ValueMap::offset(Aggregate::Max, offset))
}

fn mis_to_qubo(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaximumIndependentSet(g) = source else { return Err(mismatch("MIS", source)) };
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::InvalidInstance("MIS to QUBO needs at least one vertex".into()));
    }
    // Each violated edge costs 2 * ceil(P / 2) >= P, more than any vertex gains.
    let penalty = 1 + g.max_weight().max(0);
    let half = (penalty + 1) / 2;
    let mut q = vec![vec![0i64; n]; n];
    for (v, row) in q.iter_mut().enumerate() {
        row[v] = g.weight(v);
    }
    for &(u, v) in g.edges() {
        q[u][v] = -half;
        q[v][u] = -half;
    }
    let target = Instance::Qubo(Qubo::new(q)?);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Max))
}

fn coloring_to_sat(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::GraphColoring(c) = source else { return Err(mismatch("Coloring", source)) };
    let (vertices, k) = (c.graph.num_vertices(), c.colors);
    if vertices == 0 {
        return Err(Error::InvalidInstance("coloring to SAT needs at least one vertex".into()));
    }
    let var = |v: usize, color: usize| (v * k + color + 1) as i32;
    let mut clauses = Vec::new();
    for v in 0..vertices {
        clauses.push((0..k).map(|color| var(v, color)).collect());
    }
    for v in 0..vertices {
        for a in 0..k {
            for b in a + 1..k {
                clauses.push(vec![-var(v, a), -var(v, b)]);
            }
        }
    }
    for &(u, v) in c.graph.edges() {
        for color in 0..k {
            clauses.push(vec![-var(u, color), -var(v, color)]);
        }
    }
    let target = Instance::Satisfiability(Cnf::new(vertices * k, clauses)?);
    let witness = WitnessMap::OneHot { vertices, colors: k };
    outcome(source, target, witness, ValueMap::identity(Aggregate::Or))
}

fn qubo_to_ilp(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::Qubo(qubo) = source else { return Err(mismatch("QUBO", source)) };
    let q = qubo.matrix();
    let n = qubo.n();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| q[i][j] != 0).collect();
    let total = n + pairs.len();
    let mut objective: Vec<i64> = (0..n).map(|i| q[i][i]).collect();
    objective.extend(pairs.iter().map(|&(i, j)| 2 * q[i][j]));
    // y = x_i x_j: y <= x_i, y <= x_j, y >= x_i + x_j - 1.
    let mut constraints = Vec::with_capacity(3 * pairs.len());
    for (p, &(i, j)) in pairs.iter().enumerate() {
        let y = n + p;
        for x in [i, j] {
            let mut coeffs = vec![0; total];
            coeffs[y] = 1;
            coeffs[x] = -1;
            constraints.push(LinearConstraint::new(coeffs, Relation::Le, 0));
        }
        let mut coeffs = vec![0; total];
        coeffs[y] = 1;
        coeffs[i] = -1;
        coeffs[j] = -1;
        constraints.push(LinearConstraint::new(coeffs, Relation::Ge, -1));
    }
    let ilp = Ilp::binary(total, constraints, objective, Sense::Maximize)?;
    let target = Instance::IntegerLinearProgram(ilp);
    outcome(source, target, WitnessMap::Prefix { len: n }, ValueMap::identity(Aggregate::Max))
}

fn decision_to_optimization(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::Decision(d) = source else { return Err(mismatch("Decision", source)) };
    let sense = match d.inner.aggregate() {
        Aggregate::Min => Sense::Minimize,
        _ => Sense::Maximize,
    };
    let target = (*d.inner).clone();
    let value = ValueMap::Threshold { sense, bound: d.bound };
    outcome(source, target, WitnessMap::Identity, value)
}

fn unit_to_integer_weights(source: &Instance) -> Result<ReductionOutcome> {
    let Instance::MaximumIndependentSet(g) = source else { return Err(mismatch("MIS", source)) };
    let weighted = g.clone().with_weights(vec![1; g.num_vertices()])?;
    let target = Instance::MaximumIndependentSet(weighted);
    outcome(source, target, WitnessMap::Identity, ValueMap::identity(Aggregate::Max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{fold_space, AggregatedValue};
    use alloc::string::String;

    fn names(rules: &[ReductionRule]) -> Vec<String> {
        rules.iter().map(ReductionRule::name).collect()
    }

    fn rule(name: &str) -> ReductionRule {
        shipped_rules().into_iter().find(|r| r.name() == name).unwrap()
    }

    fn two_clause() -> Instance {
        Instance::three_sat(Cnf::new(3, vec![vec![1, 2, 3], vec![-1, 2, -3]]).unwrap()).unwrap()
    }

    #[test]
    fn rule_names_are_unique() {
        let mut all = names(&shipped_rules());
        let count = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), count);
        assert!(count >= 15);
    }

    #[test]
    fn three_sat_to_mis_construction() {
        let out = rule("3SAT[k=3] -> MIS[weight=unit]").apply(&two_clause()).unwrap();
        let Instance::MaximumIndependentSet(g) = &out.target else { panic!() };
        assert_eq!(g.num_vertices(), 6);
        // two triangles plus x1/¬x1 and x3/¬x3
        assert_eq!(g.num_edges(), 8);
        let w = fold_space(&out.target).unwrap().witness.unwrap();
        let x = out.extract_solution(&w).unwrap();
        assert_eq!(two_clause().evaluate(&x).unwrap(), AggregatedValue::or(true));
    }

    #[test]
    fn max_cut_single_edge() {
        let src = Instance::MaxCut(Graph::new(2, vec![(0, 1)]).unwrap());
        let out = rule("MaxCut -> QUBO").apply(&src).unwrap();
        let Instance::Qubo(q) = &out.target else { panic!() };
        assert_eq!(q.matrix(), &[vec![1, -1], vec![-1, 1]]);
        assert_eq!(fold_space(&out.target).unwrap().value, AggregatedValue::max(1));
    }

    #[test]
    fn qubo_to_ising_single_variable() {
        let src = Instance::Qubo(Qubo::new(vec![vec![1]]).unwrap());
        let out = rule("QUBO -> SpinGlass").apply(&src).unwrap();
        let Instance::SpinGlass(s) = &out.target else { panic!() };
        assert_eq!(s.fields(), &[-2]);
        let folded = fold_space(&out.target).unwrap();
        assert_eq!(folded.witness.as_deref(), Some(&[1usize][..]));
        assert_eq!(out.extract_value(&folded.value).unwrap(), AggregatedValue::max(1));
    }

    #[test]
    fn mis_to_vc_complements() {
        let src = Instance::MaximumIndependentSet(Graph::path(4));
        let out = rule("MIS[weight=unit] -> MVC").apply(&src).unwrap();
        assert_eq!(out.target, Instance::MinimumVertexCover(Graph::path(4)));
        assert_eq!(out.extract_solution(&[0, 1, 1, 0]).unwrap().0, vec![1, 0, 0, 1]);
        assert_eq!(out.extract_value(&AggregatedValue::min(2)).unwrap(), AggregatedValue::max(2));
        let back = rule("MVC -> MIS[weight=unit]").apply(&out.target).unwrap();
        assert_eq!(back.target, src);
    }

    #[test]
    fn mis_to_ilp_on_path() {
        let src = Instance::MaximumIndependentSet(Graph::path(4));
        let out = rule("MIS[weight=unit] -> ILP").apply(&src).unwrap();
        let Instance::IntegerLinearProgram(ilp) = &out.target else { panic!() };
        assert_eq!((ilp.num_vars(), ilp.num_constraints()), (4, 3));
        assert_eq!(ilp.objective(), &[1, 1, 1, 1]);
        assert_eq!(out.extract_solution(&[1, 0, 0, 1]).unwrap().0, vec![1, 0, 0, 1]);
    }

    #[test]
    fn mis_to_qubo_value_passes_through() {
        let src = Instance::MaximumIndependentSet(Graph::path(4));
        let out = rule("MIS[weight=unit] -> QUBO").apply(&src).unwrap();
        let value = fold_space(&out.target).unwrap().value;
        assert_eq!(value, AggregatedValue::max(2));
        assert_eq!(out.extract_value(&value).unwrap(), AggregatedValue::max(2));
    }

    #[test]
    fn sat_splitting_keeps_satisfiability() {
        let src = Instance::Satisfiability(Cnf::new(5, vec![vec![1, 2, 3, 4, 5], vec![-1]]).unwrap());
        let out = rule("SAT -> 3SAT[k=3]").apply(&src).unwrap();
        let Instance::ThreeSatisfiability(f) = &out.target else { panic!() };
        assert_eq!(f.num_variables(), 7);
        assert_eq!(f.num_clauses(), 4);
        assert!(f.max_clause_len() <= 3);
        let w = fold_space(&out.target).unwrap().witness.unwrap();
        assert_eq!(src.evaluate(&out.extract_solution(&w).unwrap()).unwrap(), AggregatedValue::or(true));
    }

    #[test]
    fn apply_rejects_wrong_variant() {
        let src = Instance::MaxCut(Graph::path(2));
        assert!(matches!(rule("MIS[weight=unit] -> ILP").apply(&src), Err(Error::TypeMismatch { .. })));
    }

    #[test]
    fn extraction_checks_capability_and_dimensions() {
        let src = Instance::MaximumIndependentSet(Graph::path(4));
        let mut out = rule("MIS[weight=unit] -> ILP").apply(&src).unwrap();
        assert!(matches!(out.extract_solution(&[1, 0]), Err(Error::DimensionMismatch { .. })));
        out.extraction.witness = None;
        assert!(matches!(out.extract_solution(&[1, 0, 0, 1]), Err(Error::NotWitnessCapable(_))));
        out.extraction.value = None;
        assert!(matches!(out.extract_value(&AggregatedValue::max(1)), Err(Error::NoValueMap(_))));
    }
}
