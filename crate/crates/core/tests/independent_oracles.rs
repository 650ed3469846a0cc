//! Stored optima re-derived with deliberately naive evaluators that share no
//! code with the library's evaluation or folding.

use pred_core::examples::database;
use pred_core::model::{Payload, Sense};
use pred_core::problems::Instance;

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |mask| (0..n).map(|i| mask >> i & 1 == 1).collect())
}

fn edges_ok(edges: &[(usize, usize)], pick: &[bool], ok: impl Fn(bool, bool) -> bool) -> bool {
    edges.iter().all(|&(u, v)| ok(pick[u], pick[v]))
}

fn count(pick: &[bool]) -> i64 {
    pick.iter().filter(|&&b| b).count() as i64
}

/// Best payload, or `None` when nothing is feasible / satisfiable.
fn naive(inst: &Instance) -> Option<i64> {
    match inst {
        Instance::Satisfiability(f) | Instance::ThreeSatisfiability(f) => {
            let sat = subsets(f.num_variables()).any(|x| {
                f.clauses().iter().all(|c| c.iter().any(|&l| x[l.unsigned_abs() as usize - 1] == (l > 0)))
            });
            sat.then_some(1)
        }
        Instance::MaximumIndependentSet(g) => subsets(g.num_vertices())
            .filter(|p| edges_ok(g.edges(), p, |a, b| !(a && b)))
            .map(|p| (0..p.len()).filter(|&v| p[v]).map(|v| g.weight(v)).sum())
            .max(),
        Instance::MinimumVertexCover(g) => subsets(g.num_vertices())
            .filter(|p| edges_ok(g.edges(), p, |a, b| a || b))
            .map(|p| count(&p))
            .min(),
        Instance::MaximumClique(g) => subsets(g.num_vertices())
            .filter(|p| {
                let n = p.len();
                (0..n).all(|u| (u + 1..n).all(|v| !(p[u] && p[v]) || g.has_edge(u, v)))
            })
            .map(|p| count(&p))
            .max(),
        Instance::MinimumDominatingSet(g) => subsets(g.num_vertices())
            .filter(|p| (0..p.len()).all(|v| p[v] || (0..p.len()).any(|u| p[u] && g.has_edge(u, v))))
            .map(|p| count(&p))
            .min(),
        Instance::MinimumSetCover(sc) => subsets(sc.num_sets())
            .filter(|p| {
                (0..sc.num_elements()).all(|e| (0..p.len()).any(|s| p[s] && sc.sets()[s].contains(&e)))
            })
            .map(|p| count(&p))
            .min(),
        Instance::MaxCut(g) => subsets(g.num_vertices())
            .map(|p| g.edges().iter().filter(|&&(u, v)| p[u] != p[v]).count() as i64)
            .max(),
        Instance::Qubo(q) => subsets(q.n())
            .map(|p| {
                let mut total = 0;
                for i in 0..q.n() {
                    for j in 0..q.n() {
                        if p[i] && p[j] {
                            total += q.get(i, j);
                        }
                    }
                }
                total
            })
            .max(),
        Instance::SpinGlass(s) => subsets(s.n())
            .map(|p| {
                let spin = |i: usize| if p[i] { 1 } else { -1 };
                let e: i64 = s.couplings().iter().map(|&(i, j, w)| w * spin(i) * spin(j)).sum::<i64>()
                    + s.fields().iter().enumerate().map(|(i, h)| h * spin(i)).sum::<i64>();
                -e
            })
            .max(),
        Instance::GraphColoring(c) => {
            let (n, k) = (c.graph.num_vertices(), c.colors);
            let ok = (0..k.pow(n as u32)).any(|code| {
                let color = |v: usize| code / k.pow(v as u32) % k;
                c.graph.edges().iter().all(|&(u, v)| color(u) != color(v))
            });
            ok.then_some(1)
        }
        Instance::IntegerLinearProgram(ilp) => {
            let mut best: Option<i64> = None;
            let (lo, hi) = (ilp.bounds()[0], ilp.bounds()[1]);
            for x0 in lo.0..=lo.1 {
                for x1 in hi.0..=hi.1 {
                    let x = [x0, x1];
                    let ok = ilp.constraints().iter().all(|c| {
                        let act: i64 = c.coeffs.iter().zip(&x).map(|(a, b)| a * b).sum();
                        c.relation.holds(act, c.rhs)
                    });
                    if ok {
                        let v: i64 = ilp.objective().iter().zip(&x).map(|(a, b)| a * b).sum();
                        best = Some(match (best, ilp.sense()) {
                            (None, _) => v,
                            (Some(b), Sense::Maximize) => b.max(v),
                            (Some(b), Sense::Minimize) => b.min(v),
                        });
                    }
                }
            }
            best
        }
        Instance::Decision(d) => {
            let inner = naive(&d.inner)?;
            let met = match d.inner.problem().aggregate() {
                pred_core::model::Aggregate::Max => inner >= d.bound,
                _ => inner <= d.bound,
            };
            met.then_some(1)
        }
    }
}

#[test]
fn stored_optima_match_naive_enumeration() {
    for example in database() {
        let derived = naive(&example.instance);
        match example.known_value.payload {
            Payload::Bool(b) => assert_eq!(derived.is_some(), b, "{}", example.id),
            Payload::Int(v) => assert_eq!(derived, Some(v), "{}", example.id),
        }
    }
}

#[test]
fn frozen_values() {
    let values: Vec<(String, String)> =
        database().iter().map(|e| (e.id.clone(), e.known_value.to_string())).collect();
    let expected = [
        ("Satisfiability", "Or(true)"),
        ("ThreeSatisfiability", "Or(true)"),
        ("MaximumIndependentSet", "Max(2)"),
        ("MaximumIndependentSet/weighted", "Max(5)"),
        ("MinimumVertexCover", "Min(2)"),
        ("MaximumClique", "Max(3)"),
        ("MinimumDominatingSet", "Min(2)"),
        ("MinimumSetCover", "Min(2)"),
        ("MaxCut", "Max(2)"),
        ("QUBO", "Max(4)"),
        ("SpinGlass", "Max(2)"),
        ("GraphColoring", "Or(true)"),
        ("GraphColoring/two-colors", "Or(false)"),
        ("IntegerLinearProgram", "Extremum(max, 11)"),
        ("DecisionMaximumIndependentSet", "Or(true)"),
        ("DecisionMinimumVertexCover", "Or(true)"),
    ];
    let expected: Vec<(String, String)> =
        expected.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(values, expected);
}
