//! Exhaustive walk enumeration over a reduction graph, used as an oracle for
//! cheapest-path routing.

use std::cmp::Ordering;

use pred_core::graph::ReductionGraph;
use pred_core::problems::VariantKey;
use pred_core::rules::ReductionRule;
use pred_core::symbolic::{compare_single_scale, GrowthOrder, OverheadMap, SymbolicExpr};

#[derive(Debug, Clone)]
pub struct Walk {
    pub names: Vec<String>,
    pub cost: SymbolicExpr,
    /// No variant is visited twice.
    pub simple: bool,
}

/// Terminal complexity composed with the walk's overheads, computed
/// step by step from the identity map.
pub fn cost_of(g: &ReductionGraph, from: &VariantKey, steps: &[&ReductionRule]) -> SymbolicExpr {
    let source = g.registry().lookup(from).expect("registered source");
    let mut composite = OverheadMap::identity(source.size_measure_names.iter().map(String::as_str));
    for rule in steps {
        composite = OverheadMap::compose(&rule.overhead, &composite).expect("overheads compose");
    }
    let terminal = steps.last().map_or(from, |r| &r.target);
    let complexity = &g.registry().lookup(terminal).expect("registered target").complexity;
    composite.apply_to(complexity).expect("complexity over target measures")
}

/// Every walk of at most `max_len` edges from `from` to `to`.
pub fn walks(g: &ReductionGraph, from: &VariantKey, to: &VariantKey, max_len: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<&ReductionRule>> = vec![vec![]];
    while let Some(steps) = stack.pop() {
        let at = steps.last().map_or(from, |r| &r.target);
        if at == to {
            let mut seen: Vec<&VariantKey> = vec![from];
            seen.extend(steps.iter().map(|r| &r.target));
            let mut dedup = seen.clone();
            dedup.sort();
            dedup.dedup();
            out.push(Walk {
                names: steps.iter().map(|r| r.name()).collect(),
                cost: cost_of(g, from, &steps),
                simple: dedup.len() == seen.len(),
            });
        }
        if steps.len() < max_len {
            for rule in g.rules().iter().filter(|r| &r.source == at) {
                let mut next = steps.clone();
                next.push(rule);
                stack.push(next);
            }
        }
    }
    out
}

/// Cost on a single scale, then edge count, then rule names.
pub fn walk_order(a: &Walk, b: &Walk) -> Ordering {
    let by_cost = match compare_single_scale(&a.cost, &b.cost) {
        GrowthOrder::LowerGrowth => Ordering::Less,
        GrowthOrder::HigherGrowth => Ordering::Greater,
        _ => Ordering::Equal,
    };
    by_cost.then(a.names.len().cmp(&b.names.len())).then_with(|| a.names.cmp(&b.names))
}

/// Checks `find_path` against enumeration for every ordered variant pair.
/// Returns the number of routed pairs.
pub fn check_all_pairs(g: &ReductionGraph, max_len: usize) -> Result<usize, String> {
    let variants: Vec<VariantKey> = g.registry().iter().map(|d| d.variant.clone()).collect();
    let mut routed = 0;
    for from in &variants {
        for to in &variants {
            let found = g.find_path(from, to, true).map_err(|e| e.to_string())?;
            let all = walks(g, from, to, max_len);
            let best = all.iter().filter(|w| w.simple).min_by(|a, b| walk_order(a, b));
            match (found, best) {
                (None, None) if all.is_empty() => {}
                (Some(path), Some(best)) => {
                    routed += 1;
                    if path.names() != best.names {
                        return Err(format!("{from} -> {to}: {:?} vs {:?}", path.names(), best.names));
                    }
                    if let Some(w) = all.iter().find(|w| {
                        compare_single_scale(&w.cost, &path.estimated_cost) == GrowthOrder::LowerGrowth
                    }) {
                        return Err(format!("{from} -> {to}: walk {:?} is cheaper", w.names));
                    }
                }
                (found, best) => {
                    return Err(format!(
                        "{from} -> {to}: {:?} vs {:?}",
                        found.map(|p| p.names()),
                        best.map(|b| &b.names)
                    ))
                }
            }
        }
    }
    Ok(routed)
}
