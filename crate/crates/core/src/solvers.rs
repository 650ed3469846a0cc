//! Solver dispatch and the exact branch-and-bound ILP backend.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{ReductionEnvelope, ReductionGraph, ReductionPath};
use crate::model::{fold_space_within, AggregatedValue, Configuration, Problem, Sense, DEFAULT_MAX_CONFIGS};
use crate::problems::{Ilp, Instance, ProblemKind, Relation, SolveCapability, VariantKey};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Configurations brute force may enumerate.
    pub max_configs: u64,
    /// Branch-and-bound nodes the ILP solver may visit.
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_configs: DEFAULT_MAX_CONFIGS, max_nodes: DEFAULT_MAX_NODES }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub value: AggregatedValue,
    pub witness: Option<Configuration>,
    pub solver_name: String,
    pub route: Option<ReductionPath>,
}

const ILP_SOLVER: &str = "ilp";
const BRUTE_SOLVER: &str = "brute-force";

fn label(backend: &str, hops: &[&VariantKey]) -> String {
    if hops.is_empty() {
        return backend.into();
    }
    let names: Vec<&str> = hops.iter().map(|k| k.problem.alias()).collect();
    format!("{backend} (via {})", names.join(" -> "))
}

/// Solves `instance` exactly: the dedicated solver if its type has one,
/// else the cheapest witness-capable route to ILP, else brute force.
pub fn solve(graph: &ReductionGraph, instance: &Instance, budget: &Budget) -> Result<SolveResult> {
    let descriptor = graph.registry().descriptor_of(instance)?;
    if let (SolveCapability::Dedicated, Instance::IntegerLinearProgram(ilp)) =
        (descriptor.solve_capability, instance)
    {
        return solve_ilp(ilp, budget);
    }
    if descriptor.solve_capability == SolveCapability::ViaIlp {
        let ilp = VariantKey::new(ProblemKind::IntegerLinearProgram);
        if let Some(path) = graph.find_path(&descriptor.variant, &ilp, true)? {
            let envelope = graph.reduce_along(&path, instance)?;
            match solve_envelope(graph, &envelope, budget) {
                Err(Error::BudgetExceeded { .. }) => {}
                other => return other,
            }
        }
    }
    solve_brute(instance, budget)
}

/// Solves an envelope's target and maps the answer back to its source.
pub fn solve_envelope(
    graph: &ReductionGraph,
    envelope: &ReductionEnvelope,
    budget: &Budget,
) -> Result<SolveResult> {
    if envelope.path.is_empty() {
        return solve(graph, &envelope.source, budget);
    }
    let inner = solve(graph, &envelope.target, budget)?;
    let (value, witness) = match &inner.witness {
        Some(w) => {
            let config = envelope.extract(w)?;
            let value = envelope.source.evaluate(&config)?;
            (value, value.is_satisfied().then_some(config))
        }
        None => (envelope.extract_value(&inner.value)?, None),
    };
    let mut hops: Vec<&VariantKey> = envelope.path.nodes()[1..].to_vec();
    let mut steps = envelope.path.steps.clone();
    if let Some(route) = &inner.route {
        hops.extend(&route.nodes()[1..]);
        steps.extend(route.steps.iter().cloned());
    }
    let backend = if inner.solver_name.starts_with(ILP_SOLVER) { ILP_SOLVER } else { BRUTE_SOLVER };
    Ok(SolveResult {
        value,
        witness,
        solver_name: label(backend, &hops),
        route: Some(graph.make_path(&envelope.path.source, steps)?),
    })
}

/// Exhaustive fold over the configuration space.
pub fn solve_brute(instance: &Instance, budget: &Budget) -> Result<SolveResult> {
    let folded = fold_space_within(instance, budget.max_configs)?;
    Ok(SolveResult {
        value: folded.value,
        witness: folded.witness,
        solver_name: BRUTE_SOLVER.into(),
        route: None,
    })
}

/// Exact optimum by depth-first branch and bound.
///
/// Branches on the lowest-index unfixed variable, trying its values from the
/// objective's preferred end first. Each node tightens bounds per constraint
/// to a fixpoint and is pruned when an optimistic bound on the objective
/// cannot strictly beat the incumbent. The bound is interval arithmetic,
/// tightened by cliques of binary variables whose preferred values conflict
/// pairwise; see `Conflicts`.
pub fn solve_ilp(ilp: &Ilp, budget: &Budget) -> Result<SolveResult> {
    let (lo, hi): (Vec<i64>, Vec<i64>) = ilp.bounds().iter().copied().unzip();
    let sign = if ilp.sense() == Sense::Maximize { 1 } else { -1 };
    let gains: Vec<i128> = ilp.objective().iter().map(|&c| sign * c as i128).collect();
    let conflicts = Conflicts::new(ilp, &gains);
    let mut search = Search {
        ilp,
        rows: rows(ilp),
        sign,
        gains,
        conflicts,
        best: None,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    search.branch(lo, hi)?;
    let (objective, values) = search.best.ok_or(Error::Infeasible)?;
    Ok(SolveResult {
        value: AggregatedValue::extremum(ilp.sense(), objective),
        witness: Some(Configuration(ilp.config_of(&values))),
        solver_name: ILP_SOLVER.into(),
        route: None,
    })
}

struct Search<'a> {
    ilp: &'a Ilp,
    rows: Vec<Row>,
    /// `1` when maximizing, `-1` when minimizing.
    sign: i128,
    /// Objective coefficients times `sign`: larger is better.
    gains: Vec<i128>,
    conflicts: Conflicts,
    best: Option<(i64, Vec<i64>)>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn beats(&self, candidate: i128, incumbent: i64) -> bool {
        self.sign * candidate > self.sign * incumbent as i128
    }

    fn branch(&mut self, mut lo: Vec<i64>, mut hi: Vec<i64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded { what: "branch-and-bound node", limit: self.max_nodes });
        }
        if !propagate(&self.rows, &mut lo, &mut hi) {
            return Ok(());
        }
        if let Some((incumbent, _)) = &self.best {
            if !self.beats(self.optimistic(&lo, &hi), *incumbent) {
                return Ok(());
            }
        }
        let Some(j) = (0..lo.len()).find(|&j| lo[j] < hi[j]) else {
            if self.ilp.is_feasible(&lo) {
                let value = self.ilp.objective_value(&lo);
                if self.best.as_ref().is_none_or(|(b, _)| self.beats(value as i128, *b)) {
                    self.best = Some((value, lo));
                }
            }
            return Ok(());
        };
        let descending = self.gains[j] > 0;
        let (from, to) = (lo[j], hi[j]);
        let visit = |v: i64, this: &mut Self| {
            let (mut l, mut h) = (lo.clone(), hi.clone());
            l[j] = v;
            h[j] = v;
            this.branch(l, h)
        };
        if descending {
            for v in (from..=to).rev() {
                visit(v, self)?;
            }
        } else {
            for v in from..=to {
                visit(v, self)?;
            }
        }
        Ok(())
    }

    /// Best objective value reachable within the current box.
    fn optimistic(&self, lo: &[i64], hi: &[i64]) -> i128 {
        let gain: i128 =
            self.gains.iter().enumerate().map(|(j, &g)| (g * lo[j] as i128).max(g * hi[j] as i128)).sum();
        self.sign * (gain - self.conflicts.loss(&self.gains, lo, hi))
    }
}

/// Pairwise conflicts between preferred values of binary variables.
///
/// A variable's preferred value is the end of its domain its gain favors.
/// Two preferred values conflict when no feasible point takes both, or when
/// taking both forces a guard variable off its preferred value at a loss at
/// least as large as the smaller of the two gains. Either way a clique of
/// mutually conflicting variables contributes at most its best gain beyond
/// the non-preferred baseline.
struct Conflicts {
    /// `preferred[j]` for binary variables with a nonzero gain.
    preferred: Vec<Option<i64>>,
    /// `(u, v)` with `u < v`, mapped to the guard, if any.
    pairs: BTreeMap<(usize, usize), Option<usize>>,
    is_guard: Vec<bool>,
    /// Conflict partners of each variable, with the guard.
    neighbors: Vec<Vec<(usize, Option<usize>)>>,
}

impl Conflicts {
    fn new(ilp: &Ilp, gains: &[i128]) -> Self {
        let n = ilp.num_vars();
        let preferred: Vec<Option<i64>> = (0..n)
            .map(|j| match (ilp.bounds()[j], gains[j].signum()) {
                ((0, 1), 1) => Some(1),
                ((0, 1), -1) => Some(0),
                _ => None,
            })
            .collect();
        let mut pairs = BTreeMap::new();
        let mut guarded: Vec<((usize, usize), usize)> = Vec::new();
        for c in ilp.constraints() {
            let support: Vec<usize> = (0..n).filter(|&j| c.coeffs[j] != 0).collect();
            let holds = |vals: &[(usize, i64)]| {
                c.relation.holds(vals.iter().map(|&(j, x)| c.coeffs[j] * x).sum(), c.rhs)
            };
            match support[..] {
                [u, v] => {
                    if let (Some(pu), Some(pv)) = (preferred[u], preferred[v]) {
                        if !holds(&[(u, pu), (v, pv)]) {
                            pairs.insert((u, v), None);
                        }
                    }
                }
                [a, b, c3] => {
                    for (u, v, y) in [(a, b, c3), (a, c3, b), (b, c3, a)] {
                        let (Some(pu), Some(pv), Some(py)) = (preferred[u], preferred[v], preferred[y])
                        else {
                            continue;
                        };
                        let costly = gains[y].abs() >= gains[u].abs().min(gains[v].abs());
                        if costly
                            && !holds(&[(u, pu), (v, pv), (y, py)])
                            && holds(&[(u, pu), (v, pv), (y, 1 - py)])
                        {
                            guarded.push(((u, v), y));
                        }
                    }
                }
                _ => {}
            }
        }
        let mut uses = alloc::vec![0usize; n];
        for &(_, y) in &guarded {
            uses[y] += 1;
        }
        let mut is_guard = alloc::vec![false; n];
        for (pair, y) in guarded {
            if uses[y] == 1 {
                is_guard[y] = true;
                pairs.entry(pair).or_insert(Some(y));
            }
        }
        let mut neighbors = alloc::vec![Vec::new(); n];
        for (&(u, v), &guard) in &pairs {
            neighbors[u].push((v, guard));
            neighbors[v].push((u, guard));
        }
        Self { preferred, pairs, is_guard, neighbors }
    }

    fn active(&self, u: usize, v: usize, lo: &[i64], hi: &[i64]) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        match self.pairs.get(&key) {
            None => false,
            Some(None) => true,
            Some(&Some(y)) => lo[y] < hi[y] || Some(lo[y]) == self.preferred[y],
        }
    }

    fn at_preferred(&self, j: usize, lo: &[i64], hi: &[i64]) -> bool {
        lo[j] == hi[j] && Some(lo[j]) == self.preferred[j]
    }

    /// Free candidates that conflict, through a free guard costing at least
    /// their own gain, with a variable already fixed at its preferred value.
    /// Taking their preferred value cannot pay off.
    fn dominated(&self, v: usize, gains: &[i128], lo: &[i64], hi: &[i64]) -> bool {
        self.neighbors[v].iter().any(|&(u, guard)| {
            self.at_preferred(u, lo, hi)
                && guard.is_some_and(|y| lo[y] < hi[y] && gains[y].abs() >= gains[v].abs())
        })
    }

    /// Loss against the interval bound: dominated candidates fall back to
    /// their other value, and each clique of a greedy partition of the
    /// remaining free candidates keeps only its best gain.
    fn loss(&self, gains: &[i128], lo: &[i64], hi: &[i64]) -> i128 {
        if self.pairs.is_empty() {
            return 0;
        }
        let mut loss = 0;
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        let candidates =
            (0..lo.len()).filter(|&j| lo[j] < hi[j] && self.preferred[j].is_some() && !self.is_guard[j]);
        for j in candidates {
            if self.dominated(j, gains, lo, hi) {
                loss += gains[j].abs();
                continue;
            }
            let home = cliques.iter_mut().find(|q| q.iter().all(|&i| self.active(i, j, lo, hi)));
            match home {
                Some(q) => q.push(j),
                None => cliques.push(alloc::vec![j]),
            }
        }
        for clique in cliques {
            let magnitudes = clique.iter().map(|&j| gains[j].abs());
            loss += magnitudes.clone().sum::<i128>() - magnitudes.max().unwrap_or(0);
        }
        loss
    }
}

/// A constraint as `Σ a_j x_j <= rhs` over its nonzero coefficients.
struct Row {
    terms: Vec<(usize, i128)>,
    rhs: i128,
}

fn rows(ilp: &Ilp) -> Vec<Row> {
    let mut rows = Vec::new();
    for c in ilp.constraints() {
        let signs: &[i128] = match c.relation {
            Relation::Le => &[1],
            Relation::Ge => &[-1],
            Relation::Eq => &[1, -1],
        };
        for &sign in signs {
            let terms = c
                .coeffs
                .iter()
                .enumerate()
                .filter(|&(_, &a)| a != 0)
                .map(|(j, &a)| (j, sign * a as i128))
                .collect();
            rows.push(Row { terms, rhs: sign * c.rhs as i128 });
        }
    }
    rows
}

/// Tightens `lo`/`hi` against every row until nothing changes.
/// Returns `false` when some domain becomes empty.
fn propagate(rows: &[Row], lo: &mut [i64], hi: &mut [i64]) -> bool {
    let mut changed = true;
    while changed {
        changed = false;
        for row in rows {
            match tighten(row, lo, hi) {
                None => return false,
                Some(true) => changed = true,
                Some(false) => {}
            }
        }
    }
    true
}

/// One pass of bound tightening on a single row.
fn tighten(row: &Row, lo: &mut [i64], hi: &mut [i64]) -> Option<bool> {
    let min_activity: i128 =
        row.terms.iter().map(|&(j, a)| if a > 0 { a * lo[j] as i128 } else { a * hi[j] as i128 }).sum();
    let slack = row.rhs - min_activity;
    if slack < 0 {
        return None;
    }
    let mut changed = false;
    for &(j, a) in &row.terms {
        if a > 0 {
            let cap = lo[j] as i128 + slack / a;
            if cap < hi[j] as i128 {
                hi[j] = cap as i64;
                changed = true;
            }
        } else {
            let floor = hi[j] as i128 - slack / -a;
            if floor > lo[j] as i128 {
                lo[j] = floor as i64;
                changed = true;
            }
        }
        if lo[j] > hi[j] {
            return None;
        }
    }
    Some(changed)
}
