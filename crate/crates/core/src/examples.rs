//! Canonical worked instances with known optima.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{fold_space, AggregatedValue, Configuration, Problem, Sense};
use crate::problems::{
    decision_wrap, Cnf, Coloring, Graph, Ilp, Instance, LinearConstraint, ProblemKind, Qubo, Relation,
    SetCover, SpinGlass, VariantKey,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalExample {
    pub id: String,
    pub instance: Instance,
    pub known_value: AggregatedValue,
    pub known_witness: Option<Configuration>,
    pub narrative: String,
}

impl CanonicalExample {
    fn new(
        id: &str,
        instance: Instance,
        known_value: AggregatedValue,
        known_witness: Option<Vec<usize>>,
        narrative: &str,
    ) -> Self {
        Self {
            id: id.to_string(),
            instance,
            known_value,
            known_witness: known_witness.map(Configuration),
            narrative: narrative.to_string(),
        }
    }

    pub fn variant(&self) -> VariantKey {
        self.instance.variant()
    }
}

fn path4() -> Graph {
    Graph::path(4)
}

/// The shipped database, one entry per registered variant plus extras.
pub fn database() -> Vec<CanonicalExample> {
    try_database().expect("canonical examples are valid")
}

fn try_database() -> Result<Vec<CanonicalExample>> {
    use AggregatedValue as V;
    let db = vec![
        CanonicalExample::new(
            "Satisfiability",
            Instance::Satisfiability(Cnf::new(
                4,
                vec![vec![1, 2, 3, 4], vec![-1, -2], vec![-3], vec![-4, 2]],
            )?),
            V::or(true),
            Some(vec![0, 1, 0, 0]),
            "four variables, one clause too long for 3-SAT; x2 alone satisfies it",
        ),
        CanonicalExample::new(
            "ThreeSatisfiability",
            Instance::three_sat(Cnf::new(3, vec![vec![1, 2, 3], vec![-1, 2, -3]])?)?,
            V::or(true),
            Some(vec![0, 1, 0]),
            "(x1 or x2 or x3) and (not x1 or x2 or not x3); x2 = 1 satisfies both",
        ),
        CanonicalExample::new(
            "MaximumIndependentSet",
            Instance::MaximumIndependentSet(path4()),
            V::max(2),
            Some(vec![1, 0, 0, 1]),
            "path 0-1-2-3: 4 locations, 3 conflicts",
        ),
        CanonicalExample::new(
            "MaximumIndependentSet/weighted",
            Instance::MaximumIndependentSet(path4().with_weights(vec![1, 4, 1, 1])?),
            V::max(5),
            Some(vec![0, 1, 0, 1]),
            "path 0-1-2-3 with weights 1,4,1,1; the heavy vertex wins",
        ),
        CanonicalExample::new(
            "MinimumVertexCover",
            Instance::MinimumVertexCover(path4()),
            V::min(2),
            Some(vec![0, 1, 1, 0]),
            "path 0-1-2-3; the two inner vertices touch every edge",
        ),
        CanonicalExample::new(
            "MaximumClique",
            Instance::MaximumClique(Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])?),
            V::max(3),
            Some(vec![1, 1, 1, 0, 0]),
            "two triangles sharing edge 1-2 plus a pendant vertex",
        ),
        CanonicalExample::new(
            "MinimumDominatingSet",
            Instance::MinimumDominatingSet(Graph::path(5)),
            V::min(2),
            Some(vec![0, 1, 0, 1, 0]),
            "path 0-1-2-3-4; vertices 1 and 3 dominate everything",
        ),
        CanonicalExample::new(
            "MinimumSetCover",
            Instance::MinimumSetCover(SetCover::new(
                5,
                vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![0, 4], vec![1, 3]],
            )?),
            V::min(2),
            Some(vec![1, 0, 1, 0, 0]),
            "universe 0..5, five sets; {0,1,2} and {3,4} cover it",
        ),
        CanonicalExample::new(
            "MaxCut",
            Instance::MaxCut(Graph::complete(3)),
            V::max(2),
            Some(vec![1, 0, 0]),
            "triangle; any one-vs-two split cuts two edges",
        ),
        CanonicalExample::new(
            "QUBO",
            Instance::Qubo(Qubo::new(vec![vec![2, -3, 0], vec![-3, 1, 2], vec![0, 2, -1]])?),
            V::max(4),
            Some(vec![0, 1, 1]),
            "three variables; the 1-2 coupling rewards picking both",
        ),
        CanonicalExample::new(
            "SpinGlass",
            Instance::SpinGlass(SpinGlass::new(3, vec![(0, 1, 1), (1, 2, 1), (0, 2, 1)], vec![0, 0, 1])?),
            V::max(2),
            Some(vec![0, 1, 0]),
            "frustrated antiferromagnetic triangle with a field on spin 2",
        ),
        CanonicalExample::new(
            "GraphColoring",
            Instance::GraphColoring(Coloring::new(Graph::complete(3), 3)?),
            V::or(true),
            Some(vec![0, 1, 2]),
            "triangle with three colors",
        ),
        CanonicalExample::new(
            "GraphColoring/two-colors",
            Instance::GraphColoring(Coloring::new(Graph::complete(3), 2)?),
            V::or(false),
            None,
            "triangle with two colors; odd cycles are not bipartite",
        ),
        CanonicalExample::new(
            "IntegerLinearProgram",
            Instance::IntegerLinearProgram(Ilp::new(
                vec![(0, 3), (0, 3)],
                vec![
                    LinearConstraint::new(vec![1, 1], Relation::Le, 4),
                    LinearConstraint::new(vec![1, -1], Relation::Le, 2),
                ],
                vec![3, 2],
                Sense::Maximize,
            )?),
            V::extremum(Sense::Maximize, 11),
            Some(vec![3, 1]),
            "maximize 3x1 + 2x2 with x1 + x2 <= 4, x1 - x2 <= 2, 0 <= x <= 3",
        ),
        CanonicalExample::new(
            "DecisionMaximumIndependentSet",
            decision_wrap(Instance::MaximumIndependentSet(path4()), 2)?,
            V::or(true),
            Some(vec![1, 0, 0, 1]),
            "does path 0-1-2-3 have an independent set of size 2?",
        ),
        CanonicalExample::new(
            "DecisionMinimumVertexCover",
            decision_wrap(Instance::MinimumVertexCover(path4()), 2)?,
            V::or(true),
            Some(vec![0, 1, 1, 0]),
            "does path 0-1-2-3 have a vertex cover of size 2?",
        ),
    ];
    Ok(db)
}

/// The first example of a problem, by full name, alias or example id.
pub fn get_example(name: &str) -> Result<CanonicalExample> {
    let db = database();
    if let Some(e) = db.iter().find(|e| e.id == name) {
        return Ok(e.clone());
    }
    let kind = ProblemKind::from_name(name);
    db.iter()
        .find(|e| Some(e.instance.problem()) == kind)
        .cloned()
        .ok_or_else(|| Error::NoExample { name: name.to_string(), available: example_problems(&db) })
}

/// The first example whose instance has exactly this variant.
pub fn example_for(variant: &VariantKey) -> Option<CanonicalExample> {
    database().into_iter().find(|e| &e.variant() == variant)
}

fn example_problems(db: &[CanonicalExample]) -> Vec<String> {
    let mut names: Vec<String> = db.iter().map(|e| e.instance.problem().name().to_string()).collect();
    names.dedup();
    names
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub id: String,
    /// `"value"` for the stored optimum, `"witness"` for the stored witness.
    pub field: &'static str,
    pub stored: AggregatedValue,
    pub derived: AggregatedValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Re-derives every stored optimum by brute force and re-evaluates every
/// stored witness.
pub fn verify_examples(db: &[CanonicalExample]) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for e in db {
        report.checked += 1;
        let derived = fold_space(&e.instance)?.value;
        if derived != e.known_value {
            report.mismatches.push(Mismatch {
                id: e.id.clone(),
                field: "value",
                stored: e.known_value,
                derived,
            });
        }
        if let Some(w) = &e.known_witness {
            let value = e.instance.evaluate(w)?;
            if value != e.known_value {
                report.mismatches.push(Mismatch {
                    id: e.id.clone(),
                    field: "witness",
                    stored: e.known_value,
                    derived: value,
                });
            }
        }
    }
    Ok(report)
}

/// Verifies the shipped database.
pub fn verify_all_examples() -> Result<VerificationReport> {
    verify_examples(&database())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::Registry;

    #[test]
    fn shipped_database_is_consistent() {
        let report = verify_all_examples().unwrap();
        assert_eq!(report.mismatches, vec![]);
        assert_eq!(report.checked, database().len());
    }

    #[test]
    fn corrupted_value_is_reported() {
        let mut db = vec![get_example("MIS").unwrap()];
        db[0].known_value = AggregatedValue::max(3);
        db[0].known_witness = None;
        let report = verify_examples(&db).unwrap();
        assert_eq!(report.mismatches.len(), 1);
        assert_eq!(report.mismatches[0].derived, AggregatedValue::max(2));
        assert!(verify_examples(&[]).unwrap().mismatches.is_empty());
    }

    #[test]
    fn every_variant_has_an_example() {
        let registry = Registry::catalogue().unwrap();
        for d in registry.iter() {
            let e = example_for(&d.variant).unwrap();
            assert!(e.instance.configuration_space().num_variables() <= 10, "{}", e.id);
        }
    }

    #[test]
    fn lookup_by_name() {
        let e = get_example("MaximumIndependentSet").unwrap();
        assert_eq!(e.instance.size_measures(), vec![("V", 4), ("E", 3)]);
        assert_eq!(get_example("MaxCut").unwrap().known_value, AggregatedValue::max(2));
        match get_example("Nope") {
            Err(Error::NoExample { available, .. }) => assert_eq!(available.len(), 14),
            other => panic!("{other:?}"),
        }
    }
}
