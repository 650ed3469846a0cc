use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::Sense;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub rhs: i64,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<i64>, relation: Relation, rhs: i64) -> Self {
        Self { coeffs, relation, rhs }
    }

    pub fn activity(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

/// Bounded integer linear program.
///
/// Configuration value `v` of variable `i` stands for `lo_i + v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ilp {
    bounds: Vec<(i64, i64)>,
    constraints: Vec<LinearConstraint>,
    objective: Vec<i64>,
    sense: Sense,
}

impl Ilp {
    pub fn new(
        bounds: Vec<(i64, i64)>,
        constraints: Vec<LinearConstraint>,
        objective: Vec<i64>,
        sense: Sense,
    ) -> Result<Self> {
        let n = bounds.len();
        if n == 0 {
            return Err(Error::InvalidInstance("an ILP needs at least one variable".into()));
        }
        if let Some(i) = bounds.iter().position(|(lo, hi)| lo > hi) {
            return Err(Error::InvalidInstance(format!("variable {i} has lo > hi")));
        }
        if objective.len() != n {
            return Err(Error::InvalidInstance(format!(
                "objective has {} coefficients for {n} variables",
                objective.len()
            )));
        }
        if let Some(i) = constraints.iter().position(|c| c.coeffs.len() != n) {
            return Err(Error::InvalidInstance(format!(
                "constraint {i} has {} coefficients for {n} variables",
                constraints[i].coeffs.len()
            )));
        }
        Ok(Self { bounds, constraints, objective, sense })
    }

    /// A 0-1 program.
    pub fn binary(
        num_vars: usize,
        constraints: Vec<LinearConstraint>,
        objective: Vec<i64>,
        sense: Sense,
    ) -> Result<Self> {
        Self::new(alloc::vec![(0, 1); num_vars], constraints, objective, sense)
    }

    pub fn num_vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn objective(&self) -> &[i64] {
        &self.objective
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn domain_sizes(&self) -> Vec<usize> {
        self.bounds.iter().map(|(lo, hi)| (hi - lo + 1) as usize).collect()
    }

    pub fn values_of(&self, config: &[usize]) -> Vec<i64> {
        config.iter().zip(&self.bounds).map(|(&v, (lo, _))| lo + v as i64).collect()
    }

    pub fn config_of(&self, values: &[i64]) -> Vec<usize> {
        values.iter().zip(&self.bounds).map(|(&x, (lo, _))| (x - lo) as usize).collect()
    }

    pub fn objective_value(&self, x: &[i64]) -> i64 {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    pub fn is_feasible(&self, x: &[i64]) -> bool {
        x.iter().zip(&self.bounds).all(|(v, (lo, hi))| lo <= v && v <= hi)
            && self.constraints.iter().all(|c| c.relation.holds(c.activity(x), c.rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validates_shapes() {
        assert!(Ilp::new(vec![(1, 0)], vec![], vec![1], Sense::Maximize).is_err());
        assert!(Ilp::new(vec![(0, 1)], vec![], vec![1, 2], Sense::Maximize).is_err());
        let bad = LinearConstraint::new(vec![1, 1], Relation::Le, 1);
        assert!(Ilp::new(vec![(0, 1)], vec![bad], vec![1], Sense::Maximize).is_err());
    }

    #[test]
    fn config_offsets() {
        let ilp = Ilp::new(vec![(-1, 2), (3, 3)], vec![], vec![1, 1], Sense::Minimize).unwrap();
        assert_eq!(ilp.domain_sizes(), vec![4, 1]);
        assert_eq!(ilp.values_of(&[0, 0]), vec![-1, 3]);
        assert_eq!(ilp.config_of(&[2, 3]), vec![3, 0]);
    }
}
