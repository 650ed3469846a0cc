use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// CNF formula. Literals are signed, 1-indexed variable references: `+i` is
/// `x_i`, `-i` is its negation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf {
    num_variables: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(num_variables: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if num_variables == 0 {
            return Err(Error::InvalidInstance("a formula needs at least one variable".into()));
        }
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::InvalidInstance(format!("clause {i} is empty")));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_variables {
                    return Err(Error::InvalidInstance(format!(
                        "literal {lit} in clause {i} is outside ±1..{num_variables}"
                    )));
                }
            }
        }
        Ok(Self { num_variables, clauses })
    }

    pub fn num_variables(&self) -> usize {
        self.num_variables
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Total literal occurrences over all clauses.
    pub fn num_literals(&self) -> usize {
        self.clauses.iter().map(Vec::len).sum()
    }

    pub fn max_clause_len(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Whether `assignment` (0/1 per variable) satisfies every clause.
    pub fn is_satisfied_by(&self, assignment: &[usize]) -> bool {
        self.clauses.iter().all(|clause| clause.iter().any(|&lit| literal_true(lit, assignment)))
    }
}

pub(crate) fn literal_true(lit: i32, assignment: &[usize]) -> bool {
    let value = assignment[lit.unsigned_abs() as usize - 1] == 1;
    if lit > 0 {
        value
    } else {
        !value
    }
}
