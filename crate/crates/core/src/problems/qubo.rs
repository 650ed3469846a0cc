use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Maximize `x^T Q x` over `x ∈ {0,1}^n`, `Q` symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Qubo {
    q: Vec<Vec<i64>>,
}

impl Qubo {
    pub fn new(q: Vec<Vec<i64>>) -> Result<Self> {
        let n = q.len();
        if n == 0 {
            return Err(Error::InvalidInstance("QUBO needs at least one variable".into()));
        }
        if let Some(i) = q.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidInstance(format!("row {i} of Q is not of length {n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if q[i][j] != q[j][i] {
                    return Err(Error::InvalidInstance(format!("Q is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self { q })
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.q
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.q[i][j]
    }

    pub fn value(&self, x: &[usize]) -> i64 {
        let mut total = 0;
        for (i, row) in self.q.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            for (j, &qij) in row.iter().enumerate() {
                if x[j] == 1 {
                    total += qij;
                }
            }
        }
        total
    }
}

/// Ising spin glass: spins `s_i ∈ {-1,+1}` with pairwise couplings and
/// local fields. Configuration value 0 is spin −1, value 1 is spin +1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpinGlass {
    n: usize,
    couplings: Vec<(usize, usize, i64)>,
    fields: Vec<i64>,
}

impl SpinGlass {
    pub fn new(n: usize, couplings: Vec<(usize, usize, i64)>, fields: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInstance("spin glass needs at least one spin".into()));
        }
        if fields.len() != n {
            return Err(Error::InvalidInstance(format!("{} fields for {n} spins", fields.len())));
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(couplings.len());
        for (i, j, w) in couplings {
            if i == j || i >= n || j >= n {
                return Err(Error::InvalidInstance(format!("invalid coupling {i}-{j}")));
            }
            let key = (i.min(j), i.max(j));
            if !seen.insert(key) {
                return Err(Error::InvalidInstance(format!("duplicate coupling {}-{}", key.0, key.1)));
            }
            normalized.push((key.0, key.1, w));
        }
        Ok(Self { n, couplings: normalized, fields })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn couplings(&self) -> &[(usize, usize, i64)] {
        &self.couplings
    }

    pub fn fields(&self) -> &[i64] {
        &self.fields
    }

    /// `Σ J_ij s_i s_j + Σ h_i s_i`.
    pub fn energy(&self, config: &[usize]) -> i64 {
        let spin = |v: usize| if config[v] == 1 { 1 } else { -1 };
        let pair: i64 = self.couplings.iter().map(|&(i, j, w)| w * spin(i) * spin(j)).sum();
        let field: i64 = self.fields.iter().enumerate().map(|(i, h)| h * spin(i)).sum();
        pair + field
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn qubo_value() {
        let q = Qubo::new(vec![vec![1, -2], vec![-2, 1]]).unwrap();
        assert_eq!(q.value(&[1, 0]), 1);
        assert_eq!(q.value(&[1, 1]), -2);
        assert!(Qubo::new(vec![vec![1, 2], vec![3, 1]]).is_err());
    }

    #[test]
    fn ising_energy() {
        let s = SpinGlass::new(2, vec![(1, 0, 1)], vec![1, 0]).unwrap();
        assert_eq!(s.couplings(), &[(0, 1, 1)]);
        assert_eq!(s.energy(&[0, 0]), 1 - 1);
        assert_eq!(s.energy(&[1, 0]), -1 + 1);
        assert!(SpinGlass::new(2, vec![(0, 1, 1), (1, 0, 2)], vec![0, 0]).is_err());
    }
}
