use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetCover {
    num_elements: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCover {
    /// Rejects element indices out of range and families whose union misses
    /// an element.
    pub fn new(num_elements: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if num_elements == 0 {
            return Err(Error::InvalidInstance("set cover needs at least one element".into()));
        }
        let mut covered = vec![false; num_elements];
        for (i, set) in sets.iter().enumerate() {
            for &e in set {
                if e >= num_elements {
                    return Err(Error::InvalidInstance(format!(
                        "set {i} contains element {e} outside 0..{num_elements}"
                    )));
                }
                covered[e] = true;
            }
        }
        if let Some(e) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidInstance(format!("element {e} is in no set; infeasible")));
        }
        Ok(Self { num_elements, sets })
    }

    pub fn num_elements(&self) -> usize {
        self.num_elements
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn covers(&self, config: &[usize]) -> bool {
        let mut covered = vec![false; self.num_elements];
        for (set, _) in self.sets.iter().zip(config).filter(|(_, &x)| x == 1) {
            for &e in set {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}
