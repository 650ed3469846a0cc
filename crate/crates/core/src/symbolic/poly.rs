//! Multivariate polynomials with rational coefficients in canonical
//! (expanded, merged, sorted) form.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A product of variables raised to positive powers, sorted by name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Self(alloc::vec![(Arc::from(name), 1)])
    }

    pub fn factors(&self) -> &[(Arc<str>, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    merged.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    merged.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    merged.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&a[i..]);
        merged.extend_from_slice(&b[j..]);
        Monomial(merged)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(name: &str) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(name), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by descending total degree, then by monomial.
    pub fn terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v.to_string())).collect()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).copied(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() = add(*slot.get(), c);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub(crate) fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), *c);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), mul(*ca, *cb));
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut out = Polynomial::constant(Rational::one());
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                out = out.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Replaces every variable by the polynomial bound to it.
    pub fn substitute(&self, map: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let mut powers: BTreeMap<(&str, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(*c);
            for (v, e) in &m.0 {
                let power = match powers.entry((&**v, *e)) {
                    Entry::Occupied(slot) => slot.into_mut(),
                    Entry::Vacant(slot) => {
                        let replacement =
                            map.get(&**v).ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
                        slot.insert(replacement.pow(*e))
                    }
                };
                term = term.mul(power);
            }
            out.add_assign(&term);
        }
        Ok(out)
    }

    /// Exact evaluation; `None` on overflow.
    pub fn evaluate(&self, bindings: &BTreeMap<String, Rational>) -> Result<Option<Rational>> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = *c;
            for (v, e) in &m.0 {
                let x = bindings.get(&**v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                match checked_pow(*x, *e).and_then(|p| term.checked_mul(&p)) {
                    Some(t) => term = t,
                    None => return Ok(None),
                }
            }
            match total.checked_add(&term) {
                Some(t) => total = t,
                None => return Ok(None),
            }
        }
        Ok(Some(total))
    }

    /// Univariate view after replacing every variable by one scale symbol:
    /// coefficients indexed by degree.
    pub fn single_scale(&self) -> BTreeMap<u32, Rational> {
        let mut out: BTreeMap<u32, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            *out.entry(m.degree()).or_insert_with(Rational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Order of `self` and `other` for large values of a common scale.
    pub fn eventual_cmp(&self, other: &Polynomial) -> Ordering {
        let a = self.single_scale();
        let b = other.single_scale();
        let degrees: BTreeSet<u32> = a.keys().chain(b.keys()).copied().collect();
        for d in degrees.into_iter().rev() {
            let ca = a.get(&d).copied().unwrap_or_else(Rational::zero);
            let cb = b.get(&d).copied().unwrap_or_else(Rational::zero);
            match ca.cmp(&cb) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| *c >= Rational::zero())
    }
}

/// Sum that skips gcd reduction when both sides are integers.
fn add(a: Rational, b: Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.to_integer() + b.to_integer())
    } else {
        a + b
    }
}

/// Product that skips gcd reduction when both sides are integers.
fn mul(a: Rational, b: Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        Rational::from_integer(a.to_integer() * b.to_integer())
    } else {
        a * b
    }
}

pub(crate) fn checked_pow(base: Rational, exp: u32) -> Option<Rational> {
    let mut out = Rational::one();
    for _ in 0..exp {
        out = out.checked_mul(&base)?;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn expands_and_merges() {
        let v = Polynomial::var("V");
        let e = Polynomial::var("E");
        let sq = v.add(&e).pow(2);
        assert_eq!(sq.terms().len(), 3);
        let mut b = BTreeMap::new();
        b.insert("V".to_string(), r(3));
        b.insert("E".to_string(), r(2));
        assert_eq!(sq.evaluate(&b).unwrap(), Some(r(25)));
    }

    #[test]
    fn cancellation_removes_terms() {
        let v = Polynomial::var("V");
        let neg = Polynomial::constant(r(-1)).mul(&v);
        assert!(v.add(&neg).is_zero());
    }

    #[test]
    fn eventual_order() {
        let t2 = Polynomial::var("a").pow(2);
        let t = Polynomial::var("b").mul(&Polynomial::constant(r(100)));
        assert_eq!(t2.eventual_cmp(&t), Ordering::Greater);
        assert_eq!(t.eventual_cmp(&t.clone()), Ordering::Equal);
    }
}
