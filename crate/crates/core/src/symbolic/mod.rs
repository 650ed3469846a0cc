//! Symbolic expressions over named size measures.
//!
//! Overheads on reduction edges are multivariate polynomials; complexities on
//! problem nodes may additionally contain exponentials and fractional powers.
//! All constants are non-negative, so every expression is monotone
//! non-decreasing in each variable.

mod growth;
mod poly;
mod text;

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{CheckedAdd, CheckedMul, One, ToPrimitive, Zero};

pub(crate) use growth::single_scale_ordering;
pub use growth::{compare, compare_single_scale, GrowthOrder};
pub use poly::{Monomial, Polynomial};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i128>;

/// Variable bindings for evaluation.
pub type Bindings = BTreeMap<String, Rational>;

/// Builds bindings from integer size measures.
pub fn bindings<'a, I>(values: I) -> Bindings
where
    I: IntoIterator<Item = (&'a str, u64)>,
{
    values.into_iter().map(|(k, v)| (k.to_string(), Rational::from_integer(v as i128))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymbolicExpr {
    Const(Rational),
    Var(String),
    Add(Vec<SymbolicExpr>),
    Mul(Vec<SymbolicExpr>),
    /// `base^exponent` for a constant exponent.
    Pow(Box<SymbolicExpr>, Rational),
    /// `base^exponent` for a non-constant exponent. The base is a constant
    /// greater than one or a non-constant expression (as in `k^V`).
    Exp(Box<SymbolicExpr>, Box<SymbolicExpr>),
}

impl SymbolicExpr {
    pub fn int(c: i64) -> Self {
        SymbolicExpr::Const(Rational::from_integer(c as i128))
    }

    pub fn var(name: &str) -> Self {
        SymbolicExpr::Var(name.to_string())
    }

    pub fn pow(base: SymbolicExpr, exponent: Rational) -> Self {
        SymbolicExpr::Pow(Box::new(base), exponent)
    }

    /// `base^exponent` with a constant base.
    pub fn exp(base: Rational, exponent: SymbolicExpr) -> Self {
        SymbolicExpr::Exp(Box::new(SymbolicExpr::Const(base)), Box::new(exponent))
    }

    pub fn parse(input: &str) -> Result<Self> {
        text::parse(input)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            SymbolicExpr::Const(_) => {}
            SymbolicExpr::Var(v) => {
                out.insert(v.clone());
            }
            SymbolicExpr::Add(xs) | SymbolicExpr::Mul(xs) => xs.iter().for_each(|x| x.collect_variables(out)),
            SymbolicExpr::Pow(b, _) => b.collect_variables(out),
            SymbolicExpr::Exp(b, e) => {
                b.collect_variables(out);
                e.collect_variables(out);
            }
        }
    }

    /// The polynomial this expression denotes, if it is one.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        match self {
            SymbolicExpr::Const(c) => Some(Polynomial::constant(*c)),
            SymbolicExpr::Var(v) => Some(Polynomial::var(v)),
            SymbolicExpr::Add(xs) => {
                let mut acc = Polynomial::zero();
                for x in xs {
                    acc.add_assign(&x.to_polynomial()?);
                }
                Some(acc)
            }
            SymbolicExpr::Mul(xs) => xs
                .iter()
                .try_fold(Polynomial::constant(Rational::one()), |acc, x| Some(acc.mul(&x.to_polynomial()?))),
            SymbolicExpr::Pow(b, q) => {
                if q.is_integer() && *q >= Rational::zero() {
                    let e = q.to_integer().to_u32()?;
                    Some(b.to_polynomial()?.pow(e))
                } else {
                    None
                }
            }
            SymbolicExpr::Exp(..) => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_polynomial().is_some()
    }

    /// Canonical form: polynomial parts fully expanded with sorted terms,
    /// nested sums and products flattened.
    pub fn canonical(&self) -> SymbolicExpr {
        if let Some(p) = self.to_polynomial() {
            return SymbolicExpr::from(&p);
        }
        match self {
            SymbolicExpr::Add(xs) => {
                let mut poly = Polynomial::zero();
                let mut rest = Vec::new();
                for x in xs {
                    match x.canonical() {
                        SymbolicExpr::Add(inner) => {
                            for y in inner {
                                match y.to_polynomial() {
                                    Some(p) => poly = poly.add(&p),
                                    None => rest.push(y),
                                }
                            }
                        }
                        y => match y.to_polynomial() {
                            Some(p) => poly = poly.add(&p),
                            None => rest.push(y),
                        },
                    }
                }
                sort_by_rendering(&mut rest);
                if !poly.is_zero() {
                    match SymbolicExpr::from(&poly) {
                        SymbolicExpr::Add(terms) => rest.extend(terms),
                        t => rest.push(t),
                    }
                }
                collapse(rest, SymbolicExpr::Add, SymbolicExpr::int(0))
            }
            SymbolicExpr::Mul(xs) => {
                let mut poly = Polynomial::constant(Rational::one());
                let mut rest = Vec::new();
                for x in xs {
                    match x.canonical() {
                        SymbolicExpr::Mul(inner) => {
                            for y in inner {
                                match y.to_polynomial() {
                                    Some(p) => poly = poly.mul(&p),
                                    None => rest.push(y),
                                }
                            }
                        }
                        y => match y.to_polynomial() {
                            Some(p) => poly = poly.mul(&p),
                            None => rest.push(y),
                        },
                    }
                }
                if poly.is_zero() {
                    return SymbolicExpr::int(0);
                }
                sort_by_rendering(&mut rest);
                if poly.as_constant() != Some(Rational::one()) {
                    rest.insert(0, SymbolicExpr::from(&poly));
                }
                collapse(rest, SymbolicExpr::Mul, SymbolicExpr::int(1))
            }
            SymbolicExpr::Pow(b, q) => {
                if q.is_zero() {
                    SymbolicExpr::int(1)
                } else if q.is_one() {
                    b.canonical()
                } else {
                    SymbolicExpr::Pow(Box::new(b.canonical()), *q)
                }
            }
            SymbolicExpr::Exp(b, e) => SymbolicExpr::Exp(Box::new(b.canonical()), Box::new(e.canonical())),
            SymbolicExpr::Const(_) | SymbolicExpr::Var(_) => self.clone(),
        }
    }

    /// Replaces variables by expressions and canonicalizes the result.
    pub fn substitute(&self, map: &BTreeMap<String, SymbolicExpr>) -> Result<SymbolicExpr> {
        if let Some(p) = self.to_polynomial() {
            let polys: Option<BTreeMap<String, Polynomial>> =
                map.iter().map(|(k, e)| Some((k.clone(), e.to_polynomial()?))).collect();
            if let Some(polys) = polys {
                return Ok(SymbolicExpr::from(&p.substitute(&polys)?));
            }
        }
        Ok(self.substitute_raw(map)?.canonical())
    }

    fn substitute_raw(&self, map: &BTreeMap<String, SymbolicExpr>) -> Result<SymbolicExpr> {
        Ok(match self {
            SymbolicExpr::Const(_) => self.clone(),
            SymbolicExpr::Var(v) => map.get(v).cloned().ok_or_else(|| Error::UnknownVariable(v.clone()))?,
            SymbolicExpr::Add(xs) => {
                SymbolicExpr::Add(xs.iter().map(|x| x.substitute_raw(map)).collect::<Result<_>>()?)
            }
            SymbolicExpr::Mul(xs) => {
                SymbolicExpr::Mul(xs.iter().map(|x| x.substitute_raw(map)).collect::<Result<_>>()?)
            }
            SymbolicExpr::Pow(b, q) => SymbolicExpr::Pow(Box::new(b.substitute_raw(map)?), *q),
            SymbolicExpr::Exp(b, e) => {
                SymbolicExpr::Exp(Box::new(b.substitute_raw(map)?), Box::new(e.substitute_raw(map)?))
            }
        })
    }

    /// Evaluates the expression. Polynomial parts stay exact; exponentials
    /// and fractional powers fall back to floating point.
    pub fn evaluate(&self, bindings: &Bindings) -> Result<Number> {
        Ok(match self {
            SymbolicExpr::Const(c) => Number::Exact(*c),
            SymbolicExpr::Var(v) => {
                Number::Exact(*bindings.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?)
            }
            SymbolicExpr::Add(xs) => {
                let mut acc = Number::Exact(Rational::zero());
                for x in xs {
                    acc = acc.add(x.evaluate(bindings)?);
                }
                acc
            }
            SymbolicExpr::Mul(xs) => {
                let mut acc = Number::Exact(Rational::one());
                for x in xs {
                    acc = acc.mul(x.evaluate(bindings)?);
                }
                acc
            }
            SymbolicExpr::Pow(b, q) => b.evaluate(bindings)?.pow(Number::Exact(*q)),
            SymbolicExpr::Exp(b, e) => b.evaluate(bindings)?.pow(e.evaluate(bindings)?),
        })
    }

    /// Whether every constant is non-negative and every exponential base is
    /// admissible.
    pub fn is_well_formed(&self) -> bool {
        match self {
            SymbolicExpr::Const(c) => *c >= Rational::zero(),
            SymbolicExpr::Var(_) => true,
            SymbolicExpr::Add(xs) | SymbolicExpr::Mul(xs) => xs.iter().all(Self::is_well_formed),
            SymbolicExpr::Pow(b, q) => *q >= Rational::zero() && b.is_well_formed(),
            SymbolicExpr::Exp(b, e) => {
                let base_ok = match b.as_ref() {
                    SymbolicExpr::Const(c) => *c > Rational::one(),
                    other => other.is_well_formed(),
                };
                base_ok && e.is_well_formed()
            }
        }
    }
}

fn sort_by_rendering(xs: &mut [SymbolicExpr]) {
    xs.sort_by_cached_key(|x| alloc::format!("{x}"));
}

fn collapse(
    mut xs: Vec<SymbolicExpr>,
    wrap: fn(Vec<SymbolicExpr>) -> SymbolicExpr,
    empty: SymbolicExpr,
) -> SymbolicExpr {
    match xs.len() {
        0 => empty,
        1 => xs.pop().unwrap_or(empty),
        _ => wrap(xs),
    }
}

impl From<&Polynomial> for SymbolicExpr {
    fn from(p: &Polynomial) -> Self {
        let terms: Vec<SymbolicExpr> = p
            .terms()
            .into_iter()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                if !c.is_one() || m.is_one() {
                    factors.push(SymbolicExpr::Const(*c));
                }
                for (v, e) in m.factors() {
                    let var = SymbolicExpr::Var(v.to_string());
                    factors.push(if *e == 1 {
                        var
                    } else {
                        SymbolicExpr::Pow(Box::new(var), Rational::from_integer(*e as i128))
                    });
                }
                collapse(factors, SymbolicExpr::Mul, SymbolicExpr::int(1))
            })
            .collect();
        collapse(terms, SymbolicExpr::Add, SymbolicExpr::int(0))
    }
}

impl fmt::Display for SymbolicExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::render(self, f)
    }
}

/// Result of evaluating an expression.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Number {
    Exact(Rational),
    Approx(f64),
}

impl Number {
    pub fn to_f64(self) -> f64 {
        match self {
            Number::Exact(r) => rational_to_f64(r),
            Number::Approx(x) => x,
        }
    }

    pub fn exact(self) -> Option<Rational> {
        match self {
            Number::Exact(r) => Some(r),
            Number::Approx(_) => None,
        }
    }

    fn add(self, other: Number) -> Number {
        if let (Number::Exact(a), Number::Exact(b)) = (self, other) {
            if let Some(s) = a.checked_add(&b) {
                return Number::Exact(s);
            }
        }
        Number::Approx(self.to_f64() + other.to_f64())
    }

    fn mul(self, other: Number) -> Number {
        if let (Number::Exact(a), Number::Exact(b)) = (self, other) {
            if let Some(s) = a.checked_mul(&b) {
                return Number::Exact(s);
            }
        }
        Number::Approx(self.to_f64() * other.to_f64())
    }

    fn pow(self, exponent: Number) -> Number {
        if let (Number::Exact(b), Number::Exact(e)) = (self, exponent) {
            if e.is_integer() && e >= Rational::zero() {
                if let Some(p) = e.to_integer().to_u32().and_then(|e| poly::checked_pow(b, e)) {
                    return Number::Exact(p);
                }
            }
        }
        Number::Approx(libm::pow(self.to_f64(), exponent.to_f64()))
    }
}

impl PartialOrd for Number {
    fn partial_cmp(&self, other: &Number) -> Option<Ordering> {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(r) => text::render_rational(*r, f),
            Number::Approx(x) => write!(f, "{x}"),
        }
    }
}

pub(crate) fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Target size measure → expression over source size measures, in the
/// target's declared measure order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OverheadMap {
    entries: Vec<(String, SymbolicExpr)>,
}

impl OverheadMap {
    pub fn new<I, S>(entries: I) -> Self
    where
        I: IntoIterator<Item = (S, SymbolicExpr)>,
        S: Into<String>,
    {
        Self { entries: entries.into_iter().map(|(k, e)| (k.into(), e.canonical())).collect() }
    }

    /// Builds a map from `(measure, expression text)` pairs.
    pub fn parse(entries: &[(&str, &str)]) -> Result<Self> {
        let parsed =
            entries.iter().map(|(k, e)| Ok((*k, SymbolicExpr::parse(e)?))).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(parsed))
    }

    pub fn identity<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        Self::new(names.into_iter().map(|n| (n, SymbolicExpr::var(n))))
    }

    pub fn get(&self, key: &str) -> Option<&SymbolicExpr> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, e)| e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &SymbolicExpr)> {
        self.entries.iter().map(|(k, e)| (k.as_str(), e))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Variables referenced by any expression.
    pub fn variables(&self) -> BTreeSet<String> {
        self.entries.iter().flat_map(|(_, e)| e.variables()).collect()
    }

    fn as_substitution(&self) -> BTreeMap<String, SymbolicExpr> {
        self.entries.iter().cloned().collect()
    }

    /// Substitutes `inner`'s expressions for the variables of `outer`: the
    /// overhead of applying `inner` first and `outer` second.
    pub fn compose(outer: &OverheadMap, inner: &OverheadMap) -> Result<OverheadMap> {
        let subst = inner.as_substitution();
        let entries = outer
            .entries
            .iter()
            .map(|(k, e)| Ok((k.clone(), e.substitute(&subst)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(OverheadMap { entries })
    }

    /// Feeds this map into an expression over its keys.
    pub fn apply_to(&self, expr: &SymbolicExpr) -> Result<SymbolicExpr> {
        expr.substitute(&self.as_substitution())
    }

    pub fn evaluate(&self, bindings: &Bindings) -> Result<Vec<(String, Number)>> {
        self.entries.iter().map(|(k, e)| Ok((k.clone(), e.evaluate(bindings)?))).collect()
    }
}

impl fmt::Display for OverheadMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {e}")?;
        }
        f.write_str("}")
    }
}

/// Evaluates `expr` under `bindings`.
pub fn evaluate_expr(expr: &SymbolicExpr, bindings: &Bindings) -> Result<Number> {
    expr.evaluate(bindings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(s: &str) -> SymbolicExpr {
        SymbolicExpr::parse(s).unwrap()
    }

    #[test]
    fn compose_substitutes_and_expands() {
        let outer = OverheadMap::parse(&[("V2", "2*V1")]).unwrap();
        let inner = OverheadMap::parse(&[("V1", "V + E")]).unwrap();
        let composed = OverheadMap::compose(&outer, &inner).unwrap();
        assert_eq!(composed, OverheadMap::parse(&[("V2", "2*V + 2*E")]).unwrap());
    }

    #[test]
    fn compose_with_identity_is_neutral() {
        let m = OverheadMap::parse(&[("n", "V + E^2"), ("c", "3*E")]).unwrap();
        let id = OverheadMap::identity(["V", "E"]);
        assert_eq!(OverheadMap::compose(&m, &id).unwrap(), m);
        let id_out = OverheadMap::identity(["n", "c"]);
        assert_eq!(OverheadMap::compose(&id_out, &m).unwrap(), m);
    }

    #[test]
    fn compose_quadratic_consumer() {
        let outer = OverheadMap::parse(&[("n", "V^2")]).unwrap();
        let inner = OverheadMap::parse(&[("V", "L")]).unwrap();
        let composed = OverheadMap::compose(&outer, &inner).unwrap();
        assert_eq!(composed.get("n"), Some(&p("L^2")));
    }

    #[test]
    fn compose_reports_missing_measure() {
        let outer = OverheadMap::parse(&[("n", "V + E")]).unwrap();
        let inner = OverheadMap::parse(&[("V", "L")]).unwrap();
        assert_eq!(OverheadMap::compose(&outer, &inner), Err(Error::UnknownVariable("E".into())));
    }

    #[test]
    fn evaluation_examples() {
        let b = bindings([("V", 3), ("E", 2)]);
        assert_eq!(p("V^2 + E").evaluate(&b).unwrap(), Number::Exact(Rational::from_integer(11)));
        let b = bindings([("L", 6)]);
        assert_eq!(p("L").evaluate(&b).unwrap(), Number::Exact(Rational::from_integer(6)));
        let b = bindings([("n", 10)]);
        let two_n = SymbolicExpr::exp(Rational::from_integer(2), SymbolicExpr::var("n"));
        assert_eq!(two_n.evaluate(&b).unwrap(), Number::Exact(Rational::from_integer(1024)));
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let b = bindings([("V", 3)]);
        assert_eq!(p("V + E").evaluate(&b), Err(Error::UnboundVariable("E".into())));
    }

    #[test]
    fn fractional_power_evaluates_in_floating_point() {
        let b = bindings([("V", 16)]);
        match p("V^(1/2)").evaluate(&b).unwrap() {
            Number::Approx(x) => assert!((x - 4.0).abs() < 1e-12),
            other => panic!("expected approximate result, got {other:?}"),
        }
    }

    #[test]
    fn canonical_form_is_order_independent() {
        assert_eq!(p("E + V*V + 2*E").canonical(), p("V^2 + 3*E").canonical());
        assert_eq!(p("(V + 1)*(V + 1)").canonical(), p("V^2 + 2*V + 1").canonical());
        assert_eq!(format!("{}", p("3*E + V^2").canonical()), "V^2 + 3*E");
    }

    #[test]
    fn substitution_into_exponentials() {
        let cost = p("2^n");
        let mut map = BTreeMap::new();
        map.insert("n".into(), p("L"));
        assert_eq!(cost.substitute(&map).unwrap(), p("2^L"));
    }
}
