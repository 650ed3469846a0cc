//! Asymptotic comparison.
//!
//! Every variable is replaced by one scale symbol `t`, and the logarithm of
//! the expression is expanded into a sum of terms `c * t^p * (ln t)^l`.
//! Two expressions compare by the leading term of the difference of their
//! expansions; a difference only in the constant term (a constant factor) is
//! `Equivalent`. For multivariate inputs each variable is also scaled on its
//! own with the others held at 1; opposite verdicts make the pair
//! `Incomparable`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rational_to_f64, Rational, SymbolicExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrowthOrder {
    LowerGrowth,
    HigherGrowth,
    Equivalent,
    Incomparable,
}

impl GrowthOrder {
    pub fn reverse(self) -> Self {
        match self {
            GrowthOrder::LowerGrowth => GrowthOrder::HigherGrowth,
            GrowthOrder::HigherGrowth => GrowthOrder::LowerGrowth,
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct LogTerm {
    power: Rational,
    log_power: u32,
    coeff: f64,
}

impl LogTerm {
    fn key(&self) -> (Rational, u32) {
        (self.power, self.log_power)
    }
}

/// Asymptotic expansion of `ln f(t)`; `Zero` is the identically-zero function.
#[derive(Debug, Clone, PartialEq)]
enum LogGrowth {
    Zero,
    Terms(Vec<LogTerm>),
}

const REL_TOL: f64 = 1e-9;

fn normalize(mut terms: Vec<LogTerm>) -> Vec<LogTerm> {
    terms.sort_by_key(|t| core::cmp::Reverse(t.key()));
    let mut out: Vec<LogTerm> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.key() == t.key() => last.coeff += t.coeff,
            _ => out.push(t),
        }
    }
    out.retain(|t| t.coeff.abs() > 1e-300);
    out
}

fn scale_terms(terms: &[LogTerm], by: f64) -> Vec<LogTerm> {
    terms.iter().map(|t| LogTerm { coeff: t.coeff * by, ..*t }).collect()
}

/// Sign of `a - b`, ignoring the constant term (constant factors).
fn cmp_terms(a: &[LogTerm], b: &[LogTerm], include_constant: bool) -> Ordering {
    let mut diff: Vec<LogTerm> = a.to_vec();
    diff.extend(scale_terms(b, -1.0));
    diff.sort_by_key(|t| core::cmp::Reverse(t.key()));
    let mut i = 0;
    while i < diff.len() {
        let key = diff[i].key();
        let mut sum = 0.0;
        let mut magnitude: f64 = 1.0;
        while i < diff.len() && diff[i].key() == key {
            sum += diff[i].coeff;
            magnitude = magnitude.max(diff[i].coeff.abs());
            i += 1;
        }
        let is_constant = key.0.is_zero() && key.1 == 0;
        if is_constant && !include_constant {
            continue;
        }
        if sum.abs() > REL_TOL * magnitude {
            return if sum > 0.0 { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

fn cmp_growth(a: &LogGrowth, b: &LogGrowth, include_constant: bool) -> Ordering {
    match (a, b) {
        (LogGrowth::Zero, LogGrowth::Zero) => Ordering::Equal,
        (LogGrowth::Zero, _) => Ordering::Less,
        (_, LogGrowth::Zero) => Ordering::Greater,
        (LogGrowth::Terms(x), LogGrowth::Terms(y)) => cmp_terms(x, y, include_constant),
    }
}

/// Generalized polynomial in `t` (rational exponents), as (exponent, coeff).
fn series(expr: &SymbolicExpr, scaled: &dyn Fn(&str) -> bool) -> Option<Vec<(Rational, f64)>> {
    let merge = |mut xs: Vec<(Rational, f64)>| {
        xs.sort_by_key(|t| core::cmp::Reverse(t.0));
        let mut out: Vec<(Rational, f64)> = Vec::new();
        for (p, c) in xs {
            match out.last_mut() {
                Some(last) if last.0 == p => last.1 += c,
                _ => out.push((p, c)),
            }
        }
        out.retain(|(_, c)| *c != 0.0);
        out
    };
    match expr {
        SymbolicExpr::Const(c) => Some(merge(alloc::vec![(Rational::zero(), rational_to_f64(*c))])),
        SymbolicExpr::Var(v) => {
            Some(alloc::vec![(if scaled(v) { Rational::one() } else { Rational::zero() }, 1.0)])
        }
        SymbolicExpr::Add(xs) => {
            let mut all = Vec::new();
            for x in xs {
                all.extend(series(x, scaled)?);
            }
            Some(merge(all))
        }
        SymbolicExpr::Mul(xs) => {
            let mut acc = alloc::vec![(Rational::zero(), 1.0)];
            for x in xs {
                let s = series(x, scaled)?;
                let mut next = Vec::new();
                for (p1, c1) in &acc {
                    for (p2, c2) in &s {
                        next.push((p1 + p2, c1 * c2));
                    }
                }
                acc = merge(next);
            }
            Some(acc)
        }
        SymbolicExpr::Pow(b, q) => {
            let s = series(b, scaled)?;
            if q.is_integer() && !q.is_negative() {
                let mut acc = alloc::vec![(Rational::zero(), 1.0)];
                for _ in 0..q.to_integer().to_u32()? {
                    let mut next = Vec::new();
                    for (p1, c1) in &acc {
                        for (p2, c2) in &s {
                            next.push((p1 + p2, c1 * c2));
                        }
                    }
                    acc = merge(next);
                }
                Some(acc)
            } else if s.len() == 1 && s[0].1 > 0.0 {
                Some(alloc::vec![(s[0].0 * q, libm::pow(s[0].1, rational_to_f64(*q)))])
            } else {
                None
            }
        }
        SymbolicExpr::Exp(b, e) => {
            let (sb, se) = (series(b, scaled)?, series(e, scaled)?);
            let constant = |s: &[(Rational, f64)]| match s {
                [] => Some(0.0),
                [(p, c)] if p.is_zero() => Some(*c),
                _ => None,
            };
            let value = libm::pow(constant(&sb)?, constant(&se)?);
            Some(merge(alloc::vec![(Rational::zero(), value)]))
        }
    }
}

fn log_growth(expr: &SymbolicExpr, scaled: &dyn Fn(&str) -> bool) -> Option<LogGrowth> {
    Some(match expr {
        SymbolicExpr::Const(c) => {
            if c.is_zero() {
                LogGrowth::Zero
            } else {
                LogGrowth::Terms(normalize(alloc::vec![LogTerm {
                    power: Rational::zero(),
                    log_power: 0,
                    coeff: libm::log(rational_to_f64(*c)),
                }]))
            }
        }
        SymbolicExpr::Var(v) => {
            if scaled(v) {
                LogTerm { power: Rational::zero(), log_power: 1, coeff: 1.0 }.into()
            } else {
                LogGrowth::Terms(Vec::new())
            }
        }
        SymbolicExpr::Add(xs) => {
            let mut best: Option<LogGrowth> = None;
            for x in xs {
                let g = log_growth(x, scaled)?;
                best = match best {
                    Some(b) if cmp_growth(&b, &g, true) != Ordering::Less => Some(b),
                    _ => Some(g),
                };
            }
            best.unwrap_or(LogGrowth::Zero)
        }
        SymbolicExpr::Mul(xs) => {
            let mut all = Vec::new();
            for x in xs {
                match log_growth(x, scaled)? {
                    LogGrowth::Zero => return Some(LogGrowth::Zero),
                    LogGrowth::Terms(t) => all.extend(t),
                }
            }
            LogGrowth::Terms(normalize(all))
        }
        SymbolicExpr::Pow(b, q) => {
            if q.is_zero() {
                return Some(LogGrowth::Terms(Vec::new()));
            }
            match log_growth(b, scaled)? {
                LogGrowth::Zero => LogGrowth::Zero,
                LogGrowth::Terms(t) => LogGrowth::Terms(normalize(scale_terms(&t, rational_to_f64(*q)))),
            }
        }
        SymbolicExpr::Exp(b, e) => {
            let base = match log_growth(b, scaled)? {
                LogGrowth::Zero => return Some(LogGrowth::Zero),
                LogGrowth::Terms(t) => t,
            };
            let exponent = series(e, scaled)?;
            let mut all = Vec::new();
            for (p, c) in &exponent {
                for t in &base {
                    all.push(LogTerm { power: t.power + p, log_power: t.log_power, coeff: t.coeff * c });
                }
            }
            LogGrowth::Terms(normalize(all))
        }
    })
}

impl From<LogTerm> for LogGrowth {
    fn from(t: LogTerm) -> Self {
        LogGrowth::Terms(alloc::vec![t])
    }
}

fn order_of(a: &SymbolicExpr, b: &SymbolicExpr, scaled: &dyn Fn(&str) -> bool) -> GrowthOrder {
    match (log_growth(a, scaled), log_growth(b, scaled)) {
        (Some(ga), Some(gb)) => match cmp_growth(&ga, &gb, false) {
            Ordering::Less => GrowthOrder::LowerGrowth,
            Ordering::Greater => GrowthOrder::HigherGrowth,
            Ordering::Equal => GrowthOrder::Equivalent,
        },
        _ => GrowthOrder::Incomparable,
    }
}

/// Compares two expressions after substituting one scale symbol for every
/// variable. Total on every expression the catalogue uses.
pub fn compare_single_scale(a: &SymbolicExpr, b: &SymbolicExpr) -> GrowthOrder {
    order_of(a, b, &|_| true)
}

/// Asymptotic ordering of `a` relative to `b`.
pub fn compare(a: &SymbolicExpr, b: &SymbolicExpr) -> GrowthOrder {
    let overall = compare_single_scale(a, b);
    let vars: BTreeSet<_> = a.variables().union(&b.variables()).cloned().collect();
    if vars.len() <= 1 || overall == GrowthOrder::Incomparable {
        return overall;
    }
    let (mut lower, mut higher) = (false, false);
    for v in &vars {
        match order_of(a, b, &|name| name == v.as_str()) {
            GrowthOrder::LowerGrowth => lower = true,
            GrowthOrder::HigherGrowth => higher = true,
            GrowthOrder::Incomparable => return GrowthOrder::Incomparable,
            GrowthOrder::Equivalent => {}
        }
    }
    match overall {
        _ if lower && higher => GrowthOrder::Incomparable,
        GrowthOrder::LowerGrowth if higher => GrowthOrder::Incomparable,
        GrowthOrder::HigherGrowth if lower => GrowthOrder::Incomparable,
        other => other,
    }
}

/// Total order used for routing: `compare_single_scale`, with
/// `Incomparable` treated as equal.
pub(crate) fn single_scale_ordering(a: &SymbolicExpr, b: &SymbolicExpr) -> Ordering {
    match compare_single_scale(a, b) {
        GrowthOrder::LowerGrowth => Ordering::Less,
        GrowthOrder::HigherGrowth => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SymbolicExpr {
        SymbolicExpr::parse(s).unwrap()
    }

    #[test]
    fn polynomial_degrees() {
        assert_eq!(compare(&p("n^2"), &p("n^3")), GrowthOrder::LowerGrowth);
        assert_eq!(compare(&p("n^3"), &p("n^2")), GrowthOrder::HigherGrowth);
        assert_eq!(compare(&p("2*n^2"), &p("n^2")), GrowthOrder::Equivalent);
        assert_eq!(compare(&p("n^2 + n"), &p("n^2")), GrowthOrder::Equivalent);
    }

    #[test]
    fn exponentials_dominate_polynomials() {
        assert_eq!(compare(&p("1.1996^n"), &p("n^5")), GrowthOrder::HigherGrowth);
        assert_eq!(compare(&p("1.1996^n"), &p("2^n")), GrowthOrder::LowerGrowth);
        assert_eq!(compare(&p("2^(2*n)"), &p("4^n")), GrowthOrder::Equivalent);
        assert_eq!(compare(&p("2^n*n"), &p("2^n")), GrowthOrder::HigherGrowth);
        assert_eq!(compare(&p("n^n"), &p("1000^n")), GrowthOrder::HigherGrowth);
        assert_eq!(compare(&p("2^(n^(1/2))"), &p("n^50")), GrowthOrder::HigherGrowth);
        assert_eq!(compare(&p("2^(n^(1/2))"), &p("1.0001^n")), GrowthOrder::LowerGrowth);
    }

    #[test]
    fn crossing_multivariate_is_incomparable() {
        assert_eq!(compare(&p("V^2"), &p("E^3")), GrowthOrder::Incomparable);
        assert_eq!(compare(&p("V*E"), &p("V^2")), GrowthOrder::Incomparable);
        assert_eq!(compare(&p("V + E"), &p("V^2 + E^2")), GrowthOrder::LowerGrowth);
        assert_eq!(compare_single_scale(&p("V^2"), &p("E^3")), GrowthOrder::LowerGrowth);
    }

    #[test]
    fn zero_is_below_everything() {
        assert_eq!(compare(&p("0"), &p("1")), GrowthOrder::LowerGrowth);
        assert_eq!(compare(&p("0"), &p("0*n")), GrowthOrder::Equivalent);
        assert_eq!(compare(&p("3"), &p("1")), GrowthOrder::Equivalent);
    }
}
