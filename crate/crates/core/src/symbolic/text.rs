// Text grammar for expressions:
//
//   expr   := term ('+' term)*
//   term   := power (('*' | '/') power)*
//   power  := atom ('^' power)?
//   atom   := number | ident | ident '(' expr ')' | '(' expr ')'
//
// `a^b` with a constant exponent is a power; otherwise it is an exponential.
// `sqrt(x)` is read as `x^(1/2)`. Division is only allowed by constants.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{Rational, SymbolicExpr};
use crate::error::{Error, Result};

pub(super) fn render(expr: &SymbolicExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match expr {
        SymbolicExpr::Const(c) => render_rational(*c, f),
        SymbolicExpr::Var(v) => f.write_str(v),
        SymbolicExpr::Add(xs) => {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                render(x, f)?;
            }
            Ok(())
        }
        SymbolicExpr::Mul(xs) => {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str("*")?;
                }
                if matches!(x, SymbolicExpr::Add(_)) {
                    write!(f, "({x})")?;
                } else {
                    render(x, f)?;
                }
            }
            Ok(())
        }
        SymbolicExpr::Pow(b, q) => {
            render_operand(b, f)?;
            if q.is_integer() {
                write!(f, "^{}", q.to_integer())
            } else {
                write!(f, "^({}/{})", q.numer(), q.denom())
            }
        }
        SymbolicExpr::Exp(b, e) => {
            render_operand(b, f)?;
            f.write_str("^")?;
            render_operand(e, f)
        }
    }
}

fn is_atomic(expr: &SymbolicExpr) -> bool {
    match expr {
        SymbolicExpr::Var(_) => true,
        SymbolicExpr::Const(c) => c.is_integer() || terminating_decimal(*c).is_some(),
        _ => false,
    }
}

fn render_operand(expr: &SymbolicExpr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if is_atomic(expr) {
        render(expr, f)
    } else {
        write!(f, "({expr})")
    }
}

/// Integers print plainly, terminating fractions as decimals, anything else
/// as `(p/q)`.
pub(super) fn render_rational(r: Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.to_integer())
    } else if let Some(s) = terminating_decimal(r) {
        f.write_str(&s)
    } else {
        write!(f, "({}/{})", r.numer(), r.denom())
    }
}

fn terminating_decimal(r: Rational) -> Option<String> {
    if r < Rational::zero() {
        return None;
    }
    let mut den = *r.denom();
    let (mut twos, mut fives) = (0u32, 0u32);
    while den % 2 == 0 {
        den /= 2;
        twos += 1;
    }
    while den % 5 == 0 {
        den /= 5;
        fives += 1;
    }
    if den != 1 {
        return None;
    }
    let digits = twos.max(fives);
    let scale = 10i128.checked_pow(digits)?;
    let scaled = (r * Rational::from_integer(scale)).to_integer();
    let int_part = scaled / scale;
    let frac = scaled % scale;
    let mut frac_str = format!("{frac:0width$}", width = digits as usize);
    while frac_str.ends_with('0') {
        frac_str.pop();
    }
    if frac_str.is_empty() {
        Some(format!("{int_part}"))
    } else {
        Some(format!("{int_part}.{frac_str}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Rational),
    Ident(String),
    Plus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                tokens.push(Token::Num(parse_decimal(&text)?));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

fn parse_decimal(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("malformed number `{text}`"));
    let (int_part, frac_part) = match text.split_once('.') {
        Some((a, b)) if !b.is_empty() && !b.contains('.') => (a, b),
        Some(_) => return Err(bad()),
        None => (text, ""),
    };
    let int: i128 = int_part.parse().map_err(|_| bad())?;
    if frac_part.is_empty() {
        return Ok(Rational::from_integer(int));
    }
    let frac: i128 = frac_part.parse().map_err(|_| bad())?;
    let scale = 10i128.checked_pow(frac_part.len() as u32).ok_or_else(bad)?;
    Ok(Rational::new(int * scale + frac, scale))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

pub(super) fn parse(input: &str) -> Result<SymbolicExpr> {
    let mut parser = Parser { tokens: tokenize(input)?, pos: 0 };
    let expr = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in `{input}`")));
    }
    Ok(expr)
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SymbolicExpr> {
        let mut terms = alloc::vec![self.term()?];
        while self.eat(&Token::Plus) {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.remove(0) } else { SymbolicExpr::Add(terms) })
    }

    fn term(&mut self) -> Result<SymbolicExpr> {
        let mut factors = alloc::vec![self.power()?];
        loop {
            if self.eat(&Token::Star) {
                factors.push(self.power()?);
            } else if self.eat(&Token::Slash) {
                let divisor = self.power()?;
                let c = constant_value(&divisor)
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| Error::Parse("division by a non-constant or zero".into()))?;
                factors.push(SymbolicExpr::Const(c.recip()));
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 { factors.remove(0) } else { SymbolicExpr::Mul(factors) })
    }

    fn power(&mut self) -> Result<SymbolicExpr> {
        let base = self.atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        let exponent = self.power()?;
        if let Some(q) = constant_value(&exponent) {
            if q < Rational::zero() {
                return Err(Error::Parse("negative exponents are not supported".into()));
            }
            if let (Some(b), true) = (constant_value(&base), q.is_integer()) {
                let e =
                    u32::try_from(q.to_integer()).map_err(|_| Error::Parse("exponent too large".into()))?;
                let value =
                    super::poly::checked_pow(b, e).ok_or_else(|| Error::Parse("constant overflow".into()))?;
                return Ok(SymbolicExpr::Const(value));
            }
            return Ok(SymbolicExpr::Pow(Box::new(base), q));
        }
        if let Some(b) = constant_value(&base) {
            if b <= Rational::one() {
                return Err(Error::Parse("exponential base must exceed 1".into()));
            }
            return Ok(SymbolicExpr::exp(b, exponent));
        }
        Ok(SymbolicExpr::Exp(Box::new(base), Box::new(exponent)))
    }

    fn atom(&mut self) -> Result<SymbolicExpr> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(r)) => {
                self.pos += 1;
                Ok(SymbolicExpr::Const(r))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if self.eat(&Token::LParen) {
                    let inner = self.expr()?;
                    if !self.eat(&Token::RParen) {
                        return Err(Error::Parse("missing `)`".into()));
                    }
                    return match name.as_str() {
                        "sqrt" => Ok(SymbolicExpr::pow(inner, Rational::new(1, 2))),
                        other => Err(Error::Parse(format!("unknown function `{other}`"))),
                    };
                }
                Ok(SymbolicExpr::Var(name.to_string()))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}

fn constant_value(expr: &SymbolicExpr) -> Option<Rational> {
    if !expr.variables().is_empty() {
        return None;
    }
    expr.to_polynomial()?.as_constant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(s: &str) -> String {
        format!("{}", parse(s).unwrap().canonical())
    }

    #[test]
    fn renders_the_documented_forms() {
        assert_eq!(roundtrip("V^2 + 3*E"), "V^2 + 3*E");
        assert_eq!(roundtrip("1.1996^V"), "1.1996^V");
        assert_eq!(roundtrip("sqrt(V)"), "V^(1/2)");
        assert_eq!(roundtrip("2^(n + m)"), "2^(m + n)");
        assert_eq!(roundtrip("k^V"), "k^V");
    }

    #[test]
    fn decimal_bases_are_exact() {
        match parse("1.1996^V").unwrap() {
            SymbolicExpr::Exp(b, _) => {
                assert_eq!(*b, SymbolicExpr::Const(Rational::new(11996, 10000)))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rendering_parses_back() {
        for s in ["V^2 + 3*E", "1.1996^V", "V^(1/2)", "(1/3)*V + 0.5*E", "2^(V*E) + V^3"] {
            let e = parse(s).unwrap().canonical();
            let again = parse(&format!("{e}")).unwrap().canonical();
            assert_eq!(e, again, "{s}");
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("V +").is_err());
        assert!(parse("V / E").is_err());
        assert!(parse("1^V").is_err());
        assert!(parse("(V").is_err());
        assert!(parse("V $ E").is_err());
    }
}
