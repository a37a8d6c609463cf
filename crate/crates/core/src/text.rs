//! Text form for polynomials, rational functions and operators.
//!
//! The grammar is explicit: `*` for products, `^` for powers, rationals as
//! `p/q`, variables by name (`x11, y1, r, a11, b1, c1, d, h` and the
//! differentials `dx11, dy1, dr`). The printed form of an operator is its
//! normally ordered expansion, so parsing a printed operator term by term
//! reconstructs it exactly.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::weyl::{Coef, Mode, WeylOperator};
use crate::vars::VarUniverse;

pub fn format_monomial(u: &VarUniverse, m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.iter()
        .map(|(v, e)| {
            if e == 1 {
                u.name(v).to_string()
            } else {
                format!("{}^{}", u.name(v), e)
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn format_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_term(u: &VarUniverse, m: &Monomial, c: &BigRational) -> String {
    if m.is_one() {
        format_coeff(c)
    } else if c.is_one() {
        format_monomial(u, m)
    } else if (-c.clone()).is_one() {
        format!("-{}", format_monomial(u, m))
    } else {
        format!("{} * {}", format_coeff(c), format_monomial(u, m))
    }
}

pub fn format_poly(u: &VarUniverse, p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(&Monomial, &BigRational)> = p.terms().collect();
    terms.sort_by(|a, b| b.0.cmp(a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&format_term(u, m, c));
        } else if c.is_negative() {
            out.push_str(" - ");
            out.push_str(&format_term(u, m, &-c.clone()));
        } else {
            out.push_str(" + ");
            out.push_str(&format_term(u, m, c));
        }
    }
    out
}

pub fn format_ratfun(u: &VarUniverse, f: &RationalFunction) -> String {
    if f.is_polynomial() {
        format_poly(u, f.num())
    } else {
        format!("({}) / ({})", format_poly(u, f.num()), format_poly(u, f.den()))
    }
}

fn coef_string(u: &VarUniverse, c: &Coef) -> (String, bool) {
    // (text, needs parentheses when juxtaposed with a monomial)
    match c {
        Coef::Poly(p) => (format_poly(u, p), p.num_terms() > 1),
        Coef::Rat(f) => {
            let s = format_ratfun(u, f);
            (s, f.num().num_terms() > 1 || !f.is_polynomial())
        }
    }
}

/// Operator text: a sum of `coef * dmonomial` terms, differential monomials
/// sorted descending by `order` (canonical order when `None`).
pub fn format_weyl(u: &VarUniverse, op: &WeylOperator, order: Option<&TermOrder>) -> String {
    if op.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(&Monomial, &Coef)> = op.terms().collect();
    terms.sort_by(|a, b| match order {
        Some(o) => o.compare(b.0, a.0),
        None => b.0.cmp(a.0),
    });
    let mut parts = Vec::new();
    for (m, c) in terms {
        let (cs, parens) = coef_string(u, c);
        let piece = if m.is_one() {
            if parens {
                format!("({cs})")
            } else {
                cs
            }
        } else if cs == "1" {
            format_monomial(u, m)
        } else if cs == "-1" {
            format!("-{}", format_monomial(u, m))
        } else if parens {
            format!("({}) * {}", cs, format_monomial(u, m))
        } else {
            format!("{} * {}", cs, format_monomial(u, m))
        };
        parts.push(piece);
    }
    let mut out = parts.join(" + ");
    while let Some(pos) = out.find("+ -") {
        out.replace_range(pos..pos + 3, "- ");
    }
    out
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(chars[start..i].iter().collect()));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Name(chars[start..i].iter().collect()));
            }
            _ => return Err(AlgebraError::Parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    u: &'a VarUniverse,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut negate = false;
        while matches!(self.peek(), Some(Tok::Minus) | Some(Tok::Plus)) {
            if matches!(self.next(), Some(Tok::Minus)) {
                negate = !negate;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.div(&f)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalFunction> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let e = match self.next() {
                Some(Tok::Num(s)) => s
                    .parse::<i32>()
                    .map_err(|_| AlgebraError::Parse(format!("bad exponent {s}")))?,
                other => return Err(AlgebraError::Parse(format!("expected exponent, got {other:?}"))),
            };
            return base.pow(e);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RationalFunction> {
        match self.next() {
            Some(Tok::Num(s)) => {
                let n: num_bigint::BigInt = s
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad number {s}")))?;
                Ok(RationalFunction::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Name(name)) => match self.u.lookup(&name) {
                Some(v) => Ok(RationalFunction::from_poly(Polynomial::var(v))),
                None => Err(AlgebraError::Parse(format!("unknown variable {name}"))),
            },
            Some(Tok::Minus) => Ok(self.base()?.neg()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    other => Err(AlgebraError::Parse(format!("expected ')', got {other:?}"))),
                }
            }
            other => Err(AlgebraError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_ratfun(u: &VarUniverse, s: &str) -> Result<RationalFunction> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0, u };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(AlgebraError::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(e)
}

pub fn parse_poly(u: &VarUniverse, s: &str) -> Result<Polynomial> {
    let f = parse_ratfun(u, s)?;
    if !f.is_polynomial() {
        return Err(AlgebraError::Parse("expected a polynomial, found a denominator".into()));
    }
    Ok(f.num().clone())
}

/// Parses a normally ordered operator: the expression is read commutatively
/// and each resulting monomial is split into its differential part (the term
/// key) and its function part (the coefficient).
pub fn parse_weyl(u: &VarUniverse, mode: Mode, s: &str) -> Result<WeylOperator> {
    let f = parse_ratfun(u, s)?;
    if mode != Mode::R && !f.is_polynomial() {
        return Err(AlgebraError::Parse(
            "denominators are only allowed in R-mode operators".into(),
        ));
    }
    let den = f.den().clone();
    let mut op = WeylOperator::zero(mode);
    for (m, c) in f.num().terms() {
        let (dpart, fun_part) = m.partition(|v| u.is_differential(v));
        let coef_poly = Polynomial::term(c.clone(), fun_part);
        let coef = match mode {
            Mode::R => Coef::Rat(RationalFunction::new(coef_poly, den.clone())?),
            _ => Coef::Poly(coef_poly),
        };
        op.add_term(&dpart, &coef);
    }
    Ok(op)
}

/// Convenience used pervasively in tests.
pub fn op(u: &VarUniverse, mode: Mode, s: &str) -> WeylOperator {
    parse_weyl(u, mode, s).expect("operator literal")
}

#[allow(dead_code)]
fn cmp_names(a: &str, b: &str) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let u = VarUniverse::full_slack_h(1);
        for s in [
            "x11^2 * y1 - 3/2 * r + 1",
            "2 * x22 - 2 * x11",
            "b1 * c1 * dy2",
            "h^3",
            "0",
        ] {
            let p = parse_poly(&u, s).unwrap();
            let printed = format_poly(&u, &p);
            let again = parse_poly(&u, &printed).unwrap();
            assert_eq!(p, again, "round trip failed for {s}: printed {printed}");
        }
    }

    #[test]
    fn ratfun_round_trip() {
        let u = VarUniverse::full(1);
        let f = parse_ratfun(&u, "(y1 + y2) / (2 * x11 - 2 * x22)").unwrap();
        let printed = format_ratfun(&u, &f);
        assert_eq!(parse_ratfun(&u, &printed).unwrap(), f);
    }

    #[test]
    fn operator_round_trip_and_normal_order_reading() {
        let u = VarUniverse::full(1);
        let b = op(&u, Mode::D, "dy1^2 + dy2^2 - r^2");
        assert_eq!(b.num_terms(), 3);
        let printed = format_weyl(&u, &b, None);
        assert_eq!(op(&u, Mode::D, &printed), b);

        let e = op(
            &u,
            Mode::R,
            "r * dr - 2 * x11 * dy1^2 - 2 * x12 * dy1 * dy2 - 2 * x22 * dy2^2 - y1 * dy1 - y2 * dy2 - 1",
        );
        let printed = format_weyl(&u, &e, None);
        assert_eq!(op(&u, Mode::R, &printed), e);
    }

    #[test]
    fn r_mode_operator_with_denominator() {
        let u = VarUniverse::full(1);
        let d = op(&u, Mode::R, "dy2^3 - r^2 * dy2 - (y2 * dy1^2 - y1 * dy1 * dy2 - dy2) / (2 * x22 - 2 * x11)");
        assert!(!d.is_zero());
        let printed = format_weyl(&u, &d, None);
        assert_eq!(op(&u, Mode::R, &printed), d);
    }

    #[test]
    fn parse_errors() {
        let u = VarUniverse::full(1);
        assert!(parse_poly(&u, "zz1").is_err());
        assert!(parse_poly(&u, "x11 +").is_err());
        assert!(parse_poly(&u, "1/(x11)").is_err()); // not a polynomial
        assert!(parse_ratfun(&u, "1/(x11)").is_ok());
    }
}
