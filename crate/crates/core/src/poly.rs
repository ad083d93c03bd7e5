//! Sparse multivariate polynomials with exact rational coefficients, plus the
//! polynomial parser and the canonical text form used in all reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

/// Exact rational scalar. `num`'s `BigRational` keeps values in lowest terms
/// with a positive denominator, which is exactly the invariant we need.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial ring: an ordered list of variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Self {
        Ring {
            vars: vars.into_iter().map(Into::into).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Ring with one extra variable appended at the end.
    pub fn extended(&self, name: &str) -> Ring {
        let mut vars = self.vars.clone();
        vars.push(name.to_string());
        Ring { vars }
    }

    /// Ring with the variable at `idx` removed.
    pub fn without(&self, idx: usize) -> Ring {
        let mut vars = self.vars.clone();
        vars.remove(idx);
        Ring { vars }
    }
}

/// Sparse polynomial: a finite map from monomials to nonzero rational
/// coefficients. The map key order is structural (deterministic storage);
/// leading terms are found by scanning under the active monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::term(Monomial::one(nvars), Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Poly::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::term(Monomial::var(nvars, i), Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Maximum total degree over all terms; zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &(-c));
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// `self - c * m * other`, the basic reduction step.
    pub fn sub_scaled(&self, c: &Rat, m: &Monomial, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, kc) in &other.terms {
            out.add_term(k.mul(m), &(-(kc * c)));
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                let mut exps = m.exps().to_vec();
                exps[var] = e - 1;
                out.add_term(Monomial::new(exps), &(c * rat_int(e as i64)));
            }
        }
        out
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Ecart with respect to a local order: total degree minus the degree of
    /// the leading monomial.
    pub fn ecart(&self, order: &MonomialOrder) -> u32 {
        match self.leading_monomial(order) {
            Some(lm) => self.total_degree() - lm.degree(),
            None => 0,
        }
    }

    /// Divides every coefficient by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            Some((_, lc)) => {
                let inv = Rat::one() / lc;
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Clears denominators and divides by the integer content, normalizing the
    /// sign so the leading coefficient under `order` is positive. Generates the
    /// same ideal; keeps coefficients small during basis computations.
    pub fn primitive(&self, order: &MonomialOrder) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            let n = (c * Rat::from_integer(den_lcm.clone())).to_integer();
            content = content.gcd(&n);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let factor = Rat::new(den_lcm, content);
        let out = self.scale(&factor);
        if out.leading_term(order).map(|(_, c)| c.is_negative()) == Some(true) {
            out.neg()
        } else {
            out
        }
    }

    /// Substitutes a rational value for variable `var`; the result still lives
    /// in the same ring (with that variable unused).
    pub fn substitute(&self, var: usize, value: &Rat) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut exps = m.exps().to_vec();
            exps[var] = 0;
            let mut factor = Rat::one();
            for _ in 0..e {
                factor *= value;
            }
            out.add_term(Monomial::new(exps), &(c * factor));
        }
        out
    }

    /// Whether variable `var` appears in any term.
    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// Re-expresses the polynomial in a ring with `new_nvars` variables, where
    /// old variable `i` becomes variable `map[i]`. Panics if a dropped
    /// variable (map entry `None`) actually occurs.
    pub fn map_vars(&self, new_nvars: usize, map: &[Option<usize>]) -> Poly {
        let mut out = Poly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_nvars];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let j = map[i].expect("dropped variable occurs in polynomial");
                    exps[j] += e;
                }
            }
            out.add_term(Monomial::new(exps), c);
        }
        out
    }

    /// Exact division by a single polynomial under a global order; returns
    /// `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly, order: &MonomialOrder) -> Option<Poly> {
        let (dlm, dlc) = divisor.leading_term(order)?;
        let dlm = dlm.clone();
        let dlc = dlc.clone();
        let mut h = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((hm, hc)) = h.leading_term(order) {
            if !dlm.divides(hm) {
                return None;
            }
            let m = dlm.quotient_into(hm);
            let c = hc / &dlc;
            q.add_term(m.clone(), &c);
            h = h.sub_scaled(&c, &m, divisor);
        }
        Some(q)
    }

    /// Canonical text form: terms sorted degrevlex descending, `^` powers,
    /// `*` products, coefficients as `a` or `a/b`.
    pub fn display(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let order = MonomialOrder::DegRevLex;
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    parts.push(ring.vars()[v].clone());
                } else if e > 1 {
                    parts.push(format!("{}^{}", ring.vars()[v], e));
                }
            }
            let _ = write!(out, "{}", parts.join("*"));
        }
        out
    }
}

/// Parses a polynomial over the given ring. Accepted grammar: integer and
/// rational literals, variable names, `+ - * ^` and parentheses.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::parse(1, format!("unexpected token in '{text}'")));
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
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
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().unwrap()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::parse(1, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    // only numeric denominators: a/b
                    self.next();
                    match self.next() {
                        Some(Tok::Num(d)) => {
                            if d.is_zero() {
                                return Err(Error::parse(1, "division by zero"));
                            }
                            acc = acc.scale(&Rat::new(BigInt::one(), d));
                        }
                        _ => return Err(Error::parse(1, "expected integer denominator")),
                    }
                }
                // implicit multiplication like "2x" or "x y" is not accepted
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.next();
                true
            } else {
                false
            };
            match self.next() {
                Some(Tok::Num(n)) => {
                    if neg {
                        return Err(Error::parse(1, "negative exponent"));
                    }
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| Error::parse(1, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::parse(1, "expected exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Poly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Poly::constant(
                self.ring.nvars(),
                Rat::from_integer(n),
            )),
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Poly::var(self.ring.nvars(), i)),
                None => Err(Error::parse(1, format!("unknown variable '{name}'"))),
            },
            Some(Tok::Minus) => Ok(self.factor()?.neg()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::parse(1, "expected ')'")),
                }
            }
            other => Err(Error::parse(1, format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_xyz() -> Ring {
        Ring::new(vec!["x", "y", "z"])
    }

    #[test]
    fn parse_single_monomial() {
        let r = ring_xyz();
        let p = parse_poly("x*y", &r).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&Monomial::new(vec![1, 1, 0])), Rat::one());
    }

    #[test]
    fn parse_345_equation() {
        let r = ring_xyz();
        let p = parse_poly("x^2*y - z^2", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&Monomial::new(vec![2, 1, 0])), Rat::one());
        assert_eq!(p.coeff(&Monomial::new(vec![0, 0, 2])), -Rat::one());
    }

    #[test]
    fn parse_cusp() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse_poly("y^2 - x^3", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn parse_errors() {
        let r = ring_xyz();
        assert!(parse_poly("x + w", &r).is_err());
        assert!(parse_poly("x^-2", &r).is_err());
        assert!(parse_poly("x + ", &r).is_err());
    }

    #[test]
    fn derivative_power_rule() {
        let r = ring_xyz();
        let p = parse_poly("x^2*y", &r).unwrap();
        let expect = parse_poly("2*x*y", &r).unwrap();
        assert_eq!(p.derivative(0), expect);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let r = ring_xyz();
        let p = parse_poly("7", &r).unwrap();
        assert!(p.derivative(0).is_zero());
    }

    #[test]
    fn derivative_345_z_entry() {
        let r = ring_xyz();
        let p = parse_poly("x^2*y - z^2", &r).unwrap();
        let expect = parse_poly("-2*z", &r).unwrap();
        assert_eq!(p.derivative(2), expect);
    }

    #[test]
    fn display_canonical() {
        let r = ring_xyz();
        let p = parse_poly("-2*z^2 + x^2*y", &r).unwrap();
        assert_eq!(p.display(&r), "x^2*y - 2*z^2");
        let q = parse_poly("1/2*x - 3", &r).unwrap();
        assert_eq!(q.display(&r), "1/2*x - 3");
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = ring_xyz();
        for s in ["x^2*y - 2*z^2", "x - y", "3*x*y*z + 1/3", "0"] {
            let p = parse_poly(s, &r).unwrap();
            let reparsed = parse_poly(&p.display(&r), &r).unwrap();
            assert_eq!(p, reparsed);
        }
    }

    #[test]
    fn exact_division() {
        let r = ring_xyz();
        let a = parse_poly("x^2*y - x*y^2", &r).unwrap();
        let b = parse_poly("x - y", &r).unwrap();
        let q = a.exact_div(&b, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(q, parse_poly("x*y", &r).unwrap());
        let c = parse_poly("x^2 + 1", &r).unwrap();
        assert!(c.exact_div(&b, &MonomialOrder::DegRevLex).is_none());
    }
}
