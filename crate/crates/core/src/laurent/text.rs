use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{ExponentVector, LaurentPoly};
use crate::error::{Error, Result};

/// Variable names for reading and printing polynomials.
///
/// Terms print in descending lexicographic order (highest powers of the first
/// variable first), e.g. `-t^4+t^3+t` or `-t^(5/2)-t^(1/2)`. Half-integer and
/// negative exponents are parenthesised.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vars(Vec<String>);

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self(names.into_iter().map(Into::into).collect())
    }

    /// The Jones variable `t`.
    pub fn t() -> Self {
        Self::new(["t"])
    }

    /// The Kauffman bracket variable `A`.
    pub fn a() -> Self {
        Self::new(["A"])
    }

    /// The Chebyshev argument `x`.
    pub fn x() -> Self {
        Self::new(["x"])
    }

    /// Cluster variables `x1, ..., xn`.
    pub fn cluster(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub(crate) fn default_for(arity: usize) -> Self {
        if arity == 1 {
            Self::t()
        } else {
            Self::cluster(arity)
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn format(&self, p: &LaurentPoly) -> String {
        assert_eq!(p.arity(), self.len(), "variable names do not match arity");
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in p.terms().rev().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mono = self.format_monomial(e);
            let abs = c.abs();
            if mono.is_empty() {
                write!(out, "{abs}").unwrap();
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                write!(out, "{abs}*{mono}").unwrap();
            }
        }
        out
    }

    /// Monomial `x^e` without coefficient; empty for the constant monomial.
    pub fn format_monomial(&self, e: &ExponentVector) -> String {
        let mut parts = Vec::new();
        for (name, &h) in self.0.iter().zip(e.half_units()) {
            match h {
                0 => {}
                2 => parts.push(name.clone()),
                h if h % 2 == 0 && h > 0 => parts.push(format!("{name}^{}", h / 2)),
                h if h % 2 == 0 => parts.push(format!("{name}^({})", h / 2)),
                h => parts.push(format!("{name}^({h}/2)")),
            }
        }
        parts.join("*")
    }

    /// Prints `p` as `numerator/monomial`, e.g. `(x2^2+1)/x1`.
    pub fn format_fraction(&self, p: &LaurentPoly) -> String {
        let (num, den) = p.as_fraction();
        let den_s = self.format_monomial(&den);
        let num_s = self.format(&num);
        if den_s.is_empty() {
            return num_s;
        }
        let num_s = if num.num_terms() > 1 { format!("({num_s})") } else { num_s };
        if den.half_units().iter().filter(|&&h| h != 0).count() > 1 || den_s.contains('^') {
            format!("{num_s}/({den_s})")
        } else {
            format!("{num_s}/{den_s}")
        }
    }

    /// Parses a sum of signed terms such as `-t^4+t^3+t`, `t^(1/2)`,
    /// `2*x1^2*x2^-1`, `3x1x2` or `x1^2+(x2^2+1)^2`.
    pub fn parse(&self, text: &str) -> Result<LaurentPoly> {
        let mut p = Parser { vars: self, s: text.as_bytes(), pos: 0 };
        let out = p.poly()?;
        if p.peek().is_some() {
            return p.err("unbalanced ')'");
        }
        Ok(out)
    }
}

struct Parser<'a> {
    vars: &'a Vars,
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.vars.len());
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None | Some(b')') if first => return self.err("empty polynomial"),
                None | Some(b')') => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected '+' or '-', found '{}'", c as char)),
            };
            first = false;
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    /// Optional coefficient followed by variables with exponents and
    /// parenthesised groups with integer exponents.
    fn term(&mut self) -> Result<LaurentPoly> {
        let arity = self.vars.len();
        let mut coef = BigInt::one();
        let mut exps = vec![0i64; arity];
        let mut groups = LaurentPoly::one(arity);
        let mut any = false;
        if let Some(n) = self.unsigned()? {
            coef = n;
            any = true;
            if self.eat(b'*') && self.peek_var().is_none() && self.peek() != Some(b'(') {
                return self.err("expected a factor after '*'");
            }
        }
        loop {
            if self.eat(b'(') {
                let inner = self.poly()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                let k = if self.eat(b'^') { self.small_int()? } else { 1 };
                groups = &groups * &inner.pow_signed(k)?;
            } else if let Some(i) = self.var_name() {
                exps[i] += if self.eat(b'^') { self.exponent()? } else { 2 };
            } else {
                break;
            }
            any = true;
            if !self.eat(b'*') && self.peek_var().is_none() && self.peek() != Some(b'(') {
                break;
            }
        }
        if !any {
            return self.err("expected a coefficient or a variable");
        }
        Ok(&LaurentPoly::monomial(coef, ExponentVector::from_half_units(exps)) * &groups)
    }

    fn unsigned(&mut self) -> Result<Option<BigInt>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        Ok(Some(digits.parse().expect("digits")))
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        match self.unsigned()? {
            Some(n) => {
                let v: i64 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                Ok(if neg { -v } else { v })
            }
            None => self.err("expected an integer exponent"),
        }
    }

    /// Exponent in half-units.
    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let n = self.small_int()?;
            let h = if self.eat(b'/') {
                match self.small_int()? {
                    1 => 2 * n,
                    2 => n,
                    _ => return self.err("only halves are allowed as fractional exponents"),
                }
            } else {
                2 * n
            };
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            Ok(h)
        } else {
            Ok(2 * self.small_int()?)
        }
    }

    fn peek_var(&mut self) -> Option<(usize, usize)> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        // longest name wins so that x10 is not read as x1 followed by 0
        self.vars
            .0
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .max_by_key(|(_, n)| n.len())
            .map(|(i, n)| (i, n.len()))
    }

    fn var_name(&mut self) -> Option<usize> {
        let (i, len) = self.peek_var()?;
        self.pos += len;
        Some(i)
    }
}
