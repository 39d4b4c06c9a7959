//! Parser for the textual notation of series and operators.
//!
//! ```text
//! expr  := term (('+' | '-') term)*      leading sign allowed
//! term  := coeff? '*'? var ('^' int)?  |  coeff  |  'O(' var ('^' int)? ')'
//! coeff := int ('/' int)?
//! var   := 't' | 'u'
//! ```
//!
//! Whitespace is ignored. An expression in `t` is a [`Series`] (inexact when
//! it carries an `O(t^k)` term); one in `u` is a [`DiffOp`].

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::semigroup::Characteristic;
use crate::series::{DiffOp, Series};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Series(Series),
    Op(DiffOp),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn at(&self) -> usize {
        self.offset + self.pos
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.at(), format!("expected '{}'", c as char))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(self.at(), "expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits"))
    }

    fn exponent(&mut self) -> Result<usize> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.at();
        let k = self.int()?;
        match usize::try_from(k) {
            Ok(k) if k <= 1 << 20 => Ok(k),
            _ => err(at, "exponent too large"),
        }
    }

    fn coeff(&mut self) -> Result<Option<Rational>> {
        if !matches!(self.peek(), Some(b'0'..=b'9')) {
            return Ok(None);
        }
        let num = self.int()?;
        if self.eat(b'/') {
            let at = self.at();
            let den = self.int()?;
            if den.is_zero() {
                return err(at, "zero denominator");
            }
            return Ok(Some(Rational::new(num, den)));
        }
        Ok(Some(Rational::from_integer(num)))
    }
}

#[derive(Default)]
struct Acc {
    terms: Vec<(usize, Rational)>,
    var: Option<u8>,
    big_o: Option<usize>,
}

impl Acc {
    fn set_var(&mut self, v: u8) -> Result<()> {
        match self.var {
            Some(w) if w != v => Err(Error::MixedVariables),
            _ => {
                self.var = Some(v);
                Ok(())
            }
        }
    }
}

fn parse_at(text: &str, offset: usize) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        offset,
    };
    let mut acc = Acc::default();
    if p.peek().is_none() {
        return err(p.at(), "empty expression");
    }
    let mut first = true;
    loop {
        let negative = if p.eat(b'-') {
            true
        } else if p.eat(b'+') || first {
            false
        } else {
            return err(p.at(), "expected '+' or '-'");
        };
        first = false;
        if p.peek() == Some(b'O') {
            let at = p.at();
            p.pos += 1;
            p.expect(b'(')?;
            let vat = p.at();
            match p.peek() {
                Some(b't') => p.pos += 1,
                Some(b'u') => return err(vat, "O(·) only applies to series in t"),
                _ => return err(vat, "expected 't'"),
            }
            acc.set_var(b't')?;
            let k = p.exponent()?;
            p.expect(b')')?;
            if k == 0 {
                return err(at, "O(t^0) leaves no known coefficient");
            }
            if acc.big_o.is_some() {
                return err(at, "more than one O(·) term");
            }
            acc.big_o = Some(k);
        } else {
            let at = p.at();
            let c = p.coeff()?;
            let star = p.eat(b'*');
            let vat = p.at();
            let var = match p.peek() {
                Some(v @ (b't' | b'u')) => {
                    p.pos += 1;
                    Some(v)
                }
                _ => None,
            };
            let (k, c) = match (var, c) {
                (Some(v), c) => {
                    acc.set_var(v)?;
                    (
                        p.exponent()?,
                        c.unwrap_or_else(|| Rational::from_integer(1.into())),
                    )
                }
                (None, Some(c)) if !star => (0, c),
                (None, Some(_)) => return err(vat, "expected 't' or 'u' after '*'"),
                (None, None) => return err(at, "expected a term"),
            };
            acc.terms.push((k, if negative { -c } else { c }));
        }
        if p.peek().is_none() {
            break;
        }
    }
    Ok(match (acc.var, acc.big_o) {
        (Some(b'u'), _) => Expr::Op(DiffOp::from_terms(acc.terms)),
        (_, Some(k)) => {
            let mut coeffs = vec![Rational::zero(); k];
            for (e, c) in acc.terms {
                if e < k {
                    coeffs[e] += c;
                }
            }
            Expr::Series(Series::truncated(coeffs))
        }
        _ => Expr::Series(Series::from_terms(acc.terms)),
    })
}

/// Parses one expression in `t` or `u`.
pub fn parse_expression(text: &str) -> Result<Expr> {
    parse_at(text, 0)
}

/// Parses a series in `t`. Constants are accepted.
pub fn parse_series(text: &str) -> Result<Series> {
    match parse_expression(text)? {
        Expr::Series(s) => Ok(s),
        Expr::Op(_) => err(0, "expected a series in t, found an operator in u"),
    }
}

/// Parses an operator in `u`. Constants are accepted.
pub fn parse_op(text: &str) -> Result<DiffOp> {
    match parse_expression(text)? {
        Expr::Op(g) => Ok(g),
        Expr::Series(s) if s.is_exact() && s.degree().unwrap_or(0) == 0 => {
            Ok(DiffOp::new(s.coeffs().to_vec()))
        }
        Expr::Series(_) => err(0, "expected an operator in u, found a series in t"),
    }
}

fn split_list(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        if ch == sep {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Comma-separated list of series.
pub fn parse_series_list(text: &str) -> Result<Vec<Series>> {
    split_list(text, ',')
        .into_iter()
        .map(|(off, part)| match parse_at(part, off)? {
            Expr::Series(s) => Ok(s),
            Expr::Op(_) => err(off, "expected a series in t"),
        })
        .collect()
}

/// Semicolon-separated list of operators. An empty or blank string is the
/// empty list.
pub fn parse_op_list(text: &str) -> Result<Vec<DiffOp>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_list(text, ';')
        .into_iter()
        .map(|(off, part)| match parse_at(part, off)? {
            Expr::Op(g) => Ok(g),
            Expr::Series(s) if s.is_exact() && s.degree().unwrap_or(0) == 0 => {
                Ok(DiffOp::new(s.coeffs().to_vec()))
            }
            Expr::Series(_) => err(off, "expected an operator in u"),
        })
        .collect()
}

fn parse_usize_list(text: &str, offset: usize) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_list(text, ',')
        .into_iter()
        .map(|(off, part)| {
            part.trim().parse::<usize>().or_else(|_| {
                err(
                    offset + off,
                    format!("expected a non-negative integer, found {part:?}"),
                )
            })
        })
        .collect()
}

/// Comma-separated positive integers, e.g. semigroup generators.
pub fn parse_exponents(text: &str) -> Result<Vec<usize>> {
    parse_usize_list(text, 0)
}

/// `"e0; b1, b2, …"`.
pub fn parse_characteristic(text: &str) -> Result<Characteristic> {
    let (head, tail, off) = match text.find(';') {
        Some(i) => (&text[..i], &text[i + 1..], i + 1),
        None => (text, "", text.len()),
    };
    let e0 = head
        .trim()
        .parse::<usize>()
        .or_else(|_| err(0, format!("expected e0, found {head:?}")))?;
    let betas = parse_usize_list(tail, off)?;
    Characteristic::new(e0, betas)
}
