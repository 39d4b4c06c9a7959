//! Truncated power series in `t` and differential operators in `u`.
//!
//! A [`Series`] is an element of `k[[t]]` known modulo `t^(trunc+1)`, or an
//! exact polynomial. A [`DiffOp`] is a polynomial `g(u)` acting on series by
//! `g ∘ f = g(d/dt) f`; the pairing `g ⊥ f` is the constant term of `g ∘ f`.

use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

static ZERO: LazyLock<Rational> = LazyLock::new(Rational::zero);
static FACTORIALS: LazyLock<RwLock<Vec<BigInt>>> =
    LazyLock::new(|| RwLock::new(vec![BigInt::one()]));

/// `n!`, memoized.
pub fn factorial(n: usize) -> BigInt {
    if let Some(f) = FACTORIALS.read().unwrap().get(n) {
        return f.clone();
    }
    let mut memo = FACTORIALS.write().unwrap();
    while memo.len() <= n {
        let k = memo.len();
        let next = &memo[k - 1] * BigInt::from(k);
        memo.push(next);
    }
    memo[n].clone()
}

pub(crate) fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Truncated power series over the rationals.
///
/// Inexact series carry `trunc + 1` known coefficients. Exact series are
/// polynomials: every coefficient past `trunc` is zero.
#[derive(Clone)]
pub struct Series {
    coeffs: Vec<Rational>,
    trunc: usize,
    exact: bool,
}

impl Series {
    /// The series `Σ coeffs[i] t^i + O(t^len)`.
    pub fn truncated(mut coeffs: Vec<Rational>) -> Series {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        let trunc = coeffs.len() - 1;
        Series {
            coeffs,
            trunc,
            exact: false,
        }
    }

    /// Known modulo `t^(trunc+1)`; missing coefficients are zero, extra ones dropped.
    pub fn with_trunc(mut coeffs: Vec<Rational>, trunc: usize) -> Series {
        coeffs.resize(trunc + 1, Rational::zero());
        Series {
            coeffs,
            trunc,
            exact: false,
        }
    }

    /// An exact polynomial.
    pub fn polynomial(mut coeffs: Vec<Rational>) -> Series {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        let trunc = coeffs.len() - 1;
        Series {
            coeffs,
            trunc,
            exact: true,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Series {
        let mut coeffs = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Series::polynomial(coeffs)
    }

    /// `c t^k`, exact.
    pub fn monomial(c: Rational, k: usize) -> Series {
        Series::from_terms([(k, c)])
    }

    /// `t^k`, exact.
    pub fn t_pow(k: usize) -> Series {
        Series::monomial(Rational::one(), k)
    }

    pub fn one() -> Series {
        Series::t_pow(0)
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Highest stored exponent. For inexact series this is the precision.
    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// `None` for exact polynomials.
    pub fn precision(&self) -> Option<usize> {
        (!self.exact).then_some(self.trunc)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, or `None` when it is not known.
    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        match self.coeffs.get(i) {
            Some(c) => Some(c),
            None if self.exact => Some(&ZERO),
            None => None,
        }
    }

    pub fn knows(&self, i: usize) -> bool {
        self.exact || i <= self.trunc
    }

    /// Coefficients of `t^0 ..= t^n`.
    pub fn dense(&self, n: usize) -> Result<Vec<Rational>> {
        if !self.knows(n) {
            return Err(Error::InsufficientPrecision {
                needed: n,
                available: self.trunc,
            });
        }
        let mut v: Vec<Rational> = self.coeffs.iter().take(n + 1).cloned().collect();
        v.resize(n + 1, Rational::zero());
        Ok(v)
    }

    /// Exact degree of a polynomial (`None` for zero or inexact series).
    pub fn degree(&self) -> Option<usize> {
        if !self.exact {
            return None;
        }
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// `t`-adic order; `None` means zero modulo the known precision.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.order().is_none()
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    fn combined_precision(&self, other: &Series) -> Option<usize> {
        match (self.precision(), other.precision()) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some(a.min(b)),
        }
    }

    fn build(coeffs: Vec<Rational>, precision: Option<usize>) -> Series {
        match precision {
            None => Series::polynomial(coeffs),
            Some(n) => Series::with_trunc(coeffs, n),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let p = self.combined_precision(other);
        let n = p.unwrap_or(self.trunc.max(other.trunc));
        let mut c = vec![Rational::zero(); n + 1];
        for (i, x) in c.iter_mut().enumerate() {
            if let Some(a) = self.coeffs.get(i) {
                *x += a;
            }
            if let Some(b) = other.coeffs.get(i) {
                *x += b;
            }
        }
        Series::build(c, p)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Series::build(coeffs, self.precision())
    }

    /// Product; the result is known to the smaller of the two precisions.
    pub fn mul(&self, other: &Series) -> Series {
        let p = self.combined_precision(other);
        let n = p.unwrap_or(self.trunc + other.trunc);
        Series::build(mul_trunc(&self.coeffs, &other.coeffs, n), p)
    }

    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `[f]_{≤s}`: the polynomial obtained by dropping every term above `t^s`.
    pub fn truncate(&self, s: usize) -> Result<Series> {
        let dense = self.dense(s)?;
        Ok(Series {
            coeffs: dense,
            trunc: s,
            exact: true,
        })
    }

    /// Forgets everything above `t^s`, keeping an inexact series.
    pub fn to_precision(&self, s: usize) -> Result<Series> {
        Ok(Series::with_trunc(self.dense(s)?, s))
    }

    /// `f(h)` for `h` with zero constant term, by Horner's rule.
    pub fn compose(&self, h: &Series) -> Result<Series> {
        if !h.constant_term().is_zero() {
            return Err(Error::NonzeroConstantSubstitution);
        }
        let p = self.combined_precision(h);
        let n = p.unwrap_or_else(|| self.trunc * h.trunc.max(1));
        let top = self.trunc.min(n);
        let h_dense = dense_to(&h.coeffs, n);
        let mut acc = vec![Rational::zero(); n + 1];
        for i in (0..=top).rev() {
            acc = mul_trunc(&acc, &h_dense, n);
            acc[0] += &self.coeffs[i];
        }
        Ok(Series::build(acc, p))
    }

    /// `q` with `q · v = f`, for a unit `v`. Exact inputs are expanded to `t^cap`.
    pub fn divide_by_unit(&self, v: &Series, cap: usize) -> Result<Series> {
        if v.constant_term().is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let n = self.combined_precision(v).map_or(cap, |p| p.min(cap));
        let f = dense_to(&self.coeffs, n);
        let v = dense_to(&v.coeffs, n);
        let inv0 = v[0].recip();
        let mut q = vec![Rational::zero(); n + 1];
        for k in 0..=n {
            let mut acc = f[k].clone();
            for j in 1..=k {
                if !v[j].is_zero() && !q[k - j].is_zero() {
                    acc -= &v[j] * &q[k - j];
                }
            }
            q[k] = acc * &inv0;
        }
        Ok(Series::with_trunc(q, n))
    }

    /// Compositional inverse of a uniformizer, modulo `t^(n+1)`.
    pub fn reversion(&self, n: usize) -> Result<Series> {
        if self.order() != Some(1) {
            return Err(Error::NotUniformizer {
                order: self.order(),
            });
        }
        let n = self.precision().map_or(n, |p| p.min(n));
        let h = Series::with_trunc(dense_to(&self.coeffs, n), n);
        let mut r = vec![Rational::zero(); n + 1];
        if n >= 1 {
            r[1] = h.coeffs[1].recip();
        }
        for k in 2..=n {
            let cur = h.compose(&Series::with_trunc(r.clone(), n))?;
            let err = cur.coeffs[k].clone();
            r[k] = -err * &r[1];
        }
        Ok(Series::with_trunc(r, n))
    }

    /// Equality of the first `n + 1` coefficients.
    pub fn eq_up_to(&self, other: &Series, n: usize) -> bool {
        (0..=n).all(|i| match (self.coeff(i), other.coeff(i)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }
}

impl PartialEq for Series {
    fn eq(&self, other: &Series) -> bool {
        if self.exact != other.exact {
            return false;
        }
        if self.exact {
            let n = self.trunc.max(other.trunc);
            return self.eq_up_to(other, n);
        }
        self.trunc == other.trunc && self.coeffs == other.coeffs
    }
}

impl Eq for Series {}

/// Product of two coefficient vectors, dropping everything above `t^n`.
pub(crate) fn mul_trunc(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn dense_to(c: &[Rational], n: usize) -> Vec<Rational> {
    let mut v: Vec<Rational> = c.iter().take(n + 1).cloned().collect();
    v.resize(n + 1, Rational::zero());
    v
}

/// Exact polynomial in `u`, acting on series by differentiation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiffOp {
    coeffs: Vec<Rational>,
}

impl DiffOp {
    pub fn new(mut coeffs: Vec<Rational>) -> DiffOp {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> DiffOp {
        let mut coeffs = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        DiffOp::new(coeffs)
    }

    pub fn zero() -> DiffOp {
        DiffOp::default()
    }

    /// `u^k`.
    pub fn monomial(k: usize) -> DiffOp {
        DiffOp::from_terms([(k, Rational::one())])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        self.coeffs.get(i).unwrap_or(&ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(other.coeffs.len());
        DiffOp::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficient vector of length `n`, padded with zeros.
    pub fn dense(&self, n: usize) -> Vec<Rational> {
        (0..n).map(|i| self.coeff(i).clone()).collect()
    }

    fn check_precision(&self, f: &Series) -> Result<usize> {
        let d = self.degree().unwrap_or(0);
        if !f.knows(d) {
            return Err(Error::InsufficientPrecision {
                needed: d,
                available: f.trunc(),
            });
        }
        Ok(d)
    }

    /// `g ∘ f = Σ g_i · d^i f / dt^i`.
    pub fn apply(&self, f: &Series) -> Result<Series> {
        let d = self.check_precision(f)?;
        let len = if f.is_exact() {
            f.trunc().saturating_sub(d) + 1
        } else {
            f.trunc() - d + 1
        };
        let mut out = vec![Rational::zero(); len];
        for (i, gi) in self.coeffs.iter().enumerate() {
            if gi.is_zero() {
                continue;
            }
            // d^i t^(k+i) = (k+i)!/k! t^k
            for (k, o) in out.iter_mut().enumerate() {
                let Some(c) = f.coeff(k + i) else { break };
                if c.is_zero() {
                    continue;
                }
                let falling = Rational::from_integer(factorial(k + i) / factorial(k));
                *o += gi * c * falling;
            }
        }
        Ok(if f.is_exact() {
            Series::polynomial(out)
        } else {
            Series::truncated(out)
        })
    }

    /// `g ⊥ f = (g ∘ f)(0) = Σ g_i · i! · f_i`.
    pub fn perp(&self, f: &Series) -> Result<Rational> {
        self.check_precision(f)?;
        let mut acc = Rational::zero();
        for (i, gi) in self.coeffs.iter().enumerate() {
            let fi = f.coeff(i).expect("precision checked");
            if !gi.is_zero() && !fi.is_zero() {
                acc += gi * fi * factorial_q(i);
            }
        }
        Ok(acc)
    }

    /// Pairing against a dense coefficient vector (`v[i]` is the coefficient of `t^i`).
    pub(crate) fn perp_dense(&self, v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, gi) in self.coeffs.iter().enumerate() {
            match v.get(i) {
                Some(fi) if !gi.is_zero() && !fi.is_zero() => acc += gi * fi * factorial_q(i),
                _ => {}
            }
        }
        acc
    }

    /// The series `Σ g_i t^i` with the same coefficients.
    pub fn mirror(&self) -> Series {
        Series::polynomial(self.coeffs.clone())
    }

    /// The operator `Σ f_i u^i` with the coefficients of a polynomial.
    pub fn from_mirror(f: &Series) -> DiffOp {
        DiffOp::new(f.coeffs().to_vec())
    }
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, var: char, terms: I) -> fmt::Result
where
    I: Iterator<Item = (usize, &'a Rational)>,
{
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = a.is_one();
        match k {
            0 => write!(f, "{a}")?,
            _ => {
                if !unit {
                    write!(f, "{a} ")?;
                }
                if k == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero = self.coeffs.iter().any(|c| !c.is_zero());
        if nonzero || self.exact {
            write_terms(f, 't', self.coeffs.iter().enumerate())?;
        }
        if !self.exact {
            if nonzero {
                write!(f, " + ")?;
            }
            write!(f, "O(t^{})", self.trunc + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, 'u', self.coeffs.iter().enumerate())
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn poly(terms: &[(usize, i64)]) -> Series {
        Series::from_terms(terms.iter().map(|&(k, c)| (k, q(c, 1))))
    }

    fn op(terms: &[(usize, Rational)]) -> DiffOp {
        DiffOp::from_terms(terms.iter().cloned())
    }

    #[test]
    fn order_cases() {
        let f = poly(&[(3, 1), (4, 1)]).to_precision(10).unwrap();
        assert_eq!(f.order(), Some(3));
        assert_eq!(Series::with_trunc(vec![], 5).order(), None);
        let g = Series::from_terms([(2, q(7, 2)), (2, q(-7, 2)), (9, q(1, 1))])
            .to_precision(9)
            .unwrap();
        assert_eq!(g.order(), Some(9));
    }

    #[test]
    fn mul_cases() {
        let f = poly(&[(3, 1), (4, 1)]);
        assert_eq!(f.mul(&f), poly(&[(6, 1), (7, 2), (8, 1)]));
        assert_eq!(f.mul(&Series::one()), f);
        let a = poly(&[(1, 1), (2, 1)]);
        let b = poly(&[(1, 1), (2, -1)]);
        assert_eq!(a.mul(&b), poly(&[(2, 1), (4, -1)]));
        // truncation follows the less precise factor
        let ft = f.to_precision(7).unwrap();
        let sq = ft.mul(&ft);
        assert_eq!(sq.precision(), Some(7));
        assert_eq!(sq.truncate(7).unwrap(), poly(&[(6, 1), (7, 2)]));
    }

    #[test]
    fn compose_cases() {
        // t^2 with h = t + 5 t^2
        let h = poly(&[(1, 1), (2, 5)]);
        assert_eq!(
            poly(&[(2, 1)]).compose(&h).unwrap(),
            poly(&[(2, 1), (3, 10), (4, 25)])
        );
        let f = poly(&[(0, 2), (3, 1), (5, -4)]);
        assert_eq!(f.compose(&Series::t_pow(1)).unwrap(), f);
        assert_eq!(
            poly(&[(3, 1)]).compose(&poly(&[(1, 2)])).unwrap(),
            poly(&[(3, 8)])
        );
        assert!(matches!(
            f.compose(&poly(&[(0, 1), (1, 1)])),
            Err(Error::NonzeroConstantSubstitution)
        ));
    }

    #[test]
    fn divide_by_unit_cases() {
        let v = poly(&[(0, 1), (1, 1)]);
        let q1 = Series::one().divide_by_unit(&v, 6).unwrap();
        let expect: Vec<Rational> = (0..=6)
            .map(|i| q(if i % 2 == 0 { 1 } else { -1 }, 1))
            .collect();
        assert_eq!(q1, Series::with_trunc(expect, 6));
        assert!(v.divide_by_unit(&v, 6).unwrap().eq_up_to(&Series::one(), 6));
        let f = poly(&[(2, 1), (3, 1)]);
        let r = f.divide_by_unit(&v, 8).unwrap();
        assert!(r.eq_up_to(&Series::t_pow(2), 8));
        assert!(matches!(
            f.divide_by_unit(&poly(&[(1, 1)]), 4),
            Err(Error::NonUnitDivisor)
        ));
    }

    #[test]
    fn truncate_cases() {
        let f = poly(&[(6, 1), (7, 2), (8, 1)]);
        let t7 = f.truncate(7).unwrap();
        assert_eq!(t7.trunc(), 7);
        assert!(t7.eq_up_to(&poly(&[(6, 1), (7, 2)]), 20));
        let g = f.to_precision(8).unwrap();
        assert_eq!(g.truncate(8).unwrap().coeffs(), g.coeffs());
        assert!(poly(&[(5, 1)]).truncate(4).unwrap().is_zero());
        assert!(matches!(
            g.truncate(9),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn apply_cases() {
        let u = DiffOp::monomial(1);
        assert_eq!(u.apply(&poly(&[(2, 1)])).unwrap(), poly(&[(1, 2)]));
        assert_eq!(
            DiffOp::monomial(2).apply(&poly(&[(3, 1)])).unwrap(),
            poly(&[(1, 6)])
        );
        assert_eq!(
            DiffOp::monomial(3).apply(&poly(&[(3, 1), (4, 1)])).unwrap(),
            poly(&[(0, 6), (1, 24)])
        );
        let f = poly(&[(3, 1)]).to_precision(4).unwrap();
        assert_eq!(DiffOp::monomial(2).apply(&f).unwrap().precision(), Some(2));
        assert!(DiffOp::monomial(5).apply(&f).is_err());
    }

    #[test]
    fn perp_cases() {
        assert_eq!(
            DiffOp::monomial(11).perp(&Series::t_pow(11)).unwrap(),
            q(39916800, 1)
        );
        for i in 0..8 {
            for j in 0..8 {
                let g = DiffOp::monomial(i).scale(&factorial_q(i).recip());
                let expect = if i == j { q(1, 1) } else { q(0, 1) };
                assert_eq!(g.perp(&Series::t_pow(j)).unwrap(), expect);
            }
        }
        let g = op(&[(3, q(1, 1)), (4, q(-1, 4))]);
        assert_eq!(g.perp(&poly(&[(3, 1), (4, 1)])).unwrap(), q(0, 1));
    }

    #[test]
    fn perp_of_monomials_up_to_twenty() {
        for i in 0..=20 {
            for j in 0..=20 {
                let v = DiffOp::monomial(i).perp(&Series::t_pow(j)).unwrap();
                if i == j {
                    assert_eq!(v, factorial_q(i));
                } else {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn reversion_inverts() {
        let h = poly(&[(1, 1), (2, 1), (4, -3)]);
        let r = h.reversion(9).unwrap();
        let id = h.compose(&r).unwrap();
        assert!(id.eq_up_to(&Series::t_pow(1), 9));
        assert!(r.compose(&h).unwrap().eq_up_to(&Series::t_pow(1), 9));
    }

    #[test]
    fn display_forms() {
        assert_eq!(poly(&[(3, 1), (4, 1)]).to_string(), "t^3 + t^4");
        assert_eq!(
            op(&[(3, q(1, 1)), (4, q(-1, 4))]).to_string(),
            "u^3 - 1/4 u^4"
        );
        assert_eq!(poly(&[(0, -2), (1, 1)]).to_string(), "-2 + t");
        assert_eq!(
            poly(&[(2, 1)]).to_precision(4).unwrap().to_string(),
            "t^2 + O(t^5)"
        );
        assert_eq!(DiffOp::zero().to_string(), "0");
    }

    #[test]
    fn factorial_memo() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(11), BigInt::from(39916800u64));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
