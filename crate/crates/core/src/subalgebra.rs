//! Finite-codimension subalgebras `B ⊆ k[[t]]`.
//!
//! [`closure`] turns a list of generators into a [`Staircase`]: the reduced
//! echelon basis of `B` modulo `t^c`, where `c` is the conductor. Because
//! `t^c k[[t]] ⊆ B`, the staircase is a complete, exact description of `B`, and
//! every other invariant here (Hilbert function, blow-ups, membership) is
//! computed from it.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::series::{mul_trunc, Series};
use crate::Rational;

/// Default ceiling for the adaptive working precision.
pub const DEFAULT_CEILING: usize = 512;

/// Generators of a subalgebra, each of positive order.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraInput {
    pub gens: Vec<Series>,
    pub label: String,
}

impl AlgebraInput {
    pub fn new(gens: Vec<Series>, label: impl Into<String>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput(
                "at least one generator is required".into(),
            ));
        }
        for (i, g) in gens.iter().enumerate() {
            match g.order() {
                Some(0) => {
                    return Err(Error::InvalidInput(format!(
                        "generator {i} ({g}) has a nonzero constant term"
                    )))
                }
                None => {
                    return Err(Error::InvalidInput(format!(
                        "generator {i} ({g}) is zero to its known precision"
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(AlgebraInput {
            gens,
            label: label.into(),
        })
    }

    /// The monomial algebra `k[[t^a₁, …, t^aₙ]]`.
    pub fn monomial(exponents: &[usize]) -> Result<Self> {
        let label = exponents
            .iter()
            .map(|a| format!("t^{a}"))
            .collect::<Vec<_>>()
            .join(", ");
        Self::new(exponents.iter().map(|&a| Series::t_pow(a)).collect(), label)
    }

    fn orders(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.order().unwrap_or(0)).collect()
    }

    /// Smallest precision among inexact generators.
    pub fn available_precision(&self) -> Option<usize> {
        self.gens.iter().filter_map(Series::precision).min()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureConfig {
    /// Highest working truncation the closure may use.
    pub ceiling: usize,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig {
            ceiling: DEFAULT_CEILING,
        }
    }
}

/// Reduced presentation of `B` modulo its conductor.
///
/// `basis[i]` is the unique element of `B` with order `values[i]`, leading
/// coefficient 1, degree below the conductor, and zero coefficient at every
/// other value. Together with `t^c k[[t]]` they span `B`.
#[derive(Clone, Debug)]
pub struct Staircase {
    basis: Vec<Series>,
    values: Vec<usize>,
    conductor: usize,
    gaps: Vec<usize>,
    e0: usize,
    work_trunc: usize,
}

impl PartialEq for Staircase {
    fn eq(&self, other: &Staircase) -> bool {
        self.conductor == other.conductor
            && self.values == other.values
            && self.basis == other.basis
    }
}

impl Eq for Staircase {}

impl Staircase {
    /// `k[[t]]` itself.
    pub fn gamma() -> Staircase {
        Staircase {
            basis: Vec::new(),
            values: Vec::new(),
            conductor: 0,
            gaps: Vec::new(),
            e0: 1,
            work_trunc: 0,
        }
    }

    /// Builds the staircase from the image of `B` in `k[t]/t^len`, given that
    /// every exponent `≥ tail` is a value of `B` and `tail ≤ len`.
    pub(crate) fn from_span(span: &Echelon, tail: usize, work_trunc: usize) -> Staircase {
        let pivots: Vec<usize> = span.pivots().filter(|&p| p < tail).collect();
        let conductor = (0..tail)
            .rev()
            .find(|k| pivots.binary_search(k).is_err())
            .map_or(0, |g| g + 1);
        let mut basis = Vec::new();
        let mut values = Vec::new();
        for (p, row) in span.rows() {
            if p >= conductor {
                break;
            }
            let mut c: Vec<Rational> = row.iter().take(conductor).cloned().collect();
            c.resize(conductor, Rational::zero());
            basis.push(Series::polynomial(c));
            values.push(p);
        }
        let gaps: Vec<usize> = (0..conductor)
            .filter(|k| values.binary_search(k).is_err())
            .collect();
        let e0 = if conductor == 0 {
            1
        } else {
            values.iter().copied().find(|&v| v > 0).unwrap_or(conductor)
        };
        Staircase {
            basis,
            values,
            conductor,
            gaps,
            e0,
            work_trunc,
        }
    }

    pub fn basis(&self) -> &[Series] {
        &self.basis
    }

    /// Values of `B` below the conductor.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn delta(&self) -> usize {
        self.gaps.len()
    }

    /// Multiplicity: the least positive value.
    pub fn e0(&self) -> usize {
        self.e0
    }

    /// Working truncation used while computing this staircase.
    pub fn work_trunc(&self) -> usize {
        self.work_trunc
    }

    pub fn is_smooth(&self) -> bool {
        self.conductor == 0
    }

    pub fn contains_value(&self, v: usize) -> bool {
        v >= self.conductor || self.values.binary_search(&v).is_ok()
    }

    /// Values in `[0, upto)`.
    pub fn value_window(&self, upto: usize) -> Vec<usize> {
        (0..upto).filter(|&v| self.contains_value(v)).collect()
    }

    /// Basis element with the given value (`t^v` above the conductor).
    pub fn element(&self, v: usize) -> Option<Series> {
        if v >= self.conductor {
            return Some(Series::t_pow(v));
        }
        self.values
            .binary_search(&v)
            .ok()
            .map(|i| self.basis[i].clone())
    }

    /// Minimal generators of the value semigroup.
    pub fn semigroup_generators(&self) -> Vec<usize> {
        let upto = self.conductor + self.e0;
        let mut gens = Vec::new();
        for v in 1..upto {
            if !self.contains_value(v) {
                continue;
            }
            let decomposable =
                (1..v).any(|a| a <= v - a && self.contains_value(a) && self.contains_value(v - a));
            if !decomposable {
                gens.push(v);
            }
        }
        if gens.is_empty() {
            gens.push(1);
        }
        gens
    }

    /// Exact polynomial generators of `B` as a complete algebra.
    pub fn algebra_generators(&self) -> Vec<Series> {
        self.semigroup_generators()
            .into_iter()
            .map(|v| self.element(v).expect("generator is a value"))
            .collect()
    }

    /// `B` as an [`AlgebraInput`] with exact generators.
    pub fn to_input(&self, label: impl Into<String>) -> AlgebraInput {
        AlgebraInput::new(self.algebra_generators(), label).expect("staircase generators are valid")
    }

    /// Image of `B` in `k[t]/t^len`; requires `len ≥ c`.
    pub(crate) fn span_mod(&self, len: usize) -> Echelon {
        debug_assert!(len >= self.conductor);
        let mut e = Echelon::new(len);
        for b in &self.basis {
            e.insert(b.dense(len - 1).expect("exact"));
        }
        for k in self.conductor..len {
            let mut v = vec![Rational::zero(); len];
            v[k] = Rational::one();
            e.insert(v);
        }
        e
    }

    /// Spanning set of the maximal ideal modulo `t^len`.
    pub(crate) fn max_ideal_spanning(&self, len: usize) -> Vec<Vec<Rational>> {
        let mut out: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v > 0 && v < len)
            .map(|(b, _)| b.dense(len - 1).expect("exact"))
            .collect();
        for k in self.conductor.max(1)..len {
            let mut v = vec![Rational::zero(); len];
            v[k] = Rational::one();
            out.push(v);
        }
        out
    }

    /// `f ∈ B`, decided by reducing `f` against the staircase below `c`.
    pub fn membership(&self, f: &Series) -> Result<bool> {
        if self.conductor == 0 {
            return Ok(true);
        }
        let c = self.conductor;
        let mut v = f.dense(c - 1)?;
        for i in 0..c {
            if v[i].is_zero() {
                continue;
            }
            let Ok(j) = self.values.binary_search(&i) else {
                return Ok(false);
            };
            let factor = v[i].clone();
            for (x, y) in v.iter_mut().zip(self.basis[j].coeffs()).skip(i) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        Ok(true)
    }

    /// `self ⊆ other`.
    pub fn is_subalgebra_of(&self, other: &Staircase) -> bool {
        let basis_ok = self
            .basis
            .iter()
            .all(|b| other.membership(b).unwrap_or(false));
        let tail_ok = (self.conductor..other.conductor.max(self.conductor)).all(|k| {
            other.contains_value(k) && other.membership(&Series::t_pow(k)).unwrap_or(false)
        });
        basis_ok && tail_ok
    }
}

/// Image of the algebra generated by `gens` in `k[t]/t^(n+1)`.
fn closure_at(gens: &[Vec<Rational>], n: usize) -> Echelon {
    let mut span = Echelon::new(n + 1);
    let mut one = vec![Rational::zero(); n + 1];
    one[0] = Rational::one();
    span.insert(one.clone());
    let mut queue = vec![one];
    while let Some(v) = queue.pop() {
        for f in gens {
            let w = mul_trunc(f, &v, n);
            if w.iter().all(Zero::is_zero) {
                continue;
            }
            if span.insert(w.clone()).is_some() {
                queue.push(w);
            }
        }
    }
    span
}

/// Start of the first run of `e0` consecutive values inside the known window.
fn first_run(values: &[usize], e0: usize, n: usize) -> Option<usize> {
    let mut run = 0;
    for k in 0..=n {
        if values.binary_search(&k).is_ok() {
            run += 1;
            if run == e0 {
                return Some(k + 1 - e0);
            }
        } else {
            run = 0;
        }
    }
    None
}

/// Conductor of the numerical semigroup generated by `gens` (gcd must be 1).
pub(crate) fn semigroup_conductor(gens: &[usize]) -> usize {
    let m = *gens.iter().min().expect("nonempty");
    let mut member = vec![true];
    let mut run = 0;
    let mut k = 0;
    loop {
        if k > 0 {
            let inside = gens.iter().any(|&g| g <= k && member[k - g]);
            member.push(inside);
        }
        if member[k] {
            run += 1;
            if run == m {
                return k + 1 - m;
            }
        } else {
            run = 0;
        }
        k += 1;
    }
}

/// Reduced staircase of the algebra generated by `input`.
///
/// Works in `k[t]/t^(N+1)` at increasing `N`. The value set there is exact;
/// once it contains `e0` consecutive integers starting at `x`, every integer
/// `≥ x` is a value and the conductor is read off. If the positive values
/// keep a common divisor `> 1` up to the detection bound the algebra is
/// reported as having infinite codimension.
pub fn closure(input: &AlgebraInput, config: &ClosureConfig) -> Result<Staircase> {
    let orders = input.orders();
    let min_o = *orders.iter().min().expect("validated");
    let max_o = *orders.iter().max().expect("validated");
    if min_o == 1 {
        return Ok(Staircase::gamma());
    }
    let limit = input
        .available_precision()
        .map_or(config.ceiling, |p| p.min(config.ceiling));
    let scale: usize = input
        .gens
        .iter()
        .map(|g| g.degree().unwrap_or(g.trunc()))
        .sum();
    let detect = (4 * orders.iter().sum::<usize>()).max(2 * scale).min(limit);
    let mut n = (2 * (min_o + max_o) + 2).min(limit).max(min_o);
    loop {
        let dense: Vec<Vec<Rational>> = input
            .gens
            .iter()
            .map(|g| g.dense(n))
            .collect::<Result<_>>()?;
        let span = closure_at(&dense, n);
        let values: Vec<usize> = span.pivots().collect();
        let positive: Vec<usize> = values.iter().copied().filter(|&v| v > 0).collect();
        let g = positive.iter().fold(0usize, |a, &b| a.gcd(&b));
        if g == 1 {
            let e0 = positive[0];
            if let Some(x) = first_run(&values, e0, n) {
                return Ok(Staircase::from_span(&span, x, n));
            }
            let needed = semigroup_conductor(&positive) + e0 - 1;
            if needed > limit {
                return Err(Error::PrecisionExhausted { used: n, needed });
            }
            n = needed.max(n + 1);
        } else {
            if n >= detect || n >= limit {
                return Err(Error::InfiniteCodimension {
                    gcd: g.max(min_o.gcd(&g)),
                });
            }
            n = (2 * n).min(detect);
        }
    }
}

/// Hilbert function data of the local ring `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `HF(i) = dim 𝔪^i/𝔪^(i+1)`, up to and including the first stable index.
    pub hf: Vec<usize>,
    /// Partial sums `HF¹(i) = dim B/𝔪^(i+1)`.
    pub hf1: Vec<usize>,
    pub e0: usize,
    pub e1: usize,
}

impl HilbertData {
    /// Embedding dimension `HF(1)`.
    pub fn embedding_dim(&self) -> usize {
        self.hf.get(1).copied().unwrap_or(self.e0)
    }
}

/// Hilbert function of `B` from powers of its maximal ideal.
///
/// `𝔪^k ⊇ t^(k·e0 + c) k[[t]]`, so all lengths are read off modulo a fixed
/// power of `t`. `HF(i) = e0` holds exactly when `𝔪^(i+1) = x 𝔪^i` for an
/// element `x` of value `e0`, after which it stays constant.
pub fn hilbert(s: &Staircase) -> Result<HilbertData> {
    let e0 = s.e0();
    let c = s.conductor();
    if s.is_smooth() {
        return Ok(HilbertData {
            hf: vec![1, 1],
            hf1: vec![1, 2],
            e0: 1,
            e1: 0,
        });
    }
    let kmax = e0 + 1;
    let len = kmax * e0 + c;
    let gens: Vec<Vec<Rational>> = s
        .algebra_generators()
        .iter()
        .map(|g| g.dense(len - 1))
        .collect::<Result<_>>()?;
    let b_dim = len - s.delta();
    let mut power = Echelon::new(len);
    for v in s.max_ideal_spanning(len) {
        power.insert(v);
    }
    // colength[k] = dim B / 𝔪^k
    let mut colength = vec![0usize, b_dim - power.dim()];
    let mut hf = vec![1usize];
    let mut stable_at = None;
    for k in 2..=kmax {
        let mut next = Echelon::new(len);
        for (_, row) in power.rows() {
            for g in &gens {
                let w = mul_trunc(g, row, len - 1);
                if w.iter().any(|x| !x.is_zero()) {
                    next.insert(w);
                }
            }
        }
        power = next;
        colength.push(b_dim - power.dim());
        let i = k - 1;
        let h = colength[k] - colength[k - 1];
        hf.push(h);
        match stable_at {
            None if h == e0 => stable_at = Some(i),
            Some(_) => break,
            None => {}
        }
    }
    let Some(i) = stable_at else {
        return Err(Error::Inconsistent(format!(
            "Hilbert function did not reach e0 = {e0} by degree {kmax}"
        )));
    };
    if hf.last() != Some(&e0) {
        return Err(Error::Inconsistent(
            "Hilbert function left e0 after stabilizing".into(),
        ));
    }
    let hf1: Vec<usize> = colength[1..].to_vec();
    let e1 = e0 * (i + 1) - hf1[i];
    Ok(HilbertData { hf, hf1, e0, e1 })
}

/// Local ring of the first neighbourhood, `B[𝔪/x]` for `x` of value `e0`.
///
/// Generators are `[b/x]_{<c-e0}` for the staircase elements `b` of positive
/// value, recentred to order `≥ 1`, plus `t^a, …, t^(2a-1)` for `a = c - e0`
/// (or `t` when `a = 0`), which generate `t^a k[[t]] ⊆ B[𝔪/x]`.
pub fn blowup(s: &Staircase) -> Result<AlgebraInput> {
    if s.is_smooth() {
        return Err(Error::NothingToBlowUp);
    }
    let e0 = s.e0();
    let a = s.conductor() - e0;
    if a == 0 {
        return AlgebraInput::new(vec![Series::t_pow(1)], "blow-up");
    }
    let x = s.element(e0).expect("e0 is a value");
    let unit = Series::polynomial(x.coeffs()[e0..].to_vec());
    let mut gens = Vec::new();
    for (b, &v) in s.basis().iter().zip(s.values()) {
        if v <= e0 {
            continue;
        }
        let shifted = Series::polynomial(b.coeffs()[e0..].to_vec());
        let q = shifted.divide_by_unit(&unit, a - 1)?.truncate(a - 1)?;
        let q = q.sub(&Series::monomial(q.constant_term().clone(), 0));
        if !q.is_zero() {
            gens.push(Series::polynomial(q.coeffs().to_vec()));
        }
    }
    gens.extend((a..2 * a).map(Series::t_pow));
    AlgebraInput::new(gens, "blow-up")
}

/// One infinitely near point of the resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupStep {
    pub multiplicity: usize,
    pub e1: usize,
    pub delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupChain {
    pub steps: Vec<BlowupStep>,
    /// `Σ e1` over the chain; equals `δ` of the root.
    pub delta_check: usize,
}

impl BlowupChain {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.multiplicity).collect()
    }

    pub fn e1s(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.e1).collect()
    }
}

/// Blows up until the ring is smooth, recording `(e0, e1)` at every point.
pub fn blowup_chain(input: &AlgebraInput, config: &ClosureConfig) -> Result<BlowupChain> {
    let root = closure(input, config)?;
    let mut steps = Vec::new();
    if root.is_smooth() {
        return Ok(BlowupChain {
            steps,
            delta_check: 0,
        });
    }
    let mut current = root.clone();
    loop {
        let h = hilbert(&current)?;
        steps.push(BlowupStep {
            multiplicity: h.e0,
            e1: h.e1,
            delta: current.delta(),
        });
        if current.is_smooth() {
            break;
        }
        let next = closure(&blowup(&current)?, config)?;
        // the blow-up ring has colength e1 over B
        if current.delta() - next.delta() != h.e1 {
            return Err(Error::Inconsistent(format!(
                "e1 = {} but the blow-up lowers δ by {}",
                h.e1,
                current.delta() - next.delta()
            )));
        }
        current = next;
    }
    let delta_check = steps.iter().map(|s| s.e1).sum();
    if delta_check != root.delta() {
        return Err(Error::Inconsistent(format!(
            "Σ e1 = {delta_check} differs from δ = {}",
            root.delta()
        )));
    }
    Ok(BlowupChain { steps, delta_check })
}

/// Numerical invariants of a branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    pub delta: usize,
    pub conductor: usize,
    pub e0: usize,
    pub e1: usize,
    pub mu: usize,
    pub embedding_dim: usize,
    pub gorenstein_by_c: bool,
    pub gaps: Vec<usize>,
    pub hilbert: Vec<usize>,
    pub hilbert1: Vec<usize>,
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `δ, c, e0, e1, μ = 2δ` and the Gorenstein test `c = 2δ`, with the
/// standard inequalities between them checked.
pub fn invariants_report(s: &Staircase) -> Result<InvariantsReport> {
    let h = hilbert(s)?;
    let delta = s.delta();
    let c = s.conductor();
    let mu = 2 * delta;
    let n = h.embedding_dim();
    let mut violations = Vec::new();
    if !(h.e0 - 1 <= h.e1 && h.e1 <= delta && delta <= mu) {
        violations.push("e0 - 1 <= e1 <= delta <= mu");
    }
    if h.e1 + binom2(n - 1) > binom2(h.e0) {
        violations.push("e1 <= C(e0,2) - C(n-1,2)");
    }
    if delta > 0 && !(delta < c && c <= 2 * delta) {
        violations.push("delta + 1 <= c <= 2 delta");
    }
    if !violations.is_empty() {
        return Err(Error::Inconsistent(format!(
            "invariant inequalities violated: {}",
            violations.join("; ")
        )));
    }
    Ok(InvariantsReport {
        delta,
        conductor: c,
        e0: h.e0,
        e1: h.e1,
        mu,
        embedding_dim: n,
        gorenstein_by_c: c == 2 * delta,
        gaps: s.gaps().to_vec(),
        hilbert: h.hf,
        hilbert1: h.hf1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn poly(terms: &[(usize, i64)]) -> Series {
        Series::from_terms(terms.iter().map(|&(k, c)| (k, q(c))))
    }

    fn close(gens: Vec<Series>) -> Result<Staircase> {
        closure(&AlgebraInput::new(gens, "test")?, &ClosureConfig::default())
    }

    fn toy() -> Staircase {
        close(vec![poly(&[(3, 1), (4, 1)]), poly(&[(5, 1)])]).unwrap()
    }

    #[test]
    fn toy_closure() {
        let s = toy();
        assert_eq!(s.delta(), 4);
        assert_eq!(s.conductor(), 8);
        assert_eq!(s.gaps(), &[1, 2, 4, 7]);
        assert_eq!(s.e0(), 3);
        assert_eq!(s.values(), &[0, 3, 5, 6]);
    }

    #[test]
    fn section5_closure() {
        let s = close(vec![
            poly(&[(6, 1)]),
            poly(&[(8, 1), (11, 1)]),
            poly(&[(10, 1), (13, 1)]),
        ])
        .unwrap();
        // (t^8+t^11)(t^10+t^13) - (t^6)^3 = 2t^21 + t^24, so 21 is a value
        assert_eq!(s.delta(), 11);
        assert_eq!(s.conductor(), 18);
        assert_eq!(s.values(), &[0, 6, 8, 10, 12, 14, 16]);
    }

    #[test]
    fn gamma_and_infinite() {
        let s = close(vec![Series::t_pow(1)]).unwrap();
        assert_eq!((s.delta(), s.conductor()), (0, 0));
        assert!(s.gaps().is_empty());
        assert!(matches!(
            close(vec![poly(&[(2, 1), (3, 1)])]),
            Err(Error::InfiniteCodimension { gcd: 2 })
        ));
    }

    #[test]
    fn precision_exhausted_reports_requirement() {
        let f = poly(&[(3, 1), (4, 1)]).to_precision(6).unwrap();
        let err = close(vec![f, poly(&[(5, 1)])]).unwrap_err();
        match err {
            Error::PrecisionExhausted { used, needed } => {
                assert_eq!(used, 6);
                assert!(needed > used);
            }
            other => panic!("{other:?}"),
        }
        // with enough precision the same generators resolve
        let f = poly(&[(3, 1), (4, 1)]).to_precision(12).unwrap();
        assert_eq!(close(vec![f, poly(&[(5, 1)])]).unwrap(), toy());
    }

    #[test]
    fn membership_cases() {
        let s = toy();
        assert!(s.membership(&poly(&[(6, 1), (7, 2)])).unwrap());
        assert!(!s.membership(&Series::t_pow(7)).unwrap());
        assert!(s.membership(&Series::one()).unwrap());
        let short = poly(&[(3, 1)]).to_precision(5).unwrap();
        assert!(s.membership(&short).is_err());
    }

    #[test]
    fn presentation_independence() {
        let a = toy();
        let b = close(vec![
            poly(&[(3, 1), (4, 1), (5, 1)]),
            poly(&[(5, 1)]),
            poly(&[(6, 1), (7, 2), (8, 1)]),
        ])
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hilbert_cases() {
        let s = close(vec![Series::t_pow(2), Series::t_pow(5)]).unwrap();
        let h = hilbert(&s).unwrap();
        assert_eq!(&h.hf1[..3], &[1, 3, 5]);
        assert_eq!(h.e1, 1);
        let g = hilbert(&Staircase::gamma()).unwrap();
        assert_eq!(g.e1, 0);
        assert_eq!(g.hf, vec![1, 1]);
    }

    #[test]
    fn blowup_cusp() {
        let s = close(vec![Series::t_pow(2), Series::t_pow(3)]).unwrap();
        let b = blowup(&s).unwrap();
        let sb = closure(&b, &ClosureConfig::default()).unwrap();
        assert!(sb.is_smooth());
        assert!(matches!(
            blowup(&Staircase::gamma()),
            Err(Error::NothingToBlowUp)
        ));
    }

    #[test]
    fn chain_cusp_and_gamma() {
        let cfg = ClosureConfig::default();
        let chain = blowup_chain(&AlgebraInput::monomial(&[2, 3]).unwrap(), &cfg).unwrap();
        assert_eq!(chain.multiplicities(), vec![2, 1]);
        assert_eq!(chain.e1s(), vec![1, 0]);
        assert_eq!(chain.delta_check, 1);
        let chain = blowup_chain(&AlgebraInput::monomial(&[1]).unwrap(), &cfg).unwrap();
        assert!(chain.steps.is_empty());
    }

    #[test]
    fn report_cases() {
        let r = invariants_report(&toy()).unwrap();
        assert_eq!((r.delta, r.conductor, r.mu), (4, 8, 8));
        assert!(r.gorenstein_by_c);
        let s = closure(
            &AlgebraInput::monomial(&[4, 6, 9]).unwrap(),
            &ClosureConfig::default(),
        )
        .unwrap();
        let r = invariants_report(&s).unwrap();
        assert_eq!((r.delta, r.conductor), (6, 12));
        assert!(r.gorenstein_by_c);
        let r = invariants_report(&Staircase::gamma()).unwrap();
        assert_eq!((r.delta, r.mu, r.conductor), (0, 0, 0));
    }

    #[test]
    fn semigroup_conductor_sieve() {
        assert_eq!(semigroup_conductor(&[2, 3]), 2);
        assert_eq!(semigroup_conductor(&[4, 6, 9]), 12);
        assert_eq!(semigroup_conductor(&[1]), 0);
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(AlgebraInput::new(vec![], "x").is_err());
        assert!(AlgebraInput::new(vec![poly(&[(0, 1), (2, 1)])], "x").is_err());
    }
}
