//! Inverse systems `B⊥ ⊆ k[u]` and the duality between subalgebras of
//! `k[[t]]` and spaces of differential operators.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, QMatrix};
use crate::series::{factorial_q, mul_trunc, DiffOp, Series};
use crate::subalgebra::{closure, AlgebraInput, ClosureConfig, Staircase};
use crate::Rational;

/// A finite-dimensional space of operators, kept in canonical form.
///
/// The basis is the fully reduced echelon form by *lowest* degree: each
/// element is monic at its lowest-degree term and no other element has a term
/// in that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSystem {
    basis: Vec<DiffOp>,
    conductor_bound: usize,
}

impl InverseSystem {
    /// Canonical basis of the span of `ops`. `conductor_bound` is the `c` of
    /// the algebra the space belongs to and is kept for reference.
    pub fn from_ops(ops: &[DiffOp], conductor_bound: usize) -> InverseSystem {
        let len = ops
            .iter()
            .filter_map(DiffOp::degree)
            .max()
            .map_or(0, |d| d + 1);
        let mut e = Echelon::new(len);
        for g in ops {
            e.insert(g.dense(len));
        }
        InverseSystem {
            basis: e
                .into_rows()
                .into_iter()
                .map(|(_, v)| DiffOp::new(v))
                .collect(),
            conductor_bound,
        }
    }

    pub fn empty() -> InverseSystem {
        InverseSystem {
            basis: Vec::new(),
            conductor_bound: 0,
        }
    }

    pub fn basis(&self) -> &[DiffOp] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn conductor_bound(&self) -> usize {
        self.conductor_bound
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.basis.iter().filter_map(DiffOp::degree).max()
    }

    fn echelon(&self, len: usize) -> Echelon {
        let mut e = Echelon::new(len);
        for g in &self.basis {
            e.insert(g.dense(len));
        }
        e
    }

    pub fn contains(&self, g: &DiffOp) -> bool {
        let len = g
            .degree()
            .map_or(0, |d| d + 1)
            .max(self.max_degree().map_or(0, |d| d + 1));
        self.echelon(len).contains(&g.dense(len))
    }

    pub fn is_subspace_of(&self, other: &InverseSystem) -> bool {
        self.basis.iter().all(|g| other.contains(g))
    }

    /// Equality of spans, independent of `conductor_bound`.
    pub fn same_span(&self, other: &InverseSystem) -> bool {
        self.basis == other.basis
    }
}

/// Answer of the algebra-forming test.
///
/// On a negative verdict `witness` is an element `f ∈ B`, known modulo
/// `t^(d+1)`, with `g ⊥ f = 0` for all `g ∈ V` and `g ⊥ f² ≠ 0` for some `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct AfCertificate {
    pub verdict: bool,
    pub witness: Option<Series>,
}

/// Truncated monomials `[f₁^l₁ ⋯ f_r^l_r]_{≤d}` with `l₁ + ⋯ + l_r ≥ 1`.
///
/// Products of order above `d` vanish after truncation and are skipped; exact
/// duplicates are removed.
pub fn natural_set(input: &AlgebraInput, d: usize) -> Result<Vec<Series>> {
    let gens: Vec<Vec<Rational>> = input
        .gens
        .iter()
        .map(|g| g.dense(d))
        .collect::<Result<_>>()?;
    let mut out: Vec<Vec<Rational>> = Vec::new();
    // (product, index of the last factor) so each multiset is built once
    let mut frontier: Vec<(Vec<Rational>, usize)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.iter().any(|x| !x.is_zero()) {
            frontier.push((g.clone(), i));
        }
    }
    while let Some((p, last)) = frontier.pop() {
        for (i, g) in gens.iter().enumerate().skip(last) {
            let q = mul_trunc(&p, g, d);
            if q.iter().any(|x| !x.is_zero()) {
                frontier.push((q, i));
            }
        }
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
    Ok(out.into_iter().map(Series::polynomial).collect())
}

/// Operators of degree `< len` with zero constant term killing every vector in `conds`.
fn annihilating_ops(conds: &[Vec<Rational>], len: usize) -> Vec<DiffOp> {
    if len <= 1 {
        return Vec::new();
    }
    // unknowns a_1..a_{len-1}; condition h: Σ a_i i! h_i = 0
    let rows: Vec<Vec<Rational>> = conds
        .iter()
        .map(|h| (1..len).map(|i| &h[i] * factorial_q(i)).collect())
        .collect();
    let m = QMatrix::from_rows_with_cols(rows, len - 1).expect("rectangular");
    m.nullspace()
        .into_iter()
        .map(|v| {
            let mut c = vec![Rational::zero()];
            c.extend(v);
            DiffOp::new(c)
        })
        .collect()
}

/// `B⊥`: operators of degree `≤ c-1` without constant term that kill the
/// truncated monomials of the generators.
pub fn inverse_system(input: &AlgebraInput, s: &Staircase) -> Result<InverseSystem> {
    let c = s.conductor();
    if c == 0 {
        return Ok(InverseSystem::empty());
    }
    let conds: Vec<Vec<Rational>> = natural_set(input, c - 1)?
        .iter()
        .map(|h| h.dense(c - 1))
        .collect::<Result<_>>()?;
    let v = InverseSystem::from_ops(&annihilating_ops(&conds, c), c);
    if v.dim() != s.delta() {
        return Err(Error::Inconsistent(format!(
            "inverse system has dimension {} but δ = {}",
            v.dim(),
            s.delta()
        )));
    }
    Ok(v)
}

/// `B⊥` computed from the staircase alone.
pub fn inverse_system_of_staircase(s: &Staircase) -> InverseSystem {
    let c = s.conductor();
    if c == 0 {
        return InverseSystem::empty();
    }
    let conds: Vec<Vec<Rational>> = s
        .basis()
        .iter()
        .map(|b| b.dense(c - 1).expect("exact"))
        .collect();
    InverseSystem::from_ops(&annihilating_ops(&conds, c), c)
}

fn check_constant_terms(v: &[DiffOp]) -> Result<()> {
    match v.iter().position(|g| !g.coeff(0).is_zero()) {
        Some(index) => Err(Error::ConstantTermInV { index }),
        None => Ok(()),
    }
}

fn quad(q: &[Vec<Rational>], a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        for (l, bl) in b.iter().enumerate() {
            if !bl.is_zero() && !q[j][l].is_zero() {
                acc += aj * bl * &q[j][l];
            }
        }
    }
    acc
}

/// Decides whether `Ann(V) ∩ B` is a subalgebra.
///
/// With `h₁, …, h_m` the truncated monomials of degree `≤ d`, the elements of
/// `B` killed by `V` are `Σ λ_j h_j` for `λ` in the nullspace `L` of the
/// linear conditions. `V` is algebra-forming iff each quadratic form
/// `q_i(λ) = g_i ⊥ (Σ λ_j h_j)²` vanishes on `L`, which is checked exactly on
/// a basis of `L` through the values `q_i(w_a)` and the polar forms.
pub fn is_algebra_forming(
    v: &[DiffOp],
    s: &Staircase,
    input: &AlgebraInput,
) -> Result<AfCertificate> {
    check_constant_terms(v)?;
    let ops: Vec<&DiffOp> = v.iter().filter(|g| !g.is_zero()).collect();
    let Some(max_deg) = ops.iter().filter_map(|g| g.degree()).max() else {
        return Ok(AfCertificate {
            verdict: true,
            witness: None,
        });
    };
    let d = (s.conductor().saturating_sub(1)).max(max_deg + 1);
    let h: Vec<Vec<Rational>> = natural_set(input, d)?
        .iter()
        .map(|x| x.dense(d))
        .collect::<Result<_>>()?;
    let m = h.len();
    let lin: Vec<Vec<Rational>> = ops
        .iter()
        .map(|g| h.iter().map(|hj| g.perp_dense(hj)).collect())
        .collect();
    let null = QMatrix::from_rows_with_cols(lin, m)?.nullspace();
    let mut products = vec![vec![Vec::new(); m]; m];
    for j in 0..m {
        for l in j..m {
            products[j][l] = mul_trunc(&h[j], &h[l], d);
        }
    }
    let combine = |w: &[Rational]| -> Series {
        let mut f = vec![Rational::zero(); d + 1];
        for (lambda, hj) in w.iter().zip(&h) {
            if lambda.is_zero() {
                continue;
            }
            for (x, y) in f.iter_mut().zip(hj) {
                *x += lambda * y;
            }
        }
        Series::truncated(f)
    };
    for g in &ops {
        let mut q = vec![vec![Rational::zero(); m]; m];
        for j in 0..m {
            for l in j..m {
                let val = g.perp_dense(&products[j][l]);
                q[j][l] = val.clone();
                q[l][j] = val;
            }
        }
        for w in &null {
            if !quad(&q, w, w).is_zero() {
                return Ok(AfCertificate {
                    verdict: false,
                    witness: Some(combine(w)),
                });
            }
        }
        for a in 0..null.len() {
            for b in a + 1..null.len() {
                if !quad(&q, &null[a], &null[b]).is_zero() {
                    let sum: Vec<Rational> =
                        null[a].iter().zip(&null[b]).map(|(x, y)| x + y).collect();
                    return Ok(AfCertificate {
                        verdict: false,
                        witness: Some(combine(&sum)),
                    });
                }
            }
        }
    }
    Ok(AfCertificate {
        verdict: true,
        witness: None,
    })
}

/// Subspace `{f ∈ B : g ⊥ f = 0 ∀ g ∈ V}` as a staircase, assuming it is an
/// algebra. Everything is exact modulo `t^len` with `len > deg V`, `len ≥ c`.
fn kernel_in(v: &[DiffOp], s: &Staircase) -> Staircase {
    let max_deg = v.iter().filter_map(DiffOp::degree).max().unwrap_or(0);
    let len = s.conductor().max(max_deg + 1);
    let basis: Vec<Vec<Rational>> = s
        .span_mod(len)
        .into_rows()
        .into_iter()
        .map(|(_, r)| r)
        .collect();
    let rows: Vec<Vec<Rational>> = v
        .iter()
        .map(|g| basis.iter().map(|b| g.perp_dense(b)).collect())
        .collect();
    let coords = if rows.is_empty() {
        QMatrix::identity(basis.len()).to_rows()
    } else {
        QMatrix::from_rows_with_cols(rows, basis.len())
            .expect("rectangular")
            .nullspace()
    };
    let mut span = Echelon::new(len);
    for y in coords {
        let mut x = vec![Rational::zero(); len];
        for (yj, b) in y.iter().zip(&basis) {
            if yj.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi += yj * bi;
            }
        }
        span.insert(x);
    }
    Staircase::from_span(&span, len, len)
}

/// `Ann(V) ∩ B` for an algebra-forming `V`.
pub fn annihilator(v: &[DiffOp], s: &Staircase) -> Result<Staircase> {
    check_constant_terms(v)?;
    if v.iter().all(DiffOp::is_zero) {
        return Ok(s.clone());
    }
    let input = s.to_input("B");
    let cert = is_algebra_forming(v, s, &input)?;
    if !cert.verdict {
        return Err(Error::NotAlgebraForming(Box::new(cert)));
    }
    Ok(kernel_in(v, s))
}

/// `Ann(V)` inside `k[[t]]` for an inverse system `V`.
pub fn annihilator_in_gamma(v: &InverseSystem) -> Staircase {
    kernel_in(v.basis(), &Staircase::gamma())
}

/// One step `B_{i-1} ⊂ B_i` of the standard filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct FiltrationStep {
    /// Exponent of the gap monomial adjoined at this step.
    pub gap_exponent: usize,
    pub new_algebra: Staircase,
    /// `l_i` with `Ker ∂_{l_i} = B_{i-1}` inside `B_i`.
    pub cutting_element: Series,
    pub derivation: DiffOp,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    pub steps: Vec<FiltrationStep>,
}

/// `B = B_0 ⊂ B_1 ⊂ ⋯ ⊂ B_δ = k[[t]]`, adjoining the largest remaining gap
/// monomial at each step.
pub fn standard_filtration(input: &AlgebraInput, config: &ClosureConfig) -> Result<Filtration> {
    let mut current = closure(input, config)?;
    let mut gens = input.gens.clone();
    let mut steps = Vec::new();
    while let Some(&gap) = current.gaps().last() {
        gens.push(Series::t_pow(gap));
        let next = closure(&AlgebraInput::new(gens.clone(), "filtration")?, config)?;
        if next.delta() + 1 != current.delta() {
            return Err(Error::Inconsistent(format!(
                "adjoining t^{gap} changed δ from {} to {}",
                current.delta(),
                next.delta()
            )));
        }
        let cut = cutting_derivation(&current, &next)?;
        steps.push(FiltrationStep {
            gap_exponent: gap,
            new_algebra: next.clone(),
            cutting_element: cut.l,
            derivation: cut.g,
        });
        current = next;
    }
    Ok(Filtration { steps })
}

/// A linear form on `B` with kernel `C`, given by an operator `g` and its
/// mirror `l ∈ k[t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CuttingDerivation {
    pub l: Series,
    pub g: DiffOp,
    /// Whether `g ⊥ ·` vanishes on `𝔪_B²`, i.e. defines a derivation of `B`.
    pub is_derivation: bool,
}

/// The operator spanning `C⊥` modulo `B⊥` for `C ⊂ B` of codimension one.
pub fn cutting_derivation(c: &Staircase, b: &Staircase) -> Result<CuttingDerivation> {
    if !c.is_subalgebra_of(b) {
        return Err(Error::NotContained("C is not contained in B".into()));
    }
    let codim = c.delta() as i64 - b.delta() as i64;
    if codim != 1 {
        return Err(Error::CodimensionNotOne { found: codim });
    }
    let vc = inverse_system_of_staircase(c);
    let vb = inverse_system_of_staircase(b);
    let len = c.conductor().max(1);
    let mut e = Echelon::new(len);
    for g in vb.basis() {
        e.insert(g.dense(len));
    }
    let mut candidate = None;
    for g in vc.basis() {
        let mut v = g.dense(len);
        e.reduce(&mut v);
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].recip();
            candidate = Some(DiffOp::new(v.into_iter().map(|x| x * &inv).collect()));
            break;
        }
    }
    let g = candidate.ok_or_else(|| Error::Inconsistent("C⊥ equals B⊥".into()))?;
    let kills_c = c
        .max_ideal_spanning(len)
        .iter()
        .all(|f| g.perp_dense(f).is_zero());
    let len_b = b.conductor().max(len);
    let nonzero_on_b = b
        .max_ideal_spanning(len_b)
        .iter()
        .any(|f| !g.perp_dense(f).is_zero());
    if !kills_c || !nonzero_on_b {
        return Err(Error::Inconsistent(
            "cutting form does not cut out C".into(),
        ));
    }
    let is_derivation = is_derivation(&g, b);
    Ok(CuttingDerivation {
        l: g.mirror(),
        g,
        is_derivation,
    })
}

/// `g ⊥ ·` is a derivation of `B`: zero constant term and zero on `𝔪_B²`.
pub fn is_derivation(g: &DiffOp, s: &Staircase) -> bool {
    if !g.coeff(0).is_zero() {
        return false;
    }
    let Some(deg) = g.degree() else {
        return true;
    };
    let len = (deg + 1).max(s.conductor());
    let span = s.max_ideal_spanning(len);
    let gens: Vec<Vec<Rational>> = s
        .algebra_generators()
        .iter()
        .map(|f| f.dense(len - 1).expect("exact"))
        .collect();
    gens.iter().all(|f| {
        span.iter()
            .all(|m| g.perp_dense(&mul_trunc(f, m, len - 1)).is_zero())
    })
}

/// Operators `g` with `g ⊥ 𝔪_B² = 0` and zero constant term, reduced modulo
/// `B⊥`: a copy of `(𝔪_B/𝔪_B²)*`, of dimension the embedding dimension of `B`.
pub fn derivation_space(s: &Staircase) -> InverseSystem {
    // 𝔪 ⊇ t^max(c,1) k[[t]], so 𝔪² ⊇ t^(max(c,1)+e0) k[[t]]
    let len = s.conductor().max(1) + s.e0();
    let span = s.max_ideal_spanning(len);
    let gens: Vec<Vec<Rational>> = s
        .algebra_generators()
        .iter()
        .map(|f| f.dense(len - 1).expect("exact"))
        .collect();
    let mut sq = Echelon::new(len);
    for f in &gens {
        for m in &span {
            sq.insert(mul_trunc(f, m, len - 1));
        }
    }
    let conds: Vec<Vec<Rational>> = sq.into_rows().into_iter().map(|(_, r)| r).collect();
    // operators in B⊥ act as zero on B
    let mut perp = Echelon::new(len);
    for g in inverse_system_of_staircase(s).basis() {
        perp.insert(g.dense(len));
    }
    let mut quotient = Echelon::new(len);
    for g in annihilating_ops(&conds, len) {
        let mut v = g.dense(len);
        perp.reduce(&mut v);
        quotient.insert(v);
    }
    let ops: Vec<DiffOp> = quotient
        .into_rows()
        .into_iter()
        .map(|(_, v)| DiffOp::new(v))
        .collect();
    InverseSystem::from_ops(&ops, s.conductor())
}

/// Matrix of `f ↦ f(h)` on `k[t]/t^c`: column `i` holds the coefficients of `h^i`.
pub fn substitution_matrix(h: &Series, c: usize) -> Result<QMatrix> {
    let order = h.order();
    if order != Some(1) {
        return Err(Error::NotUniformizer { order });
    }
    let mut m = QMatrix::zeros(c, c);
    if c == 0 {
        return Ok(m);
    }
    let hd = h.dense(c - 1)?;
    let mut power = vec![Rational::zero(); c];
    power[0] = Rational::one();
    for i in 0..c {
        for (j, x) in power.iter().enumerate() {
            m[(j, i)] = x.clone();
        }
        power = mul_trunc(&power, &hd, c - 1);
    }
    Ok(m)
}

fn dual_action(m: &QMatrix, v: &InverseSystem, c: usize) -> Result<Vec<DiffOp>> {
    let mt = m.transpose();
    v.basis()
        .iter()
        .map(|g| {
            if g.degree().is_some_and(|d| d >= c) {
                return Err(Error::InvalidInput(format!(
                    "operator {g} has degree at least c = {c}"
                )));
            }
            let y: Vec<Rational> = (0..c).map(|j| g.coeff(j) * factorial_q(j)).collect();
            let x = mt.mul_vec(&y)?;
            Ok(DiffOp::new(
                x.into_iter()
                    .enumerate()
                    .map(|(i, xi)| xi / factorial_q(i))
                    .collect(),
            ))
        })
        .collect()
}

/// Pull back an inverse system along `t ↦ h`.
///
/// Returns `M` and `V1 = ᵗM · V2` computed in the dual bases `u^i / i!`, so
/// that `Ann(V1) = {f : f(h) ∈ Ann(V2)}`.
pub fn transport_dual(
    h: &Series,
    c: usize,
    v2: &InverseSystem,
) -> Result<(QMatrix, InverseSystem)> {
    let m = substitution_matrix(h, c)?;
    let ops = dual_action(&m, v2, c)?;
    Ok((m, InverseSystem::from_ops(&ops, c)))
}

/// Push an inverse system forward along `t ↦ h`, so that
/// `Ann(V1) = {b(h) : b ∈ Ann(V2)}`. Uses `(ᵗM)⁻¹`, the transpose of the
/// matrix of the inverse substitution.
pub fn pushforward_dual(
    h: &Series,
    c: usize,
    v2: &InverseSystem,
) -> Result<(QMatrix, InverseSystem)> {
    let m = substitution_matrix(h, c)?;
    if c == 0 {
        return Ok((m, InverseSystem::from_ops(&[], c)));
    }
    let inv = h.reversion(c - 1)?;
    let minv = substitution_matrix(&inv, c)?;
    let ops = dual_action(&minv, v2, c)?;
    Ok((m, InverseSystem::from_ops(&ops, c)))
}

/// Round trip `B ↦ B⊥ ↦ Ann(B⊥)`, together with the dimension and degree
/// properties of `B⊥`.
pub fn verify_duality(input: &AlgebraInput, config: &ClosureConfig) -> Result<bool> {
    let s = closure(input, config)?;
    let v = inverse_system(input, &s)?;
    let c = s.conductor();
    let degrees_ok = match v.max_degree() {
        None => s.delta() == 0,
        Some(d) => d + 1 == c,
    };
    let low_ok = (1..s.e0()).all(|i| v.contains(&DiffOp::monomial(i)));
    let round_trip = annihilator_in_gamma(&v) == s;
    let independent = inverse_system_of_staircase(&s).same_span(&v);
    Ok(v.dim() == s.delta() && degrees_ok && low_ok && round_trip && independent)
}

/// Laurent tail `Σ_{i<len} e_i t^(-i-1)` representing an element of the
/// canonical module modulo `k[[t]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalPart {
    /// `coeffs[i]` is the coefficient of `t^(-i-1)`.
    #[serde(skip)]
    pub coeffs: Vec<Rational>,
}

impl PrincipalPart {
    /// Coefficient of `t^exp`, for negative `exp`.
    pub fn coeff(&self, exp: i64) -> Rational {
        if exp >= 0 {
            return Rational::zero();
        }
        let i = (-exp - 1) as usize;
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`, exponents increasing.
    pub fn terms(&self) -> Vec<(i64, Rational)> {
        let mut out: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (-(i as i64) - 1, x.clone()))
            .collect();
        out.reverse();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// `Σ g_i u^i ↦ Σ i! g_i t^(-i-1)`.
pub fn rosenlicht(g: &DiffOp, c: usize) -> Result<PrincipalPart> {
    if let Some(d) = g.degree() {
        if d + 1 > c {
            return Err(Error::InvalidInput(format!(
                "operator of degree {d} exceeds c - 1 = {}",
                c as i64 - 1
            )));
        }
    }
    Ok(PrincipalPart {
        coeffs: (0..c).map(|i| g.coeff(i) * factorial_q(i)).collect(),
    })
}

/// `res₀(f · α)`, the coefficient of `t^(-1)`.
pub fn residue(f: &Series, alpha: &PrincipalPart) -> Result<Rational> {
    let Some(last) = alpha.coeffs.iter().rposition(|x| !x.is_zero()) else {
        return Ok(Rational::zero());
    };
    let fd = f.dense(last)?;
    Ok(fd
        .iter()
        .zip(&alpha.coeffs)
        .map(|(a, e)| a * e)
        .fold(Rational::zero(), |acc, x| acc + x))
}
