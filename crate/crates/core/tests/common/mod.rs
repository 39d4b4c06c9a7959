#![allow(dead_code)]

use std::collections::BTreeSet;

use branchdual::linalg::QMatrix;
use branchdual::semigroup::NumericalSemigroup;
use branchdual::series::{DiffOp, Series};
use branchdual::subalgebra::{AlgebraInput, Staircase};
use branchdual::Rational;
use num_traits::Zero;
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn poly(terms: &[(usize, i64)]) -> Series {
    Series::from_terms(terms.iter().map(|&(k, c)| (k, q(c, 1))))
}

pub fn op(terms: &[(usize, i64, i64)]) -> DiffOp {
    DiffOp::from_terms(terms.iter().map(|&(k, n, d)| (k, q(n, d))))
}

/// All numerical semigroups with genus at most `max_genus`, by walking the
/// tree where a child removes one minimal generator larger than the
/// Frobenius number.
pub fn semigroups_up_to_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut stack = vec![NumericalSemigroup::from_gaps(&[]).unwrap()];
    while let Some(s) = stack.pop() {
        if s.genus() < max_genus {
            for &g in s.generators() {
                if g as i64 > s.frobenius() {
                    let mut gaps = s.gaps().to_vec();
                    gaps.push(g);
                    stack.push(NumericalSemigroup::from_gaps(&gaps).unwrap());
                }
            }
        }
        out.push(s);
    }
    out
}

/// Brute-force value set: dense vectors of all monomials in `gens` up to
/// truncation `n`, row-reduced with a plain matrix rank test.
pub fn brute_values(gens: &[Series], n: usize) -> BTreeSet<usize> {
    let dense: Vec<Vec<Rational>> = gens.iter().map(|g| g.dense(n).unwrap()).collect();
    let mut monomials: Vec<Vec<Rational>> = vec![{
        let mut one = vec![Rational::zero(); n + 1];
        one[0] = q(1, 1);
        one
    }];
    let mut frontier = monomials.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &dense {
                let mut p = vec![Rational::zero(); n + 1];
                for (i, a) in m.iter().enumerate() {
                    for (j, b) in g.iter().enumerate() {
                        if i + j <= n {
                            p[i + j] += a * b;
                        }
                    }
                }
                if p.iter().any(|x| !x.is_zero()) && !monomials.contains(&p) {
                    monomials.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    // elements of order >= k form the kernel of the projection to
    // coordinates < k, so k is a value iff that projection gains rank at k + 1
    let rank_below = |k: usize| {
        let rows: Vec<Vec<Rational>> = monomials.iter().map(|m| m[..k].to_vec()).collect();
        QMatrix::from_rows_with_cols(rows, k).unwrap().rank()
    };
    let ranks: Vec<usize> = (0..=n + 1).map(rank_below).collect();
    let mut values = BTreeSet::new();
    for k in 0..=n {
        if ranks[k + 1] > ranks[k] {
            values.insert(k);
        }
    }
    values
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let n: i64 = rng.gen_range(-3..=3);
    let d: i64 = rng.gen_range(1..=3);
    q(n, d)
}

/// A random algebra with `δ ≤ max_genus`: monomial generators of a random
/// semigroup plus random rational tails.
pub fn random_algebra<R: Rng>(rng: &mut R, pool: &[NumericalSemigroup]) -> AlgebraInput {
    let s = &pool[rng.gen_range(0..pool.len())];
    let tail_end = s.conductor() + 3;
    let gens: Vec<Series> = s
        .generators()
        .iter()
        .map(|&a| {
            let mut terms = vec![(a, q(1, 1))];
            for k in a + 1..tail_end.max(a + 2) {
                if rng.gen_bool(0.4) {
                    terms.push((k, small_rational(rng)));
                }
            }
            Series::from_terms(terms)
        })
        .collect();
    AlgebraInput::new(gens, "random").unwrap()
}

/// Random operator without constant term.
pub fn random_op<R: Rng>(rng: &mut R, max_deg: usize) -> DiffOp {
    let mut terms: Vec<(usize, Rational)> = Vec::new();
    for k in 1..=max_deg {
        if rng.gen_bool(0.5) {
            terms.push((k, small_rational(rng)));
        }
    }
    DiffOp::from_terms(terms)
}

/// Definitional algebra-forming test: parametrize `{f ∈ B : V ⊥ f = 0}`
/// by the staircase basis modulo `t^len` and check `V ⊥ f_a f_b = 0` on a
/// basis of the solution space.
pub fn brute_af(v: &[DiffOp], s: &Staircase) -> bool {
    let deg = v.iter().filter_map(DiffOp::degree).max().unwrap_or(0);
    let len = s.conductor().max(deg + 1);
    let mut basis: Vec<Series> = Vec::new();
    for k in 1..len {
        if let Some(e) = s.element(k) {
            basis.push(e);
        }
    }
    let rows: Vec<Vec<Rational>> = v
        .iter()
        .map(|g| basis.iter().map(|b| g.perp(b).unwrap()).collect())
        .collect();
    let null = if rows.is_empty() {
        QMatrix::identity(basis.len()).to_rows()
    } else {
        QMatrix::from_rows_with_cols(rows, basis.len())
            .unwrap()
            .nullspace()
    };
    let elems: Vec<Series> = null
        .iter()
        .map(|w| {
            w.iter()
                .zip(&basis)
                .fold(Series::polynomial(vec![]), |acc, (c, b)| {
                    acc.add(&b.scale(c))
                })
        })
        .collect();
    for a in 0..elems.len() {
        for b in a..elems.len() {
            let p = elems[a].mul(&elems[b]);
            if v.iter().any(|g| !g.perp(&p).unwrap().is_zero()) {
                return false;
            }
        }
    }
    true
}
