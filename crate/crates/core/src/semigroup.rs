//! Numerical semigroups and the monomial algebras `k[[D]]`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::inverse::InverseSystem;
use crate::series::DiffOp;
use crate::subalgebra::AlgebraInput;

/// A submonoid of `ℕ` with finite complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    conductor: usize,
    gaps: Vec<usize>,
}

fn sieve(gens: &[usize]) -> (Vec<bool>, usize) {
    let m = *gens.iter().min().expect("nonempty");
    let mut member = vec![true];
    if m == 1 {
        return (member, 0);
    }
    let mut run = 0;
    let mut k = 0;
    loop {
        k += 1;
        let inside = gens.iter().any(|&g| g <= k && member[k - g]);
        member.push(inside);
        if inside {
            run += 1;
            if run == m {
                return (member, k + 1 - m);
            }
        } else {
            run = 0;
        }
    }
}

impl NumericalSemigroup {
    /// Semigroup generated by `gens`; the generators are minimalized.
    pub fn from_generators(gens: &[usize]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("no generators".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive".into()));
        }
        let g = gens.iter().fold(0usize, |a, &b| a.gcd(&b));
        if g != 1 {
            return Err(Error::NonCoprime { gcd: g });
        }
        let (member, conductor) = sieve(gens);
        let gaps: Vec<usize> = (0..conductor).filter(|&k| !member[k]).collect();
        let mut s = NumericalSemigroup {
            generators: Vec::new(),
            conductor,
            gaps,
        };
        s.generators = s.minimal_generators();
        Ok(s)
    }

    /// Semigroup with the given gap set, if that set is the complement of a
    /// semigroup.
    pub fn from_gaps(gaps: &[usize]) -> Result<Self> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidInput("0 cannot be a gap".into()));
        }
        let conductor = gaps.last().map_or(0, |g| g + 1);
        let s = NumericalSemigroup {
            generators: Vec::new(),
            conductor,
            gaps,
        };
        for a in 1..conductor {
            for b in a..conductor - a {
                if s.contains(a) && s.contains(b) && !s.contains(a + b) {
                    return Err(Error::InvalidInput(format!(
                        "{a} and {b} are elements but {} is a gap",
                        a + b
                    )));
                }
            }
        }
        let generators = s.minimal_generators();
        Ok(NumericalSemigroup { generators, ..s })
    }

    fn minimal_generators(&self) -> Vec<usize> {
        let e0 = self.e0_raw();
        let mut gens = Vec::new();
        for v in 1..(self.conductor + e0).max(2) {
            if !self.contains(v) {
                continue;
            }
            let decomposable = (1..=v / 2).any(|a| self.contains(a) && self.contains(v - a));
            if !decomposable {
                gens.push(v);
            }
        }
        gens
    }

    fn e0_raw(&self) -> usize {
        (1..).find(|&v| self.contains(v)).expect("cofinite")
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Multiplicity, the least positive element.
    pub fn e0(&self) -> usize {
        self.generators[0]
    }

    /// Largest gap, or `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= self.conductor || self.gaps.binary_search(&v).is_err()
    }

    /// `t ∈ D ⇔ c-1-t ∉ D` for `0 ≤ t ≤ c-1`.
    pub fn is_symmetric(&self) -> bool {
        let c = self.conductor;
        (0..c).all(|t| self.contains(t) != self.contains(c - 1 - t))
    }

    /// `B⊥` of `k[[D]]`: the monomials `u^i` for the gaps `i`.
    pub fn monomial_inverse_system(&self) -> InverseSystem {
        let ops: Vec<DiffOp> = self.gaps.iter().map(|&i| DiffOp::monomial(i)).collect();
        InverseSystem::from_ops(&ops, self.conductor)
    }

    /// Three independent Gorenstein tests. They always agree.
    pub fn gorenstein_check(&self) -> GorensteinCheck {
        let c = self.conductor;
        let symmetric = self.is_symmetric();
        let c_equals_2delta = c == 2 * self.genus();
        // t^(c-1) g(1/t) ∈ k[[D]] for g = u^i, i a gap
        let palindromic_inverse = self.gaps.iter().all(|&i| self.contains(c - 1 - i));
        debug_assert!(
            symmetric == c_equals_2delta && symmetric == palindromic_inverse,
            "Gorenstein criteria disagree for {:?}",
            self.generators
        );
        GorensteinCheck {
            symmetric,
            c_equals_2delta,
            palindromic_inverse,
        }
    }

    /// `k[[t^a : a ∈ generators]]`.
    pub fn monomial_algebra(&self) -> AlgebraInput {
        AlgebraInput::monomial(&self.generators).expect("positive generators")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinCheck {
    pub symmetric: bool,
    pub c_equals_2delta: bool,
    pub palindromic_inverse: bool,
}

impl GorensteinCheck {
    pub fn all(&self) -> bool {
        self.symmetric && self.c_equals_2delta && self.palindromic_inverse
    }
}

/// Characteristic exponents `{e0; β₁, …, β_g}` of a plane branch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characteristic {
    pub e0: usize,
    pub betas: Vec<usize>,
    /// `n_ν = e_{ν-1} / e_ν` with `e_ν = gcd(e0, β₁, …, β_ν)`.
    pub n: Vec<usize>,
    /// `m_ν = β_ν / e_ν`, so that `β_ν / e0 = m_ν / (n₁ ⋯ n_ν)`.
    pub m: Vec<usize>,
}

impl Characteristic {
    pub fn new(e0: usize, betas: Vec<usize>) -> Result<Self> {
        if e0 == 0 {
            return Err(Error::InvalidCharacteristic("e0 must be positive".into()));
        }
        if betas.first().is_some_and(|&b| b <= e0) {
            return Err(Error::InvalidCharacteristic("β₁ must exceed e0".into()));
        }
        if betas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCharacteristic(
                "exponents must be strictly increasing".into(),
            ));
        }
        let mut e = e0;
        let mut n = Vec::new();
        let mut m = Vec::new();
        for &b in &betas {
            let next = e.gcd(&b);
            if next == e {
                return Err(Error::InvalidCharacteristic(format!(
                    "β = {b} does not lower the gcd {e}"
                )));
            }
            n.push(e / next);
            m.push(b / next);
            e = next;
        }
        if e != 1 {
            return Err(Error::InvalidCharacteristic(format!(
                "gcd of e0 and the exponents is {e}, not 1"
            )));
        }
        Ok(Characteristic { e0, betas, n, m })
    }

    pub fn genus(&self) -> usize {
        self.betas.len()
    }
}

/// Exponents of the saturation and the semigroup they generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Saturation {
    /// The full exponent list before minimalization, sorted.
    pub exponents: Vec<usize>,
    pub semigroup: NumericalSemigroup,
}

/// Monomial saturation generated by `t^e0`, `t^(s n_{ν+1} ⋯ n_g)` for
/// `m_ν ≤ s ≤ ⌊m_{ν+1} / n_{ν+1}⌋`, and `t^(m_g + i)` for `0 ≤ i < e0`.
pub fn saturation_from_characteristic(ch: &Characteristic) -> Result<Saturation> {
    let g = ch.genus();
    let mut exps = vec![ch.e0];
    if g > 0 {
        for nu in 0..g - 1 {
            let tail: usize = ch.n[nu + 1..].iter().product();
            let hi = ch.m[nu + 1] / ch.n[nu + 1];
            for s in ch.m[nu]..=hi {
                exps.push(s * tail);
            }
        }
        let mg = ch.m[g - 1];
        exps.extend((0..ch.e0).map(|i| mg + i));
    }
    exps.sort_unstable();
    exps.dedup();
    let semigroup = NumericalSemigroup::from_generators(&exps)?;
    Ok(Saturation {
        exponents: exps,
        semigroup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let s = NumericalSemigroup::from_generators(&[4, 6, 9]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 7, 11]);
        assert_eq!((s.conductor(), s.genus()), (12, 6));
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!((s.gaps(), s.conductor()), (&[1usize][..], 2));
        assert!(matches!(
            NumericalSemigroup::from_generators(&[2, 4]),
            Err(Error::NonCoprime { gcd: 2 })
        ));
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!((s.conductor(), s.genus(), s.frobenius()), (0, 0, -1));
        let s = NumericalSemigroup::from_generators(&[3, 5, 6, 9, 10]).unwrap();
        assert_eq!(s.generators(), &[3, 5]);
    }

    #[test]
    fn from_gaps_round_trip() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 3, 5, 7, 11]).unwrap();
        assert_eq!(s.generators(), &[4, 6, 9]);
        assert!(NumericalSemigroup::from_gaps(&[1, 3]).is_ok());
        assert!(NumericalSemigroup::from_gaps(&[2]).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let sym = |g: &[usize]| {
            NumericalSemigroup::from_generators(g)
                .unwrap()
                .is_symmetric()
        };
        assert!(sym(&[4, 6, 9]));
        assert!(!sym(&[4, 7, 9]));
        assert!(sym(&[2, 3]));
    }

    #[test]
    fn monomial_inverse_systems() {
        let v = NumericalSemigroup::from_generators(&[4, 7, 9])
            .unwrap()
            .monomial_inverse_system();
        let want: Vec<DiffOp> = [1, 2, 3, 5, 6, 10]
            .iter()
            .map(|&i| DiffOp::monomial(i))
            .collect();
        assert_eq!(v.basis(), want.as_slice());
        let v = NumericalSemigroup::from_generators(&[2, 3])
            .unwrap()
            .monomial_inverse_system();
        assert_eq!(v.basis(), &[DiffOp::monomial(1)]);
        let v = NumericalSemigroup::from_generators(&[4, 6, 9])
            .unwrap()
            .monomial_inverse_system();
        assert!(v.contains(&DiffOp::monomial(11)));
        assert_eq!(v.dim(), 6);
    }

    #[test]
    fn gorenstein_examples() {
        let check = |g: &[usize]| {
            NumericalSemigroup::from_generators(g)
                .unwrap()
                .gorenstein_check()
        };
        assert!(check(&[4, 6, 9]).all());
        let c = check(&[4, 7, 9]);
        assert!(!c.symmetric && !c.c_equals_2delta && !c.palindromic_inverse);
        assert!(check(&[2, 5]).all());
    }

    #[test]
    fn characteristic_normalization() {
        let ch = Characteristic::new(6, vec![8, 11]).unwrap();
        assert_eq!(ch.n, vec![3, 2]);
        assert_eq!(ch.m, vec![4, 11]);
        assert!(Characteristic::new(6, vec![8]).is_err());
        assert!(Characteristic::new(6, vec![9, 8]).is_err());
        assert!(Characteristic::new(4, vec![6, 8, 9]).is_err());
    }

    #[test]
    fn saturation_examples() {
        let sat = |e0, b: Vec<usize>| {
            saturation_from_characteristic(&Characteristic::new(e0, b).unwrap()).unwrap()
        };
        assert_eq!(
            sat(6, vec![8, 11]).semigroup.generators(),
            &[6, 8, 10, 11, 13, 15]
        );
        assert_eq!(sat(2, vec![3]).semigroup.generators(), &[2, 3]);
        assert_eq!(sat(1, vec![]).semigroup.generators(), &[1]);
    }
}
