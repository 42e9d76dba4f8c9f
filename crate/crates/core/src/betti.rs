//! Graded Betti diagrams and the Eliahou-Kervaire formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::Rational;

/// Sparse map `(i, j) -> beta_{i,j}` keyed by homological index and internal
/// degree. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiDiagram {
    n: usize,
    entries: BTreeMap<(usize, u32), Rational>,
}

impl BettiDiagram {
    pub fn new(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    pub fn from_entries<I>(n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, u32), Rational)>,
    {
        let mut d = Self::new(n);
        for (k, v) in entries {
            d.add(k.0, k.1, &v);
        }
        d
    }

    /// Convenience for integer tables.
    pub fn from_counts(n: usize, entries: &[((usize, u32), i64)]) -> Self {
        Self::from_entries(n, entries.iter().map(|&(k, v)| (k, Rational::from_integer(BigInt::from(v)))))
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: u32) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, u32), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, i: usize, j: u32, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn has_negative_entry(&self) -> bool {
        self.entries.values().any(Signed::is_negative)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|v| v.is_integer())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self::from_entries(self.n, self.entries.iter().map(|(&k, v)| (k, v * c)))
    }

    /// Largest homological index carrying an entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Nonzero homological indices, ascending.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.entries.keys().map(|k| k.0).collect();
        cols.dedup();
        cols
    }

    /// Same entries, regarded over `n` variables.
    pub fn embedded(&self, n: usize) -> Self {
        Self { n, entries: self.entries.clone() }
    }

    /// Entrywise `self <= other`; returns the first violating key.
    pub fn dominated_by(&self, other: &BettiDiagram) -> std::result::Result<(), (usize, u32)> {
        match self.entries.iter().find(|(&(i, j), v)| **v > other.get(i, j)) {
            Some((&k, _)) => Err(k),
            None => Ok(()),
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, r| acc * (n - r) as u64 / (r as u64 + 1))
}

/// Eliahou-Kervaire: `beta_{i,i+j}(I) = sum over u in G(I)_j of C(m(u)-1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiDiagram> {
    ideal.require_stable()?;
    let mut diagram = BettiDiagram::new(ideal.num_vars());
    if ideal.is_unit() {
        diagram.add(0, 0, &Rational::one());
        return Ok(diagram);
    }
    for u in ideal.generators() {
        let m = u.max_index()?;
        for i in 0..m {
            let count = Rational::from_integer(BigInt::from(binomial(m - 1, i)));
            diagram.add(i, u.degree() + i as u32, &count);
        }
    }
    Ok(diagram)
}

/// Betti diagram of `L = x a + J` from the mapping cone of
/// `0 -> J(-1) -> a(-1) + J -> L -> 0`:
/// `beta_{i,j}(L) = beta_{i,j-1}(a) + beta_{i,j}(J) + beta_{i-1,j-1}(J)`.
pub fn mapping_cone_betti(a: &BettiDiagram, j: &BettiDiagram) -> BettiDiagram {
    let mut out = BettiDiagram::new(a.num_vars().max(j.num_vars() + 1));
    for (&(i, deg), v) in a.entries() {
        out.add(i, deg + 1, v);
    }
    for (&(i, deg), v) in j.entries() {
        out.add(i, deg, v);
        out.add(i + 1, deg + 1, v);
    }
    out
}

/// Diagram of `R/I` from that of `I`.
pub fn quotient_diagram(ideal_diagram: &BettiDiagram) -> BettiDiagram {
    let mut out = BettiDiagram::new(ideal_diagram.num_vars());
    out.add(0, 0, &Rational::one());
    for (&(i, j), v) in ideal_diagram.entries() {
        out.add(i + 1, j, v);
    }
    out
}

/// Projective dimension of `R/I` for stable `I`: `max m(u)`.
pub fn proj_dim(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_stable()?;
    if ideal.is_unit() {
        return Err(Error::UnitMonomial);
    }
    ideal.generators().iter().map(|u| u.max_index()).try_fold(0, |acc, m| m.map(|m| acc.max(m)))
}

/// Regularity of stable `I`: `max deg u`.
pub fn regularity(ideal: &MonomialIdeal) -> Result<u32> {
    ideal.require_stable()?;
    Ok(ideal.g_max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomials_of_degree, Monomial};

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|e| Monomial::new(e.to_vec()).unwrap()).collect()).unwrap()
    }

    fn yz_power(d: u32) -> MonomialIdeal {
        MonomialIdeal::power_of_maximal(2, d).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(2, 0), 1);
        assert_eq!(binomial(2, 1), 2);
        assert_eq!(binomial(2, 2), 1);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(10, 5), 252);
    }

    #[test]
    fn ek_koszul() {
        let b = ek_betti(&MonomialIdeal::power_of_maximal(3, 1).unwrap()).unwrap();
        assert_eq!(b, BettiDiagram::from_counts(3, &[((0, 1), 3), ((1, 2), 3), ((2, 3), 1)]));
    }

    #[test]
    fn ek_colon_of_example() {
        let a = ideal(&[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        let b = ek_betti(&a).unwrap();
        assert_eq!(b, BettiDiagram::from_counts(3, &[((0, 1), 1), ((0, 2), 3), ((1, 3), 5), ((2, 4), 2)]));
        assert!(b.is_integral());
    }

    #[test]
    fn ek_full_power_in_two_variables() {
        let b = ek_betti(&yz_power(8)).unwrap();
        assert_eq!(b, BettiDiagram::from_counts(2, &[((0, 8), 9), ((1, 9), 8)]));
    }

    #[test]
    fn ek_rejects_non_stable() {
        let err = ek_betti(&ideal(&[&[1, 0, 1]])).unwrap_err();
        assert_eq!(err, Error::NotStable { generator: "xz".into() });
    }

    #[test]
    fn mapping_cone_example() {
        let a = ek_betti(&ideal(&[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]])).unwrap();
        let j = ek_betti(&yz_power(8)).unwrap();
        let l = mapping_cone_betti(&a, &j);
        assert_eq!(
            l,
            BettiDiagram::from_counts(
                3,
                &[((0, 2), 1), ((0, 3), 3), ((1, 4), 5), ((2, 5), 2), ((0, 8), 9), ((1, 9), 17), ((2, 10), 8),]
            )
        );
    }

    #[test]
    fn mapping_cone_with_zero_j_is_a_shift() {
        let a = ek_betti(&MonomialIdeal::power_of_maximal(3, 2).unwrap()).unwrap();
        let l = mapping_cone_betti(&a, &BettiDiagram::new(2));
        for (&(i, j), v) in a.entries() {
            assert_eq!(&l.get(i, j + 1), v);
        }
        assert_eq!(l.len(), a.len());
    }

    #[test]
    fn mapping_cone_matches_ek_for_nine_generators() {
        let l = ideal(&[
            &[2, 0, 0],
            &[1, 2, 0],
            &[1, 1, 1],
            &[1, 0, 2],
            &[0, 4, 0],
            &[0, 3, 1],
            &[0, 2, 2],
            &[0, 1, 6],
            &[0, 0, 9],
        ]);
        let split = l.split_x().unwrap();
        let cone = mapping_cone_betti(&ek_betti(&split.a).unwrap(), &ek_betti(split.j.as_ref().unwrap()).unwrap());
        assert_eq!(cone, ek_betti(&l).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let i = ideal(&[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]);
        let q = quotient_diagram(&ek_betti(&i).unwrap());
        assert_eq!(q, BettiDiagram::from_counts(3, &[((0, 0), 1), ((1, 2), 4), ((2, 3), 4), ((3, 4), 1)]));
        let k = quotient_diagram(&ek_betti(&MonomialIdeal::power_of_maximal(3, 1).unwrap()).unwrap());
        assert_eq!(k, BettiDiagram::from_counts(3, &[((0, 0), 1), ((1, 1), 3), ((2, 2), 3), ((3, 3), 1)]));
        assert_eq!(quotient_diagram(&BettiDiagram::new(3)).get(0, 0), Rational::one());
    }

    #[test]
    fn projdim_and_regularity() {
        let max = MonomialIdeal::power_of_maximal(3, 1).unwrap();
        assert_eq!((proj_dim(&max).unwrap(), regularity(&max).unwrap()), (3, 1));
        let a = ideal(&[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!((proj_dim(&a).unwrap(), regularity(&a).unwrap()), (3, 2));
        let m2 = MonomialIdeal::power_of_maximal(2, 2).unwrap();
        assert_eq!((proj_dim(&m2).unwrap(), regularity(&m2).unwrap()), (2, 2));
        assert!(proj_dim(&ideal(&[&[1, 0, 1]])).is_err());
    }

    #[test]
    fn j_identities_in_two_variables() {
        // c_{0,k} = c_{1,k+1} + 1 and c_{0,j} = c_{1,j+1} above k.
        let j = ideal(&[&[4, 0], &[3, 1], &[2, 2], &[1, 6], &[0, 9]]);
        let c = ek_betti(&j).unwrap();
        let k = j.g_min();
        assert_eq!(c.get(0, k), c.get(1, k + 1) + Rational::one());
        for d in (k + 1)..=j.g_max() {
            assert_eq!(c.get(0, d), c.get(1, d + 1));
        }
    }

    #[test]
    fn alternating_sums_reproduce_hilbert_function() {
        // HF(R/I, d) = sum_j K_j C(d - j + n - 1, n - 1), K_j = sum_i (-1)^i beta_{i,j}(R/I).
        let cases = [
            ideal(&[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]),
            ideal(&[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]),
            MonomialIdeal::power_of_maximal(3, 3).unwrap(),
        ];
        for i in &cases {
            let q = quotient_diagram(&ek_betti(i).unwrap());
            let mut k: BTreeMap<u32, Rational> = BTreeMap::new();
            for (&(h, j), v) in q.entries() {
                let signed = if h % 2 == 0 { v.clone() } else { -v.clone() };
                *k.entry(j).or_insert_with(Rational::zero) += signed;
            }
            for d in 0..10u32 {
                let predicted: Rational = k
                    .iter()
                    .filter(|(&j, _)| j <= d)
                    .map(|(&j, kj)| kj * Rational::from_integer(BigInt::from(binomial((d - j) as usize + 2, 2))))
                    .sum();
                let actual = monomials_of_degree(3, d).len() - i.hilbert_value(d);
                assert_eq!(predicted, Rational::from_integer(BigInt::from(actual)), "{i} degree {d}");
            }
        }
    }
}
