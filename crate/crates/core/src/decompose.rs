//! Greedy Boij-Söderberg decomposition.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::betti::BettiDiagram;
use crate::error::{Error, Result};
use crate::pure_diagram::{seq_leq, top_degree_sequence, DegreeSequence, PureDiagram};
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Summand {
    /// Coefficient against the lcm-normalized pure diagram.
    pub coeff: Rational,
    pub seq: DegreeSequence,
}

impl Summand {
    pub fn new(coeff: Rational, seq: DegreeSequence) -> Self {
        Self { coeff, seq }
    }

    /// Coefficient against the `lambda = 1` pure diagram.
    pub fn unit_coeff(&self) -> Rational {
        &self.coeff * Rational::from_integer(PureDiagram::new(&self.seq).lambda().clone())
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} pi{}", self.coeff, self.seq)
    }
}

/// Ordered summand list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LengthFilter {
    Exactly(usize),
    LessThan(usize),
}

impl LengthFilter {
    fn accepts(self, len: usize) -> bool {
        match self {
            LengthFilter::Exactly(k) => len == k,
            LengthFilter::LessThan(k) => len < k,
        }
    }
}

/// Result of [`Decomposition::filter_length`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilteredSlice {
    pub summands: Vec<Summand>,
    /// The kept summands are exactly the first `summands.len()` of the original.
    pub is_prefix: bool,
    /// The kept summands are exactly the last `summands.len()` of the original.
    pub is_suffix: bool,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn sequences(&self) -> Vec<&DegreeSequence> {
        self.summands.iter().map(|s| &s.seq).collect()
    }

    pub fn coefficient_of(&self, seq: &DegreeSequence) -> Option<&Rational> {
        self.summands.iter().find(|s| &s.seq == seq).map(|s| &s.coeff)
    }

    /// `sum coeff * pi_seq` as an `n`-variable diagram.
    pub fn reconstruct(&self, n: usize) -> BettiDiagram {
        let mut out = BettiDiagram::new(n);
        for s in &self.summands {
            let pd = PureDiagram::new(&s.seq);
            for ((i, e), &d) in pd.entries().iter().enumerate().zip(s.seq.degrees()) {
                out.add(i, d, &(&s.coeff * Rational::from_integer(e.clone())));
            }
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { summands: self.summands.iter().map(|s| Summand::new(&s.coeff * c, s.seq.clone())).collect() }
    }

    /// Positive coefficients and strictly increasing sequences.
    pub fn is_chain(&self) -> bool {
        self.summands.iter().all(|s| s.coeff.is_positive())
            && self.summands.windows(2).all(|w| w[0].seq != w[1].seq && seq_leq(&w[0].seq, &w[1].seq))
    }

    pub fn filter_length(&self, filter: LengthFilter) -> FilteredSlice {
        let keep: Vec<bool> = self.summands.iter().map(|s| filter.accepts(s.seq.len())).collect();
        let count = keep.iter().filter(|&&k| k).count();
        FilteredSlice {
            summands: self.summands.iter().zip(&keep).filter(|(_, &k)| k).map(|(s, _)| s.clone()).collect(),
            is_prefix: keep[..count].iter().all(|&k| k),
            is_suffix: keep[keep.len() - count..].iter().all(|&k| k),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.summands {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Repeatedly subtracts the largest multiple of the pure diagram on the top
/// degree sequence until nothing is left.
pub fn bs_decompose(b: &BettiDiagram) -> Result<Decomposition> {
    if b.has_negative_entry() {
        return Err(Error::NotDecomposable { reason: "diagram has a negative entry".into() });
    }
    let mut rest = b.clone();
    let mut summands = Vec::new();
    let budget = b.len();
    while !rest.is_zero() {
        if summands.len() >= budget {
            return Err(Error::Invariant("greedy decomposition did not terminate".into()));
        }
        let seq = top_degree_sequence(&rest)?;
        let pd = PureDiagram::new(&seq);
        let alpha = pd
            .entries()
            .iter()
            .zip(seq.degrees())
            .enumerate()
            .map(|(i, (e, &d))| rest.get(i, d) / Rational::from_integer(e.clone()))
            .min()
            .expect("sequence is nonempty");
        debug_assert!(alpha.is_positive());
        for (i, (e, &d)) in pd.entries().iter().zip(seq.degrees()).enumerate() {
            rest.add(i, d, &-(&alpha * Rational::from_integer(e.clone())));
        }
        if let Some((&(i, j), v)) = rest.entries().find(|(_, v)| v.is_negative()) {
            return Err(Error::NotDecomposable {
                reason: format!("subtracting {alpha} pi{seq} leaves {v} at ({i},{j})"),
            });
        }
        summands.push(Summand::new(alpha, seq));
    }
    debug_assert!(summands.iter().all(|s: &Summand| !s.coeff.is_zero()));
    Ok(Decomposition { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{ek_betti, quotient_diagram};
    use crate::ideal::MonomialIdeal;
    use crate::monomial::Monomial;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    fn seq(d: &[u32]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|e| Monomial::new(e.to_vec()).unwrap()).collect()).unwrap()
    }

    fn eight_tail_diagram() -> BettiDiagram {
        BettiDiagram::from_counts(
            3,
            &[((0, 2), 1), ((0, 3), 3), ((1, 4), 5), ((2, 5), 2), ((0, 8), 9), ((1, 9), 17), ((2, 10), 8)],
        )
    }

    #[test]
    fn small_quotient_example() {
        let i = ideal(&[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0]]);
        let d = bs_decompose(&quotient_diagram(&ek_betti(&i).unwrap())).unwrap();
        assert_eq!(d.summands, vec![Summand::new(q(1, 3), seq(&[0, 2, 3, 4])), Summand::new(q(2, 3), seq(&[0, 2, 3]))]);
        let unit: Vec<Rational> = d.summands.iter().map(Summand::unit_coeff).collect();
        assert_eq!(unit, vec![q(8, 1), q(4, 1)]);
    }

    #[test]
    fn worked_chain() {
        let d = bs_decompose(&eight_tail_diagram()).unwrap();
        let expected = [
            (q(1, 1), vec![2, 4, 5]),
            (q(2, 7), vec![3, 4, 10]),
            (q(9, 7), vec![3, 9, 10]),
            (q(8, 1), vec![8, 9]),
            (q(1, 1), vec![8]),
        ];
        assert_eq!(d.len(), expected.len());
        for (s, (c, e)) in d.summands.iter().zip(&expected) {
            assert_eq!((&s.coeff, s.seq.degrees()), (c, e.as_slice()));
        }
        assert!(d.is_chain());
        assert_eq!(d.reconstruct(3), eight_tail_diagram());
    }

    #[test]
    fn pure_input_is_one_summand() {
        let s = seq(&[2, 4, 5]);
        let b = PureDiagram::new(&s).to_betti(3).scaled(&q(5, 1));
        assert_eq!(bs_decompose(&b).unwrap().summands, vec![Summand::new(q(5, 1), s)]);
    }

    #[test]
    fn length_filter() {
        let d = bs_decompose(&eight_tail_diagram()).unwrap();
        let tail = d.filter_length(LengthFilter::LessThan(3));
        assert_eq!(tail.summands, d.summands[3..].to_vec());
        assert!(tail.is_suffix && !tail.is_prefix);
        let head = d.filter_length(LengthFilter::Exactly(3));
        assert_eq!(head.summands, d.summands[..3].to_vec());
        assert!(head.is_prefix && !head.is_suffix);

        let koszul = quotient_diagram(&ek_betti(&MonomialIdeal::power_of_maximal(3, 1).unwrap()).unwrap());
        let k = bs_decompose(&koszul).unwrap();
        assert!(k.filter_length(LengthFilter::Exactly(1)).summands.is_empty());
    }

    #[test]
    fn rejects_out_of_scope_diagrams() {
        let gap = BettiDiagram::from_counts(3, &[((0, 2), 1), ((2, 5), 1)]);
        assert!(matches!(bs_decompose(&gap), Err(Error::NotDecomposable { .. })));
        // (x, y) over three variables is fine; a linear column followed by a lower one is not.
        let bad = BettiDiagram::from_counts(3, &[((0, 3), 1), ((1, 3), 1)]);
        assert!(matches!(bs_decompose(&bad), Err(Error::NotDecomposable { .. })));
        // Column 0 empties first and leaves a gap.
        let gap_later = BettiDiagram::from_counts(2, &[((0, 0), 1), ((1, 1), 2)]);
        assert!(matches!(bs_decompose(&gap_later), Err(Error::NotDecomposable { .. })));
        let negative = BettiDiagram::from_counts(2, &[((0, 0), -1)]);
        assert!(matches!(bs_decompose(&negative), Err(Error::NotDecomposable { .. })));
        assert!(bs_decompose(&BettiDiagram::new(3)).unwrap().is_empty());
    }

    fn sequence() -> impl Strategy<Value = DegreeSequence> {
        proptest::collection::btree_set(0u32..12, 1..4)
            .prop_map(|s| DegreeSequence::new(s.into_iter().collect()).unwrap())
    }

    proptest! {
        #[test]
        fn chain_combinations_decompose_back(
            mut seqs in proptest::collection::vec(sequence(), 1..4),
            coeffs in proptest::collection::vec((1i64..20, 1i64..20), 4),
            scale in (1i64..9, 1i64..9),
        ) {
            // Keep a strictly increasing chain of equal length sequences.
            let p = seqs[0].len();
            seqs.retain(|s| s.len() == p);
            seqs.sort();
            seqs.dedup();
            let mut chain: Vec<DegreeSequence> = Vec::new();
            for s in seqs {
                if chain.last().is_none_or(|l| seq_leq(l, &s) && *l != s) {
                    chain.push(s);
                }
            }
            let d = Decomposition {
                summands: chain.iter().zip(&coeffs).map(|(s, &(a, b))| Summand::new(q(a, b), s.clone())).collect(),
            };
            let b = d.reconstruct(4);
            let got = bs_decompose(&b).unwrap();
            prop_assert_eq!(got.reconstruct(4), b.clone());
            prop_assert!(got.is_chain());
            prop_assert!(got.len() <= b.len());

            let c = q(scale.0, scale.1);
            let scaled = bs_decompose(&b.scaled(&c)).unwrap();
            prop_assert_eq!(scaled, got.scaled(&c));
        }
    }
}
