//! Degree sequences and Herzog-Kühl pure diagrams.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::betti::BettiDiagram;
use crate::error::{Error, Result};
use crate::Rational;

/// A strictly increasing, nonempty sequence `d_0 < ... < d_{p-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDegreeSequence(degrees));
        }
        Ok(Self(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; sequences are nonempty.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Adds `k` to every degree (`k` may be negative).
    pub fn shifted(&self, k: i64) -> Result<Self> {
        let degrees = self
            .0
            .iter()
            .map(|&d| u32::try_from(d as i64 + k))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidParameter(format!("shift {k} takes {self} below zero")))?;
        Self::new(degrees)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Partial order on degree sequences. Componentwise for equal lengths;
/// a shorter sequence is never below a longer one.
pub fn seq_leq(s: &DegreeSequence, t: &DegreeSequence) -> bool {
    s.len() >= t.len() && t.0.iter().zip(&s.0).all(|(b, a)| a <= b)
}

/// `pi_d` with the smallest positive integer entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PureDiagram {
    seq: DegreeSequence,
    lambda: BigInt,
    entries: Vec<BigInt>,
}

fn abs_product(seq: &DegreeSequence, i: usize) -> BigInt {
    let di = seq.0[i] as i64;
    seq.0
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .fold(BigInt::one(), |acc, (_, &dk)| acc * BigInt::from((di - dk as i64).abs()))
}

impl PureDiagram {
    pub fn new(seq: &DegreeSequence) -> Self {
        let products: Vec<BigInt> = (0..seq.len()).map(|i| abs_product(seq, i)).collect();
        let lambda = products.iter().fold(BigInt::one(), |acc, p| acc.lcm(p));
        let entries = products.iter().map(|p| &lambda / p).collect();
        Self { seq: seq.clone(), lambda, entries }
    }

    pub fn seq(&self) -> &DegreeSequence {
        &self.seq
    }

    pub fn lambda(&self) -> &BigInt {
        &self.lambda
    }

    /// Entry at `(i, d_i)`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// The same diagram scaled to `lambda = 1`.
    pub fn unit_entries(&self) -> Vec<Rational> {
        self.entries.iter().map(|e| Rational::new(e.clone(), self.lambda.clone())).collect()
    }

    pub fn to_betti(&self, n: usize) -> BettiDiagram {
        BettiDiagram::from_entries(
            n,
            self.entries
                .iter()
                .zip(self.seq.degrees())
                .enumerate()
                .map(|(i, (e, &d))| ((i, d), Rational::from_integer(e.clone()))),
        )
    }
}

/// Per-column minimal degrees of a diagram.
pub fn top_degree_sequence(b: &BettiDiagram) -> Result<DegreeSequence> {
    let mut degrees: Vec<u32> = Vec::new();
    for (&(i, j), v) in b.entries() {
        if v.is_zero() {
            continue;
        }
        if i == degrees.len() {
            degrees.push(j);
        } else if i > degrees.len() {
            return Err(Error::NotDecomposable {
                reason: format!("column {} is empty but column {i} is not", degrees.len()),
            });
        }
    }
    if degrees.is_empty() {
        return Err(Error::NotDecomposable { reason: "diagram is zero".into() });
    }
    DegreeSequence::new(degrees.clone())
        .map_err(|_| Error::NotDecomposable { reason: format!("top degrees {degrees:?} are not strictly increasing") })
}
