//! Monomials over `k[x_1, ..., x_n]` and the graded lexicographic order.
//!
//! Variables are 1-indexed. With at most three variables they are printed as
//! `x`, `y`, `z` (so `x > y > z`); with more they are printed `x1`, `x2`, ...

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Letter aliases used when the ambient ring has at most three variables.
pub const LETTERS: [char; 3] = ['x', 'y', 'z'];

/// An exponent vector with its cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::NoVariables);
        }
        let degree = exponents.iter().sum();
        Ok(Self { exponents, degree })
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::VariableOutOfRange { index: i, n });
        }
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::new(e)
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.num_vars(), found: other.num_vars() });
        }
        Ok(())
    }

    /// Graded lexicographic comparison: total degree first, then the first
    /// differing exponent.
    pub fn glex_compare(&self, other: &Monomial) -> Result<Ordering> {
        self.check_ambient(other)?;
        Ok(self.glex_unchecked(other))
    }

    fn glex_unchecked(&self, other: &Monomial) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exponents.cmp(&other.exponents))
    }

    /// `m(u)`: the largest 1-based index `i` with `x_i | u`.
    pub fn max_index(&self) -> Result<usize> {
        self.exponents.iter().rposition(|&e| e > 0).map(|p| p + 1).ok_or(Error::UnitMonomial)
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `x_i * u`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[i - 1] += 1;
        Monomial { exponents, degree: self.degree + 1 }
    }

    /// `u / x_i`, or `None` when `x_i` does not divide `u`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponents[i - 1] == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[i - 1] -= 1;
        Some(Monomial { exponents, degree: self.degree - 1 })
    }

    /// The stable-exchange monomial `x_i * u / x_{m(u)}`.
    pub fn exchange(&self, i: usize) -> Result<Monomial> {
        let m = self.max_index()?;
        let lowered = self.div_var(m).expect("x_m(u) divides u");
        Ok(lowered.mul_var(i))
    }

    /// Drops the first variable. The caller guarantees `x_1` does not divide `u`.
    pub(crate) fn without_first(&self) -> Result<Monomial> {
        debug_assert_eq!(self.exponents[0], 0);
        Monomial::new(self.exponents[1..].to_vec())
    }

    /// Embeds into one more variable placed in front.
    pub(crate) fn with_first(&self, exponent: u32) -> Monomial {
        let mut exponents = Vec::with_capacity(self.exponents.len() + 1);
        exponents.push(exponent);
        exponents.extend_from_slice(&self.exponents);
        Monomial { exponents, degree: self.degree + exponent }
    }
}

impl Ord for Monomial {
    /// Glex order. Monomials over different ambients compare by variable
    /// count first so that the order stays total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.num_vars().cmp(&other.num_vars()).then_with(|| self.glex_unchecked(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in `n` variables, glex-descending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, remaining: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Monomial::new(prefix.clone()).expect("nonempty"));
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            fill(prefix, remaining - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        fill(&mut Vec::with_capacity(n), d, n, &mut out);
    }
    out
}

/// Name of variable `x_i` in an `n`-variable ring.
pub fn variable_name(n: usize, i: usize) -> String {
    if n <= LETTERS.len() {
        LETTERS[i - 1].to_string()
    } else {
        format!("x{i}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let n = self.num_vars();
        let mut first = true;
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if n > LETTERS.len() && !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", variable_name(n, idx + 1))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
