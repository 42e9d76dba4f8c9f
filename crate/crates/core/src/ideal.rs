//! Monomial ideals given by their minimal generators.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};

/// A monomial ideal stored as its minimal generating set, sorted by
/// ascending degree and glex-descending within a degree. The unit ideal is the single generator `1`; the zero
/// ideal is not represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// The canonical splitting `L = x_1 * a + J` of a lex-segment ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSplit {
    /// `L : (x_1)`, possibly the unit ideal.
    pub a: MonomialIdeal,
    /// The `x_1`-free generators of `L` as an ideal of `k[x_2, ..., x_n]`;
    /// `None` is the zero ideal.
    pub j: Option<MonomialIdeal>,
}

/// Ascending degree, then glex-descending.
pub fn generator_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

impl MonomialIdeal {
    /// Removes every generator divisible by another one.
    pub fn minimalize(gens: Vec<Monomial>) -> Result<Self> {
        let n = gens.first().ok_or(Error::EmptyIdeal)?.num_vars();
        if let Some(bad) = gens.iter().find(|g| g.num_vars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.num_vars() });
        }
        let mut sorted = gens;
        // A divisor is always seen before its multiples.
        sorted.sort_by(generator_order);
        sorted.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        Ok(Self { n, gens: kept })
    }

    pub fn unit(n: usize) -> Result<Self> {
        Ok(Self { n, gens: vec![Monomial::one(n)?] })
    }

    /// `(x_1, ..., x_n)^d`.
    pub fn power_of_maximal(n: usize, d: u32) -> Result<Self> {
        Self::minimalize(monomials_of_degree(n, d))
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// `G(I)` in generator order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// `G(I)_j`.
    pub fn generators_of_degree(&self, j: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == j)
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn g_min(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).min().unwrap_or(0)
    }

    pub fn g_max(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// Degree-`d` monomials of the ideal, glex-descending.
    pub fn monomials_at_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d).into_iter().filter(|u| self.contains(u)).collect()
    }

    /// Number of degree-`d` monomials in the ideal (not the quotient).
    pub fn hilbert_value(&self, d: u32) -> usize {
        monomials_of_degree(self.n, d).iter().filter(|u| self.contains(u)).count()
    }

    /// Every degree piece in `[G_min, G_max]` is an initial glex segment.
    pub fn is_lex_segment(&self) -> bool {
        (self.g_min()..=self.g_max()).all(|d| {
            let mut seen_gap = false;
            for u in monomials_of_degree(self.n, d) {
                match (self.contains(&u), seen_gap) {
                    (true, true) => return false,
                    (false, _) => seen_gap = true,
                    _ => {}
                }
            }
            true
        })
    }

    /// First generator violating the exchange condition, if any.
    pub fn stability_witness(&self) -> Option<&Monomial> {
        self.gens.iter().filter(|u| !u.is_one()).find(|u| {
            let m = u.max_index().expect("u != 1");
            (1..m).any(|i| !self.contains(&u.exchange(i).expect("u != 1")))
        })
    }

    /// `x_i * u / x_{m(u)}` lies in `I` for every generator `u` and `i < m(u)`.
    pub fn is_stable(&self) -> bool {
        self.stability_witness().is_none()
    }

    pub fn require_stable(&self) -> Result<()> {
        match self.stability_witness() {
            Some(u) => Err(Error::NotStable { generator: u.to_string() }),
            None => Ok(()),
        }
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::VariableOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    /// `I : (x_i)`.
    pub fn colon_variable(&self, i: usize) -> Result<Self> {
        self.check_var(i)?;
        let gens = self.gens.iter().map(|u| u.div_var(i).unwrap_or_else(|| u.clone())).collect();
        Self::minimalize(gens)
    }

    /// `(I, x_i)`.
    pub fn add_variable(&self, i: usize) -> Result<Self> {
        self.check_var(i)?;
        let mut gens = self.gens.clone();
        gens.push(Monomial::var(self.n, i)?);
        Self::minimalize(gens)
    }

    /// Splits a lex-segment ideal as `L = x_1 * a + J`.
    pub fn split_x(&self) -> Result<XSplit> {
        if !self.is_lex_segment() {
            return Err(Error::NotLexSegment);
        }
        if self.is_unit() {
            return Err(Error::InvalidParameter("cannot split the unit ideal".into()));
        }
        let a = self.colon_variable(1)?;
        let free: Vec<Monomial> =
            self.gens.iter().filter(|u| u.exponent(1) == 0).map(Monomial::without_first).collect::<Result<_>>()?;
        let j = if free.is_empty() { None } else { Some(Self::minimalize(free)?) };

        // G(L) = x G(a) ∪ G(J) as sets.
        let mut rebuilt: Vec<Monomial> = a.gens.iter().map(|u| u.mul_var(1)).collect();
        if let Some(j) = &j {
            rebuilt.extend(j.gens.iter().map(|u| u.with_first(0)));
        }
        rebuilt.sort_by(generator_order);
        if rebuilt != self.gens {
            return Err(Error::Invariant(format!("G(L) != x G(a) + G(J) for {self}")));
        }
        Ok(XSplit { a, j })
    }

    /// Re-embeds an ideal of `k[x_2, ..., x_n]` into `k[x_1, ..., x_n]`.
    pub fn embed_with_first(&self) -> Self {
        Self { n: self.n + 1, gens: self.gens.iter().map(|u| u.with_first(0)).collect() }
    }

    /// Contains a pure power of every variable.
    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|v| self.gens.iter().any(|g| g.exponents().iter().enumerate().all(|(k, &e)| k == v || e == 0)))
    }

    /// The lex-segment ideal with the same Hilbert function.
    ///
    /// Degrees are filled from the top of the glex order until the
    /// lex segment in some degree `D >= G_max(I)` grows into exactly
    /// `hilbert_value(I, D + 1)` monomials; Gotzmann persistence then fixes
    /// every higher degree.
    pub fn lexify(&self) -> Result<Self> {
        if self.is_unit() {
            return Self::unit(self.n);
        }
        let g_max = self.g_max();
        let mut gens = Vec::new();
        let mut shadow: HashSet<Monomial> = HashSet::new();
        let mut d = 0;
        loop {
            let all = monomials_of_degree(self.n, d);
            let h = self.hilbert_value(d);
            let segment = &all[..h];
            // Macaulay: the shadow of the previous segment is an initial segment of this one.
            if shadow.len() > h || !segment[..shadow.len()].iter().all(|u| shadow.contains(u)) {
                return Err(Error::Invariant("lex segments are not nested".into()));
            }
            gens.extend(segment.iter().filter(|u| !shadow.contains(*u)).cloned());
            shadow = segment.iter().flat_map(|u| (1..=self.n).map(move |i| u.mul_var(i))).collect();
            if d >= g_max && shadow.len() == self.hilbert_value(d + 1) {
                break;
            }
            d += 1;
        }
        Self::minimalize(gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
