//! Closed-form decomposition of `c(t, s) = x(x, y, z^(t-1)) + (y, z)^s`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::decompose::{Decomposition, Summand};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::pure_diagram::{DegreeSequence, PureDiagram};
use crate::Rational;

fn check_range(t: u32, s: u32) -> Result<()> {
    if s < 2 || t < 1 || t >= s {
        return Err(Error::InvalidParameter(format!("need 1 <= t <= s-1 and s >= 2, got t={t}, s={s}")));
    }
    Ok(())
}

/// `x(x, y, z^(t-1)) + (y, z)^s` in `k[x, y, z]`.
pub fn closed_form_ideal(t: u32, s: u32) -> Result<MonomialIdeal> {
    check_range(t, s)?;
    let mut gens =
        vec![Monomial::new(vec![2, 0, 0])?, Monomial::new(vec![1, 1, 0])?, Monomial::new(vec![1, 0, t - 1])?];
    gens.extend(monomials_of_degree(3, s).into_iter().filter(|u| u.exponent(1) == 0));
    MonomialIdeal::minimalize(gens)
}

/// One displayed summand: a coefficient against a pure diagram that is
/// written with its own (not necessarily lcm) integer entries.
struct Displayed {
    coeff: Rational,
    degrees: Vec<u32>,
    entries: Vec<i64>,
}

fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

fn displayed(t: u32, s: u32) -> Vec<Displayed> {
    let (ti, si) = (t as i64, s as i64);
    let d = |coeff, degrees: [u32; 3], entries: [i64; 3]| Displayed {
        coeff,
        degrees: degrees.to_vec(),
        entries: entries.to_vec(),
    };
    vec![
        d(rat(1, ti), [2, 3, t + 2], [ti - 1, ti, 1]),
        d(rat(1, ti), [2, t + 1, t + 2], [1, ti, ti - 1]),
        d(rat(1, si), [2, t + 1, s + 2], [si - ti + 1, si, ti - 1]),
        d(rat(ti - 1, si), [2, s + 1, s + 2], [1, si, si - 1]),
        d(rat(1, 1), [t, s + 1, s + 2], [1, si - ti + 2, si - ti + 1]),
        Displayed { coeff: rat(si, 1), degrees: vec![s, s + 1], entries: vec![1, 1] },
        Displayed { coeff: rat(1, 1), degrees: vec![s], entries: vec![1] },
    ]
}

/// Rewrites a displayed summand against the lcm-normalized pure diagram.
fn renormalize(d: &Displayed, seq: &DegreeSequence) -> Result<Rational> {
    let pure = PureDiagram::new(seq);
    let mut ratio: Option<Rational> = None;
    for (e, p) in d.entries.iter().zip(pure.entries()) {
        let r = Rational::new(BigInt::from(*e), p.clone());
        match &ratio {
            None => ratio = Some(r),
            Some(q) if *q == r => {}
            Some(_) => {
                return Err(Error::Invariant(format!(
                    "displayed entries {:?} are not a multiple of pi{seq}",
                    d.entries
                )))
            }
        }
    }
    Ok(&d.coeff * ratio.expect("nonempty sequence"))
}

/// The closed-form summand list. Zero coefficients and degenerate sequences
/// are dropped and adjacent equal sequences merged, which covers the
/// coincidences at `t = 1` and `t = 2`.
pub fn closed_form_c(t: u32, s: u32) -> Result<Decomposition> {
    check_range(t, s)?;
    let mut summands: Vec<Summand> = Vec::new();
    for d in displayed(t, s) {
        if d.coeff.is_zero() {
            continue;
        }
        let Ok(seq) = DegreeSequence::new(d.degrees.clone()) else {
            continue;
        };
        let coeff = renormalize(&d, &seq)?;
        match summands.last_mut() {
            Some(last) if last.seq == seq => last.coeff += coeff,
            _ => summands.push(Summand::new(coeff, seq)),
        }
    }
    Ok(Decomposition { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::theorems::ideal_decomposition;

    #[test]
    fn range() {
        assert!(closed_form_c(0, 3).is_err());
        assert!(closed_form_c(3, 3).is_err());
        assert!(closed_form_ideal(1, 1).is_err());
    }

    #[test]
    fn ideal_shape() {
        assert_eq!(closed_form_ideal(3, 4).unwrap().to_string(), "(x^2, xy, xz^2, y^4, y^3z, y^2z^2, yz^3, z^4)");
        assert_eq!(closed_form_ideal(1, 2).unwrap().to_string(), "(x, y^2, yz, z^2)");
        assert!(closed_form_ideal(4, 7).unwrap().is_lex_segment());
    }

    #[test]
    fn matches_greedy_including_degenerate_t() {
        for s in 2..=8 {
            for t in 1..s {
                let expected = closed_form_c(t, s).unwrap();
                let got = ideal_decomposition(&closed_form_ideal(t, s).unwrap()).unwrap();
                assert_eq!(got, expected, "t={t} s={s}");
            }
        }
    }

    #[test]
    fn tail_is_shared_with_lx() {
        let d = closed_form_c(3, 7).unwrap();
        let tail: Vec<String> = d.summands[d.len() - 2..].iter().map(ToString::to_string).collect();
        assert_eq!(tail, ["7 pi(7,8)", "1 pi(7)"]);
    }
}
