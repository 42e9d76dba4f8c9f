//! Structural invariants of lex ideals and the Betti-number dominance of
//! lexifications.

use num_traits::One;

use crate::betti::{ek_betti, mapping_cone_betti};
use crate::ideal::MonomialIdeal;
use crate::verify::report::{CheckKind, TheoremReport, Verdict, Witness};
use crate::Rational;

/// `beta(L)` from EK equals the mapping cone of `beta(a)(-1)` and `beta(J)`.
pub fn ek_vs_cone(l: &MonomialIdeal) -> TheoremReport {
    let r = TheoremReport::new(CheckKind::EkVsCone, l);
    if !l.is_lex_segment() {
        return r.excluded("not a lex-segment ideal");
    }
    if l.is_unit() {
        return r.vacuous("L is the unit ideal");
    }
    let split = match l.split_x() {
        Ok(s) => s,
        Err(e) => return r.fail(Witness::message(e.to_string())),
    };
    let Some(j) = split.j.as_ref().filter(|_| !split.a.is_unit()) else {
        return r.vacuous("a is the unit ideal or J = 0");
    };
    let diagrams = (ek_betti(&split.a), ek_betti(j), ek_betti(l));
    let (a, c, direct) = match diagrams {
        (Ok(a), Ok(c), Ok(d)) => (a, c, d),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return r.fail(Witness::message(e.to_string())),
    };
    let cone = mapping_cone_betti(&a, &c);
    if cone == direct {
        return r.with_verdict(Verdict::Pass);
    }
    let key = direct
        .entries()
        .map(|(k, _)| *k)
        .chain(cone.entries().map(|(k, _)| *k))
        .find(|&(i, j)| direct.get(i, j) != cone.get(i, j))
        .expect("diagrams differ somewhere");
    r.fail(Witness::new(
        format!("beta_{{{},{}}}(L)", key.0, key.1),
        None,
        direct.get(key.0, key.1),
        cone.get(key.0, key.1),
    ))
}

/// Colon ideals stay lex, lex implies stable, and the degree and
/// Betti-number relations between `a` and `J`.
pub fn check_lemmas(l: &MonomialIdeal) -> TheoremReport {
    let r = TheoremReport::new(CheckKind::Lemmas, l);
    if !l.is_lex_segment() {
        return r.excluded("not a lex-segment ideal");
    }
    if l.is_unit() {
        return r.vacuous("L is the unit ideal");
    }
    if let Some(u) = l.stability_witness() {
        return r.fail(Witness::new("lex ideal is stable", None, "stable", format!("exchange fails at {u}")));
    }
    for i in 1..=l.num_vars() {
        match l.colon_variable(i) {
            Ok(c) if c.is_lex_segment() => {}
            Ok(c) => return r.fail(Witness::new(format!("L:(x_{i}) is lex"), None, "lex", c)),
            Err(e) => return r.fail(Witness::message(e.to_string())),
        }
    }
    let split = match l.split_x() {
        Ok(s) => s,
        Err(e) => return r.fail(Witness::message(e.to_string())),
    };
    let (a, j) = (&split.a, split.j.as_ref());
    if l.g_min() >= 2 && !a.is_unit() && l.g_min() != a.g_min() + 1 {
        return r.fail(Witness::new("G_min(L) = G_min(a) + 1", None, a.g_min() + 1, l.g_min()));
    }
    if let Some(j) = j {
        if !a.is_unit() && j.g_min() < a.g_max() + 1 {
            return r.fail(Witness::new("G_min(J) >= G_max(a) + 1", None, format!(">= {}", a.g_max() + 1), j.g_min()));
        }
        if !j.is_stable() {
            return r.fail(Witness::message(format!("J = {j} is not stable")));
        }
        if j.num_vars() == 2 {
            let c = match ek_betti(j) {
                Ok(c) => c,
                Err(e) => return r.fail(Witness::message(e.to_string())),
            };
            let k = j.g_min();
            if c.get(0, k) != c.get(1, k + 1) + Rational::one() {
                return r.fail(Witness::new(
                    "c_{0,k} = c_{1,k+1} + 1",
                    None,
                    c.get(1, k + 1) + Rational::one(),
                    c.get(0, k),
                ));
            }
            for d in (k + 1)..=j.g_max() {
                if c.get(0, d) != c.get(1, d + 1) {
                    return r.fail(Witness::new(
                        format!("c_{{0,{d}}} = c_{{1,{}}}", d + 1),
                        None,
                        c.get(1, d + 1),
                        c.get(0, d),
                    ));
                }
            }
        }
    }
    r.with_verdict(Verdict::Pass)
}

/// Entrywise `beta(I) <= beta(lex(I))` for stable `I`.
pub fn check_bhp_dominance(i: &MonomialIdeal) -> TheoremReport {
    let r = TheoremReport::new(CheckKind::Bhp, i);
    if !i.is_stable() {
        return r.vacuous("not stable");
    }
    let lex = match i.lexify() {
        Ok(l) => l,
        Err(e) => return r.fail(Witness::message(e.to_string())),
    };
    for d in 0..=(lex.g_max().max(i.g_max()) + 2) {
        if lex.hilbert_value(d) != i.hilbert_value(d) {
            return r.fail(Witness::new(
                format!("Hilbert function in degree {d}"),
                None,
                i.hilbert_value(d),
                lex.hilbert_value(d),
            ));
        }
    }
    let (b, bl) = match (ek_betti(i), ek_betti(&lex)) {
        (Ok(b), Ok(bl)) => (b, bl),
        (Err(e), _) | (_, Err(e)) => return r.fail(Witness::message(e.to_string())),
    };
    match b.dominated_by(&bl) {
        Ok(()) => r.with_verdict(Verdict::Pass),
        Err((p, q)) => r.fail(Witness::new(
            format!("beta_{{{p},{q}}} of I vs its lexification {lex}"),
            None,
            format!("<= {}", bl.get(p, q)),
            b.get(p, q),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::verify::report::Outcome;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|e| Monomial::new(e.to_vec()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn cone_and_lemmas_on_a_worked_example() {
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
        assert_eq!(ek_vs_cone(&l).outcome(), Outcome::Pass);
        assert_eq!(check_lemmas(&l).outcome(), Outcome::Pass);
        let max = MonomialIdeal::power_of_maximal(3, 1).unwrap();
        assert_eq!(ek_vs_cone(&max).outcome(), Outcome::Vacuous);
    }

    #[test]
    fn bhp_examples() {
        let max = MonomialIdeal::power_of_maximal(3, 1).unwrap();
        assert!(check_bhp_dominance(&max).passed());
        // (x^2, xy, y^2, xz^2, yz^2, z^3): stable, not lex.
        let i = ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 2], &[0, 1, 2], &[0, 0, 3]]);
        assert!(!i.is_lex_segment());
        let r = check_bhp_dominance(&i);
        assert!(r.passed(), "{r}");
        let lex = i.lexify().unwrap();
        assert_ne!(ek_betti(&i).unwrap(), ek_betti(&lex).unwrap());
        assert_eq!(check_bhp_dominance(&ideal(&[&[1, 0, 1]])).outcome(), Outcome::Vacuous);
    }
}
