//! Checkers for the beginning (colon by `x`) and end (adding `x`) of the
//! decomposition of a lex ideal.

use crate::betti::{ek_betti, BettiDiagram};
use crate::decompose::{bs_decompose, Decomposition, LengthFilter, Summand};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, XSplit};
use crate::verify::report::{CheckKind, Comparison, TheoremReport, Verdict, Witness};

/// Decomposes and re-checks the reconstruction identity and the chain property.
pub fn decompose_checked(b: &BettiDiagram) -> Result<Decomposition> {
    let d = bs_decompose(b)?;
    if d.reconstruct(b.num_vars()) != *b {
        return Err(Error::Invariant("decomposition does not reconstruct its diagram".into()));
    }
    if !d.is_chain() {
        return Err(Error::Invariant("decomposition is not a chain".into()));
    }
    Ok(d)
}

/// Decomposition of the ideal's own Betti diagram.
pub fn ideal_decomposition(i: &MonomialIdeal) -> Result<Decomposition> {
    decompose_checked(&ek_betti(i)?)
}

fn decompose_or_fail(i: &MonomialIdeal, name: &str) -> std::result::Result<Decomposition, Witness> {
    ideal_decomposition(i).map_err(|e| Witness::message(format!("decomposing beta({name}) = beta{i}: {e}")))
}

/// `L = x(x, y, z^t) + J` with `J != (y,z)^k`, `k = G_min(J)` and `1 < t < k - 1`.
pub fn excluded_family(split: &XSplit) -> Option<String> {
    let j = split.j.as_ref()?;
    let gens = split.a.generators();
    if split.a.num_vars() != 3 || gens.len() != 3 {
        return None;
    }
    let is_pure = |g: &crate::Monomial, v: usize| g.exponents().iter().enumerate().all(|(k, &e)| (k == v) == (e > 0));
    let x = gens.iter().find(|g| is_pure(g, 0) && g.degree() == 1)?;
    let y = gens.iter().find(|g| is_pure(g, 1) && g.degree() == 1)?;
    let zt = gens.iter().find(|g| is_pure(g, 2))?;
    debug_assert!(x != y);
    let t = zt.degree();
    let k = j.g_min();
    let full = MonomialIdeal::power_of_maximal(2, k).ok()?;
    if *j != full && 1 < t && t + 1 < k {
        Some(format!("L = x(x,y,z^{t}) + J with J != (y,z)^{k} and 1 < t < k-1"))
    } else {
        None
    }
}

/// The prefix claim: length-`n` summands of `beta(a)` reappear, shifted by one,
/// at the start of `beta(L)`.
fn prefix_claim(report: TheoremReport, l: &MonomialIdeal) -> TheoremReport {
    let n = l.num_vars();
    if l.is_unit() {
        return report.vacuous("L is the unit ideal");
    }
    let split = match l.split_x() {
        Ok(s) => s,
        Err(e) => return report.fail(Witness::message(format!("splitting L: {e}"))),
    };
    if split.a.is_unit() {
        return report.vacuous("a = L:(x) is the unit ideal");
    }
    let (da, dl) = match (decompose_or_fail(&split.a, "a"), decompose_or_fail(l, "L")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(w), _) | (_, Err(w)) => return report.fail(w),
    };
    let head = da.filter_length(LengthFilter::Exactly(n));
    if head.summands.is_empty() {
        return report.vacuous(format!("beta(a) has no length-{n} summands"));
    }
    let t = head.summands.len() - 1;
    let expected: Vec<Summand> =
        head.summands.iter().map(|s| Summand::new(s.coeff.clone(), s.seq.shifted(1).expect("shift up"))).collect();
    let actual = dl.summands[..dl.len().min(t + 1)].to_vec();
    let mut report = report;
    report.details.push(Comparison {
        label: format!("length-{n} part of beta(a) shifted by 1 vs beginning of beta(L)"),
        expected: expected.clone(),
        actual: actual.clone(),
    });
    if !head.is_prefix {
        return report
            .fail(Witness::message(format!("length-{n} summands of beta(a) do not form a prefix of its chain")));
    }
    for (i, e) in expected.iter().enumerate() {
        let Some(a) = actual.get(i) else {
            return report.fail(Witness::new("beta(L) chain too short", Some(i), &e.seq, "nothing"));
        };
        if a.seq != e.seq {
            return report.fail(Witness::new("degree sequence", Some(i), &e.seq, &a.seq));
        }
        if i < t && a.coeff != e.coeff {
            return report.fail(Witness::new("coefficient", Some(i), &e.coeff, &a.coeff));
        }
        if i == t && a.coeff < e.coeff {
            return report.fail(Witness::new(
                "last shifted coefficient below that of beta(a)",
                Some(i),
                format!(">= {}", e.coeff),
                &a.coeff,
            ));
        }
    }
    report.with_verdict(Verdict::Pass)
}

/// Three-variable statement: `L` lex of codimension 3 with `a != 1`.
pub fn check_theorem1(l: &MonomialIdeal) -> TheoremReport {
    let r = TheoremReport::new(CheckKind::Theorem1, l);
    if l.num_vars() != 3 {
        return r.excluded("stated in three variables");
    }
    if !l.is_lex_segment() {
        return r.excluded("not a lex-segment ideal");
    }
    // Height 3 in k[x,y,z] means m-primary.
    if !l.is_artinian() {
        return r.excluded("not of codimension 3");
    }
    prefix_claim(r, l)
}

/// The same prefix claim for a lex ideal in any number of variables.
pub fn check_corollary(l: &MonomialIdeal) -> TheoremReport {
    let r = TheoremReport::new(CheckKind::Corollary, l);
    if !l.is_lex_segment() {
        return r.excluded("not a lex-segment ideal");
    }
    prefix_claim(r, l)
}

/// Length `< 3` tails of `beta(L)` and `beta(L, x)` agree exactly.
fn tail_claim(report: TheoremReport, l: &MonomialIdeal) -> TheoremReport {
    let lx = match l.add_variable(1) {
        Ok(i) => i,
        Err(e) => return report.fail(Witness::message(e.to_string())),
    };
    let (dl, dlx) = match (decompose_or_fail(l, "L"), decompose_or_fail(&lx, "(L,x)")) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(w), _) | (_, Err(w)) => return report.fail(w),
    };
    let tail_l = dl.filter_length(LengthFilter::LessThan(3));
    let tail_lx = dlx.filter_length(LengthFilter::LessThan(3));
    let mut report = report;
    report.details.push(Comparison {
        label: "length < 3 part of beta(L,x) vs that of beta(L)".into(),
        expected: tail_lx.summands.clone(),
        actual: tail_l.summands.clone(),
    });
    let len = tail_l.summands.len().max(tail_lx.summands.len());
    for i in 0..len {
        match (tail_lx.summands.get(i), tail_l.summands.get(i)) {
            (Some(e), Some(a)) if e == a => {}
            (e, a) => {
                let show =
                    |s: Option<&Summand>| s.map_or("nothing".to_string(), |s| format!("{} pi{}", s.coeff, s.seq));
                return report.fail(Witness::new("tail summand", Some(i), show(e), show(a)));
            }
        }
    }
    if !tail_l.is_suffix || !tail_lx.is_suffix {
        return report.fail(Witness::message("short sequences are not at the end of the chain"));
    }
    report.with_verdict(Verdict::Pass)
}

enum TailSetup {
    Ready(TheoremReport, XSplit),
    Done(TheoremReport),
}

fn tail_setup(r: TheoremReport, l: &MonomialIdeal) -> TailSetup {
    if l.num_vars() != 3 {
        return TailSetup::Done(r.excluded("stated in three variables"));
    }
    if !l.is_lex_segment() {
        return TailSetup::Done(r.excluded("not a lex-segment ideal"));
    }
    if !l.is_artinian() {
        return TailSetup::Done(r.vacuous("not Artinian"));
    }
    if l.is_unit() {
        return TailSetup::Done(r.vacuous("L is the unit ideal"));
    }
    match l.split_x() {
        Err(e) => TailSetup::Done(r.fail(Witness::message(format!("splitting L: {e}")))),
        Ok(s) if s.a.is_unit() => TailSetup::Done(r.vacuous("x lies in L, so L = (L,x)").with_verdict(Verdict::Pass)),
        Ok(s) if s.j.is_none() => TailSetup::Done(r.vacuous("J = 0")),
        Ok(s) => TailSetup::Ready(r, s),
    }
}

/// End of the decomposition. Excluded-family instances are flagged but
/// still evaluated.
pub fn check_theorem2(l: &MonomialIdeal) -> TheoremReport {
    match tail_setup(TheoremReport::new(CheckKind::Theorem2, l), l) {
        TailSetup::Done(r) => r,
        TailSetup::Ready(r, split) => {
            let r = match excluded_family(&split) {
                Some(reason) => r.excluded(reason),
                None => r,
            };
            tail_claim(r, l)
        }
    }
}

/// The tail claim on the excluded family.
pub fn check_conjecture(l: &MonomialIdeal) -> TheoremReport {
    match tail_setup(TheoremReport::new(CheckKind::Conjecture, l), l) {
        TailSetup::Done(r) => r,
        TailSetup::Ready(r, split) => match excluded_family(&split) {
            Some(_) => tail_claim(r, l),
            None => r.excluded("wrong-family: not of the form x(x,y,z^t) + J with J != (y,z)^k, 1 < t < k-1"),
        },
    }
}
