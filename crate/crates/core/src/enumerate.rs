//! Exhaustive enumeration of Artinian lex-segment ideals in three variables
//! and the check campaign over them.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::verify::{self, Outcome, TheoremReport, Witness};

/// Lex ideal whose degree-`d` piece, for `d = 1..=sizes.len()`, is the top
/// `sizes[d-1]` monomials. Sizes must be compatible (each at least the size
/// of the previous piece's shadow).
pub fn lex_ideal_from_segment_sizes(n: usize, sizes: &[usize]) -> Result<MonomialIdeal> {
    let mut gens = Vec::new();
    let mut shadow: HashSet<Monomial> = HashSet::new();
    for (k, &t) in sizes.iter().enumerate() {
        let all = monomials_of_degree(n, k as u32 + 1);
        if t > all.len() || t < shadow.len() {
            return Err(Error::InvalidParameter(format!(
                "segment size {t} in degree {} outside [{}, {}]",
                k + 1,
                shadow.len(),
                all.len()
            )));
        }
        let segment = &all[..t];
        gens.extend(segment.iter().filter(|u| !shadow.contains(*u)).cloned());
        shadow = segment.iter().flat_map(|u| (1..=n).map(move |i| u.mul_var(i))).collect();
    }
    MonomialIdeal::minimalize(gens)
}

/// `shadow[d][t]`: size of the shadow of the top-`t` lex segment of degree `d`.
fn shadow_table(n: usize, max_deg: u32) -> Vec<Vec<usize>> {
    (0..=max_deg)
        .map(|d| {
            let all = monomials_of_degree(n, d);
            let mut seen: HashSet<Monomial> = HashSet::new();
            let mut sizes = vec![0];
            for u in &all {
                seen.extend((1..=n).map(|i| u.mul_var(i)));
                sizes.push(seen.len());
            }
            sizes
        })
        .collect()
}

/// Deterministic stream of every Artinian lex-segment ideal of
/// `k[x, y, z]` with `G_max <= max_deg`, ordered lexicographically by the
/// vector of segment sizes.
pub struct ArtinianLexIter {
    max_deg: usize,
    full: Vec<usize>,
    shadow: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    done: bool,
}

impl ArtinianLexIter {
    fn lower(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.shadow[k][self.sizes[k - 1]]
        }
    }

    fn reset_from(&mut self, from: usize) {
        for k in from..self.max_deg {
            self.sizes[k] = if k + 1 == self.max_deg { self.full[k] } else { self.lower(k) };
        }
    }
}

pub fn enumerate_artinian_lex(n: usize, max_deg: u32) -> Result<ArtinianLexIter> {
    if n != 3 {
        return Err(Error::InvalidParameter(format!("enumeration is implemented for 3 variables, not {n}")));
    }
    if max_deg == 0 {
        return Err(Error::InvalidParameter("max_deg must be at least 1".into()));
    }
    let d = max_deg as usize;
    let mut it = ArtinianLexIter {
        max_deg: d,
        full: (1..=max_deg).map(|k| monomials_of_degree(n, k).len()).collect(),
        shadow: shadow_table(n, max_deg),
        sizes: vec![0; d],
        done: false,
    };
    it.reset_from(0);
    Ok(it)
}

impl Iterator for ArtinianLexIter {
    type Item = MonomialIdeal;

    fn next(&mut self) -> Option<MonomialIdeal> {
        if self.done {
            return None;
        }
        let ideal = lex_ideal_from_segment_sizes(3, &self.sizes).expect("sizes respect the shadow bound");
        debug_assert!(ideal.is_lex_segment() && ideal.is_artinian());
        // Odometer over degrees 1..max_deg-1; the top degree stays full.
        let mut k = self.max_deg.saturating_sub(1);
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            if self.sizes[k] < self.full[k] {
                self.sizes[k] += 1;
                self.reset_from(k + 1);
                break;
            }
        }
        Some(ideal)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Check {
    Thm1,
    Thm2,
    Conjecture,
    EkVsCone,
    Bhp,
    Lemmas,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::Thm1, Check::Thm2, Check::Conjecture, Check::EkVsCone, Check::Bhp, Check::Lemmas];

    pub fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Conjecture => "conjecture",
            Check::EkVsCone => "ek_vs_cone",
            Check::Bhp => "bhp",
            Check::Lemmas => "lemmas",
        }
    }

    pub fn run(self, l: &MonomialIdeal) -> TheoremReport {
        match self {
            Check::Thm1 => verify::check_theorem1(l),
            Check::Thm2 => verify::check_theorem2(l),
            Check::Conjecture => verify::check_conjecture(l),
            Check::EkVsCone => verify::ek_vs_cone(l),
            Check::Bhp => verify::check_bhp_dominance(l),
            Check::Lemmas => verify::check_lemmas(l),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub n: usize,
    pub max_deg: u32,
    pub checks: BTreeSet<Check>,
    /// Worker threads; 0 picks the rayon default.
    pub parallelism: usize,
}

impl CampaignConfig {
    pub fn new(max_deg: u32, checks: impl IntoIterator<Item = Check>) -> Self {
        Self { n: 3, max_deg, checks: checks.into_iter().collect(), parallelism: 0 }
    }

    fn validate(&self) -> Result<()> {
        if self.max_deg == 0 {
            return Err(Error::InvalidParameter("max_deg must be at least 1".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidParameter("no checks selected".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub excluded: usize,
    /// Excluded instances that were still evaluated and failed.
    pub excluded_fail: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    pub check: Check,
    pub ideal: MonomialIdeal,
    pub witness: Witness,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CampaignSummary {
    pub max_deg: u32,
    pub visited: usize,
    pub counts: BTreeMap<Check, Counts>,
    /// Failures in enumeration order, then check order.
    pub failures: Vec<Failure>,
}

impl CampaignSummary {
    /// Nonzero iff a check other than the conjecture failed.
    pub fn exit_status(&self) -> i32 {
        let bad = self.counts.iter().any(|(c, k)| *c != Check::Conjecture && k.fail > 0);
        i32::from(bad)
    }

    pub fn conjecture_counterexamples(&self) -> usize {
        self.counts.get(&Check::Conjecture).map_or(0, |c| c.fail)
    }

    /// Tab-separated, one line per check.
    pub fn render_machine(&self) -> String {
        let mut out = format!("max_deg\t{}\nvisited\t{}\n", self.max_deg, self.visited);
        for (c, k) in &self.counts {
            out += &format!("{c}\t{}\t{}\t{}\t{}\t{}\n", k.pass, k.fail, k.vacuous, k.excluded, k.excluded_fail);
        }
        for f in &self.failures {
            out += &format!("fail\t{}\t{}\t{}\n", f.check, f.ideal, f.witness);
        }
        out
    }
}

impl fmt::Display for CampaignSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Artinian lex ideals in k[x,y,z] with G_max <= {}: {}", self.max_deg, self.visited)?;
        writeln!(
            f,
            "{:<12}{:>8}{:>8}{:>9}{:>10}{:>15}",
            "check", "pass", "fail", "vacuous", "excluded", "excluded-fail"
        )?;
        for (c, k) in &self.counts {
            writeln!(
                f,
                "{:<12}{:>8}{:>8}{:>9}{:>10}{:>15}",
                c.name(),
                k.pass,
                k.fail,
                k.vacuous,
                k.excluded,
                k.excluded_fail
            )?;
        }
        for fl in &self.failures {
            writeln!(f, "FAIL {} {}: {}", fl.check, fl.ideal, fl.witness)?;
        }
        Ok(())
    }
}

fn run_checks(l: &MonomialIdeal, checks: &[Check]) -> Vec<(Check, TheoremReport)> {
    checks.iter().map(|&c| (c, c.run(l))).collect()
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignSummary> {
    cfg.validate()?;
    let ideals: Vec<MonomialIdeal> = enumerate_artinian_lex(cfg.n, cfg.max_deg)?.collect();
    let checks: Vec<Check> = cfg.checks.iter().copied().collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let results: Vec<Vec<(Check, TheoremReport)>> =
        pool.install(|| ideals.par_iter().map(|l| run_checks(l, &checks)).collect());

    let mut counts: BTreeMap<Check, Counts> = checks.iter().map(|&c| (c, Counts::default())).collect();
    let mut failures = Vec::new();
    for (check, report) in results.into_iter().flatten() {
        let k = counts.get_mut(&check).expect("selected check");
        match report.outcome() {
            Outcome::Pass => k.pass += 1,
            Outcome::Fail => k.fail += 1,
            Outcome::Vacuous => k.vacuous += 1,
            Outcome::Excluded => {
                k.excluded += 1;
                if report.witness().is_some() {
                    k.excluded_fail += 1;
                }
            }
        }
        if let (Outcome::Fail, Some(w)) = (report.outcome(), report.witness()) {
            failures.push(Failure { check, ideal: report.ideal.clone(), witness: w.clone() });
        }
    }
    Ok(CampaignSummary { max_deg: cfg.max_deg, visited: ideals.len(), counts, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let one: Vec<_> = enumerate_artinian_lex(3, 1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_string(), "(x, y, z)");
        let two: Vec<String> = enumerate_artinian_lex(3, 2).unwrap().map(|i| i.to_string()).collect();
        assert_eq!(two, ["(x^2, xy, xz, y^2, yz, z^2)", "(x, y^2, yz, z^2)", "(x, y, z^2)", "(x, y, z)",]);
        assert_eq!(enumerate_artinian_lex(3, 3).unwrap().count(), 14);
        assert_eq!(enumerate_artinian_lex(3, 4).unwrap().count(), 51);
        assert!(enumerate_artinian_lex(4, 2).is_err());
    }

    #[test]
    fn every_ideal_is_artinian_lex_and_distinct() {
        let all: Vec<_> = enumerate_artinian_lex(3, 5).unwrap().collect();
        assert_eq!(all.len(), 202);
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|l| l.is_lex_segment() && l.is_artinian() && l.g_max() <= 5));
    }

    #[test]
    fn segment_size_validation() {
        assert!(lex_ideal_from_segment_sizes(3, &[4]).is_err());
        assert!(lex_ideal_from_segment_sizes(3, &[1, 2]).is_err());
        assert_eq!(lex_ideal_from_segment_sizes(3, &[1, 6]).unwrap().to_string(), "(x, y^2, yz, z^2)");
    }

    #[test]
    fn campaign_small() {
        let s = run_campaign(&CampaignConfig::new(2, Check::ALL)).unwrap();
        assert_eq!(s.visited, 4);
        assert_eq!(s.exit_status(), 0);
        assert!(s.failures.is_empty());
        let s = run_campaign(&CampaignConfig::new(1, [Check::Thm1])).unwrap();
        assert_eq!(s.counts[&Check::Thm1].vacuous, 1);
    }

    #[test]
    fn campaign_is_independent_of_parallelism() {
        let mut cfg = CampaignConfig::new(4, Check::ALL);
        cfg.parallelism = 1;
        let serial = run_campaign(&cfg).unwrap();
        cfg.parallelism = 4;
        let parallel = run_campaign(&cfg).unwrap();
        assert_eq!(serial.render_machine(), parallel.render_machine());
        assert_eq!(serial, parallel);
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("thm3".parse::<Check>().is_err());
    }
}
