use std::fmt;

use crate::decompose::Summand;
use crate::ideal::MonomialIdeal;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CheckKind {
    Theorem1,
    Corollary,
    Theorem2,
    Conjecture,
    EkVsCone,
    Bhp,
    Lemmas,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Theorem1 => "thm1",
            CheckKind::Corollary => "cor",
            CheckKind::Theorem2 => "thm2",
            CheckKind::Conjecture => "conjecture",
            CheckKind::EkVsCone => "ek_vs_cone",
            CheckKind::Bhp => "bhp",
            CheckKind::Lemmas => "lemmas",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Hypothesis {
    Applicable,
    Excluded(String),
    Vacuous(String),
}

/// Where and how a check failed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub what: String,
    pub position: Option<usize>,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(
        what: impl Into<String>,
        position: Option<usize>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Self { what: what.into(), position, expected: expected.to_string(), actual: actual.to_string() }
    }

    pub fn message(what: impl Into<String>) -> Self {
        Self::new(what, None, "", "")
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.what)?;
        if let Some(p) = self.position {
            write!(f, " at position {p}")?;
        }
        if !self.expected.is_empty() || !self.actual.is_empty() {
            write!(f, ": expected {}, found {}", self.expected, self.actual)?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

/// Two summand lists the check compared.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Comparison {
    pub label: String,
    pub expected: Vec<Summand>,
    pub actual: Vec<Summand>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremReport {
    pub check: CheckKind,
    pub ideal: MonomialIdeal,
    pub hypothesis: Hypothesis,
    pub verdict: Option<Verdict>,
    pub details: Vec<Comparison>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Pass,
    Fail,
    Vacuous,
    Excluded,
}

impl TheoremReport {
    pub fn new(check: CheckKind, ideal: &MonomialIdeal) -> Self {
        Self { check, ideal: ideal.clone(), hypothesis: Hypothesis::Applicable, verdict: None, details: Vec::new() }
    }

    pub(crate) fn vacuous(mut self, reason: impl Into<String>) -> Self {
        self.hypothesis = Hypothesis::Vacuous(reason.into());
        self
    }

    pub(crate) fn excluded(mut self, reason: impl Into<String>) -> Self {
        self.hypothesis = Hypothesis::Excluded(reason.into());
        self
    }

    pub(crate) fn with_verdict(mut self, v: Verdict) -> Self {
        self.verdict = Some(v);
        self
    }

    pub(crate) fn fail(self, w: Witness) -> Self {
        self.with_verdict(Verdict::Fail(w))
    }

    pub fn outcome(&self) -> Outcome {
        match (&self.hypothesis, &self.verdict) {
            (Hypothesis::Excluded(_), _) => Outcome::Excluded,
            (Hypothesis::Vacuous(_), _) => Outcome::Vacuous,
            (Hypothesis::Applicable, Some(Verdict::Fail(_))) => Outcome::Fail,
            (Hypothesis::Applicable, _) => Outcome::Pass,
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Some(Verdict::Pass))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Some(Verdict::Fail(w)) => Some(w),
            _ => None,
        }
    }

    /// 0 pass or vacuous, 1 fail, 2 hypothesis excluded.
    pub fn exit_code(&self) -> i32 {
        match self.outcome() {
            Outcome::Pass | Outcome::Vacuous => 0,
            Outcome::Fail => 1,
            Outcome::Excluded => 2,
        }
    }
}

fn write_summands(f: &mut fmt::Formatter<'_>, summands: &[Summand]) -> fmt::Result {
    if summands.is_empty() {
        return writeln!(f, "      (none)");
    }
    for s in summands {
        writeln!(f, "      {} pi{}", s.coeff, s.seq)?;
    }
    Ok(())
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check: {}", self.check)?;
        writeln!(f, "ideal: {}", self.ideal)?;
        match &self.hypothesis {
            Hypothesis::Applicable => writeln!(f, "hypothesis: applicable")?,
            Hypothesis::Excluded(r) => writeln!(f, "hypothesis: excluded ({r})")?,
            Hypothesis::Vacuous(r) => writeln!(f, "hypothesis: vacuous ({r})")?,
        }
        match &self.verdict {
            None => writeln!(f, "verdict: none")?,
            Some(Verdict::Pass) => writeln!(f, "verdict: pass")?,
            Some(Verdict::Fail(w)) => writeln!(f, "verdict: FAIL {w}")?,
        }
        for c in &self.details {
            writeln!(f, "  {}", c.label)?;
            writeln!(f, "    expected:")?;
            write_summands(f, &c.expected)?;
            writeln!(f, "    actual:")?;
            write_summands(f, &c.actual)?;
        }
        Ok(())
    }
}
