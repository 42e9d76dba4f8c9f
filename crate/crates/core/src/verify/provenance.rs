//! Matches the summands of `beta(L)` against the decompositions of the colon
//! ideals `L:x`, `L:y`, `L:z` (length 3, shifted by one) and of `(L, x)`
//! (length < 3, unshifted).

use std::fmt;

use crate::decompose::{Decomposition, Summand};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::pure_diagram::DegreeSequence;
use crate::verify::theorems::ideal_decomposition;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Source {
    /// `a = L : (x)`
    A,
    /// `b = L : (y)`
    B,
    /// `c = L : (z)`
    C,
    /// `(L, x)`
    LX,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::A => "a(-1)",
            Source::B => "b(-1)",
            Source::C => "c(-1)",
            Source::LX => "(L,x)",
        }
    }

    /// Where a source summand would land in `beta(L)`, if this source
    /// accounts for sequences of its length at all.
    fn image(self, seq: &DegreeSequence) -> Option<DegreeSequence> {
        match self {
            Source::LX if seq.len() < 3 => Some(seq.clone()),
            Source::A | Source::B | Source::C if seq.len() == 3 => seq.shifted(1).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TaggedSummand {
    pub summand: Summand,
    /// Empty for an extra summand.
    pub sources: Vec<Source>,
}

impl TaggedSummand {
    pub fn is_extra(&self) -> bool {
        self.sources.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SourceChain {
    pub source: Source,
    pub ideal: MonomialIdeal,
    pub decomposition: Decomposition,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProvenanceReport {
    pub ideal: MonomialIdeal,
    pub chain: Vec<TaggedSummand>,
    pub sources: Vec<SourceChain>,
    /// Source summands whose image is not in the chain of `L`.
    pub unused: Vec<(Source, Summand)>,
}

impl ProvenanceReport {
    pub fn extras(&self) -> Vec<&Summand> {
        self.chain.iter().filter(|t| t.is_extra()).map(|t| &t.summand).collect()
    }

    pub fn sources_of(&self, seq: &DegreeSequence) -> Option<&[Source]> {
        self.chain.iter().find(|t| &t.summand.seq == seq).map(|t| t.sources.as_slice())
    }
}

pub fn explain_chain(l: &MonomialIdeal) -> Result<ProvenanceReport> {
    if l.num_vars() != 3 || !l.is_lex_segment() || !l.is_artinian() {
        return Err(Error::InvalidParameter("explain needs an Artinian lex-segment ideal in three variables".into()));
    }
    let chain = ideal_decomposition(l)?;
    let mut sources = Vec::new();
    for (source, ideal) in [
        (Source::A, l.colon_variable(1)?),
        (Source::B, l.colon_variable(2)?),
        (Source::C, l.colon_variable(3)?),
        (Source::LX, l.add_variable(1)?),
    ] {
        if ideal.is_unit() {
            continue;
        }
        let decomposition = ideal_decomposition(&ideal)?;
        sources.push(SourceChain { source, ideal, decomposition });
    }

    let tagged = chain
        .summands
        .iter()
        .map(|s| TaggedSummand {
            summand: s.clone(),
            sources: sources
                .iter()
                .filter(|c| c.decomposition.summands.iter().any(|u| c.source.image(&u.seq).as_ref() == Some(&s.seq)))
                .map(|c| c.source)
                .collect(),
        })
        .collect();
    let unused = sources
        .iter()
        .flat_map(|c| c.decomposition.summands.iter().map(move |u| (c.source, u)))
        .filter(|(src, u)| src.image(&u.seq).is_some_and(|img| chain.coefficient_of(&img).is_none()))
        .map(|(src, u)| (src, u.clone()))
        .collect();
    Ok(ProvenanceReport { ideal: l.clone(), chain: tagged, sources, unused })
}

impl fmt::Display for ProvenanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "L = {}", self.ideal)?;
        for c in &self.sources {
            let name = match c.source {
                Source::A => "a = L:x",
                Source::B => "b = L:y",
                Source::C => "c = L:z",
                Source::LX => "(L,x)",
            };
            writeln!(f, "{name} = {}", c.ideal)?;
        }
        writeln!(f, "chain of L:")?;
        for t in &self.chain {
            let tags = if t.is_extra() {
                "extra".to_string()
            } else {
                t.sources.iter().map(|s| format!("from {s}")).collect::<Vec<_>>().join(", ")
            };
            writeln!(f, "  {} pi{}  {tags}", t.summand.coeff, t.summand.seq)?;
        }
        if !self.unused.is_empty() {
            writeln!(f, "unused source summands:")?;
            for (src, u) in &self.unused {
                writeln!(f, "  {src}: {} pi{}", u.coeff, u.seq)?;
            }
        }
        Ok(())
    }
}
