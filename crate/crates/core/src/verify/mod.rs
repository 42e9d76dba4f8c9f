//! Executable checkers for the structure of decompositions of lex ideals.

pub mod closed_form;
pub mod lemmas;
pub mod provenance;
pub mod report;
pub mod theorems;

pub use closed_form::{closed_form_c, closed_form_ideal};
pub use lemmas::{check_bhp_dominance, check_lemmas, ek_vs_cone};
pub use provenance::{explain_chain, ProvenanceReport, Source, TaggedSummand};
pub use report::{CheckKind, Comparison, Hypothesis, Outcome, TheoremReport, Verdict, Witness};
pub use theorems::{
    check_conjecture, check_corollary, check_theorem1, check_theorem2, decompose_checked, excluded_family,
    ideal_decomposition,
};
