//! Small-graph enumeration, corpora, and the empirical claim sweeps.

mod audit;
mod canon;
mod checks;
mod corpus;
mod enumerate;
mod threshold;

pub use audit::{audit_claim_inequalities, AuditRecord};
pub use canon::{canonical_form, canonical_key, isomorphic, CanonKey};
pub use checks::{
    check_chen_yu, check_chen_yu_avoiding, check_claim, check_conjecture1, check_conjecture2, check_theorem2,
    conjecture2_hypothesis, evaluate, figure1_census, CheckReport, Claim, Verdict,
};
pub use corpus::{ingest_graph6, Corpus};
pub use enumerate::{enumerate_connected_graphs, enumerate_graphs, ENUMERATION_MAX_ORDER};
pub use threshold::Threshold;
