//! Ring files, the audit corpus, claim checkers, report rendering and the
//! `pprir` command line.

pub mod claims;
pub mod cli;
pub mod corpus;
pub mod report;
pub mod ringfile;

pub use claims::{run_audit, run_claim, AuditOptions, ClaimId, ClaimReport, Status};
pub use corpus::{default_corpus, Corpus};
pub use report::{render_report, Format};
