//! Commutativity identities read off nontrivial cycles, with proofs by
//! single interchanges.

mod extract;
mod identity;
pub mod kock;
mod proof;

pub use extract::{extract_identity, nontrivial_walk};
pub use identity::{substitute_and_multiply, CommutativityIdentity, IdentityFile, OuterFactor, Side};
pub use kock::{kock_check_with, kock_derivation_check, match_up_to_renaming, KockReport, Renaming};
pub use proof::{find_redex_by_blocks, lift_proof, transcribe, verify_proof, Proof, ProofFailure, ProofStep};
