//! Claw detection and verdicts for structural claims about minimally
//! t-tough claw-free graphs.

mod claw;
mod degree_bound;
mod half_tough;
mod lemmas;
mod verdict;

pub use claw::{check_matthews_sumner, find_claw, is_claw_free, Claw};
pub use degree_bound::{check_degree_bound, conjecture_bound, proven_bound, theorem_bound, DegreeBoundReport};
pub use half_tough::{check_half_tough_characterization, recover_tree};
pub use lemmas::{
    check_lemma_2_3, check_lemma_2_3_with, check_lemma_2_4, check_lemma_2_4_with, LemmaContext, LemmaOptions,
};
pub use verdict::{merge_verdicts, ClauseId, ClauseVerdict, Evidence, Outcome};
