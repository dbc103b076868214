//! Corpus-analysis toolkit for measuring gender skew in narrative tropes.
//!
//! The crate ingests a trope wiki corpus (descriptions plus per-work example
//! occurrences across film, TV, and literature), links works to external
//! catalog metadata by title and year, and derives a lexicon-based
//! genderedness score per trope. On top of the scores it provides genre
//! aggregation, topic modeling of highly-gendered tropes, rating-bin
//! prediction, and author-gender feature analysis, all runnable as a
//! deterministic batch pipeline via the `tropescope` binary.
//!
//! The narrative guide under `book/` walks through each stage; its code
//! snippets are compiled as doctests by the companion `tropescope-guide`
//! crate, so the book and the library cannot drift apart.

pub mod classify;
pub mod corpus;
pub mod dataset;
pub mod fetch;
pub mod genderedness;
pub mod lexicon;
pub mod linkage;
pub mod logreg;
pub mod parse;
pub mod pipeline;
pub mod topics;

pub use corpus::{Corpus, CorpusStats, Example, MediaType, Trope, Work};
pub use genderedness::{CorpusGenderStats, GenderednessReport, TropeDocument};
pub use lexicon::{CountMode, GenderCounts, GenderLexicon, Lemmatizer, TokenStream};

/// Toolkit version embedded in report headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
