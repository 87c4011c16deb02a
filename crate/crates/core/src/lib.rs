//! Orthography-aware word error rate for speech recognition transcripts.
//!
//! The pipeline keeps every original character of both transcripts:
//!
//! 1. [`lexer`] splits text into categorised [`Token`]s, storing whitespace,
//!    quotes and dashes as token affixes instead of discarding them.
//! 2. [`normalise`] rewrites comparison values (abbreviations, contractions,
//!    spelling variants, numbers, ...) while recording a trail of every change.
//! 3. [`align`] runs a Levenshtein alignment with type-dependent costs and
//!    zero-cost compound word matches, and backtraces the optimal route.
//! 4. [`classify`] labels each substitution (punctuation, capitalisation,
//!    suffix, homophone, ...).
//! 5. [`metrics`] reports WER for words and SER/F1 for punctuation and
//!    capitalisation.
//!
//! [`evaluate_pair`] runs all of it and returns a serialisable
//! [`EvaluationReport`].
//!
//! ```
//! use orthower::{evaluate_pair, EvalConfig};
//!
//! let report = evaluate_pair("Hello, world.", "hello world.", &EvalConfig::default());
//! assert_eq!(report.metrics.wer, Some(0.0));
//! assert_eq!(report.metrics.capitalisation.counts.substitutions, 1);
//! assert_eq!(report.metrics.punctuation.counts.deletions, 1);
//! ```

pub mod align;
pub mod classify;
mod error;
mod evaluate;
pub mod lexer;
pub mod lexicon;
pub mod metrics;
pub mod normalise;
pub mod report;
mod token;

pub use align::{align, Alignment, CompoundLimit, Cost, CostModel, OperationKind, RouteElement};
pub use classify::{classify_pair, classify_route, classify_values, ClassifyOptions, ErrorClass};
pub use error::{Error, Result};
pub use evaluate::{evaluate_pair, legacy_word_counts, legacy_words, EvalConfig, Evaluator};
pub use lexer::{tokenize, Lexer};
pub use lexicon::Lexicon;
pub use metrics::{compute_metrics, AspectCounts, MetricsOptions, MetricsReport};
pub use normalise::{normalise, NormaliserConfig, NormaliserId, Normaliser};
pub use report::{evaluate_corpus, CorpusManifest, CorpusSummary, EvaluationReport, REPORT_SCHEMA_VERSION};
pub use token::{Span, Token, TokenKind, Transcript, PUNCTUATION};
