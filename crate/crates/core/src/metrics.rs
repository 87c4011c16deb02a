//! Word error rate, sentence error rate and F1 per aspect.
//!
//! Every route element is attributed to the word aspect (word, number and
//! symbol tokens) or the punctuation aspect. Case-only substitutions are
//! correct words and count against the capitalisation aspect alone, which
//! is measured over tokens containing a cased letter:
//!
//! * exact matches are C, case-only substitutions are S;
//! * a cased reference word that is deleted or substituted by a different
//!   word is D, and a cased hypothesis word without a counterpart is I
//!   (skipped with [`MetricsOptions::strict_caps`]).
//!
//! Error rate is `(S + D + I) / (C + S + D)` and F1 is
//! `2C / (2C + 2S + D + I)`.

use std::collections::BTreeMap;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::align::{OperationKind, RouteElement};
use crate::classify::ErrorClass;
use crate::normalise::NormaliserId;
use crate::token::Token;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AspectCounts {
    pub correct: u64,
    pub substitutions: u64,
    pub deletions: u64,
    pub insertions: u64,
}

impl AspectCounts {
    pub fn new(correct: u64, substitutions: u64, deletions: u64, insertions: u64) -> Self {
        AspectCounts { correct, substitutions, deletions, insertions }
    }

    /// Number of reference tokens: `C + S + D`.
    pub fn support(&self) -> u64 {
        self.correct + self.substitutions + self.deletions
    }

    pub fn errors(&self) -> u64 {
        self.substitutions + self.deletions + self.insertions
    }

    /// `None` when there is no reference token but something was inserted.
    pub fn error_rate(&self) -> Option<f64> {
        match (self.support(), self.insertions) {
            (0, 0) => Some(0.0),
            (0, _) => None,
            (n, _) => Some(self.errors() as f64 / n as f64),
        }
    }

    /// 1 when there is nothing to get right or wrong.
    pub fn f1(&self) -> f64 {
        let c = self.correct as f64;
        let denominator = 2.0 * c + 2.0 * self.substitutions as f64 + self.deletions as f64 + self.insertions as f64;
        if denominator == 0.0 {
            1.0
        } else {
            2.0 * c / denominator
        }
    }
}

impl Add for AspectCounts {
    type Output = AspectCounts;

    fn add(self, o: AspectCounts) -> AspectCounts {
        AspectCounts {
            correct: self.correct + o.correct,
            substitutions: self.substitutions + o.substitutions,
            deletions: self.deletions + o.deletions,
            insertions: self.insertions + o.insertions,
        }
    }
}

impl AddAssign for AspectCounts {
    fn add_assign(&mut self, o: AspectCounts) {
        *self = *self + o;
    }
}

impl Sum for AspectCounts {
    fn sum<I: Iterator<Item = AspectCounts>>(iter: I) -> Self {
        iter.fold(AspectCounts::default(), Add::add)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AspectScore {
    pub counts: AspectCounts,
    /// WER for words, SER otherwise. `null` when undefined (no reference
    /// tokens but insertions); `counts.insertions` then holds the errors.
    pub error_rate: Option<f64>,
    pub f1: f64,
}

impl From<AspectCounts> for AspectScore {
    fn from(counts: AspectCounts) -> Self {
        AspectScore {
            counts,
            error_rate: counts.error_rate(),
            f1: counts.f1(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricsOptions {
    /// Score capitalisation over matched word pairs only.
    pub strict_caps: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub wer: Option<f64>,
    pub punct_ser: Option<f64>,
    pub punct_f1: f64,
    pub cap_ser: Option<f64>,
    pub cap_f1: f64,
    pub word: AspectScore,
    pub punctuation: AspectScore,
    pub capitalisation: AspectScore,
    /// Substitutions per class; a compound run counts once.
    pub errors: BTreeMap<ErrorClass, u64>,
    /// Source tokens changed or removed, per normaliser.
    pub normalisations: BTreeMap<NormaliserId, u64>,
}

impl MetricsReport {
    pub fn from_counts(
        word: AspectCounts,
        punctuation: AspectCounts,
        capitalisation: AspectCounts,
        errors: BTreeMap<ErrorClass, u64>,
        normalisations: BTreeMap<NormaliserId, u64>,
    ) -> Self {
        let (word, punctuation, capitalisation) =
            (AspectScore::from(word), AspectScore::from(punctuation), AspectScore::from(capitalisation));
        MetricsReport {
            wer: word.error_rate,
            punct_ser: punctuation.error_rate,
            punct_f1: punctuation.f1,
            cap_ser: capitalisation.error_rate,
            cap_f1: capitalisation.f1,
            word,
            punctuation,
            capitalisation,
            errors,
            normalisations,
        }
    }
}

fn is_cased(token: &Token) -> bool {
    token.value.chars().any(|c| c.is_lowercase() || c.is_uppercase())
}

/// Computes all aspects from a classified route.
pub fn compute_metrics(route: &[RouteElement], options: &MetricsOptions) -> MetricsReport {
    let mut word = AspectCounts::default();
    let mut punct = AspectCounts::default();
    let mut cap = AspectCounts::default();
    let mut errors = BTreeMap::new();
    let lenient = !options.strict_caps;

    let deleted = |t: &Token, word: &mut AspectCounts, punct: &mut AspectCounts, cap: &mut AspectCounts| {
        if t.is_punctuation() {
            punct.deletions += 1;
        } else {
            word.deletions += 1;
            if lenient && is_cased(t) {
                cap.deletions += 1;
            }
        }
    };
    let inserted = |t: &Token, word: &mut AspectCounts, punct: &mut AspectCounts, cap: &mut AspectCounts| {
        if t.is_punctuation() {
            punct.insertions += 1;
        } else {
            word.insertions += 1;
            if lenient && is_cased(t) {
                cap.insertions += 1;
            }
        }
    };

    for e in route {
        match (e.op, &e.reference, &e.hypothesis) {
            (OperationKind::Ok, Some(r), Some(_)) => {
                if r.is_punctuation() {
                    punct.correct += 1;
                } else {
                    word.correct += 1;
                    if is_cased(r) {
                        cap.correct += 1;
                    }
                }
            }
            (OperationKind::Substitution, Some(r), Some(h)) => {
                if let Some(class) = e.error_class {
                    *errors.entry(class).or_insert(0) += 1;
                }
                match (r.is_punctuation(), h.is_punctuation()) {
                    (true, true) => punct.substitutions += 1,
                    (false, false) if e.error_class == Some(ErrorClass::CapitalisationError) => {
                        word.correct += 1;
                        cap.substitutions += 1;
                    }
                    (false, false) => {
                        word.substitutions += 1;
                        if lenient && is_cased(r) {
                            cap.deletions += 1;
                        }
                        if lenient && is_cased(h) {
                            cap.insertions += 1;
                        }
                    }
                    _ => {
                        deleted(r, &mut word, &mut punct, &mut cap);
                        inserted(h, &mut word, &mut punct, &mut cap);
                    }
                }
            }
            (OperationKind::Deletion, Some(r), _) => deleted(r, &mut word, &mut punct, &mut cap),
            (OperationKind::Insertion, _, Some(h)) => inserted(h, &mut word, &mut punct, &mut cap),
            (OperationKind::CompoundRef | OperationKind::CompoundEnd, Some(r), _) => {
                word.correct += 1;
                if is_cased(r) {
                    cap.correct += 1;
                }
                if e.op == OperationKind::CompoundEnd {
                    *errors.entry(ErrorClass::CompoundError).or_insert(0) += 1;
                }
            }
            _ => {}
        }
    }

    MetricsReport::from_counts(word, punct, cap, errors, BTreeMap::new())
}
