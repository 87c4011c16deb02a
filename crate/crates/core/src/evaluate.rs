use std::borrow::Cow;

use serde::{Deserialize, Serialize};

use crate::align::{align, Alignment, CostModel};
use crate::classify::{classify_route, ClassifyOptions};
use crate::lexer::Lexer;
use crate::lexicon::Lexicon;
use crate::metrics::{compute_metrics, AspectCounts, MetricsOptions};
use crate::normalise::{normalisation_counts, NormaliserConfig, Normaliser};
use crate::report::EvaluationReport;
use crate::token::{Token, TokenKind, PUNCTUATION};

/// Everything that influences an evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub normalisers: NormaliserConfig,
    pub cost_model: CostModel,
    /// Classic WER: punctuation dropped, case folded, unit costs, no
    /// normalisers and no compounds.
    pub legacy: bool,
    pub strict_caps: bool,
    pub homophone_strict: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            normalisers: NormaliserConfig::all(),
            cost_model: CostModel::default(),
            legacy: false,
            strict_caps: false,
            homophone_strict: false,
        }
    }
}

impl EvalConfig {
    pub fn legacy() -> Self {
        EvalConfig {
            normalisers: NormaliserConfig::none(),
            cost_model: CostModel::unit(),
            legacy: true,
            ..EvalConfig::default()
        }
    }
}

/// Runs the whole pipeline with a fixed configuration and lexicon.
#[derive(Debug, Clone)]
pub struct Evaluator {
    lexicon: Cow<'static, Lexicon>,
    config: EvalConfig,
}

impl Evaluator {
    pub fn new(config: EvalConfig) -> Self {
        Evaluator {
            lexicon: Cow::Borrowed(Lexicon::builtin()),
            config,
        }
    }

    pub fn with_lexicon(config: EvalConfig, lexicon: Lexicon) -> Self {
        Evaluator {
            lexicon: Cow::Owned(lexicon),
            config,
        }
    }

    pub fn config(&self) -> &EvalConfig {
        &self.config
    }

    pub fn evaluate(&self, reference: &str, hypothesis: &str) -> EvaluationReport {
        let (mut legacy, legacy_counts) = legacy_alignment(reference, hypothesis);

        if self.config.legacy {
            classify_route(&mut legacy.route, &self.classify_options());
            let metrics = compute_metrics(&legacy.route, &self.metrics_options());
            return EvaluationReport::new(self.config.clone(), metrics, legacy_counts, legacy.route);
        }

        let lexer = Lexer::new(&self.lexicon);
        let normaliser = Normaliser::new(&self.lexicon);
        let r = normaliser.run(&lexer.tokenize(reference), &self.config.normalisers);
        let h = normaliser.run(&lexer.tokenize(hypothesis), &self.config.normalisers);
        let mut alignment = align(&r.tokens, &h.tokens, &self.config.cost_model);
        classify_route(&mut alignment.route, &self.classify_options());
        let mut metrics = compute_metrics(&alignment.route, &self.metrics_options());
        metrics.normalisations = normalisation_counts([&r, &h])
            .into_iter()
            .map(|(id, n)| (id, n as u64))
            .collect();
        EvaluationReport::new(self.config.clone(), metrics, legacy_counts, alignment.route)
    }

    fn classify_options(&self) -> ClassifyOptions {
        ClassifyOptions {
            homophone_strict: self.config.homophone_strict,
        }
    }

    fn metrics_options(&self) -> MetricsOptions {
        MetricsOptions {
            strict_caps: self.config.strict_caps,
        }
    }
}

/// Evaluates one pair with the built-in lexicon.
pub fn evaluate_pair(reference: &str, hypothesis: &str, config: &EvalConfig) -> EvaluationReport {
    Evaluator::new(config.clone()).evaluate(reference, hypothesis)
}

/// Word counts of the classic WER baseline.
pub fn legacy_word_counts(reference: &str, hypothesis: &str) -> AspectCounts {
    legacy_alignment(reference, hypothesis).1
}

/// Whitespace-separated words with sentence punctuation removed and case
/// folded. Words that consist only of punctuation disappear.
pub fn legacy_words(text: &str) -> Vec<Token> {
    let mut words = Vec::new();
    let mut offset = 0;
    let mut chunk_start = None;
    for (i, c) in text.chars().chain(std::iter::once(' ')).enumerate() {
        if !c.is_whitespace() {
            chunk_start.get_or_insert((i, offset));
        } else if let Some((start_char, start_byte)) = chunk_start.take() {
            let chunk = &text[start_byte..offset];
            let value: String = chunk.chars().filter(|c| !PUNCTUATION.contains(c)).collect::<String>().to_lowercase();
            if !value.is_empty() {
                let mut token = Token::new(TokenKind::Word, "", chunk, "", start_char);
                token.value = value;
                words.push(token);
            }
        }
        offset += c.len_utf8();
    }
    words
}

fn legacy_alignment(reference: &str, hypothesis: &str) -> (Alignment, AspectCounts) {
    let alignment = align(&legacy_words(reference), &legacy_words(hypothesis), &CostModel::unit());
    let counts = compute_metrics(&alignment.route, &MetricsOptions::default()).word.counts;
    (alignment, counts)
}
