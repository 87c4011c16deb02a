//! Serialisable evaluation results.
//!
//! The JSON layout is described in `docs/report-schema.md`; any breaking
//! change to it bumps [`REPORT_SCHEMA_VERSION`]. Rates and F1 scores are
//! rounded to four decimals when a report is built, so serialising and
//! parsing a report gives back an equal value.

pub mod corpus;
pub mod html;

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::align::RouteElement;
use crate::error::{Error, Result};
use crate::evaluate::EvalConfig;
use crate::metrics::{AspectCounts, AspectScore, MetricsReport};

pub use corpus::{evaluate_corpus, CorpusManifest, CorpusOutcome, CorpusSummary, ManifestEntry, MetricStats, PairFailure};

pub const REPORT_SCHEMA_VERSION: &str = "orthower.report/1";
pub const SUMMARY_SCHEMA_VERSION: &str = "orthower.summary/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub version: String,
    pub config: EvalConfig,
    pub metrics: MetricsReport,
    /// Classic WER of the same pair, independent of `config`.
    pub legacy_wer: Option<f64>,
    pub legacy_counts: AspectCounts,
    pub route: Vec<RouteElement>,
}

impl EvaluationReport {
    pub fn new(config: EvalConfig, metrics: MetricsReport, legacy_counts: AspectCounts, route: Vec<RouteElement>) -> Self {
        EvaluationReport {
            version: REPORT_SCHEMA_VERSION.to_string(),
            config,
            metrics: rounded(metrics),
            legacy_wer: legacy_counts.error_rate().map(round4),
            legacy_counts,
            route,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialise")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }
}

/// Rounds to four decimal places.
pub fn round4(x: f64) -> f64 {
    let r = (x * 10_000.0).round() / 10_000.0;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn rounded_score(s: AspectScore) -> AspectScore {
    AspectScore {
        counts: s.counts,
        error_rate: s.error_rate.map(round4),
        f1: round4(s.f1),
    }
}

pub(crate) fn rounded(m: MetricsReport) -> MetricsReport {
    MetricsReport {
        wer: m.wer.map(round4),
        punct_ser: m.punct_ser.map(round4),
        punct_f1: round4(m.punct_f1),
        cap_ser: m.cap_ser.map(round4),
        cap_f1: round4(m.cap_f1),
        word: rounded_score(m.word),
        punctuation: rounded_score(m.punctuation),
        capitalisation: rounded_score(m.capitalisation),
        errors: m.errors,
        normalisations: m.normalisations,
    }
}

/// Writes `contents` to `path`, or to standard output when `path` is `-`.
pub fn write_output(path: &Path, contents: &str) -> Result<()> {
    if path.as_os_str() == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(contents.as_bytes())
            .and_then(|_| out.write_all(b"\n"))
            .map_err(|e| Error::io("<stdout>", e))
    } else {
        std::fs::write(path, format!("{contents}\n")).map_err(|e| Error::io(path, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evaluate_pair;

    #[test]
    fn json_round_trip() {
        let report = evaluate_pair(
            "Mr. Smith paid $2000 for the ice-cream, didn't he?",
            "mister smith paid two thousand dollars for the icecream did not he",
            &EvalConfig::default(),
        );
        let back = EvaluationReport::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), report.to_json());
    }

    #[test]
    fn rates_have_four_decimals() {
        let report = evaluate_pair("a b c", "a x c", &EvalConfig::default());
        assert_eq!(report.metrics.wer, Some(0.3333));
        assert!(report.to_json().contains("\"wer\": 0.3333"));
    }

    #[test]
    fn round4_examples() {
        assert_eq!(round4(2.0 / 3.0), 0.6667);
        assert_eq!(round4(-0.00001), 0.0);
        assert_eq!(round4(1.0), 1.0);
    }
}
