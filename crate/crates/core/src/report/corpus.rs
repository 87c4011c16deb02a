//! Batch evaluation of many transcript pairs.
//!
//! A manifest lists `id`, `reference` and `hypothesis` paths, either as a
//! CSV file with a header row or as a JSON array of objects. Relative paths
//! are resolved against the manifest's directory. Files are read when their
//! pair is evaluated, so one unreadable file fails only its own pair.

use std::collections::{BTreeMap, HashSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{rounded, round4, EvaluationReport, SUMMARY_SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::evaluate::{EvalConfig, Evaluator};
use crate::metrics::{AspectCounts, MetricsReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub reference: PathBuf,
    pub hypothesis: PathBuf,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusManifest {
    pub entries: Vec<ManifestEntry>,
}

impl CorpusManifest {
    pub fn new(entries: Vec<ManifestEntry>) -> Result<Self> {
        let mut seen = HashSet::new();
        for entry in &entries {
            if entry.id.is_empty() {
                return Err(Error::Manifest("empty id".into()));
            }
            if !seen.insert(entry.id.as_str()) {
                return Err(Error::Manifest(format!("duplicate id `{}`", entry.id)));
            }
        }
        Ok(CorpusManifest { entries })
    }

    /// Reads a CSV or JSON manifest; JSON is recognised by a `.json`
    /// extension or a leading `[`.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new(""));
        let mut manifest = Self::parse(&text, path.extension().is_some_and(|e| e == "json"))?;
        for entry in &mut manifest.entries {
            entry.reference = base.join(&entry.reference);
            entry.hypothesis = base.join(&entry.hypothesis);
        }
        Ok(manifest)
    }

    pub fn parse(text: &str, json: bool) -> Result<Self> {
        let entries: Vec<ManifestEntry> = if json || text.trim_start().starts_with('[') {
            serde_json::from_str(text)?
        } else {
            csv::ReaderBuilder::new()
                .trim(csv::Trim::All)
                .from_reader(text.as_bytes())
                .deserialize()
                .collect::<std::result::Result<_, _>>()?
        };
        Self::new(entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub id: String,
    pub message: String,
}

/// Mean and sample standard deviation of one per-pair rate. Pairs where
/// the rate is undefined are counted in `undefined` and left out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricStats {
    pub mean: Option<f64>,
    pub std: Option<f64>,
    pub n: usize,
    pub undefined: usize,
}

impl MetricStats {
    pub fn from_values(values: impl IntoIterator<Item = Option<f64>>) -> Self {
        let mut defined = Vec::new();
        let mut undefined = 0;
        for v in values {
            match v {
                Some(v) => defined.push(v),
                None => undefined += 1,
            }
        }
        let n = defined.len();
        let mean = (n > 0).then(|| defined.iter().sum::<f64>() / n as f64);
        let std = mean.filter(|_| n > 1).map(|m| {
            (defined.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
        });
        MetricStats { mean, std, n, undefined }
    }

    fn rounded(self) -> Self {
        MetricStats {
            mean: self.mean.map(round4),
            std: self.std.map(round4),
            ..self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub version: String,
    pub config: EvalConfig,
    pub pairs: usize,
    pub failures: Vec<PairFailure>,
    /// Rates of the pooled counts of all pairs.
    pub micro: MetricsReport,
    pub micro_legacy_wer: Option<f64>,
    /// Per-pair rates averaged, keyed by metric name.
    #[serde(rename = "macro")]
    pub macro_stats: BTreeMap<String, MetricStats>,
}

impl CorpusSummary {
    pub fn from_reports<'a>(config: EvalConfig, reports: impl IntoIterator<Item = &'a EvaluationReport>, failures: Vec<PairFailure>) -> Self {
        let reports: Vec<&EvaluationReport> = reports.into_iter().collect();
        let pooled = |f: fn(&EvaluationReport) -> AspectCounts| reports.iter().map(|r| f(r)).sum::<AspectCounts>();
        let word = pooled(|r| r.metrics.word.counts);
        let punct = pooled(|r| r.metrics.punctuation.counts);
        let cap = pooled(|r| r.metrics.capitalisation.counts);
        let legacy = pooled(|r| r.legacy_counts);
        let mut errors = BTreeMap::new();
        let mut normalisations = BTreeMap::new();
        for r in &reports {
            for (class, n) in &r.metrics.errors {
                *errors.entry(*class).or_insert(0) += n;
            }
            for (id, n) in &r.metrics.normalisations {
                *normalisations.entry(*id).or_insert(0) += n;
            }
        }

        type Rate = fn(&EvaluationReport) -> Option<f64>;
        let per_pair: [(&str, Rate); 6] = [
            ("wer", |r| r.metrics.word.counts.error_rate()),
            ("punct_ser", |r| r.metrics.punctuation.counts.error_rate()),
            ("punct_f1", |r| Some(r.metrics.punctuation.counts.f1())),
            ("cap_ser", |r| r.metrics.capitalisation.counts.error_rate()),
            ("cap_f1", |r| Some(r.metrics.capitalisation.counts.f1())),
            ("legacy_wer", |r| r.legacy_counts.error_rate()),
        ];
        let macro_stats = per_pair
            .iter()
            .map(|(name, rate)| (name.to_string(), MetricStats::from_values(reports.iter().map(|r| rate(r))).rounded()))
            .collect();

        CorpusSummary {
            version: SUMMARY_SCHEMA_VERSION.to_string(),
            config,
            pairs: reports.len(),
            failures,
            micro: rounded(MetricsReport::from_counts(word, punct, cap, errors, normalisations)),
            micro_legacy_wer: legacy.error_rate().map(round4),
            macro_stats,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summaries always serialise")
    }

    pub fn is_complete(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct CorpusOutcome {
    /// Successful pairs in manifest order.
    pub reports: Vec<(String, EvaluationReport)>,
    pub summary: CorpusSummary,
}

/// Evaluates every manifest pair on a pool of `jobs` threads (all cores
/// when `None`). Results do not depend on the number of threads.
pub fn evaluate_corpus(manifest: &CorpusManifest, evaluator: &Evaluator, jobs: Option<usize>) -> Result<CorpusOutcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| Error::Manifest(format!("cannot start worker pool: {e}")))?;

    let read = |path: &Path| std::fs::read_to_string(path).map_err(|e| Error::io(path, e));
    let results: Vec<std::result::Result<EvaluationReport, PairFailure>> = pool.install(|| {
        manifest
            .entries
            .par_iter()
            .map(|entry| {
                let texts = read(&entry.reference).and_then(|r| Ok((r, read(&entry.hypothesis)?)));
                match texts {
                    Ok((r, h)) => Ok(evaluator.evaluate(&r, &h)),
                    Err(e) => Err(PairFailure {
                        id: entry.id.clone(),
                        message: e.to_string(),
                    }),
                }
            })
            .collect()
    });

    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (entry, result) in manifest.entries.iter().zip(results) {
        match result {
            Ok(report) => reports.push((entry.id.clone(), report)),
            Err(failure) => failures.push(failure),
        }
    }
    let summary = CorpusSummary::from_reports(evaluator.config().clone(), reports.iter().map(|(_, r)| r), failures);
    Ok(CorpusOutcome { reports, summary })
}
