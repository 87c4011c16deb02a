use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orthower::report::{html, write_output};
use orthower::{evaluate_corpus, CompoundLimit, CorpusManifest, EvalConfig, EvaluationReport, Evaluator, Lexicon, NormaliserConfig};

/// Orthography-aware word error rate for ASR transcripts.
#[derive(Parser)]
#[command(name = "orthower", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one reference/hypothesis pair.
    Eval {
        /// Reference file, or `-` for stdin.
        reference: String,
        /// Hypothesis file, or `-` for stdin.
        hypothesis: String,
        /// Treat REFERENCE and HYPOTHESIS as literal text instead of paths.
        #[arg(long)]
        text: bool,
        #[command(flatten)]
        options: Options,
    },
    /// Evaluate every pair listed in a CSV or JSON manifest.
    Corpus {
        manifest: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for one JSON report per pair plus summary.json.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        options: Options,
    },
}

#[derive(Args)]
struct Options {
    /// Write the JSON report (summary for corpora) to PATH, or stdout with `-`.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a static HTML report.
    #[arg(long, value_name = "PATH")]
    html: Option<PathBuf>,
    /// Comma-separated normalisers to switch off, or `all`.
    #[arg(long, value_name = "LIST", value_parser = NormaliserConfig::disabling)]
    disable: Option<NormaliserConfig>,
    /// Maximum tokens per side of a compound match, or `inf`.
    #[arg(long, value_name = "K|inf")]
    compound_limit: Option<CompoundLimit>,
    /// Classic WER: no normalisers, punctuation and case ignored, unit costs.
    #[arg(long)]
    legacy_wer: bool,
    /// Score capitalisation over matched word pairs only.
    #[arg(long)]
    strict_caps: bool,
    /// Require both Double Metaphone codes to match for homophones.
    #[arg(long)]
    homophone_strict: bool,
    /// Directory with replacement lexicon files.
    #[arg(long, value_name = "DIR", env = "ORTHOWER_LEXICON_DIR")]
    lexicon_dir: Option<PathBuf>,
}

impl Options {
    fn evaluator(&self) -> orthower::Result<Evaluator> {
        let mut config = if self.legacy_wer { EvalConfig::legacy() } else { EvalConfig::default() };
        if !self.legacy_wer {
            if let Some(normalisers) = &self.disable {
                config.normalisers = normalisers.clone();
            }
            if let Some(limit) = self.compound_limit {
                config.cost_model = config.cost_model.with_compound_limit(limit);
            }
        }
        config.strict_caps = self.strict_caps;
        config.homophone_strict = self.homophone_strict;
        Ok(match &self.lexicon_dir {
            Some(dir) => Evaluator::with_lexicon(config, Lexicon::load_dir(dir)?),
            None => Evaluator::new(config),
        })
    }
}

/// Reads a file, or standard input for `-`.
fn read(path: &str) -> orthower::Result<String> {
    let io = |source| orthower::Error::Io { path: path.into(), source };
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn rate(r: Option<f64>) -> String {
    r.map_or_else(|| "undefined".into(), |r| format!("{r:.4}"))
}

fn print_report(report: &EvaluationReport) {
    let m = &report.metrics;
    println!("WER        {}", rate(m.wer));
    println!("legacy WER {}", rate(report.legacy_wer));
    println!("punct SER  {}  F1 {:.4}", rate(m.punct_ser), m.punct_f1);
    println!("cap SER    {}  F1 {:.4}", rate(m.cap_ser), m.cap_f1);
    for (class, n) in &m.errors {
        println!("  {class:<22} {n}");
    }
}

fn eval(reference: &str, hypothesis: &str, text: bool, options: &Options) -> orthower::Result<ExitCode> {
    let evaluator = options.evaluator()?;
    if !text && reference == "-" && hypothesis == "-" {
        eprintln!("error: only one of REFERENCE and HYPOTHESIS can be read from stdin");
        return Ok(ExitCode::from(1));
    }
    let (r, h) = if text {
        (reference.to_string(), hypothesis.to_string())
    } else {
        (read(reference)?, read(hypothesis)?)
    };
    let report = evaluator.evaluate(&r, &h);
    match &options.json {
        Some(path) => write_output(path, &report.to_json())?,
        None => print_report(&report),
    }
    if let Some(path) = &options.html {
        write_output(path, &html::render_report(&report, "orthower report"))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn corpus(manifest: &Path, jobs: Option<usize>, out_dir: Option<&Path>, options: &Options) -> orthower::Result<ExitCode> {
    let evaluator = options.evaluator()?;
    let manifest = CorpusManifest::load(manifest)?;
    let outcome = evaluate_corpus(&manifest, &evaluator, jobs)?;
    let summary = &outcome.summary;

    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|source| orthower::Error::Io { path: dir.into(), source })?;
        for (id, report) in &outcome.reports {
            write_output(&dir.join(format!("{id}.json")), &report.to_json())?;
        }
        write_output(&dir.join("summary.json"), &summary.to_json())?;
    }
    match &options.json {
        Some(path) => write_output(path, &summary.to_json())?,
        None => {
            println!("pairs      {}", summary.pairs);
            println!("WER        {} (pooled)", rate(summary.micro.wer));
            println!("legacy WER {} (pooled)", rate(summary.micro_legacy_wer));
            println!("punct SER  {}  F1 {:.4}", rate(summary.micro.punct_ser), summary.micro.punct_f1);
            println!("cap SER    {}  F1 {:.4}", rate(summary.micro.cap_ser), summary.micro.cap_f1);
        }
    }
    if let Some(path) = &options.html {
        write_output(path, &html::render_summary(summary, &outcome.reports))?;
    }
    for failure in &summary.failures {
        eprintln!("failed {}: {}", failure.id, failure.message);
    }
    Ok(if summary.is_complete() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Eval { reference, hypothesis, text, options } => eval(reference, hypothesis, *text, options),
        Command::Corpus { manifest, jobs, out_dir, options } => corpus(manifest, *jobs, out_dir.as_deref(), options),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}
