//! Batch evaluation from a manifest, with pooled and per-file averages.

use std::fs;

use orthower::{evaluate_corpus, CorpusManifest, EvalConfig, Evaluator};

fn main() -> orthower::Result<()> {
    let dir = tempfile::tempdir().expect("temporary directory");
    let files = [
        ("short.ref", "Hello there."),
        ("short.hyp", "hello"),
        ("long.ref", "The quick brown fox jumps over the lazy dog, again and again."),
        ("long.hyp", "The quick brown fox jumps over the lazy dog again and again."),
    ];
    for (name, text) in files {
        fs::write(dir.path().join(name), text).expect("write fixture");
    }
    let manifest_path = dir.path().join("manifest.csv");
    fs::write(
        &manifest_path,
        "id,reference,hypothesis\nshort,short.ref,short.hyp\nlong,long.ref,long.hyp\nmissing,nope.ref,nope.hyp\n",
    )
    .expect("write manifest");

    let manifest = CorpusManifest::load(&manifest_path)?;
    let outcome = evaluate_corpus(&manifest, &Evaluator::new(EvalConfig::default()), Some(2))?;
    for (id, report) in &outcome.reports {
        println!("{id:<6} WER {:?}", report.metrics.wer);
    }
    let summary = &outcome.summary;
    println!("micro WER {:?}, macro WER {:?}", summary.micro.wer, summary.macro_stats["wer"].mean);
    println!("failures: {:?}", summary.failures.iter().map(|f| &f.id).collect::<Vec<_>>());
    Ok(())
}
