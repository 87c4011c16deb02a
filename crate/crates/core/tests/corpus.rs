use std::fs;
use std::path::Path;

use orthower::{evaluate_corpus, CorpusManifest, EvalConfig, Evaluator};

fn manifest(dir: &Path, name: &str, pairs: &[(&str, &str, &str)]) -> CorpusManifest {
    let mut lines = vec!["id,reference,hypothesis".to_string()];
    for (id, r, h) in pairs {
        fs::write(dir.join(format!("{id}.ref")), r).unwrap();
        fs::write(dir.join(format!("{id}.hyp")), h).unwrap();
        lines.push(format!("{id},{id}.ref,{id}.hyp"));
    }
    let path = dir.join(name);
    fs::write(&path, lines.join("\n")).unwrap();
    CorpusManifest::load(path).unwrap()
}

#[test]
fn identical_pairs_score_zero() {
    let dir = tempfile::tempdir().unwrap();
    let m = manifest(dir.path(), "m.csv", &[("a", "Good morning.", "Good morning."), ("b", "Yes, sir!", "Yes, sir!")]);
    let outcome = evaluate_corpus(&m, &Evaluator::new(EvalConfig::default()), Some(1)).unwrap();
    assert_eq!(outcome.summary.pairs, 2);
    assert_eq!(outcome.summary.micro.wer, Some(0.0));
    assert_eq!(outcome.summary.macro_stats["wer"].mean, Some(0.0));
}

#[test]
fn pooled_and_per_file_averages_differ() {
    // One wrong word out of one, then three right out of three:
    // pooled 1/4, per-file mean (1 + 0) / 2 with sample std sqrt(1/2).
    let dir = tempfile::tempdir().unwrap();
    let m = manifest(dir.path(), "m.csv", &[("short", "cat", "dog"), ("long", "one two three", "one two three")]);
    let summary = evaluate_corpus(&m, &Evaluator::new(EvalConfig::default()), None).unwrap().summary;
    assert_eq!(summary.micro.wer, Some(0.25));
    let wer = &summary.macro_stats["wer"];
    assert_eq!(wer.mean, Some(0.5));
    assert_eq!(wer.std, Some(0.7071));
    assert_eq!(wer.n, 2);
}

#[test]
fn corpus_summary_ignores_worker_count_and_order() {
    let dir = tempfile::tempdir().unwrap();
    let pairs: [(&str, &str, &str); 5] = [
        ("a", "The cat sat.", "the cat sat"),
        ("b", "Hello, world!", "hello world"),
        ("c", "", "surprise"),
        ("d", "one two three four", "one too three"),
        ("e", "Ice cream, please.", "icecream please."),
    ];
    let forward = manifest(dir.path(), "forward.csv", &pairs);
    let mut reversed_pairs = pairs;
    reversed_pairs.reverse();
    let reversed = manifest(dir.path(), "reversed.csv", &reversed_pairs);

    let evaluator = Evaluator::new(EvalConfig::default());
    let one = evaluate_corpus(&forward, &evaluator, Some(1)).unwrap();
    let three = evaluate_corpus(&forward, &evaluator, Some(3)).unwrap();
    assert_eq!(one.summary.to_json(), three.summary.to_json());
    assert_eq!(one.reports, three.reports);

    let back = evaluate_corpus(&reversed, &evaluator, Some(2)).unwrap();
    assert_eq!(back.summary.micro, one.summary.micro);
    assert_eq!(back.summary.micro_legacy_wer, one.summary.micro_legacy_wer);
    assert_eq!(back.summary.macro_stats, one.summary.macro_stats);
    assert_eq!(back.summary.macro_stats.get("wer").map(|s| s.undefined), Some(1));
}
