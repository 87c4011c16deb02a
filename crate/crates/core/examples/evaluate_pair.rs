//! The whole pipeline on one pair, compared with the classic WER.

use orthower::{evaluate_pair, EvalConfig, NormaliserConfig};

fn main() {
    let reference = "Mr. Smith paid $2000 for the ice-cream, didn't he?";
    let hypothesis = "mister smith paid two thousand dollars for the icecream did not he";

    let full = evaluate_pair(reference, hypothesis, &EvalConfig::default());
    let raw = evaluate_pair(
        reference,
        hypothesis,
        &EvalConfig { normalisers: NormaliserConfig::none(), ..EvalConfig::default() },
    );
    let legacy = evaluate_pair(reference, hypothesis, &EvalConfig::legacy());

    println!("orthography-aware WER  {:?}", full.metrics.wer);
    println!("without normalisers    {:?}", raw.metrics.wer);
    println!("classic WER            {:?}", legacy.metrics.wer);
    println!("punctuation SER / F1   {:?} / {}", full.metrics.punct_ser, full.metrics.punct_f1);
    println!("normalisations         {:?}", full.metrics.normalisations);
    println!("error classes          {:?}", full.metrics.errors);
    println!("\n{}", full.to_json().lines().take(12).collect::<Vec<_>>().join("\n"));
}
