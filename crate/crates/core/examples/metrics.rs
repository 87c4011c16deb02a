//! Word, punctuation and capitalisation scores from a classified route.

use orthower::{align, classify_route, compute_metrics, tokenize, AspectCounts, ClassifyOptions, CostModel, MetricsOptions};

fn main() {
    let reference = "Paris is big, and Rome is old.";
    let hypothesis = "paris is big and rome is old, really";
    let mut alignment = align(&tokenize(reference).tokens, &tokenize(hypothesis).tokens, &CostModel::default());
    classify_route(&mut alignment.route, &ClassifyOptions::default());

    for strict_caps in [false, true] {
        let m = compute_metrics(&alignment.route, &MetricsOptions { strict_caps });
        println!("strict_caps = {strict_caps}");
        for (name, s) in [("word", m.word), ("punctuation", m.punctuation), ("capitalisation", m.capitalisation)] {
            let AspectCounts { correct, substitutions, deletions, insertions } = s.counts;
            println!(
                "  {name:<15} C={correct} S={substitutions} D={deletions} I={insertions}  rate={:?} F1={:.4}",
                s.error_rate, s.f1
            );
        }
    }
}
