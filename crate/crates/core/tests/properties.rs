use orthower::{
    align, classify_values, evaluate_pair, tokenize, ClassifyOptions, CostModel, EvalConfig, ErrorClass,
    EvaluationReport, Token,
};
use proptest::prelude::*;

fn text() -> impl Strategy<Value = String> {
    let atom = prop::sample::select(vec![
        "the", "The", "cat", "CAT", "ice", "cream", "ice-cream", "icecream", "won't", "Mr.", "2000", "$", "two",
        "thousand", ",", ".", "?", "colour", "café", "hmm", "[noise]", "walk", "walked", "there", "their",
    ]);
    prop::collection::vec(atom, 0..12).prop_map(|words| words.join(" "))
}

fn word() -> impl Strategy<Value = String> {
    "[a-zA-Z]{1,8}"
}

fn punct_count(tokens: &[Token]) -> usize {
    tokens.iter().filter(|t| t.is_punctuation()).count()
}

proptest! {
    #[test]
    fn alignment_is_symmetric_and_bounded(r in text(), h in text()) {
        let model = CostModel::default();
        let (r, h) = (tokenize(&r).tokens, tokenize(&h).tokens);
        let forward = align(&r, &h, &model);
        let backward = align(&h, &r, &model);
        prop_assert_eq!(forward.total_cost, backward.total_cost);
        let cost = forward.total_cost.as_f64();
        let upper: f64 = r.iter().chain(&h).map(|t| model.indel(t).as_f64()).sum();
        let lower = 0.5 * (punct_count(&r) as f64 - punct_count(&h) as f64).abs();
        prop_assert!(lower <= cost && cost <= upper);
        let sum: f64 = forward.route.iter().map(|e| e.cost.as_f64()).sum();
        prop_assert_eq!(sum, cost);
    }

    #[test]
    fn route_covers_both_sides_in_order(r in text(), h in text()) {
        let (r, h) = (tokenize(&r).tokens, tokenize(&h).tokens);
        let a = align(&r, &h, &CostModel::default());
        let refs: Vec<_> = a.route.iter().filter_map(|e| e.reference.clone()).collect();
        let hyps: Vec<_> = a.route.iter().filter_map(|e| e.hypothesis.clone()).collect();
        prop_assert_eq!(refs, r);
        prop_assert_eq!(hyps, h);
    }

    #[test]
    fn hyphenated_pieces_match_the_joined_word(parts in prop::collection::vec(word(), 2..4)) {
        let model = CostModel::default();
        let joined = tokenize(&parts.concat()).tokens;
        for split in [parts.join("-"), parts.join(" ")] {
            let a = align(&tokenize(&split).tokens, &joined, &model);
            prop_assert_eq!(a.total_cost.as_f64(), 0.0, "{} vs {}", split, parts.concat());
        }
    }

    #[test]
    fn classification_is_symmetric(a in word(), b in word()) {
        let options = ClassifyOptions::default();
        prop_assert_eq!(classify_values(&a, &b, &options), classify_values(&b, &a, &options));
    }

    #[test]
    fn case_variants_are_capitalisation_errors(a in "[a-z]{1,8}") {
        let upper = a.to_uppercase();
        prop_assert_eq!(classify_values(&a, &upper, &ClassifyOptions::default()), ErrorClass::CapitalisationError);
    }

    #[test]
    fn any_punctuation_wins(a in word(), p in prop::sample::select(vec![".", ",", "!", "?", ";", ":"])) {
        prop_assert_eq!(classify_values(&a, p, &ClassifyOptions::default()), ErrorClass::PunctuationError);
    }

    #[test]
    fn reports_round_trip_through_json(r in text(), h in text()) {
        let report = evaluate_pair(&r, &h, &EvalConfig::default());
        prop_assert_eq!(EvaluationReport::from_json(&report.to_json()).unwrap(), report);
    }

    #[test]
    fn identical_text_is_perfect(r in text()) {
        let m = evaluate_pair(&r, &r, &EvalConfig::default()).metrics;
        prop_assert_eq!(m.wer, Some(0.0));
        prop_assert_eq!(m.punct_ser, Some(0.0));
        prop_assert_eq!(m.cap_ser, Some(0.0));
        prop_assert!(m.errors.is_empty());
    }
}
