//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any of them fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use orthower::align::{cost_indel, cost_sub};
use orthower::{
    align, classify_route, compute_metrics, evaluate_pair, normalise, tokenize, AspectCounts, ClassifyOptions, CostModel,
    EvalConfig, MetricsOptions, MetricsReport, NormaliserConfig, NormaliserId, OperationKind, RouteElement, Token,
    TokenKind,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main() {
    let checks: [(&str, fn() -> Check, Duration); 8] = [
        ("cost table exactness", cost_table, Duration::from_secs(1)),
        ("classic WER oracle equivalence (legacy mode)", legacy_oracle, Duration::from_secs(30)),
        ("DP optimality against exhaustive search", dp_optimality, Duration::from_secs(300)),
        ("micro-examples", micro_examples, Duration::from_secs(1)),
        ("non-destructive round-trip on fuzz corpus", round_trip, Duration::from_secs(60)),
        ("metric identities and monotonicity", metric_identities, Duration::from_secs(60)),
        ("normaliser idempotence and toggle identity", idempotence, Duration::from_secs(120)),
        ("WER vs punctuation SER shape inversion", shape_inversion, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, check, budget) in checks {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > budget {
                Err(format!("took {elapsed:.2?}, budget {budget:?} ({detail})"))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("PASS  {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

fn token(kind: TokenKind, value: &str) -> Token {
    Token::new(kind, "", value, "", 0)
}

fn word(value: &str) -> Token {
    token(TokenKind::Word, value)
}

fn punct(value: &str) -> Token {
    token(TokenKind::Punctuation, value)
}

fn cost_table() -> Check {
    let number = token(TokenKind::Number, "3.14");
    let symbol = token(TokenKind::Symbol, "$");
    let mut cases: Vec<(String, f64, f64)> = Vec::new();
    for p in [".", ",", "!", "?", ";", ":"] {
        cases.push((format!("indel {p:?}"), cost_indel(&punct(p)), 0.5));
    }
    cases.push(("indel word".into(), cost_indel(&word("cat")), 1.0));
    cases.push(("indel number".into(), cost_indel(&number), 1.0));
    cases.push(("indel symbol".into(), cost_indel(&symbol), 1.0));
    let subs: [(Token, Token, f64); 9] = [
        (punct(","), punct("."), 0.5),
        (punct("?"), punct("!"), 0.5),
        (word("Cat"), word("cat"), 0.5),
        (word("HELLO"), word("hello"), 0.5),
        (word("cat"), punct("."), 2.0),
        (punct(","), word("cat"), 2.0),
        (number.clone(), punct(";"), 2.0),
        (word("cat"), word("dog"), 1.0),
        (word("three"), number.clone(), 1.0),
    ];
    for (a, b, expected) in subs {
        cases.push((format!("sub {:?}/{:?}", a.value, b.value), cost_sub(&a, &b), expected));
    }
    for (name, got, expected) in &cases {
        ensure(got == expected, || format!("{name}: got {got}, expected {expected}"))?;
    }
    Ok(format!("{} cases", cases.len()))
}

const PUNCT: [char; 6] = ['.', ',', '!', '?', ';', ':'];

/// Textbook word-level Levenshtein distance.
fn levenshtein(a: &[String], b: &[String]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    for (i, x) in a.iter().enumerate() {
        let mut cur = vec![i + 1; b.len() + 1];
        for (j, y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        prev = cur;
    }
    prev[b.len()]
}

fn classic_words(text: &str) -> Vec<String> {
    text.split_whitespace()
        .map(|w| w.chars().filter(|c| !PUNCT.contains(c)).collect::<String>().to_lowercase())
        .filter(|w| !w.is_empty())
        .collect()
}

fn render(words: &[String], rng: &mut ChaCha8Rng) -> String {
    let mut out = String::new();
    for (i, w) in words.iter().enumerate() {
        if i > 0 {
            out.push_str(if rng.gen_bool(0.1) { "  " } else { " " });
        }
        let mut w = w.clone();
        if rng.gen_bool(0.2) {
            let mut chars = w.chars();
            w = chars.next().map(|c| c.to_uppercase().chain(chars).collect()).unwrap_or_default();
        }
        if rng.gen_bool(0.05) {
            w = w.to_uppercase();
        }
        out.push_str(&w);
        if rng.gen_bool(0.15) {
            out.push(*PUNCT.choose(rng).unwrap());
        }
        if rng.gen_bool(0.03) {
            out.push_str(" ,");
        }
    }
    out
}

fn legacy_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let vocab: Vec<String> = (0..50)
        .map(|_| {
            let len = rng.gen_range(1..=8);
            (0..len).map(|_| rng.gen_range(b'a'..=b'z') as char).collect()
        })
        .collect();
    let config = EvalConfig::legacy();
    let pairs = 1000;
    for n in 0..pairs {
        let len = rng.gen_range(0..=40);
        let reference: Vec<String> = (0..len).map(|_| vocab.choose(&mut rng).unwrap().clone()).collect();
        let mut hypothesis = reference.clone();
        for _ in 0..rng.gen_range(0..=10) {
            let at = rng.gen_range(0..=hypothesis.len());
            match rng.gen_range(0..3) {
                0 if at < hypothesis.len() => hypothesis[at] = vocab.choose(&mut rng).unwrap().clone(),
                1 if at < hypothesis.len() => {
                    hypothesis.remove(at);
                }
                _ => hypothesis.insert(at, vocab.choose(&mut rng).unwrap().clone()),
            }
        }
        let (r, h) = (render(&reference, &mut rng), render(&hypothesis, &mut rng));
        let (rw, hw) = (classic_words(&r), classic_words(&h));
        let distance = levenshtein(&rw, &hw);
        let expected = if rw.is_empty() {
            (distance == 0).then_some(0.0)
        } else {
            Some(distance as f64 / rw.len() as f64)
        };
        let report = evaluate_pair(&r, &h, &config);
        let counts = report.metrics.word.counts;
        ensure(
            counts.errors() as usize == distance && counts.support() as usize == rw.len(),
            || format!("pair {n}: {r:?} / {h:?}: counts {counts:?}, oracle distance {distance} over {}", rw.len()),
        )?;
        let rounded = expected.map(|w| (w * 10_000.0).round() / 10_000.0);
        ensure(report.metrics.wer == rounded && report.legacy_wer == rounded, || {
            format!("pair {n}: reported {:?}, oracle {:?}", report.metrics.wer, expected)
        })?;
    }
    Ok(format!("{pairs} random pairs match exactly"))
}

/// Edit costs in half units, written out from the cost constants.
fn half_indel(t: &Token) -> u32 {
    if t.kind == TokenKind::Punctuation {
        1
    } else {
        2
    }
}

fn half_sub(a: &Token, b: &Token) -> u32 {
    let (pa, pb) = (a.kind == TokenKind::Punctuation, b.kind == TokenKind::Punctuation);
    if pa != pb {
        4
    } else if pa {
        1
    } else if a.value.to_lowercase() == b.value.to_lowercase() {
        1
    } else {
        2
    }
}

fn stripped(tokens: &[Token]) -> Option<String> {
    if tokens.iter().any(|t| t.kind == TokenKind::Punctuation) {
        return None;
    }
    Some(tokens.iter().flat_map(|t| t.value.chars()).filter(|c| *c != '-' && *c != ' ').collect())
}

/// Minimum cost over every edit script from position (i, j) onwards.
fn search(r: &[Token], h: &[Token], i: usize, j: usize, memo: &mut HashMap<(usize, usize), u32>) -> u32 {
    if let Some(&c) = memo.get(&(i, j)) {
        return c;
    }
    let mut best = u32::MAX;
    if i < r.len() {
        best = best.min(half_indel(&r[i]) + search(r, h, i + 1, j, memo));
    }
    if j < h.len() {
        best = best.min(half_indel(&h[j]) + search(r, h, i, j + 1, memo));
    }
    if i < r.len() && j < h.len() {
        let step = if r[i].value == h[j].value { 0 } else { half_sub(&r[i], &h[j]) };
        best = best.min(step + search(r, h, i + 1, j + 1, memo));
        for x in 1..=r.len() - i {
            for y in 1..=h.len() - j {
                let (rs, hs) = (&r[i..i + x], &h[j..j + y]);
                if x == 1 && y == 1 && rs[0].value == hs[0].value {
                    continue;
                }
                match (stripped(rs), stripped(hs)) {
                    (Some(a), Some(b)) if !a.is_empty() && a == b => {
                        best = best.min(search(r, h, i + x, j + y, memo));
                    }
                    _ => {}
                }
            }
        }
    }
    if i == r.len() && j == h.len() {
        best = 0;
    }
    memo.insert((i, j), best);
    best
}

const ALPHABET: [&str; 5] = ["a", "b", "ab", "A", ","];

fn sequence(code: &[usize]) -> Vec<Token> {
    code.iter()
        .map(|&k| if ALPHABET[k] == "," { punct(",") } else { word(ALPHABET[k]) })
        .collect()
}

fn all_sequences(max_len: usize) -> Vec<Vec<Token>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &layer {
            for k in 0..ALPHABET.len() {
                let mut t = s.clone();
                t.push(k);
                next.push(t);
            }
        }
        out.extend(next.iter().map(|s| sequence(s)));
        layer = next;
    }
    out
}

fn check_optimal(r: &[Token], h: &[Token], model: &CostModel) -> Result<(), String> {
    let got = align(r, h, model);
    let expected = search(r, h, 0, 0, &mut HashMap::new());
    let values = |t: &[Token]| t.iter().map(|t| t.value.clone()).collect::<Vec<_>>();
    ensure(got.total_cost.halves() == expected, || {
        format!("{:?} / {:?}: align {} vs search {}", values(r), values(h), got.total_cost, expected as f64 / 2.0)
    })?;
    let sum: u32 = got.route.iter().map(|e| e.cost.halves()).sum();
    ensure(sum == expected, || format!("{:?} / {:?}: route costs sum to {sum}", values(r), values(h)))
}

fn dp_optimality() -> Check {
    let model = CostModel::default();
    let exhaustive = all_sequences(4);
    let mut pairs = 0u64;
    for r in &exhaustive {
        for h in &exhaustive {
            check_optimal(r, h, &model)?;
            pairs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let sampled = 20_000;
    for _ in 0..sampled {
        let code = |rng: &mut ChaCha8Rng| -> Vec<usize> {
            let len = rng.gen_range(0..=6);
            (0..len).map(|_| rng.gen_range(0..ALPHABET.len())).collect()
        };
        let (r, h) = (sequence(&code(&mut rng)), sequence(&code(&mut rng)));
        check_optimal(&r, &h, &model)?;
    }
    Ok(format!("all {pairs} pairs up to length 4, plus {sampled} random pairs up to length 6"))
}

fn micro_examples() -> Check {
    let model = CostModel::default();
    let compound = align(&tokenize("ice-cream").tokens, &tokenize("icecream").tokens, &model);
    ensure(compound.total_cost.as_f64() == 0.0, || format!("ice-cream/icecream cost {}", compound.total_cost))?;

    let comma = align(&tokenize(",").tokens, &tokenize("cat").tokens, &model);
    let mut ops: Vec<OperationKind> = comma.route.iter().map(|e| e.op).collect();
    ops.sort();
    ensure(comma.total_cost.as_f64() == 1.5 && ops == [OperationKind::Insertion, OperationKind::Deletion], || {
        format!("comma/word: cost {}, ops {ops:?}", comma.total_cost)
    })?;

    let split = normalise(&tokenize("won't"), &NormaliserConfig::all());
    let values = split.values();
    ensure(
        values == ["will", "not"]
            && split.tokens.iter().all(|t| t.normalisations == [NormaliserId::Contractions])
            && split.tokens[0].raw == "won't",
        || format!("won't split into {values:?}"),
    )?;

    let spoken = normalise(&tokenize("two thousand dollars"), &NormaliserConfig::all());
    let written = normalise(&tokenize("$2000"), &NormaliserConfig::all());
    ensure(spoken.values() == ["$2000"] && written.values() == ["$2000"], || {
        format!("spoken {:?}, written {:?}", spoken.values(), written.values())
    })?;
    let currency = align(&spoken.tokens, &written.tokens, &model);
    ensure(currency.total_cost.as_f64() == 0.0, || format!("currency cost {}", currency.total_cost))?;
    Ok("4 examples exact".into())
}

const FUZZ_ATOMS: &[&str] = &[
    "a", "b", "Z", "é", "ß", "Ω", "ж", "字", "e\u{301}", "1", "7", "0", " ", "  ", "\t", "\n", "\r\n", ".", ",", "!", "?",
    ";", ":", "%", "$", "€", "£", "¥", "'", "’", "‘", "\"", "“", "”", "«", "»", "-", "—", "–", "…", "(", ")", "[",
    "]", "<", ">", "#", "@", "/", "\u{200d}", "👍🏽", "👨‍👩‍👧", "\u{a0}", "Mr.", "won't", "ice-cream", "two",
    "thousand", "dollars", "colour", "hmm", "[laughs]", "3.14", "2,000", "e.g.", "U.S.A.",
];

fn fuzz_corpus(n: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=24);
            (0..len).map(|_| *FUZZ_ATOMS.choose(&mut rng).unwrap()).collect()
        })
        .collect()
}

fn round_trip() -> Check {
    let corpus = fuzz_corpus(10_000);
    for s in &corpus {
        let t = tokenize(s);
        ensure(t.rejoin() == *s, || format!("{s:?} rejoined as {:?}", t.rejoin()))?;
    }
    Ok(format!("{} strings", corpus.len()))
}

fn aspect_identities(name: &str, s: &orthower::metrics::AspectScore) -> Result<(), String> {
    let AspectCounts { correct: c, substitutions: sub, deletions: d, insertions: i } = s.counts;
    let (c, sub, d, i) = (c as f64, sub as f64, d as f64, i as f64);
    let rate = (sub + d + i) / (c + sub + d);
    match s.error_rate {
        Some(r) if c + sub + d > 0.0 => ensure((r - rate).abs() <= 1e-12, || format!("{name}: rate {r} vs {rate}"))?,
        Some(r) => ensure(r == 0.0 && i == 0.0, || format!("{name}: empty support with rate {r}"))?,
        None => ensure(c + sub + d == 0.0 && i > 0.0, || format!("{name}: undefined rate with support"))?,
    }
    let denominator = 2.0 * c + 2.0 * sub + d + i;
    let f1 = if denominator == 0.0 { 1.0 } else { 2.0 * c / denominator };
    ensure((s.f1 - f1).abs() <= 1e-12, || format!("{name}: F1 {} vs {f1}", s.f1))?;
    ensure((0.0..=1.0).contains(&s.f1), || format!("{name}: F1 {} out of range", s.f1))
}

fn all_identities(m: &MetricsReport) -> Result<(), String> {
    aspect_identities("word", &m.word)?;
    aspect_identities("punctuation", &m.punctuation)?;
    aspect_identities("capitalisation", &m.capitalisation)?;
    ensure(m.wer == m.word.error_rate && m.punct_f1 == m.punctuation.f1 && m.cap_ser == m.capitalisation.error_rate, || {
        "summary fields disagree with aspects".into()
    })
}

const FIXTURES: &[(&str, &str)] = &[
    ("", ""),
    ("The cat sat.", "The cat sat."),
    ("the cat sat .", "the cat ."),
    ("Hello, world.", "hello world."),
    ("Yes, we can.", "yes. we can."),
    ("I like ice-cream, really.", "I like icecream really"),
    ("Mr. Smith paid $2000.", "mister smith paid two thousand dollars"),
    ("Their walk, in Paris.", "there walked in paris;"),
    ("", "Surprise!"),
    ("Stop.", ""),
    ("Um, we won't go.", "we will not go"),
];

fn route_for(r: &str, h: &str) -> Vec<RouteElement> {
    let mut a = align(&tokenize(r).tokens, &tokenize(h).tokens, &CostModel::default());
    classify_route(&mut a.route, &ClassifyOptions::default());
    a.route
}

fn metric_identities() -> Check {
    let options = MetricsOptions::default();
    for (r, h) in FIXTURES {
        all_identities(&compute_metrics(&route_for(r, h), &options)).map_err(|e| format!("{r:?}/{h:?}: {e}"))?;
        let report = evaluate_pair(r, h, &EvalConfig::default()).metrics;
        for (name, score) in [("word", &report.word), ("punctuation", &report.punctuation), ("capitalisation", &report.capitalisation)] {
            let exact = orthower::metrics::AspectScore::from(score.counts);
            let close = |a: Option<f64>, b: Option<f64>| match (a, b) {
                (Some(a), Some(b)) => (a - b).abs() <= 5e-5,
                (a, b) => a == b,
            };
            ensure(close(score.error_rate, exact.error_rate) && (score.f1 - exact.f1).abs() <= 5e-5, || {
                format!("{r:?}/{h:?}: reported {name} rates are not its rounded counts")
            })?;
        }
    }
    let corpus = fuzz_corpus(500);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..500 {
        let (r, h) = (&corpus[k], corpus.choose(&mut rng).unwrap());
        let mut route = route_for(r, h);
        let before = compute_metrics(&route, &options);
        all_identities(&before).map_err(|e| format!("{r:?}/{h:?}: {e}"))?;
        route.push(RouteElement {
            op: OperationKind::Insertion,
            reference: None,
            hypothesis: Some(word("extra")),
            cost: CostModel::default().indel(&word("extra")),
            error_class: None,
        });
        let after = compute_metrics(&route, &options);
        all_identities(&after)?;
        let rank = |w: Option<f64>| w.unwrap_or(f64::INFINITY);
        ensure(rank(after.wer) >= rank(before.wer), || {
            format!("{r:?}/{h:?}: WER fell from {:?} to {:?} after an insertion", before.wer, after.wer)
        })?;
    }
    Ok(format!("{} fixtures, 500 monotonicity cases", FIXTURES.len()))
}

fn idempotence() -> Check {
    let corpus = fuzz_corpus(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in &corpus {
        let t = tokenize(s);
        ensure(normalise(&t, &NormaliserConfig::none()) == t, || format!("{s:?}: empty config changed tokens"))?;
        let mut config = NormaliserConfig::all();
        for id in NormaliserId::ALL {
            if rng.gen_bool(0.3) {
                config = config.without(id);
            }
        }
        for c in [NormaliserConfig::all(), config] {
            let once = normalise(&t, &c);
            let twice = normalise(&once, &c);
            ensure(twice == once, || format!("{s:?}: not idempotent under {:?}", c.enabled))?;
            ensure(once.rejoin() == *s, || format!("{s:?}: normalised rejoin {:?}", once.rejoin()))?;
        }
    }
    Ok(format!("{} strings, full and random configs", corpus.len()))
}

fn shape_inversion() -> Check {
    let reference = "Well, the meeting ran late. We left at nine; nobody complained. Did it matter? Not really, no.";
    let shuffled_punct = "Well the meeting, ran late; We left at nine. nobody complained? Did it matter. Not really no,";
    let word_errors = "Well, a meeting ran long. We went at five; somebody complained. Did that matter? Not greatly, no.";
    let config = EvalConfig::default();
    let a = evaluate_pair(reference, shuffled_punct, &config).metrics;
    let b = evaluate_pair(reference, word_errors, &config).metrics;
    let (wa, wb) = (a.wer.unwrap(), b.wer.unwrap());
    let (pa, pb) = (a.punct_ser.unwrap(), b.punct_ser.unwrap());
    ensure(wa < wb && pa > pb, || format!("punctuation-shuffled WER {wa} SER {pa}; word-error WER {wb} SER {pb}"))?;
    Ok(format!("punctuation-shuffled WER {wa}/SER {pa}, word-error WER {wb}/SER {pb}"))
}
