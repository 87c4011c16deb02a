//! Non-destructive token normalisers.
//!
//! Normalisers only touch comparison values. Raw text and affixes survive,
//! removed tokens move to [`Transcript::removed`], and every token whose
//! value changes records the responsible [`NormaliserId`] in its trail.
//! Enabled normalisers always run in the order of [`NormaliserId::ALL`].

mod numbers;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

use crate::lexicon::{fold_key, Lexicon};
use crate::token::{Span, Token, TokenKind, Transcript};

pub use numbers::normalise_numbers;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormaliserId {
    Annotations,
    Interjections,
    Abbreviations,
    Contractions,
    BritishSpelling,
    Diacritics,
    Symbols,
    Numbers,
}

impl NormaliserId {
    pub const ALL: [NormaliserId; 8] = [
        NormaliserId::Annotations,
        NormaliserId::Interjections,
        NormaliserId::Abbreviations,
        NormaliserId::Contractions,
        NormaliserId::BritishSpelling,
        NormaliserId::Diacritics,
        NormaliserId::Symbols,
        NormaliserId::Numbers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormaliserId::Annotations => "annotations",
            NormaliserId::Interjections => "interjections",
            NormaliserId::Abbreviations => "abbreviations",
            NormaliserId::Contractions => "contractions",
            NormaliserId::BritishSpelling => "british_spelling",
            NormaliserId::Diacritics => "diacritics",
            NormaliserId::Symbols => "symbols",
            NormaliserId::Numbers => "numbers",
        }
    }
}

impl fmt::Display for NormaliserId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for NormaliserId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        NormaliserId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| format!("unknown normaliser `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormaliserConfig {
    pub enabled: BTreeSet<NormaliserId>,
}

impl Default for NormaliserConfig {
    fn default() -> Self {
        NormaliserConfig::all()
    }
}

impl NormaliserConfig {
    pub fn all() -> Self {
        NormaliserConfig {
            enabled: NormaliserId::ALL.into_iter().collect(),
        }
    }

    pub fn none() -> Self {
        NormaliserConfig {
            enabled: BTreeSet::new(),
        }
    }

    pub fn without(mut self, id: NormaliserId) -> Self {
        self.enabled.remove(&id);
        self
    }

    pub fn with(mut self, id: NormaliserId) -> Self {
        self.enabled.insert(id);
        self
    }

    pub fn is_enabled(&self, id: NormaliserId) -> bool {
        self.enabled.contains(&id)
    }

    /// Parses a `--disable` list: `all` or comma-separated normaliser names.
    pub fn disabling(list: &str) -> Result<Self, String> {
        let mut config = NormaliserConfig::all();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item.eq_ignore_ascii_case("all") {
                config.enabled.clear();
            } else {
                config.enabled.remove(&item.parse()?);
            }
        }
        Ok(config)
    }
}

/// Runs the enabled normalisers with the built-in lexicon.
pub fn normalise(transcript: &Transcript, config: &NormaliserConfig) -> Transcript {
    Normaliser::new(Lexicon::builtin()).run(transcript, config)
}

/// Counts, per normaliser, the source tokens it changed or removed.
pub fn normalisation_counts<'a>(
    transcripts: impl IntoIterator<Item = &'a Transcript>,
) -> BTreeMap<NormaliserId, usize> {
    let mut counts = BTreeMap::new();
    for transcript in transcripts {
        for token in transcript.tokens.iter().chain(&transcript.removed) {
            // Extra words produced by a split share their origin's raw text.
            if token.raw.is_empty() {
                continue;
            }
            let ids: BTreeSet<_> = token.normalisations.iter().copied().collect();
            for id in ids {
                *counts.entry(id).or_insert(0) += 1;
            }
        }
    }
    counts
}

#[derive(Debug, Clone, Copy)]
pub struct Normaliser<'a> {
    lexicon: &'a Lexicon,
}

const MAX_PASSES: usize = 8;

impl<'a> Normaliser<'a> {
    pub fn new(lexicon: &'a Lexicon) -> Self {
        Normaliser { lexicon }
    }

    /// Applies the enabled normalisers in order, repeating the sequence
    /// until nothing changes. A later pass can expose work for an earlier
    /// one: folding "éwon't" yields a contraction.
    pub fn run(&self, transcript: &Transcript, config: &NormaliserConfig) -> Transcript {
        let mut out = self.pass(transcript, config);
        for _ in 0..MAX_PASSES {
            let next = self.pass(&out, config);
            if next == out {
                break;
            }
            out = next;
        }
        out
    }

    fn pass(&self, transcript: &Transcript, config: &NormaliserConfig) -> Transcript {
        let mut out = transcript.clone();
        for id in NormaliserId::ALL {
            if !config.is_enabled(id) {
                continue;
            }
            match id {
                NormaliserId::Annotations => remove_annotations(&mut out),
                NormaliserId::Interjections => {
                    let lexicon = self.lexicon;
                    remove_where(&mut out, id, |t| {
                        t.kind == TokenKind::Word && lexicon.is_interjection(&t.value)
                    })
                }
                NormaliserId::Abbreviations => {
                    out.tokens = expand(out.tokens, id, |t| {
                        (t.kind == TokenKind::Word)
                            .then(|| self.lexicon.abbreviation(&t.value))
                            .flatten()
                            .map(|e| transfer_case(&t.value, e))
                    })
                }
                NormaliserId::Contractions => {
                    out.tokens = expand(out.tokens, id, |t| {
                        (t.kind == TokenKind::Word)
                            .then(|| self.expand_contraction(&t.value))
                            .flatten()
                    })
                }
                NormaliserId::BritishSpelling => {
                    for t in out.tokens.iter_mut().filter(|t| t.kind == TokenKind::Word) {
                        if let Some(us) = self.lexicon.american_spelling(&t.value) {
                            let us = transfer_case(&t.value, us);
                            t.rewrite(us, id);
                        }
                    }
                }
                NormaliserId::Diacritics => {
                    for t in out.tokens.iter_mut().filter(|t| !t.is_punctuation()) {
                        let folded = fold_diacritics(&t.value);
                        t.rewrite(folded, id);
                    }
                }
                NormaliserId::Symbols => {
                    for t in out.tokens.iter_mut().filter(|t| t.kind == TokenKind::Symbol) {
                        if let Some(literal) = symbol_literal(&t.value) {
                            t.rewrite(literal, id);
                            t.kind = TokenKind::Word;
                        }
                    }
                }
                NormaliserId::Numbers => out.tokens = numbers::normalise_tokens(out.tokens),
            }
        }
        out.removed.sort_by_key(|t| (t.span.start, t.span.end));
        out
    }

    fn expand_contraction(&self, word: &str) -> Option<String> {
        if let Some(long) = self.lexicon.contraction(word) {
            return Some(transfer_case(word, long));
        }
        let key = fold_key(word);
        const RULES: [(&str, &str); 6] = [
            ("n't", "not"),
            ("'re", "are"),
            ("'ve", "have"),
            ("'ll", "will"),
            ("'d", "would"),
            ("'m", "am"),
        ];
        for (ending, long) in RULES {
            if let Some(stem) = key.strip_suffix(ending) {
                if stem.chars().count() < 1 || !stem.chars().all(char::is_alphabetic) {
                    continue;
                }
                return Some(transfer_case(word, &format!("{stem} {long}")));
            }
        }
        None
    }
}

/// Carries the case pattern of `original` over to `replacement`: all-caps
/// stays all-caps and a leading capital stays a leading capital.
fn transfer_case(original: &str, replacement: &str) -> String {
    let letters: Vec<char> = original.chars().filter(|c| c.is_alphabetic()).collect();
    if letters.len() > 1 && letters.iter().all(|c| c.is_uppercase()) {
        return replacement.to_uppercase();
    }
    if letters.first().is_some_and(|c| c.is_uppercase()) {
        let mut chars = replacement.chars();
        return match chars.next() {
            Some(first) => first.to_uppercase().chain(chars).collect(),
            None => String::new(),
        };
    }
    replacement.to_string()
}

/// Canonical decomposition with combining marks dropped, plus the few
/// Latin letters that do not decompose.
pub(crate) fn fold_diacritics(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.nfkd().filter(|c| !is_combining_mark(*c)) {
        match c {
            'ß' => out.push_str("ss"),
            'æ' => out.push_str("ae"),
            'Æ' => out.push_str("AE"),
            'œ' => out.push_str("oe"),
            'Œ' => out.push_str("OE"),
            'ø' => out.push('o'),
            'Ø' => out.push('O'),
            'ł' => out.push('l'),
            'Ł' => out.push('L'),
            'đ' => out.push('d'),
            'Đ' => out.push('D'),
            'ð' => out.push('d'),
            'þ' => out.push_str("th"),
            'ı' => out.push('i'),
            c => out.push(c),
        }
    }
    out
}

fn symbol_literal(value: &str) -> Option<&'static str> {
    Some(match value {
        "%" => "percent",
        "$" => "dollars",
        "€" => "euros",
        "£" => "pounds",
        "¥" => "yen",
        _ => return None,
    })
}

/// Replaces each matching token by one token per word of its expansion.
/// The first word keeps the original raw text and span; further words are
/// zero-width tokens placed at the end of the original.
fn expand(
    tokens: Vec<Token>,
    id: NormaliserId,
    mut expansion: impl FnMut(&Token) -> Option<String>,
) -> Vec<Token> {
    let mut out = Vec::with_capacity(tokens.len());
    for mut token in tokens {
        let Some(long) = expansion(&token) else {
            out.push(token);
            continue;
        };
        let words: Vec<&str> = long.split_whitespace().collect();
        match words.as_slice() {
            [] => out.push(token),
            [single] => {
                token.rewrite(*single, id);
                out.push(token);
            }
            [first, rest @ ..] => {
                token.value = first.to_string();
                token.normalisations.push(id);
                let end = token.span.end;
                let trail = token.normalisations.clone();
                out.push(token);
                out.extend(rest.iter().map(|w| Token {
                    kind: TokenKind::Word,
                    raw: String::new(),
                    value: w.to_string(),
                    prefix: String::new(),
                    suffix: String::new(),
                    normalisations: trail.clone(),
                    span: Span::new(end, end),
                }));
            }
        }
    }
    out
}

fn remove_where(transcript: &mut Transcript, id: NormaliserId, pred: impl Fn(&Token) -> bool) {
    let tokens = std::mem::take(&mut transcript.tokens);
    for mut token in tokens {
        if pred(&token) {
            token.normalisations.push(id);
            transcript.removed.push(token);
        } else {
            transcript.tokens.push(token);
        }
    }
}

const MAX_ANNOTATION_CHARS: usize = 256;

fn closer_of(c: char) -> Option<char> {
    match c {
        '(' => Some(')'),
        '[' => Some(']'),
        '<' => Some('>'),
        _ => None,
    }
}

/// Removes bracketed annotations: `(pause)`, `[unintelligible]`, `<unknown>`.
///
/// Detection runs over live and removed tokens alike so that the decision
/// only depends on the source text, not on earlier removals.
fn remove_annotations(transcript: &mut Transcript) {
    let mut all: Vec<(Token, bool)> = std::mem::take(&mut transcript.tokens)
        .into_iter()
        .map(|t| (t, true))
        .chain(std::mem::take(&mut transcript.removed).into_iter().map(|t| (t, false)))
        .collect();
    all.sort_by_key(|(t, _)| (t.span.start, t.span.end));

    // Zero-width split words follow their origin's fate.
    let anchors: Vec<usize> = (0..all.len()).filter(|&k| !all[k].0.raw.is_empty()).collect();
    let gap = |a: Option<usize>, b: Option<usize>| -> String {
        let mut s = String::new();
        if let Some(a) = a {
            s.push_str(&all[anchors[a]].0.suffix);
        }
        if let Some(b) = b {
            s.push_str(&all[anchors[b]].0.prefix);
        }
        s
    };

    let mut inside = vec![false; anchors.len()];
    let mut k = 0;
    while k < anchors.len() {
        let before = gap(k.checked_sub(1), Some(k));
        let mut expected = None;
        for c in before.chars() {
            if let Some(close) = closer_of(c) {
                expected = Some(close);
            } else if Some(c) == expected {
                expected = None;
            }
        }
        let Some(close) = expected else {
            k += 1;
            continue;
        };
        let start_char = all[anchors[k]].0.span.start;
        let mut end = None;
        for e in k..anchors.len() {
            if all[anchors[e]].0.span.end - start_char > MAX_ANNOTATION_CHARS {
                break;
            }
            let after = gap(Some(e), (e + 1 < anchors.len()).then_some(e + 1));
            match after.chars().find(|c| *c == close || closer_of(*c).is_some()) {
                Some(c) if c == close => {
                    end = Some(e);
                    break;
                }
                Some(_) => break,
                None => {}
            }
        }
        match end {
            Some(e) => {
                inside[k..=e].iter_mut().for_each(|x| *x = true);
                k = e + 1;
            }
            None => k += 1,
        }
    }

    let mut anchor_inside = false;
    let mut a = 0;
    for (k, (mut token, live)) in all.into_iter().enumerate() {
        if a < anchors.len() && anchors[a] == k {
            anchor_inside = inside[a];
            a += 1;
        }
        if live && anchor_inside {
            token.normalisations.push(NormaliserId::Annotations);
            transcript.removed.push(token);
        } else if live {
            transcript.tokens.push(token);
        } else {
            transcript.removed.push(token);
        }
    }
}
