use serde::{Deserialize, Serialize};

use crate::normalise::NormaliserId;

/// Sentence punctuation that forms its own tokens. Every other mark
/// (quotes, brackets, dashes, ellipses) is kept as a token affix.
pub const PUNCTUATION: [char; 6] = ['.', ',', '!', '?', ';', ':'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
    Symbol,
}

/// Half-open range of character (Unicode scalar value) offsets into the
/// source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

/// A categorised unit of text.
///
/// `raw` holds every source character the token covers, affixes included,
/// so the raws of consecutive tokens tile the source. `value` is the string
/// used for comparison; normalisers rewrite it and append their id to
/// `normalisations`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    pub raw: String,
    pub value: String,
    pub prefix: String,
    pub suffix: String,
    #[serde(default)]
    pub normalisations: Vec<NormaliserId>,
    pub span: Span,
}

impl Token {
    /// Builds a token from its three source pieces. `start` is the character
    /// offset of the first prefix character.
    pub fn new(kind: TokenKind, prefix: &str, core: &str, suffix: &str, start: usize) -> Self {
        let len = prefix.chars().count() + core.chars().count() + suffix.chars().count();
        Token {
            kind,
            raw: format!("{prefix}{core}{suffix}"),
            value: core.to_string(),
            prefix: prefix.to_string(),
            suffix: suffix.to_string(),
            normalisations: Vec::new(),
            span: Span::new(start, start + len),
        }
    }

    /// The raw characters without prefix and suffix.
    pub fn core(&self) -> &str {
        let end = self.raw.len().saturating_sub(self.suffix.len());
        self.raw.get(self.prefix.len()..end).unwrap_or("")
    }

    pub fn is_punctuation(&self) -> bool {
        self.kind == TokenKind::Punctuation
    }

    pub fn is_normalised(&self) -> bool {
        !self.normalisations.is_empty()
    }

    /// Replaces the comparison value, recording `by` in the trail when the
    /// value actually changes.
    pub fn rewrite(&mut self, value: impl Into<String>, by: NormaliserId) -> bool {
        let value = value.into();
        if value == self.value {
            return false;
        }
        self.value = value;
        self.normalisations.push(by);
        true
    }
}

/// A token list together with everything needed to rebuild its source:
/// tokens removed by normalisers and, for inputs without any token, the
/// bare affix text.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub tokens: Vec<Token>,
    #[serde(default)]
    pub removed: Vec<Token>,
    #[serde(default)]
    pub residue: String,
}

impl Transcript {
    pub fn new(tokens: Vec<Token>) -> Self {
        Transcript {
            tokens,
            ..Default::default()
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Live and removed tokens in source order.
    pub fn all_tokens(&self) -> Vec<&Token> {
        let mut all: Vec<&Token> = self.tokens.iter().chain(&self.removed).collect();
        all.sort_by_key(|t| (t.span.start, t.span.end));
        all
    }

    /// Reassembles the original source text.
    pub fn rejoin(&self) -> String {
        let mut out: String = self.all_tokens().iter().map(|t| t.raw.as_str()).collect();
        out.push_str(&self.residue);
        out
    }

    pub fn values(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.value.as_str()).collect()
    }
}
