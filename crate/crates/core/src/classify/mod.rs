//! Error classes for substitutions.
//!
//! Rules are tried from the most specific to the most general and the
//! first one that fires wins:
//!
//! | class            | fires when                                                   |
//! |------------------|--------------------------------------------------------------|
//! | `Punctuation`    | either token is sentence punctuation                         |
//! | `Capitalisation` | the values differ only in case                               |
//! | `Number`         | either value is a canonical number                           |
//! | `Compound`       | equal once spaces and hyphens are removed                    |
//! | `Suffix`         | the longer value starts with the shorter one (`walk/walked`) |
//! | `Prefix`         | the longer value ends with the shorter one (`do/undo`)       |
//! | `Affix`          | the shorter value sits inside the longer one                 |
//! | `Stem`           | equal Porter stems                                           |
//! | `Homophone`      | equal primary Double Metaphone code                          |
//! | `Word`           | anything else                                                |
//!
//! After `Compound`, values are compared in lowercase.

mod metaphone;
mod porter;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use metaphone::double_metaphone;
pub use porter::stem;

use crate::align::{OperationKind, RouteElement};
use crate::normalise::fold_diacritics;
use crate::token::{Token, PUNCTUATION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    PunctuationError,
    CapitalisationError,
    NumberError,
    CompoundError,
    PrefixError,
    SuffixError,
    AffixError,
    StemError,
    HomophoneError,
    WordError,
}

impl ErrorClass {
    pub const ALL: [ErrorClass; 10] = [
        ErrorClass::PunctuationError,
        ErrorClass::CapitalisationError,
        ErrorClass::NumberError,
        ErrorClass::CompoundError,
        ErrorClass::PrefixError,
        ErrorClass::SuffixError,
        ErrorClass::AffixError,
        ErrorClass::StemError,
        ErrorClass::HomophoneError,
        ErrorClass::WordError,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ErrorClass::PunctuationError => "punctuation_error",
            ErrorClass::CapitalisationError => "capitalisation_error",
            ErrorClass::NumberError => "number_error",
            ErrorClass::CompoundError => "compound_error",
            ErrorClass::PrefixError => "prefix_error",
            ErrorClass::SuffixError => "suffix_error",
            ErrorClass::AffixError => "affix_error",
            ErrorClass::StemError => "stem_error",
            ErrorClass::HomophoneError => "homophone_error",
            ErrorClass::WordError => "word_error",
        }
    }
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Require both Double Metaphone codes to agree instead of only the
    /// primary ones.
    pub homophone_strict: bool,
}

/// Labels every substitution of `route`. Compound steps are labelled
/// [`ErrorClass::CompoundError`]; all other steps are left unlabelled.
pub fn classify_route(route: &mut [RouteElement], options: &ClassifyOptions) {
    for element in route.iter_mut() {
        element.error_class = match element.op {
            OperationKind::Substitution => match (&element.reference, &element.hypothesis) {
                (Some(a), Some(b)) => Some(classify_tokens(a, b, options)),
                _ => None,
            },
            op if op.is_compound() => Some(ErrorClass::CompoundError),
            _ => None,
        };
    }
}

/// Classifies a substitution of reference token `a` by hypothesis token `b`.
pub fn classify_tokens(a: &Token, b: &Token, options: &ClassifyOptions) -> ErrorClass {
    classify_values(&a.value, &b.value, options)
}

/// Classifies two word values with the default options.
pub fn classify_pair(reference: &str, hypothesis: &str) -> ErrorClass {
    classify_values(reference, hypothesis, &ClassifyOptions::default())
}

/// Classifies two comparison values. Only the values matter: a token is
/// punctuation exactly when its value is a single sentence mark.
pub fn classify_values(a: &str, b: &str, options: &ClassifyOptions) -> ErrorClass {
    let is_punct = |s: &str| {
        let mut chars = s.chars();
        matches!((chars.next(), chars.next()), (Some(c), None) if PUNCTUATION.contains(&c))
    };
    if is_punct(a) || is_punct(b) {
        return ErrorClass::PunctuationError;
    }
    let (la, lb) = (a.to_lowercase(), b.to_lowercase());
    if la == lb {
        return ErrorClass::CapitalisationError;
    }
    if is_canonical_number(a) || is_canonical_number(b) {
        return ErrorClass::NumberError;
    }
    let strip = |s: &str| s.chars().filter(|c| *c != ' ' && *c != '-').collect::<String>();
    if strip(a) == strip(b) {
        return ErrorClass::CompoundError;
    }
    let (short, long) = if la.chars().count() <= lb.chars().count() { (&la, &lb) } else { (&lb, &la) };
    if !short.is_empty() {
        if long.starts_with(short.as_str()) {
            return ErrorClass::SuffixError;
        }
        if long.ends_with(short.as_str()) {
            return ErrorClass::PrefixError;
        }
        if long.contains(short.as_str()) {
            return ErrorClass::AffixError;
        }
    }
    if stem(&la) == stem(&lb) {
        return ErrorClass::StemError;
    }
    let (pa, sa) = double_metaphone(&fold_diacritics(&la));
    let (pb, sb) = double_metaphone(&fold_diacritics(&lb));
    let homophone = if options.homophone_strict {
        let alt = |p: &String, s: &String| if s.is_empty() { p.clone() } else { s.clone() };
        pa == pb && alt(&pa, &sa) == alt(&pb, &sb)
    } else {
        pa == pb
    };
    if homophone && !pa.is_empty() {
        return ErrorClass::HomophoneError;
    }
    ErrorClass::WordError
}

/// `[currency] digits [(. | ,) digits]* [% | st | nd | rd | th]`.
pub fn is_canonical_number(value: &str) -> bool {
    let mut rest = value;
    if let Some(c) = rest.chars().next() {
        if crate::lexer::SYMBOLS.contains(&c) && c != '%' {
            rest = &rest[c.len_utf8()..];
        }
    }
    for tail in ["%", "st", "nd", "rd", "th"] {
        if let Some(stripped) = rest.strip_suffix(tail) {
            rest = stripped;
            break;
        }
    }
    !rest.is_empty()
        && rest
            .split(['.', ','])
            .all(|group| !group.is_empty() && group.bytes().all(|b| b.is_ascii_digit()))
}
