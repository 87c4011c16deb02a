//! Splits text into categorised tokens without losing a single character.
//!
//! Words, numbers, sentence punctuation (`. , ! ? ; :`) and the symbols
//! `% $ € £ ¥` become tokens. Everything else (whitespace, quotes, dashes,
//! brackets, ellipses, unknown symbols) is attached to a neighbouring token
//! as prefix or suffix: the part of a gap up to its first whitespace
//! character closes the previous token, the rest opens the next one.
//!
//! A period stays inside a word when the word is a known abbreviation
//! (`Mrs.`) or a single letter (`J.`, `e.g.`), and between two digits
//! (`3.14`). Commas between digits are kept too (`2,000`).

use unicode_segmentation::UnicodeSegmentation;

use crate::lexicon::Lexicon;
use crate::token::{Token, TokenKind, Transcript, PUNCTUATION};

pub const SYMBOLS: [char; 5] = ['%', '$', '€', '£', '¥'];

/// Tokenises with the built-in lexicon.
pub fn tokenize(source: &str) -> Transcript {
    Lexer::new(Lexicon::builtin()).tokenize(source)
}

#[derive(Debug, Clone, Copy)]
pub struct Lexer<'a> {
    lexicon: &'a Lexicon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Letter,
    Digit,
    OtherAlnum,
    Punct,
    Symbol,
    Apostrophe,
    Hyphen,
    Other,
}

impl Class {
    fn of(grapheme: &str) -> Class {
        let mut chars = grapheme.chars();
        let first = chars.next().unwrap_or(' ');
        let single = chars.next().is_none();
        match first {
            c if c.is_alphabetic() => Class::Letter,
            c if c.is_ascii_digit() => Class::Digit,
            c if c.is_alphanumeric() => Class::OtherAlnum,
            c if single && PUNCTUATION.contains(&c) => Class::Punct,
            c if single && SYMBOLS.contains(&c) => Class::Symbol,
            '\'' | '\u{2019}' => Class::Apostrophe,
            '-' | '\u{2010}' => Class::Hyphen,
            _ => Class::Other,
        }
    }

    fn is_word(self) -> bool {
        matches!(self, Class::Letter | Class::Digit | Class::OtherAlnum)
    }
}

struct Core {
    start: usize,
    end: usize,
    kind: TokenKind,
}

impl<'a> Lexer<'a> {
    pub fn new(lexicon: &'a Lexicon) -> Self {
        Lexer { lexicon }
    }

    pub fn tokenize(&self, source: &str) -> Transcript {
        let graphemes: Vec<&str> = source.graphemes(true).collect();
        let classes: Vec<Class> = graphemes.iter().map(|g| Class::of(g)).collect();
        let cores = self.find_cores(&graphemes, &classes);
        if cores.is_empty() {
            return Transcript {
                residue: source.to_string(),
                ..Default::default()
            };
        }

        // Character offset of every grapheme boundary.
        let mut offsets = Vec::with_capacity(graphemes.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for g in &graphemes {
            acc += g.chars().count();
            offsets.push(acc);
        }
        let text = |from: usize, to: usize| -> String { graphemes[from..to].concat() };

        // Split every gap into (suffix of the left token, prefix of the right one).
        let mut prefixes = Vec::with_capacity(cores.len());
        let mut suffixes = Vec::with_capacity(cores.len());
        prefixes.push(text(0, cores[0].start));
        for pair in cores.windows(2) {
            let gap = &graphemes[pair[0].end..pair[1].start];
            let split = gap
                .iter()
                .position(|g| g.chars().next().is_some_and(char::is_whitespace))
                .unwrap_or(gap.len());
            suffixes.push(gap[..split].concat());
            prefixes.push(gap[split..].concat());
        }
        suffixes.push(text(cores[cores.len() - 1].end, graphemes.len()));

        let tokens = cores
            .iter()
            .zip(prefixes.iter().zip(&suffixes))
            .map(|(core, (prefix, suffix))| {
                let start = offsets[core.start] - prefix.chars().count();
                Token::new(core.kind, prefix, &text(core.start, core.end), suffix, start)
            })
            .collect();
        Transcript::new(tokens)
    }

    fn find_cores(&self, g: &[&str], class: &[Class]) -> Vec<Core> {
        let n = g.len();
        let mut cores = Vec::new();
        let mut i = 0;
        while i < n {
            match class[i] {
                Class::Punct => {
                    cores.push(Core { start: i, end: i + 1, kind: TokenKind::Punctuation });
                    i += 1;
                }
                Class::Symbol => {
                    cores.push(Core { start: i, end: i + 1, kind: TokenKind::Symbol });
                    i += 1;
                }
                c if c.is_word() => {
                    let end = self.word_end(g, class, i);
                    let kind = if is_digit_group(&class[i..end], &g[i..end]) {
                        TokenKind::Number
                    } else {
                        TokenKind::Word
                    };
                    cores.push(Core { start: i, end, kind });
                    i = end;
                }
                _ => i += 1,
            }
        }
        cores
    }

    fn word_end(&self, g: &[&str], class: &[Class], start: usize) -> usize {
        let n = g.len();
        let mut j = start + 1;
        while j < n {
            if class[j].is_word() {
                j += 1;
            } else if j + 1 < n
                && matches!(class[j], Class::Apostrophe | Class::Hyphen)
                && class[j - 1] == Class::Letter
                && class[j + 1] == Class::Letter
            {
                j += 2;
            } else if j + 1 < n
                && (g[j] == "." || g[j] == ",")
                && class[j - 1] == Class::Digit
                && class[j + 1] == Class::Digit
            {
                j += 2;
            } else {
                break;
            }
        }

        if j < n && g[j] == "." && class[start..j].contains(&Class::Letter) {
            let single_letter = j - start == 1 && class[start] == Class::Letter;
            let word = format!("{}.", g[start..j].concat());
            if single_letter {
                j += 1;
                // Dotted initialisms: e.g. / U.S.A.
                while j + 1 < n && class[j] == Class::Letter && g[j + 1] == "." {
                    j += 2;
                }
            } else if self.lexicon.is_abbreviation(&word) {
                j += 1;
            }
        }
        j
    }
}

fn is_digit_group(class: &[Class], g: &[&str]) -> bool {
    class.first() == Some(&Class::Digit)
        && class.last() == Some(&Class::Digit)
        && class
            .iter()
            .zip(g)
            .all(|(c, g)| *c == Class::Digit || *g == "." || *g == ",")
}
