//! Word lists used by the lexer and the normalisers.
//!
//! Each list is a plain-text file of `key=value` lines; `#` starts a comment
//! and blank lines are ignored. Keys are matched case-insensitively with
//! typographic apostrophes folded to `'`. Built-in copies are embedded in
//! the binary and any file found in a lexicon directory replaces its
//! built-in counterpart.

use std::collections::{HashMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const ABBREVIATIONS_FILE: &str = "abbreviations.txt";
pub const CONTRACTIONS_FILE: &str = "contractions.txt";
pub const SPELLINGS_FILE: &str = "spellings.txt";
pub const INTERJECTIONS_FILE: &str = "interjections.txt";

const ABBREVIATIONS: &str = include_str!("../data/abbreviations.txt");
const CONTRACTIONS: &str = include_str!("../data/contractions.txt");
const SPELLINGS: &str = include_str!("../data/spellings.txt");
const INTERJECTIONS: &str = include_str!("../data/interjections.txt");

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    abbreviations: HashMap<String, String>,
    contractions: HashMap<String, String>,
    spellings: HashMap<String, String>,
    interjections: HashSet<String>,
}

impl Lexicon {
    /// The embedded default lists, parsed once per process.
    pub fn builtin() -> &'static Lexicon {
        static BUILTIN: OnceLock<Lexicon> = OnceLock::new();
        BUILTIN.get_or_init(|| {
            let parse = |text, name| parse_pairs(text, Path::new(name)).expect("embedded lexicon is valid");
            Lexicon {
                abbreviations: parse(ABBREVIATIONS, ABBREVIATIONS_FILE).into_iter().collect(),
                contractions: parse(CONTRACTIONS, CONTRACTIONS_FILE).into_iter().collect(),
                spellings: parse(SPELLINGS, SPELLINGS_FILE).into_iter().collect(),
                interjections: parse(INTERJECTIONS, INTERJECTIONS_FILE)
                    .into_iter()
                    .map(|(k, _)| k)
                    .collect(),
            }
        })
    }

    /// Loads lists from `dir`, falling back to the built-in list for every
    /// file that is absent.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Lexicon> {
        let dir = dir.as_ref();
        if !dir.is_dir() {
            return Err(Error::io(
                dir,
                std::io::Error::new(std::io::ErrorKind::NotFound, "lexicon directory not found"),
            ));
        }
        let mut lexicon = Lexicon::builtin().clone();
        let read = |name: &str| -> Result<Option<Vec<(String, String)>>> {
            let path = dir.join(name);
            if !path.exists() {
                return Ok(None);
            }
            let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
            parse_pairs(&text, &path).map(Some)
        };
        if let Some(pairs) = read(ABBREVIATIONS_FILE)? {
            lexicon.abbreviations = pairs.into_iter().collect();
        }
        if let Some(pairs) = read(CONTRACTIONS_FILE)? {
            lexicon.contractions = pairs.into_iter().collect();
        }
        if let Some(pairs) = read(SPELLINGS_FILE)? {
            lexicon.spellings = pairs.into_iter().collect();
        }
        if let Some(pairs) = read(INTERJECTIONS_FILE)? {
            lexicon.interjections = pairs.into_iter().map(|(k, _)| k).collect();
        }
        Ok(lexicon)
    }

    /// Expansion of an abbreviation such as `"Mr."`.
    pub fn abbreviation(&self, word: &str) -> Option<&str> {
        self.abbreviations.get(&fold_key(word)).map(String::as_str)
    }

    /// True if `word` (period included) is a known abbreviation.
    pub fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations.contains_key(&fold_key(word))
    }

    pub fn contraction(&self, word: &str) -> Option<&str> {
        self.contractions.get(&fold_key(word)).map(String::as_str)
    }

    pub fn american_spelling(&self, word: &str) -> Option<&str> {
        self.spellings.get(&fold_key(word)).map(String::as_str)
    }

    pub fn is_interjection(&self, word: &str) -> bool {
        self.interjections.contains(&fold_key(word))
    }
}

/// Lowercases and folds typographic apostrophes.
pub(crate) fn fold_key(word: &str) -> String {
    word.chars()
        .map(|c| match c {
            '\u{2019}' | '\u{2018}' | '\u{02BC}' => '\'',
            c => c,
        })
        .flat_map(char::to_lowercase)
        .collect()
}

fn parse_pairs(text: &str, path: &Path) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').unwrap_or((line, ""));
        let key = key.trim();
        if key.is_empty() {
            return Err(Error::Lexicon {
                path: path.to_path_buf(),
                line: n + 1,
                message: "empty key".into(),
            });
        }
        pairs.push((fold_key(key), value.trim().to_string()));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_lookups() {
        let lex = Lexicon::builtin();
        assert_eq!(lex.abbreviation("Mr."), Some("mister"));
        assert_eq!(lex.contraction("won’t"), Some("will not"));
        assert_eq!(lex.american_spelling("Colour"), Some("color"));
        assert!(lex.is_interjection("Hmm"));
        assert!(!lex.is_interjection("yes"));
    }

    // A replacement that is itself a key would make normalisation depend on
    // how many times it runs.
    #[test]
    fn replacements_are_not_keys() {
        let lex = Lexicon::builtin();
        for map in [&lex.abbreviations, &lex.contractions, &lex.spellings] {
            for value in map.values() {
                for word in value.split_whitespace() {
                    assert!(!map.contains_key(&fold_key(word)), "{word} is both value and key");
                }
            }
        }
    }

    #[test]
    fn load_dir_overrides_present_files_only() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join(SPELLINGS_FILE), "# custom\nfoo = bar\n").unwrap();
        let lex = Lexicon::load_dir(dir.path()).unwrap();
        assert_eq!(lex.american_spelling("FOO"), Some("bar"));
        assert_eq!(lex.american_spelling("colour"), None);
        assert_eq!(lex.abbreviation("dr."), Some("doctor"));
    }

    #[test]
    fn rejects_empty_key() {
        let err = parse_pairs("ok=1\n=oops\n", Path::new("x.txt")).unwrap_err();
        assert!(matches!(err, Error::Lexicon { line: 2, .. }));
    }
}
