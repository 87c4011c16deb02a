//! Spoken and written number notation to canonical digit strings.
//!
//! Covers cardinals up to 999,999,999, ordinals (`twenty first` → `21st`),
//! decimals (`three point one four` → `3.14`), currency (`two thousand
//! dollars` and `$2000` → `$2000`) and per cent (`fifty percent` and `50 %`
//! → `50%`). Tokens are merged only when they are adjacent in the source
//! and separated by whitespace alone. Sequences that cannot be read with
//! confidence are left untouched.

use crate::lexicon::fold_key;
use crate::normalise::NormaliserId;
use crate::token::{Span, Token, TokenKind, Transcript};

/// Applies the number normaliser on its own.
pub fn normalise_numbers(transcript: &Transcript) -> Transcript {
    Transcript {
        tokens: normalise_tokens(transcript.tokens.clone()),
        removed: transcript.removed.clone(),
        residue: transcript.residue.clone(),
    }
}

const MONTHS: [&str; 12] = [
    "january", "february", "march", "april", "may", "june", "july", "august", "september",
    "october", "november", "december",
];

pub(crate) fn normalise_tokens(tokens: Vec<Token>) -> Vec<Token> {
    let mut out: Vec<Token> = Vec::with_capacity(tokens.len());
    let mut i = 0;
    while i < tokens.len() {
        match read_amount(&tokens, i, out.last()) {
            Some((value, end)) => {
                out.push(merge(&tokens[i..end], value));
                i = end;
            }
            None => {
                out.push(tokens[i].clone());
                i += 1;
            }
        }
    }
    out
}

/// Reads an amount starting at `start`; returns the canonical value and the
/// end of the consumed range when something would change.
fn read_amount(tokens: &[Token], start: usize, previous: Option<&Token>) -> Option<(String, usize)> {
    let mut j = start;
    let mut currency = currency_sign(&tokens[start]);
    if currency.is_some() {
        j += 1;
        if j >= tokens.len() || !joinable(&tokens[j - 1], &tokens[j]) {
            return None;
        }
    }

    let phrase = read_phrase(&tokens[j..])?;
    if phrase.single_ordinal_word {
        let after_month = previous.is_some_and(|p| MONTHS.contains(&fold_key(&p.value).as_str()));
        if after_month || phrase.text == "2" {
            return None;
        }
    }
    let mut end = j + phrase.consumed;
    let mut percent = false;

    if phrase.ordinal.is_none() && end < tokens.len() && joinable(&tokens[end - 1], &tokens[end]) {
        let next = fold_key(&tokens[end].value);
        if currency.is_none() {
            if let Some(sign) = currency_word(&next) {
                currency = Some(sign);
                end += 1;
            }
        }
        if currency.is_none() {
            if next == "percent" || next == "%" {
                percent = true;
                end += 1;
            } else if next == "per"
                && end + 1 < tokens.len()
                && joinable(&tokens[end], &tokens[end + 1])
                && fold_key(&tokens[end + 1].value) == "cent"
            {
                percent = true;
                end += 2;
            }
        }
    }

    let mut value = String::new();
    if let Some(sign) = currency {
        value.push(sign);
    }
    value.push_str(&phrase.text);
    if let Some(ordinal) = phrase.ordinal {
        value.push_str(ordinal);
    }
    if percent {
        value.push('%');
    }
    if end - start == 1 && value == tokens[start].value {
        return None;
    }
    Some((value, end))
}

fn merge(parts: &[Token], value: String) -> Token {
    let first = &parts[0];
    let last = &parts[parts.len() - 1];
    let mut normalisations: Vec<NormaliserId> =
        parts.iter().flat_map(|t| t.normalisations.iter().copied()).collect();
    normalisations.push(NormaliserId::Numbers);
    Token {
        kind: TokenKind::Number,
        raw: parts.iter().map(|t| t.raw.as_str()).collect(),
        value,
        prefix: first.prefix.clone(),
        suffix: last.suffix.clone(),
        normalisations,
        span: Span::new(first.span.start, last.span.end),
    }
}

/// Adjacent in the source with only whitespace in between.
fn joinable(left: &Token, right: &Token) -> bool {
    left.span.end == right.span.start
        && !left.raw.is_empty()
        && !right.raw.is_empty()
        && left.suffix.chars().chain(right.prefix.chars()).all(char::is_whitespace)
}

fn currency_sign(token: &Token) -> Option<char> {
    let mut chars = token.core().chars();
    match (chars.next(), chars.next()) {
        (Some(c @ ('$' | '€' | '£' | '¥')), None) => Some(c),
        _ => None,
    }
}

fn currency_word(word: &str) -> Option<char> {
    match word {
        "dollar" | "dollars" => Some('$'),
        "euro" | "euros" => Some('€'),
        "pound" | "pounds" => Some('£'),
        "yen" => Some('¥'),
        _ => None,
    }
}

#[derive(Debug, PartialEq)]
struct Phrase {
    text: String,
    ordinal: Option<&'static str>,
    consumed: usize,
    single_ordinal_word: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Last {
    Start,
    Ones,
    Teens,
    Tens,
    Hundred,
    Scale,
    And,
}

#[derive(Debug, Clone, Copy)]
enum Word {
    Ones(u64),
    Teens(u64),
    Tens(u64),
    Hundred,
    Scale(u64),
}

fn cardinal(word: &str) -> Option<Word> {
    const ONES: [&str; 9] = ["one", "two", "three", "four", "five", "six", "seven", "eight", "nine"];
    const TEENS: [&str; 10] = [
        "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen",
        "eighteen", "nineteen",
    ];
    const TENS: [&str; 8] = ["twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];
    if let Some(i) = ONES.iter().position(|w| *w == word) {
        return Some(Word::Ones(i as u64 + 1));
    }
    if let Some(i) = TEENS.iter().position(|w| *w == word) {
        return Some(Word::Teens(i as u64 + 10));
    }
    if let Some(i) = TENS.iter().position(|w| *w == word) {
        return Some(Word::Tens(i as u64 * 10 + 20));
    }
    match word {
        "hundred" => Some(Word::Hundred),
        "thousand" => Some(Word::Scale(1_000)),
        "million" => Some(Word::Scale(1_000_000)),
        _ => None,
    }
}

fn ordinal(word: &str) -> Option<Word> {
    const ONES: [&str; 9] = ["first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth"];
    const TEENS: [&str; 10] = [
        "tenth", "eleventh", "twelfth", "thirteenth", "fourteenth", "fifteenth", "sixteenth",
        "seventeenth", "eighteenth", "nineteenth",
    ];
    const TENS: [&str; 8] = [
        "twentieth", "thirtieth", "fortieth", "fiftieth", "sixtieth", "seventieth", "eightieth", "ninetieth",
    ];
    if let Some(i) = ONES.iter().position(|w| *w == word) {
        return Some(Word::Ones(i as u64 + 1));
    }
    if let Some(i) = TEENS.iter().position(|w| *w == word) {
        return Some(Word::Teens(i as u64 + 10));
    }
    if let Some(i) = TENS.iter().position(|w| *w == word) {
        return Some(Word::Tens(i as u64 * 10 + 20));
    }
    match word {
        "hundredth" => Some(Word::Hundred),
        "thousandth" => Some(Word::Scale(1_000)),
        "millionth" => Some(Word::Scale(1_000_000)),
        _ => None,
    }
}

fn digit_word(word: &str) -> Option<char> {
    match word {
        "zero" | "oh" => Some('0'),
        _ => match cardinal(word) {
            Some(Word::Ones(n)) => char::from_digit(n as u32, 10),
            _ => None,
        },
    }
}

fn ordinal_suffix(n: u64) -> &'static str {
    match (n % 10, n % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    }
}

#[derive(Debug, Clone, Copy)]
struct State {
    total: u64,
    group: u64,
    last: Last,
    last_scale: u64,
}

impl State {
    fn value(&self) -> u64 {
        self.total + self.group
    }

    fn accept(&mut self, word: Word) -> bool {
        use Last::*;
        match word {
            Word::Ones(n) if matches!(self.last, Start | Tens | Hundred | Scale | And) => {
                self.group += n;
                self.last = Ones;
            }
            Word::Teens(n) if matches!(self.last, Start | Hundred | Scale | And) => {
                self.group += n;
                self.last = Teens;
            }
            Word::Tens(n) if matches!(self.last, Start | Hundred | Scale | And) => {
                self.group += n;
                self.last = Tens;
            }
            Word::Hundred if matches!(self.last, Ones | Teens | Tens) && (1..100).contains(&self.group) => {
                self.group *= 100;
                self.last = Hundred;
            }
            Word::Scale(scale)
                if matches!(self.last, Ones | Teens | Tens | Hundred)
                    && self.group > 0
                    && self.group < 1000
                    && scale < self.last_scale =>
            {
                self.total += self.group * scale;
                self.group = 0;
                self.last = Scale;
                self.last_scale = scale;
            }
            _ => return false,
        }
        true
    }
}

/// Parses a plain digit string (`2000`, `2,000`, `3.14`) into its canonical
/// form, or `None` if it is not a number.
fn digits(value: &str) -> Option<(String, bool)> {
    let (int, frac) = match value.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (value, None),
    };
    if let Some(f) = frac {
        if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
    }
    let int = if int.contains(',') {
        let groups: Vec<&str> = int.split(',').collect();
        let ok = (1..=3).contains(&groups[0].len())
            && groups[1..].iter().all(|g| g.len() == 3)
            && groups.iter().all(|g| g.bytes().all(|b| b.is_ascii_digit()));
        if !ok {
            return None;
        }
        groups.concat()
    } else {
        int.to_string()
    };
    if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(match frac {
        Some(f) => (format!("{int}.{f}"), false),
        None => (int, true),
    })
}

fn read_phrase(tokens: &[Token]) -> Option<Phrase> {
    let first = tokens.first()?;
    if first.raw.is_empty() {
        return None;
    }

    // Digits, optionally scaled by words: `2000`, `5 million`.
    if let Some((text, integer)) = digits(&first.value) {
        let mut consumed = 1;
        let mut text = text;
        if integer {
            if let Ok(n) = text.parse::<u64>() {
                let mut state = State {
                    total: 0,
                    group: n,
                    last: if n < 100 { Last::Tens } else { Last::Hundred },
                    last_scale: u64::MAX,
                };
                while consumed < tokens.len() && n > 0 && n < 1000 && joinable(&tokens[consumed - 1], &tokens[consumed]) {
                    match cardinal(&fold_key(&tokens[consumed].value)) {
                        Some(w @ (Word::Hundred | Word::Scale(_))) if state.accept(w) => consumed += 1,
                        _ => break,
                    }
                }
                if consumed > 1 {
                    text = state.value().to_string();
                }
            }
        }
        return Some(Phrase { text, ordinal: None, consumed, single_ordinal_word: false });
    }

    let mut state = State { total: 0, group: 0, last: Last::Start, last_scale: u64::MAX };
    let mut consumed = 0;
    let mut ordinal_suffix_found = None;

    let word0 = fold_key(&first.value);
    if word0 == "zero" {
        state.last = Last::Ones;
        consumed = 1;
    } else {
        while consumed < tokens.len() {
            let token = &tokens[consumed];
            if consumed > 0 && !joinable(&tokens[consumed - 1], token) {
                break;
            }
            if token.kind != TokenKind::Word {
                break;
            }
            let word = fold_key(&token.value);
            if word == "and" {
                let next_is_small = tokens.get(consumed + 1).is_some_and(|t| {
                    joinable(token, t)
                        && matches!(
                            cardinal(&fold_key(&t.value)).or_else(|| ordinal(&fold_key(&t.value))),
                            Some(Word::Ones(_) | Word::Teens(_) | Word::Tens(_))
                        )
                });
                if matches!(state.last, Last::Hundred | Last::Scale) && next_is_small {
                    state.last = Last::And;
                    consumed += 1;
                    continue;
                }
                break;
            }
            // `twenty-one`, `twenty-first`
            let parts: Vec<&str> = word.split('-').collect();
            let mut trial = state;
            let mut ord = false;
            let mut ok = true;
            for (k, part) in parts.iter().enumerate() {
                let last_part = k + 1 == parts.len();
                let w = match cardinal(part) {
                    Some(w) => w,
                    None if last_part => match ordinal(part) {
                        Some(w) => {
                            ord = true;
                            w
                        }
                        None => {
                            ok = false;
                            break;
                        }
                    },
                    None => {
                        ok = false;
                        break;
                    }
                };
                if !trial.accept(w) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
            state = trial;
            consumed += 1;
            if ord {
                ordinal_suffix_found = Some(ordinal_suffix(state.value()));
                break;
            }
        }
    }
    if consumed == 0 || state.last == Last::Start {
        return None;
    }

    let mut text = state.value().to_string();
    if ordinal_suffix_found.is_none() && consumed < tokens.len() && joinable(&tokens[consumed - 1], &tokens[consumed]) {
        if fold_key(&tokens[consumed].value) == "point" {
            let mut decimals = String::new();
            let mut k = consumed + 1;
            while k < tokens.len() && joinable(&tokens[k - 1], &tokens[k]) {
                match digit_word(&fold_key(&tokens[k].value)) {
                    Some(d) => decimals.push(d),
                    None => break,
                }
                k += 1;
            }
            if !decimals.is_empty() {
                text = format!("{text}.{decimals}");
                consumed = k;
            }
        }
    }

    Some(Phrase {
        single_ordinal_word: ordinal_suffix_found.is_some() && consumed == 1 && !word0.contains('-'),
        text,
        ordinal: ordinal_suffix_found,
        consumed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;
    use crate::normalise::{normalise, NormaliserConfig};

    fn values(s: &str) -> Vec<String> {
        normalise(&tokenize(s), &NormaliserConfig::all())
            .tokens
            .into_iter()
            .map(|t| t.value)
            .collect()
    }

    fn one(s: &str) -> String {
        let v = values(s);
        assert_eq!(v.len(), 1, "{s} -> {v:?}");
        v[0].clone()
    }

    #[test]
    fn cardinals() {
        assert_eq!(one("zero"), "0");
        assert_eq!(one("twenty one"), "21");
        assert_eq!(one("twenty-one"), "21");
        assert_eq!(one("two thousand"), "2000");
        assert_eq!(one("one hundred and five"), "105");
        assert_eq!(one("nineteen hundred"), "1900");
        assert_eq!(
            one("nine hundred ninety nine million nine hundred ninety nine thousand nine hundred ninety nine"),
            "999999999"
        );
        assert_eq!(one("5 million"), "5000000");
        assert_eq!(one("2,000"), "2000");
    }

    #[test]
    fn separate_numbers_stay_separate() {
        assert_eq!(values("one two"), vec!["1", "2"]);
        assert_eq!(values("twenty thirty"), vec!["20", "30"]);
        assert_eq!(values("five, thousand"), vec!["5", ",", "thousand"]);
    }

    #[test]
    fn ordinals_and_decimals() {
        assert_eq!(one("first"), "1st");
        assert_eq!(one("twenty second"), "22nd");
        assert_eq!(one("eleventh"), "11th");
        assert_eq!(one("one hundred third"), "103rd");
        assert_eq!(one("three point one four"), "3.14");
        assert_eq!(one("zero point five"), "0.5");
    }

    #[test]
    fn ambiguous_sequences_untouched() {
        assert_eq!(values("May fourth"), vec!["May", "fourth"]);
        assert_eq!(values("wait a second"), vec!["wait", "a", "second"]);
        assert_eq!(values("and"), vec!["and"]);
        assert_eq!(values("hundred"), vec!["hundred"]);
    }

    #[test]
    fn currency_and_percent() {
        assert_eq!(one("two thousand dollars"), "$2000");
        assert_eq!(one("$2000"), "$2000");
        assert_eq!(one("$ 2,000"), "$2000");
        assert_eq!(one("2000 dollars"), "$2000");
        assert_eq!(one("fifty percent"), "50%");
        assert_eq!(one("50%"), "50%");
        assert_eq!(one("50 per cent"), "50%");
        assert_eq!(one("€5"), "€5");
        assert_eq!(one("five pounds"), "£5");
    }

    #[test]
    fn merged_token_keeps_raw_and_trail() {
        let t = normalise(&tokenize("It cost $2000."), &NormaliserConfig::all());
        let n = &t.tokens[2];
        assert_eq!(n.value, "$2000");
        assert_eq!(n.raw, " $2000");
        assert_eq!(n.kind, TokenKind::Number);
        assert_eq!(n.normalisations, vec![NormaliserId::Symbols, NormaliserId::Numbers]);
        assert_eq!(t.rejoin(), "It cost $2000.");
    }

    #[test]
    fn not_merged_across_removed_tokens() {
        assert_eq!(values("two um thousand"), vec!["2", "thousand"]);
    }

    #[test]
    fn standalone_numbers_operation() {
        let t = normalise_numbers(&tokenize("twenty one"));
        assert_eq!(t.values(), vec!["21"]);
        assert_eq!(t.tokens[0].normalisations, vec![NormaliserId::Numbers]);
    }

    /// Independent spelling of 0..=9999 in words.
    fn spell(n: u64) -> String {
        const SMALL: [&str; 20] = [
            "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
            "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
            "nineteen",
        ];
        const TENS: [&str; 10] = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];
        fn below_thousand(n: u64) -> Vec<String> {
            let mut w = Vec::new();
            if n >= 100 {
                w.push(SMALL[(n / 100) as usize].to_string());
                w.push("hundred".into());
            }
            let r = n % 100;
            if r >= 20 {
                w.push(TENS[(r / 10) as usize].to_string());
                if r % 10 != 0 {
                    w.push(SMALL[(r % 10) as usize].to_string());
                }
            } else if r > 0 {
                w.push(SMALL[r as usize].to_string());
            }
            w
        }
        if n == 0 {
            return "zero".into();
        }
        let mut words = Vec::new();
        if n >= 1000 {
            words.extend(below_thousand(n / 1000));
            words.push("thousand".into());
        }
        words.extend(below_thousand(n % 1000));
        words.join(" ")
    }

    #[test]
    fn spelled_numbers_round_trip_to_digits() {
        for n in 0..=9999u64 {
            let spelled = spell(n);
            let t = normalise_numbers(&tokenize(&spelled));
            assert_eq!(t.values(), vec![n.to_string()], "{spelled}");
        }
    }
}
