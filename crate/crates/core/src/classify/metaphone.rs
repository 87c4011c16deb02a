//! Double Metaphone (Philips 2000), following the widely used Python port
//! of the Aubrey/Collins C version, with codes cut to four characters.

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

const MAX_LEN: usize = 4;
const PAD_FRONT: usize = 2;

/// Returns `(primary, secondary)`. The secondary code is empty when it
/// would equal the primary one.
pub fn double_metaphone(word: &str) -> (String, String) {
    let (primary, secondary) = Encoder::new(word).run();
    let secondary = if secondary == primary { String::new() } else { secondary };
    (truncate(&primary), truncate(&secondary))
}

fn truncate(code: &str) -> String {
    code.chars().take(MAX_LEN).collect()
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'A' | 'E' | 'I' | 'O' | 'U' | 'Y')
}

/// Next step: primary addition, secondary addition, advance.
type Step = (Option<&'static str>, Option<&'static str>, usize);

fn same(code: &'static str, advance: usize) -> Step {
    (Some(code), Some(code), advance)
}

fn both(primary: &'static str, secondary: &'static str, advance: usize) -> Step {
    (Some(primary), Some(secondary), advance)
}

fn skip(advance: usize) -> Step {
    (None, None, advance)
}

struct Encoder {
    buf: Vec<char>,
    start: usize,
    end: usize,
    slavo_germanic: bool,
    pos: usize,
    last: Step,
}

impl Encoder {
    fn new(word: &str) -> Self {
        let decoded = word.replace(['\u{c7}', '\u{e7}'], "s");
        let normalized: String = decoded.nfd().filter(|c| !is_combining_mark(*c)).collect();
        let upper = normalized.to_uppercase();
        let n = upper.chars().count();
        let mut buf: Vec<char> = "--".chars().collect();
        buf.extend(upper.chars());
        buf.extend("------".chars());
        let slavo_germanic =
            upper.contains('W') || upper.contains('K') || upper.contains("CZ") || upper.contains("WITZ");
        Encoder {
            buf,
            start: PAD_FRONT,
            end: PAD_FRONT + n - 1,
            slavo_germanic,
            pos: PAD_FRONT,
            last: skip(1),
        }
    }

    fn at(&self, i: usize) -> char {
        self.buf.get(i).copied().unwrap_or('\0')
    }

    /// `buf[from..to]` with out-of-range ends clipped; a start before the
    /// buffer yields the empty string.
    fn sub(&self, from: isize, to: usize) -> String {
        if from < 0 {
            return String::new();
        }
        let from = from as usize;
        let to = to.min(self.buf.len());
        if from >= to {
            return String::new();
        }
        self.buf[from..to].iter().collect()
    }

    fn is(&self, from: usize, len: usize, options: &[&str]) -> bool {
        let s = self.sub(from as isize, from + len);
        options.iter().any(|o| *o == s)
    }

    fn is_back(&self, back: usize, len: usize, options: &[&str]) -> bool {
        let from = self.pos as isize - back as isize;
        let s = self.sub(from, (from + len as isize).max(0) as usize);
        options.iter().any(|o| *o == s)
    }

    fn run(mut self) -> (String, String) {
        let mut primary = String::new();
        let mut secondary = String::new();
        if self.is(self.start, 2, &["GN", "KN", "PN", "WR", "PS"]) {
            self.pos += 1;
        }
        if self.at(self.start) == 'X' {
            primary.push('S');
            secondary.push('S');
            self.pos += 1;
        }
        while self.pos <= self.end {
            let c = self.at(self.pos);
            let step = match c {
                c if is_vowel(c) => {
                    if self.pos == self.start {
                        same("A", 1)
                    } else {
                        skip(1)
                    }
                }
                ' ' => skip(1),
                'B' => same("P", if self.at(self.pos + 1) == 'B' { 2 } else { 1 }),
                'C' => self.c(),
                'D' => self.d(),
                'F' => same("F", if self.at(self.pos + 1) == 'F' { 2 } else { 1 }),
                'G' => self.g(),
                'H' => self.h(),
                'J' => self.j(),
                'K' => same("K", if self.at(self.pos + 1) == 'K' { 2 } else { 1 }),
                'L' => self.l(),
                'M' => self.m(),
                'N' => same("N", if self.at(self.pos + 1) == 'N' { 2 } else { 1 }),
                'P' => self.p(),
                'Q' => same("K", if self.at(self.pos + 1) == 'Q' { 2 } else { 1 }),
                'R' => self.r(),
                'S' => self.s(),
                'T' => self.t(),
                'V' => same("F", if self.at(self.pos + 1) == 'V' { 2 } else { 1 }),
                'W' => self.w(),
                'X' => self.x(),
                'Z' => self.z(),
                _ => skip(1),
            };
            self.last = step;
            let (p, s, advance) = step;
            if let Some(p) = p {
                primary.push_str(p);
            }
            if let Some(s) = s {
                secondary.push_str(s);
            }
            self.pos += advance;
        }
        (primary, secondary)
    }

    fn germanic_start(&self) -> bool {
        self.is(self.start, 4, &["VAN ", "VON "]) || self.is(self.start, 3, &["SCH"])
    }

    fn c(&self) -> Step {
        let p = self.pos;
        let start = self.start;
        if p > start + 1
            && !is_vowel(self.at(p - 2))
            && self.is(p - 1, 3, &["ACH"])
            && self.at(p + 2) != 'I'
            && (self.at(p + 2) != 'E' || self.is(p - 2, 6, &["BACHER", "MACHER"]))
        {
            return same("K", 2);
        }
        if p == start && self.is(start, 6, &["CAESAR"]) {
            return same("S", 2);
        }
        if self.is(p, 4, &["CHIA"]) {
            return same("K", 2);
        }
        if self.is(p, 2, &["CH"]) {
            if p > start && self.is(p, 4, &["CHAE"]) {
                return both("K", "X", 2);
            }
            if p == start
                && (self.is(p + 1, 5, &["HARAC", "HARIS"]) || self.is(p + 1, 3, &["HOR", "HYM", "HIA", "HEM"]))
                && !self.is(start, 5, &["CHORE"])
            {
                return same("K", 2);
            }
            if self.germanic_start()
                || self.is_back(2, 6, &["ORCHES", "ARCHIT", "ORCHID"])
                || matches!(self.at(p + 2), 'T' | 'S')
                || ((matches!(self.at(p - 1), 'A' | 'O' | 'U' | 'E') || p == start)
                    && matches!(self.at(p + 2), 'L' | 'R' | 'N' | 'M' | 'B' | 'H' | 'F' | 'V' | 'W'))
            {
                return same("K", 2);
            }
            if p > start {
                if self.is(start, 2, &["MC"]) {
                    return same("K", 2);
                }
                return both("X", "K", 2);
            }
            return same("X", 2);
        }
        if self.is(p, 2, &["CZ"]) && !self.is_back(2, 4, &["WICZ"]) {
            return both("S", "X", 2);
        }
        if self.is(p + 1, 3, &["CIA"]) {
            return same("X", 3);
        }
        if self.is(p, 2, &["CC"]) && !(p == start + 1 && self.at(start) == 'M') {
            if matches!(self.at(p + 2), 'I' | 'E' | 'H') && !self.is(p + 2, 2, &["HU"]) {
                if (p == start + 1 && self.at(start) == 'A') || self.is(p - 1, 5, &["UCCEE", "UCCES"]) {
                    return same("KS", 3);
                }
                return same("X", 3);
            }
            return same("K", 2);
        }
        if self.is(p, 2, &["CK", "CG", "CQ"]) {
            return same("K", 2);
        }
        if self.is(p, 2, &["CI", "CE", "CY"]) {
            if self.is(p, 3, &["CIO", "CIE", "CIA"]) {
                return both("S", "X", 2);
            }
            return same("S", 2);
        }
        if self.is(p + 1, 2, &[" C", " Q", " G"]) {
            return same("K", 3);
        }
        if matches!(self.at(p + 1), 'C' | 'K' | 'Q') && !self.is(p + 1, 2, &["CE", "CI"]) {
            return same("K", 2);
        }
        same("K", 1)
    }

    fn d(&self) -> Step {
        let p = self.pos;
        if self.is(p, 2, &["DG"]) {
            if matches!(self.at(p + 2), 'I' | 'E' | 'Y') {
                return same("J", 3);
            }
            return same("TK", 2);
        }
        if self.is(p, 2, &["DT", "DD"]) {
            return same("T", 2);
        }
        same("T", 1)
    }

    fn g(&self) -> Step {
        let p = self.pos;
        let start = self.start;
        if self.at(p + 1) == 'H' {
            if p > start && !is_vowel(self.at(p - 1)) {
                return same("K", 2);
            }
            if p < start + 3 {
                if p == start {
                    return same(if self.at(p + 2) == 'I' { "J" } else { "K" }, 2);
                }
                // The reference repeats whatever the previous letter did.
                return self.last;
            }
            if (p > start + 1 && matches!(self.at(p - 2), 'B' | 'H' | 'D'))
                || (p > start + 2 && matches!(self.at(p - 3), 'B' | 'H' | 'D'))
                || (p > start + 3 && matches!(self.at(p - 4), 'B' | 'H'))
            {
                return skip(2);
            }
            if p > start + 2 && self.at(p - 1) == 'U' && matches!(self.at(p - 3), 'C' | 'G' | 'L' | 'R' | 'T') {
                return same("F", 2);
            }
            if p > start && self.at(p - 1) != 'I' {
                return same("K", 2);
            }
            return self.last;
        }
        if self.at(p + 1) == 'N' {
            if p == start + 1 && is_vowel(self.at(start)) && !self.slavo_germanic {
                return both("KN", "N", 2);
            }
            if !self.is(p + 2, 2, &["EY"]) && self.at(p + 1) != 'Y' && !self.slavo_germanic {
                return both("N", "KN", 2);
            }
            return same("KN", 2);
        }
        if self.is(p + 1, 2, &["LI"]) && !self.slavo_germanic {
            return both("KL", "L", 2);
        }
        if p == start
            && (self.at(p + 1) == 'Y'
                || self.is(p + 1, 2, &["ES", "EP", "EB", "EL", "EY", "IB", "IL", "IN", "IE", "EI", "ER"]))
        {
            return both("K", "J", 2);
        }
        if (self.is(p + 1, 2, &["ER"]) || self.at(p + 1) == 'Y')
            && !self.is(start, 6, &["DANGER", "RANGER", "MANGER"])
            && !matches!(self.at(p - 1), 'E' | 'I')
            && !self.is(p - 1, 3, &["RGY", "OGY"])
        {
            return both("K", "J", 2);
        }
        if matches!(self.at(p + 1), 'E' | 'I' | 'Y') || self.is(p - 1, 4, &["AGGI", "OGGI"]) {
            if self.germanic_start() || self.is(p + 1, 2, &["ET"]) {
                return same("K", 2);
            }
            if self.is(p + 1, 4, &["IER "]) {
                return same("J", 2);
            }
            return both("J", "K", 2);
        }
        if self.at(p + 1) == 'G' {
            return same("K", 2);
        }
        same("K", 1)
    }

    fn h(&self) -> Step {
        let p = self.pos;
        if (p == self.start || is_vowel(self.at(p - 1))) && is_vowel(self.at(p + 1)) {
            return same("H", 2);
        }
        skip(1)
    }

    fn j(&self) -> Step {
        let p = self.pos;
        let start = self.start;
        let (primary, secondary) = if self.is(p, 4, &["JOSE"]) || self.is(start, 4, &["SAN "]) {
            if (p == start && self.at(p + 4) == ' ') || self.is(start, 4, &["SAN "]) {
                (Some("H"), Some("H"))
            } else {
                (Some("J"), Some("H"))
            }
        } else if p == start {
            (Some("J"), Some("A"))
        } else if is_vowel(self.at(p - 1)) && !self.slavo_germanic && matches!(self.at(p + 1), 'A' | 'O') {
            (Some("J"), Some("H"))
        } else if p == self.end {
            (Some("J"), Some(" "))
        } else if !matches!(self.at(p + 1), 'L' | 'T' | 'K' | 'S' | 'N' | 'M' | 'B' | 'Z')
            && !matches!(self.at(p - 1), 'S' | 'K' | 'L')
        {
            (Some("J"), Some("J"))
        } else {
            (None, None)
        };
        (primary, secondary, if self.at(p + 1) == 'J' { 2 } else { 1 })
    }

    fn l(&self) -> Step {
        let p = self.pos;
        let end = self.end;
        if self.at(p + 1) == 'L' {
            if (p + 2 == end && self.is(p - 1, 4, &["ILLO", "ILLA", "ALLE"]))
                || ((self.is(end - 1, 2, &["AS", "OS"]) || matches!(self.at(end), 'A' | 'O'))
                    && self.is(p - 1, 4, &["ALLE"]))
            {
                return (Some("L"), None, 2);
            }
            return same("L", 2);
        }
        same("L", 1)
    }

    fn m(&self) -> Step {
        let p = self.pos;
        if (self.is(p + 1, 3, &["UMB"]) && (p + 1 == self.end || self.is(p + 2, 2, &["ER"]))) || self.at(p + 1) == 'M' {
            return same("M", 2);
        }
        same("M", 1)
    }

    fn p(&self) -> Step {
        match self.at(self.pos + 1) {
            'H' => same("F", 2),
            'P' | 'B' => same("P", 2),
            _ => same("P", 1),
        }
    }

    fn r(&self) -> Step {
        let p = self.pos;
        let advance = if self.at(p + 1) == 'R' { 2 } else { 1 };
        if p == self.end && !self.slavo_germanic && self.is_back(2, 2, &["IE"]) && !self.is_back(4, 2, &["ME", "MA"]) {
            return (None, Some("R"), advance);
        }
        same("R", advance)
    }

    fn s(&self) -> Step {
        let p = self.pos;
        let start = self.start;
        if self.is(p - 1, 3, &["ISL", "YSL"]) {
            return skip(1);
        }
        if p == start && self.is(start, 5, &["SUGAR"]) {
            return both("X", "S", 1);
        }
        if self.is(p, 2, &["SH"]) {
            if self.is(p + 1, 4, &["HEIM", "HOEK", "HOLM", "HOLZ"]) {
                return same("S", 2);
            }
            return same("X", 2);
        }
        if self.is(p, 3, &["SIO", "SIA"]) || self.is(p, 4, &["SIAN"]) {
            if !self.slavo_germanic {
                return both("S", "X", 3);
            }
            return same("S", 3);
        }
        if (p == start && matches!(self.at(p + 1), 'M' | 'N' | 'L' | 'W')) || self.at(p + 1) == 'Z' {
            return both("S", "X", if self.at(p + 1) == 'Z' { 2 } else { 1 });
        }
        if self.is(p, 2, &["SC"]) {
            if self.at(p + 2) == 'H' {
                if self.is(p + 3, 2, &["OO", "ER", "EN", "UY", "ED", "EM"]) {
                    if self.is(p + 3, 2, &["ER", "EN"]) {
                        return both("X", "SK", 3);
                    }
                    return same("SK", 3);
                }
                if p == start && !is_vowel(self.at(start + 3)) && self.at(start + 3) != 'W' {
                    return both("X", "S", 3);
                }
                return same("X", 3);
            }
            if matches!(self.at(p + 2), 'I' | 'E' | 'Y') {
                return same("S", 3);
            }
            return same("SK", 3);
        }
        if p == self.end && self.is_back(2, 2, &["AI", "OI"]) {
            return (None, Some("S"), 1);
        }
        same("S", if matches!(self.at(p + 1), 'S' | 'Z') { 2 } else { 1 })
    }

    fn t(&self) -> Step {
        let p = self.pos;
        if self.is(p, 4, &["TION"]) || self.is(p, 3, &["TIA", "TCH"]) {
            return same("X", 3);
        }
        if self.is(p, 2, &["TH"]) || self.is(p, 3, &["TTH"]) {
            if self.is(p + 2, 2, &["OM", "AM"]) || self.germanic_start() {
                return same("T", 2);
            }
            return both("0", "T", 2);
        }
        if matches!(self.at(p + 1), 'T' | 'D') {
            return same("T", 2);
        }
        same("T", 1)
    }

    fn w(&self) -> Step {
        let p = self.pos;
        let start = self.start;
        if self.is(p, 2, &["WR"]) {
            return same("R", 2);
        }
        if p == start && (is_vowel(self.at(p + 1)) || self.is(p, 2, &["WH"])) {
            if is_vowel(self.at(p + 1)) {
                return both("A", "F", 1);
            }
            return same("A", 1);
        }
        if (p == self.end && is_vowel(self.at(p - 1)))
            || self.is(p - 1, 5, &["EWSKI", "EWSKY", "OWSKI", "OWSKY"])
            || self.is(start, 3, &["SCH"])
        {
            return (None, Some("F"), 1);
        }
        if self.is(p, 4, &["WICZ", "WITZ"]) {
            return both("TS", "FX", 4);
        }
        skip(1)
    }

    fn x(&self) -> Step {
        let p = self.pos;
        let advance = if matches!(self.at(p + 1), 'C' | 'X') { 2 } else { 1 };
        if p == self.end && (self.is_back(3, 3, &["IAU", "EAU"]) || self.is_back(2, 2, &["AU", "OU"])) {
            return skip(advance);
        }
        same("KS", advance)
    }

    fn z(&self) -> Step {
        let p = self.pos;
        let advance = if matches!(self.at(p + 1), 'Z' | 'H') { 2 } else { 1 };
        if self.at(p + 1) == 'H' {
            return same("J", advance);
        }
        if self.is(p + 1, 2, &["ZO", "ZI", "ZA"]) || (self.slavo_germanic && p > self.start && self.at(p - 1) != 'T') {
            return both("S", "TS", advance);
        }
        same("S", advance)
    }
}
