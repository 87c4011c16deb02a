//! Extended Levenshtein alignment of two token lists.
//!
//! Beyond the usual match/insert/delete/substitute steps, a cell may be
//! reached by a zero-cost compound step: `x` reference tokens and `y`
//! hypothesis tokens whose comparison values are equal once concatenated
//! with spaces and hyphens removed ("ice cream" / "icecream" /
//! "ice-cream"). Edit costs depend on the token types, see [`CostModel`].
//!
//! Costs are kept as integer half units so ties are exact.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::classify::ErrorClass;
use crate::error::{Error, Result};
use crate::token::Token;

/// An edit cost in half units.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u32);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const HALF: Cost = Cost(1);
    pub const ONE: Cost = Cost(2);
    pub const TWO: Cost = Cost(4);

    pub const fn from_halves(halves: u32) -> Cost {
        Cost(halves)
    }

    pub const fn halves(self) -> u32 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// Accepts non-negative multiples of 0.5.
    pub fn from_f64(value: f64) -> Option<Cost> {
        let halves = value * 2.0;
        (value >= 0.0 && halves.fract() == 0.0 && halves <= f64::from(u32::MAX / 4)).then(|| Cost(halves as u32))
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_f64())
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

impl<'de> Deserialize<'de> for Cost {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = f64::deserialize(d)?;
        Cost::from_f64(v).ok_or_else(|| serde::de::Error::custom(format!("{v} is not a multiple of 0.5")))
    }
}

/// Maximum number of tokens on either side of a compound match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompoundLimit {
    #[default]
    Unbounded,
    Max(usize),
}

impl CompoundLimit {
    pub const DISABLED: CompoundLimit = CompoundLimit::Max(0);

    fn get(self) -> usize {
        match self {
            CompoundLimit::Unbounded => usize::MAX,
            CompoundLimit::Max(k) => k,
        }
    }
}

impl FromStr for CompoundLimit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "unbounded" | "∞" => Ok(CompoundLimit::Unbounded),
            k => k
                .parse()
                .map(CompoundLimit::Max)
                .map_err(|_| format!("expected a number or `inf`, got `{s}`")),
        }
    }
}

impl fmt::Display for CompoundLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompoundLimit::Unbounded => f.write_str("inf"),
            CompoundLimit::Max(k) => write!(f, "{k}"),
        }
    }
}

impl Serialize for CompoundLimit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CompoundLimit::Unbounded => s.serialize_str("inf"),
            CompoundLimit::Max(k) => s.serialize_u64(*k as u64),
        }
    }
}

impl<'de> Deserialize<'de> for CompoundLimit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(k) => Ok(CompoundLimit::Max(k as usize)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Type-dependent edit costs.
///
/// The defaults: inserting or deleting sentence punctuation costs 0.5,
/// any other token 1; substituting punctuation for a non-punctuation token
/// costs 2, punctuation for other punctuation 0.5, a case-only change 0.5
/// and anything else 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostModel {
    pub indel_punct: Cost,
    pub indel_other: Cost,
    pub sub_cross_type: Cost,
    pub sub_punct_punct: Cost,
    pub sub_case_only: Cost,
    pub sub_other: Cost,
    pub compound_limit: CompoundLimit,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel {
            indel_punct: Cost::HALF,
            indel_other: Cost::ONE,
            sub_cross_type: Cost::TWO,
            sub_punct_punct: Cost::HALF,
            sub_case_only: Cost::HALF,
            sub_other: Cost::ONE,
            compound_limit: CompoundLimit::Unbounded,
        }
    }
}

impl CostModel {
    /// Classic Levenshtein: every edit costs 1 and compounds are off.
    /// Cross-type substitutions stay at 2 so a punctuation mark is never
    /// traded for a word.
    pub fn unit() -> Self {
        CostModel {
            indel_punct: Cost::ONE,
            indel_other: Cost::ONE,
            sub_cross_type: Cost::TWO,
            sub_punct_punct: Cost::ONE,
            sub_case_only: Cost::ONE,
            sub_other: Cost::ONE,
            compound_limit: CompoundLimit::DISABLED,
        }
    }

    pub fn with_compound_limit(mut self, limit: CompoundLimit) -> Self {
        self.compound_limit = limit;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.sub_cross_type < self.indel_punct + self.indel_other {
            return Err(Error::CostModel(format!(
                "cross-type substitution ({}) must cost at least a punctuation plus a word edit ({})",
                self.sub_cross_type,
                self.indel_punct + self.indel_other
            )));
        }
        Ok(())
    }

    pub fn indel(&self, token: &Token) -> Cost {
        if token.is_punctuation() {
            self.indel_punct
        } else {
            self.indel_other
        }
    }

    pub fn substitution(&self, a: &Token, b: &Token) -> Cost {
        match (a.is_punctuation(), b.is_punctuation()) {
            (true, false) | (false, true) => self.sub_cross_type,
            (true, true) => self.sub_punct_punct,
            (false, false) if a.value.to_lowercase() == b.value.to_lowercase() => self.sub_case_only,
            (false, false) => self.sub_other,
        }
    }
}

/// Insertion/deletion cost under the default model.
pub fn cost_indel(token: &Token) -> f64 {
    CostModel::default().indel(token).as_f64()
}

/// Substitution cost under the default model.
pub fn cost_sub(a: &Token, b: &Token) -> f64 {
    CostModel::default().substitution(a, b).as_f64()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperationKind {
    Ok,
    Insertion,
    Deletion,
    Substitution,
    CompoundHyp,
    CompoundRef,
    CompoundEnd,
}

impl OperationKind {
    pub fn is_compound(self) -> bool {
        matches!(self, OperationKind::CompoundHyp | OperationKind::CompoundRef | OperationKind::CompoundEnd)
    }

    pub fn name(self) -> &'static str {
        match self {
            OperationKind::Ok => "ok",
            OperationKind::Insertion => "insertion",
            OperationKind::Deletion => "deletion",
            OperationKind::Substitution => "substitution",
            OperationKind::CompoundHyp => "compound_hyp",
            OperationKind::CompoundRef => "compound_ref",
            OperationKind::CompoundEnd => "compound_end",
        }
    }
}

/// One step of the route. Deletions and compound-reference steps carry only
/// a reference token, insertions and compound-hypothesis steps only a
/// hypothesis token, everything else both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteElement {
    pub op: OperationKind,
    pub reference: Option<Token>,
    pub hypothesis: Option<Token>,
    pub cost: Cost,
    pub error_class: Option<ErrorClass>,
}

impl RouteElement {
    fn new(op: OperationKind, reference: Option<&Token>, hypothesis: Option<&Token>, cost: Cost) -> Self {
        RouteElement {
            op,
            reference: reference.cloned(),
            hypothesis: hypothesis.cloned(),
            cost,
            error_class: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pub route: Vec<RouteElement>,
    pub total_cost: Cost,
    /// `(reference.len() + 1, hypothesis.len() + 1)`
    pub matrix_dims: (usize, usize),
}

#[derive(Debug, Clone, Copy, Default)]
enum Step {
    #[default]
    Start,
    Ok,
    Sub,
    Del,
    Ins,
    Compound { x: u32, y: u32 },
}

/// Aligns `reference` against `hypothesis` on comparison values.
///
/// Ties are broken in favour of matches and compounds, then substitutions,
/// deletions and finally insertions, walking back from the last cell.
pub fn align(reference: &[Token], hypothesis: &[Token], model: &CostModel) -> Alignment {
    let n = reference.len();
    let m = hypothesis.len();
    let width = m + 1;
    let limit = model.compound_limit.get();
    let compounds = limit > 0;

    let stripped = |tokens: &[Token]| -> Vec<Vec<u8>> {
        tokens
            .iter()
            .map(|t| {
                let mut bytes: Vec<u8> = t.value.bytes().filter(|b| *b != b'-' && *b != b' ').collect();
                bytes.reverse();
                bytes
            })
            .collect()
    };
    let (ref_rev, hyp_rev) = if compounds {
        (stripped(reference), stripped(hypothesis))
    } else {
        (Vec::new(), Vec::new())
    };

    let mut cost = vec![0u32; (n + 1) * width];
    let mut step = vec![Step::Start; (n + 1) * width];
    for j in 1..=m {
        cost[j] = cost[j - 1] + model.indel(&hypothesis[j - 1]).halves();
        step[j] = Step::Ins;
    }
    for i in 1..=n {
        cost[i * width] = cost[(i - 1) * width] + model.indel(&reference[i - 1]).halves();
        step[i * width] = Step::Del;
    }

    let mut r_buf = Vec::new();
    let mut h_buf = Vec::new();
    for i in 1..=n {
        let a = &reference[i - 1];
        for j in 1..=m {
            let b = &hypothesis[j - 1];
            let diag = cost[(i - 1) * width + j - 1];
            let mut best = u32::MAX;
            let mut best_step = Step::Start;
            let mut offer = |c: u32, s: Step| {
                if c < best {
                    best = c;
                    best_step = s;
                }
            };

            let equal = a.value == b.value;
            if equal {
                offer(diag, Step::Ok);
            }
            if compounds && !a.is_punctuation() && !b.is_punctuation() {
                for_each_compound(
                    reference, hypothesis, &ref_rev, &hyp_rev, i, j, limit, &mut r_buf, &mut h_buf,
                    |x, y| {
                        if x == 1 && y == 1 && equal {
                            return;
                        }
                        offer(cost[(i - x) * width + j - y], Step::Compound { x: x as u32, y: y as u32 });
                    },
                );
            }
            if !equal {
                offer(diag + model.substitution(a, b).halves(), Step::Sub);
            }
            offer(cost[(i - 1) * width + j] + model.indel(a).halves(), Step::Del);
            offer(cost[i * width + j - 1] + model.indel(b).halves(), Step::Ins);

            cost[i * width + j] = best;
            step[i * width + j] = best_step;
        }
    }

    let mut groups: Vec<Vec<RouteElement>> = Vec::new();
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        match step[i * width + j] {
            Step::Ok => {
                groups.push(vec![RouteElement::new(
                    OperationKind::Ok,
                    Some(&reference[i - 1]),
                    Some(&hypothesis[j - 1]),
                    Cost::ZERO,
                )]);
                i -= 1;
                j -= 1;
            }
            Step::Sub => {
                let (a, b) = (&reference[i - 1], &hypothesis[j - 1]);
                groups.push(vec![RouteElement::new(OperationKind::Substitution, Some(a), Some(b), model.substitution(a, b))]);
                i -= 1;
                j -= 1;
            }
            Step::Del => {
                let a = &reference[i - 1];
                groups.push(vec![RouteElement::new(OperationKind::Deletion, Some(a), None, model.indel(a))]);
                i -= 1;
            }
            Step::Ins => {
                let b = &hypothesis[j - 1];
                groups.push(vec![RouteElement::new(OperationKind::Insertion, None, Some(b), model.indel(b))]);
                j -= 1;
            }
            Step::Compound { x, y } => {
                let (x, y) = (x as usize, y as usize);
                let mut group: Vec<RouteElement> = reference[i - x..i - 1]
                    .iter()
                    .map(|a| RouteElement::new(OperationKind::CompoundRef, Some(a), None, Cost::ZERO))
                    .collect();
                group.extend(
                    hypothesis[j - y..j - 1]
                        .iter()
                        .map(|b| RouteElement::new(OperationKind::CompoundHyp, None, Some(b), Cost::ZERO)),
                );
                group.push(RouteElement::new(
                    OperationKind::CompoundEnd,
                    Some(&reference[i - 1]),
                    Some(&hypothesis[j - 1]),
                    Cost::ZERO,
                ));
                groups.push(group);
                i -= x;
                j -= y;
            }
            Step::Start => unreachable!("backtrace reached an unfilled cell"),
        }
    }
    groups.reverse();

    Alignment {
        route: groups.into_iter().flatten().collect(),
        total_cost: Cost(cost[n * width + m]),
        matrix_dims: (n + 1, m + 1),
    }
}

/// Calls `found(x, y)` for every compound ending at reference token `i - 1`
/// and hypothesis token `j - 1`, in increasing `(x, y)` order.
///
/// The concatenations grow right to left; they stay candidates only while
/// the shorter one is a suffix of the longer one, so on natural text the
/// search stops after a step or two even with an unbounded limit.
#[allow(clippy::too_many_arguments)]
fn for_each_compound(
    reference: &[Token],
    hypothesis: &[Token],
    ref_rev: &[Vec<u8>],
    hyp_rev: &[Vec<u8>],
    i: usize,
    j: usize,
    limit: usize,
    r_buf: &mut Vec<u8>,
    h_buf: &mut Vec<u8>,
    mut found: impl FnMut(usize, usize),
) {
    let max_x = i.min(limit);
    let max_y = j.min(limit);
    r_buf.clear();
    h_buf.clear();
    r_buf.extend_from_slice(&ref_rev[i - 1]);
    h_buf.extend_from_slice(&hyp_rev[j - 1]);
    if r_buf.is_empty() || h_buf.is_empty() {
        return;
    }
    let (mut x, mut y) = (1, 1);
    let mut checked = 0;
    loop {
        let common = r_buf.len().min(h_buf.len());
        if r_buf[checked..common] != h_buf[checked..common] {
            return;
        }
        checked = common;
        let grow_ref;
        let grow_hyp;
        if r_buf.len() == h_buf.len() {
            found(x, y);
            grow_ref = true;
            grow_hyp = true;
        } else {
            grow_ref = r_buf.len() < h_buf.len();
            grow_hyp = !grow_ref;
        }
        if grow_ref {
            if x == max_x || !extend(r_buf, reference, ref_rev, i - x - 1) {
                return;
            }
            x += 1;
        }
        if grow_hyp {
            if y == max_y || !extend(h_buf, hypothesis, hyp_rev, j - y - 1) {
                return;
            }
            y += 1;
        }
    }
}

fn extend(buf: &mut Vec<u8>, tokens: &[Token], rev: &[Vec<u8>], k: usize) -> bool {
    if tokens[k].is_punctuation() || rev[k].is_empty() {
        return false;
    }
    buf.extend_from_slice(&rev[k]);
    true
}
