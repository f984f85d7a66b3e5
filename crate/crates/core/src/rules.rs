//! Jumping and marked succession rules.
//!
//! A rule has an axiom and a list of production groups. Each group places
//! its children `jump` levels below the parent, and a marked group flips the
//! sign of what it produces. Signs compose multiplicatively down the tree,
//! so a marked child of a marked node counts positively.
//!
//! [`expand`] computes the signed number of nodes per `(level, value)` by
//! dynamic programming on censuses; [`expand_by_nodes`] materializes every
//! node and is kept as an independent check.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::riordan::{grid_to_json, grid_to_text, RiordanTriangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Variant {
    #[serde(rename = "plain")]
    Plain,
    /// `(0_1)`
    #[serde(rename = "zero1")]
    ZeroOne,
    /// `(0_2)`
    #[serde(rename = "zero2")]
    ZeroTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Label {
    pub value: u32,
    pub variant: Variant,
    pub marked: bool,
}

impl Label {
    pub const fn plain(value: u32) -> Self {
        Label {
            value,
            variant: Variant::Plain,
            marked: false,
        }
    }

    pub const fn zero_one() -> Self {
        Label {
            value: 0,
            variant: Variant::ZeroOne,
            marked: false,
        }
    }

    pub const fn zero_two() -> Self {
        Label {
            value: 0,
            variant: Variant::ZeroTwo,
            marked: false,
        }
    }

    pub fn with_mark(self, marked: bool) -> Self {
        Label { marked, ..self }
    }

    /// `+1` for unmarked labels, `-1` for marked ones.
    pub fn sign(&self) -> i32 {
        if self.marked {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.marked { "~" } else { "" };
        match self.variant {
            Variant::Plain => write!(f, "({mark}{})", self.value),
            Variant::ZeroOne => write!(f, "({mark}0_1)"),
            Variant::ZeroTwo => write!(f, "({mark}0_2)"),
        }
    }
}

/// Label generators available to productions, as functions of the parent
/// value `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelGen {
    /// A label independent of `k`.
    Fixed(Label),
    /// Plain labels `from, from+1, ..., k + to_offset`; empty when the upper
    /// end is below `from`.
    Range { from: u32, to_offset: i64 },
    /// The plain label `k + offset`, omitted when negative.
    Shift(i64),
}

impl LabelGen {
    fn push_labels(&self, k: u32, out: &mut Vec<Label>) {
        match *self {
            LabelGen::Fixed(label) => out.push(label),
            LabelGen::Range { from, to_offset } => {
                let to = i64::from(k) + to_offset;
                if to >= i64::from(from) {
                    out.extend((from..=to as u32).map(Label::plain));
                }
            }
            LabelGen::Shift(offset) => {
                let v = i64::from(k) + offset;
                if v >= 0 {
                    out.push(Label::plain(v as u32));
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductionGroup {
    /// Distance in levels from parent to children, at least 1.
    pub jump: usize,
    pub marked: bool,
    pub labels: Vec<LabelGen>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSpec {
    pub name: String,
    pub axiom: Label,
    pub groups: Vec<ProductionGroup>,
}

impl RuleSpec {
    /// Children of a node with value `k`, as `(jump, label)` pairs; the
    /// label's mark is the group's mark.
    pub fn produce(&self, k: u32) -> Vec<(usize, Label)> {
        let mut out = Vec::new();
        let mut labels = Vec::new();
        for group in &self.groups {
            labels.clear();
            for gen in &group.labels {
                gen.push_labels(k, &mut labels);
            }
            out.extend(
                labels
                    .iter()
                    .map(|l| (group.jump, l.with_mark(group.marked))),
            );
        }
        out
    }
}

/// Plain Catalan rule `(2)`, `(k) -> (2)(3)...(k+1)`.
pub fn builtin_catalan() -> RuleSpec {
    RuleSpec {
        name: "catalan".into(),
        axiom: Label::plain(2),
        groups: vec![ProductionGroup {
            jump: 1,
            marked: false,
            labels: vec![LabelGen::Range {
                from: 2,
                to_offset: 1,
            }],
        }],
    }
}

/// Catalan rule rewritten with a marked production:
/// `(2)`, `(k) -> (2)(3)...(k)(k+1)(k)`, `(k) -> (~k)`.
pub fn builtin_catalan_marked() -> RuleSpec {
    RuleSpec {
        name: "catalan-marked".into(),
        axiom: Label::plain(2),
        groups: vec![
            ProductionGroup {
                jump: 1,
                marked: false,
                labels: vec![
                    LabelGen::Range {
                        from: 2,
                        to_offset: 1,
                    },
                    LabelGen::Shift(0),
                ],
            },
            ProductionGroup {
                jump: 1,
                marked: true,
                labels: vec![LabelGen::Shift(0)],
            },
        ],
    }
}

/// `(1)`, `(k) -1-> (1)(2)...(k-1)(k+1)`, `(k) -2-> (k)`.
pub fn builtin_motzkin2_jump() -> RuleSpec {
    RuleSpec {
        name: "motzkin2-jump".into(),
        axiom: Label::plain(1),
        groups: vec![
            ProductionGroup {
                jump: 1,
                marked: false,
                labels: vec![
                    LabelGen::Range {
                        from: 1,
                        to_offset: -1,
                    },
                    LabelGen::Shift(1),
                ],
            },
            ProductionGroup {
                jump: 2,
                marked: false,
                labels: vec![LabelGen::Shift(0)],
            },
        ],
    }
}

/// Rule for words avoiding `1^(j+1) 0^j`:
/// `(0)`, `(k) -1-> (0_1)(0_2)(1)...(k+1)`,
/// `(k) -(j+1)-> (~0_1)(~0_2)(~1)...(~k+1)`.
pub fn builtin_avoid_rule(j: usize) -> RuleSpec {
    assert!(j >= 1, "family parameter j must be at least 1");
    let labels = vec![
        LabelGen::Fixed(Label::zero_one()),
        LabelGen::Fixed(Label::zero_two()),
        LabelGen::Range {
            from: 1,
            to_offset: 1,
        },
    ];
    RuleSpec {
        name: format!("avoid-{j}"),
        axiom: Label::plain(0),
        groups: vec![
            ProductionGroup {
                jump: 1,
                marked: false,
                labels: labels.clone(),
            },
            ProductionGroup {
                jump: j + 1,
                marked: true,
                labels,
            },
        ],
    }
}

/// Signed node counts per level and label value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCensus {
    levels: Vec<BTreeMap<u32, BigInt>>,
}

impl LevelCensus {
    fn new(max_level: usize) -> Self {
        LevelCensus {
            levels: vec![BTreeMap::new(); max_level + 1],
        }
    }

    /// Adds `delta` to `(level, value)`, dropping entries that cancel out.
    pub(crate) fn add(&mut self, level: usize, value: u32, delta: &BigInt) {
        let slot = self.levels[level].entry(value).or_insert_with(BigInt::zero);
        *slot += delta;
        if slot.is_zero() {
            self.levels[level].remove(&value);
        }
    }

    pub(crate) fn with_levels(max_level: usize) -> Self {
        Self::new(max_level)
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn count(&self, level: usize, value: u32) -> BigInt {
        self.levels
            .get(level)
            .and_then(|m| m.get(&value).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero entries of one level, by value.
    pub fn level(&self, level: usize) -> &BTreeMap<u32, BigInt> {
        &self.levels[level]
    }

    /// Net signed total of a level.
    pub fn total(&self, level: usize) -> BigInt {
        self.levels[level].values().sum()
    }

    /// Row `n` lists values `0..=m` where `m` is the largest value with a
    /// nonzero count at level `n`.
    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.levels
            .iter()
            .map(|m| match m.keys().next_back() {
                Some(&max) => (0..=max)
                    .map(|v| m.get(&v).cloned().unwrap_or_default())
                    .collect(),
                None => Vec::new(),
            })
            .collect()
    }

    /// True iff level `n` holds exactly row `n` of the triangle for every
    /// level both cover.
    pub fn matches_triangle(&self, r: &RiordanTriangle) -> bool {
        let levels = self.max_level().min(r.order());
        (0..=levels).all(|n| {
            let row = &r.rows()[n];
            self.levels[n].keys().all(|&v| (v as usize) < row.len())
                && row
                    .iter()
                    .enumerate()
                    .all(|(k, c)| self.count(n, k as u32) == *c)
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.to_rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        grid_to_json(&self.to_rows())
    }

    pub fn to_text(&self) -> String {
        grid_to_text(&self.to_rows())
    }
}

/// Signed census of the first `max_level + 1` levels of the rule's tree.
pub fn expand(rule: &RuleSpec, max_level: usize) -> LevelCensus {
    let mut census = LevelCensus::new(max_level);
    census.add(0, rule.axiom.value, &BigInt::from(rule.axiom.sign()));
    for level in 0..=max_level {
        let current: Vec<(u32, BigInt)> = census.levels[level]
            .iter()
            .map(|(&v, c)| (v, c.clone()))
            .collect();
        for (value, count) in current {
            let negated = -&count;
            for (jump, child) in rule.produce(value) {
                if level + jump <= max_level {
                    let delta = if child.marked { &negated } else { &count };
                    census.add(level + jump, child.value, delta);
                }
            }
        }
    }
    census
}

/// Same census as [`expand`], computed by materializing every node with its
/// sign. Exponential; meant for small levels.
pub fn expand_by_nodes(rule: &RuleSpec, max_level: usize) -> LevelCensus {
    let mut nodes: Vec<Vec<Label>> = vec![Vec::new(); max_level + 1];
    nodes[0].push(rule.axiom);
    for level in 0..=max_level {
        let parents = std::mem::take(&mut nodes[level]);
        for parent in &parents {
            for (jump, child) in rule.produce(parent.value) {
                if level + jump <= max_level {
                    // (~~k) = (k)
                    nodes[level + jump].push(child.with_mark(child.marked != parent.marked));
                }
            }
        }
        nodes[level] = parents;
    }
    let mut census = LevelCensus::new(max_level);
    let (plus, minus) = (BigInt::one(), -BigInt::one());
    for (level, labels) in nodes.iter().enumerate() {
        for label in labels {
            census.add(
                level,
                label.value,
                if label.marked { &minus } else { &plus },
            );
        }
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riordan::{d_closed, from_dh, h_closed};

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn level_zero_is_the_axiom() {
        for rule in [
            builtin_catalan(),
            builtin_catalan_marked(),
            builtin_motzkin2_jump(),
            builtin_avoid_rule(3),
        ] {
            let c = expand(&rule, 0);
            assert_eq!(c.level(0).len(), 1);
            assert_eq!(c.count(0, rule.axiom.value), int(1));
        }
    }

    #[test]
    fn avoid_rule_level_three_for_j2() {
        let c = expand(&builtin_avoid_rule(2), 3);
        let row: Vec<BigInt> = (0..4).map(|v| c.count(3, v)).collect();
        assert_eq!(row, vec![int(18), int(9), int(4), int(1)]);
    }

    #[test]
    fn avoid_rule_first_level() {
        for j in 1..=4 {
            let c = expand(&builtin_avoid_rule(j), 1);
            assert_eq!(c.to_rows()[1], vec![int(2), int(1)]);
        }
        let c = expand(&builtin_avoid_rule(1), 2);
        assert_eq!(c.to_rows()[2], vec![int(4), int(2), int(1)]);
    }

    #[test]
    fn avoid_rule_matches_closed_form_triangle() {
        for j in 1..=3 {
            let r = from_dh(&d_closed(j, 10), &h_closed(j, 10), 10).unwrap();
            assert!(
                expand(&builtin_avoid_rule(j), 10).matches_triangle(&r),
                "j = {j}"
            );
        }
    }

    #[test]
    fn marked_catalan_first_level() {
        let c = expand(&builtin_catalan_marked(), 1);
        assert_eq!(c.level(1).len(), 2);
        assert_eq!(c.count(1, 2), int(1));
        assert_eq!(c.count(1, 3), int(1));
    }

    #[test]
    fn rewriting_keeps_level_totals() {
        let plain = expand(&builtin_catalan(), 10);
        let marked = expand(&builtin_catalan_marked(), 10);
        let expected = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(plain.total(n), int(*e));
            assert_eq!(marked.total(n), int(*e));
        }
    }

    #[test]
    fn motzkin_first_levels() {
        let c = expand(&builtin_motzkin2_jump(), 2);
        assert_eq!(c.total(0), int(1));
        assert_eq!(c.to_rows()[1], vec![int(0), int(0), int(1)]);
        // (2) -> (1)(3) plus the jumped (1) from the axiom.
        assert_eq!(c.count(2, 1), int(2));
        assert_eq!(c.count(2, 3), int(1));
    }

    #[test]
    fn dp_agrees_with_node_expansion() {
        for (rule, levels) in [
            (builtin_catalan(), 8),
            (builtin_catalan_marked(), 7),
            (builtin_motzkin2_jump(), 8),
            (builtin_avoid_rule(1), 7),
            (builtin_avoid_rule(2), 8),
        ] {
            assert_eq!(
                expand(&rule, levels),
                expand_by_nodes(&rule, levels),
                "{}",
                rule.name
            );
        }
    }

    #[test]
    fn label_rendering() {
        assert_eq!(Label::zero_one().with_mark(true).to_string(), "(~0_1)");
        assert_eq!(Label::plain(4).to_string(), "(4)");
    }
}
