//! Lattice-path construction for words avoiding `p = 1^(j+1) 0^j`.
//!
//! Every node of the generating tree of the avoid rule carries a path: a
//! word read as rise (`1`) and fall (`0`) steps, together with a set of
//! *marked* occurrences of `p`. A marked occurrence is an indivisible block
//! and each one flips the sign of the node. The plain production appends a
//! rise step and some fall steps, the marked production appends a marked
//! block and some fall steps, and the `(0_1)` children are obtained through
//! the cut-and-paste map [`zero1_forward`].
//!
//! At level `n` (paths with `n` rise steps) a word with `C` occurrences of
//! `p` shows up once for every subset of its occurrences that can be
//! marked, so the signed multiplicity is 1 for avoiders and 0 otherwise.
//!
//! Geometry is done on *units*: single unmarked steps and whole marked
//! blocks. A marked block moves the ordinate by `+1` like a rise, and the
//! points strictly inside a block are never cut points.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::pattern::Word;
use crate::rules::{Label, LevelCensus, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("malformed input path: {0}")]
    MalformedInput(String),
    #[error("path is not in the image of the (0_1) map: {0}")]
    NotInImage(String),
    #[error("invalid marks: {0}")]
    InvalidMarks(String),
    #[error("family parameter j must be at least 1")]
    BadParameter,
    #[error("tree for j = {j} limited to {limit} levels, asked for {levels}")]
    TooLarge {
        j: usize,
        levels: usize,
        limit: usize,
    },
    #[error("word {word} has net signed multiplicity {net}")]
    InconsistentCensus { word: Word, net: i64 },
}

/// Largest level `build_tree` will materialize for a given `j`.
pub fn level_limit(j: usize) -> usize {
    if j == 1 {
        9
    } else {
        8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Unit {
    Rise,
    Fall,
    Block,
}

impl Unit {
    fn delta(self) -> i64 {
        match self {
            Unit::Rise | Unit::Block => 1,
            Unit::Fall => -1,
        }
    }

    fn swapped(self) -> Unit {
        match self {
            Unit::Rise => Unit::Fall,
            Unit::Fall => Unit::Rise,
            Unit::Block => Unit::Block,
        }
    }
}

/// Ordinates at the unit boundaries, starting from 0.
fn boundary_ordinates(units: &[Unit]) -> Vec<i64> {
    let mut ys = Vec::with_capacity(units.len() + 1);
    let mut y = 0;
    ys.push(y);
    for u in units {
        y += u.delta();
        ys.push(y);
    }
    ys
}

/// A binary word read as a lattice path, with marked occurrences of
/// `1^(j+1) 0^j` given by their start indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnnotatedPath {
    j: usize,
    word: Word,
    marks: Vec<usize>,
}

impl AnnotatedPath {
    pub fn empty(j: usize) -> Self {
        AnnotatedPath {
            j,
            word: Word::empty(),
            marks: Vec::new(),
        }
    }

    /// Checks that each mark starts a `1^(j+1) 0^j` block inside the word
    /// and that blocks do not overlap.
    pub fn new(j: usize, word: Word, mut marks: Vec<usize>) -> Result<Self, PathError> {
        if j == 0 {
            return Err(PathError::BadParameter);
        }
        marks.sort_unstable();
        let span = 2 * j + 1;
        let bits = word.bits();
        let mut free_from = 0;
        for &m in &marks {
            if m < free_from {
                return Err(PathError::InvalidMarks(format!("overlapping spans at {m}")));
            }
            let ok = m + span <= bits.len()
                && bits[m..m + j + 1].iter().all(|&b| b == 1)
                && bits[m + j + 1..m + span].iter().all(|&b| b == 0);
            if !ok {
                return Err(PathError::InvalidMarks(format!(
                    "no 1^{}0^{j} block at {m} in {word}",
                    j + 1
                )));
            }
            free_from = m + span;
        }
        Ok(AnnotatedPath { j, word, marks })
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Sorted start indices of the marked blocks.
    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn rises(&self) -> usize {
        self.word.ones()
    }

    /// Ordinate of the endpoint, `#rise - #fall`.
    pub fn endpoint(&self) -> i64 {
        self.word.ones() as i64 - self.word.zeros() as i64
    }

    fn units(&self) -> Vec<Unit> {
        let bits = self.word.bits();
        let span = 2 * self.j + 1;
        let mut out = Vec::with_capacity(bits.len());
        let mut marks = self.marks.iter().peekable();
        let mut i = 0;
        while i < bits.len() {
            if marks.peek() == Some(&&i) {
                marks.next();
                out.push(Unit::Block);
                i += span;
            } else {
                out.push(if bits[i] == 1 { Unit::Rise } else { Unit::Fall });
                i += 1;
            }
        }
        out
    }

    fn from_units(j: usize, units: &[Unit]) -> Self {
        let mut bits = Vec::new();
        let mut marks = Vec::new();
        for u in units {
            match u {
                Unit::Rise => bits.push(1),
                Unit::Fall => bits.push(0),
                Unit::Block => {
                    marks.push(bits.len());
                    bits.extend(std::iter::repeat_n(1, j + 1));
                    bits.extend(std::iter::repeat_n(0, j));
                }
            }
        }
        AnnotatedPath {
            j,
            word: Word::from_bits(bits),
            marks,
        }
    }

    fn extended(&self, units: &[Unit]) -> Self {
        let mut all = self.units();
        all.extend_from_slice(units);
        Self::from_units(self.j, &all)
    }

    /// Ordinates of the marked peaks, left to right.
    pub fn peak_ordinates(&self) -> Vec<i64> {
        let bits = self.word.bits();
        let mut y = 0i64;
        let mut out = Vec::new();
        let mut marks = self.marks.iter().peekable();
        for (i, &b) in bits.iter().enumerate() {
            if marks.peek() == Some(&&i) {
                marks.next();
                out.push(y + self.j as i64 + 1);
            }
            y += if b == 1 { 1 } else { -1 };
        }
        out
    }
}

impl fmt::Display for AnnotatedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)?;
        if !self.marks.is_empty() {
            let marks: Vec<String> = self.marks.iter().map(ToString::to_string).collect();
            write!(f, " [{}]", marks.join(","))?;
        }
        Ok(())
    }
}

/// The `(0_1)` map. The input `w'` ends at ordinate 1; write `w' = v phi`
/// with `phi` the suffix after the last axis point. Without marked blocks
/// in `phi` the result is `v phi^c x` (`phi^c` swaps rises and falls);
/// otherwise it is `v xbar alpha beta`, where `phi = beta alpha` is cut at
/// the leftmost highest point `z` of `phi`.
pub fn zero1_forward(path: &AnnotatedPath) -> Result<AnnotatedPath, PathError> {
    if path.endpoint() != 1 {
        return Err(PathError::MalformedInput(format!(
            "{path} ends at ordinate {}, expected 1",
            path.endpoint()
        )));
    }
    let units = path.units();
    let ys = boundary_ordinates(&units);
    let start = ys
        .iter()
        .rposition(|&y| y == 0)
        .ok_or_else(|| PathError::MalformedInput(format!("{path} never meets the axis")))?;
    let (v, phi) = units.split_at(start);

    let mut out = v.to_vec();
    if !phi.contains(&Unit::Block) {
        out.extend(phi.iter().map(|u| u.swapped()));
        out.push(Unit::Rise);
    } else {
        // The horizontal line s through t lies at or below the highest point
        // of phi, so z is the leftmost highest cut point.
        let phi_ys = &ys[start..];
        let top = *phi_ys.iter().max().expect("phi is nonempty");
        let z = phi_ys.iter().position(|&y| y == top).expect("max exists");
        out.push(Unit::Fall);
        out.extend_from_slice(&phi[z..]);
        out.extend_from_slice(&phi[..z]);
    }
    Ok(AnnotatedPath::from_units(path.j, &out))
}

/// Inverse of [`zero1_forward`]. Finds the rightmost unmarked fall step `d`
/// leaving the axis with every marked peak to its right at ordinate at most
/// `j`, writes the path as `w d phi'`, and undoes the complement or the
/// rotation (cut at the rightmost lowest point of `phi'`).
pub fn zero1_inverse(path: &AnnotatedPath) -> Result<AnnotatedPath, PathError> {
    if path.endpoint() != 0 || path.word.is_empty() {
        return Err(PathError::NotInImage(format!(
            "{path} does not end on the axis"
        )));
    }
    let units = path.units();
    let ys = boundary_ordinates(&units);
    let j = path.j as i64;
    let mut d = None;
    let mut peaks_ok = true;
    for u in (0..units.len()).rev() {
        match units[u] {
            Unit::Fall if ys[u] == 0 && peaks_ok => {
                d = Some(u);
                break;
            }
            Unit::Block if ys[u] + j + 1 > j => peaks_ok = false,
            _ => {}
        }
    }
    let d =
        d.ok_or_else(|| PathError::NotInImage(format!("{path} has no admissible fall step")))?;
    let (omega, rest) = units.split_at(d);
    let phi_prime = &rest[1..];

    let mut out = omega.to_vec();
    if !phi_prime.contains(&Unit::Block) {
        let (last, body) = phi_prime
            .split_last()
            .ok_or_else(|| PathError::NotInImage(format!("{path} ends with its fall step")))?;
        if *last != Unit::Rise {
            return Err(PathError::NotInImage(format!(
                "{path} does not end with a rise"
            )));
        }
        out.push(Unit::Rise);
        out.extend(body.iter().map(|u| u.swapped()));
    } else {
        let phi_ys = &ys[d + 1..];
        let bottom = *phi_ys.iter().min().expect("phi' is nonempty");
        let l = phi_ys
            .iter()
            .rposition(|&y| y == bottom)
            .expect("min exists");
        out.extend_from_slice(&phi_prime[l..]);
        out.extend_from_slice(&phi_prime[..l]);
    }
    let pre = AnnotatedPath::from_units(path.j, &out);
    if zero1_forward(&pre).as_ref() != Ok(path) {
        return Err(PathError::NotInImage(format!("{path} has no preimage")));
    }
    Ok(pre)
}

/// A materialized node of the construction tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionNode {
    pub path: AnnotatedPath,
    /// Marked iff the node counts negatively.
    pub label: Label,
    /// Number of rise steps.
    pub level: usize,
    /// `(-1)^(number of marked blocks)`.
    pub sign: i8,
}

#[derive(Serialize)]
struct NodeRecord<'a> {
    word: &'a Word,
    marks: &'a [usize],
    label: &'a Label,
    level: usize,
}

impl ConstructionNode {
    pub fn root(j: usize) -> Self {
        ConstructionNode {
            path: AnnotatedPath::empty(j),
            label: Label::plain(0),
            level: 0,
            sign: 1,
        }
    }

    /// `{"word": ..., "marks": [...], "label": {...}, "level": n}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&NodeRecord {
            word: self.path.word(),
            marks: self.path.marks(),
            label: &self.label,
            level: self.level,
        })
        .expect("node serializes")
    }
}

fn children(
    node: &ConstructionNode,
    head: Unit,
    level: usize,
    sign: i8,
    observer: &mut dyn FnMut(&AnnotatedPath, &AnnotatedPath),
) -> Vec<ConstructionNode> {
    let k = node.path.endpoint();
    debug_assert!(k >= 0, "tree paths end at a nonnegative ordinate");
    let k = k as usize;
    let marked = sign < 0;
    let make = |path: AnnotatedPath, label: Label| ConstructionNode {
        path,
        label: label.with_mark(marked),
        level,
        sign,
    };
    let mut out = Vec::with_capacity(k + 3);

    let mut tail = vec![head];
    tail.extend(std::iter::repeat_n(Unit::Fall, k));
    let intermediate = node.path.extended(&tail);
    let zero1 = zero1_forward(&intermediate).expect("intermediate path ends at ordinate 1");
    observer(&intermediate, &zero1);
    out.push(make(zero1, Label::zero_one()));

    for h in 0..=k + 1 {
        let mut tail = vec![head];
        tail.extend(std::iter::repeat_n(Unit::Fall, k + 1 - h));
        let label = if h == 0 {
            Label::zero_two()
        } else {
            Label::plain(h as u32)
        };
        out.push(make(node.path.extended(&tail), label));
    }
    out
}

/// Children from `(k) -1-> (0_1)(0_2)(1)...(k+1)`: a rise step followed by
/// `k + 1 - h` fall steps for label `h`, and the `(0_1)` child through
/// [`zero1_forward`].
pub fn produce_plain(node: &ConstructionNode) -> Vec<ConstructionNode> {
    children(node, Unit::Rise, node.level + 1, node.sign, &mut |_, _| {})
}

/// Children from the marked production: as [`produce_plain`] with the rise
/// step replaced by a marked block, `j + 1` levels below.
pub fn produce_marked(node: &ConstructionNode) -> Vec<ConstructionNode> {
    let level = node.level + node.path.j + 1;
    children(node, Unit::Block, level, -node.sign, &mut |_, _| {})
}

/// Nodes of levels `0..=levels`. `observer` sees every `(0_1)` input path
/// together with its image.
pub fn build_tree_observed(
    j: usize,
    levels: usize,
    observer: &mut dyn FnMut(&AnnotatedPath, &AnnotatedPath),
) -> Result<Vec<Vec<ConstructionNode>>, PathError> {
    if j == 0 {
        return Err(PathError::BadParameter);
    }
    let limit = level_limit(j);
    if levels > limit {
        return Err(PathError::TooLarge { j, levels, limit });
    }
    let mut tree: Vec<Vec<ConstructionNode>> = vec![Vec::new(); levels + 1];
    tree[0].push(ConstructionNode::root(j));
    for level in 0..levels {
        let parents = std::mem::take(&mut tree[level]);
        for node in &parents {
            tree[level + 1].extend(children(node, Unit::Rise, level + 1, node.sign, observer));
            if level + j < levels {
                tree[level + j + 1].extend(children(
                    node,
                    Unit::Block,
                    level + j + 1,
                    -node.sign,
                    observer,
                ));
            }
        }
        tree[level] = parents;
    }
    Ok(tree)
}

pub fn build_tree(j: usize, levels: usize) -> Result<Vec<Vec<ConstructionNode>>, PathError> {
    build_tree_observed(j, levels, &mut |_, _| {})
}

/// Signed `(level, label value)` census of a materialized tree.
pub fn tree_census(tree: &[Vec<ConstructionNode>]) -> LevelCensus {
    let mut census = LevelCensus::with_levels(tree.len().saturating_sub(1));
    for (level, nodes) in tree.iter().enumerate() {
        for node in nodes {
            census.add(level, node.label.value, &BigInt::from(node.sign));
        }
    }
    census
}

/// Signed multiplicity of each word among the given nodes.
pub fn net_multiplicities(nodes: &[ConstructionNode]) -> BTreeMap<Word, i64> {
    let mut net = BTreeMap::new();
    for node in nodes {
        *net.entry(node.path.word().clone()).or_insert(0) += i64::from(node.sign);
    }
    net
}

/// Words of net multiplicity 1; fails if any word nets to something other
/// than 0 or 1.
pub fn survivors_of(nodes: &[ConstructionNode]) -> Result<BTreeSet<Word>, PathError> {
    let mut out = BTreeSet::new();
    for (word, net) in net_multiplicities(nodes) {
        match net {
            0 => {}
            1 => {
                out.insert(word);
            }
            _ => return Err(PathError::InconsistentCensus { word, net }),
        }
    }
    Ok(out)
}

/// Words with `n` ones that survive annihilation at level `n`.
pub fn survivors(j: usize, n: usize) -> Result<BTreeSet<Word>, PathError> {
    let tree = build_tree(j, n)?;
    survivors_of(&tree[n])
}

/// Per word: number of nodes with an even and with an odd number of marked
/// blocks.
pub fn copies_of(nodes: &[ConstructionNode]) -> BTreeMap<Word, (u64, u64)> {
    let mut out: BTreeMap<Word, (u64, u64)> = BTreeMap::new();
    for node in nodes {
        let entry = out.entry(node.path.word().clone()).or_default();
        if node.sign > 0 {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }
    out
}

pub fn copies_census(j: usize, n: usize) -> Result<BTreeMap<Word, (u64, u64)>, PathError> {
    let tree = build_tree(j, n)?;
    Ok(copies_of(&tree[n]))
}

/// True for `(0_1)` labels.
pub fn is_zero_one(label: &Label) -> bool {
    label.variant == Variant::ZeroOne
}
