//! Binary patterns, autocorrelation, and counting of words that avoid a
//! pattern as a factor.
//!
//! Three independent routes are provided: the bivariate generating function
//! built from the correlation polynomial ([`f_table`]), a dynamic program over
//! the pattern's prefix automaton ([`count_automaton`]) and exhaustive
//! enumeration ([`count_bruteforce`]).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::series::{BSeries, SeriesError};

/// Largest `n + k` accepted by the exhaustive operations.
pub const ENUMERATION_LIMIT: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern must be a nonempty string of '0' and '1', got {0:?}")]
    BadPattern(String),
    #[error("word must be a string of '0' and '1', got {0:?}")]
    BadWord(String),
    #[error("exhaustive enumeration limited to n + k <= {ENUMERATION_LIMIT}, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

fn parse_bits(s: &str) -> Option<Vec<u8>> {
    s.bytes()
        .map(|b| match b {
            b'0' => Some(0),
            b'1' => Some(1),
            _ => None,
        })
        .collect()
}

fn write_bits(f: &mut fmt::Formatter<'_>, bits: &[u8]) -> fmt::Result {
    for &b in bits {
        f.write_str(if b == 1 { "1" } else { "0" })?;
    }
    Ok(())
}

/// A binary word, leftmost letter first. Letter `1` is a rise step and `0` a
/// fall step when the word is read as a lattice path.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    /// Panics if a letter is not 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "letters must be 0 or 1");
        Word(bits)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.0.windows(p.len()).any(|w| w == p.bits())
    }
}

impl FromStr for Word {
    type Err = PatternError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bits(s)
            .map(Word)
            .ok_or_else(|| PatternError::BadWord(s.to_string()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.0)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A nonempty forbidden factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<u8>);

impl Pattern {
    pub fn new(bits: Vec<u8>) -> Result<Self, PatternError> {
        if bits.is_empty() || bits.iter().any(|&b| b > 1) {
            return Err(PatternError::BadPattern(format!("{bits:?}")));
        }
        Ok(Pattern(bits))
    }

    /// The pattern `1^(j+1) 0^j`.
    pub fn family(j: usize) -> Self {
        let mut bits = vec![1; j + 1];
        bits.extend(std::iter::repeat_n(0, j));
        Pattern(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    pub fn reversed(&self) -> Self {
        Pattern(self.0.iter().rev().copied().collect())
    }

    /// Exchanges ones and zeros.
    pub fn complemented(&self) -> Self {
        Pattern(self.0.iter().map(|&b| 1 - b).collect())
    }
}

impl FromStr for Pattern {
    type Err = PatternError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_bits(s) {
            Some(bits) if !bits.is_empty() => Ok(Pattern(bits)),
            _ => Err(PatternError::BadPattern(s.to_string())),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.0)
    }
}

/// `c[i] = 1` iff the pattern shifted right by `i` agrees with itself on
/// the overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutocorrelationVector(Vec<bool>);

impl AutocorrelationVector {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Display for AutocorrelationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|&b| if b { "1" } else { "0" }).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn autocorrelation(p: &Pattern) -> AutocorrelationVector {
    let bits = p.bits();
    let h = bits.len();
    AutocorrelationVector((0..h).map(|i| bits[..h - i] == bits[i..]).collect())
}

/// The correlation polynomial `C(x, y)`: one term per self-overlap shift `s`,
/// marking the `s` trailing letters by their ones (`x`) and zeros (`y`).
pub fn correlation_poly(p: &Pattern, order: usize) -> BSeries {
    let c = autocorrelation(p);
    let bits = p.bits();
    let h = bits.len();
    let terms: Vec<(i64, usize, usize)> = (0..h)
        .filter(|&s| c.0[s])
        .map(|s| {
            let tail = &bits[h - s..];
            let ones = tail.iter().filter(|&&b| b == 1).count();
            (1, ones, tail.len() - ones)
        })
        .collect();
    BSeries::from_terms(&terms, order)
}

/// `F(x, y) = C / ((1 - x - y) C + x^|p|_1 y^|p|_0)`; entry `(n, k)` counts
/// words with `n` ones and `k` zeros avoiding `p`.
pub fn f_table(p: &Pattern, order: usize) -> BSeries {
    let c = correlation_poly(p, order);
    let one_minus = BSeries::from_terms(&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1)], order);
    let lead = BSeries::from_terms(&[(1, p.ones(), p.zeros())], order);
    let denom = one_minus.mul(&c).add(&lead);
    c.div(&denom).expect("denominator has constant term 1")
}

/// [`f_table`] as an exact integer grid.
pub fn f_table_integers(p: &Pattern, order: usize) -> Vec<Vec<BigInt>> {
    f_table(p, order)
        .to_integers()
        .expect("avoider counts are integers")
}

fn check_limit(n: usize, k: usize) -> Result<(), PatternError> {
    if n + k > ENUMERATION_LIMIT {
        return Err(PatternError::TooLarge(n + k));
    }
    Ok(())
}

/// Calls `visit` on every word with exactly `n` ones and `k` zeros, in
/// lexicographic order.
fn for_each_arrangement(n: usize, k: usize, mut visit: impl FnMut(&[u8])) {
    fn rec(buf: &mut Vec<u8>, ones: usize, zeros: usize, visit: &mut impl FnMut(&[u8])) {
        if ones == 0 && zeros == 0 {
            visit(buf);
            return;
        }
        if zeros > 0 {
            buf.push(0);
            rec(buf, ones, zeros - 1, visit);
            buf.pop();
        }
        if ones > 0 {
            buf.push(1);
            rec(buf, ones - 1, zeros, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(n + k);
    rec(&mut buf, n, k, &mut visit);
}

fn contains_factor(word: &[u8], p: &[u8]) -> bool {
    word.windows(p.len()).any(|w| w == p)
}

/// Exhaustive count of words with `n` ones and `k` zeros avoiding `p`.
pub fn count_bruteforce(p: &Pattern, n: usize, k: usize) -> Result<BigUint, PatternError> {
    check_limit(n, k)?;
    let mut count = 0u64;
    for_each_arrangement(n, k, |w| {
        if !contains_factor(w, p.bits()) {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

/// The set of words counted by [`count_bruteforce`].
pub fn avoiders(p: &Pattern, n: usize, k: usize) -> Result<BTreeSet<Word>, PatternError> {
    check_limit(n, k)?;
    let mut out = BTreeSet::new();
    for_each_arrangement(n, k, |w| {
        if !contains_factor(w, p.bits()) {
            out.insert(Word(w.to_vec()));
        }
    });
    Ok(out)
}

/// Failure function: `fail[i]` is the length of the longest proper border of
/// the prefix of length `i + 1`.
fn failure_function(p: &[u8]) -> Vec<usize> {
    let mut fail = vec![0; p.len()];
    let mut k = 0;
    for i in 1..p.len() {
        while k > 0 && p[i] != p[k] {
            k = fail[k - 1];
        }
        if p[i] == p[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Transition table of the prefix automaton: `delta[state][letter]`, states
/// `0..h`; reaching state `h` means a full match.
fn prefix_automaton(p: &[u8]) -> Vec<[usize; 2]> {
    let fail = failure_function(p);
    let h = p.len();
    let mut delta = vec![[0usize; 2]; h];
    for state in 0..h {
        for letter in 0..2u8 {
            let mut s = state;
            loop {
                if p[s] == letter {
                    s += 1;
                    break;
                }
                if s == 0 {
                    break;
                }
                s = fail[s - 1];
            }
            delta[state][letter as usize] = s;
        }
    }
    delta
}

/// Counts avoiders by dynamic programming over the prefix automaton; the
/// full-match state is dropped.
pub fn count_automaton(p: &Pattern, n: usize, k: usize) -> BigUint {
    let delta = prefix_automaton(p.bits());
    let h = p.len();
    // table[ones][zeros][state]
    let mut table = vec![vec![vec![BigUint::zero(); h]; k + 1]; n + 1];
    table[0][0][0] = BigUint::one();
    for ones in 0..=n {
        for zeros in 0..=k {
            for state in 0..h {
                let count = std::mem::take(&mut table[ones][zeros][state]);
                if count.is_zero() {
                    continue;
                }
                if ones < n {
                    let next = delta[state][1];
                    if next < h {
                        table[ones + 1][zeros][next] += &count;
                    }
                }
                if zeros < k {
                    let next = delta[state][0];
                    if next < h {
                        table[ones][zeros + 1][next] += &count;
                    }
                }
                table[ones][zeros][state] = count;
            }
        }
    }
    table[n][k].iter().sum()
}
