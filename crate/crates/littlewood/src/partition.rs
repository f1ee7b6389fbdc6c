//! Integer partitions and border-strip (rim hook) combinatorics.
//!
//! Partitions are stored as weakly decreasing sequences of positive parts;
//! trailing zeros are stripped on construction so equality is canonical.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is `Partition::empty()`. Zero parts are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Error produced when a part sequence is not weakly decreasing, or a
/// partition string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    NotDecreasing { position: usize },
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotDecreasing { position } => {
                write!(f, "parts must be weakly decreasing (violated at index {position})")
            }
            PartitionError::Parse(s) => write!(f, "cannot parse partition from {s:?}"),
        }
    }
}

impl std::error::Error for PartitionError {}

impl Partition {
    /// Builds a partition, checking the parts are weakly decreasing.
    /// Zeros (necessarily trailing) are stripped.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing { position: i + 1 });
            }
        }
        let mut parts = parts;
        parts.retain(|&p| p > 0);
        Ok(Partition { parts })
    }

    /// Panicking constructor, for literals in tests and internal tables.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part λ_i with 1-based index; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of (positive) parts, l(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts, |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (transpose) partition: λ′_i = #{j : λ_j ≥ i}.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let mut parts = Vec::with_capacity(cols);
        for i in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition { parts }
    }

    /// Cells of the Young diagram as (row, column) pairs, both 1-based,
    /// in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Whether the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

/// Ordered by size, then reverse-lexicographically within a size, matching
/// the enumeration order of [`partitions_of`]. For n = 4:
/// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"2,1"`; the empty string and `"0"` both denote the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: usize =
                piece.trim().parse().map_err(|_| PartitionError::Parse(s.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// Serialized as a JSON array of parts, e.g. `[4,2,1]`; the empty partition
/// is `[]`.
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PartsVisitor;

        impl<'de> Visitor<'de> for PartsVisitor {
            type Value = Partition;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a weakly decreasing array of positive integers")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Partition, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<usize>()? {
                    parts.push(p);
                }
                Partition::new(parts).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(PartsVisitor)
    }
}

/// A border strip (rim hook): an edge-connected skew shape with no 2×2 block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderStrip {
    cells: BTreeSet<(usize, usize)>,
}

impl BorderStrip {
    /// Builds a strip from its cells, checking edge-connectivity and the
    /// absence of 2×2 blocks. Cells are (row, column), 1-based.
    pub fn new(cells: BTreeSet<(usize, usize)>) -> Option<Self> {
        if cells.is_empty() {
            return None;
        }
        for &(i, j) in &cells {
            if cells.contains(&(i + 1, j))
                && cells.contains(&(i, j + 1))
                && cells.contains(&(i + 1, j + 1))
            {
                return None;
            }
        }
        // flood fill over edge-adjacent cells
        let start = *cells.iter().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some((i, j)) = stack.pop() {
            let mut neighbors = vec![(i + 1, j), (i, j + 1)];
            if i > 1 {
                neighbors.push((i - 1, j));
            }
            if j > 1 {
                neighbors.push((i, j - 1));
            }
            for c in neighbors {
                if cells.contains(&c) && seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        if seen.len() != cells.len() {
            return None;
        }
        Some(BorderStrip { cells })
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    /// |R|, the number of cells.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// r(R), the number of rows the strip meets.
    pub fn rows_met(&self) -> usize {
        self.cells.iter().map(|&(i, _)| i).collect::<BTreeSet<_>>().len()
    }

    /// c(R), the number of columns the strip meets.
    pub fn cols_met(&self) -> usize {
        self.cells.iter().map(|&(_, j)| j).collect::<BTreeSet<_>>().len()
    }

    /// ht(R) = r(R) − 1.
    pub fn height(&self) -> usize {
        self.rows_met() - 1
    }
}

/// The beta set (first-column hook lengths) of a partition, padded to a
/// stated length: entries λ_i + r − i for i = 1..r, strictly decreasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.contains(&value)
    }
}

/// The beta set (λ_i + r − i)_{i=1..r}. Requires r ≥ l(λ).
pub fn beta_set(lambda: &Partition, r: usize) -> BetaSet {
    assert!(r >= lambda.len(), "beta_set requires r >= l(lambda): r = {r}, l = {}", lambda.len());
    let entries = (1..=r).map(|i| lambda.part(i) + r - i).collect();
    BetaSet { entries }
}

/// Reconstructs the partition whose beta set of length r has the given
/// entries (any order, must be distinct).
fn partition_from_beta(mut entries: Vec<usize>) -> Partition {
    entries.sort_unstable_by(|a, b| b.cmp(a));
    let r = entries.len();
    let parts = entries.iter().enumerate().map(|(idx, &e)| e - (r - idx - 1)).collect();
    Partition::new(parts).expect("beta entries do not describe a partition")
}

/// Removes the border strip of size `p` that starts at the intersection of
/// the first column and final row of λ, if it exists and its removal leaves
/// a partition. Returns the smaller partition together with the strip.
///
/// The strip is found by walking the rim of the diagram from the cell
/// (l(λ), 1) towards the top right, taking `p` cells.
pub fn remove_strip_bottom_left(lambda: &Partition, p: usize) -> Option<(Partition, BorderStrip)> {
    if lambda.is_empty() || p == 0 {
        return None;
    }
    let mut cells = BTreeSet::new();
    let (mut i, mut j) = (lambda.len(), 1usize);
    for _ in 0..p {
        if i == 0 {
            // walked past the top of the diagram: no strip of this size
            return None;
        }
        cells.insert((i, j));
        if j < lambda.part(i) {
            j += 1;
        } else {
            i -= 1;
        }
    }
    // the walk removes a suffix of every visited row except possibly the
    // topmost one; the removal is valid only when that row is cleared to
    // its end
    let top_row = cells.iter().map(|&(r, _)| r).min().unwrap();
    let top_max_col = cells.iter().filter(|&&(r, _)| r == top_row).map(|&(_, c)| c).max().unwrap();
    if top_max_col != lambda.part(top_row) {
        return None;
    }
    let mut parts = Vec::with_capacity(lambda.len());
    for row in 1..=lambda.len() {
        let removed_min = cells.iter().filter(|&&(r, _)| r == row).map(|&(_, c)| c).min();
        match removed_min {
            Some(c) => parts.push(c - 1),
            None => parts.push(lambda.part(row)),
        }
    }
    let remainder = Partition::new(parts).ok()?;
    let strip = BorderStrip::new(cells).expect("rim walk produced an invalid strip");
    Some((remainder, strip))
}

/// All ways to remove a border strip of size `p` from λ leaving a partition,
/// as (remaining partition, ht(R)) pairs. Ordered by the topmost row of the
/// strip. Empty for p = 0.
///
/// Strip removal is single-entry arithmetic on the beta set: subtracting p
/// from an entry is valid when the result is a fresh nonnegative value, and
/// ht(R) is the number of entries jumped over when re-sorting.
pub fn mn_strips(lambda: &Partition, p: usize) -> Vec<(Partition, usize)> {
    if p == 0 {
        return Vec::new();
    }
    let beta = beta_set(lambda, lambda.len());
    let entries = beta.entries();
    let mut out = Vec::new();
    for (idx, &e) in entries.iter().enumerate() {
        if e < p {
            continue;
        }
        let v = e - p;
        if entries.contains(&v) {
            continue;
        }
        let ht = entries[idx + 1..].iter().filter(|&&x| x > v).count();
        let mut new_entries = entries.to_vec();
        new_entries[idx] = v;
        out.push((partition_from_beta(new_entries), ht));
    }
    out
}

/// Dimension f^λ of the irreducible S_{|λ|}-representation indexed by λ,
/// by the hook length formula |λ|! / ∏ hooks.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut numerator: u128 = 1;
    for k in 1..=n {
        numerator =
            numerator.checked_mul(k as u128).expect("hook_dimension overflow: partition too large");
    }
    let mut hooks: u128 = 1;
    for (i, j) in lambda.cells() {
        let hook = lambda.part(i) - j + conj.part(j) - i + 1;
        hooks = hooks.checked_mul(hook as u128).expect("hook product overflow");
    }
    u64::try_from(numerator / hooks).expect("hook_dimension exceeds u64")
}

/// Iterator over all partitions of `n`, in reverse-lexicographic order:
/// (n) first, (1^n) last.
pub fn partitions_of(n: usize) -> PartitionsOf {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    PartitionsOf { next: Some(first) }
}

pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // reverse-lexicographic successor: shrink the rightmost part that
        // exceeds 1 and redistribute what follows greedily
        self.next = current.iter().rposition(|&x| x > 1).map(|k| {
            let mut succ = current[..=k].to_vec();
            let surplus: usize = current[k..].iter().sum::<usize>() - (current[k] - 1);
            succ[k] = current[k] - 1;
            let v = succ[k];
            for _ in 0..surplus / v {
                succ.push(v);
            }
            if !surplus.is_multiple_of(v) {
                succ.push(surplus % v);
            }
            succ
        });
        Some(Partition { parts: current })
    }
}
