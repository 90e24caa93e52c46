//! Compositions, partitions and the combinatorics indexing the descent algebra.
//!
//! A composition of `n` is a finite sequence of positive integers summing to
//! `n`. Compositions of `n` are in bijection with subsets of `[n-1]` via
//! partial sums ([`Composition::set_of`] / [`comp_of`]). Two orders matter:
//! composition refinement ([`refines`]) and partition refinement
//! ([`partition_refines`]), where some rearrangement of the finer partition
//! refines the coarser one.

use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite set of positive integers, kept strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn empty() -> Subset {
        Subset(Vec::new())
    }

    /// Sorts and checks for duplicates and zeros.
    pub fn new(mut elements: Vec<usize>) -> Result<Subset> {
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::Parse("subset elements must be positive".into()));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::UnsortedSubset(format!("{elements:?}")));
        }
        Ok(Subset(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Parses `"{1,3}"`; the braces are optional and `"{}"` is the empty set.
impl FromStr for Subset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Subset> {
        let t = s.trim();
        let inner = match (t.strip_prefix('{'), t.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => return Err(Error::Parse(format!("unbalanced braces in {s:?}"))),
        };
        Subset::new(parse_positive_list(inner, s)?)
    }
}

fn parse_positive_list(inner: &str, original: &str) -> Result<Vec<usize>> {
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad entry {tok:?} in {original:?}")));
            }
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad entry {tok:?} in {original:?}")))
        })
        .collect()
}

/// A composition: a sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    weight: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        let weight = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Error::InvalidComposition("weight overflows".into()))?;
        Ok(Composition { parts, weight })
    }

    /// The single-part composition `(n)`; for `n = 0` the empty composition.
    pub fn single(n: usize) -> Composition {
        if n == 0 {
            Composition::default()
        } else {
            Composition {
                parts: vec![n],
                weight: n,
            }
        }
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: usize) -> Composition {
        Composition {
            parts: vec![1; n],
            weight: n,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|α|`
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `ℓ(α)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `ℓ(α) + 1` partial sums `α_{≤0} = 0, α_{≤1}, …, α_{≤ℓ} = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        sums.push(0);
        for &p in &self.parts {
            acc += p;
            sums.push(acc);
        }
        sums
    }

    /// `Set(α) = {α_1, α_1+α_2, …, α_1+⋯+α_{p−1}}`.
    pub fn set_of(&self) -> Subset {
        let sums = self.partial_sums();
        if sums.len() <= 2 {
            return Subset::empty();
        }
        Subset(sums[1..sums.len() - 1].to_vec())
    }

    /// The α-blocks: consecutive intervals of lengths `α_1, …, α_k` covering `[n]`.
    pub fn blocks(&self) -> Vec<RangeInclusive<usize>> {
        let sums = self.partial_sums();
        sums.windows(2).map(|w| (w[0] + 1)..=w[1]).collect()
    }

    /// Parts sorted weakly decreasing.
    pub fn underlying_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn is_anagram_of(&self, other: &Composition) -> bool {
        self.underlying_partition() == other.underlying_partition()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// Parses `"2,1,1"` or `"(2,1,1)"`; `""` and `"()"` give the empty composition.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Composition> {
        let t = s.trim();
        let inner = match (t.strip_prefix('('), t.ends_with(')')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => return Err(Error::Parse(format!("unbalanced parentheses in {s:?}"))),
        };
        Composition::new(parse_positive_list(inner, s)?)
    }
}

/// A partition: weakly decreasing positive parts.
///
/// Only obtainable by sorting a composition, see
/// [`Composition::underlying_partition`] and [`Partition::from_parts`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(parts: Vec<usize>) -> Result<Partition> {
        Ok(Composition::new(parts)?.underlying_partition())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition viewed as a (weakly decreasing) composition.
    pub fn to_composition(&self) -> Composition {
        Composition {
            weight: self.weight(),
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// `Comp(I)`: consecutive differences of `0 < i_1 < ⋯ < i_{p−1} < n`.
pub fn comp_of(set: &Subset, n: usize) -> Result<Composition> {
    if let Some(&bad) = set.0.iter().find(|&&x| x == 0 || x >= n) {
        return Err(Error::SubsetOutOfRange {
            element: bad,
            max: n.saturating_sub(1),
        });
    }
    if n == 0 {
        return Ok(Composition::default());
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for x in set.iter().chain(std::iter::once(n)) {
        parts.push(x - prev);
        prev = x;
    }
    Composition::new(parts)
}

fn check_weights(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::WeightMismatch { left: a, right: b });
    }
    Ok(())
}

/// `α ⪯ β`: α splits into contiguous chunks with sums `β_1, …, β_p`.
///
/// Equivalent to `Set(β) ⊆ Set(α)`, which is what this checks.
pub fn refines(alpha: &Composition, beta: &Composition) -> Result<bool> {
    check_weights(alpha.weight(), beta.weight())?;
    Ok(beta.set_of().is_subset_of(&alpha.set_of()))
}

/// `λ ⪯_π μ`: the parts of λ can be grouped so that the group sums are the parts of μ.
///
/// Backtracking over part-to-bin assignments with memoization of dead
/// states (multiset of remaining bin capacities at a given part index).
pub fn partition_refines(lambda: &Partition, mu: &Partition) -> Result<bool> {
    check_weights(lambda.weight(), mu.weight())?;
    let mut capacities = mu.parts.clone();
    let mut dead = HashSet::new();
    Ok(group_into_bins(
        &lambda.parts,
        0,
        &mut capacities,
        &mut dead,
    ))
}

fn group_into_bins(
    parts: &[usize],
    index: usize,
    capacities: &mut Vec<usize>,
    dead: &mut HashSet<(usize, Vec<usize>)>,
) -> bool {
    if index == parts.len() {
        return capacities.iter().all(|&c| c == 0);
    }
    let mut key = capacities.clone();
    key.sort_unstable();
    let key = (index, key);
    if dead.contains(&key) {
        return false;
    }
    let part = parts[index];
    let mut tried = Vec::new();
    for j in 0..capacities.len() {
        let cap = capacities[j];
        if cap < part || tried.contains(&cap) {
            continue;
        }
        tried.push(cap);
        capacities[j] -= part;
        let ok = group_into_bins(parts, index + 1, capacities, dead);
        capacities[j] += part;
        if ok {
            return true;
        }
    }
    dead.insert(key);
    false
}

/// `η_β(α)`: the number of maps `f: [ℓ(β)] → [ℓ(α)]` with
/// `α_j = Σ_{i ∈ f⁻¹(j)} β_i` for every `j`.
pub fn eta(beta: &Composition, alpha: &Composition) -> Result<u64> {
    check_weights(beta.weight(), alpha.weight())?;
    let mut remaining = alpha.parts.clone();
    Ok(count_groupings(&beta.parts, 0, &mut remaining))
}

fn count_groupings(parts: &[usize], index: usize, remaining: &mut [usize]) -> u64 {
    if index == parts.len() {
        return u64::from(remaining.iter().all(|&r| r == 0));
    }
    let part = parts[index];
    let mut total = 0;
    for j in 0..remaining.len() {
        if remaining[j] >= part {
            remaining[j] -= part;
            total += count_groupings(parts, index + 1, remaining);
            remaining[j] += part;
        }
    }
    total
}

/// All `2^{n−1}` compositions of `n` (one for `n = 0`), lexicographic.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn extend(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>, n: usize) {
        if rest == 0 {
            out.push(Composition {
                parts: prefix.clone(),
                weight: n,
            });
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            extend(rest - first, prefix, out, n);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out, n);
    out
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            extend(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, n, &mut Vec::new(), &mut out);
    out
}

/// A nonnegative integer matrix with prescribed margins.
///
/// `entries` has `ℓ(row_sums)` rows and `ℓ(col_sums)` columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarginMatrix {
    entries: Vec<Vec<usize>>,
    col_sums: Composition,
    row_sums: Composition,
}

impl MarginMatrix {
    /// Validates the margins of an explicit matrix.
    pub fn new(entries: Vec<Vec<usize>>) -> Result<MarginMatrix> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged matrix".into()));
        }
        let row_sums = Composition::new(entries.iter().map(|r| r.iter().sum()).collect())?;
        let col_sums = Composition::new(
            (0..cols)
                .map(|c| entries.iter().map(|r| r[c]).sum())
                .collect(),
        )?;
        Ok(MarginMatrix {
            entries,
            col_sums,
            row_sums,
        })
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn col_sums(&self) -> &Composition {
        &self.col_sums
    }

    pub fn row_sums(&self) -> &Composition {
        &self.row_sums
    }

    /// Concatenates the rows, omitting zeros.
    pub fn read(&self) -> Composition {
        let parts: Vec<usize> = self
            .entries
            .iter()
            .flatten()
            .copied()
            .filter(|&x| x > 0)
            .collect();
        Composition {
            weight: parts.iter().sum(),
            parts,
        }
    }
}

/// Every matrix in `ℕ^{α,β}` (column sums α, row sums β) exactly once,
/// in lexicographic order of the row-major entry sequence.
pub fn matrices_with_margins(
    alpha: &Composition,
    beta: &Composition,
) -> Result<impl Iterator<Item = MarginMatrix>> {
    check_weights(alpha.weight(), beta.weight())?;
    let rows = beta.len();
    let cols = alpha.len();
    let mut out = Vec::new();
    let mut grid = vec![vec![0usize; cols]; rows];
    let mut row_left = beta.parts.clone();
    let mut col_left = alpha.parts.clone();
    fill_cell(
        0,
        rows,
        cols,
        &mut grid,
        &mut row_left,
        &mut col_left,
        &mut out,
    );
    let (alpha, beta) = (alpha.clone(), beta.clone());
    Ok(out.into_iter().map(move |entries| MarginMatrix {
        entries,
        col_sums: alpha.clone(),
        row_sums: beta.clone(),
    }))
}

fn fill_cell(
    cell: usize,
    rows: usize,
    cols: usize,
    grid: &mut Vec<Vec<usize>>,
    row_left: &mut [usize],
    col_left: &mut [usize],
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if cell == rows * cols {
        if row_left.iter().all(|&x| x == 0) && col_left.iter().all(|&x| x == 0) {
            out.push(grid.clone());
        }
        return;
    }
    let (r, c) = (cell / cols, cell % cols);
    let hi = row_left[r].min(col_left[c]);
    // The last cell of a row / column is forced.
    let lo = if c + 1 == cols {
        row_left[r]
    } else if r + 1 == rows {
        col_left[c]
    } else {
        0
    };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        grid[r][c] = v;
        row_left[r] -= v;
        col_left[c] -= v;
        fill_cell(cell + 1, rows, cols, grid, row_left, col_left, out);
        row_left[r] += v;
        col_left[c] += v;
    }
    grid[r][c] = 0;
}
