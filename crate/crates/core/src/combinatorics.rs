//! Permutations, compositions and diagrams.
//!
//! A [`Diagram`] is an ordered list of `n` columns, each a subset of row indices
//! in `[n]`. Rows are numbered from the top, columns from the left, both from 1.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::subset::{Subset, MAX_GROUND};
use crate::{Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty word".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n (n-1) ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `w s_i`: swaps positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// Positions `i` with `w(i) < w(i + 1)`.
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.len()).filter(move |&i| self.at(i) < self.at(i + 1))
    }

    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            if !next_permutation(&mut word) {
                break;
            }
        }
        out
    }

    /// Relative order of `values`, as a permutation of `[values.len()]`.
    pub fn standardize(values: &[usize]) -> Permutation {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut word = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            word[i] = rank + 1;
        }
        Permutation { word }
    }
}

fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"365142"` for `n <= 9` or `"[3,6,5,1,4,2]"` for any `n`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated permutation {s:?}")))?;
            inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Whether `w` contains `pattern`; on success returns the lexicographically
/// smallest 1-based index sequence realizing it.
///
/// Depth-first over increasing positions; a partial embedding is abandoned as
/// soon as its relative order disagrees with the pattern's prefix.
pub fn contains_pattern(w: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
    let (n, k) = (w.len(), pattern.len());
    if k > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    if extend_embedding(w.word(), pattern.word(), 0, &mut chosen) {
        Some(chosen.into_iter().map(|i| i + 1).collect())
    } else {
        None
    }
}

fn extend_embedding(w: &[usize], tau: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == tau.len() {
        return true;
    }
    let remaining = tau.len() - depth;
    for idx in start..=w.len() - remaining {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(m, &prev)| (w[idx] < w[prev]) == (tau[depth] < tau[m]));
        if !consistent {
            continue;
        }
        chosen.push(idx);
        if extend_embedding(w, tau, idx + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Reference containment test: standardizes every `k`-subsequence of `w` in
/// lexicographic order of index sets and compares with `pattern`.
pub fn contains_pattern_exhaustive(w: &Permutation, pattern: &Permutation) -> Option<Vec<usize>> {
    let (n, k) = (w.len(), pattern.len());
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let values: Vec<usize> = idx.iter().map(|&i| w.word()[i]).collect();
        if Permutation::standardize(&values) == *pattern {
            return Some(idx.iter().map(|i| i + 1).collect());
        }
        // advance to the next k-combination of 0..n
        let mut p = k;
        while p > 0 && idx[p - 1] == n - k + p - 1 {
            p -= 1;
        }
        if p == 0 {
            return None;
        }
        idx[p - 1] += 1;
        for q in p..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// The patterns whose avoidance characterizes lattice-free Schubert Newton polytopes.
pub fn lattice_free_patterns() -> [Permutation; 3] {
    [
        Permutation {
            word: vec![1, 4, 2, 3],
        },
        Permutation {
            word: vec![1, 4, 3, 2],
        },
        Permutation {
            word: vec![1, 3, 2, 5, 4],
        },
    ]
}

pub fn avoids_lattice_free_patterns(w: &Permutation) -> bool {
    lattice_free_patterns()
        .iter()
        .all(|p| contains_pattern(w, p).is_none())
}

/// Same verdict as [`avoids_lattice_free_patterns`] via [`contains_pattern_exhaustive`].
pub fn avoids_lattice_free_patterns_exhaustive(w: &Permutation) -> bool {
    lattice_free_patterns()
        .iter()
        .all(|p| contains_pattern_exhaustive(w, p).is_none())
}

/// For every hook with corner `(i, w(i))`, at most one column strictly to the
/// right of `w(i)` has a box of `D(w)` strictly below row `i`.
pub fn hook_condition(w: &Permutation) -> bool {
    let d = rothe_diagram(w);
    let n = w.len();
    (1..=n).all(|i| {
        let below = Subset::interval(i + 1, n);
        let busy = (w.at(i) + 1..=n)
            .filter(|&c| !d.column(c).intersection(below).is_empty())
            .count();
        busy <= 1
    })
}

/// A weak composition with a fixed number of parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|p| p[0] >= p[1])
    }

    /// All compositions with `len` parts in `0..=max_part`, lexicographically.
    pub fn all(len: usize, max_part: usize) -> Vec<Composition> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=max_part).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(Composition::new).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition { parts })
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.parts)
    }
}

/// True iff there is no `i < j` with `α_j - α_i >= 2`.
pub fn composition_avoids_02(alpha: &Composition) -> bool {
    let p = alpha.parts();
    let mut running_min = usize::MAX;
    for &v in p {
        if running_min != usize::MAX && v >= running_min + 2 {
            return false;
        }
        running_min = running_min.min(v);
    }
    true
}

/// An ordered list of `n` columns, each a subset of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Diagram {
    n: usize,
    columns: Vec<Subset>,
}

impl Diagram {
    /// Builds a diagram; fewer than `n` columns are padded with empty ones.
    pub fn new(n: usize, mut columns: Vec<Subset>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::TooLarge(n));
        }
        if columns.len() > n {
            return Err(Error::AmbientSize {
                value: columns.len(),
                n,
            });
        }
        for c in &columns {
            if let Some(m) = c.last() {
                if m > n {
                    return Err(Error::AmbientSize { value: m, n });
                }
            }
        }
        columns.resize(n, Subset::EMPTY);
        Ok(Diagram { n, columns })
    }

    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            columns: vec![Subset::EMPTY; n],
        }
    }

    /// Parses `"1,3;2,3;1"`: columns separated by `;`, rows by `,`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::TooLarge(n));
        }
        let columns = text
            .split(';')
            .map(|c| Subset::parse(c, n))
            .collect::<Result<Vec<_>>>()?;
        Diagram::new(n, columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Subset] {
        &self.columns
    }

    /// Column `j`, 1-based.
    pub fn column(&self, j: usize) -> Subset {
        self.columns[j - 1]
    }

    pub fn box_count(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn contains_box(&self, row: usize, col: usize) -> bool {
        self.column(col).contains(row)
    }

    pub fn movable_interval(&self, j: usize) -> MovableInterval {
        MovableInterval::of_column(self.column(j), self.n)
    }

    pub fn movable_intervals(&self) -> Vec<MovableInterval> {
        (1..=self.n).map(|j| self.movable_interval(j)).collect()
    }

    /// All `2^(n*n)` diagrams in `[n] x [n]`, in bitmask order.
    pub fn all(n: usize) -> Vec<Diagram> {
        assert!(n * n < 32, "exhaustive diagram corpus only for n <= 5");
        let col_mask = (1u64 << n) - 1;
        (0..1u64 << (n * n))
            .map(|bits| Diagram {
                n,
                columns: (0..n)
                    .map(|j| Subset::from_bits(((bits >> (j * n)) & col_mask) as u32))
                    .collect(),
            })
            .collect()
    }

    /// Each of the `n*n` cells present independently with probability 1/2.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Diagram {
        let columns = (0..n)
            .map(|_| (1..=n).filter(|_| rng.gen_bool(0.5)).collect())
            .collect();
        Diagram { n, columns }
    }

    /// `wt` of the upper closure: entry `i` counts the nonempty columns with `i <= max(D_j)`.
    pub fn upper_closure_weight(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|i| {
                self.columns
                    .iter()
                    .filter(|c| c.last().is_some_and(|m| i <= m))
                    .count()
            })
            .collect()
    }

    /// `θ_D(I)`.
    pub fn theta(&self, rows: Subset) -> usize {
        self.columns
            .iter()
            .map(|&c| theta_column(c, rows, self.n).value())
            .sum()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", cols.join(";"))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(n={}, {self})", self.n)
    }
}

/// `D(w)`: box `(i, j)` iff `w(i) > j` and `w^{-1}(j) > i`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.len();
    let inv = w.inverse();
    let columns = (1..=n)
        .map(|j| (1..=n).filter(|&i| w.at(i) > j && inv.at(j) > i).collect())
        .collect();
    Diagram { n, columns }
}

/// `D(α)`: column `j` holds the rows `i` with `α_i >= j`.
pub fn skyline_diagram(alpha: &Composition) -> Result<Diagram> {
    let n = alpha.len();
    if n > MAX_GROUND {
        return Err(Error::TooLarge(n));
    }
    if let Some(&big) = alpha.parts().iter().find(|&&p| p > n) {
        return Err(Error::AmbientSize { value: big, n });
    }
    let columns = (1..=n)
        .map(|j| (1..=n).filter(|&i| alpha.parts()[i - 1] >= j).collect())
        .collect();
    Ok(Diagram { n, columns })
}

/// Rows from the topmost empty position of a column down to its bottommost box,
/// or empty when no box lies below an empty position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MovableInterval {
    bounds: Option<(usize, usize)>,
}

impl MovableInterval {
    pub const EMPTY: MovableInterval = MovableInterval { bounds: None };

    pub fn of_column(column: Subset, n: usize) -> Self {
        let first_gap = (1..=n).find(|&i| !column.contains(i));
        match (first_gap, column.last()) {
            (Some(lo), Some(hi)) if hi > lo => MovableInterval {
                bounds: Some((lo, hi)),
            },
            _ => MovableInterval::EMPTY,
        }
    }

    pub fn bounds(&self) -> Option<(usize, usize)> {
        self.bounds
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn len(&self) -> usize {
        self.bounds.map_or(0, |(lo, hi)| hi - lo + 1)
    }

    pub fn as_subset(&self) -> Subset {
        self.bounds
            .map_or(Subset::EMPTY, |(lo, hi)| Subset::interval(lo, hi))
    }

    pub fn intersection_len(&self, other: &MovableInterval) -> usize {
        match (self.bounds, other.bounds) {
            (Some((a, b)), Some((c, d))) => {
                let (lo, hi) = (a.max(c), b.min(d));
                if lo <= hi {
                    hi - lo + 1
                } else {
                    0
                }
            }
            _ => 0,
        }
    }
}

impl fmt::Debug for MovableInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds {
            Some((lo, hi)) => write!(f, "[{lo},{hi}]"),
            None => write!(f, "∅"),
        }
    }
}

impl Serialize for MovableInterval {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.as_subset().serialize(serializer)
    }
}

/// Which pairwise condition on movable intervals [`criterion_check`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionMode {
    /// `|M(D_i) ∩ M(D_j)| <= 1` for all `i < j`.
    AtMostOne,
    /// `M(D_i) ∩ M(D_j) = ∅` for all `i < j`.
    Disjoint,
}

impl FromStr for CriterionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "at-most-one" => Ok(CriterionMode::AtMostOne),
            "disjoint" => Ok(CriterionMode::Disjoint),
            other => Err(Error::Parse(format!("unknown criterion mode {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionVerdict {
    pub ok: bool,
    /// Lexicographically smallest violating column pair, 1-based.
    pub witness: Option<(usize, usize)>,
}

pub fn criterion_check(d: &Diagram, mode: CriterionMode) -> CriterionVerdict {
    let limit = match mode {
        CriterionMode::AtMostOne => 1,
        CriterionMode::Disjoint => 0,
    };
    let intervals = d.movable_intervals();
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            if intervals[i].intersection_len(&intervals[j]) > limit {
                return CriterionVerdict {
                    ok: false,
                    witness: Some((i + 1, j + 1)),
                };
            }
        }
    }
    CriterionVerdict {
        ok: true,
        witness: None,
    }
}

/// `word_I(D_j)` together with its matched-pair and star counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaColumn {
    pub word: String,
    pub matched: usize,
    pub stars: usize,
}

impl ThetaColumn {
    pub fn value(&self) -> usize {
        self.matched + self.stars
    }
}

/// Reads the column top to bottom: `(` for a row in `I` without a box, `)` for a
/// box outside `I`, `★` for a box in `I`. Stars never take part in matching.
pub fn theta_column(column: Subset, rows: Subset, n: usize) -> ThetaColumn {
    let mut word = String::new();
    let (mut open, mut matched, mut stars) = (0usize, 0usize, 0usize);
    for i in 1..=n {
        match (column.contains(i), rows.contains(i)) {
            (false, true) => {
                word.push('(');
                open += 1;
            }
            (true, false) => {
                word.push(')');
                if open > 0 {
                    open -= 1;
                    matched += 1;
                }
            }
            (true, true) => {
                word.push('★');
                stars += 1;
            }
            (false, false) => {}
        }
    }
    ThetaColumn {
        word,
        matched,
        stars,
    }
}

/// `θ_D(I)` for every `I ⊆ [n]`, indexed by bitmask. Immutable once built.
#[derive(Clone, Debug)]
pub struct ThetaTable {
    n: usize,
    values: Vec<usize>,
}

impl ThetaTable {
    pub fn new(d: &Diagram) -> Self {
        let values = Subset::all(d.n()).map(|s| d.theta(s)).collect();
        ThetaTable { n: d.n(), values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, rows: Subset) -> usize {
        self.values[rows.bits() as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> Subset {
        v.iter().copied().collect()
    }

    fn overlapping_columns() -> Diagram {
        Diagram::parse("1,3;2,3;1", 3).unwrap()
    }

    #[test]
    fn rothe_examples() {
        let d = rothe_diagram(&perm("365142"));
        assert_eq!(d.to_string(), "1,2,3;1,2,3,5;;2,3;2;");
        assert_eq!(rothe_diagram(&perm("321")).to_string(), "1,2;1;");
        assert_eq!(rothe_diagram(&Permutation::identity(5)), Diagram::empty(5));
    }

    #[test]
    fn rothe_box_count_is_inversion_count() {
        for w in Permutation::all(5) {
            assert_eq!(rothe_diagram(&w).box_count(), w.inversions(), "{w}");
        }
    }

    #[test]
    fn skyline_examples() {
        let d = skyline_diagram(&"4,1,3,0,2".parse().unwrap()).unwrap();
        assert_eq!(d.to_string(), "1,2,3,5;1,3,5;1,3;1;");
        assert_eq!(
            skyline_diagram(&"2,1".parse().unwrap())
                .unwrap()
                .to_string(),
            "1,2;1"
        );
        assert_eq!(
            skyline_diagram(&Composition::new(vec![0; 4])).unwrap(),
            Diagram::empty(4)
        );
        assert_eq!(
            skyline_diagram(&"3,0".parse().unwrap()),
            Err(Error::AmbientSize { value: 3, n: 2 })
        );
    }

    #[test]
    fn movable_interval_examples() {
        let d = overlapping_columns();
        assert_eq!(d.movable_interval(1).as_subset(), set(&[2, 3]));
        assert_eq!(d.movable_interval(2).as_subset(), set(&[1, 2, 3]));
        assert!(d.movable_interval(3).is_empty());
        assert!(MovableInterval::of_column(Subset::EMPTY, 4).is_empty());
        // full prefix {1..k} is immovable
        assert!(MovableInterval::of_column(set(&[1, 2]), 4).is_empty());
        assert!(MovableInterval::of_column(set(&[1, 2, 3]), 3).is_empty());
    }

    #[test]
    fn criterion_examples() {
        let d = overlapping_columns();
        let v = criterion_check(&d, CriterionMode::AtMostOne);
        assert!(!v.ok);
        assert_eq!(v.witness, Some((1, 2)));
        for mode in [CriterionMode::AtMostOne, CriterionMode::Disjoint] {
            assert!(criterion_check(&Diagram::empty(3), mode).ok);
        }
        let r = rothe_diagram(&perm("365142"));
        assert!(!criterion_check(&r, CriterionMode::Disjoint).ok);
    }

    #[test]
    fn criterion_single_point_overlap() {
        // M = {2,3} and {3,4}: share exactly row 3
        let d = Diagram::parse("1,3;1,2,4", 4).unwrap();
        assert!(criterion_check(&d, CriterionMode::AtMostOne).ok);
        let v = criterion_check(&d, CriterionMode::Disjoint);
        assert_eq!(v.witness, Some((1, 2)));
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(
            contains_pattern(&perm("1432"), &perm("1432")),
            Some(vec![1, 2, 3, 4])
        );
        assert_eq!(contains_pattern(&perm("2143"), &perm("1423")), None);
        let hit = contains_pattern(&perm("365142"), &perm("1432")).unwrap();
        assert_eq!(hit, vec![1, 2, 3, 5]);
        assert_eq!(contains_pattern(&perm("12"), &perm("123")), None);
    }

    #[test]
    fn pattern_search_agrees_with_exhaustive() {
        for w in Permutation::all(6) {
            for tau in Permutation::all(3)
                .into_iter()
                .chain(lattice_free_patterns())
            {
                assert_eq!(
                    contains_pattern(&w, &tau),
                    contains_pattern_exhaustive(&w, &tau),
                    "{w} {tau}"
                );
            }
        }
    }

    #[test]
    fn lattice_free_pattern_counts() {
        assert!(Permutation::all(3).iter().all(avoids_lattice_free_patterns));
        assert!(!avoids_lattice_free_patterns(&perm("1423")));
        let failing: Vec<String> = Permutation::all(4)
            .into_iter()
            .filter(|w| !avoids_lattice_free_patterns(w))
            .map(|w| w.to_string())
            .collect();
        assert_eq!(failing, ["1423", "1432"]);
    }

    #[test]
    fn hook_examples() {
        assert!(hook_condition(&Permutation::identity(4)));
        assert!(!hook_condition(&perm("1423")));
        assert!(hook_condition(&perm("2143")));
    }

    #[test]
    fn schubert_equivalences_up_to_six() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let a = avoids_lattice_free_patterns(&w);
                assert_eq!(a, hook_condition(&w), "{w}");
                assert_eq!(
                    a,
                    criterion_check(&rothe_diagram(&w), CriterionMode::Disjoint).ok,
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn composition_02_examples() {
        assert!(!composition_avoids_02(&"1,3".parse().unwrap()));
        assert!(composition_avoids_02(&"3,2,2,0".parse().unwrap()));
        assert!(composition_avoids_02(&"2,1,2".parse().unwrap()));
        assert!(!composition_avoids_02(&"2,0,2".parse().unwrap()));
        for a in Composition::all(4, 3) {
            let p = a.parts();
            let brute = (0..p.len()).all(|i| (i + 1..p.len()).all(|j| p[j] < p[i] + 2));
            assert_eq!(composition_avoids_02(&a), brute, "{a}");
        }
    }

    #[test]
    fn upper_closure_examples() {
        assert_eq!(Diagram::empty(3).upper_closure_weight(), vec![0, 0, 0]);
        assert_eq!(overlapping_columns().upper_closure_weight(), vec![3, 2, 2]);
        assert_eq!(
            rothe_diagram(&perm("21")).upper_closure_weight(),
            vec![1, 0]
        );
    }

    #[test]
    fn theta_examples() {
        let c = theta_column(set(&[1, 3]), set(&[2, 3]), 3);
        assert_eq!(c.word, ")(★");
        assert_eq!(c.value(), 1);
        let c = theta_column(set(&[1, 2]), set(&[1, 2]), 2);
        assert_eq!(c.word, "★★");
        assert_eq!(c.value(), 2);
        assert_eq!(theta_column(set(&[2]), set(&[1]), 2).word, "()");
        assert_eq!(theta_column(set(&[2]), set(&[1]), 2).value(), 1);
    }

    #[test]
    fn theta_empty_and_full() {
        for d in Diagram::all(3) {
            let table = ThetaTable::new(&d);
            assert_eq!(table.get(Subset::EMPTY), 0);
            assert_eq!(table.get(Subset::prefix(3)), d.box_count());
        }
    }

    #[test]
    fn pattern_restriction_gives_pattern_diagram() {
        for w in Permutation::all(5) {
            let d = rothe_diagram(&w);
            for k in 1..=3 {
                for sigma in Permutation::all(k) {
                    let Some(pos) = contains_pattern(&w, &sigma) else {
                        continue;
                    };
                    let cols: Vec<usize> = pos.iter().map(|&i| w.at(i)).collect::<Vec<_>>();
                    let mut cols_sorted = cols.clone();
                    cols_sorted.sort();
                    let restricted: Vec<Subset> = cols_sorted
                        .iter()
                        .map(|&c| {
                            pos.iter()
                                .enumerate()
                                .filter(|(_, &r)| d.contains_box(r, c))
                                .map(|(idx, _)| idx + 1)
                                .collect()
                        })
                        .collect();
                    assert_eq!(
                        Diagram::new(k, restricted).unwrap(),
                        rothe_diagram(&sigma),
                        "{w} {sigma}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_round_trips() {
        for s in ["365142", "[3,6,5,1,4,2,7,8,10,9]", "1"] {
            let w = perm(s);
            assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
        }
        assert_eq!(perm("[3,1,2]").to_string(), "312");
        assert!("1123".parse::<Permutation>().is_err());
        assert!("1a".parse::<Permutation>().is_err());
        assert!("[1,2".parse::<Permutation>().is_err());
        let d = Diagram::parse("1,3;;2", 4).unwrap();
        assert_eq!(d.to_string(), "1,3;;2;");
        assert_eq!(Diagram::parse(&d.to_string(), 4).unwrap(), d);
        assert!(Diagram::parse("1,4", 3).is_err());
        assert!(Diagram::parse("1;2;3;1", 3).is_err());
    }

    #[test]
    fn inverse_is_involution() {
        for w in Permutation::all(5) {
            assert_eq!(w.inverse().inverse(), w);
        }
    }
}
