//! Bitmask subsets of a small ground set `[n] = {1, ..., n}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// Largest ground set a [`Subset`] can hold.
pub const MAX_GROUND: usize = 31;

/// A subset of `{1, ..., MAX_GROUND}` stored as a bitmask; bit `i - 1` marks element `i`.
///
/// Ordering is lexicographic on the increasing element sequence, so
/// `{1} < {1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{1, ..., k}`.
    pub fn prefix(k: usize) -> Self {
        debug_assert!(k <= MAX_GROUND);
        Subset(((1u64 << k) - 1) as u32)
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || lo == 0 {
            return Subset::EMPTY;
        }
        Subset(Self::prefix(hi).0 & !Self::prefix(lo - 1).0)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        Subset(1 << (i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GROUND).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        *self = self.with(i);
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | Self::singleton(i).0)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !Self::singleton(i).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `[n]`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(Self::prefix(n).0 & !self.0)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 0/1 indicator vector of length `n`.
    pub fn indicator(self, n: usize) -> Vec<i64> {
        (1..=n).map(|i| i64::from(self.contains(i))).collect()
    }

    /// All `2^n` subsets of `[n]`, in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(|b| Subset(b as u32))
    }

    /// All `k`-element subsets of `[n]`, in bitmask order.
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        Self::all(n).filter(move |s| s.len() == k)
    }

    /// Parses `"1,3"` (comma-separated, possibly empty).
    pub fn parse(text: &str, n: usize) -> Result<Subset, crate::Error> {
        let mut set = Subset::EMPTY;
        let text = text.trim();
        if text.is_empty() {
            return Ok(set);
        }
        for tok in text.split(',') {
            let tok = tok.trim();
            let i: usize = tok
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad row index {tok:?}")))?;
            if i == 0 || i > n {
                return Err(crate::Error::AmbientSize { value: i, n });
            }
            if set.contains(i) {
                return Err(crate::Error::Parse(format!("duplicate index {i}")));
            }
            set.insert(i);
        }
        Ok(set)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Subset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

pub struct SubsetIter(u32);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: Subset = [1, 3].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.last(), Some(3));
        assert_eq!(s.complement(4).to_vec(), vec![2, 4]);
        assert_eq!(Subset::interval(2, 4).to_vec(), vec![2, 3, 4]);
        assert!(Subset::interval(3, 2).is_empty());
        assert_eq!(s.indicator(4), vec![1, 0, 1, 0]);
        assert_eq!(Subset::EMPTY.last(), None);
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut v: Vec<Subset> = Subset::all(3).collect();
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["", "1", "1,2", "1,2,3", "1,3", "2", "2,3", "3"]);
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(Subset::parse("1,4", 3).is_err());
        assert!(Subset::parse("0", 3).is_err());
        assert!(Subset::parse("1,1", 3).is_err());
        assert_eq!(Subset::parse("", 3).unwrap(), Subset::EMPTY);
        assert_eq!(Subset::parse(" 2 , 3", 3).unwrap().to_vec(), vec![2, 3]);
    }
}
