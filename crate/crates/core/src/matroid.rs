//! Schubert matroids `SM_n(S)`: the bases are the `T ⊆ [n]` below `S` in Gale order.

use crate::subset::Subset;

/// `T ⪯ S`: equal sizes and `a_i <= b_i` for the sorted elements.
pub fn gale_leq(t: Subset, s: Subset) -> bool {
    t.len() == s.len() && t.iter().zip(s.iter()).all(|(a, b)| a <= b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertMatroid {
    n: usize,
    defining: Subset,
    bases: Vec<Subset>,
}

impl SchubertMatroid {
    /// Panics if `defining` is not a subset of `[n]`.
    pub fn new(n: usize, defining: Subset) -> Self {
        assert!(
            defining.is_subset_of(Subset::prefix(n)),
            "defining set {defining:?} not inside [{n}]"
        );
        let mut bases = Vec::new();
        let targets = defining.to_vec();
        descend(&targets, 0, 0, Subset::EMPTY, &mut bases);
        bases.sort();
        SchubertMatroid { n, defining, bases }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn defining_set(&self) -> Subset {
        self.defining
    }

    pub fn rank_of_matroid(&self) -> usize {
        self.defining.len()
    }

    /// Bases in [`Subset`] order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    /// Bases found by filtering every `|S|`-subset through [`gale_leq`].
    pub fn bases_by_filter(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = Subset::all_of_size(self.n, self.defining.len())
            .filter(|&t| gale_leq(t, self.defining))
            .collect();
        out.sort();
        out
    }

    pub fn is_basis(&self, t: Subset) -> bool {
        gale_leq(t, self.defining)
    }

    /// `max_B |A ∩ B|`.
    pub fn rank(&self, a: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| b.intersection(a).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank(a) == a.len()
    }

    pub fn is_spanning(&self, a: Subset) -> bool {
        self.rank(a) == self.defining.len()
    }

    /// Subsets of `[n]` containing a basis, in [`Subset`] order.
    pub fn spanning_sets(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = Subset::all(self.n)
            .filter(|&a| self.is_spanning(a))
            .collect();
        out.sort();
        out
    }

    /// Elements lying in no basis: every `i > max S`, or all of `[n]` when `S` is empty.
    pub fn loops(&self) -> Subset {
        let covered = self
            .bases
            .iter()
            .fold(Subset::EMPTY, |acc, b| acc.union(*b));
        covered.complement(self.n)
    }

    /// Spanning sets containing no loop.
    pub fn loop_free_spanning_sets(&self) -> Vec<Subset> {
        let loops = self.loops();
        self.spanning_sets()
            .into_iter()
            .filter(|a| a.intersection(loops).is_empty())
            .collect()
    }

    /// Bases of the dual matroid: complements of bases.
    pub fn dual_bases(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self.bases.iter().map(|b| b.complement(self.n)).collect();
        out.sort();
        out
    }

    pub fn base_vertices(&self) -> Vec<Vec<i64>> {
        self.bases.iter().map(|b| b.indicator(self.n)).collect()
    }

    pub fn spanning_vertices(&self) -> Vec<Vec<i64>> {
        self.spanning_sets()
            .into_iter()
            .map(|b| b.indicator(self.n))
            .collect()
    }

    pub fn loop_free_spanning_vertices(&self) -> Vec<Vec<i64>> {
        self.loop_free_spanning_sets()
            .into_iter()
            .map(|b| b.indicator(self.n))
            .collect()
    }
}

// Picks a_1 < a_2 < ... with a_k <= b_k.
fn descend(targets: &[usize], k: usize, floor: usize, acc: Subset, out: &mut Vec<Subset>) {
    if k == targets.len() {
        out.push(acc);
        return;
    }
    for a in floor + 1..=targets[k] {
        descend(targets, k + 1, a, acc.with(a), out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> Subset {
        v.iter().copied().collect()
    }

    #[test]
    fn gale_examples() {
        assert!(gale_leq(set(&[1, 3]), set(&[1, 3])));
        assert!(gale_leq(set(&[1, 2]), set(&[1, 3])));
        assert!(!gale_leq(set(&[2]), set(&[1])));
        assert!(!gale_leq(set(&[1]), set(&[1, 2])));
    }

    #[test]
    fn bases_examples() {
        assert_eq!(
            SchubertMatroid::new(3, set(&[2])).bases(),
            &[set(&[1]), set(&[2])]
        );
        assert_eq!(
            SchubertMatroid::new(4, Subset::EMPTY).bases(),
            &[Subset::EMPTY]
        );
        assert_eq!(
            SchubertMatroid::new(5, set(&[1, 2, 3])).bases(),
            &[set(&[1, 2, 3])]
        );
        assert_eq!(SchubertMatroid::new(4, set(&[2, 4])).bases().len(), 5);
    }

    #[test]
    fn rank_examples() {
        let m = SchubertMatroid::new(3, set(&[2]));
        assert_eq!(m.rank(Subset::EMPTY), 0);
        assert_eq!(m.rank(Subset::prefix(3)), 1);
        assert_eq!(m.rank(set(&[3])), 0);
    }

    #[test]
    fn spanning_examples() {
        assert_eq!(
            SchubertMatroid::new(3, Subset::EMPTY).spanning_sets().len(),
            8
        );
        assert_eq!(
            SchubertMatroid::new(2, set(&[2])).spanning_sets(),
            vec![set(&[1]), set(&[1, 2]), set(&[2])]
        );
        assert_eq!(
            SchubertMatroid::new(4, Subset::prefix(4)).spanning_sets(),
            vec![Subset::prefix(4)]
        );
    }

    #[test]
    fn loops_and_loop_free_spanning_sets() {
        let m = SchubertMatroid::new(4, set(&[1, 3]));
        assert_eq!(m.loops(), set(&[4]));
        assert_eq!(
            m.loop_free_spanning_sets(),
            vec![set(&[1, 2]), set(&[1, 2, 3]), set(&[1, 3])]
        );
        let empty = SchubertMatroid::new(3, Subset::EMPTY);
        assert_eq!(empty.loops(), Subset::prefix(3));
        assert_eq!(empty.loop_free_spanning_sets(), vec![Subset::EMPTY]);
        // loops are exactly the rows below the last element of S
        for m in every_matroid(5) {
            let last = m.defining_set().last().unwrap_or(0);
            let expected: Subset = (last + 1..=m.n()).collect();
            assert_eq!(m.loops(), expected);
        }
    }

    fn every_matroid(max_n: usize) -> impl Iterator<Item = SchubertMatroid> {
        (1..=max_n).flat_map(|n| Subset::all(n).map(move |s| SchubertMatroid::new(n, s)))
    }

    #[test]
    fn descent_matches_filter() {
        for m in every_matroid(6) {
            assert_eq!(
                m.bases(),
                m.bases_by_filter().as_slice(),
                "{:?}",
                m.defining_set()
            );
        }
    }

    #[test]
    fn bases_form_gale_down_set() {
        for m in every_matroid(5) {
            let k = m.rank_of_matroid();
            for b in m.bases() {
                assert_eq!(b.len(), k);
                for t in Subset::all_of_size(m.n(), k) {
                    if gale_leq(t, *b) {
                        assert!(m.bases().contains(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn rank_is_monotone_and_submodular() {
        for m in every_matroid(5) {
            let n = m.n();
            for a in Subset::all(n) {
                for b in Subset::all(n) {
                    if a.is_subset_of(b) {
                        assert!(m.rank(a) <= m.rank(b));
                    }
                    assert!(
                        m.rank(a) + m.rank(b) >= m.rank(a.union(b)) + m.rank(a.intersection(b))
                    );
                }
            }
        }
    }

    #[test]
    fn spanning_sets_are_an_up_set() {
        for m in every_matroid(5) {
            let spanning = m.spanning_sets();
            for a in &spanning {
                for i in 1..=m.n() {
                    assert!(spanning.contains(&a.with(i)));
                }
            }
        }
    }

    #[test]
    fn spanning_iff_complement_independent_in_dual() {
        for m in every_matroid(5) {
            let n = m.n();
            let dual = m.dual_bases();
            for a in Subset::all(n) {
                let comp = a.complement(n);
                let independent_in_dual = dual.iter().any(|b| comp.is_subset_of(*b));
                assert_eq!(m.is_spanning(a), independent_in_dual);
            }
        }
    }
}
