//! Lattice points of Schubitopes, matroid polytopes and Newton polytopes.
//!
//! Two independent routes produce the lattice points of a dilated Schubitope
//! `t·S_D`: the inequality description through `θ_D`, and the `t`-fold
//! Minkowski sum of the column Schubert matroid base polytopes' vertices. Hull
//! membership and vertex tests go through the exact LP in [`crate::lp`].

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::combinatorics::{Composition, Diagram, ThetaTable};
use crate::lp::convex_combination;
use crate::matroid::SchubertMatroid;
use crate::poly::Polynomial;
use crate::subset::Subset;
use crate::{Error, Result};

pub type Point = Vec<i64>;

/// A finite set of integer vectors of one dimension, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePointSet {
    dim: usize,
    points: Vec<Point>,
}

impl LatticePointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Self {
        let mut points: Vec<Point> = points.into_iter().collect();
        for p in &points {
            assert_eq!(p.len(), dim, "point of wrong dimension");
        }
        points.sort();
        points.dedup();
        LatticePointSet { dim, points }
    }

    pub fn origin(dim: usize) -> Self {
        LatticePointSet {
            dim,
            points: vec![vec![0; dim]],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points
            .binary_search_by(|q| q.as_slice().cmp(p))
            .is_ok()
    }

    pub fn scaled(&self, t: i64) -> LatticePointSet {
        LatticePointSet::new(
            self.dim,
            self.points
                .iter()
                .map(|p| p.iter().map(|v| v * t).collect()),
        )
    }

    /// Dimension of the affine hull; `None` for the empty set.
    pub fn affine_dimension(&self) -> Option<usize> {
        let base = self.points.first()?;
        let mut echelon: Vec<Vec<BigRational>> = Vec::new();
        for p in &self.points[1..] {
            if echelon.len() == self.dim {
                break;
            }
            let mut v: Vec<BigRational> = p
                .iter()
                .zip(base)
                .map(|(a, b)| BigRational::from_integer((a - b).into()))
                .collect();
            for row in &echelon {
                let lead = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
                if !v[lead].is_zero() {
                    let f = &v[lead] / &row[lead];
                    for (x, r) in v.iter_mut().zip(row) {
                        *x -= &f * r;
                    }
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                echelon.push(v);
                // keep rows ordered by leading position
                echelon.sort_by_key(|r| r.iter().position(|x| !x.is_zero()));
            }
        }
        Some(echelon.len())
    }

    /// `y(I) = min` and `z(I) = max` of `Σ_{i∈I} x_i` over the set.
    pub fn subset_sum_bounds(&self) -> GpBounds {
        let n = self.dim;
        let size = 1usize << n;
        let mut y = vec![i64::MAX; size];
        let mut z = vec![i64::MIN; size];
        let mut sums = vec![0i64; size];
        for p in &self.points {
            for mask in 1..size {
                let low = mask.trailing_zeros() as usize;
                sums[mask] = sums[mask & (mask - 1)] + p[low];
            }
            for mask in 0..size {
                y[mask] = y[mask].min(sums[mask]);
                z[mask] = z[mask].max(sums[mask]);
            }
        }
        if self.points.is_empty() {
            y.iter_mut().for_each(|v| *v = 0);
            z.iter_mut().for_each(|v| *v = 0);
        }
        GpBounds { n, y, z }
    }
}

impl std::fmt::Debug for LatticePointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(&self.points).finish()
    }
}

impl Serialize for LatticePointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

/// The Schubitope of a diagram with its `θ_D` table frozen.
#[derive(Clone, Debug)]
pub struct Schubitope {
    diagram: Diagram,
    theta: ThetaTable,
}

impl Schubitope {
    pub fn new(diagram: &Diagram) -> Self {
        Schubitope {
            theta: ThetaTable::new(diagram),
            diagram: diagram.clone(),
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn theta(&self) -> &ThetaTable {
        &self.theta
    }

    /// Membership of `p` in `t·S_D`.
    pub fn contains(&self, p: &[i64], t: u64) -> bool {
        let t = t as i64;
        let total: i64 = p.iter().sum();
        p.len() == self.diagram.n()
            && p.iter().all(|&v| v >= 0)
            && total == t * self.diagram.box_count() as i64
            && Subset::all(self.diagram.n())
                .all(|s| s.iter().map(|i| p[i - 1]).sum::<i64>() <= t * self.theta.get(s) as i64)
    }

    /// All `α ∈ Z^n_{>=0}` with `Σα = t·#D` and `Σ_{i∈I} α_i <= t·θ_D(I)` for every `I`.
    pub fn points(&self, t: u64) -> LatticePointSet {
        let n = self.diagram.n();
        let t = t as i64;
        let bound: Vec<i64> = Subset::all(n)
            .map(|s| t * self.theta.get(s) as i64)
            .collect();
        let total = t * self.diagram.box_count() as i64;
        let mut out = Vec::new();
        let mut current = vec![0i64; n];
        let mut sums = vec![0i64; 1 << n];
        enumerate_bounded(n, total, &bound, 0, 0, &mut current, &mut sums, &mut out);
        LatticePointSet::new(n, out)
    }
}

// Coordinates are fixed left to right; after fixing coordinate k every
// constraint whose index set lies in {1..k+1} is checked.
#[allow(clippy::too_many_arguments)]
fn enumerate_bounded(
    n: usize,
    total: i64,
    bound: &[i64],
    k: usize,
    prefix: i64,
    current: &mut Vec<i64>,
    sums: &mut Vec<i64>,
    out: &mut Vec<Point>,
) {
    if k == n {
        if prefix == total {
            out.push(current.clone());
        }
        return;
    }
    let full = (1usize << n) - 1;
    let rest_mask = full & !((1usize << (k + 1)) - 1);
    let hi = bound[1 << k].min(total - prefix);
    for v in 0..=hi {
        let new_prefix = prefix + v;
        // the coordinates after k must absorb the remainder
        if total - new_prefix > bound[rest_mask] {
            continue;
        }
        current[k] = v;
        let lo_mask = 1usize << k;
        let ok = (lo_mask..lo_mask << 1).all(|mask| {
            sums[mask] = sums[mask ^ lo_mask] + v;
            sums[mask] <= bound[mask]
        });
        if ok {
            enumerate_bounded(n, total, bound, k + 1, new_prefix, current, sums, out);
        }
    }
    current[k] = 0;
}

/// Convenience wrapper around [`Schubitope::points`].
pub fn dilated_schubitope_points(d: &Diagram, t: u64) -> LatticePointSet {
    Schubitope::new(d).points(t)
}

/// `A + B`, deduplicated.
pub fn minkowski_sum(a: &HashSet<Point>, b: &HashSet<Point>) -> HashSet<Point> {
    let mut out = HashSet::with_capacity(a.len() * b.len().min(64));
    for p in a {
        for q in b {
            out.insert(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    out
}

/// `Σ_j (V_j + ... + V_j)` with each factor added `t` times, deduplicating after
/// every addition.
pub fn dilated_minkowski_points(dim: usize, factors: &[Vec<Point>], t: u64) -> LatticePointSet {
    let origin: HashSet<Point> = std::iter::once(vec![0; dim]).collect();
    let mut acc = origin.clone();
    for factor in factors {
        let base: HashSet<Point> = factor.iter().cloned().collect();
        let mut layer = origin.clone();
        for _ in 0..t {
            layer = minkowski_sum(&layer, &base);
        }
        acc = minkowski_sum(&acc, &layer);
    }
    LatticePointSet::new(dim, acc)
}

/// Base-polytope vertex sets of the column Schubert matroids `SM_n(D_j)`.
pub fn column_base_factors(d: &Diagram) -> Vec<Vec<Point>> {
    d.columns()
        .iter()
        .map(|&c| SchubertMatroid::new(d.n(), c).base_vertices())
        .collect()
}

/// Spanning-set-polytope vertex sets of the column Schubert matroids.
pub fn column_spanning_factors(d: &Diagram) -> Vec<Vec<Point>> {
    d.columns()
        .iter()
        .map(|&c| SchubertMatroid::new(d.n(), c).spanning_vertices())
        .collect()
}

/// As [`column_spanning_factors`], keeping only spanning sets inside `[max D_j]`.
pub fn column_loop_free_spanning_factors(d: &Diagram) -> Vec<Vec<Point>> {
    d.columns()
        .iter()
        .map(|&c| SchubertMatroid::new(d.n(), c).loop_free_spanning_vertices())
        .collect()
}

/// Lattice points of `t·P_sp(M)`.
pub fn spanning_polytope_points(m: &SchubertMatroid, t: u64) -> LatticePointSet {
    dilated_minkowski_points(m.n(), &[m.spanning_vertices()], t)
}

/// The exponent vectors of `p` as a point set.
pub fn support_points(p: &Polynomial) -> LatticePointSet {
    LatticePointSet::new(
        p.nvars(),
        p.support()
            .into_iter()
            .map(|e| e.into_iter().map(i64::from).collect()),
    )
}

/// Lattice points of `t·P(M)`.
pub fn base_polytope_points(m: &SchubertMatroid, t: u64) -> LatticePointSet {
    dilated_minkowski_points(m.n(), &[m.base_vertices()], t)
}

/// Whether `p ∈ set` is not a convex combination of the other points.
pub fn is_vertex(p: &[i64], set: &LatticePointSet) -> Result<bool> {
    if !set.contains(p) {
        return Err(Error::NotInSet(format!("{p:?}")));
    }
    let others: Vec<&[i64]> = set
        .points()
        .iter()
        .filter(|q| q.as_slice() != p)
        .map(|q| q.as_slice())
        .collect();
    Ok(convex_combination(&others, p).is_none())
}

pub fn vertices(set: &LatticePointSet) -> LatticePointSet {
    LatticePointSet::new(
        set.dim(),
        set.points()
            .iter()
            .filter(|p| is_vertex(p, set).expect("member"))
            .cloned(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeFreeVerdict {
    pub ok: bool,
    /// First lattice point in sorted order that is not a vertex.
    pub witness: Option<Point>,
}

/// `set` must be every lattice point of an integral polytope.
pub fn lattice_free_check(set: &LatticePointSet) -> LatticeFreeVerdict {
    let witness = set
        .points()
        .iter()
        .find(|p| !is_vertex(p, set).expect("member"))
        .cloned();
    LatticeFreeVerdict {
        ok: witness.is_none(),
        witness,
    }
}

/// Lattice points of `conv(support)`: a bounding-box scan where each candidate
/// outside `support` is decided by the LP. Candidates violating a subset-sum
/// bound of `support` are discarded first, since every hull point satisfies them.
pub fn hull_lattice_points(support: &LatticePointSet) -> LatticePointSet {
    let n = support.dim();
    if support.is_empty() {
        return support.clone();
    }
    let bounds = support.subset_sum_bounds();
    let lo: Vec<i64> = (0..n).map(|i| bounds.y(Subset::singleton(i + 1))).collect();
    let hi: Vec<i64> = (0..n).map(|i| bounds.z(Subset::singleton(i + 1))).collect();
    let refs: Vec<&[i64]> = support.points().iter().map(|p| p.as_slice()).collect();
    let mut out = Vec::new();
    for cand in BoxIter::new(lo, hi) {
        let inside = support.contains(&cand)
            || (bounds.admits(&cand) && convex_combination(&refs, &cand).is_some());
        if inside {
            out.push(cand);
        }
    }
    LatticePointSet::new(n, out)
}

/// Lattice points of `t·conv(support)`.
pub fn dilated_hull_points(support: &LatticePointSet, t: u64) -> LatticePointSet {
    if t == 0 {
        return if support.is_empty() {
            support.clone()
        } else {
            LatticePointSet::origin(support.dim())
        };
    }
    hull_lattice_points(&support.scaled(t as i64))
}

/// Integer points of the product of intervals `[lo_i, hi_i]`, lexicographically.
pub struct BoxIter {
    lo: Vec<i64>,
    hi: Vec<i64>,
    next: Option<Point>,
}

impl BoxIter {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        let next = lo.iter().zip(&hi).all(|(a, b)| a <= b).then(|| lo.clone());
        BoxIter { lo, hi, next }
    }
}

impl Iterator for BoxIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < self.hi[i] {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(cur);
            }
            succ[i] = self.lo[i];
        }
        Some(cur)
    }
}

/// Lower and upper subset-sum bounds `(y, z)`, indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpBounds {
    n: usize,
    y: Vec<i64>,
    z: Vec<i64>,
}

impl GpBounds {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn y(&self, s: Subset) -> i64 {
        self.y[s.bits() as usize]
    }

    pub fn z(&self, s: Subset) -> i64 {
        self.z[s.bits() as usize]
    }

    pub fn is_supermodular_y(&self) -> bool {
        pairs(self.n)
            .all(|(a, b)| self.y(a) + self.y(b) <= self.y(a.union(b)) + self.y(a.intersection(b)))
    }

    pub fn is_submodular_z(&self) -> bool {
        pairs(self.n)
            .all(|(a, b)| self.z(a) + self.z(b) >= self.z(a.union(b)) + self.z(a.intersection(b)))
    }

    /// `z(I) - y(J) >= z(I∖J) - y(J∖I)` for all `I, J`.
    pub fn satisfies_cross_inequality(&self) -> bool {
        pairs(self.n).all(|(i, j)| {
            self.z(i) - self.y(j) >= self.z(i.difference(j)) - self.y(j.difference(i))
        })
    }

    /// Whether `x` satisfies `y(I) <= x(I) <= z(I)` for every `I`.
    pub fn admits(&self, x: &[i64]) -> bool {
        let size = 1usize << self.n;
        let mut sums = vec![0i64; size];
        (1..size).all(|mask| {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + x[low];
            self.y[mask] <= sums[mask] && sums[mask] <= self.z[mask]
        })
    }

    /// Integer points of `{x : y(I) <= x(I) <= z(I)}`.
    pub fn region_points(&self) -> LatticePointSet {
        let lo: Vec<i64> = (1..=self.n).map(|i| self.y(Subset::singleton(i))).collect();
        let hi: Vec<i64> = (1..=self.n).map(|i| self.z(Subset::singleton(i))).collect();
        LatticePointSet::new(self.n, BoxIter::new(lo, hi).filter(|p| self.admits(p)))
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (Subset, Subset)> {
    Subset::all(n).flat_map(move |a| Subset::all(n).map(move |b| (a, b)))
}

#[derive(Serialize)]
struct BoundRecord {
    set: Subset,
    y: i64,
    z: i64,
}

impl Serialize for GpBounds {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut sets: Vec<Subset> = Subset::all(self.n).collect();
        sets.sort();
        serializer.collect_seq(sets.into_iter().map(|s| BoundRecord {
            set: s,
            y: self.y(s),
            z: self.z(s),
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpCertificate {
    pub ok: bool,
    pub supermodular: bool,
    pub submodular: bool,
    pub cross_inequality: bool,
    /// The integer points cut out by `(y, z)` are exactly the input set.
    pub region_matches: bool,
    pub bounds: GpBounds,
}

/// A sufficient certificate that `conv(set)` is a generalized polymatroid.
pub fn gp_certificate(set: &LatticePointSet) -> GpCertificate {
    let bounds = set.subset_sum_bounds();
    let supermodular = bounds.is_supermodular_y();
    let submodular = bounds.is_submodular_z();
    let cross_inequality = bounds.satisfies_cross_inequality();
    let region_matches = bounds.region_points() == *set;
    GpCertificate {
        ok: supermodular && submodular && cross_inequality && region_matches,
        supermodular,
        submodular,
        cross_inequality,
        region_matches,
        bounds,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SupportProperties {
    pub interval_closed: bool,
    pub degree_raising: bool,
    pub unique_max: bool,
    pub snp: bool,
}

impl SupportProperties {
    pub fn all(&self) -> bool {
        self.interval_closed && self.degree_raising && self.unique_max && self.snp
    }
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn support_property_checks(support: &LatticePointSet) -> SupportProperties {
    let pts = support.points();
    let interval_closed = pts.iter().all(|a| {
        pts.iter()
            .filter(|b| leq(a, b))
            .all(|b| BoxIter::new(a.clone(), b.clone()).all(|g| support.contains(&g)))
    });
    let degree = |p: &[i64]| p.iter().sum::<i64>();
    let top = pts.iter().map(|p| degree(p)).max().unwrap_or(0);
    let degree_raising = pts.iter().filter(|p| degree(p) < top).all(|p| {
        (0..p.len()).any(|i| {
            let mut q = p.clone();
            q[i] += 1;
            support.contains(&q)
        })
    });
    let maximal = pts
        .iter()
        .filter(|a| !pts.iter().any(|b| b != *a && leq(a, b)))
        .count();
    let snp = hull_lattice_points(support) == *support;
    SupportProperties {
        interval_closed,
        degree_raising,
        unique_max: maximal == 1,
        snp,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyClosures {
    /// Closure of `α` under `t_{i,j}` when `β_i < β_j`.
    pub vertices: LatticePointSet,
    /// Closure under `t_{i,j}` and under `m_{i,j}` when `β_i <= β_j - 2`.
    pub lattice_points: LatticePointSet,
}

pub fn key_closures(alpha: &Composition) -> KeyClosures {
    let start: Point = alpha.parts().iter().map(|&p| p as i64).collect();
    let n = start.len();
    KeyClosures {
        vertices: LatticePointSet::new(n, closure(&start, false)),
        lattice_points: LatticePointSet::new(n, closure(&start, true)),
    }
}

fn closure(start: &Point, with_moves: bool) -> BTreeSet<Point> {
    let n = start.len();
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start.clone());
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            for j in i + 1..n {
                let mut next = Vec::new();
                if b[i] < b[j] {
                    let mut s = b.clone();
                    s.swap(i, j);
                    next.push(s);
                }
                if with_moves && b[i] + 2 <= b[j] {
                    let mut m = b.clone();
                    m[i] += 1;
                    m[j] -= 1;
                    next.push(m);
                }
                for s in next {
                    if seen.insert(s.clone()) {
                        queue.push_back(s);
                    }
                }
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{rothe_diagram, skyline_diagram, Permutation};

    fn set(dim: usize, pts: &[&[i64]]) -> LatticePointSet {
        LatticePointSet::new(dim, pts.iter().map(|p| p.to_vec()))
    }

    fn overlapping_columns() -> Diagram {
        Diagram::parse("1,3;2,3;1", 3).unwrap()
    }

    #[test]
    fn schubitope_examples() {
        for t in 0..3 {
            assert_eq!(
                dilated_schubitope_points(&Diagram::empty(3), t),
                LatticePointSet::origin(3)
            );
        }
        let d = Diagram::parse("2", 2).unwrap();
        assert_eq!(
            dilated_schubitope_points(&d, 1),
            set(2, &[&[0, 1], &[1, 0]])
        );
        let pts = dilated_schubitope_points(&overlapping_columns(), 1);
        assert!(!lattice_free_check(&pts).ok);
        assert_eq!(
            dilated_schubitope_points(&overlapping_columns(), 0),
            LatticePointSet::origin(3)
        );
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let d = overlapping_columns();
        let s = Schubitope::new(&d);
        for t in 0..3u64 {
            let pts = s.points(t);
            let total = (t as i64) * d.box_count() as i64;
            let hi = vec![total; 3];
            for p in BoxIter::new(vec![0; 3], hi) {
                assert_eq!(s.contains(&p, t), pts.contains(&p), "{p:?} t={t}");
            }
        }
    }

    #[test]
    fn minkowski_examples() {
        assert_eq!(
            dilated_minkowski_points(2, &[vec![vec![1, 0]]], 3),
            set(2, &[&[3, 0]])
        );
        let f = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 0]]];
        assert_eq!(
            dilated_minkowski_points(2, &f, 1),
            set(2, &[&[1, 1], &[2, 0]])
        );
    }

    #[test]
    fn both_backends_agree_on_small_diagrams() {
        for d in Diagram::all(3).into_iter().step_by(7) {
            let factors = column_base_factors(&d);
            for t in 0..=3 {
                assert_eq!(
                    dilated_schubitope_points(&d, t),
                    dilated_minkowski_points(3, &factors, t),
                    "{d:?} t={t}"
                );
            }
        }
    }

    #[test]
    fn vertex_examples() {
        let l = set(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]);
        assert!(!is_vertex(&[1, 1], &l).unwrap());
        assert!(is_vertex(&[2, 0], &l).unwrap());
        let single = set(2, &[&[4, 4]]);
        assert!(is_vertex(&[4, 4], &single).unwrap());
        assert!(matches!(is_vertex(&[0, 1], &l), Err(Error::NotInSet(_))));
    }

    // A point of a small set is a non-vertex iff it is a rational convex
    // combination of the others; for these sets a combination with weights in
    // {0, 1/k, ..., 1} for k <= 4 always exists when one exists at all.
    fn brute_force_non_vertex(p: &[i64], l: &LatticePointSet) -> bool {
        let others: Vec<&Point> = l.points().iter().filter(|q| q.as_slice() != p).collect();
        for k in 1..=4i64 {
            let mut stack = vec![(0usize, k, vec![0i64; p.len()])];
            while let Some((idx, left, acc)) = stack.pop() {
                if left == 0 {
                    if acc.iter().zip(p).all(|(a, b)| *a == k * b) {
                        return true;
                    }
                    continue;
                }
                if idx == others.len() {
                    continue;
                }
                for take in 0..=left {
                    let next: Vec<i64> = acc
                        .iter()
                        .zip(others[idx].iter())
                        .map(|(a, q)| a + take * q)
                        .collect();
                    stack.push((idx + 1, left - take, next));
                }
            }
        }
        false
    }

    #[test]
    fn vertex_test_matches_brute_force_on_1423() {
        let w: Permutation = "1423".parse().unwrap();
        let l = dilated_schubitope_points(&rothe_diagram(&w), 1);
        let non_vertices: Vec<&Point> = l
            .points()
            .iter()
            .filter(|p| !is_vertex(p, &l).unwrap())
            .collect();
        assert_eq!(non_vertices.len(), 1);
        for p in l.points() {
            assert_eq!(
                !is_vertex(p, &l).unwrap(),
                brute_force_non_vertex(p, &l),
                "{p:?}"
            );
        }
    }

    #[test]
    fn hull_examples() {
        let seg = set(2, &[&[0, 0], &[1, 1]]);
        assert_eq!(hull_lattice_points(&seg), seg);
        let tri = set(2, &[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(hull_lattice_points(&tri).len(), 6);
        for w in Permutation::all(4) {
            let supp = LatticePointSet::new(
                4,
                crate::poly::schubert(&w)
                    .support()
                    .into_iter()
                    .map(|e| e.into_iter().map(i64::from).collect()),
            );
            assert_eq!(hull_lattice_points(&supp), supp, "{w}");
        }
    }

    #[test]
    fn affine_dimension_examples() {
        assert_eq!(
            LatticePointSet::new(3, Vec::<Point>::new()).affine_dimension(),
            None
        );
        assert_eq!(LatticePointSet::origin(3).affine_dimension(), Some(0));
        assert_eq!(
            set(2, &[&[0, 0], &[2, 0], &[0, 2]]).affine_dimension(),
            Some(2)
        );
        assert_eq!(
            set(3, &[&[0, 0, 1], &[1, 1, 1], &[2, 2, 1]]).affine_dimension(),
            Some(1)
        );
    }

    #[test]
    fn lattice_free_examples() {
        assert!(lattice_free_check(&set(1, &[&[0], &[1]])).ok);
        assert!(lattice_free_check(&LatticePointSet::origin(2)).ok);
        let v = lattice_free_check(&set(1, &[&[0], &[1], &[2]]));
        assert_eq!(v.witness, Some(vec![1]));
    }

    #[test]
    fn spanning_examples() {
        let full = SchubertMatroid::new(3, Subset::prefix(3));
        for t in 0..4 {
            assert_eq!(
                spanning_polytope_points(&full, t),
                set(3, &[&[t as i64; 3]])
            );
        }
        let m = SchubertMatroid::new(2, Subset::singleton(2));
        assert_eq!(
            spanning_polytope_points(&m, 1),
            set(2, &[&[0, 1], &[1, 0], &[1, 1]])
        );
        // pairwise sums of {(1,0),(0,1),(1,1)}
        let mut brute = HashSet::new();
        for a in [[1, 0], [0, 1], [1, 1]] {
            for b in [[1, 0], [0, 1], [1, 1]] {
                brute.insert(vec![a[0] + b[0], a[1] + b[1]]);
            }
        }
        assert_eq!(brute.len(), 6);
        assert_eq!(
            spanning_polytope_points(&m, 2),
            LatticePointSet::new(2, brute)
        );
    }

    #[test]
    fn gp_examples() {
        let single = set(3, &[&[1, 2, 0]]);
        let c = gp_certificate(&single);
        assert!(c.ok);
        assert!(Subset::all(3).all(|s| c.bounds.y(s) == c.bounds.z(s)));
        let diag = set(2, &[&[0, 0], &[1, 1]]);
        let c = gp_certificate(&diag);
        assert!(!c.ok);
        assert!(!c.region_matches);
        assert_eq!(c.bounds.region_points().len(), 4);
        let square = set(2, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]);
        assert!(gp_certificate(&square).ok);
    }

    #[test]
    fn support_property_examples() {
        let one = LatticePointSet::origin(3);
        assert!(support_property_checks(&one).all());
        let seg = set(2, &[&[0, 0], &[1, 1]]);
        let p = support_property_checks(&seg);
        assert!(p.snp);
        assert!(!p.interval_closed);
        let gap = set(2, &[&[0, 0], &[2, 0]]);
        let p = support_property_checks(&gap);
        assert!(!p.snp);
        assert!(!p.interval_closed);
        assert!(!p.degree_raising);
        assert!(p.unique_max);
        let two_max = set(2, &[&[0, 1], &[1, 0]]);
        assert!(!support_property_checks(&two_max).unique_max);
    }

    #[test]
    fn key_closure_examples() {
        let c = key_closures(&"3,1,0".parse().unwrap());
        assert_eq!(c.vertices, set(3, &[&[3, 1, 0]]));
        assert_eq!(c.lattice_points, c.vertices);
        let c = key_closures(&"0,2".parse().unwrap());
        assert_eq!(c.vertices, set(2, &[&[0, 2], &[2, 0]]));
        assert_eq!(c.lattice_points, set(2, &[&[0, 2], &[1, 1], &[2, 0]]));
        let c = key_closures(&"0,1".parse().unwrap());
        assert_eq!(c.vertices, set(2, &[&[0, 1], &[1, 0]]));
        assert_eq!(c.lattice_points, c.vertices);
    }

    #[test]
    fn key_support_matches_skyline_schubitope() {
        for a in Composition::all(3, 2) {
            let supp = LatticePointSet::new(
                3,
                crate::poly::key(&a)
                    .support()
                    .into_iter()
                    .map(|e| e.into_iter().map(i64::from).collect()),
            );
            let d = skyline_diagram(&a).unwrap();
            assert_eq!(dilated_schubitope_points(&d, 1), supp, "{a}");
            assert_eq!(key_closures(&a).lattice_points, supp, "{a}");
        }
    }

    #[test]
    fn box_iter_order() {
        let v: Vec<Point> = BoxIter::new(vec![0, 1], vec![1, 2]).collect();
        assert_eq!(v, vec![vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]);
        assert_eq!(BoxIter::new(vec![1], vec![0]).count(), 0);
        assert_eq!(BoxIter::new(vec![], vec![]).count(), 1);
    }
}
