//! Sparse polynomials in `x_1, ..., x_n` over arbitrary-precision integers,
//! divided differences, and the Schubert, Grothendieck and key families.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{Composition, Permutation};
use crate::{Error, Result};

pub type Exponent = Vec<u32>;

/// Terms keyed by exponent vector; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exponent: Exponent, coeff: BigInt) -> Self {
        let mut p = Polynomial::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    /// `x_i`, 1-based.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length does not match ambient");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exponent: Exponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_ambient(&self, other: &Polynomial) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials over different numbers of variables"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ambient(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ambient(other);
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// `s_i f`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(i - 1, i);
                (e, c.clone())
            })
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Exact quotient by `x_i - x_{i+1}` via synthetic division: the term of
    /// highest `x_i`-degree `c x_i^a m` contributes `c x_i^(a-1) m` to the
    /// quotient and is replaced by `c x_i^(a-1) x_{i+1} m`. Fails if the
    /// terms left without `x_i` do not vanish.
    pub fn divide_by_difference(&self, i: usize) -> Result<Polynomial> {
        if i == 0 || i >= self.nvars {
            return Err(Error::InvalidArgument(format!(
                "index {i} outside 1..{}",
                self.nvars
            )));
        }
        let (xi, xj) = (i - 1, i);
        // bucket by x_i degree so the highest is always at the back
        let mut work: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            work.entry(e[xi])
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(e.clone(), c.clone());
        }
        let mut quotient = Polynomial::zero(self.nvars);
        while let Some((&deg, _)) = work.iter().next_back() {
            if deg == 0 {
                break;
            }
            let layer = work.remove(&deg).expect("present");
            for (e, c) in layer.terms {
                let mut q = e;
                q[xi] -= 1;
                let mut shifted = q.clone();
                shifted[xj] += 1;
                quotient.add_term(q, c.clone());
                work.entry(deg - 1)
                    .or_insert_with(|| Polynomial::zero(self.nvars))
                    .add_term(shifted, c);
            }
        }
        match work.get(&0) {
            Some(rest) if !rest.is_zero() => Err(Error::DivisionRemainder(i)),
            _ => Ok(quotient),
        }
    }

    /// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        self.sub(&self.swap_variables(i))
            .divide_by_difference(i)
            .expect("f - s_i f is always divisible by x_i - x_{i+1}")
    }

    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .sum()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The terms of total degree `deg`.
    pub fn homogeneous_component(&self, deg: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn summary(&self) -> PolynomialSummary {
        let support = self.support();
        let max_degrees = (0..self.nvars)
            .map(|i| support.iter().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let degrees: Vec<u32> = support.iter().map(|e| e.iter().sum()).collect();
        let lowest = degrees.iter().min().copied();
        let top = degrees.iter().max().copied();
        let coefficient_sum: BigInt = self.terms.values().sum();
        let value_at_ones = self.evaluate(&vec![BigInt::one(); self.nvars]);
        PolynomialSummary {
            max_degrees,
            total_degree: top,
            lowest_component: lowest.map(|d| self.homogeneous_component(d)),
            top_component: top.map(|d| self.homogeneous_component(d)),
            coefficient_sum,
            value_at_ones,
            support,
        }
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

/// Support and degree statistics of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSummary {
    pub support: BTreeSet<Exponent>,
    /// `d_i(f)`; all zero for the zero polynomial.
    pub max_degrees: Vec<u32>,
    pub total_degree: Option<u32>,
    pub lowest_component: Option<Polynomial>,
    pub top_component: Option<Polynomial>,
    pub coefficient_sum: BigInt,
    pub value_at_ones: BigInt,
}

#[derive(Serialize)]
struct TermRecord<'a> {
    exponents: &'a [u32],
    coeff: String,
}

impl Serialize for Polynomial {
    /// `[{"exponents": [..], "coeff": "decimal"}, ...]`, lexicographic by exponent.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(e, c)| TermRecord {
            exponents: e,
            coeff: c.to_string(),
        }))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

/// Which ascent (or, for keys, which adjacent increase) a recursion step uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepRule {
    Smallest,
    Largest,
}

impl StepRule {
    fn pick(self, mut candidates: impl DoubleEndedIterator<Item = usize>) -> Option<usize> {
        match self {
            StepRule::Smallest => candidates.next(),
            StepRule::Largest => candidates.next_back(),
        }
    }
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
fn staircase(n: usize) -> Polynomial {
    let e = (0..n).map(|i| (n - 1 - i) as u32).collect();
    Polynomial::monomial(e, BigInt::one())
}

type Memo<K> = Mutex<HashMap<K, Arc<Polynomial>>>;

fn memo<K>() -> Memo<K> {
    Mutex::new(HashMap::new())
}

fn cached<K: Clone + Eq + std::hash::Hash>(
    cache: &Memo<K>,
    key: &K,
    compute: impl FnOnce() -> Polynomial,
) -> Arc<Polynomial> {
    if let Some(p) = cache.lock().expect("poisoned memo").get(key) {
        return Arc::clone(p);
    }
    // computed outside the lock; a racing duplicate yields the same value
    let p = Arc::new(compute());
    Arc::clone(
        cache
            .lock()
            .expect("poisoned memo")
            .entry(key.clone())
            .or_insert(p),
    )
}

fn schubert_memo() -> &'static Memo<Permutation> {
    static CACHE: OnceLock<Memo<Permutation>> = OnceLock::new();
    CACHE.get_or_init(memo)
}

fn grothendieck_memo() -> &'static Memo<Permutation> {
    static CACHE: OnceLock<Memo<Permutation>> = OnceLock::new();
    CACHE.get_or_init(memo)
}

fn key_memo() -> &'static Memo<Composition> {
    static CACHE: OnceLock<Memo<Composition>> = OnceLock::new();
    CACHE.get_or_init(memo)
}

/// `𝔖_w`, memoized, using the smallest ascent at each step.
pub fn schubert(w: &Permutation) -> Arc<Polynomial> {
    cached(schubert_memo(), w, || {
        match StepRule::Smallest.pick(w.ascents().collect::<Vec<_>>().into_iter()) {
            None => staircase(w.len()),
            Some(i) => schubert(&w.swap_positions(i)).divided_difference(i),
        }
    })
}

/// `𝔊_w`, memoized, using the smallest ascent at each step.
pub fn grothendieck(w: &Permutation) -> Arc<Polynomial> {
    cached(grothendieck_memo(), w, || {
        match StepRule::Smallest.pick(w.ascents().collect::<Vec<_>>().into_iter()) {
            None => staircase(w.len()),
            Some(i) => grothendieck_step(&grothendieck(&w.swap_positions(i)), i),
        }
    })
}

/// `κ_α`, memoized, using the smallest `i` with `α_i < α_{i+1}`.
pub fn key(alpha: &Composition) -> Arc<Polynomial> {
    cached(key_memo(), alpha, || {
        match StepRule::Smallest.pick(key_steps(alpha).into_iter()) {
            None => key_base(alpha),
            Some(i) => key_step(&key(&swap_parts(alpha, i)), i),
        }
    })
}

fn grothendieck_step(prev: &Polynomial, i: usize) -> Polynomial {
    let n = prev.nvars();
    let factor = Polynomial::one(n).sub(&Polynomial::variable(n, i + 1));
    factor.mul(prev).divided_difference(i)
}

fn key_step(prev: &Polynomial, i: usize) -> Polynomial {
    Polynomial::variable(prev.nvars(), i)
        .mul(prev)
        .divided_difference(i)
}

fn key_base(alpha: &Composition) -> Polynomial {
    Polynomial::monomial(
        alpha.parts().iter().map(|&p| p as u32).collect(),
        BigInt::one(),
    )
}

fn key_steps(alpha: &Composition) -> Vec<usize> {
    let p = alpha.parts();
    (1..p.len()).filter(|&i| p[i - 1] < p[i]).collect()
}

fn swap_parts(alpha: &Composition, i: usize) -> Composition {
    let mut parts = alpha.parts().to_vec();
    parts.swap(i - 1, i);
    Composition::new(parts)
}

/// Unmemoized `𝔖_w` along the ascents chosen by `rule`.
pub fn schubert_with_rule(w: &Permutation, rule: StepRule) -> Polynomial {
    match rule.pick(w.ascents().collect::<Vec<_>>().into_iter()) {
        None => staircase(w.len()),
        Some(i) => schubert_with_rule(&w.swap_positions(i), rule).divided_difference(i),
    }
}

/// Unmemoized `𝔊_w` along the ascents chosen by `rule`.
pub fn grothendieck_with_rule(w: &Permutation, rule: StepRule) -> Polynomial {
    match rule.pick(w.ascents().collect::<Vec<_>>().into_iter()) {
        None => staircase(w.len()),
        Some(i) => grothendieck_step(&grothendieck_with_rule(&w.swap_positions(i), rule), i),
    }
}

/// Unmemoized `κ_α` along the steps chosen by `rule`.
pub fn key_with_rule(alpha: &Composition, rule: StepRule) -> Polynomial {
    match rule.pick(key_steps(alpha).into_iter()) {
        None => key_base(alpha),
        Some(i) => key_step(&key_with_rule(&swap_parts(alpha, i), rule), i),
    }
}
