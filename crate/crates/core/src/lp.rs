//! Exact feasibility for `A x = b, x >= 0` by phase-one simplex over the rationals.
//!
//! Pivoting follows Bland's rule (lowest entering index, ties in the ratio test
//! broken by lowest basic index), so the method terminates and repeated runs
//! follow the same pivot sequence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Returns some `x >= 0` with `A x = b`, or `None` if none exists.
///
/// `a` is row-major with every row of equal length.
pub fn nonnegative_solution(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let k = a.first().map_or(0, |r| r.len());
    let width = k + m + 1;

    // Tableau columns: k originals, m artificials, rhs.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), k);
        let flip = rhs.is_negative();
        let mut t = Vec::with_capacity(width);
        for v in row {
            t.push(if flip { -v } else { v.clone() });
        }
        for s in 0..m {
            t.push(if s == r {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        t.push(if flip { -rhs } else { rhs.clone() });
        rows.push(t);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();

    // Reduced costs for minimizing the sum of artificials.
    let mut cost = vec![BigRational::zero(); width];
    for row in &rows {
        for j in 0..k {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..k + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (r, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a pivot row.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut rows, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (r, &var) in basis.iter().enumerate() {
        if var < k {
            x[var] = rows[r][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(rows: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let inv = BigRational::one() / &rows[pr][pc];
    for v in rows[pr].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let pivot_row = rows[pr].clone();
    let eliminate = |target: &mut Vec<BigRational>| {
        let factor = target[pc].clone();
        if factor.is_zero() {
            return;
        }
        for (t, p) in target.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *t -= &factor * p;
            }
        }
    };
    for (r, row) in rows.iter_mut().enumerate() {
        if r != pr {
            eliminate(row);
        }
    }
    let mut c = cost.to_vec();
    eliminate(&mut c);
    cost.clone_from_slice(&c);
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Weights `λ >= 0`, `Σ λ = 1`, with `Σ λ_q q = target`, if any exist.
/// The returned weights are checked exactly before being handed back.
pub fn convex_combination(points: &[&[i64]], target: &[i64]) -> Option<Vec<BigRational>> {
    if points.is_empty() {
        return None;
    }
    let dim = target.len();
    let mut a: Vec<Vec<BigRational>> = (0..dim)
        .map(|c| points.iter().map(|p| rat(p[c])).collect())
        .collect();
    a.push(vec![BigRational::one(); points.len()]);
    let mut b: Vec<BigRational> = target.iter().map(|&v| rat(v)).collect();
    b.push(BigRational::one());

    let lambda = nonnegative_solution(&a, &b)?;
    assert!(
        certifies(points, target, &lambda),
        "simplex returned an invalid certificate"
    );
    Some(lambda)
}

fn certifies(points: &[&[i64]], target: &[i64], lambda: &[BigRational]) -> bool {
    if lambda.iter().any(|l| l.is_negative()) {
        return false;
    }
    if lambda.iter().sum::<BigRational>() != BigRational::one() {
        return false;
    }
    (0..target.len()).all(|c| {
        let s: BigRational = points.iter().zip(lambda).map(|(p, l)| l * rat(p[c])).sum();
        s == rat(target[c])
    })
}
