//! Ehrhart polynomials by exact Lagrange interpolation of lattice-point counts.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::combinatorics::Diagram;
use crate::matroid::SchubertMatroid;
use crate::polytope::{
    base_polytope_points, dilated_hull_points, dilated_minkowski_points, spanning_polytope_points,
    LatticePointSet, Schubitope,
};
use crate::{Error, Result};

/// A univariate polynomial in `t` with rational coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EhrhartPolynomial {
    coefficients: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        EhrhartPolynomial { coefficients }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficients
            .first()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: u64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    pub fn mul(&self, other: &EhrhartPolynomial) -> EhrhartPolynomial {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return EhrhartPolynomial::new(Vec::new());
        }
        let mut out =
            vec![BigRational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        EhrhartPolynomial::new(out)
    }

    /// The unique polynomial of degree `< samples.len()` through the samples.
    pub fn interpolate(samples: &[(u64, u64)]) -> EhrhartPolynomial {
        let mut total = vec![BigRational::zero(); samples.len()];
        for (k, &(tk, vk)) in samples.iter().enumerate() {
            // basis polynomial ∏_{m≠k} (t - t_m) / (t_k - t_m)
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (m, &(tm, _)) in samples.iter().enumerate() {
                if m == k {
                    continue;
                }
                let tm = BigRational::from_integer(BigInt::from(tm));
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (d, c) in basis.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * &tm;
                }
                basis = next;
                denom *= BigRational::from_integer(BigInt::from(tk)) - tm;
            }
            let scale = BigRational::from_integer(BigInt::from(vk)) / denom;
            for (d, c) in basis.iter().enumerate() {
                total[d] += c * &scale;
            }
        }
        EhrhartPolynomial::new(total)
    }

    /// Coefficients as `"p/q"` strings, constant term first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coefficients
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| match d {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{d}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EhrhartPolynomial({self})")
    }
}

impl Serialize for EhrhartPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

/// Interpolates `counter` at `t = 0..=d` and checks the result against the
/// counter at `t = d + 1` and `t = d + 2`. An empty polytope (`affine_dim =
/// None`) has Ehrhart polynomial 1 by convention.
pub fn ehrhart(
    mut counter: impl FnMut(u64) -> u64,
    affine_dim: Option<usize>,
) -> Result<EhrhartPolynomial> {
    let Some(d) = affine_dim else {
        return Ok(EhrhartPolynomial::one());
    };
    let d = d as u64;
    let samples: Vec<(u64, u64)> = (0..=d).map(|t| (t, counter(t))).collect();
    let poly = EhrhartPolynomial::interpolate(&samples);
    for t in [d + 1, d + 2] {
        let counted = counter(t);
        let interpolated = poly.eval(t);
        if interpolated != BigRational::from_integer(BigInt::from(counted)) {
            return Err(Error::EhrhartMismatch {
                t,
                interpolated: interpolated.to_string(),
                counted,
            });
        }
    }
    Ok(poly)
}

/// `i(S_D, t)` from the inequality description.
pub fn schubitope_ehrhart(d: &Diagram) -> Result<EhrhartPolynomial> {
    let s = Schubitope::new(d);
    let dim = s.points(1).affine_dimension();
    ehrhart(|t| s.points(t).len() as u64, dim)
}

/// `i(P(M), t)` from Minkowski self-sums of the basis indicator vectors.
pub fn base_polytope_ehrhart(m: &SchubertMatroid) -> Result<EhrhartPolynomial> {
    let dim = base_polytope_points(m, 1).affine_dimension();
    ehrhart(|t| base_polytope_points(m, t).len() as u64, dim)
}

/// `i(P_sp(M), t)` from Minkowski self-sums of the spanning-set indicator vectors.
pub fn spanning_polytope_ehrhart(m: &SchubertMatroid) -> Result<EhrhartPolynomial> {
    let dim = spanning_polytope_points(m, 1).affine_dimension();
    ehrhart(|t| spanning_polytope_points(m, t).len() as u64, dim)
}

/// `i(conv(support), t)` by LP-decided scans of each dilation.
pub fn hull_ehrhart(support: &LatticePointSet) -> Result<EhrhartPolynomial> {
    ehrhart(
        |t| dilated_hull_points(support, t).len() as u64,
        support.affine_dimension(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationVerdict {
    pub equal: bool,
    pub lhs: EhrhartPolynomial,
    pub rhs: EhrhartPolynomial,
}

impl FactorizationVerdict {
    pub fn new(lhs: EhrhartPolynomial, rhs: EhrhartPolynomial) -> Self {
        FactorizationVerdict {
            equal: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

/// Compares `i(S_D, t)` with `∏_j i(P(SM_n(D_j)), t)`.
pub fn ehrhart_factorization_check(d: &Diagram) -> Result<FactorizationVerdict> {
    let lhs = schubitope_ehrhart(d)?;
    let mut rhs = EhrhartPolynomial::one();
    for &c in d.columns() {
        rhs = rhs.mul(&base_polytope_ehrhart(&SchubertMatroid::new(d.n(), c))?);
    }
    Ok(FactorizationVerdict::new(lhs, rhs))
}

/// `∏_j i(P_sp(SM_n(D_j)), t)`.
pub fn spanning_product_ehrhart(d: &Diagram) -> Result<EhrhartPolynomial> {
    let mut rhs = EhrhartPolynomial::one();
    for &c in d.columns() {
        rhs = rhs.mul(&spanning_polytope_ehrhart(&SchubertMatroid::new(d.n(), c))?);
    }
    Ok(rhs)
}

/// `∏_j i(P_sp(SM_n(D_j)), t)` with each spanning polytope restricted to
/// loop-free spanning sets.
pub fn loop_free_spanning_product_ehrhart(d: &Diagram) -> Result<EhrhartPolynomial> {
    let mut rhs = EhrhartPolynomial::one();
    for &c in d.columns() {
        let m = SchubertMatroid::new(d.n(), c);
        let vertices = [m.loop_free_spanning_vertices()];
        let dim = dilated_minkowski_points(d.n(), &vertices, 1).affine_dimension();
        rhs = rhs.mul(&ehrhart(
            |t| dilated_minkowski_points(d.n(), &vertices, t).len() as u64,
            dim,
        )?);
    }
    Ok(rhs)
}
