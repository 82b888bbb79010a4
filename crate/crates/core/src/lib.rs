//! Exact computations on Schubitopes and on the Newton polytopes of Schubert,
//! Grothendieck and key polynomials.
//!
//! The crate is organised bottom-up:
//!
//! - [`subset`]: bitmask subsets of `[n]`.
//! - [`combinatorics`]: permutations, compositions, diagrams, movable intervals,
//!   pattern containment and the `θ_D(I)` parenthesis statistic.
//! - [`matroid`]: Schubert matroids, Gale order, bases, rank and spanning sets.
//! - [`poly`]: sparse integer polynomials, divided differences and the three
//!   polynomial families.
//! - [`lp`]: an exact rational phase-one simplex used for hull membership.
//! - [`polytope`]: lattice-point enumeration, vertex and lattice-freeness tests,
//!   generalized-polymatroid certificates and support properties.
//! - [`ehrhart`]: Ehrhart polynomials by exact interpolation, and the
//!   column-product factorization test.
//! - [`verify`]: exhaustive sweeps producing deterministic JSON reports.

pub mod combinatorics;
pub mod ehrhart;
mod error;
pub mod lp;
pub mod matroid;
pub mod poly;
pub mod polytope;
pub mod subset;
pub mod verify;

pub use combinatorics::{Composition, CriterionMode, Diagram, MovableInterval, Permutation};
pub use ehrhart::EhrhartPolynomial;
pub use error::{Error, Result};
pub use matroid::SchubertMatroid;
pub use poly::Polynomial;
pub use polytope::{LatticePointSet, Schubitope};
pub use subset::Subset;
pub use verify::Report;
