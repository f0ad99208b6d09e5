//! Exact character values of highest-weight representations at involutions.
//!
//! The classical groups GL(n), Sp(2n), SO(2n), SO(2n+1) carry diagonal
//! involutions of the shape `(1,..,1,-1,..,-1)` (padded appropriately per
//! family); G2 has a unique conjugacy class of order 2. Character values of
//! finite-dimensional highest-weight representations at these elements admit
//! closed forms: they vanish, factor as `2^c * dim(V0) * dim(V1)` over a pair
//! of smaller classical groups, or appear as an alternating sum of dimension
//! products over subsets of the shifted weight `lambda + rho`.
//!
//! The crate is split into two independent evaluation routes:
//!
//! * [`order2`] implements the closed forms (case classification, dimension
//!   factorizations, alternating sums, and the G2 Laurent factorization).
//! * [`oracle`] is a ground-truth evaluator built on Freudenthal weight
//!   multiplicities and Weyl-orbit summation (plus a Jacobi–Trudi Schur
//!   evaluator for GL and an exact Laurent-polynomial route for G2).
//!
//! Everything is exact: half-integers are stored as doubled big integers,
//! torus coordinates and character values are big rationals, and polynomial
//! coefficients are big integers. There is no floating point anywhere.
//!
//! Supporting modules: [`lie`] (groups, weights, rho vectors, parity splits,
//! involution constructors), [`detkit`] (fraction-free determinants and the
//! generalized Laplace expansion with shuffle signs), [`laurent`] (exact
//! univariate Laurent polynomials).

pub mod detkit;
pub mod laurent;
pub mod lie;
pub mod oracle;
pub mod order2;

pub use lie::{EtaSplit, Family, GroupId, HalfInt, HalfIntVector, TorusPoint};
pub use order2::{CaseTag, Order2Result};

/// Errors shared across the crate. Each operation documents which variants
/// it can produce.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// `lambda + rho` has half-integer entries, so the parity split is
    /// undefined (e.g. integer weights of SO(2n+1)).
    #[error("lambda + rho has non-integer entries; eta decomposition undefined")]
    NonIntegerEntries,
    /// The involution parameter `k` is outside the family's legal range.
    #[error("k = {k} out of range for {group}")]
    KOutOfRange { group: String, k: i64 },
    /// The weight is not dominant for the given group.
    #[error("weight {weight} is not dominant for {group}")]
    NonDominant { group: String, weight: String },
    /// An index set reaches outside `[1..n]`.
    #[error("index set {set:?} out of range for n = {n}")]
    IndexOutOfRange { set: Vec<usize>, n: usize },
    /// The requested operation has no implementation for this group family.
    #[error("operation unsupported for {group}")]
    UnsupportedGroup { group: String },
    /// Laurent division left a nonzero remainder where exactness was required.
    #[error("inexact Laurent polynomial division")]
    InexactDivision,
    /// SO(2n+1) with n = 2k: the alternating-sum closed form does not apply;
    /// callers should take the oracle path instead.
    #[error("n = 2k for SO(2n+1); closed form unavailable, use the oracle")]
    NEquals2K,
    /// SO(2n) weights are restricted to lambda_n >= 0 here.
    #[error("negative last entry for an SO(2n) weight")]
    NegativeLastEntry,
    /// The G2 character vanishes for k, l both odd; no spin form exists.
    #[error("k and l both odd: character is 0, no spin form")]
    BothOdd,
    /// Vector lengths disagree with the group rank.
    #[error("expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },
    /// A torus coordinate power cannot be evaluated exactly (half-integer
    /// exponent at a coordinate without an exact rational square root).
    #[error("cannot raise {base} to a half-integer power exactly")]
    NonIntegralPower { base: String },
    /// A torus coordinate is zero.
    #[error("torus coordinates must be nonzero")]
    ZeroCoordinate,
}

pub type Result<T> = std::result::Result<T, Error>;
