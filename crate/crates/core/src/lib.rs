//! Exact arithmetic for periodic Cantor bases, automatic sequences, and the
//! last nonzero digit of factorials.
//!
//! The crate is organised around machine-checkable certificates:
//!
//! - [`digits`] — exact base-`b` digit arithmetic and a fast engine for
//!   `lnzd_b(n!)` that never materialises `n!`, together with a big-integer
//!   brute-force oracle for cross-checking.
//! - [`automata`] — `k`-automata, block decompositions of automatic
//!   sequences, and extraction of verified stammering witnesses.
//! - [`interval`] — rational interval and complex ball arithmetic with
//!   outward rounding; every numeric claim elsewhere is backed by an
//!   enclosure produced here.
//! - [`poly`] — integer polynomials, Sturm sequences, and real root
//!   isolation.
//! - [`algebraic`] — algebraic numbers with certified isolating regions,
//!   arithmetic in Q(δ), infinite places, Pisot/Salem classification, and
//!   the height-like sum `F_S(δ)`.
//! - [`cantor`] — greedy expansions in periodic Cantor bases, evaluation of
//!   digit strings, exact periodicity detection, and the admissibility
//!   digit bound.
//! - [`lnzd_factorial`] — the sequence `lnzd_b(n!)`, non-periodicity
//!   scanning, digit-sum equidistribution statistics, and the constructive
//!   non-periodicity proof witness.
//! - [`transcend`] — the transcendence criterion checker, the full
//!   corollary pipeline for `α_{b,B}`, and its rigorous high-precision
//!   evaluation.
//!
//! All certificate-producing paths use exact rational arithmetic or
//! certified enclosures; nothing is decided by floating point.

pub mod algebraic;
pub mod automata;
pub mod cantor;
pub mod digits;
pub mod interval;
pub mod lnzd_factorial;
pub mod poly;
pub mod transcend;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid base: {0}")]
    InvalidBase(String),
    #[error("valuation of 0 is undefined")]
    UndefinedValuation,
    #[error("invalid prime: {0}")]
    InvalidPrime(u64),
    #[error("oracle scale exceeded: n = {n} is above the guard {guard}")]
    OracleScale { n: String, guard: u64 },
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("root isolation error: {0}")]
    Isolation(String),
    #[error("division by zero (element has no inverse)")]
    DivisionByZero,
    #[error("precision budget exhausted: {0}")]
    Precision(String),
    #[error("boundary undecidable at current precision: {0}")]
    BoundaryUndecidable(String),
    #[error("witness not found at escalation cap: {0}")]
    WitnessNotFound(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("descriptor error: {0}")]
    Descriptor(String),
    #[error("undecidable at precision: {0}")]
    Undecided(String),
}

pub type Result<T> = std::result::Result<T, Error>;
