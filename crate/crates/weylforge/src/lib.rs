//! Exact computer algebra for Weyl algebras and polynomial endomorphisms.
//!
//! The crate provides four layers, each usable on its own:
//!
//! * [`scalars`]: exact coefficient arithmetic over the rationals and over
//!   prime fields `F_p`.
//! * [`weyl`]: normal-form arithmetic in the `n`-th Weyl algebra: elements
//!   are sums of standard monomials `x^u d^v`, endomorphisms are given by
//!   generator images and are checked against the defining relations.
//! * [`charp`]: the positive-characteristic structure: the center
//!   `F_p[x_i^p, d_i^p]`, extraction of central elements into commutative
//!   coordinates, restriction of endomorphisms to the center, and expansion
//!   of elements in the `Q^a P^b` basis over the center.
//! * [`commpoly`], [`groebner`], [`endoscope`]: sparse commutative
//!   polynomials, a Buchberger engine with elimination orders, minimal
//!   polynomials, integrality certificates, polynomial-automorphism
//!   inversion, and the per-prime reduction probe that ties everything
//!   together.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals or
//! canonical residues mod `p`; there is no floating point anywhere. All
//! container iteration is over ordered maps, so printed output is
//! deterministic and identical invocations produce byte-identical reports.
//!
//! ```
//! use weylforge::scalars::FieldCtx;
//! use weylforge::parse::{parse_weyl, RingDescriptor};
//!
//! let ring = RingDescriptor::weyl(1, FieldCtx::Rationals);
//! let a = parse_weyl("d1", &ring).unwrap();
//! let b = parse_weyl("x1", &ring).unwrap();
//! // d1 * x1 normalizes to x1*d1 + 1
//! assert_eq!(a.mul(&b).unwrap().to_string(), "x1*d1 + 1");
//! ```

pub mod charp;
pub mod commpoly;
pub mod endofile;
pub mod endoscope;
pub mod groebner;
pub mod mono;
pub mod parse;
pub mod scalars;
pub mod weyl;

pub(crate) mod solve;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different coefficient fields.
    #[error("coefficient context mismatch: {0} vs {1}")]
    CtxMismatch(String, String),
    /// Operands have different numbers of variable pairs.
    #[error("dimension mismatch: n = {0} vs n = {1}")]
    DimensionMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    /// The modulus failed the primality check or is out of range.
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    /// Reduction mod p is undefined because p divides a denominator.
    #[error("prime {0} divides a denominator")]
    BadPrime(u64),
    /// An operation that needs characteristic p was called over the rationals.
    #[error("operation requires a prime-field context")]
    WrongCharacteristic,
    /// The zero element has no degree.
    #[error("the zero element has no degree")]
    ZeroDegree,
    /// A generator tuple violates the Weyl commutation relations.
    #[error("generator images violate the commutation relations")]
    RelationViolation,
    /// Element is not in the center, so center coordinates do not exist.
    #[error("element is not central")]
    NotCentral,
    /// A configured resource budget was exceeded; the verdict is inconclusive.
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    /// A hard size guardrail was hit before starting the computation.
    #[error("problem size exceeds guardrail: {0}")]
    SizeLimit(String),
    /// Exponent growth exceeded the configured total-degree limit.
    #[error("total degree {0} exceeds the degree limit {1}")]
    DegreeLimit(u64, u64),
    /// Syntax error with 1-based line/column position.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    /// The two endomorphisms are not mutually inverse.
    #[error("endomorphisms are not mutually inverse")]
    NotInverse,
    /// A proved degree bound failed, which indicates an engine bug.
    #[error("degree audit failed: {0}")]
    AuditFailure(String),
    /// A generation certificate is structurally invalid.
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    /// An operation that needs at least one nonzero input got none.
    #[error("input contains no nonzero element")]
    EmptyInput,
    /// An identity that must hold by construction failed.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
