//! Buchberger engine, elimination orders, minimal polynomials,
//! integrality certificates, and polynomial-automorphism inversion.
//!
//! ```
//! use weylforge::commpoly::{Poly, PolyEndo};
//! use weylforge::groebner::{invert_poly_endo, GbConfig, InversionOutcome};
//! use weylforge::scalars::FieldCtx;
//!
//! let q = FieldCtx::Rationals;
//! let x = Poly::var(2, q, 0);
//! let y = Poly::var(2, q, 1);
//! // the triangular automorphism (x, y + x^2)
//! let phi = PolyEndo::new(vec![x.clone(), y.add(&x.pow(2).unwrap()).unwrap()]).unwrap();
//! let InversionOutcome::Automorphism(psi) =
//!     invert_poly_endo(&phi, &GbConfig::default()).unwrap()
//! else {
//!     unreachable!()
//! };
//! assert_eq!(psi.img()[1], y.sub(&x.pow(2).unwrap()).unwrap());
//! ```

mod engine;
mod minpoly;
mod order;

pub use engine::{
    buchberger, degree_bound, gb_degree_audit, normal_form, DegreeAudit, GbConfig, GroebnerBasis,
    PAIR_BUDGET_ENV,
};
pub use minpoly::{
    integrality_test, invert_poly_endo, minimal_polynomial, CertCoefficient,
    IntegralityCertificate, IntegralityOutcome, InversionOutcome, MinPolyOutcome,
    VariableCertificate,
};
pub use order::TermOrder;
