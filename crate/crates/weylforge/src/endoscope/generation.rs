//! Certificates that a set generates the Weyl algebra as a one-sided
//! module over the image of an endomorphism.
//!
//! A certificate for generators `g_1 = 1, .., g_m` and endomorphism `phi`
//! consists of preimages `a_ijl`, `b_ijl` such that
//!
//! ```text
//! g_j x_i = phi(a_ij1) g_1 + .. + phi(a_ijm) g_m
//! g_j d_i = phi(b_ij1) g_1 + .. + phi(b_ijm) g_m
//! ```
//!
//! (left modules; the right-module variant multiplies the generators from
//! the other side). The verifier checks the equations exactly; the solver
//! searches for preimages supported in degree `<= cutoff` by exact linear
//! algebra, so "no certificate at this cutoff" is an honest semi-decision
//! verdict, not a proof of non-generation.

use std::collections::BTreeSet;

use super::{monomial_images, std_monomials};
use crate::mono::Mono;
use crate::weyl::{WeylElement, WeylEndo};
use crate::{Error, Result};

/// Environment variable overriding the unknown-count budget.
pub const UNKNOWN_BUDGET_ENV: &str = "WEYLFORGE_UNKNOWN_BUDGET";

const DEFAULT_UNKNOWN_BUDGET: usize = 50_000;

fn unknown_budget() -> usize {
    std::env::var(UNKNOWN_BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_UNKNOWN_BUDGET)
}

/// Which side the image subalgebra acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// An exact witness that the generators span under the module action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationCertificate {
    pub side: Side,
    /// `g_1 = 1, g_2, .., g_m`.
    pub generators: Vec<WeylElement>,
    /// `xcoeffs[i][j][l]` is the preimage `a_ijl`.
    pub xcoeffs: Vec<Vec<Vec<WeylElement>>>,
    /// `dcoeffs[i][j][l]` is the preimage `b_ijl`.
    pub dcoeffs: Vec<Vec<Vec<WeylElement>>>,
    /// Degree bound the preimages were searched under.
    pub cutoff: u64,
}

fn check_shape(cert: &GenerationCertificate, phi: &WeylEndo) -> Result<()> {
    let n = phi.n();
    let m = cert.generators.len();
    if m == 0 || !cert.generators[0].is_one() {
        return Err(Error::MalformedCertificate(
            "generator list must start with 1".into(),
        ));
    }
    for g in &cert.generators {
        if g.n() != n {
            return Err(Error::DimensionMismatch(g.n(), n));
        }
        if g.ctx() != phi.ctx() {
            return Err(Error::CtxMismatch(
                g.ctx().to_string(),
                phi.ctx().to_string(),
            ));
        }
    }
    for block in [&cert.xcoeffs, &cert.dcoeffs] {
        if block.len() != n {
            return Err(Error::MalformedCertificate(format!(
                "coefficient block has {} rows, expected n = {n}",
                block.len()
            )));
        }
        for row in block {
            if row.len() != m {
                return Err(Error::MalformedCertificate(format!(
                    "coefficient row has {} entries, expected m = {m}",
                    row.len()
                )));
            }
            for cell in row {
                if cell.len() != m {
                    return Err(Error::MalformedCertificate(format!(
                        "coefficient cell has {} entries, expected m = {m}",
                        cell.len()
                    )));
                }
                for a in cell {
                    if !a.is_zero() && a.degree()? > cert.cutoff {
                        return Err(Error::MalformedCertificate(format!(
                            "preimage degree {} exceeds the declared cutoff {}",
                            a.degree()?,
                            cert.cutoff
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks the certificate equations exactly. `true` proves that the
/// generators span the algebra as a module over the image of `phi`.
pub fn generation_verify(cert: &GenerationCertificate, phi: &WeylEndo) -> Result<bool> {
    check_shape(cert, phi)?;
    let n = phi.n();
    let ctx = phi.ctx();
    for i in 0..n {
        for (j, g) in cert.generators.iter().enumerate() {
            for (family, coeffs) in [(0usize, &cert.xcoeffs), (1, &cert.dcoeffs)] {
                let gen = if family == 0 {
                    WeylElement::gen_x(n, ctx, i)
                } else {
                    WeylElement::gen_d(n, ctx, i)
                };
                let lhs = match cert.side {
                    Side::Left => g.mul(&gen)?,
                    Side::Right => gen.mul(g)?,
                };
                let mut rhs = WeylElement::zero(n, ctx);
                for (l, gl) in cert.generators.iter().enumerate() {
                    let image = phi.apply(&coeffs[i][j][l])?;
                    let term = match cert.side {
                        Side::Left => image.mul(gl)?,
                        Side::Right => gl.mul(&image)?,
                    };
                    rhs = rhs.add(&term)?;
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Searches for a certificate with preimages of degree `<= cutoff`.
///
/// Each equation is an exact linear system over the coefficient field in
/// the coefficients of the unknown preimages; the system is solved by
/// Gaussian elimination (fraction-free over the rationals) with the first
/// nonzero entry in canonical order as the pivot.
pub fn generation_solve(
    phi: &WeylEndo,
    generators: &[WeylElement],
    cutoff: u64,
    side: Side,
) -> Result<Option<GenerationCertificate>> {
    let n = phi.n();
    let ctx = phi.ctx();
    let m = generators.len();
    if m == 0 || !generators[0].is_one() {
        return Err(Error::MalformedCertificate(
            "generator list must start with 1".into(),
        ));
    }
    let monos = std_monomials(n, cutoff);
    let unknowns = m * monos.len();
    let budget = unknown_budget();
    if unknowns > budget {
        return Err(Error::SizeLimit(format!(
            "{unknowns} unknowns per equation exceed the budget of {budget}"
        )));
    }
    let images = monomial_images(phi, &monos)?;
    // columns indexed by (l, w): phi(w) * g_l for left modules,
    // g_l * phi(w) for right modules
    let mut columns: Vec<WeylElement> = Vec::with_capacity(unknowns);
    for g in generators {
        for img in &images {
            let col = match side {
                Side::Left => img.mul(g)?,
                Side::Right => g.mul(img)?,
            };
            columns.push(col);
        }
    }
    let mut support: BTreeSet<Mono> = BTreeSet::new();
    for col in &columns {
        support.extend(col.terms().map(|(mono, _)| mono.clone()));
    }

    let mut xcoeffs = Vec::with_capacity(n);
    let mut dcoeffs = Vec::with_capacity(n);
    for i in 0..n {
        let mut xrow = Vec::with_capacity(m);
        let mut drow = Vec::with_capacity(m);
        for g in generators {
            for (family, row) in [(0usize, &mut xrow), (1, &mut drow)] {
                let gen = if family == 0 {
                    WeylElement::gen_x(n, ctx, i)
                } else {
                    WeylElement::gen_d(n, ctx, i)
                };
                let target = match side {
                    Side::Left => g.mul(&gen)?,
                    Side::Right => gen.mul(g)?,
                };
                let mut rows_support = support.clone();
                rows_support.extend(target.terms().map(|(mono, _)| mono.clone()));
                let mut rows = Vec::with_capacity(rows_support.len());
                for row_mono in &rows_support {
                    let mut coeffs_row = Vec::with_capacity(unknowns + 1);
                    for col in &columns {
                        coeffs_row.push(
                            col.coeff_of(row_mono)
                                .cloned()
                                .unwrap_or_else(|| ctx.zero()),
                        );
                    }
                    coeffs_row.push(
                        target
                            .coeff_of(row_mono)
                            .cloned()
                            .unwrap_or_else(|| ctx.zero()),
                    );
                    rows.push(coeffs_row);
                }
                let Some(solution) = crate::solve::solve(&ctx, rows) else {
                    return Ok(None);
                };
                let mut cell = Vec::with_capacity(m);
                for l in 0..m {
                    let mut a = WeylElement::zero(n, ctx);
                    for (w, mono) in monos.iter().enumerate() {
                        a.add_term(mono.clone(), solution[l * monos.len() + w].clone());
                    }
                    cell.push(a);
                }
                row.push(cell);
            }
        }
        xcoeffs.push(xrow);
        dcoeffs.push(drow);
    }
    Ok(Some(GenerationCertificate {
        side,
        generators: generators.to_vec(),
        xcoeffs,
        dcoeffs,
        cutoff,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldCtx;

    fn q() -> FieldCtx {
        FieldCtx::Rationals
    }

    fn x(ctx: FieldCtx) -> WeylElement {
        WeylElement::gen_x(1, ctx, 0)
    }

    fn d(ctx: FieldCtx) -> WeylElement {
        WeylElement::gen_d(1, ctx, 0)
    }

    #[test]
    fn identity_certificate() {
        let id = WeylEndo::identity(1, q());
        let gens = vec![WeylElement::one(1, q())];
        let cert = generation_solve(&id, &gens, 1, Side::Left)
            .unwrap()
            .unwrap();
        assert!(generation_verify(&cert, &id).unwrap());
        // the solved preimage of the x equation is x itself
        assert_eq!(cert.xcoeffs[0][0][0], x(q()));
        assert_eq!(cert.dcoeffs[0][0][0], d(q()));
    }

    #[test]
    fn shifted_endo_needs_cutoff_two() {
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let gens = vec![WeylElement::one(1, q())];
        // at cutoff 2 the d equation is solved by b = d - x^2
        let cert = generation_solve(&phi, &gens, 2, Side::Left)
            .unwrap()
            .unwrap();
        assert!(generation_verify(&cert, &phi).unwrap());
        assert_eq!(
            cert.dcoeffs[0][0][0],
            d(q()).sub(&x(q()).pow(2).unwrap()).unwrap()
        );
        // at cutoff 1 there is no certificate
        assert!(generation_solve(&phi, &gens, 1, Side::Left)
            .unwrap()
            .is_none());
    }

    #[test]
    fn wrong_certificate_fails_verification() {
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let cert = GenerationCertificate {
            side: Side::Left,
            generators: vec![WeylElement::one(1, q())],
            xcoeffs: vec![vec![vec![x(q())]]],
            // b = d maps to d + x^2, leaving a residual of -x^2
            dcoeffs: vec![vec![vec![d(q())]]],
            cutoff: 1,
        };
        assert!(!generation_verify(&cert, &phi).unwrap());
    }

    #[test]
    fn malformed_certificates_are_rejected() {
        let id = WeylEndo::identity(1, q());
        let cert = GenerationCertificate {
            side: Side::Left,
            generators: vec![x(q())],
            xcoeffs: vec![vec![vec![x(q())]]],
            dcoeffs: vec![vec![vec![d(q())]]],
            cutoff: 1,
        };
        assert!(matches!(
            generation_verify(&cert, &id),
            Err(Error::MalformedCertificate(_))
        ));
    }

    #[test]
    fn right_module_variant() {
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let gens = vec![WeylElement::one(1, q())];
        let cert = generation_solve(&phi, &gens, 2, Side::Right)
            .unwrap()
            .unwrap();
        assert!(generation_verify(&cert, &phi).unwrap());
    }

    #[test]
    fn monotone_in_cutoff() {
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let gens = vec![WeylElement::one(1, q())];
        for cutoff in 2..=4 {
            let cert = generation_solve(&phi, &gens, cutoff, Side::Left).unwrap();
            assert!(cert.is_some(), "no certificate at cutoff {cutoff}");
            assert!(generation_verify(&cert.unwrap(), &phi).unwrap());
        }
    }
}
