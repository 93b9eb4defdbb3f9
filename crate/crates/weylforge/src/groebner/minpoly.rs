//! Elimination-based analysis of polynomial endomorphisms: minimal
//! polynomials over the image subalgebra, integrality certificates with
//! degree audits, and automorphism inversion.
//!
//! All three walk the same road: adjoin tag variables `t, t_1, ..` for the
//! polynomials of interest, compute a lex basis with the original
//! variables largest, and read the answer off the elimination part of the
//! basis.

use super::engine::{buchberger, GbConfig};
use super::order::TermOrder;
use crate::commpoly::{Poly, PolyEndo};
use crate::mono::Mono;
use crate::{Error, Result};

/// Result of a minimal-polynomial computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinPolyOutcome {
    /// The minimal polynomial, in variables `t, t_1, .., t_m` (index 0 is
    /// `t`), monic in its leading term.
    Polynomial(Poly),
    /// `f` is not algebraic over the field generated by the basis.
    Transcendental,
}

/// Minimal polynomial of `f` over `K(f_1, .., f_m)`, cleared of
/// denominators.
///
/// Builds the ideal `(t - f, t_1 - f_1, .., t_m - f_m)`, computes the lex
/// basis with `x_1 > .. > x_n > t > t_1 > .. > t_m`, and returns the
/// x-free generator involving `t` with the smallest leading term.
pub fn minimal_polynomial(f: &Poly, basis: &[Poly], cfg: &GbConfig) -> Result<MinPolyOutcome> {
    Ok(minpoly_with_dependence(f, basis, cfg)?.0)
}

/// Same as [`minimal_polynomial`], also reporting whether the basis
/// polynomials satisfy a relation of their own (an x-free, t-free
/// generator).
fn minpoly_with_dependence(
    f: &Poly,
    basis: &[Poly],
    cfg: &GbConfig,
) -> Result<(MinPolyOutcome, bool)> {
    let n = f.n();
    let m = basis.len();
    let width = n + 1 + m;
    let ctx = f.ctx();
    let order = TermOrder::lex(width);
    let mut gens = Vec::with_capacity(1 + m);
    gens.push(Poly::var(width, ctx, n).sub(&embed(f, width))?);
    for (i, fi) in basis.iter().enumerate() {
        if fi.n() != n {
            return Err(Error::DimensionMismatch(fi.n(), n));
        }
        gens.push(Poly::var(width, ctx, n + 1 + i).sub(&embed(fi, width))?);
    }
    let gb = buchberger(&gens, &order, cfg)?;

    let x_free = |p: &Poly| {
        p.terms()
            .all(|(mono, _)| mono.0[..n].iter().all(|e| *e == 0))
    };
    let involves_t = |p: &Poly| p.terms().any(|(mono, _)| mono.0[n] > 0);
    let dependent = gb.generators.iter().any(|g| x_free(g) && !involves_t(g));
    let mut best: Option<&Poly> = None;
    for g in gb.generators.iter().filter(|g| x_free(g) && involves_t(g)) {
        best = Some(match best {
            None => g,
            Some(b) => {
                let lg = leading_mono(g, &order);
                let lb = leading_mono(b, &order);
                match order.cmp(&lg, &lb) {
                    std::cmp::Ordering::Less => g,
                    std::cmp::Ordering::Greater => b,
                    std::cmp::Ordering::Equal => {
                        return Err(Error::Internal(
                            "two reduced generators share a leading term".into(),
                        ))
                    }
                }
            }
        });
    }
    match best {
        None => Ok((MinPolyOutcome::Transcendental, dependent)),
        Some(g) => {
            // drop the x block; the generator does not touch it
            let mut out = Poly::zero(1 + m, ctx);
            for (mono, c) in g.terms() {
                out.add_term(Mono(mono.0[n..].to_vec()), c.clone());
            }
            Ok((MinPolyOutcome::Polynomial(out), dependent))
        }
    }
}

fn leading_mono(p: &Poly, order: &TermOrder) -> Mono {
    p.terms()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .map(|(m, _)| m.clone())
        .expect("nonzero polynomial")
}

/// Re-seats a polynomial in `n` variables into the x-block of a wider
/// ring.
fn embed(p: &Poly, width: usize) -> Poly {
    let mut out = Poly::zero(width, p.ctx());
    for (m, c) in p.terms() {
        let mut exps = vec![0u32; width];
        exps[..m.len()].copy_from_slice(&m.0);
        out.add_term(Mono(exps), c.clone());
    }
    out
}

/// One coefficient of a certified monic polynomial: its preimage `b` under
/// the endomorphism and its value `phi(b)` in the image subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertCoefficient {
    /// Which power of `T` this coefficient belongs to.
    pub power: u64,
    /// `b` with `phi(b)` equal to the coefficient, in `K[x_1..x_n]`.
    pub preimage: Poly,
    /// `phi(b)`, the coefficient as an element of the image.
    pub value: Poly,
}

/// The monic annihilator of one variable, with coefficient provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableCertificate {
    /// Monic polynomial in `T, t_1, .., t_n` (index 0 is `T`).
    pub min_poly: Poly,
    pub t_degree: u64,
    /// Nonzero coefficients of `T^j` for `j < t_degree`.
    pub coefficients: Vec<CertCoefficient>,
}

/// Integrality certificate: per-variable monic polynomials over the image
/// subalgebra plus the degree audits they must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityCertificate {
    pub per_variable: Vec<VariableCertificate>,
    pub endo_degree: u64,
    /// Bound on each `t_degree`: `deg^n`.
    pub degree_bound: u64,
    /// Bound on each preimage degree: `2^n deg^(n-1) (n + deg^n)`.
    pub preimage_bound: u64,
}

impl IntegralityCertificate {
    pub fn max_t_degree(&self) -> u64 {
        self.per_variable
            .iter()
            .map(|v| v.t_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn max_preimage_degree(&self) -> u64 {
        self.per_variable
            .iter()
            .flat_map(|v| v.coefficients.iter())
            .map(|c| c.preimage.degree_or_zero())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_audit_ok(&self) -> bool {
        self.max_t_degree() <= self.degree_bound
    }

    pub fn preimage_audit_ok(&self) -> bool {
        self.max_preimage_degree() <= self.preimage_bound
    }
}

/// Outcome of the integrality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegralityOutcome {
    Integral(IntegralityCertificate),
    NotIntegral { reason: String },
}

fn saturating_pow(base: u64, exp: u64) -> u64 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Whether every variable is integral over the image of `phi`, certified
/// by monic minimal polynomials with coefficient preimages.
pub fn integrality_test(phi: &PolyEndo, cfg: &GbConfig) -> Result<IntegralityOutcome> {
    let n = phi.n();
    let ctx = phi.ctx();
    let d = phi.degree();
    let degree_bound = saturating_pow(d, n as u64);
    // 2^n * d^(n-1) * (n + d^n)
    let preimage_bound = saturating_pow(2, n as u64)
        .saturating_mul(saturating_pow(d, n as u64 - 1))
        .saturating_mul(n as u64 + degree_bound);

    let mut per_variable = Vec::with_capacity(n);
    for i in 0..n {
        let xi = Poly::var(n, ctx, i);
        let (outcome, dependent) = minpoly_with_dependence(&xi, phi.img(), cfg)?;
        let mp = match outcome {
            MinPolyOutcome::Transcendental => {
                let reason = if dependent {
                    format!(
                        "images are algebraically dependent; x{} is transcendental over them",
                        i + 1
                    )
                } else {
                    format!("x{} is transcendental over the images", i + 1)
                };
                return Ok(IntegralityOutcome::NotIntegral { reason });
            }
            MinPolyOutcome::Polynomial(p) => p,
        };
        // monic in t: the coefficient of the top t-power is a constant
        let r = mp
            .terms()
            .map(|(m, _)| m.0[0] as u64)
            .max()
            .expect("minimal polynomial is nonzero");
        let top_is_constant = mp
            .terms()
            .filter(|(m, _)| m.0[0] as u64 == r)
            .all(|(m, _)| m.0[1..].iter().all(|e| *e == 0));
        if !top_is_constant {
            return Ok(IntegralityOutcome::NotIntegral {
                reason: format!(
                    "minimal polynomial of x{} is not monic over the image subalgebra",
                    i + 1
                ),
            });
        }
        let top = mp.coeff_of(&t_power_mono(r, n)).cloned();
        if top.map(|c| !c.is_one()).unwrap_or(true) {
            return Err(Error::Internal(
                "reduced generator is not monic in its leading term".into(),
            ));
        }
        // collect the lower coefficients with their preimages
        let mut coefficients = Vec::new();
        for j in 0..r {
            let mut b = Poly::zero(n, ctx);
            for (m, c) in mp.terms() {
                if m.0[0] as u64 == j {
                    b.add_term(Mono(m.0[1..].to_vec()), c.clone());
                }
            }
            if b.is_zero() {
                continue;
            }
            let value = phi.apply(&b)?;
            coefficients.push(CertCoefficient {
                power: j,
                preimage: b,
                value,
            });
        }
        // the certificate must actually annihilate x_i
        let mut check = xi.pow(r)?;
        for c in &coefficients {
            check = check.add(&c.value.mul(&xi.pow(c.power)?)?)?;
        }
        if !check.is_zero() {
            return Err(Error::Internal(format!(
                "certified polynomial does not annihilate x{}",
                i + 1
            )));
        }
        per_variable.push(VariableCertificate {
            min_poly: mp,
            t_degree: r,
            coefficients,
        });
    }
    Ok(IntegralityOutcome::Integral(IntegralityCertificate {
        per_variable,
        endo_degree: d,
        degree_bound,
        preimage_bound,
    }))
}

fn t_power_mono(r: u64, n: usize) -> Mono {
    let mut exps = vec![0u32; 1 + n];
    exps[0] = r as u32;
    Mono(exps)
}

/// Outcome of an inversion attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InversionOutcome {
    Automorphism(PolyEndo),
    NotAutomorphism,
}

/// Inverts a polynomial endomorphism, when it is an automorphism.
///
/// Computes the reduced lex basis of `(t_1 - f_1, .., t_n - f_n)` with the
/// `x` block largest. The map is an automorphism exactly when the basis
/// contains `x_i - g_i(t)` for every `i`; the `g_i` are the inverse
/// images. Both compositions are verified by substitution.
pub fn invert_poly_endo(phi: &PolyEndo, cfg: &GbConfig) -> Result<InversionOutcome> {
    let n = phi.n();
    let ctx = phi.ctx();
    let width = 2 * n;
    let order = TermOrder::lex(width);
    let mut gens = Vec::with_capacity(n);
    for (i, fi) in phi.img().iter().enumerate() {
        gens.push(Poly::var(width, ctx, n + i).sub(&embed(fi, width))?);
    }
    let gb = buchberger(&gens, &order, cfg)?;
    let mut inverse_imgs: Vec<Option<Poly>> = vec![None; n];
    for g in &gb.generators {
        let lm = leading_mono(g, &order);
        for i in 0..n {
            if lm == Mono::var(i, width) {
                // tail lives in the t block: strip x_i and negate
                let mut tail = Poly::zero(n, ctx);
                for (m, c) in g.terms() {
                    if *m == lm {
                        continue;
                    }
                    if m.0[..n].iter().any(|e| *e > 0) {
                        return Err(Error::Internal(
                            "reduced tail of a linear generator touches the x block".into(),
                        ));
                    }
                    tail.add_term(Mono(m.0[n..].to_vec()), ctx.neg(c));
                }
                inverse_imgs[i] = Some(tail);
            }
        }
    }
    let Some(imgs) = inverse_imgs.into_iter().collect::<Option<Vec<Poly>>>() else {
        return Ok(InversionOutcome::NotAutomorphism);
    };
    let psi = PolyEndo::new(imgs)?;
    let id = PolyEndo::identity(n, ctx);
    if phi.compose(&psi)? != id || psi.compose(phi)? != id {
        return Err(Error::Internal(
            "basis produced linear generators but the compositions are not the identity".into(),
        ));
    }
    Ok(InversionOutcome::Automorphism(psi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldCtx;

    fn q() -> FieldCtx {
        FieldCtx::Rationals
    }

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, q(), i)
    }

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    fn tnames(m: usize) -> Vec<String> {
        std::iter::once("t".to_string())
            .chain((1..=m).map(|i| format!("t{i}")))
            .collect()
    }

    #[test]
    fn minpoly_of_x_over_x() {
        let out = minimal_polynomial(&x(1, 0), &[x(1, 0)], &cfg()).unwrap();
        let MinPolyOutcome::Polynomial(p) = out else {
            panic!("expected a polynomial")
        };
        assert_eq!(p.display_with(&tnames(1)).to_string(), "t - t1");
    }

    #[test]
    fn minpoly_of_x_over_x_squared() {
        let out = minimal_polynomial(&x(1, 0), &[x(1, 0).pow(2).unwrap()], &cfg()).unwrap();
        let MinPolyOutcome::Polynomial(p) = out else {
            panic!("expected a polynomial")
        };
        assert_eq!(p.display_with(&tnames(1)).to_string(), "t^2 - t1");
    }

    #[test]
    fn minpoly_elementary_symmetric() {
        // x over (x + y, x y): t^2 - t t1 + t2
        let e1 = x(2, 0).add(&x(2, 1)).unwrap();
        let e2 = x(2, 0).mul(&x(2, 1)).unwrap();
        let out = minimal_polynomial(&x(2, 0), &[e1.clone(), e2.clone()], &cfg()).unwrap();
        let MinPolyOutcome::Polynomial(p) = out else {
            panic!("expected a polynomial")
        };
        assert_eq!(p.display_with(&tnames(2)).to_string(), "t^2 - t*t1 + t2");
        // annihilation: substituting (x, e1, e2) gives zero
        let subst = p.substitute(&[x(2, 0), e1, e2]).unwrap();
        assert!(subst.is_zero());
    }

    #[test]
    fn transcendental_when_basis_is_degenerate() {
        // y over (x, x^2): transcendental, and the basis is dependent
        let out =
            minimal_polynomial(&x(2, 1), &[x(2, 0), x(2, 0).pow(2).unwrap()], &cfg()).unwrap();
        assert_eq!(out, MinPolyOutcome::Transcendental);
    }

    #[test]
    fn integrality_of_identity() {
        let id = PolyEndo::identity(2, q());
        let out = integrality_test(&id, &cfg()).unwrap();
        let IntegralityOutcome::Integral(cert) = out else {
            panic!("expected integral")
        };
        assert_eq!(cert.max_t_degree(), 1);
        assert!(cert.degree_audit_ok() && cert.preimage_audit_ok());
        for (i, v) in cert.per_variable.iter().enumerate() {
            assert_eq!(
                v.min_poly.display_with(&tnames(2)).to_string(),
                format!("t - t{}", i + 1)
            );
        }
    }

    #[test]
    fn integrality_of_squaring_map() {
        // (x^2, y): F1 = T^2 - t1, F2 = T - t2
        let phi = PolyEndo::new(vec![x(2, 0).pow(2).unwrap(), x(2, 1)]).unwrap();
        let out = integrality_test(&phi, &cfg()).unwrap();
        let IntegralityOutcome::Integral(cert) = out else {
            panic!("expected integral")
        };
        assert_eq!(
            cert.per_variable[0]
                .min_poly
                .display_with(&tnames(2))
                .to_string(),
            "t^2 - t1"
        );
        assert_eq!(
            cert.per_variable[1]
                .min_poly
                .display_with(&tnames(2))
                .to_string(),
            "t - t2"
        );
        assert_eq!(cert.degree_bound, 4);
        assert_eq!(cert.preimage_bound, 4 * 2 * (2 + 4));
        assert!(cert.degree_audit_ok() && cert.preimage_audit_ok());
        // the preimage of the T^0 coefficient of F1 is -x1
        let c0 = &cert.per_variable[0].coefficients[0];
        assert_eq!(c0.power, 0);
        assert_eq!(c0.preimage, x(2, 0).neg());
        assert_eq!(c0.value, x(2, 0).pow(2).unwrap().neg());
    }

    #[test]
    fn non_integral_shear() {
        // (x, x y): the minimal polynomial of y is t t1 - t2, not monic
        let phi = PolyEndo::new(vec![x(2, 0), x(2, 0).mul(&x(2, 1)).unwrap()]).unwrap();
        let out = integrality_test(&phi, &cfg()).unwrap();
        assert!(matches!(out, IntegralityOutcome::NotIntegral { .. }));
    }

    #[test]
    fn non_integral_dependent_images() {
        let phi = PolyEndo::new(vec![x(2, 0), x(2, 0).pow(2).unwrap()]).unwrap();
        let out = integrality_test(&phi, &cfg()).unwrap();
        let IntegralityOutcome::NotIntegral { reason } = out else {
            panic!("expected not integral")
        };
        assert!(reason.contains("dependent"));
    }

    #[test]
    fn invert_triangular_map() {
        // (x, y + x^2) inverts to (x, y - x^2)
        let phi = PolyEndo::new(vec![
            x(2, 0),
            x(2, 1).add(&x(2, 0).pow(2).unwrap()).unwrap(),
        ])
        .unwrap();
        let out = invert_poly_endo(&phi, &cfg()).unwrap();
        let InversionOutcome::Automorphism(psi) = out else {
            panic!("expected inverse")
        };
        assert_eq!(psi.img()[0], x(2, 0));
        assert_eq!(psi.img()[1], x(2, 1).sub(&x(2, 0).pow(2).unwrap()).unwrap());
    }

    #[test]
    fn invert_identity() {
        let id = PolyEndo::identity(3, q());
        let out = invert_poly_endo(&id, &cfg()).unwrap();
        assert_eq!(out, InversionOutcome::Automorphism(id));
    }

    #[test]
    fn squaring_is_not_an_automorphism() {
        let phi = PolyEndo::new(vec![x(2, 0).pow(2).unwrap(), x(2, 1)]).unwrap();
        let out = invert_poly_endo(&phi, &cfg()).unwrap();
        assert_eq!(out, InversionOutcome::NotAutomorphism);
    }
}
