//! Structure of the Weyl algebra over a prime field.
//!
//! In characteristic `p` the powers `x_i^p` and `d_i^p` are central, and
//! the center is exactly the polynomial ring they generate. This module
//! provides the two coordinate changes that fact makes possible:
//!
//! * central elements of the Weyl algebra are re-expressed as commutative
//!   polynomials in `X_i = x_i^p`, `Y_i = d_i^p` ([`center_extract`], with
//!   [`CenterElement::inflate`] going back), and
//! * arbitrary elements are expanded over the center in the basis
//!   `Q^a P^b`, `0 <= a, b <= p-1`, where `(Q, P)` is any tuple satisfying
//!   the commutation relations ([`expand_qp_basis`]).
//!
//! Endomorphisms preserve the center, so they restrict to commutative
//! polynomial endomorphisms in the `X, Y` coordinates
//! ([`restrict_center`]); that restriction is what the Groebner-based
//! finiteness and inversion tests consume.
//!
//! ```
//! use weylforge::charp::{center_extract, restrict_center};
//! use weylforge::scalars::FieldCtx;
//! use weylforge::weyl::{WeylElement, WeylEndo};
//!
//! let f5 = FieldCtx::prime_field(5).unwrap();
//! let x = WeylElement::gen_x(1, f5, 0);
//! let d = WeylElement::gen_d(1, f5, 0);
//!
//! // x^5 is central at p = 5; its center coordinate is X1
//! let coords = center_extract(&x.pow(5).unwrap()).unwrap();
//! assert_eq!(coords.poly().to_string(), "x1");
//! assert_eq!(coords.inflate(), x.pow(5).unwrap());
//!
//! // x -> x, d -> d + x^2 restricts to X -> X, Y -> Y + X^2
//! let phi = WeylEndo::new(vec![x.clone()], vec![d.add(&x.pow(2).unwrap()).unwrap()]).unwrap();
//! let center = restrict_center(&phi).unwrap();
//! assert_eq!(center.img()[1].to_string(), "x1^2 + x2");
//! ```

use std::collections::BTreeMap;

use crate::commpoly::{Poly, PolyEndo};
use crate::mono::Mono;
use crate::scalars::{FieldCtx, Scalar};
use crate::weyl::{WeylElement, WeylEndo};
use crate::{Error, Result};

/// Slot guardrail: the `Q^a P^b` basis has `p^(2n)` slots.
pub const MAX_QP_SLOTS: u64 = 1_000_000;

/// A central element in commutative coordinates: a polynomial in
/// `X_1..X_n, Y_1..Y_n` standing for `x_1^p..x_n^p, d_1^p..d_n^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterElement {
    n: usize,
    p: u64,
    poly: Poly,
}

impl CenterElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The underlying polynomial in `2n` variables (`X` block then `Y`).
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn from_poly(n: usize, p: u64, poly: Poly) -> Result<CenterElement> {
        if poly.n() != 2 * n {
            return Err(Error::DimensionMismatch(poly.n(), 2 * n));
        }
        if poly.ctx().characteristic() != p {
            return Err(Error::WrongCharacteristic);
        }
        Ok(CenterElement { n, p, poly })
    }

    /// Substitutes `X_i -> x_i^p`, `Y_i -> d_i^p`: the inverse of
    /// [`center_extract`].
    pub fn inflate(&self) -> WeylElement {
        let mut out = WeylElement::zero(self.n, self.poly.ctx());
        for (m, c) in self.poly.terms() {
            let exps: Vec<u32> = m.0.iter().map(|e| e * self.p as u32).collect();
            out.add_term(Mono(exps), c.clone());
        }
        out
    }
}

/// True iff every exponent of every term is divisible by `p`, which by the
/// structure of the center is equivalent to commuting with all generators.
pub fn center_test(a: &WeylElement) -> Result<bool> {
    let p = match a.ctx() {
        FieldCtx::Rationals => return Err(Error::WrongCharacteristic),
        FieldCtx::PrimeField(p) => p,
    };
    Ok(a.terms()
        .all(|(m, _)| m.0.iter().all(|e| *e as u64 % p == 0)))
}

/// The commutator route to the same predicate: checks that `a` commutes
/// with the images of all generators under `phi`.
pub fn centralizer_test(m: &WeylElement, phi: &WeylEndo) -> Result<bool> {
    for img in phi.ximg().iter().chain(phi.dimg().iter()) {
        if !img.commutator(m)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Divides every exponent by `p`, mapping a central element to its
/// commutative coordinates.
pub fn center_extract(a: &WeylElement) -> Result<CenterElement> {
    if !center_test(a)? {
        return Err(Error::NotCentral);
    }
    let p = a.ctx().characteristic();
    let mut poly = Poly::zero(2 * a.n(), a.ctx());
    for (m, c) in a.terms() {
        let exps: Vec<u32> = m.0.iter().map(|e| e / p as u32).collect();
        poly.add_term(Mono(exps), c.clone());
    }
    Ok(CenterElement { n: a.n(), p, poly })
}

/// Restriction of an endomorphism to the center, as a polynomial
/// endomorphism in the `2n` variables `X_1..X_n, Y_1..Y_n`.
///
/// The images are `center_extract(phi(x_i)^p)` and
/// `center_extract(phi(d_i)^p)`. A non-central p-th power would contradict
/// the centrality of `x_i^p`, so it is reported as an internal error.
pub fn restrict_center(phi: &WeylEndo) -> Result<PolyEndo> {
    let p = match phi.ctx() {
        FieldCtx::Rationals => return Err(Error::WrongCharacteristic),
        FieldCtx::PrimeField(p) => p,
    };
    let mut img = Vec::with_capacity(2 * phi.n());
    for gen in phi.ximg().iter().chain(phi.dimg().iter()) {
        let power = gen.pow(p)?;
        let ce = center_extract(&power).map_err(|e| match e {
            Error::NotCentral => {
                Error::Internal("p-th power of a generator image is not central".into())
            }
            other => other,
        })?;
        img.push(ce.into_poly());
    }
    PolyEndo::new(img)
}

/// Coefficients of an element over the center in the `Q^a P^b` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpExpansion {
    n: usize,
    p: u64,
    /// Slot `(a, b)` stored as one exponent vector of length `2n`
    /// (`a` first); absent slots have coefficient zero.
    coeffs: BTreeMap<Mono, CenterElement>,
}

impl QpExpansion {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Mono, &CenterElement)> {
        self.coeffs.iter()
    }

    pub fn coeff_of(&self, slot: &Mono) -> Option<&CenterElement> {
        self.coeffs.get(slot)
    }

    pub fn num_slots(&self) -> usize {
        self.coeffs.len()
    }

    /// Re-assembles `sum c_ab Q^a P^b`.
    pub fn recombine(&self, phi: &WeylEndo) -> Result<WeylElement> {
        let mut out = WeylElement::zero(self.n, phi.ctx());
        for (slot, c) in &self.coeffs {
            let term = c.inflate().mul(&qp_power(phi, slot)?)?;
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

fn qp_power(phi: &WeylEndo, slot: &Mono) -> Result<WeylElement> {
    let n = phi.n();
    let mut prod = WeylElement::one(n, phi.ctx());
    for (i, e) in slot.0.iter().enumerate() {
        if *e > 0 {
            let gen = if i < n {
                &phi.ximg()[i]
            } else {
                &phi.dimg()[i - n]
            };
            prod = prod.mul(&gen.pow(*e as u64)?)?;
        }
    }
    Ok(prod)
}

/// Expands `a` over the center in the basis `Q^alpha P^beta`, where
/// `Q = phi(x)`, `P = phi(d)`.
///
/// Extraction peels slots in descending graded-lex order. For the slot
/// `(alpha, beta)` the operator
/// `ad(P_1)^a1 .. ad(P_n)^an ad(Q_1)^b1 .. ad(Q_n)^bn`
/// kills every slot that is not componentwise `>=`, and the componentwise
/// larger ones have strictly larger total degree, so they are already
/// peeled; what remains is the coefficient times
/// `prod a_i! * prod (-1)^(b_i) b_i!`, and those factorials are invertible
/// because all exponents are below `p`.
pub fn expand_qp_basis(a: &WeylElement, phi: &WeylEndo) -> Result<QpExpansion> {
    let p = match a.ctx() {
        FieldCtx::Rationals => return Err(Error::WrongCharacteristic),
        FieldCtx::PrimeField(p) => p,
    };
    let n = a.n();
    if a.ctx() != phi.ctx() {
        return Err(Error::CtxMismatch(
            a.ctx().to_string(),
            phi.ctx().to_string(),
        ));
    }
    if n != phi.n() {
        return Err(Error::DimensionMismatch(n, phi.n()));
    }
    let mut slots: u128 = 1;
    for _ in 0..2 * n {
        slots = slots.saturating_mul(p as u128);
    }
    if slots > MAX_QP_SLOTS as u128 {
        return Err(Error::SizeLimit(format!(
            "p^(2n) = {p}^{} exceeds {MAX_QP_SLOTS} basis slots",
            2 * n
        )));
    }
    let ctx = a.ctx();
    let mut residual = a.clone();
    let mut coeffs = BTreeMap::new();
    for slot in slots_desc(n, p as u32) {
        if residual.is_zero() {
            break;
        }
        let (alpha, beta) = slot.0.split_at(n);
        let mut extracted = residual.clone();
        for (i, &ai) in alpha.iter().enumerate() {
            for _ in 0..ai {
                extracted = phi.dimg()[i].commutator(&extracted)?;
            }
        }
        for (i, &bi) in beta.iter().enumerate() {
            for _ in 0..bi {
                extracted = phi.ximg()[i].commutator(&extracted)?;
            }
        }
        if extracted.is_zero() {
            continue;
        }
        let mut denom = 1u64;
        let mut sign_flips = 0u32;
        for &ai in alpha {
            denom = denom * factorial_mod(ai as u64, p) % p;
        }
        for &bi in beta {
            denom = denom * factorial_mod(bi as u64, p) % p;
            sign_flips += bi;
        }
        let mut unit = ctx.inv(&Scalar::Mod(denom))?;
        if sign_flips % 2 == 1 {
            unit = ctx.neg(&unit);
        }
        let coeff = extracted.scale(&unit);
        if !center_test(&coeff)? {
            return Err(Error::Internal(
                "extracted basis coefficient is not central".into(),
            ));
        }
        let ce = center_extract(&coeff)?;
        let peeled = ce.inflate().mul(&qp_power(phi, &slot)?)?;
        residual = residual.sub(&peeled)?;
        coeffs.insert(slot, ce);
    }
    if !residual.is_zero() {
        return Err(Error::Internal(
            "basis expansion left a nonzero residual".into(),
        ));
    }
    Ok(QpExpansion { n, p, coeffs })
}

/// All exponent vectors in `[0, p-1]^(2n)` in descending graded-lex order.
fn slots_desc(n: usize, p: u32) -> Vec<Mono> {
    let mut all = Vec::new();
    let mut cur = vec![0u32; 2 * n];
    loop {
        all.push(Mono(cur.clone()));
        let mut i = 0;
        loop {
            if i == 2 * n {
                all.sort();
                all.reverse();
                return all;
            }
            if cur[i] < p - 1 {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn factorial_mod(k: u64, p: u64) -> u64 {
    let mut f = 1u64;
    for i in 2..=k {
        f = f * (i % p) % p;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldCtx {
        FieldCtx::prime_field(p).unwrap()
    }

    fn x(ctx: FieldCtx) -> WeylElement {
        WeylElement::gen_x(1, ctx, 0)
    }

    fn d(ctx: FieldCtx) -> WeylElement {
        WeylElement::gen_d(1, ctx, 0)
    }

    #[test]
    fn center_membership() {
        let ctx = f(3);
        assert!(center_test(&x(ctx).pow(3).unwrap()).unwrap());
        assert!(center_test(&WeylElement::one(1, ctx)).unwrap());
        assert!(!center_test(&x(ctx).mul(&d(ctx)).unwrap()).unwrap());
        assert_eq!(
            center_test(&WeylElement::one(1, FieldCtx::Rationals)),
            Err(Error::WrongCharacteristic)
        );
    }

    #[test]
    fn extraction_and_inflation() {
        let ctx = f(3);
        // x^3 d^3 + 2 x^3  ->  X1*Y1 + 2*X1
        let a = x(ctx)
            .pow(3)
            .unwrap()
            .mul(&d(ctx).pow(3).unwrap())
            .unwrap()
            .add(&x(ctx).pow(3).unwrap().scale(&Scalar::Mod(2)))
            .unwrap();
        let ce = center_extract(&a).unwrap();
        let names: Vec<String> = vec!["X1".into(), "Y1".into()];
        assert_eq!(ce.poly().display_with(&names).to_string(), "X1*Y1 + 2*X1");
        assert_eq!(ce.inflate(), a);
        // x^6 -> X1^2
        let six = center_extract(&x(ctx).pow(6).unwrap()).unwrap();
        assert_eq!(six.poly().display_with(&names).to_string(), "X1^2");
        // zero element
        let z = center_extract(&WeylElement::zero(1, ctx)).unwrap();
        assert!(z.poly().is_zero());
        // non-central input is rejected
        assert_eq!(center_extract(&x(ctx)).unwrap_err(), Error::NotCentral);
    }

    #[test]
    fn restriction_of_identity() {
        let id = WeylEndo::identity(1, f(5));
        let res = restrict_center(&id).unwrap();
        assert_eq!(res, PolyEndo::identity(2, f(5)));
    }

    #[test]
    fn restriction_of_shift_at_5() {
        // x -> x, d -> d + x^2 restricts to X -> X, Y -> Y + X^2 at p = 5
        let ctx = f(5);
        let phi = WeylEndo::new(
            vec![x(ctx)],
            vec![d(ctx).add(&x(ctx).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let res = restrict_center(&phi).unwrap();
        assert_eq!(res.img()[0], Poly::var(2, ctx, 0));
        let expected = Poly::var(2, ctx, 1)
            .add(&Poly::var(2, ctx, 0).pow(2).unwrap())
            .unwrap();
        assert_eq!(res.img()[1], expected);
    }

    #[test]
    fn restriction_of_shift_at_3_has_constant_term() {
        // (d + x^2)^3 = d^3 + x^6 + 2 in characteristic 3: the correction
        // is the second derivative of x^2
        let ctx = f(3);
        let phi = WeylEndo::new(
            vec![x(ctx)],
            vec![d(ctx).add(&x(ctx).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let res = restrict_center(&phi).unwrap();
        let expected = Poly::var(2, ctx, 1)
            .add(&Poly::var(2, ctx, 0).pow(2).unwrap())
            .unwrap()
            .add(&Poly::constant(2, ctx, Scalar::Mod(2)))
            .unwrap();
        assert_eq!(res.img()[1], expected);
    }

    #[test]
    fn restriction_artin_schreier_at_2() {
        // x -> x + x^2, d -> d restricts to X -> X + X^2, Y -> Y at p = 2
        let ctx = f(2);
        let phi = WeylEndo::new(
            vec![x(ctx).add(&x(ctx).pow(2).unwrap()).unwrap()],
            vec![d(ctx)],
        )
        .unwrap();
        let res = restrict_center(&phi).unwrap();
        let expected = Poly::var(2, ctx, 0)
            .add(&Poly::var(2, ctx, 0).pow(2).unwrap())
            .unwrap();
        assert_eq!(res.img()[0], expected);
        assert_eq!(res.img()[1], Poly::var(2, ctx, 1));
    }

    #[test]
    fn qp_expansion_identity_slots() {
        let ctx = f(2);
        let id = WeylEndo::identity(1, ctx);
        // a = d: the (0, 1) slot holds 1
        let exp = expand_qp_basis(&d(ctx), &id).unwrap();
        assert_eq!(exp.num_slots(), 1);
        let c = exp.coeff_of(&Mono(vec![0, 1])).unwrap();
        assert!(c.poly().is_one());
        // a = x^2 is central: the (0, 0) slot holds X1
        let exp = expand_qp_basis(&x(ctx).pow(2).unwrap(), &id).unwrap();
        assert_eq!(exp.num_slots(), 1);
        let c = exp.coeff_of(&Mono(vec![0, 0])).unwrap();
        assert_eq!(c.poly(), &Poly::var(2, ctx, 0));
        // a = x^3 = X1 * x: the (1, 0) slot holds X1
        let exp = expand_qp_basis(&x(ctx).pow(3).unwrap(), &id).unwrap();
        assert_eq!(exp.num_slots(), 1);
        let c = exp.coeff_of(&Mono(vec![1, 0])).unwrap();
        assert_eq!(c.poly(), &Poly::var(2, ctx, 0));
    }

    #[test]
    fn qp_expansion_recombines() {
        let ctx = f(3);
        let phi = WeylEndo::new(
            vec![x(ctx)],
            vec![d(ctx).add(&x(ctx).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        // an element with several mixed terms
        let a = x(ctx)
            .pow(4)
            .unwrap()
            .mul(&d(ctx).pow(2).unwrap())
            .unwrap()
            .add(&x(ctx).mul(&d(ctx)).unwrap())
            .unwrap()
            .add(&WeylElement::one(1, ctx))
            .unwrap();
        let exp = expand_qp_basis(&a, &phi).unwrap();
        assert_eq!(exp.recombine(&phi).unwrap(), a);
    }

    #[test]
    fn qp_expansion_two_variable_pairs() {
        // peeling crosses variable pairs: n = 2 at p = 2 has 16 slots
        let ctx = f(2);
        let x1 = WeylElement::gen_x(2, ctx, 0);
        let x2 = WeylElement::gen_x(2, ctx, 1);
        let d1 = WeylElement::gen_d(2, ctx, 0);
        let d2 = WeylElement::gen_d(2, ctx, 1);
        let id = WeylEndo::identity(2, ctx);
        let a = x1
            .mul(&d2)
            .unwrap()
            .add(&x2.pow(3).unwrap().mul(&d1).unwrap())
            .unwrap()
            .add(&x1.pow(2).unwrap())
            .unwrap()
            .add(&WeylElement::one(2, ctx))
            .unwrap();
        let exp = expand_qp_basis(&a, &id).unwrap();
        assert_eq!(exp.recombine(&id).unwrap(), a);
        // x2^3 d1 = X2 * (x2 d1) lands in slot a = (0,1), b = (1,0)
        let c = exp.coeff_of(&Mono(vec![0, 1, 1, 0])).unwrap();
        assert_eq!(c.poly(), &Poly::var(4, ctx, 1));
    }

    #[test]
    fn centralizer_examples() {
        let ctx = f(3);
        let id = WeylEndo::identity(1, ctx);
        assert!(centralizer_test(&WeylElement::one(1, ctx), &id).unwrap());
        assert!(centralizer_test(&x(ctx).pow(3).unwrap(), &id).unwrap());
        assert!(!centralizer_test(&x(ctx), &id).unwrap());
    }

    #[test]
    fn slot_guardrail() {
        // p = 101, n = 3 gives 101^6 > 10^6 slots
        let ctx = f(101);
        let a = WeylElement::one(3, ctx);
        let id = WeylEndo::identity(3, ctx);
        assert!(matches!(expand_qp_basis(&a, &id), Err(Error::SizeLimit(_))));
    }
}
