//! Normal-form arithmetic in the n-th Weyl algebra.
//!
//! An element is a finite sum `sum a_uv x^u d^v` of standard monomials:
//! every x-power written to the left of every d-power. Standard monomials
//! form a basis, so two elements are equal exactly when their term maps
//! are equal. Multiplication normalizes products of standard monomials
//! with the closed per-variable commutation formula
//!
//! ```text
//! d^b x^c = sum_k  C(b,k) C(c,k) k!  x^(c-k) d^(b-k)
//! ```
//!
//! rather than by iterated rewriting of `d x -> x d + 1`; the two agree,
//! and the rewrite engine survives in the test suite as an oracle.
//!
//! ```
//! use weylforge::scalars::FieldCtx;
//! use weylforge::weyl::WeylElement;
//!
//! let ctx = FieldCtx::Rationals;
//! let x = WeylElement::gen_x(1, ctx, 0);
//! let d = WeylElement::gen_d(1, ctx, 0);
//! // the defining relation [d, x] = 1
//! assert_eq!(d.commutator(&x).unwrap(), WeylElement::one(1, ctx));
//! // d^2 x^2 = x^2 d^2 + 4 x d + 2
//! let p = d.mul(&d).unwrap().mul(&x.mul(&x).unwrap()).unwrap();
//! assert_eq!(p.to_string(), "x1^2*d1^2 + 4*x1*d1 + 2");
//! ```

use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::mono::Mono;
use crate::scalars::{FieldCtx, Scalar};
use crate::{Error, Result};

/// Default cap on the total degree |u| + |v| of any monomial.
pub const DEFAULT_DEGREE_LIMIT: u64 = 10_000;

static DEGREE_LIMIT: AtomicU64 = AtomicU64::new(DEFAULT_DEGREE_LIMIT);

/// Current total-degree guardrail.
pub fn degree_limit() -> u64 {
    DEGREE_LIMIT.load(AtomicOrdering::Relaxed)
}

/// Overrides the total-degree guardrail. Exceeding the limit is a hard
/// error, never silent truncation.
pub fn set_degree_limit(limit: u64) {
    DEGREE_LIMIT.store(limit, AtomicOrdering::Relaxed);
}

/// An element of the n-th Weyl algebra in sparse normal form.
///
/// The term map is keyed by the exponent vector `(u, v)` stored as one
/// `Mono` of length `2n` (x-exponents first). Every stored coefficient is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    ctx: FieldCtx,
    terms: BTreeMap<Mono, Scalar>,
}

impl WeylElement {
    pub fn zero(n: usize, ctx: FieldCtx) -> WeylElement {
        WeylElement {
            n,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, ctx: FieldCtx) -> WeylElement {
        Self::constant(n, ctx, ctx.one())
    }

    pub fn constant(n: usize, ctx: FieldCtx, c: Scalar) -> WeylElement {
        let mut e = Self::zero(n, ctx);
        e.add_term(Mono::one(2 * n), c);
        e
    }

    /// The generator `x_i` (0-based index).
    pub fn gen_x(n: usize, ctx: FieldCtx, i: usize) -> WeylElement {
        assert!(i < n);
        let mut e = Self::zero(n, ctx);
        e.add_term(Mono::var(i, 2 * n), ctx.one());
        e
    }

    /// The generator `d_i` (0-based index).
    pub fn gen_d(n: usize, ctx: FieldCtx, i: usize) -> WeylElement {
        assert!(i < n);
        let mut e = Self::zero(n, ctx);
        e.add_term(Mono::var(n + i, 2 * n), ctx.one());
        e
    }

    /// Builds `c * x^u d^v`.
    pub fn monomial(n: usize, ctx: FieldCtx, exps: Mono, c: Scalar) -> WeylElement {
        assert_eq!(exps.len(), 2 * n);
        let mut e = Self::zero(n, ctx);
        e.add_term(exps, c);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff_of(&self, m: &Mono) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Adds `c * x^u d^v` into the element, keeping the map sparse.
    pub fn add_term(&mut self, exps: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), 2 * self.n);
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = self.ctx.add(e.get(), &c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_compat(&self, other: &WeylElement) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::CtxMismatch(
                self.ctx.to_string(),
                other.ctx.to_string(),
            ));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WeylElement {
        let mut out = Self::zero(self.n, self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.ctx.neg(c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> WeylElement {
        let mut out = Self::zero(self.n, self.ctx);
        if c.is_zero() {
            return out;
        }
        for (m, a) in &self.terms {
            let prod = self.ctx.mul(a, c);
            if !prod.is_zero() {
                out.terms.insert(m.clone(), prod);
            }
        }
        out
    }

    /// Normal-form product via the closed commutation formula.
    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_compat(other)?;
        let n = self.n;
        let limit = degree_limit();
        let mut out = Self::zero(n, self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.total_degree() + mb.total_degree() > limit {
                    return Err(Error::DegreeLimit(
                        ma.total_degree() + mb.total_degree(),
                        limit,
                    ));
                }
                let base = self.ctx.mul(ca, cb);
                mul_monomials(n, &self.ctx, ma, mb, &base, &mut out);
            }
        }
        Ok(out)
    }

    /// `e`-th power by repeated squaring.
    pub fn pow(&self, e: u64) -> Result<WeylElement> {
        let mut result = Self::one(self.n, self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Max of |u| + |v| over the support; the zero element has no degree.
    pub fn degree(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(Mono::total_degree)
            .max()
            .ok_or(Error::ZeroDegree)
    }

    /// Coefficient-wise reduction into `F_p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<WeylElement> {
        let ctx = FieldCtx::prime_field(p)?;
        let mut out = Self::zero(self.n, ctx);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.reduce_mod_p(p)?);
        }
        Ok(out)
    }

    /// Splits a term key into its x- and d-exponent halves.
    pub fn split_exponents<'a>(&self, m: &'a Mono) -> (&'a [u32], &'a [u32]) {
        m.0.split_at(self.n)
    }
}

/// Normalizes `x^a d^b * x^c d^e` into `out`, scaled by `base`.
///
/// Independent variable pairs commute, so the commutation formula applies
/// per variable and the result is the product over all pairs of
/// `sum_k C(b_i,k) C(c_i,k) k! x^(a_i+c_i-k) d^(b_i+e_i-k)`.
fn mul_monomials(
    n: usize,
    ctx: &FieldCtx,
    ma: &Mono,
    mb: &Mono,
    base: &Scalar,
    out: &mut WeylElement,
) {
    let (a, b) = ma.0.split_at(n);
    let (c, e) = mb.0.split_at(n);
    let kmax: Vec<u32> = (0..n).map(|i| b[i].min(c[i])).collect();
    let mut k = vec![0u32; n];
    loop {
        let mut coeff = BigUint::one();
        for i in 0..n {
            if k[i] > 0 {
                coeff *= binomial(b[i] as u64, k[i] as u64)
                    * binomial(c[i] as u64, k[i] as u64)
                    * factorial(k[i] as u64);
            }
        }
        let scalar = ctx.mul(base, &ctx.from_biguint(&coeff));
        if !scalar.is_zero() {
            let mut exps = Vec::with_capacity(2 * n);
            for i in 0..n {
                exps.push(a[i] + c[i] - k[i]);
            }
            for i in 0..n {
                exps.push(b[i] + e[i] - k[i]);
            }
            out.add_term(Mono(exps), scalar);
        }
        // odometer over 0 <= k <= kmax
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if k[i] < kmax[i] {
                k[i] += 1;
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
    }
    num / factorial(k)
}

fn factorial(k: u64) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=k {
        f *= BigUint::from(i);
    }
    f
}

/// True iff `[Q_i, Q_j] = 0`, `[P_i, P_j] = 0`, `[P_i, Q_j] = delta_ij`.
pub fn check_weyl_relations(qs: &[WeylElement], ps: &[WeylElement]) -> Result<bool> {
    if qs.len() != ps.len() {
        return Err(Error::DimensionMismatch(qs.len(), ps.len()));
    }
    let first = qs.first().ok_or(Error::DimensionMismatch(0, 0))?;
    let (n, ctx) = (first.n, first.ctx);
    for e in qs.iter().chain(ps.iter()) {
        first.check_compat(e)?;
    }
    for i in 0..qs.len() {
        for j in 0..qs.len() {
            if i < j {
                if !qs[i].commutator(&qs[j])?.is_zero() {
                    return Ok(false);
                }
                if !ps[i].commutator(&ps[j])?.is_zero() {
                    return Ok(false);
                }
            }
            let pq = ps[i].commutator(&qs[j])?;
            let expected = if i == j {
                WeylElement::one(n, ctx)
            } else {
                WeylElement::zero(n, ctx)
            };
            if pq != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An endomorphism of the Weyl algebra, given by its generator images.
///
/// Construction verifies the commutation relations, so every value of this
/// type is an actual algebra homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylEndo {
    n: usize,
    ctx: FieldCtx,
    ximg: Vec<WeylElement>,
    dimg: Vec<WeylElement>,
}

impl WeylEndo {
    pub fn new(ximg: Vec<WeylElement>, dimg: Vec<WeylElement>) -> Result<WeylEndo> {
        if ximg.is_empty() || ximg.len() != dimg.len() {
            return Err(Error::DimensionMismatch(ximg.len(), dimg.len()));
        }
        let n = ximg.len();
        let ctx = ximg[0].ctx();
        if ximg[0].n() != n {
            return Err(Error::DimensionMismatch(ximg[0].n(), n));
        }
        if !check_weyl_relations(&ximg, &dimg)? {
            return Err(Error::RelationViolation);
        }
        Ok(WeylEndo { n, ctx, ximg, dimg })
    }

    pub fn identity(n: usize, ctx: FieldCtx) -> WeylEndo {
        WeylEndo {
            n,
            ctx,
            ximg: (0..n).map(|i| WeylElement::gen_x(n, ctx, i)).collect(),
            dimg: (0..n).map(|i| WeylElement::gen_d(n, ctx, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn ximg(&self) -> &[WeylElement] {
        &self.ximg
    }

    pub fn dimg(&self) -> &[WeylElement] {
        &self.dimg
    }

    /// Max degree of any generator image.
    pub fn degree(&self) -> u64 {
        self.ximg
            .iter()
            .chain(self.dimg.iter())
            .map(|e| e.degree().expect("generator images are nonzero"))
            .max()
            .unwrap_or(0)
    }

    /// Evaluates the endomorphism: `sum a_uv Q^u P^v` in normal form.
    pub fn apply(&self, a: &WeylElement) -> Result<WeylElement> {
        if a.ctx() != self.ctx {
            return Err(Error::CtxMismatch(
                a.ctx().to_string(),
                self.ctx.to_string(),
            ));
        }
        if a.n() != self.n {
            return Err(Error::DimensionMismatch(a.n(), self.n));
        }
        // power tables for each generator image, up to the exponents used
        let mut max_exp = vec![0u32; 2 * self.n];
        for (m, _) in a.terms() {
            for (i, e) in m.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let images: Vec<&WeylElement> = self.ximg.iter().chain(self.dimg.iter()).collect();
        let mut powers: Vec<Vec<WeylElement>> = Vec::with_capacity(2 * self.n);
        for (i, img) in images.iter().enumerate() {
            let mut tower = vec![WeylElement::one(self.n, self.ctx)];
            for e in 1..=max_exp[i] {
                let next = tower[(e - 1) as usize].mul(img)?;
                tower.push(next);
            }
            powers.push(tower);
        }
        let mut out = WeylElement::zero(self.n, self.ctx);
        for (m, c) in a.terms() {
            let mut prod = WeylElement::constant(self.n, self.ctx, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    prod = prod.mul(&powers[i][*e as usize])?;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// `self . other`: apply `self` to the images of `other`.
    pub fn compose(&self, other: &WeylEndo) -> Result<WeylEndo> {
        let ximg = other
            .ximg
            .iter()
            .map(|e| self.apply(e))
            .collect::<Result<Vec<_>>>()?;
        let dimg = other
            .dimg
            .iter()
            .map(|e| self.apply(e))
            .collect::<Result<Vec<_>>>()?;
        WeylEndo::new(ximg, dimg)
    }

    /// Coefficient-wise reduction into `F_p`; re-validates the relations.
    pub fn reduce_mod_p(&self, p: u64) -> Result<WeylEndo> {
        let ximg = self
            .ximg
            .iter()
            .map(|e| e.reduce_mod_p(p))
            .collect::<Result<Vec<_>>>()?;
        let dimg = self
            .dimg
            .iter()
            .map(|e| e.reduce_mod_p(p))
            .collect::<Result<Vec<_>>>()?;
        // relations over the rationals reduce to relations mod p, so a
        // violation here can only come from an arithmetic bug
        WeylEndo::new(ximg, dimg).map_err(|e| match e {
            Error::RelationViolation => {
                Error::Internal("reduction broke the commutation relations".into())
            }
            other => other,
        })
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::format_terms(f, self.terms.iter().rev(), |m| {
            let (u, v) = m.0.split_at(self.n);
            let mut vars = Vec::new();
            for (i, e) in u.iter().enumerate() {
                if *e > 0 {
                    vars.push((format!("x{}", i + 1), *e));
                }
            }
            for (i, e) in v.iter().enumerate() {
                if *e > 0 {
                    vars.push((format!("d{}", i + 1), *e));
                }
            }
            vars
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ctx() -> FieldCtx {
        FieldCtx::Rationals
    }

    fn x(n: usize) -> WeylElement {
        WeylElement::gen_x(n, ctx(), 0)
    }

    fn d(n: usize) -> WeylElement {
        WeylElement::gen_d(n, ctx(), 0)
    }

    #[test]
    fn defining_relation() {
        // d1 * x1 = x1*d1 + 1
        let prod = d(1).mul(&x(1)).unwrap();
        let expected = x(1)
            .mul(&d(1))
            .unwrap()
            .add(&WeylElement::one(1, ctx()))
            .unwrap();
        assert_eq!(prod, expected);
        assert_eq!(prod.to_string(), "x1*d1 + 1");
    }

    #[test]
    fn commutators() {
        assert_eq!(d(1).commutator(&x(1)).unwrap(), WeylElement::one(1, ctx()));
        let x1 = WeylElement::gen_x(2, ctx(), 0);
        let x2 = WeylElement::gen_x(2, ctx(), 1);
        assert!(x1.commutator(&x2).unwrap().is_zero());
        // [d1, x1^2] = 2 x1
        let xsq = x(1).mul(&x(1)).unwrap();
        assert_eq!(
            d(1).commutator(&xsq).unwrap(),
            x(1).scale(&ctx().from_i64(2))
        );
    }

    #[test]
    fn d2_x2_rational_and_mod_2() {
        // d^2 x^2 = x^2 d^2 + 4 x d + 2
        let lhs = d(1).pow(2).unwrap().mul(&x(1).pow(2).unwrap()).unwrap();
        assert_eq!(lhs.to_string(), "x1^2*d1^2 + 4*x1*d1 + 2");
        // over F_2 both lower terms vanish
        let f2 = FieldCtx::prime_field(2).unwrap();
        let x2 = WeylElement::gen_x(1, f2, 0);
        let d2 = WeylElement::gen_d(1, f2, 0);
        let lhs2 = d2.pow(2).unwrap().mul(&x2.pow(2).unwrap()).unwrap();
        assert_eq!(lhs2.to_string(), "x1^2*d1^2");
    }

    #[test]
    fn degrees() {
        let e = x(1)
            .mul(&d(1))
            .unwrap()
            .add(&WeylElement::one(1, ctx()))
            .unwrap();
        assert_eq!(e.degree().unwrap(), 2);
        assert_eq!(WeylElement::one(1, ctx()).degree().unwrap(), 0);
        assert_eq!(WeylElement::zero(1, ctx()).degree(), Err(Error::ZeroDegree));
        // x1^3 d2^2 with n = 2 has degree 5
        let m = WeylElement::monomial(2, ctx(), Mono(vec![3, 0, 0, 2]), ctx().one());
        assert_eq!(m.degree().unwrap(), 5);
    }

    #[test]
    fn relation_check_examples() {
        let q = vec![x(1)];
        let p = vec![d(1)];
        assert!(check_weyl_relations(&q, &p).unwrap());
        // d1 + x1^2 still pairs with x1
        let shifted = vec![d(1).add(&x(1).pow(2).unwrap()).unwrap()];
        assert!(check_weyl_relations(&q, &shifted).unwrap());
        // but x1^2 does not pair with d1
        let qsq = vec![x(1).pow(2).unwrap()];
        assert!(!check_weyl_relations(&qsq, &p).unwrap());
    }

    #[test]
    fn endo_apply_and_degree() {
        // x -> x, d -> d + x^2
        let phi =
            WeylEndo::new(vec![x(1)], vec![d(1).add(&x(1).pow(2).unwrap()).unwrap()]).unwrap();
        assert_eq!(phi.degree(), 2);
        assert_eq!(
            phi.apply(&d(1)).unwrap(),
            d(1).add(&x(1).pow(2).unwrap()).unwrap()
        );
        // d1 x1 = x1 d1 + 1 maps to x1 d1 + x1^3 + 1
        let a = d(1).mul(&x(1)).unwrap();
        let img = phi.apply(&a).unwrap();
        assert_eq!(img.to_string(), "x1^3 + x1*d1 + 1");
        // identity fixes everything
        let id = WeylEndo::identity(1, ctx());
        assert_eq!(id.apply(&a).unwrap(), a);
        assert_eq!(id.degree(), 1);
    }

    #[test]
    fn endo_compose() {
        let phi =
            WeylEndo::new(vec![x(1)], vec![d(1).add(&x(1).pow(2).unwrap()).unwrap()]).unwrap();
        let psi =
            WeylEndo::new(vec![x(1)], vec![d(1).sub(&x(1).pow(2).unwrap()).unwrap()]).unwrap();
        let comp = phi.compose(&psi).unwrap();
        assert_eq!(comp, WeylEndo::identity(1, ctx()));
        // symplectic swap squared negates both generators
        let swap = WeylEndo::new(vec![d(1).neg()], vec![x(1)]).unwrap();
        let sq = swap.compose(&swap).unwrap();
        assert_eq!(sq.ximg()[0], x(1).neg());
        assert_eq!(sq.dimg()[0], d(1).neg());
    }

    #[test]
    fn endo_reduce_mod_p() {
        // d -> d + (1/2) x^2 reduces at 5 but not at 2
        let half = ctx()
            .from_ratio(&BigInt::from(1), &BigInt::from(2))
            .unwrap();
        let img = d(1).add(&x(1).pow(2).unwrap().scale(&half)).unwrap();
        let phi = WeylEndo::new(vec![x(1)], vec![img]).unwrap();
        let red = phi.reduce_mod_p(5).unwrap();
        assert_eq!(red.dimg()[0].to_string(), "3*x1^2 + d1");
        assert_eq!(phi.reduce_mod_p(2), Err(Error::BadPrime(2)));
    }

    #[test]
    fn degree_limit_is_enforced() {
        let big = x(1).pow(6_000).unwrap();
        assert!(matches!(big.mul(&big), Err(Error::DegreeLimit(12_000, _))));
    }

    #[test]
    fn mixed_context_errors() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        let a = WeylElement::one(1, ctx());
        let b = WeylElement::one(1, f5);
        assert!(matches!(a.add(&b), Err(Error::CtxMismatch(_, _))));
        let c = WeylElement::one(2, ctx());
        assert!(matches!(a.add(&c), Err(Error::DimensionMismatch(1, 2))));
    }
}
