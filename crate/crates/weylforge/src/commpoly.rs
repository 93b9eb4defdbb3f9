//! Sparse multivariate commutative polynomials and ring endomorphisms.
//!
//! This is the substrate for the Groebner machinery: polynomials live in
//! `K[x_1..x_n]` with exact coefficients, endomorphisms are given by the
//! images of the variables, and formal partial derivatives feed the
//! Jacobian criterion for unramifiedness.

use std::collections::BTreeMap;
use std::fmt;

use crate::mono::Mono;
use crate::scalars::{FieldCtx, Scalar};
use crate::{Error, Result};

/// A sparse polynomial in `n` commuting variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    ctx: FieldCtx,
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero(n: usize, ctx: FieldCtx) -> Poly {
        Poly {
            n,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, ctx: FieldCtx) -> Poly {
        Self::constant(n, ctx, ctx.one())
    }

    pub fn constant(n: usize, ctx: FieldCtx, c: Scalar) -> Poly {
        let mut p = Self::zero(n, ctx);
        p.add_term(Mono::one(n), c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, ctx: FieldCtx, i: usize) -> Poly {
        assert!(i < n);
        let mut p = Self::zero(n, ctx);
        p.add_term(Mono::var(i, n), ctx.one());
        p
    }

    pub fn monomial(n: usize, ctx: FieldCtx, exps: Mono, c: Scalar) -> Poly {
        assert_eq!(exps.len(), n);
        let mut p = Self::zero(n, ctx);
        p.add_term(exps, c);
        p
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

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().all(Mono::is_one)
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

    pub fn add_term(&mut self, exps: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exps.len(), self.n);
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

    fn check_compat(&self, other: &Poly) -> Result<()> {
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

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = Self::zero(self.n, self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), self.ctx.neg(c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
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

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.n, self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.ctx.mul(ca, cb));
            }
        }
        Ok(out)
    }

    /// Multiplies by `c * m` in place-free style.
    pub fn mul_term(&self, m: &Mono, c: &Scalar) -> Poly {
        let mut out = Self::zero(self.n, self.ctx);
        for (ma, ca) in &self.terms {
            let prod = self.ctx.mul(ca, c);
            if !prod.is_zero() {
                out.terms.insert(ma.mul(m), prod);
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> Result<Poly> {
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

    /// Total degree; zero polynomial reports an error.
    pub fn degree(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(Mono::total_degree)
            .max()
            .ok_or(Error::ZeroDegree)
    }

    /// Total degree with the zero polynomial counted as 0.
    pub fn degree_or_zero(&self) -> u64 {
        self.degree().unwrap_or(0)
    }

    /// Evaluates at `args`: each `x_i` is replaced by `args[i]`.
    pub fn substitute(&self, args: &[Poly]) -> Result<Poly> {
        if args.len() != self.n {
            return Err(Error::DimensionMismatch(args.len(), self.n));
        }
        let m = args.first().map(|p| p.n()).unwrap_or(0);
        let ctx = args.first().map(|p| p.ctx()).unwrap_or(self.ctx);
        if ctx != self.ctx {
            return Err(Error::CtxMismatch(ctx.to_string(), self.ctx.to_string()));
        }
        // cache powers of each argument up to its maximal exponent
        let mut max_exp = vec![0u32; self.n];
        for mono in self.terms.keys() {
            for (i, e) in mono.0.iter().enumerate() {
                max_exp[i] = max_exp[i].max(*e);
            }
        }
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(self.n);
        for (i, arg) in args.iter().enumerate() {
            let mut tower = vec![Poly::one(m, ctx)];
            for e in 1..=max_exp[i] {
                let next = tower[(e - 1) as usize].mul(arg)?;
                tower.push(next);
            }
            powers.push(tower);
        }
        let mut out = Poly::zero(m, ctx);
        for (mono, c) in &self.terms {
            let mut prod = Poly::constant(m, ctx, c.clone());
            for (i, e) in mono.0.iter().enumerate() {
                if *e > 0 {
                    prod = prod.mul(&powers[i][*e as usize])?;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Formal partial derivative with respect to `x_i`. The exponent is
    /// multiplied in the coefficient field, so `d/dx x^p = 0` in char p.
    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.n);
        let mut out = Poly::zero(self.n, self.ctx);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Mono(exps), self.ctx.mul(c, &self.ctx.from_i64(e as i64)));
        }
        out
    }

    /// Coefficient-wise reduction into `F_p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Poly> {
        let ctx = FieldCtx::prime_field(p)?;
        let mut out = Self::zero(self.n, ctx);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.reduce_mod_p(p)?);
        }
        Ok(out)
    }

    /// Divides by the leading coefficient under the canonical graded-lex
    /// order, making the polynomial monic.
    pub fn monic(&self) -> Result<Poly> {
        let (_, lc) = self.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let inv = self.ctx.inv(lc)?;
        Ok(self.scale(&inv))
    }

    /// Renders with caller-supplied variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

/// Helper for printing a polynomial with custom variable names.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::parse::format_terms(f, self.poly.terms.iter().rev(), |m| {
            m.0.iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| (self.names[i].clone(), *e))
                .collect()
        })
    }
}

impl fmt::Display for Poly {
    /// Default rendering with variables `x1..xn`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// A polynomial-ring endomorphism given by the images of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyEndo {
    n: usize,
    ctx: FieldCtx,
    img: Vec<Poly>,
}

impl PolyEndo {
    pub fn new(img: Vec<Poly>) -> Result<PolyEndo> {
        let n = img.len();
        if n == 0 {
            return Err(Error::DimensionMismatch(0, 0));
        }
        let ctx = img[0].ctx();
        for p in &img {
            if p.ctx() != ctx {
                return Err(Error::CtxMismatch(p.ctx().to_string(), ctx.to_string()));
            }
            if p.n() != n {
                return Err(Error::DimensionMismatch(p.n(), n));
            }
        }
        Ok(PolyEndo { n, ctx, img })
    }

    pub fn identity(n: usize, ctx: FieldCtx) -> PolyEndo {
        PolyEndo {
            n,
            ctx,
            img: (0..n).map(|i| Poly::var(n, ctx, i)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn img(&self) -> &[Poly] {
        &self.img
    }

    /// Max total degree of the images.
    pub fn degree(&self) -> u64 {
        self.img.iter().map(Poly::degree_or_zero).max().unwrap_or(0)
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        f.substitute(&self.img)
    }

    /// `self . other`.
    pub fn compose(&self, other: &PolyEndo) -> Result<PolyEndo> {
        let img = other
            .img
            .iter()
            .map(|p| self.apply(p))
            .collect::<Result<Vec<_>>>()?;
        PolyEndo::new(img)
    }

    /// The Jacobian matrix `(d f_i / d x_j)`.
    pub fn jacobian(&self) -> Vec<Vec<Poly>> {
        self.img
            .iter()
            .map(|f| (0..self.n).map(|j| f.partial(j)).collect())
            .collect()
    }

    /// Determinant of the Jacobian matrix, expanded by minors over column
    /// subsets.
    pub fn jacobian_det(&self) -> Poly {
        let jac = self.jacobian();
        det(&jac, self.n, self.ctx).expect("square matrix of compatible polynomials")
    }

    /// True iff the Jacobian determinant is a nonzero constant.
    pub fn is_etale_candidate(&self) -> bool {
        self.jacobian_det().is_unit()
    }

    pub fn reduce_mod_p(&self, p: u64) -> Result<PolyEndo> {
        let img = self
            .img
            .iter()
            .map(|f| f.reduce_mod_p(p))
            .collect::<Result<Vec<_>>>()?;
        PolyEndo::new(img)
    }
}

/// Determinant by expansion along the first remaining row, memoized on the
/// set of remaining columns.
fn det(m: &[Vec<Poly>], n: usize, ctx: FieldCtx) -> Result<Poly> {
    assert!(n <= 64, "determinant expansion uses a u64 column mask");
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut memo: BTreeMap<u64, Poly> = BTreeMap::new();
    memo.insert(0, Poly::one(m[0][0].n(), ctx));
    det_rec(m, n, full, ctx, &mut memo)
}

fn det_rec(
    m: &[Vec<Poly>],
    n: usize,
    cols: u64,
    ctx: FieldCtx,
    memo: &mut BTreeMap<u64, Poly>,
) -> Result<Poly> {
    if let Some(p) = memo.get(&cols) {
        return Ok(p.clone());
    }
    let row = n - cols.count_ones() as usize;
    let mut acc = Poly::zero(m[0][0].n(), ctx);
    let mut sign_positive = true;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let minor = det_rec(m, n, cols & !(1 << j), ctx, memo)?;
        let contrib = m[row][j].mul(&minor)?;
        acc = if sign_positive {
            acc.add(&contrib)?
        } else {
            acc.sub(&contrib)?
        };
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldCtx {
        FieldCtx::Rationals
    }

    fn x(n: usize, i: usize) -> Poly {
        Poly::var(n, q(), i)
    }

    #[test]
    fn arithmetic() {
        // (x+1)(x-1) = x^2 - 1
        let one = Poly::one(1, q());
        let prod = x(1, 0)
            .add(&one)
            .unwrap()
            .mul(&x(1, 0).sub(&one).unwrap())
            .unwrap();
        assert_eq!(prod, x(1, 0).pow(2).unwrap().sub(&one).unwrap());
        // f + 0 = f
        let f = x(2, 0).mul(&x(2, 1)).unwrap();
        assert_eq!(f.add(&Poly::zero(2, q())).unwrap(), f);
    }

    #[test]
    fn substitution() {
        // x1^2 at [x1 + x2] expands to x1^2 + 2 x1 x2 + x2^2
        let f = x(1, 0).pow(2).unwrap();
        let arg = x(2, 0).add(&x(2, 1)).unwrap();
        let out = f.substitute(&[arg]).unwrap();
        assert_eq!(out.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn jacobians() {
        // (x + y^2, y) has unit Jacobian
        let f1 = x(2, 0).add(&x(2, 1).pow(2).unwrap()).unwrap();
        let phi = PolyEndo::new(vec![f1, x(2, 1)]).unwrap();
        assert!(phi.jacobian_det().is_one());
        assert!(phi.is_etale_candidate());
        assert_eq!(phi.degree(), 2);
        // (x^2, y) has Jacobian 2x
        let psi = PolyEndo::new(vec![x(2, 0).pow(2).unwrap(), x(2, 1)]).unwrap();
        assert_eq!(psi.jacobian_det().to_string(), "2*x1");
        assert!(!psi.is_etale_candidate());
        // over F_2, (x + x^2, y) has Jacobian 1 + 2x = 1
        let f2 = FieldCtx::prime_field(2).unwrap();
        let u = Poly::var(2, f2, 0);
        let tau = PolyEndo::new(vec![
            u.add(&u.pow(2).unwrap()).unwrap(),
            Poly::var(2, f2, 1),
        ])
        .unwrap();
        assert!(tau.jacobian_det().is_one());
    }

    #[test]
    fn char_p_derivative_vanishes() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let cube = Poly::var(1, f3, 0).pow(3).unwrap();
        assert!(cube.partial(0).is_zero());
    }

    #[test]
    fn endo_reduction() {
        use num_bigint::BigInt;
        let half = q().from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        let f1 = x(2, 0).add(&x(2, 1).pow(2).unwrap().scale(&half)).unwrap();
        let phi = PolyEndo::new(vec![f1, x(2, 1)]).unwrap();
        let red = phi.reduce_mod_p(5).unwrap();
        assert_eq!(red.img()[0].to_string(), "3*x2^2 + x1");
        assert_eq!(phi.reduce_mod_p(2), Err(Error::BadPrime(2)));
    }

    #[test]
    fn determinant_small() {
        // det [[a, b], [c, d]] = ad - bc on constants
        let c = |v: i64| Poly::constant(1, q(), q().from_i64(v));
        let m = vec![vec![c(1), c(2)], vec![c(3), c(4)]];
        assert_eq!(det(&m, 2, q()).unwrap(), c(-2));
        let m3 = vec![
            vec![c(2), c(0), c(1)],
            vec![c(0), c(3), c(0)],
            vec![c(1), c(0), c(2)],
        ];
        assert_eq!(det(&m3, 3, q()).unwrap(), c(9));
    }
}
