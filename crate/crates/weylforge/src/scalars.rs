//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! A [`FieldCtx`] names the coefficient field; a [`Scalar`] is a value in it.
//! Rationals are arbitrary-precision and always reduced; prime-field values
//! are canonical residues in `[0, p)`. The modulus is capped below `2^31` so
//! that products of residues fit in 64-bit intermediates.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Largest permitted prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

/// The coefficient field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Rationals,
    PrimeField(u64),
}

impl FieldCtx {
    /// Builds a prime-field context, checking primality by trial division.
    pub fn prime_field(p: u64) -> Result<FieldCtx> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldCtx::PrimeField(p))
    }

    /// 0 for the rationals, p for a prime field.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldCtx::Rationals => 0,
            FieldCtx::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldCtx::Rationals => Scalar::Rat(BigRational::zero()),
            FieldCtx::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldCtx::Rationals => Scalar::Rat(BigRational::one()),
            FieldCtx::PrimeField(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldCtx::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
            FieldCtx::PrimeField(p) => Scalar::Mod(bigint_mod(v, *p)),
        }
    }

    /// Builds `num/den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldCtx::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
            FieldCtx::PrimeField(p) => {
                let d = bigint_mod(den, *p);
                if d == 0 {
                    return Err(Error::BadPrime(*p));
                }
                Ok(Scalar::Mod(mul_mod(
                    bigint_mod(num, *p),
                    inv_mod(d, *p)?,
                    *p,
                )))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldCtx::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldCtx::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldCtx::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldCtx::PrimeField(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldCtx::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldCtx::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(mul_mod(*x, *y, *p))
            }
            _ => panic!("scalar does not belong to this field"),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (FieldCtx::Rationals, Scalar::Rat(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(x.recip()))
                }
            }
            (FieldCtx::PrimeField(p), Scalar::Mod(x)) => Ok(Scalar::Mod(inv_mod(*x, *p)?)),
            _ => panic!("scalar does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Image of an unsigned big integer in this field; used for the
    /// binomial and factorial coefficients of the commutation formula.
    pub fn from_biguint(&self, v: &BigUint) -> Scalar {
        self.from_bigint(&BigInt::from(v.clone()))
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Rationals => write!(f, "char 0"),
            FieldCtx::PrimeField(p) => write!(f, "char {p}"),
        }
    }
}

/// A value in a [`FieldCtx`]: a reduced rational or a canonical residue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Mod(x) => *x == 1,
        }
    }

    /// The rational payload, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(x) => Some(x),
            Scalar::Mod(_) => None,
        }
    }

    /// Ring-homomorphism image in `F_p`; errors when p divides the
    /// denominator.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Scalar> {
        let q = match self {
            Scalar::Rat(q) => q,
            Scalar::Mod(_) => return Err(Error::WrongCharacteristic),
        };
        let den = bigint_mod(q.denom(), p);
        if den == 0 {
            return Err(Error::BadPrime(p));
        }
        let num = bigint_mod(q.numer(), p);
        Ok(Scalar::Mod(mul_mod(num, inv_mod(den, p)?, p)))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{x}"),
            Scalar::Mod(x) => write!(f, "{x}"),
        }
    }
}

/// Deterministic trial-division primality test for moduli below 2^31.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31, so the product fits in u64.
    (a * b) % p
}

/// Extended Euclid; errors on zero.
fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::DivisionByZero);
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus is prime, so gcd must be 1");
    Ok(t0.rem_euclid(p as i64) as u64)
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = v % BigInt::from(p);
    let m = if m.is_negative() {
        m + BigInt::from(p)
    } else {
        m
    };
    u64::try_from(m).expect("residue fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Scalar {
        FieldCtx::Rationals
            .from_ratio(&BigInt::from(n), &BigInt::from(d))
            .unwrap()
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(2147483647)); // 2^31 - 1
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(91)); // 7 * 13
        assert!(FieldCtx::prime_field(4).is_err());
        assert!(FieldCtx::prime_field(1 << 31).is_err());
    }

    #[test]
    fn inverse_rational() {
        let ctx = FieldCtx::Rationals;
        assert_eq!(ctx.inv(&rat(2, 3)).unwrap(), rat(3, 2));
        assert_eq!(ctx.inv(&ctx.one()).unwrap(), ctx.one());
        assert_eq!(ctx.inv(&ctx.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_mod_p() {
        let ctx = FieldCtx::prime_field(7).unwrap();
        // 3 * 5 = 15 = 1 mod 7
        assert_eq!(ctx.inv(&Scalar::Mod(3)).unwrap(), Scalar::Mod(5));
        assert_eq!(ctx.inv(&ctx.one()).unwrap(), ctx.one());
        assert_eq!(ctx.inv(&ctx.zero()), Err(Error::DivisionByZero));
        for a in 1..7u64 {
            let inv = ctx.inv(&Scalar::Mod(a)).unwrap();
            assert!(ctx.mul(&Scalar::Mod(a), &inv).is_one());
        }
    }

    #[test]
    fn reduction_mod_p() {
        // 1/2 -> 3 mod 5 because 2 * 3 = 1 mod 5
        assert_eq!(rat(1, 2).reduce_mod_p(5).unwrap(), Scalar::Mod(3));
        assert_eq!(rat(0, 1).reduce_mod_p(17).unwrap(), Scalar::Mod(0));
        assert_eq!(rat(1, 2).reduce_mod_p(2), Err(Error::BadPrime(2)));
        assert_eq!(rat(-1, 3).reduce_mod_p(5).unwrap(), Scalar::Mod(3));
    }

    #[test]
    fn rationals_stay_reduced() {
        let a = rat(4, 6);
        assert_eq!(a, rat(2, 3));
        let b = FieldCtx::Rationals.add(&rat(1, 6), &rat(1, 3));
        assert_eq!(b, rat(1, 2));
    }

    proptest! {
        #[test]
        fn field_axioms_rational(an in -50i64..50, ad in 1i64..20,
                                 bn in -50i64..50, bd in 1i64..20,
                                 cn in -50i64..50, cd in 1i64..20) {
            let ctx = FieldCtx::Rationals;
            let (a, b, c) = (rat(an, ad), rat(bn, bd), rat(cn, cd));
            prop_assert_eq!(ctx.add(&ctx.add(&a, &b), &c), ctx.add(&a, &ctx.add(&b, &c)));
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(
                ctx.mul(&a, &ctx.add(&b, &c)),
                ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
            );
            if !a.is_zero() {
                prop_assert!(ctx.mul(&a, &ctx.inv(&a).unwrap()).is_one());
            }
        }

        #[test]
        fn field_axioms_mod_p(a in 0u64..13, b in 0u64..13, c in 0u64..13) {
            let ctx = FieldCtx::prime_field(13).unwrap();
            let (a, b, c) = (Scalar::Mod(a), Scalar::Mod(b), Scalar::Mod(c));
            prop_assert_eq!(ctx.add(&ctx.add(&a, &b), &c), ctx.add(&a, &ctx.add(&b, &c)));
            prop_assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            prop_assert_eq!(
                ctx.mul(&a, &ctx.add(&b, &c)),
                ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
            );
        }

        #[test]
        fn reduction_is_a_ring_hom(an in -30i64..30, ad in 1i64..10,
                                   bn in -30i64..30, bd in 1i64..10) {
            let p = 7u64;
            let ctx = FieldCtx::Rationals;
            let fp = FieldCtx::PrimeField(p);
            let (a, b) = (rat(an, ad), rat(bn, bd));
            // denominators 1..10 are never divisible by 7 except 7 itself
            prop_assume!(ad % 7 != 0 && bd % 7 != 0);
            let (ra, rb) = (a.reduce_mod_p(p).unwrap(), b.reduce_mod_p(p).unwrap());
            prop_assert_eq!(ctx.add(&a, &b).reduce_mod_p(p).unwrap(), fp.add(&ra, &rb));
            prop_assert_eq!(ctx.mul(&a, &b).reduce_mod_p(p).unwrap(), fp.mul(&ra, &rb));
        }
    }
}
