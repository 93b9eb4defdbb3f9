//! Buchberger's algorithm with the normal selection strategy.
//!
//! Pairs are processed in order of increasing lcm degree, the coprime and
//! chain criteria prune the queue, and the final basis is minimized,
//! interreduced, made monic and sorted by leading term, which makes it the
//! canonical reduced basis: recomputation yields the identical generator
//! list. Every computed basis is audited against its degree bound before
//! being returned.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::order::TermOrder;
use crate::commpoly::Poly;
use crate::mono::Mono;
use crate::scalars::Scalar;
use crate::{Error, Result};

/// Environment variable overriding the S-pair budget.
pub const PAIR_BUDGET_ENV: &str = "WEYLFORGE_PAIR_BUDGET";

const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// Resource limits for a basis computation.
#[derive(Clone, Debug)]
pub struct GbConfig {
    /// Max number of S-pairs popped from the queue.
    pub max_pairs: usize,
    /// Max total degree of any intermediate remainder; `None` means the
    /// degree bound of the instance.
    pub max_degree: Option<u64>,
}

impl Default for GbConfig {
    fn default() -> GbConfig {
        let max_pairs = std::env::var(PAIR_BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_PAIR_BUDGET);
        GbConfig {
            max_pairs,
            max_degree: None,
        }
    }
}

/// A reduced Groebner basis together with its provenance data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub generators: Vec<Poly>,
    pub order: TermOrder,
    /// Max total degree of the nonzero input generators.
    pub input_degree: u64,
    /// Max total degree in the reduced basis.
    pub max_degree: u64,
}

/// The degree bound `2 (d^2/2 + d)^(2^(n-1))` for a basis of an ideal
/// generated in degree `<= d` in `n` variables. Exact rational arithmetic:
/// the bound is a half-integer when `n > 1` and `d` is odd.
pub fn degree_bound(nvars: usize, input_degree: u64) -> BigRational {
    let d = BigRational::from_integer(BigInt::from(input_degree));
    let base = &d * &d / BigRational::from_integer(BigInt::from(2)) + &d;
    let exp = 1u64 << (nvars.saturating_sub(1)).min(62);
    let mut acc = BigRational::one();
    let mut sq = base;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc * BigRational::from_integer(BigInt::from(2))
}

/// Outcome of checking a basis against its degree bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAudit {
    pub max_degree: u64,
    pub bound: BigRational,
    pub ok: bool,
}

/// Checks `max_degree` against the bound for the instance. A failure is an
/// engine bug, so callers normally propagate it as an error.
pub fn gb_degree_audit(gb: &GroebnerBasis) -> Result<DegreeAudit> {
    let nvars = gb
        .generators
        .first()
        .map(|g| g.n())
        .ok_or(Error::EmptyInput)?;
    let bound = degree_bound(nvars, gb.input_degree);
    let ok = BigRational::from_integer(BigInt::from(gb.max_degree)) <= bound;
    let audit = DegreeAudit {
        max_degree: gb.max_degree,
        bound,
        ok,
    };
    if !ok {
        return Err(Error::AuditFailure(format!(
            "basis degree {} exceeds the bound {} for inputs of degree {} in {} variables",
            audit.max_degree, audit.bound, gb.input_degree, nvars
        )));
    }
    Ok(audit)
}

fn leading<'a>(p: &'a Poly, order: &TermOrder) -> (&'a Mono, &'a Scalar) {
    p.terms()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .expect("leading term of a nonzero polynomial")
}

/// Remainder of multivariate division of `f` by `gens`: no term of the
/// result is divisible by any leading term of `gens`.
pub fn normal_form(f: &Poly, gens: &[Poly], order: &TermOrder) -> Poly {
    let nonzero: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut r = Poly::zero(f.n(), f.ctx());
    'outer: while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = leading(&p, order);
            (m.clone(), c.clone())
        };
        for g in &nonzero {
            let (gm, gc) = leading(g, order);
            if let Some(q) = lm.checked_div(gm) {
                let factor = f
                    .ctx()
                    .div(&lc, gc)
                    .expect("leading coefficients are nonzero");
                p = p
                    .sub(&g.mul_term(&q, &factor))
                    .expect("same ring by construction");
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        r.add_term(lm.clone(), lc.clone());
        let mut rest = Poly::zero(f.n(), f.ctx());
        for (m, c) in p.terms() {
            if *m != lm {
                rest.add_term(m.clone(), c.clone());
            }
        }
        p = rest;
    }
    r
}

fn s_poly(f: &Poly, g: &Poly, order: &TermOrder) -> Poly {
    let (fm, fc) = leading(f, order);
    let (gm, gc) = leading(g, order);
    let lcm = fm.lcm(gm);
    let ctx = f.ctx();
    let fq = lcm.checked_div(fm).expect("lcm is divisible by both");
    let gq = lcm.checked_div(gm).expect("lcm is divisible by both");
    let finv = ctx.inv(fc).expect("nonzero leading coefficient");
    let ginv = ctx.inv(gc).expect("nonzero leading coefficient");
    f.mul_term(&fq, &finv)
        .sub(&g.mul_term(&gq, &ginv))
        .expect("same ring")
}

/// The reduced Groebner basis of the ideal generated by `input`.
pub fn buchberger(input: &[Poly], order: &TermOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let mut basis: Vec<Poly> = input.iter().filter(|p| !p.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    let nvars = basis[0].n();
    let input_degree = basis
        .iter()
        .map(|p| p.degree().expect("nonzero"))
        .max()
        .unwrap_or(0);
    let degree_cap = match cfg.max_degree {
        Some(d) => Some(d),
        None => {
            let bound = degree_bound(nvars, input_degree);
            // a bound too large for u64 is no constraint at all
            bound.floor().to_integer().to_u64()
        }
    };

    let mut queue: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let mut considered: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lcm_degree = |basis: &[Poly], i: usize, j: usize| {
        let (mi, _) = leading(&basis[i], order);
        let (mj, _) = leading(&basis[j], order);
        mi.lcm(mj).total_degree()
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            queue.insert((lcm_degree(&basis, i, j), i, j));
        }
    }

    let mut popped = 0usize;
    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        popped += 1;
        if popped > cfg.max_pairs {
            return Err(Error::Budget(format!(
                "S-pair budget of {} exhausted",
                cfg.max_pairs
            )));
        }
        let (mi, _) = leading(&basis[i], order);
        let (mj, _) = leading(&basis[j], order);
        let lcm = mi.lcm(mj);
        // coprime criterion
        if mi.coprime(mj) {
            considered.insert((i, j));
            continue;
        }
        // chain criterion
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (mk, _) = leading(&basis[k], order);
            mk.divides(&lcm)
                && considered.contains(&(i.min(k), i.max(k)))
                && considered.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            considered.insert((i, j));
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let remainder = normal_form(&s, &basis, order);
        considered.insert((i, j));
        if remainder.is_zero() {
            continue;
        }
        if let Some(cap) = degree_cap {
            let d = remainder.degree().expect("nonzero");
            if d > cap {
                return Err(Error::Budget(format!(
                    "intermediate degree {d} exceeds the cap {cap}"
                )));
            }
        }
        let t = basis.len();
        basis.push(remainder);
        for k in 0..t {
            queue.insert((lcm_degree(&basis, k, t), k, t));
        }
    }

    let generators = reduce_basis(basis, order);
    let max_degree = generators
        .iter()
        .map(|p| p.degree().expect("nonzero"))
        .max()
        .unwrap_or(0);
    let gb = GroebnerBasis {
        generators,
        order: order.clone(),
        input_degree,
        max_degree,
    };
    // the degree bound is a theorem, so this only fires on an engine bug
    gb_degree_audit(&gb)?;
    Ok(gb)
}

/// Minimizes and interreduces: leading terms become a minimal generating
/// set of the leading-term ideal, every generator is fully reduced against
/// the others and monic, and the list is sorted by leading term.
fn reduce_basis(mut basis: Vec<Poly>, order: &TermOrder) -> Vec<Poly> {
    basis.retain(|p| !p.is_zero());
    // drop generators whose leading term another one divides
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = leading(&basis[i], order);
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = leading(&basis[j], order);
            if mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    // full interreduction; leading terms are pairwise indivisible now
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let nf = normal_form(&minimal[i], &others, order);
        let (_, lc) = leading(&nf, order);
        let inv = nf.ctx().inv(lc).expect("nonzero leading coefficient");
        reduced.push(nf.scale(&inv));
    }
    // ascending by leading term; leading terms are pairwise distinct here
    reduced.sort_by(|a, b| {
        let (ma, _) = leading(a, order);
        let (mb, _) = leading(b, order);
        order.cmp(ma, mb)
    });
    reduced
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

    #[test]
    fn normal_form_examples() {
        let lex = TermOrder::lex(2);
        // x^2 reduces to 0 modulo x
        let nf = normal_form(&x(2, 0).pow(2).unwrap(), &[x(2, 0)], &lex);
        assert!(nf.is_zero());
        // x^2 + y reduces to y modulo x
        let f = x(2, 0).pow(2).unwrap().add(&x(2, 1)).unwrap();
        assert_eq!(normal_form(&f, &[x(2, 0)], &lex), x(2, 1));
        // anything reduces to 0 modulo 1
        assert!(normal_form(&f, &[Poly::one(2, q())], &lex).is_zero());
    }

    #[test]
    fn monomial_ideal() {
        let lex = TermOrder::lex(2);
        let gens = vec![x(2, 0).pow(2).unwrap(), x(2, 0).mul(&x(2, 1)).unwrap()];
        let gb = buchberger(&gens, &lex, &GbConfig::default()).unwrap();
        assert_eq!(gb.generators.len(), 2);
        assert_eq!(gb.max_degree, 2);
        assert_eq!(gb.input_degree, 2);
        // canonical sort: xy before x^2 under lex? x^2 > xy, ascending puts xy first
        assert_eq!(gb.generators[0], gens[1]);
        assert_eq!(gb.generators[1], gens[0]);
    }

    #[test]
    fn twisted_cubic_elimination() {
        // (y - x^2, z - x^3) under lex x > y > z contains y^3 - z^2
        let lex = TermOrder::lex(3);
        let gens = vec![
            x(3, 1).sub(&x(3, 0).pow(2).unwrap()).unwrap(),
            x(3, 2).sub(&x(3, 0).pow(3).unwrap()).unwrap(),
        ];
        let gb = buchberger(&gens, &lex, &GbConfig::default()).unwrap();
        let elim = x(3, 1)
            .pow(3)
            .unwrap()
            .sub(&x(3, 2).pow(2).unwrap())
            .unwrap();
        assert!(gb.generators.contains(&elim));
        // every generator vanishes on the parametrization (t, t^2, t^3)
        let t = x(1, 0);
        let param = [t.clone(), t.pow(2).unwrap(), t.pow(3).unwrap()];
        for g in &gb.generators {
            assert!(g.substitute(&param).unwrap().is_zero());
        }
        // inputs reduce to zero against the basis
        for g in &gens {
            assert!(normal_form(g, &gb.generators, &lex).is_zero());
        }
        // all S-polynomials reduce to zero
        for i in 0..gb.generators.len() {
            for j in i + 1..gb.generators.len() {
                let s = s_poly(&gb.generators[i], &gb.generators[j], &lex);
                assert!(normal_form(&s, &gb.generators, &lex).is_zero());
            }
        }
    }

    #[test]
    fn single_generator() {
        let lex = TermOrder::lex(1);
        let g = x(1, 0).sub(&Poly::one(1, q())).unwrap();
        let gb = buchberger(&[g.clone()], &lex, &GbConfig::default()).unwrap();
        assert_eq!(gb.generators, vec![g]);
        assert_eq!(gb.max_degree, 1);
    }

    #[test]
    fn determinism() {
        let lex = TermOrder::lex(3);
        let gens = vec![
            x(3, 0)
                .pow(2)
                .unwrap()
                .add(&x(3, 1).mul(&x(3, 2)).unwrap())
                .unwrap(),
            x(3, 1).pow(2).unwrap().sub(&x(3, 2)).unwrap(),
            x(3, 0).mul(&x(3, 2)).unwrap().sub(&x(3, 1)).unwrap(),
        ];
        let a = buchberger(&gens, &lex, &GbConfig::default()).unwrap();
        let b = buchberger(&gens, &lex, &GbConfig::default()).unwrap();
        assert_eq!(a, b);
        // recomputing from the reduced basis gives the same basis back
        let c = buchberger(&a.generators, &lex, &GbConfig::default()).unwrap();
        assert_eq!(a.generators, c.generators);
    }

    #[test]
    fn empty_input_is_an_error() {
        let lex = TermOrder::lex(1);
        assert_eq!(
            buchberger(&[Poly::zero(1, q())], &lex, &GbConfig::default()).unwrap_err(),
            Error::EmptyInput
        );
    }

    #[test]
    fn pair_budget() {
        let lex = TermOrder::lex(3);
        let gens = vec![
            x(3, 1).sub(&x(3, 0).pow(2).unwrap()).unwrap(),
            x(3, 2).sub(&x(3, 0).pow(3).unwrap()).unwrap(),
        ];
        let cfg = GbConfig {
            max_pairs: 0,
            max_degree: None,
        };
        assert!(matches!(
            buchberger(&gens, &lex, &cfg),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn degree_bound_values() {
        // one variable, degree 2: 2 * 4 = 8
        assert_eq!(degree_bound(1, 2), BigRational::from_integer(8.into()));
        // two variables, degree 2: 2 * 16 = 32
        assert_eq!(degree_bound(2, 2), BigRational::from_integer(32.into()));
        // odd degree gives a half-integer: n=2, d=3: 2 * 7.5^2 = 112.5
        assert_eq!(degree_bound(2, 3), BigRational::new(225.into(), 2.into()));
    }

    #[test]
    fn audit_passes_on_engine_output() {
        let lex = TermOrder::lex(2);
        let gens = vec![
            x(2, 0).pow(2).unwrap().add(&x(2, 1)).unwrap(),
            x(2, 0)
                .mul(&x(2, 1))
                .unwrap()
                .sub(&Poly::one(2, q()))
                .unwrap(),
        ];
        let gb = buchberger(&gens, &lex, &GbConfig::default()).unwrap();
        let audit = gb_degree_audit(&gb).unwrap();
        assert!(audit.ok);
    }
}
