//! Shared test support: the single-step rewrite oracle for Weyl
//! multiplication, seeded random element generators, and small corpora of
//! endomorphisms used across the integration suites.

// each integration binary compiles this module separately and uses a
// different slice of it
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weylforge::commpoly::{Poly, PolyEndo};
use weylforge::mono::Mono;
use weylforge::scalars::{FieldCtx, Scalar};
use weylforge::weyl::{WeylElement, WeylEndo};

/// One generator letter in a noncommutative word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    X(usize),
    D(usize),
}

/// Multiplication oracle that knows only the single-step rewrite
/// `d_i x_j -> x_j d_i + delta_ij`: products of standard monomials are
/// expanded as generator words and rewritten to normal form one adjacent
/// swap at a time. Deliberately independent of the closed commutation
/// formula used by the library.
pub struct RewriteOracle {
    cache: BTreeMap<(Vec<u32>, Vec<u32>), WeylElement>,
}

impl RewriteOracle {
    pub fn new() -> RewriteOracle {
        RewriteOracle {
            cache: BTreeMap::new(),
        }
    }

    pub fn mul(&mut self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let n = a.n();
        let ctx = a.ctx();
        let mut out = WeylElement::zero(n, ctx);
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let prod = self.mul_monomials(n, ctx, ma, mb);
                let scaled = prod.scale(&ctx.mul(ca, cb));
                out = out.add(&scaled).expect("same ring");
            }
        }
        out
    }

    fn mul_monomials(&mut self, n: usize, ctx: FieldCtx, ma: &Mono, mb: &Mono) -> WeylElement {
        let key = (ma.0.clone(), mb.0.clone());
        if ctx == FieldCtx::Rationals {
            if let Some(hit) = self.cache.get(&key) {
                return hit.clone();
            }
        }
        let mut word = Vec::new();
        push_monomial_word(&mut word, n, ma);
        push_monomial_word(&mut word, n, mb);
        let result = normalize_word(n, ctx, word);
        if ctx == FieldCtx::Rationals {
            self.cache.insert(key, result.clone());
        }
        result
    }
}

fn push_monomial_word(word: &mut Vec<Gen>, n: usize, m: &Mono) {
    let (u, v) = m.0.split_at(n);
    for (i, e) in u.iter().enumerate() {
        for _ in 0..*e {
            word.push(Gen::X(i));
        }
    }
    for (i, e) in v.iter().enumerate() {
        for _ in 0..*e {
            word.push(Gen::D(i));
        }
    }
}

/// Rewrites until no `d` stands immediately left of an `x`, splitting on
/// `d_i x_i -> x_i d_i + 1` and swapping on distinct indices.
fn normalize_word(n: usize, ctx: FieldCtx, word: Vec<Gen>) -> WeylElement {
    let mut out = WeylElement::zero(n, ctx);
    let mut stack = vec![word];
    while let Some(w) = stack.pop() {
        let mut reducible = None;
        for k in 0..w.len().saturating_sub(1) {
            if let (Gen::D(i), Gen::X(j)) = (w[k], w[k + 1]) {
                reducible = Some((k, i, j));
                break;
            }
        }
        match reducible {
            None => {
                let mut exps = vec![0u32; 2 * n];
                for g in &w {
                    match g {
                        Gen::X(i) => exps[*i] += 1,
                        Gen::D(i) => exps[n + *i] += 1,
                    }
                }
                out.add_term(Mono(exps), ctx.one());
            }
            Some((k, i, j)) => {
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                stack.push(swapped);
                if i == j {
                    let mut dropped = w.clone();
                    dropped.drain(k..k + 2);
                    stack.push(dropped);
                }
            }
        }
    }
    out
}

/// Deterministic RNG for a named test.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut ChaCha8Rng, ctx: FieldCtx) -> Scalar {
    match ctx {
        FieldCtx::Rationals => {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=4);
            ctx.from_ratio(&num.into(), &den.into())
                .expect("nonzero denominator")
        }
        FieldCtx::PrimeField(p) => Scalar::Mod(rng.gen_range(0..p)),
    }
}

/// Sparse random element: up to `max_terms` monomials of total degree
/// `<= max_degree`.
pub fn random_weyl_element(
    rng: &mut ChaCha8Rng,
    n: usize,
    ctx: FieldCtx,
    max_degree: u32,
    max_terms: usize,
) -> WeylElement {
    let mut e = WeylElement::zero(n, ctx);
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; 2 * n];
        let mut budget = max_degree;
        for slot in exps.iter_mut() {
            let step = rng.gen_range(0..=budget);
            *slot = step;
            budget -= step;
        }
        e.add_term(Mono(exps), random_scalar(rng, ctx));
    }
    e
}

pub fn random_poly(
    rng: &mut ChaCha8Rng,
    n: usize,
    ctx: FieldCtx,
    max_degree: u32,
    max_terms: usize,
) -> Poly {
    let mut e = Poly::zero(n, ctx);
    let terms = rng.gen_range(0..=max_terms);
    for _ in 0..terms {
        let mut exps = vec![0u32; n];
        let mut budget = max_degree;
        for slot in exps.iter_mut() {
            let step = rng.gen_range(0..=budget);
            *slot = step;
            budget -= step;
        }
        e.add_term(Mono(exps), random_scalar(rng, ctx));
    }
    e
}

pub fn gen_x(n: usize, ctx: FieldCtx, i: usize) -> WeylElement {
    WeylElement::gen_x(n, ctx, i)
}

pub fn gen_d(n: usize, ctx: FieldCtx, i: usize) -> WeylElement {
    WeylElement::gen_d(n, ctx, i)
}

/// The shift automorphism `x -> x, d -> d + x^k` with its inverse.
pub fn shift_pair(ctx: FieldCtx, k: u64) -> (WeylEndo, WeylEndo) {
    let x = gen_x(1, ctx, 0);
    let d = gen_d(1, ctx, 0);
    let phi = WeylEndo::new(vec![x.clone()], vec![d.add(&x.pow(k).unwrap()).unwrap()]).unwrap();
    let psi = WeylEndo::new(vec![x.clone()], vec![d.sub(&x.pow(k).unwrap()).unwrap()]).unwrap();
    (phi, psi)
}

/// A corpus of tame polynomial automorphisms with composite degree `<= 3`,
/// built as compositions of at most three elementary or linear factors.
pub fn tame_poly_corpus() -> Vec<PolyEndo> {
    let q = FieldCtx::Rationals;
    let v = |n: usize, i: usize| Poly::var(n, q, i);
    let mut maps: Vec<PolyEndo> = Vec::new();

    // two variables: elementary factors
    let e2: Vec<PolyEndo> = vec![
        PolyEndo::new(vec![
            v(2, 0).add(&v(2, 1).pow(2).unwrap()).unwrap(),
            v(2, 1),
        ])
        .unwrap(),
        PolyEndo::new(vec![
            v(2, 0),
            v(2, 1).add(&v(2, 0).pow(2).unwrap()).unwrap(),
        ])
        .unwrap(),
        PolyEndo::new(vec![
            v(2, 0).add(&v(2, 1).pow(3).unwrap()).unwrap(),
            v(2, 1),
        ])
        .unwrap(),
        PolyEndo::new(vec![
            v(2, 0),
            v(2, 1).add(&v(2, 0).pow(3).unwrap()).unwrap(),
        ])
        .unwrap(),
        PolyEndo::new(vec![
            v(2, 0)
                .add(&v(2, 1).pow(2).unwrap().scale(&q.from_i64(3)))
                .unwrap(),
            v(2, 1),
        ])
        .unwrap(),
    ];
    let l2: Vec<PolyEndo> = vec![
        PolyEndo::new(vec![v(2, 1), v(2, 0)]).unwrap(),
        PolyEndo::new(vec![v(2, 0).add(&v(2, 1)).unwrap(), v(2, 1)]).unwrap(),
        PolyEndo::new(vec![v(2, 0).scale(&q.from_i64(2)), v(2, 1)]).unwrap(),
        PolyEndo::identity(2, q),
    ];
    for e in &e2 {
        maps.push(e.clone());
        for l in &l2 {
            maps.push(l.compose(e).unwrap());
            maps.push(e.compose(l).unwrap());
        }
    }
    for l in &l2 {
        maps.push(l.clone());
    }

    // three variables
    let e3: Vec<PolyEndo> = vec![
        PolyEndo::new(vec![
            v(3, 0).add(&v(3, 1).mul(&v(3, 2)).unwrap()).unwrap(),
            v(3, 1),
            v(3, 2),
        ])
        .unwrap(),
        PolyEndo::new(vec![
            v(3, 0),
            v(3, 1).add(&v(3, 2).pow(3).unwrap()).unwrap(),
            v(3, 2),
        ])
        .unwrap(),
        PolyEndo::new(vec![
            v(3, 0),
            v(3, 1),
            v(3, 2).add(&v(3, 0).pow(2).unwrap()).unwrap(),
        ])
        .unwrap(),
    ];
    let l3: Vec<PolyEndo> = vec![
        PolyEndo::new(vec![v(3, 2), v(3, 0), v(3, 1)]).unwrap(),
        PolyEndo::new(vec![v(3, 0).add(&v(3, 2)).unwrap(), v(3, 1), v(3, 2)]).unwrap(),
        PolyEndo::identity(3, q),
    ];
    for e in &e3 {
        maps.push(e.clone());
        for l in &l3 {
            maps.push(l.compose(e).unwrap());
        }
    }
    // a three-factor composition: linear . elementary . linear
    maps.push(l3[0].compose(&e3[0]).unwrap().compose(&l3[1]).unwrap());
    maps.push(l2[0].compose(&e2[0]).unwrap().compose(&l2[1]).unwrap());

    maps.retain(|m| m.degree() <= 3);
    maps
}

/// Weyl automorphisms with their known inverses, n in {1, 2}, degree <= 3.
pub fn weyl_auto_corpus() -> Vec<(WeylEndo, WeylEndo)> {
    let q = FieldCtx::Rationals;
    let x = |i: usize| gen_x(2, q, i);
    let d = |i: usize| gen_d(2, q, i);
    let x1 = gen_x(1, q, 0);
    let d1 = gen_d(1, q, 0);
    let mut corpus = vec![shift_pair(q, 2), shift_pair(q, 3)];

    // transvection in the other direction: x -> x + d^2
    corpus.push((
        WeylEndo::new(vec![x1.add(&d1.pow(2).unwrap()).unwrap()], vec![d1.clone()]).unwrap(),
        WeylEndo::new(vec![x1.sub(&d1.pow(2).unwrap()).unwrap()], vec![d1.clone()]).unwrap(),
    ));
    corpus.push((
        WeylEndo::new(vec![x1.add(&d1.pow(3).unwrap()).unwrap()], vec![d1.clone()]).unwrap(),
        WeylEndo::new(vec![x1.sub(&d1.pow(3).unwrap()).unwrap()], vec![d1.clone()]).unwrap(),
    ));
    // symplectic swap (x, d) -> (-d, x)
    corpus.push((
        WeylEndo::new(vec![d1.neg()], vec![x1.clone()]).unwrap(),
        WeylEndo::new(vec![d1.clone()], vec![x1.neg()]).unwrap(),
    ));
    // scaling (2x, d/2)
    let half = q.from_ratio(&1.into(), &2.into()).unwrap();
    corpus.push((
        WeylEndo::new(vec![x1.scale(&q.from_i64(2))], vec![d1.scale(&half)]).unwrap(),
        WeylEndo::new(vec![x1.scale(&half)], vec![d1.scale(&q.from_i64(2))]).unwrap(),
    ));
    // composition of two shifts: phi = s2 . s3, inverse = s3inv . s2inv
    let (s2, s2i) = shift_pair(q, 2);
    let (s3, s3i) = shift_pair(q, 3);
    corpus.push((s2.compose(&s3).unwrap(), s3i.compose(&s2i).unwrap()));

    // n = 2: shift in one pair
    corpus.push((
        WeylEndo::new(
            vec![x(0), x(1)],
            vec![d(0).add(&x(0).pow(2).unwrap()).unwrap(), d(1)],
        )
        .unwrap(),
        WeylEndo::new(
            vec![x(0), x(1)],
            vec![d(0).sub(&x(0).pow(2).unwrap()).unwrap(), d(1)],
        )
        .unwrap(),
    ));
    // n = 2: linear pair mix x1 -> x1 + x2, d2 -> d2 - d1
    corpus.push((
        WeylEndo::new(
            vec![x(0).add(&x(1)).unwrap(), x(1)],
            vec![d(0), d(1).sub(&d(0)).unwrap()],
        )
        .unwrap(),
        WeylEndo::new(
            vec![x(0).sub(&x(1)).unwrap(), x(1)],
            vec![d(0), d(1).add(&d(0)).unwrap()],
        )
        .unwrap(),
    ));
    // n = 2: generating-function map for H = d1 d2^2, which shifts
    // x_i by the partial of H in d_i and keeps the d's fixed
    let h1 = d(1).pow(2).unwrap();
    let h2 = d(0).mul(&d(1)).unwrap().scale(&q.from_i64(2));
    corpus.push((
        WeylEndo::new(
            vec![x(0).add(&h1).unwrap(), x(1).add(&h2).unwrap()],
            vec![d(0), d(1)],
        )
        .unwrap(),
        WeylEndo::new(
            vec![x(0).sub(&h1).unwrap(), x(1).sub(&h2).unwrap()],
            vec![d(0), d(1)],
        )
        .unwrap(),
    ));
    // n = 2: swap the two pairs
    corpus.push((
        WeylEndo::new(vec![x(1), x(0)], vec![d(1), d(0)]).unwrap(),
        WeylEndo::new(vec![x(1), x(0)], vec![d(1), d(0)]).unwrap(),
    ));
    // n = 2: d-shift with potential V = x1 x2^2, so d_i moves by the
    // partial of V in x_i
    let v1 = x(1).pow(2).unwrap();
    let v2 = x(0).mul(&x(1)).unwrap().scale(&q.from_i64(2));
    let a = WeylEndo::new(
        vec![x(0), x(1)],
        vec![d(0).add(&v1).unwrap(), d(1).add(&v2).unwrap()],
    )
    .unwrap();
    let ai = WeylEndo::new(
        vec![x(0), x(1)],
        vec![d(0).sub(&v1).unwrap(), d(1).sub(&v2).unwrap()],
    )
    .unwrap();
    corpus.push((a, ai));
    corpus
}

/// Rational Weyl endomorphisms of degree at most 3 for the window check.
pub fn window_corpus() -> Vec<WeylEndo> {
    let q = FieldCtx::Rationals;
    let half = q.from_ratio(&1.into(), &2.into()).unwrap();
    let x1 = gen_x(1, q, 0);
    let d1 = gen_d(1, q, 0);
    let mut corpus: Vec<WeylEndo> = weyl_auto_corpus().into_iter().map(|(a, _)| a).collect();
    // shifts with fractional coefficients
    corpus.push(
        WeylEndo::new(
            vec![x1.clone()],
            vec![d1.add(&x1.pow(2).unwrap().scale(&half)).unwrap()],
        )
        .unwrap(),
    );
    corpus.push(
        WeylEndo::new(
            vec![x1.add(&d1.pow(3).unwrap().scale(&half)).unwrap()],
            vec![d1.clone()],
        )
        .unwrap(),
    );
    corpus.retain(|e| e.degree() <= 3);
    corpus
}

/// Primes in the interval (low, high].
pub fn primes_in(low: u64, high: u64) -> Vec<u64> {
    (low + 1..=high)
        .filter(|&p| weylforge::scalars::is_prime(p))
        .collect()
}
