//! Seeded property tests for the structural invariants: filtration
//! degrees, homomorphism laws, functoriality of the center restriction,
//! the Jacobian chain rule, reduction/composition compatibility, basis
//! correctness on random ideals, and annihilation by minimal polynomials.

mod common;

use common::*;
use weylforge::charp::restrict_center;
use weylforge::commpoly::{Poly, PolyEndo};
use weylforge::endoscope::{dixmier_probe, generation_solve, generation_verify, Side};
use weylforge::groebner::{
    buchberger, minimal_polynomial, normal_form, GbConfig, MinPolyOutcome, TermOrder,
};
use weylforge::scalars::FieldCtx;
use weylforge::weyl::{WeylElement, WeylEndo};

fn f(p: u64) -> FieldCtx {
    FieldCtx::prime_field(p).unwrap()
}

#[test]
fn product_degree_filtration() {
    let mut rg = rng(11);
    // equality over the rationals, upper bound in characteristic p
    for _ in 0..150 {
        for (ctx, exact) in [(FieldCtx::Rationals, true), (f(3), false)] {
            let a = random_weyl_element(&mut rg, 2, ctx, 4, 3);
            let b = random_weyl_element(&mut rg, 2, ctx, 4, 3);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let prod = a.mul(&b).unwrap();
            let bound = a.degree().unwrap() + b.degree().unwrap();
            if exact {
                assert_eq!(prod.degree().unwrap(), bound);
            } else if !prod.is_zero() {
                assert!(prod.degree().unwrap() <= bound);
            }
        }
    }
}

#[test]
fn endo_application_is_multiplicative() {
    let mut rg = rng(12);
    let q = FieldCtx::Rationals;
    let (shift, _) = shift_pair(q, 2);
    let swap = WeylEndo::new(vec![gen_d(1, q, 0).neg()], vec![gen_x(1, q, 0)]).unwrap();
    for phi in [&shift, &swap, &WeylEndo::identity(1, q)] {
        for _ in 0..40 {
            let a = random_weyl_element(&mut rg, 1, q, 3, 3);
            let b = random_weyl_element(&mut rg, 1, q, 3, 3);
            let lhs = phi.apply(&a.mul(&b).unwrap()).unwrap();
            let rhs = phi.apply(&a).unwrap().mul(&phi.apply(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn center_restriction_is_functorial() {
    for p in [2u64, 3, 5] {
        let ctx = f(p);
        let x = gen_x(1, ctx, 0);
        let d = gen_d(1, ctx, 0);
        let shift2 =
            WeylEndo::new(vec![x.clone()], vec![d.add(&x.pow(2).unwrap()).unwrap()]).unwrap();
        let trans =
            WeylEndo::new(vec![x.add(&d.pow(2).unwrap()).unwrap()], vec![d.clone()]).unwrap();
        let swap = WeylEndo::new(vec![d.neg()], vec![x.clone()]).unwrap();
        let endos = [WeylEndo::identity(1, ctx), shift2, trans, swap];
        for a in &endos {
            for b in &endos {
                let composed = a.compose(b).unwrap();
                let lhs = restrict_center(&composed).unwrap();
                let rhs = restrict_center(a)
                    .unwrap()
                    .compose(&restrict_center(b).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "restriction not functorial at p = {p}");
            }
        }
    }
}

#[test]
fn jacobian_chain_rule() {
    let mut rg = rng(14);
    let q = FieldCtx::Rationals;
    for _ in 0..60 {
        let n = 2 + (rand::Rng::gen_range(&mut rg, 0..2) as usize);
        let phi = PolyEndo::new(
            (0..n)
                .map(|_| random_poly(&mut rg, n, q, 3, 3))
                .collect::<Vec<_>>(),
        );
        let psi = PolyEndo::new(
            (0..n)
                .map(|_| random_poly(&mut rg, n, q, 3, 3))
                .collect::<Vec<_>>(),
        );
        let (Ok(phi), Ok(psi)) = (phi, psi) else {
            continue;
        };
        // compose(phi, psi) maps points by psi-after-phi, so the outer
        // Jacobian is psi's, evaluated at phi's images
        let composed = phi.compose(&psi).unwrap();
        let lhs = composed.jacobian_det();
        let rhs = psi
            .jacobian_det()
            .substitute(phi.img())
            .unwrap()
            .mul(&phi.jacobian_det())
            .unwrap();
        assert_eq!(lhs, rhs, "chain rule failed");
    }
}

#[test]
fn substitution_degree_bound() {
    let mut rg = rng(15);
    let q = FieldCtx::Rationals;
    for _ in 0..100 {
        let f = random_poly(&mut rg, 2, q, 4, 3);
        let phi = PolyEndo::new(vec![
            random_poly(&mut rg, 2, q, 3, 3),
            random_poly(&mut rg, 2, q, 3, 3),
        ]);
        let Ok(phi) = phi else { continue };
        let image = phi.apply(&f).unwrap();
        if !image.is_zero() && !f.is_zero() {
            assert!(image.degree().unwrap() <= f.degree().unwrap() * phi.degree().max(1));
        }
    }
}

#[test]
fn reduction_commutes_with_composition() {
    let mut rg = rng(16);
    let q = FieldCtx::Rationals;
    for p in [3u64, 7] {
        for _ in 0..40 {
            // integer coefficients so reduction is defined at every prime
            let ints = |rg: &mut rand_chacha::ChaCha8Rng| {
                let mut poly = random_poly(rg, 2, q, 2, 3);
                // rebuild with integral coefficients
                let mut out = Poly::zero(2, q);
                for (m, _) in poly.terms() {
                    out.add_term(
                        m.clone(),
                        q.from_i64(rand::Rng::gen_range(&mut *rg, -4i64..=4)),
                    );
                }
                poly = out;
                poly
            };
            let phi = PolyEndo::new(vec![ints(&mut rg), ints(&mut rg)]);
            let psi = PolyEndo::new(vec![ints(&mut rg), ints(&mut rg)]);
            let (Ok(phi), Ok(psi)) = (phi, psi) else {
                continue;
            };
            let lhs = phi.compose(&psi).unwrap().reduce_mod_p(p).unwrap();
            let rhs = phi
                .reduce_mod_p(p)
                .unwrap()
                .compose(&psi.reduce_mod_p(p).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn random_ideals_yield_correct_bases() {
    let mut rg = rng(17);
    let cfg = GbConfig::default();
    let mut checked = 0;
    for _ in 0..25 {
        let ctx = if checked % 2 == 0 {
            FieldCtx::Rationals
        } else {
            f(5)
        };
        let n = 2;
        let gens: Vec<Poly> = (0..2)
            .map(|_| random_poly(&mut rg, n, ctx, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        for order in [TermOrder::lex(n), TermOrder::grevlex(n)] {
            let Ok(gb) = buchberger(&gens, &order, &cfg) else {
                continue;
            };
            // inputs lie in the ideal of the basis
            for g in &gens {
                assert!(normal_form(g, &gb.generators, &order).is_zero());
            }
            // basis is self-reduced: no term divisible by another leading term
            for (i, g) in gb.generators.iter().enumerate() {
                let others: Vec<Poly> = gb
                    .generators
                    .iter()
                    .enumerate()
                    .filter_map(|(j, h)| (j != i).then(|| h.clone()))
                    .collect();
                if !others.is_empty() {
                    assert_eq!(normal_form(g, &others, &order), *g);
                }
            }
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn minimal_polynomials_annihilate() {
    let mut rg = rng(18);
    let q = FieldCtx::Rationals;
    let cfg = GbConfig::default();
    for _ in 0..20 {
        let f = random_poly(&mut rg, 2, q, 2, 2);
        let basis = vec![
            random_poly(&mut rg, 2, q, 2, 2),
            random_poly(&mut rg, 2, q, 2, 2),
        ];
        if f.is_zero() || basis.iter().any(Poly::is_zero) {
            continue;
        }
        match minimal_polynomial(&f, &basis, &cfg) {
            Ok(MinPolyOutcome::Polynomial(p)) => {
                let mut args = vec![f.clone()];
                args.extend(basis.iter().cloned());
                assert!(
                    p.substitute(&args).unwrap().is_zero(),
                    "minimal polynomial does not annihilate"
                );
            }
            Ok(MinPolyOutcome::Transcendental) => {}
            Err(weylforge::Error::Budget(_)) => {}
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
}

#[test]
fn generation_certificates_are_monotone_in_cutoff() {
    let q = FieldCtx::Rationals;
    let (shift, _) = shift_pair(q, 2);
    let one = WeylElement::one(1, q);
    let mut first_success = None;
    for cutoff in 0..=4 {
        let found = generation_solve(&shift, &[one.clone()], cutoff, Side::Left)
            .unwrap()
            .is_some();
        if found && first_success.is_none() {
            first_success = Some(cutoff);
        }
        if let Some(c) = first_success {
            assert!(found, "certificate lost between cutoff {c} and {cutoff}");
        }
    }
    assert_eq!(first_success, Some(2));
}

#[test]
fn elementary_automorphisms_probe_invertible() {
    // compositions of elementary automorphisms always report invertible
    // at primes that divide no denominator
    let cfg = GbConfig::default();
    for (phi, _) in weyl_auto_corpus().iter().take(6) {
        let report = dixmier_probe(phi, &[5, 7], 3, &cfg).unwrap();
        for r in &report.records {
            if r.skipped.is_some() {
                continue;
            }
            assert!(
                r.invertible.is_yes(),
                "automorphism not detected at p = {}",
                r.prime
            );
        }
    }
}

#[test]
fn probe_lifts_inverse_in_two_variable_pairs() {
    // n = 2 automorphism: the lift bound is deg^(2n-1) = 8, but the
    // evident inverse is found at degree 2
    let q = FieldCtx::Rationals;
    let x = |i: usize| gen_x(2, q, i);
    let d = |i: usize| gen_d(2, q, i);
    let phi = WeylEndo::new(
        vec![x(0), x(1)],
        vec![d(0).add(&x(0).pow(2).unwrap()).unwrap(), d(1)],
    )
    .unwrap();
    let report = dixmier_probe(&phi, &[5], 3, &GbConfig::default()).unwrap();
    let r = &report.records[0];
    assert!(r.etale.is_yes() && r.finite.is_yes() && r.invertible.is_yes());
    let psi = r.weyl_inverse.as_ref().expect("lift found");
    assert_eq!(r.weyl_inverse_degree, Some(2));
    let f5 = f(5);
    let expected = WeylEndo::new(
        vec![gen_x(2, f5, 0), gen_x(2, f5, 1)],
        vec![
            gen_d(2, f5, 0)
                .sub(&gen_x(2, f5, 0).pow(2).unwrap())
                .unwrap(),
            gen_d(2, f5, 1),
        ],
    )
    .unwrap();
    assert_eq!(*psi, expected);
}

#[test]
fn right_side_certificates_verify() {
    let q = FieldCtx::Rationals;
    let one = WeylElement::one(1, q);
    for k in [2u64, 3] {
        let (phi, _) = shift_pair(q, k);
        let cert = generation_solve(&phi, &[one.clone()], k, Side::Right)
            .unwrap()
            .expect("right-module certificate");
        assert!(generation_verify(&cert, &phi).unwrap());
    }
}
