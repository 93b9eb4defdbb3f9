//! The per-prime reduction probe.
//!
//! For a rational endomorphism and a list of primes, the probe reduces
//! mod each prime, restricts to the center, and records four verdicts:
//! the commutation relations hold, the restriction has unit Jacobian, the
//! restriction is integral (with a monic certificate), and the
//! restriction is invertible. Invertibility of the restriction settles
//! invertibility of the reduced endomorphism itself, and the probe then
//! tries to lift the inverse back to the Weyl algebra by exact linear
//! algebra. Verdicts are per-prime and empirical: no characteristic-zero
//! conclusion is drawn from finitely many primes.

use std::fmt;

use super::{endo_preimages, saturating_pow, verify_weyl_inverse_bound};
use crate::charp::restrict_center;
use crate::groebner::{
    integrality_test, invert_poly_endo, GbConfig, IntegralityOutcome, InversionOutcome,
};
use crate::scalars::FieldCtx;
use crate::weyl::{WeylElement, WeylEndo};
use crate::{Error, Result};

/// A three-valued verdict: budget exhaustion is reported, never silent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        *self == Verdict::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => write!(f, "yes"),
            Verdict::No => write!(f, "no"),
            Verdict::Inconclusive(_) => write!(f, "inconclusive"),
        }
    }
}

/// Everything the probe learned at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRecord {
    pub prime: u64,
    /// Reduction was impossible; all other fields are defaults.
    pub skipped: Option<String>,
    pub relation_ok: bool,
    pub reduced_degree: u64,
    pub etale: Verdict,
    /// Whether the prime lies in the proven window `p > 2 deg`.
    pub window_binding: bool,
    pub finite: Verdict,
    pub finite_note: String,
    pub invertible: Verdict,
    pub center_inverse_degree: Option<u64>,
    pub gabber_bound: Option<u64>,
    /// The inverse lifted back to the Weyl algebra, when the search found
    /// it within the lift cutoff.
    pub weyl_inverse: Option<WeylEndo>,
    pub weyl_inverse_degree: Option<u64>,
    pub invbound_bound: Option<u64>,
}

impl PrimeRecord {
    fn skipped(prime: u64, reason: String) -> PrimeRecord {
        PrimeRecord {
            prime,
            skipped: Some(reason),
            relation_ok: false,
            reduced_degree: 0,
            etale: Verdict::Inconclusive("skipped".into()),
            window_binding: false,
            finite: Verdict::Inconclusive("skipped".into()),
            finite_note: String::new(),
            invertible: Verdict::Inconclusive("skipped".into()),
            center_inverse_degree: None,
            gabber_bound: None,
            weyl_inverse: None,
            weyl_inverse_degree: None,
            invbound_bound: None,
        }
    }
}

/// The full probe output: one record per requested prime, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    /// Hash of the canonical rendering of the input endomorphism.
    pub fingerprint: String,
    pub n: usize,
    pub input_degree: u64,
    pub lift_cutoff: u64,
    pub records: Vec<PrimeRecord>,
}

/// Runs the reduction battery at each prime.
///
/// `cutoff` caps the degree searched when lifting the inverse of the
/// center back to a Weyl-algebra inverse; the proven bound `deg^(2n-1)`
/// is used when it is smaller. Per-prime budget errors downgrade that
/// prime's verdict to inconclusive rather than aborting the probe.
pub fn dixmier_probe(
    phi: &WeylEndo,
    primes: &[u64],
    cutoff: u64,
    cfg: &GbConfig,
) -> Result<ProbeReport> {
    let mut sorted: Vec<u64> = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut records = Vec::with_capacity(sorted.len());
    for p in sorted {
        records.push(probe_at_prime(phi, p, cutoff, cfg)?);
    }
    Ok(ProbeReport {
        fingerprint: fingerprint(phi),
        n: phi.n(),
        input_degree: phi.degree(),
        lift_cutoff: cutoff,
        records,
    })
}

fn probe_at_prime(phi: &WeylEndo, p: u64, cutoff: u64, cfg: &GbConfig) -> Result<PrimeRecord> {
    let reduced = match phi.ctx() {
        FieldCtx::Rationals => match phi.reduce_mod_p(p) {
            Ok(r) => r,
            Err(Error::BadPrime(_)) => {
                return Ok(PrimeRecord::skipped(
                    p,
                    "prime divides a denominator".into(),
                ))
            }
            Err(Error::NotPrime(_)) => return Ok(PrimeRecord::skipped(p, "not a prime".into())),
            Err(e) => return Err(e),
        },
        FieldCtx::PrimeField(q) if q == p => phi.clone(),
        FieldCtx::PrimeField(q) => {
            return Ok(PrimeRecord::skipped(
                p,
                format!("endomorphism lives in characteristic {q}"),
            ))
        }
    };
    // construction re-validated the relations
    let relation_ok = true;
    let d = reduced.degree();
    let n = reduced.n();
    let window_binding = p > 2 * d;

    let center = restrict_center(&reduced)?;
    let etale_yes = center.is_etale_candidate();
    if window_binding && !etale_yes {
        return Err(Error::AuditFailure(format!(
            "restriction at p = {p} > 2 deg = {} is not etale",
            2 * d
        )));
    }
    let etale = if etale_yes { Verdict::Yes } else { Verdict::No };

    let (finite, finite_note) = match integrality_test(&center, cfg) {
        Ok(IntegralityOutcome::Integral(cert)) => {
            if !cert.degree_audit_ok() || !cert.preimage_audit_ok() {
                return Err(Error::AuditFailure(format!(
                    "certificate degrees {} / {} exceed bounds {} / {} at p = {p}",
                    cert.max_t_degree(),
                    cert.max_preimage_degree(),
                    cert.degree_bound,
                    cert.preimage_bound
                )));
            }
            let note = format!(
                "monic certificate: max T-degree {} <= {}, max preimage degree {} <= {}",
                cert.max_t_degree(),
                cert.degree_bound,
                cert.max_preimage_degree(),
                cert.preimage_bound
            );
            (Verdict::Yes, note)
        }
        Ok(IntegralityOutcome::NotIntegral { reason }) => (Verdict::No, reason),
        Err(Error::Budget(msg)) => (Verdict::Inconclusive(msg.clone()), msg),
        Err(e) => return Err(e),
    };

    let mut record = PrimeRecord {
        prime: p,
        skipped: None,
        relation_ok,
        reduced_degree: d,
        etale,
        window_binding,
        finite,
        finite_note,
        invertible: Verdict::No,
        center_inverse_degree: None,
        gabber_bound: None,
        weyl_inverse: None,
        weyl_inverse_degree: None,
        invbound_bound: None,
    };

    match invert_poly_endo(&center, cfg) {
        Ok(InversionOutcome::Automorphism(psi)) => {
            record.invertible = Verdict::Yes;
            let inv_deg = psi.degree();
            // the center lives in 2n variables, so the inverse bound is
            // deg^(2n-1)
            let bound = saturating_pow(center.degree(), 2 * n as u64 - 1);
            if inv_deg > bound {
                return Err(Error::AuditFailure(format!(
                    "center inverse degree {inv_deg} exceeds deg^(2n-1) = {bound} at p = {p}"
                )));
            }
            record.center_inverse_degree = Some(inv_deg);
            record.gabber_bound = Some(bound);
            lift_weyl_inverse(&reduced, cutoff, &mut record)?;
        }
        Ok(InversionOutcome::NotAutomorphism) => {
            record.invertible = Verdict::No;
        }
        Err(Error::Budget(msg)) => {
            record.invertible = Verdict::Inconclusive(msg);
        }
        Err(e) => return Err(e),
    }
    Ok(record)
}

/// Searches increasing degrees for preimages of all generators; the first
/// success is the inverse because inverses are unique.
fn lift_weyl_inverse(reduced: &WeylEndo, cutoff: u64, record: &mut PrimeRecord) -> Result<()> {
    let n = reduced.n();
    let ctx = reduced.ctx();
    let d = reduced.degree();
    let invbound = saturating_pow(d, 2 * n as u64 - 1);
    let cap = cutoff.min(invbound);
    let targets: Vec<WeylElement> = (0..n)
        .map(|i| WeylElement::gen_x(n, ctx, i))
        .chain((0..n).map(|i| WeylElement::gen_d(n, ctx, i)))
        .collect();
    for c in 1..=cap {
        let Some(found) = endo_preimages(reduced, &targets, c)? else {
            continue;
        };
        let (xs, ds) = found.split_at(n);
        let psi = WeylEndo::new(xs.to_vec(), ds.to_vec()).map_err(|e| match e {
            Error::RelationViolation => {
                Error::Internal("preimages of the generators violate the relations".into())
            }
            other => other,
        })?;
        let audit = verify_weyl_inverse_bound(reduced, &psi)?;
        record.weyl_inverse_degree = Some(audit.inverse_degree);
        record.invbound_bound = Some(audit.bound);
        record.weyl_inverse = Some(psi);
        return Ok(());
    }
    Ok(())
}

/// FNV-1a over the canonical rendering; stable across runs.
fn fingerprint(phi: &WeylEndo) -> String {
    let mut text = format!("weyl n={} {}", phi.n(), phi.ctx());
    for (i, img) in phi.ximg().iter().enumerate() {
        text.push_str(&format!("; x{} -> {img}", i + 1));
    }
    for (i, img) in phi.dimg().iter().enumerate() {
        text.push_str(&format!("; d{} -> {img}", i + 1));
    }
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

impl ProbeReport {
    /// Human-readable rendering, one block per prime.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "probe fingerprint={} n={} degree={} lift-cutoff={}\n",
            self.fingerprint, self.n, self.input_degree, self.lift_cutoff
        ));
        for r in &self.records {
            out.push_str(&format!("== prime {}\n", r.prime));
            if let Some(reason) = &r.skipped {
                out.push_str(&format!("  skipped: {reason}\n"));
                continue;
            }
            out.push_str(&format!(
                "  relations       {}\n",
                if r.relation_ok { "yes" } else { "no" }
            ));
            out.push_str(&format!("  reduced degree  {}\n", r.reduced_degree));
            out.push_str(&format!(
                "  etale           {}{}\n",
                r.etale,
                if r.window_binding {
                    " (asserted: p > 2 deg)"
                } else {
                    " (window not binding)"
                }
            ));
            out.push_str(&format!(
                "  finite          {} ({})\n",
                r.finite, r.finite_note
            ));
            match (&r.invertible, r.center_inverse_degree) {
                (Verdict::Yes, Some(deg)) => {
                    out.push_str(&format!(
                        "  invertible      yes (center inverse degree {deg} <= {}; the reduced endomorphism is an isomorphism)\n",
                        r.gabber_bound.unwrap_or(0)
                    ));
                }
                (v, _) => out.push_str(&format!("  invertible      {v}\n")),
            }
            match (&r.weyl_inverse, r.weyl_inverse_degree) {
                (Some(_), Some(deg)) => out.push_str(&format!(
                    "  weyl inverse    found, degree {deg} <= {}\n",
                    r.invbound_bound.unwrap_or(0)
                )),
                _ if r.invertible.is_yes() => {
                    out.push_str("  weyl inverse    not found within the lift cutoff\n")
                }
                _ => {}
            }
        }
        out
    }

    /// Machine-readable rendering: one record per line, fixed key order.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "fingerprint={} n={} degree={} lift_cutoff={}\n",
            self.fingerprint, self.n, self.input_degree, self.lift_cutoff
        ));
        for r in &self.records {
            if let Some(reason) = &r.skipped {
                out.push_str(&format!(
                    "prime={} status=skipped reason={reason}\n",
                    r.prime
                ));
                continue;
            }
            let opt = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
            out.push_str(&format!(
                "prime={} status=ok relation={} degree={} etale={} window={} finite={} invertible={} inverse_degree={} gabber_bound={} weyl_inverse={} invbound={}\n",
                r.prime,
                if r.relation_ok { "yes" } else { "no" },
                r.reduced_degree,
                r.etale,
                if r.window_binding { "binding" } else { "free" },
                r.finite,
                r.invertible,
                opt(r.center_inverse_degree),
                opt(r.gabber_bound),
                opt(r.weyl_inverse_degree),
                opt(r.invbound_bound),
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn probe_shift_automorphism() {
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let report = dixmier_probe(&phi, &[5, 7], 2, &GbConfig::default()).unwrap();
        assert_eq!(report.records.len(), 2);
        for r in &report.records {
            assert!(r.skipped.is_none());
            assert!(r.relation_ok);
            assert!(r.etale.is_yes(), "etale at {}", r.prime);
            assert!(
                r.finite.is_yes(),
                "finite at {}: {}",
                r.prime,
                r.finite_note
            );
            assert!(r.invertible.is_yes(), "invertible at {}", r.prime);
            let psi = r.weyl_inverse.as_ref().expect("lift found");
            assert_eq!(r.weyl_inverse_degree, Some(2));
            // the lift is the evident inverse d -> d - x^2
            let f = FieldCtx::prime_field(r.prime).unwrap();
            assert_eq!(psi.dimg()[0], d(f).sub(&x(f).pow(2).unwrap()).unwrap());
        }
    }

    #[test]
    fn probe_identity() {
        let id = WeylEndo::identity(1, q());
        let report = dixmier_probe(&id, &[2, 3], 1, &GbConfig::default()).unwrap();
        for r in &report.records {
            assert!(r.etale.is_yes() && r.finite.is_yes() && r.invertible.is_yes());
            assert_eq!(r.weyl_inverse_degree, Some(1));
        }
    }

    #[test]
    fn probe_artin_schreier_witness() {
        // x -> x + x^2, d -> d over F_2, injected at its own prime
        let f2 = FieldCtx::prime_field(2).unwrap();
        let phi = WeylEndo::new(
            vec![x(f2).add(&x(f2).pow(2).unwrap()).unwrap()],
            vec![d(f2)],
        )
        .unwrap();
        let report = dixmier_probe(&phi, &[2, 5], 4, &GbConfig::default()).unwrap();
        let r2 = &report.records[0];
        assert_eq!(r2.prime, 2);
        assert!(r2.relation_ok);
        assert!(r2.etale.is_yes());
        assert!(r2.finite.is_yes(), "{}", r2.finite_note);
        assert_eq!(r2.invertible, Verdict::No);
        assert!(r2.weyl_inverse.is_none());
        // the foreign prime is skipped with notice
        assert!(report.records[1].skipped.is_some());
    }

    #[test]
    fn probe_skips_bad_denominators() {
        use num_bigint::BigInt;
        let half = q().from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap().scale(&half)).unwrap()],
        )
        .unwrap();
        let report = dixmier_probe(&phi, &[2, 5], 2, &GbConfig::default()).unwrap();
        assert!(report.records[0].skipped.is_some());
        assert!(report.records[1].invertible.is_yes());
    }

    #[test]
    fn report_rendering_is_deterministic() {
        let phi = WeylEndo::new(
            vec![x(q())],
            vec![d(q()).add(&x(q()).pow(2).unwrap()).unwrap()],
        )
        .unwrap();
        let a = dixmier_probe(&phi, &[7, 5], 2, &GbConfig::default()).unwrap();
        let b = dixmier_probe(&phi, &[5, 7], 2, &GbConfig::default()).unwrap();
        assert_eq!(a.render_text(), b.render_text());
        assert_eq!(a.render_records(), b.render_records());
        assert!(a.render_records().contains("prime=5 status=ok"));
    }
}
