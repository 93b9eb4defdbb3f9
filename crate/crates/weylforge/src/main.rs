//! Command-line front end: every analysis as a reproducible batch
//! invocation. Exit status 0 means a verdict was computed (including
//! negative verdicts), 1 is a usage or parse error, 2 means a resource
//! budget was exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weylforge::commpoly::{Poly, PolyEndo};
use weylforge::endofile::{
    parse_endo_file, parse_generation_certificate, render_center_endo, render_gb,
    render_generation_certificate, render_poly_endo, render_weyl_endo, EndoFile,
};
use weylforge::endoscope::{
    dixmier_probe, etale_window_check, generation_solve, generation_verify, verify_gabber_bound,
    verify_weyl_inverse_bound, EtaleStatus, GabberOutcome, Side,
};
use weylforge::groebner::{
    buchberger, integrality_test, minimal_polynomial, GbConfig, IntegralityCertificate,
    IntegralityOutcome, MinPolyOutcome, TermOrder,
};
use weylforge::parse::{parse_poly, parse_weyl, RingDescriptor, RingKind};
use weylforge::scalars::FieldCtx;
use weylforge::weyl::{WeylElement, WeylEndo};
use weylforge::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Parser)]
#[command(
    name = "weylforge",
    version,
    about = "Exact Weyl-algebra and polynomial-endomorphism analysis"
)]
struct Cli {
    /// Output serialization.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-form product of two Weyl expressions.
    Mul {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Ring descriptor like "weyl n=2 char=0"; inferred when omitted.
        #[arg(long)]
        ring: Option<String>,
    },
    /// Total degree of a Weyl expression.
    Deg {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Commutator [lhs, rhs].
    Commutator {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Apply the endomorphism in FILE to an expression.
    Apply {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Compose endomorphisms left to right: the first file is applied last.
    Compose {
        #[arg(long = "file", required = true)]
        files: Vec<PathBuf>,
    },
    /// Is the expression central (all exponents divisible by p)?
    CenterTest {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        ring: String,
    },
    /// Center coordinates of a central element.
    CenterExtract {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        ring: String,
    },
    /// Restriction of a Weyl endomorphism to the center.
    RestrictCenter {
        #[arg(long)]
        file: PathBuf,
    },
    /// Expansion of an expression over the center in the Q^a P^b basis.
    ExpandQp {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        file: PathBuf,
    },
    /// Jacobian determinant of a polynomial endomorphism.
    Jacobian {
        #[arg(long)]
        file: PathBuf,
    },
    /// Unit-Jacobian test.
    Etale {
        #[arg(long)]
        file: PathBuf,
    },
    /// Reduced Groebner basis of the listed generators.
    Gb {
        /// Ring descriptor like "poly n=2 char=0".
        #[arg(long)]
        ring: String,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        /// Term order: lex, grevlex, or elim:<k> (first k variables beat
        /// the rest).
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// Minimal polynomial of f over the subfield the generators define.
    Minpoly {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        f: String,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Integrality test with monic certificates and degree audits.
    Integral {
        #[arg(long)]
        file: PathBuf,
    },
    /// Inversion of a polynomial automorphism, with the inverse-degree audit.
    Invert {
        #[arg(long)]
        file: PathBuf,
    },
    /// Invert and audit deg(inverse) <= deg^(n-1).
    GabberAudit {
        #[arg(long)]
        file: PathBuf,
    },
    /// Check that two Weyl endomorphisms are mutually inverse and audit
    /// deg(inverse) <= deg^(2n-1).
    InvboundAudit {
        #[arg(long = "file", required = true)]
        files: Vec<PathBuf>,
    },
    /// Unit-Jacobian verdicts for the center restriction at each prime.
    EtaleWindow {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
    },
    /// Search for a module-generation certificate at the given cutoff.
    GenSolve {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        cutoff: u64,
        /// Extra generators beyond the mandatory 1.
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// Verify a generation certificate against an endomorphism.
    GenVerify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Per-prime reduction probe: relations, etale, finite, invertible.
    Probe {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        /// Degree cap for lifting the inverse back to the Weyl algebra.
        #[arg(long, default_value = "4")]
        cutoff: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget(_) | Error::SizeLimit(_) | Error::DegreeLimit(_, _) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::FAILURE,
            }
        }
    }
}

/// Parses "weyl n=2 char=0" style descriptors.
fn parse_ring(text: &str) -> Result<RingDescriptor> {
    let usage = || Error::Parse {
        line: 1,
        col: 1,
        msg: format!(
            "ring descriptor must be `(weyl|poly|center) n=<int> char=(0|p)`, got `{text}`"
        ),
    };
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 3 {
        return Err(usage());
    }
    let kind = match tokens[0] {
        "weyl" => RingKind::Weyl,
        "poly" => RingKind::Poly,
        "center" => RingKind::Center,
        _ => return Err(usage()),
    };
    let n: usize = tokens[1]
        .strip_prefix("n=")
        .ok_or_else(usage)?
        .parse()
        .map_err(|_| usage())?;
    let c: u64 = tokens[2]
        .strip_prefix("char=")
        .ok_or_else(usage)?
        .parse()
        .map_err(|_| usage())?;
    if n == 0 {
        return Err(usage());
    }
    let ctx = if c == 0 {
        FieldCtx::Rationals
    } else {
        FieldCtx::prime_field(c)?
    };
    Ok(RingDescriptor { kind, n, ctx })
}

/// Infers `weyl n=<max index> char=0` from the expressions.
fn infer_weyl_ring(exprs: &[&str]) -> RingDescriptor {
    let mut n = 1usize;
    for expr in exprs {
        let bytes = expr.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'x' || bytes[i] == b'd' {
                let mut j = i + 1;
                let mut idx = 0usize;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    idx = idx * 10 + (bytes[j] - b'0') as usize;
                    j += 1;
                }
                if j > i + 1 {
                    n = n.max(idx);
                }
                i = j;
            } else {
                i += 1;
            }
        }
    }
    RingDescriptor::weyl(n, FieldCtx::Rationals)
}

fn ring_or_infer(ring: &Option<String>, exprs: &[&str]) -> Result<RingDescriptor> {
    match ring {
        Some(r) => parse_ring(r),
        None => Ok(infer_weyl_ring(exprs)),
    }
}

fn load_endo(path: &PathBuf) -> Result<EndoFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        col: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_endo_file(&text)
}

fn load_weyl_endo(path: &PathBuf) -> Result<WeylEndo> {
    match load_endo(path)? {
        EndoFile::Weyl(e) => Ok(e),
        _ => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("{} is not a weyl endomorphism file", path.display()),
        }),
    }
}

/// Polynomial endomorphism from a poly or center file, with its display
/// names and whether it is a center file.
fn load_poly_endo(path: &PathBuf) -> Result<(PolyEndo, Vec<String>, bool)> {
    match load_endo(path)? {
        EndoFile::Poly(e) => {
            let names = RingDescriptor::poly(e.n(), e.ctx()).var_names();
            Ok((e, names, false))
        }
        EndoFile::Center(e) => {
            let names = RingDescriptor::center(e.n() / 2, e.ctx()).var_names();
            Ok((e, names, true))
        }
        EndoFile::Weyl(_) => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!(
                "{} is a weyl file; this command needs a polynomial file",
                path.display()
            ),
        }),
    }
}

/// Strips blanks so expressions stay single tokens in records output.
fn compact(s: impl ToString) -> String {
    s.to_string().replace(' ', "")
}

fn parse_side(side: &str) -> Result<Side> {
    match side {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("side must be left or right, got `{other}`"),
        }),
    }
}

fn run(cli: &Cli) -> Result<()> {
    let fmt = cli.format;
    match &cli.command {
        Command::Mul { lhs, rhs, ring } => {
            let ring = ring_or_infer(ring, &[lhs, rhs])?;
            let product = parse_weyl(lhs, &ring)?.mul(&parse_weyl(rhs, &ring)?)?;
            match fmt {
                Format::Text => println!("{product}"),
                Format::Records => println!("op=mul result={}", compact(&product)),
            }
        }
        Command::Deg { expr, ring } => {
            let ring = ring_or_infer(ring, &[expr])?;
            let deg = parse_weyl(expr, &ring)?.degree()?;
            match fmt {
                Format::Text => println!("{deg}"),
                Format::Records => println!("op=deg value={deg}"),
            }
        }
        Command::Commutator { lhs, rhs, ring } => {
            let ring = ring_or_infer(ring, &[lhs, rhs])?;
            let c = parse_weyl(lhs, &ring)?.commutator(&parse_weyl(rhs, &ring)?)?;
            match fmt {
                Format::Text => println!("{c}"),
                Format::Records => println!("op=commutator result={}", compact(&c)),
            }
        }
        Command::Apply { file, expr } => {
            let phi = load_weyl_endo(file)?;
            let ring = RingDescriptor::weyl(phi.n(), phi.ctx());
            let image = phi.apply(&parse_weyl(expr, &ring)?)?;
            match fmt {
                Format::Text => println!("{image}"),
                Format::Records => println!("op=apply result={}", compact(&image)),
            }
        }
        Command::Compose { files } => {
            let endos: Vec<EndoFile> = files.iter().map(load_endo).collect::<Result<_>>()?;
            let rendered = compose_files(&endos)?;
            print!("{rendered}");
        }
        Command::CenterTest { expr, ring } => {
            let ring = parse_ring(ring)?;
            let elem = parse_weyl(expr, &ring)?;
            let central = weylforge::charp::center_test(&elem)?;
            match fmt {
                Format::Text => println!("central: {}", if central { "yes" } else { "no" }),
                Format::Records => {
                    println!(
                        "op=center-test central={}",
                        if central { "yes" } else { "no" }
                    )
                }
            }
        }
        Command::CenterExtract { expr, ring } => {
            let ring = parse_ring(ring)?;
            let elem = parse_weyl(expr, &ring)?;
            let ce = weylforge::charp::center_extract(&elem)?;
            let names = RingDescriptor::center(ring.n, ring.ctx).var_names();
            let rendered = ce.poly().display_with(&names).to_string();
            match fmt {
                Format::Text => println!("{rendered}"),
                Format::Records => println!("op=center-extract result={}", compact(&rendered)),
            }
        }
        Command::RestrictCenter { file } => {
            let phi = load_weyl_endo(file)?;
            let center = weylforge::charp::restrict_center(&phi)?;
            print!("{}", render_center_endo(&center));
        }
        Command::ExpandQp { expr, file } => {
            let phi = load_weyl_endo(file)?;
            let ring = RingDescriptor::weyl(phi.n(), phi.ctx());
            let elem = parse_weyl(expr, &ring)?;
            let expansion = weylforge::charp::expand_qp_basis(&elem, &phi)?;
            let names = RingDescriptor::center(phi.n(), phi.ctx()).var_names();
            for (slot, coeff) in expansion.coeffs() {
                let (alpha, beta) = slot.0.split_at(phi.n());
                let fmt_vec =
                    |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                println!(
                    "c {} | {} = {}",
                    fmt_vec(alpha),
                    fmt_vec(beta),
                    coeff.poly().display_with(&names)
                );
            }
        }
        Command::Jacobian { file } => {
            let (phi, names, _) = load_poly_endo(file)?;
            let det = phi.jacobian_det();
            let rendered = det.display_with(&names).to_string();
            match fmt {
                Format::Text => println!("{rendered}"),
                Format::Records => println!("op=jacobian result={}", compact(&rendered)),
            }
        }
        Command::Etale { file } => {
            let (phi, names, _) = load_poly_endo(file)?;
            let det = phi.jacobian_det();
            let verdict = phi.is_etale_candidate();
            match fmt {
                Format::Text => println!(
                    "etale: {} (jacobian determinant = {})",
                    if verdict { "yes" } else { "no" },
                    det.display_with(&names)
                ),
                Format::Records => println!(
                    "op=etale verdict={} jacobian={}",
                    if verdict { "yes" } else { "no" },
                    compact(det.display_with(&names).to_string())
                ),
            }
        }
        Command::Gb { ring, gens, order } => {
            let ring = parse_ring(ring)?;
            let width = ring.width();
            let polys: Vec<Poly> = gens
                .iter()
                .map(|g| parse_poly(g, &ring))
                .collect::<Result<_>>()?;
            let order = match order.as_str() {
                "lex" => TermOrder::lex(width),
                "grevlex" => TermOrder::grevlex(width),
                other => match other.strip_prefix("elim:") {
                    Some(k) => {
                        let k: usize = k.parse().map_err(|_| Error::Parse {
                            line: 1,
                            col: 1,
                            msg: format!("invalid elimination split `{other}`"),
                        })?;
                        TermOrder::elimination(k, width)
                    }
                    None => {
                        return Err(Error::Parse {
                            line: 1,
                            col: 1,
                            msg: format!("unknown order `{other}`"),
                        })
                    }
                },
            };
            let gb = buchberger(&polys, &order, &GbConfig::default())?;
            print!("{}", render_gb(&gb, &ring.var_names()));
        }
        Command::Minpoly { ring, f, gens } => {
            let ring = parse_ring(ring)?;
            let fp = parse_poly(f, &ring)?;
            let basis: Vec<Poly> = gens
                .iter()
                .map(|g| parse_poly(g, &ring))
                .collect::<Result<_>>()?;
            let names: Vec<String> = std::iter::once("t".to_string())
                .chain((1..=basis.len()).map(|i| format!("t{i}")))
                .collect();
            match minimal_polynomial(&fp, &basis, &GbConfig::default())? {
                MinPolyOutcome::Transcendental => match fmt {
                    Format::Text => println!("transcendental"),
                    Format::Records => println!("op=minpoly result=transcendental"),
                },
                MinPolyOutcome::Polynomial(p) => {
                    let rendered = p.display_with(&names).to_string();
                    match fmt {
                        Format::Text => println!("{rendered}"),
                        Format::Records => println!("op=minpoly result={}", compact(&rendered)),
                    }
                }
            }
        }
        Command::Integral { file } => {
            let (phi, names, _) = load_poly_endo(file)?;
            let outcome = integrality_test(&phi, &GbConfig::default())?;
            print_integrality(&outcome, &names, fmt);
        }
        Command::Invert { file } => {
            let (phi, _, is_center) = load_poly_endo(file)?;
            match verify_gabber_bound(&phi, &GbConfig::default())? {
                GabberOutcome::NotAutomorphism => match fmt {
                    Format::Text => println!("not an automorphism"),
                    Format::Records => println!("op=invert verdict=no"),
                },
                GabberOutcome::Automorphism {
                    degree,
                    inverse_degree,
                    bound,
                    inverse,
                } => {
                    let rendered = if is_center {
                        render_center_endo(&inverse)
                    } else {
                        render_poly_endo(&inverse)
                    };
                    print!("{rendered}");
                    match fmt {
                        Format::Text => println!(
                            "gabber audit: deg(inverse) = {inverse_degree} <= {bound} (deg = {degree})"
                        ),
                        Format::Records => println!(
                            "op=invert verdict=yes degree={degree} inverse_degree={inverse_degree} bound={bound}"
                        ),
                    }
                }
            }
        }
        Command::GabberAudit { file } => {
            let (phi, _, _) = load_poly_endo(file)?;
            match verify_gabber_bound(&phi, &GbConfig::default())? {
                GabberOutcome::NotAutomorphism => match fmt {
                    Format::Text => println!("not an automorphism"),
                    Format::Records => println!("op=gabber-audit verdict=no"),
                },
                GabberOutcome::Automorphism { degree, inverse_degree, bound, .. } => match fmt {
                    Format::Text => println!(
                        "automorphism: deg = {degree}, deg(inverse) = {inverse_degree} <= {bound}"
                    ),
                    Format::Records => println!(
                        "op=gabber-audit verdict=yes degree={degree} inverse_degree={inverse_degree} bound={bound}"
                    ),
                },
            }
        }
        Command::InvboundAudit { files } => {
            if files.len() != 2 {
                return Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: "invbound-audit needs exactly two --file arguments".into(),
                });
            }
            let phi = load_weyl_endo(&files[0])?;
            let psi = load_weyl_endo(&files[1])?;
            let audit = verify_weyl_inverse_bound(&phi, &psi)?;
            match fmt {
                Format::Text => println!(
                    "mutually inverse: deg = {}, deg(inverse) = {} <= {}",
                    audit.degree, audit.inverse_degree, audit.bound
                ),
                Format::Records => println!(
                    "op=invbound-audit verdict=yes degree={} inverse_degree={} bound={}",
                    audit.degree, audit.inverse_degree, audit.bound
                ),
            }
        }
        Command::EtaleWindow { file, primes } => {
            let phi = load_weyl_endo(file)?;
            let records = etale_window_check(&phi, primes)?;
            for r in &records {
                let (status, extra) = match &r.status {
                    EtaleStatus::Etale { asserted: true } => {
                        ("etale", "window=binding".to_string())
                    }
                    EtaleStatus::Etale { asserted: false } => ("etale", "window=free".to_string()),
                    EtaleStatus::NotEtale => ("not-etale", "window=free".to_string()),
                    EtaleStatus::Skipped { reason } => ("skipped", format!("reason={reason}")),
                };
                let deg = r.reduced_degree.map_or("-".to_string(), |d| d.to_string());
                match fmt {
                    Format::Text => {
                        println!("prime {}: {status} (degree {deg}, {extra})", r.prime)
                    }
                    Format::Records => {
                        println!("prime={} status={status} degree={deg} {extra}", r.prime)
                    }
                }
            }
        }
        Command::GenSolve {
            file,
            cutoff,
            gens,
            side,
        } => {
            let phi = load_weyl_endo(file)?;
            let ring = RingDescriptor::weyl(phi.n(), phi.ctx());
            let mut generators = vec![WeylElement::one(phi.n(), phi.ctx())];
            for g in gens {
                let parsed = parse_weyl(g, &ring)?;
                if !parsed.is_one() {
                    generators.push(parsed);
                }
            }
            match generation_solve(&phi, &generators, *cutoff, parse_side(side)?)? {
                Some(cert) => print!("{}", render_generation_certificate(&cert)),
                None => println!("none at cutoff {cutoff}"),
            }
        }
        Command::GenVerify { file, cert } => {
            let phi = load_weyl_endo(file)?;
            let text = std::fs::read_to_string(cert).map_err(|e| Error::Parse {
                line: 0,
                col: 0,
                msg: format!("cannot read {}: {e}", cert.display()),
            })?;
            let certificate = parse_generation_certificate(&text)?;
            let ok = generation_verify(&certificate, &phi)?;
            match fmt {
                Format::Text => println!("verified: {}", if ok { "yes" } else { "no" }),
                Format::Records => {
                    println!("op=gen-verify verdict={}", if ok { "yes" } else { "no" })
                }
            }
        }
        Command::Probe {
            file,
            primes,
            cutoff,
        } => {
            let phi = load_weyl_endo(file)?;
            let report = dixmier_probe(&phi, primes, *cutoff, &GbConfig::default())?;
            match fmt {
                Format::Text => print!("{}", report.render_text()),
                Format::Records => print!("{}", report.render_records()),
            }
        }
    }
    Ok(())
}

/// Composes endomorphism files left to right; all must have the same kind.
fn compose_files(endos: &[EndoFile]) -> Result<String> {
    let mixed = || Error::Parse {
        line: 1,
        col: 1,
        msg: "compose needs files of one kind".into(),
    };
    match &endos[0] {
        EndoFile::Weyl(first) => {
            let mut acc = first.clone();
            for e in &endos[1..] {
                let EndoFile::Weyl(next) = e else {
                    return Err(mixed());
                };
                acc = acc.compose(next)?;
            }
            Ok(render_weyl_endo(&acc))
        }
        EndoFile::Poly(first) => {
            let mut acc = first.clone();
            for e in &endos[1..] {
                let EndoFile::Poly(next) = e else {
                    return Err(mixed());
                };
                acc = acc.compose(next)?;
            }
            Ok(render_poly_endo(&acc))
        }
        EndoFile::Center(first) => {
            let mut acc = first.clone();
            for e in &endos[1..] {
                let EndoFile::Center(next) = e else {
                    return Err(mixed());
                };
                acc = acc.compose(next)?;
            }
            Ok(render_center_endo(&acc))
        }
    }
}

fn print_integrality(outcome: &IntegralityOutcome, names: &[String], fmt: Format) {
    let tnames: Vec<String> = std::iter::once("t".to_string())
        .chain((1..=names.len()).map(|i| format!("t{i}")))
        .collect();
    match outcome {
        IntegralityOutcome::NotIntegral { reason } => match fmt {
            Format::Text => println!("not integral: {reason}"),
            Format::Records => println!("op=integral verdict=no reason={reason}"),
        },
        IntegralityOutcome::Integral(cert) => {
            print_integral_certificate(cert, &tnames, names, fmt);
        }
    }
}

fn print_integral_certificate(
    cert: &IntegralityCertificate,
    tnames: &[String],
    xnames: &[String],
    fmt: Format,
) {
    match fmt {
        Format::Text => {
            println!("integral: yes");
            for (i, v) in cert.per_variable.iter().enumerate() {
                println!(
                    "{}: F = {} (T-degree {} <= {})",
                    xnames[i],
                    v.min_poly.display_with(tnames),
                    v.t_degree,
                    cert.degree_bound
                );
                for c in &v.coefficients {
                    println!(
                        "  T^{}: preimage = {} (degree {} <= {})",
                        c.power,
                        c.preimage.display_with(xnames),
                        c.preimage.degree_or_zero(),
                        cert.preimage_bound
                    );
                }
            }
            println!(
                "audits: degree {}, preimage {}",
                if cert.degree_audit_ok() {
                    "ok"
                } else {
                    "FAILED"
                },
                if cert.preimage_audit_ok() {
                    "ok"
                } else {
                    "FAILED"
                },
            );
        }
        Format::Records => {
            println!(
                "op=integral verdict=yes max_t_degree={} degree_bound={} max_preimage_degree={} preimage_bound={} degree_audit={} preimage_audit={}",
                cert.max_t_degree(),
                cert.degree_bound,
                cert.max_preimage_degree(),
                cert.preimage_bound,
                if cert.degree_audit_ok() { "ok" } else { "failed" },
                if cert.preimage_audit_ok() { "ok" } else { "failed" },
            );
        }
    }
}
