//! File formats: endomorphism files, generation-certificate files, and
//! line-oriented reports.
//!
//! An endomorphism file has a one-line header and one image line per
//! generator:
//!
//! ```text
//! ring weyl n=1 char=0
//! x1 -> x1
//! d1 -> d1 + x1^2
//! ```
//!
//! Polynomial endomorphisms use `ring poly` and only `x` lines. Weyl
//! files are validated against the commutation relations on load. Blank
//! lines are ignored; everything else is an error with its line number.

use std::collections::BTreeMap;

use crate::commpoly::{Poly, PolyEndo};
use crate::endoscope::{GenerationCertificate, Side};
use crate::groebner::GroebnerBasis;
use crate::parse::{parse_poly_at, parse_weyl_at, RingDescriptor, RingKind};
use crate::scalars::FieldCtx;
use crate::weyl::{WeylElement, WeylEndo};
use crate::{Error, Result};

/// A parsed endomorphism file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoFile {
    Weyl(WeylEndo),
    Poly(PolyEndo),
    /// A polynomial endomorphism of center coordinates: `2n` underlying
    /// variables named `X1..Xn, Y1..Yn`, as produced by `restrict-center`.
    Center(PolyEndo),
}

impl EndoFile {
    pub fn ctx(&self) -> FieldCtx {
        match self {
            EndoFile::Weyl(e) => e.ctx(),
            EndoFile::Poly(e) | EndoFile::Center(e) => e.ctx(),
        }
    }

    /// Variable names matching the file kind.
    pub fn poly_var_names(&self) -> Vec<String> {
        match self {
            EndoFile::Weyl(e) => RingDescriptor::weyl(e.n(), e.ctx()).var_names(),
            EndoFile::Poly(e) => RingDescriptor::poly(e.n(), e.ctx()).var_names(),
            EndoFile::Center(e) => RingDescriptor::center(e.n() / 2, e.ctx()).var_names(),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

fn parse_key_value(token: &str, key: &str, line: usize) -> Result<u64> {
    let Some(rest) = token.strip_prefix(key) else {
        return Err(err(
            line,
            format!("expected `{key}<value>`, found `{token}`"),
        ));
    };
    rest.parse::<u64>()
        .map_err(|_| err(line, format!("invalid value in `{token}`")))
}

fn parse_ctx(token: &str, line: usize) -> Result<FieldCtx> {
    let c = parse_key_value(token, "char=", line)?;
    if c == 0 {
        Ok(FieldCtx::Rationals)
    } else {
        FieldCtx::prime_field(c)
    }
}

/// Parses an endomorphism file; Weyl files must satisfy the commutation
/// relations.
pub fn parse_endo_file(text: &str) -> Result<EndoFile> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| err(1, "empty file"))?;
    let header_line = header_no + 1;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "ring" {
        return Err(err(
            header_line,
            "header must be `ring (weyl|poly) n=<int> char=(0|<prime>)`",
        ));
    }
    let kind = match tokens[1] {
        "weyl" => RingKind::Weyl,
        "poly" => RingKind::Poly,
        "center" => RingKind::Center,
        other => return Err(err(header_line, format!("unknown ring kind `{other}`"))),
    };
    let n = parse_key_value(tokens[2], "n=", header_line)? as usize;
    if n == 0 {
        return Err(err(header_line, "n must be positive"));
    }
    let ctx = parse_ctx(tokens[3], header_line)?;
    let ring = RingDescriptor { kind, n, ctx };
    // image slots: x then (weyl) d or (center) Y
    let slots = ring.width();
    let mut ximg: Vec<Option<WeylElement>> = vec![None; n];
    let mut dimg: Vec<Option<WeylElement>> = vec![None; n];
    let mut pimg: Vec<Option<Poly>> = vec![None; slots];
    for (no, raw) in lines {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(err(line_no, "image line must be `x<i> -> <expr>`"));
        };
        let lhs = lhs.trim();
        let (letter, idx) = split_generator(lhs, line_no)?;
        if idx == 0 || idx > n {
            return Err(err(
                line_no,
                format!("generator index {idx} out of range 1..={n}"),
            ));
        }
        match (kind, letter) {
            (RingKind::Weyl, 'x') => {
                let e = parse_weyl_at(rhs.trim(), &ring, line_no)?;
                if ximg[idx - 1].replace(e).is_some() {
                    return Err(err(line_no, format!("duplicate image for x{idx}")));
                }
            }
            (RingKind::Weyl, 'd') => {
                let e = parse_weyl_at(rhs.trim(), &ring, line_no)?;
                if dimg[idx - 1].replace(e).is_some() {
                    return Err(err(line_no, format!("duplicate image for d{idx}")));
                }
            }
            (RingKind::Poly, 'x') | (RingKind::Center, 'X') | (RingKind::Center, 'Y') => {
                let e = parse_poly_at(rhs.trim(), &ring, line_no)?;
                let slot = if letter == 'Y' { n + idx - 1 } else { idx - 1 };
                if pimg[slot].replace(e).is_some() {
                    return Err(err(line_no, format!("duplicate image for {lhs}")));
                }
            }
            _ => {
                return Err(err(
                    line_no,
                    format!("generator `{lhs}` is not valid in this ring"),
                ))
            }
        }
    }
    match kind {
        RingKind::Weyl => {
            let ximg = collect_images(ximg, 'x')?;
            let dimg = collect_images(dimg, 'd')?;
            Ok(EndoFile::Weyl(WeylEndo::new(ximg, dimg)?))
        }
        RingKind::Poly => {
            let img = collect_images(pimg, 'x')?;
            Ok(EndoFile::Poly(PolyEndo::new(img)?))
        }
        RingKind::Center => {
            let img = pimg
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    p.ok_or_else(|| {
                        let name = if i < n {
                            format!("X{}", i + 1)
                        } else {
                            format!("Y{}", i - n + 1)
                        };
                        err(1, format!("missing image for {name}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(EndoFile::Center(PolyEndo::new(img)?))
        }
    }
}

fn split_generator(lhs: &str, line_no: usize) -> Result<(char, usize)> {
    let mut chars = lhs.chars();
    let letter = chars
        .next()
        .ok_or_else(|| err(line_no, "missing generator on image line"))?;
    let idx: usize = chars
        .as_str()
        .parse()
        .map_err(|_| err(line_no, format!("invalid generator `{lhs}`")))?;
    Ok((letter, idx))
}

fn collect_images<T>(imgs: Vec<Option<T>>, letter: char) -> Result<Vec<T>> {
    imgs.into_iter()
        .enumerate()
        .map(|(i, img)| img.ok_or_else(|| err(1, format!("missing image for {letter}{}", i + 1))))
        .collect()
}

/// Canonical rendering; `parse_endo_file` inverts it.
pub fn render_weyl_endo(phi: &WeylEndo) -> String {
    let mut out = format!(
        "ring weyl n={} char={}\n",
        phi.n(),
        phi.ctx().characteristic()
    );
    for (i, img) in phi.ximg().iter().enumerate() {
        out.push_str(&format!("x{} -> {img}\n", i + 1));
    }
    for (i, img) in phi.dimg().iter().enumerate() {
        out.push_str(&format!("d{} -> {img}\n", i + 1));
    }
    out
}

/// Canonical rendering of a polynomial endomorphism file.
pub fn render_poly_endo(phi: &PolyEndo) -> String {
    let names: Vec<String> = (1..=phi.n()).map(|i| format!("x{i}")).collect();
    let mut out = format!(
        "ring poly n={} char={}\n",
        phi.n(),
        phi.ctx().characteristic()
    );
    for (i, img) in phi.img().iter().enumerate() {
        out.push_str(&format!("x{} -> {}\n", i + 1, img.display_with(&names)));
    }
    out
}

/// Canonical rendering of a center endomorphism (`2n` variables named
/// `X1..Xn, Y1..Yn`).
pub fn render_center_endo(phi: &PolyEndo) -> String {
    let n = phi.n() / 2;
    debug_assert_eq!(2 * n, phi.n(), "center endomorphisms live in 2n variables");
    let names = RingDescriptor::center(n, phi.ctx()).var_names();
    let mut out = format!("ring center n={n} char={}\n", phi.ctx().characteristic());
    for (i, img) in phi.img().iter().enumerate() {
        out.push_str(&format!("{} -> {}\n", names[i], img.display_with(&names)));
    }
    out
}

/// Line-oriented report for a Groebner basis: header lines then one
/// generator per line.
pub fn render_gb(gb: &GroebnerBasis, names: &[String]) -> String {
    let mut out = String::new();
    out.push_str(&format!("order={}\n", gb.order));
    out.push_str(&format!("input_degree={}\n", gb.input_degree));
    out.push_str(&format!("max_degree={}\n", gb.max_degree));
    for g in &gb.generators {
        out.push_str(&format!("{}\n", g.display_with(names)));
    }
    out
}

/// Renders a generation certificate; zero coefficients are omitted.
pub fn render_generation_certificate(cert: &GenerationCertificate) -> String {
    let ctx = cert.generators[0].ctx();
    let n = cert.xcoeffs.len();
    let m = cert.generators.len();
    let mut out = format!(
        "generation side={} n={} m={} cutoff={} char={}\n",
        cert.side,
        n,
        m,
        cert.cutoff,
        ctx.characteristic()
    );
    for (k, g) in cert.generators.iter().enumerate() {
        out.push_str(&format!("g{} = {g}\n", k + 1));
    }
    for (name, block) in [("a", &cert.xcoeffs), ("b", &cert.dcoeffs)] {
        for (i, row) in block.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                for (l, coeff) in cell.iter().enumerate() {
                    if !coeff.is_zero() {
                        out.push_str(&format!("{name}{}.{}.{} = {coeff}\n", i + 1, j + 1, l + 1));
                    }
                }
            }
        }
    }
    out
}

/// Parses a generation-certificate file produced by
/// [`render_generation_certificate`].
pub fn parse_generation_certificate(text: &str) -> Result<GenerationCertificate> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| err(1, "empty file"))?;
    let header_line = header_no + 1;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 6 || tokens[0] != "generation" {
        return Err(err(
            header_line,
            "header must be `generation side=<s> n=<int> m=<int> cutoff=<int> char=<c>`",
        ));
    }
    let side = match tokens[1] {
        "side=left" => Side::Left,
        "side=right" => Side::Right,
        other => return Err(err(header_line, format!("unknown side `{other}`"))),
    };
    let n = parse_key_value(tokens[2], "n=", header_line)? as usize;
    let m = parse_key_value(tokens[3], "m=", header_line)? as usize;
    let cutoff = parse_key_value(tokens[4], "cutoff=", header_line)?;
    let ctx = parse_ctx(tokens[5], header_line)?;
    if n == 0 || m == 0 {
        return Err(err(header_line, "n and m must be positive"));
    }
    let ring = RingDescriptor::weyl(n, ctx);
    let zero = WeylElement::zero(n, ctx);
    let mut generators: Vec<Option<WeylElement>> = vec![None; m];
    let mut acoeffs: BTreeMap<(usize, usize, usize), WeylElement> = BTreeMap::new();
    let mut bcoeffs: BTreeMap<(usize, usize, usize), WeylElement> = BTreeMap::new();
    for (no, raw) in lines {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some((lhs, rhs)) = line.split_once('=') else {
            return Err(err(line_no, "expected `<slot> = <expr>`"));
        };
        let lhs = lhs.trim();
        let expr = parse_weyl_at(rhs.trim(), &ring, line_no)?;
        if let Some(rest) = lhs.strip_prefix('g') {
            let k: usize = rest
                .parse()
                .map_err(|_| err(line_no, format!("invalid generator slot `{lhs}`")))?;
            if k == 0 || k > m {
                return Err(err(line_no, format!("generator slot {k} out of range")));
            }
            if generators[k - 1].replace(expr).is_some() {
                return Err(err(line_no, format!("duplicate generator g{k}")));
            }
        } else if let Some(rest) = lhs.strip_prefix('a') {
            let key = parse_slot(rest, n, m, line_no)?;
            acoeffs.insert(key, expr);
        } else if let Some(rest) = lhs.strip_prefix('b') {
            let key = parse_slot(rest, n, m, line_no)?;
            bcoeffs.insert(key, expr);
        } else {
            return Err(err(line_no, format!("unknown slot `{lhs}`")));
        }
    }
    let generators = generators
        .into_iter()
        .enumerate()
        .map(|(k, g)| g.ok_or_else(|| err(1, format!("missing generator g{}", k + 1))))
        .collect::<Result<Vec<_>>>()?;
    let build = |map: &BTreeMap<(usize, usize, usize), WeylElement>| {
        (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        (0..m)
                            .map(|l| map.get(&(i, j, l)).cloned().unwrap_or_else(|| zero.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    Ok(GenerationCertificate {
        side,
        generators,
        xcoeffs: build(&acoeffs),
        dcoeffs: build(&bcoeffs),
        cutoff,
    })
}

fn parse_slot(rest: &str, n: usize, m: usize, line_no: usize) -> Result<(usize, usize, usize)> {
    let parts: Vec<&str> = rest.split('.').collect();
    if parts.len() != 3 {
        return Err(err(line_no, "coefficient slot must be `<i>.<j>.<l>`"));
    }
    let parse = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| err(line_no, format!("invalid slot index `{s}`")))
    };
    let (i, j, l) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
    if i == 0 || i > n || j == 0 || j > m || l == 0 || l > m {
        return Err(err(line_no, format!("slot {i}.{j}.{l} out of range")));
    }
    Ok((i - 1, j - 1, l - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endoscope::generation_solve;

    #[test]
    fn weyl_file_round_trip() {
        let text = "ring weyl n=1 char=0\nx1 -> x1\nd1 -> x1^2 + d1\n";
        let EndoFile::Weyl(phi) = parse_endo_file(text).unwrap() else {
            panic!("expected a weyl file")
        };
        assert_eq!(phi.degree(), 2);
        assert_eq!(render_weyl_endo(&phi), text);
    }

    #[test]
    fn poly_file_round_trip() {
        let text = "ring poly n=2 char=5\nx1 -> 3*x2^2 + x1\nx2 -> x2\n";
        let EndoFile::Poly(phi) = parse_endo_file(text).unwrap() else {
            panic!("expected a poly file")
        };
        assert_eq!(render_poly_endo(&phi), text);
    }

    #[test]
    fn center_file_round_trip() {
        let text = "ring center n=1 char=2\nX1 -> X1^2 + X1\nY1 -> Y1\n";
        let EndoFile::Center(phi) = parse_endo_file(text).unwrap() else {
            panic!("expected a center file")
        };
        assert_eq!(phi.n(), 2);
        assert_eq!(render_center_endo(&phi), text);
    }

    #[test]
    fn relations_checked_on_load() {
        let text = "ring weyl n=1 char=0\nx1 -> x1^2\nd1 -> d1\n";
        assert_eq!(parse_endo_file(text).unwrap_err(), Error::RelationViolation);
    }

    #[test]
    fn header_and_line_errors() {
        assert!(matches!(
            parse_endo_file("ring weyl n=1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let text = "ring weyl n=1 char=0\nx1 -> x1\nx1 -> x1\n";
        assert!(matches!(
            parse_endo_file(text),
            Err(Error::Parse { line: 3, .. })
        ));
        let text = "ring weyl n=1 char=0\nx1 -> x1\nd1 -> d1 + @\n";
        assert!(matches!(
            parse_endo_file(text),
            Err(Error::Parse {
                line: 3,
                col: 6,
                ..
            })
        ));
        let text = "ring poly n=1 char=0\nd1 -> x1\n";
        assert!(matches!(
            parse_endo_file(text),
            Err(Error::Parse { line: 2, .. })
        ));
        // missing image
        let text = "ring weyl n=1 char=0\nx1 -> x1\n";
        assert!(parse_endo_file(text).is_err());
    }

    #[test]
    fn certificate_round_trip() {
        let q = FieldCtx::Rationals;
        let x = WeylElement::gen_x(1, q, 0);
        let d = WeylElement::gen_d(1, q, 0);
        let phi = WeylEndo::new(vec![x.clone()], vec![d.add(&x.pow(2).unwrap()).unwrap()]).unwrap();
        let gens = vec![WeylElement::one(1, q)];
        let cert = generation_solve(&phi, &gens, 2, Side::Left)
            .unwrap()
            .unwrap();
        let text = render_generation_certificate(&cert);
        let back = parse_generation_certificate(&text).unwrap();
        assert_eq!(back, cert);
    }
}
