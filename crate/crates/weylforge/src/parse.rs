//! Expression grammar shared by the CLI and the endomorphism file format.
//!
//! ```text
//! expr  := ['-'] term (('+' | '-') term)*
//! term  := coeff ('*'? varpow)*  |  varpow ('*'? varpow)*
//! varpow := var ('^' nat)?
//! coeff := nat | nat '/' nat
//! var   := ('x' | 'd' | 'X' | 'Y') nat
//! ```
//!
//! Which variable letters are legal depends on the ring: Weyl expressions
//! use `x1..xn, d1..dn`, plain polynomials `x1..xn`, and center polynomials
//! `X1..Xn, Y1..Yn`. Weyl input is normalized immediately, so `d1*x1`
//! parses to `x1*d1 + 1`. Printing inverts parsing: terms are emitted in
//! descending graded-lex order, which makes output canonical.

use num_bigint::BigInt;
use std::fmt;

use crate::commpoly::Poly;
use crate::mono::Mono;
use crate::scalars::{FieldCtx, Scalar};
use crate::weyl::WeylElement;
use crate::{Error, Result};

/// Which ring an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    /// Weyl algebra: variables `x1..xn` and `d1..dn`.
    Weyl,
    /// Polynomial ring: variables `x1..xn`.
    Poly,
    /// Center coordinates: variables `X1..Xn` and `Y1..Yn`, a polynomial
    /// ring in `2n` variables.
    Center,
}

/// A ring descriptor: kind, number of variable pairs, coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingDescriptor {
    pub kind: RingKind,
    pub n: usize,
    pub ctx: FieldCtx,
}

impl RingDescriptor {
    pub fn weyl(n: usize, ctx: FieldCtx) -> RingDescriptor {
        RingDescriptor {
            kind: RingKind::Weyl,
            n,
            ctx,
        }
    }

    pub fn poly(n: usize, ctx: FieldCtx) -> RingDescriptor {
        RingDescriptor {
            kind: RingKind::Poly,
            n,
            ctx,
        }
    }

    pub fn center(n: usize, ctx: FieldCtx) -> RingDescriptor {
        RingDescriptor {
            kind: RingKind::Center,
            n,
            ctx,
        }
    }

    /// Number of underlying polynomial variables.
    pub fn width(&self) -> usize {
        match self.kind {
            RingKind::Weyl | RingKind::Center => 2 * self.n,
            RingKind::Poly => self.n,
        }
    }

    /// Variable names in index order.
    pub fn var_names(&self) -> Vec<String> {
        let n = self.n;
        match self.kind {
            RingKind::Weyl => (1..=n)
                .map(|i| format!("x{i}"))
                .chain((1..=n).map(|i| format!("d{i}")))
                .collect(),
            RingKind::Poly => (1..=n).map(|i| format!("x{i}")).collect(),
            RingKind::Center => (1..=n)
                .map(|i| format!("X{i}"))
                .chain((1..=n).map(|i| format!("Y{i}")))
                .collect(),
        }
    }

    /// Maps a variable letter and 1-based index to a variable slot.
    fn var_index(&self, letter: char, idx: usize, pos: (usize, usize)) -> Result<usize> {
        let bad_letter = |msg: &str| Error::Parse {
            line: pos.0,
            col: pos.1,
            msg: msg.to_string(),
        };
        if idx == 0 || idx > self.n {
            return Err(Error::Parse {
                line: pos.0,
                col: pos.1,
                msg: format!("variable index {idx} out of range 1..={}", self.n),
            });
        }
        match (self.kind, letter) {
            (RingKind::Weyl, 'x') => Ok(idx - 1),
            (RingKind::Weyl, 'd') => Ok(self.n + idx - 1),
            (RingKind::Poly, 'x') => Ok(idx - 1),
            (RingKind::Center, 'X') => Ok(idx - 1),
            (RingKind::Center, 'Y') => Ok(self.n + idx - 1),
            _ => Err(bad_letter(&format!(
                "variable letter '{letter}' is not valid in this ring"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Var(char, usize),
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    tok: Tok,
    tok_pos: (usize, usize),
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Result<Lexer<'a>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
            line,
            col: 1,
            tok: Tok::Eof,
            tok_pos: (line, 1),
        };
        lx.advance()?;
        Ok(lx)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.tok_pos.0,
            col: self.tok_pos.1,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.src.get(self.pos).copied();
        if b.is_some() {
            self.pos += 1;
            self.col += 1;
        }
        b
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn read_nat(&mut self, first: u8) -> BigInt {
        let mut digits = vec![first];
        while let Some(b) = self.peek() {
            if b.is_ascii_digit() {
                digits.push(b);
                self.bump();
            } else {
                break;
            }
        }
        let s = std::str::from_utf8(&digits).expect("ascii digits");
        s.parse::<BigInt>().expect("digit string")
    }

    fn advance(&mut self) -> Result<()> {
        while let Some(b) = self.peek() {
            if b == b' ' || b == b'\t' {
                self.bump();
            } else {
                break;
            }
        }
        self.tok_pos = (self.line, self.col);
        let Some(b) = self.bump() else {
            self.tok = Tok::Eof;
            return Ok(());
        };
        self.tok = match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'0'..=b'9' => Tok::Int(self.read_nat(b)),
            b'x' | b'd' | b'X' | b'Y' => {
                let Some(d) = self.peek().filter(u8::is_ascii_digit) else {
                    return Err(
                        self.err(format!("expected a variable index after '{}'", b as char))
                    );
                };
                self.bump();
                let idx = self.read_nat(d);
                let idx =
                    usize::try_from(&idx).map_err(|_| self.err("variable index too large"))?;
                Tok::Var(b as char, idx)
            }
            other => return Err(self.err(format!("unexpected character '{}'", other as char))),
        };
        Ok(())
    }
}

/// One parsed term: a sign, a rational coefficient, and ordered variable
/// factors.
struct RawTerm {
    negative: bool,
    num: BigInt,
    den: BigInt,
    factors: Vec<(usize, u32)>,
}

fn parse_terms(text: &str, ring: &RingDescriptor, line: usize) -> Result<Vec<RawTerm>> {
    let mut lx = Lexer::new(text, line)?;
    let mut terms = Vec::new();
    let mut negative = match lx.tok {
        Tok::Minus => {
            lx.advance()?;
            true
        }
        Tok::Plus => {
            lx.advance()?;
            false
        }
        _ => false,
    };
    loop {
        terms.push(parse_term(&mut lx, ring, negative)?);
        match lx.tok {
            Tok::Eof => break,
            Tok::Plus => {
                negative = false;
                lx.advance()?;
            }
            Tok::Minus => {
                negative = true;
                lx.advance()?;
            }
            _ => return Err(lx.err("expected '+', '-' or end of expression")),
        }
    }
    Ok(terms)
}

fn parse_term(lx: &mut Lexer, ring: &RingDescriptor, negative: bool) -> Result<RawTerm> {
    let mut term = RawTerm {
        negative,
        num: BigInt::from(1),
        den: BigInt::from(1),
        factors: Vec::new(),
    };
    let mut saw_anything = false;
    if let Tok::Int(v) = &lx.tok {
        term.num = v.clone();
        saw_anything = true;
        lx.advance()?;
        if lx.tok == Tok::Slash {
            lx.advance()?;
            let Tok::Int(d) = &lx.tok else {
                return Err(lx.err("expected a denominator after '/'"));
            };
            if num_traits::Zero::is_zero(d) {
                return Err(lx.err("zero denominator"));
            }
            term.den = d.clone();
            lx.advance()?;
        }
    }
    loop {
        // an optional '*' may separate factors
        let starred = lx.tok == Tok::Star;
        if starred {
            lx.advance()?;
        }
        let (letter, idx) = match lx.tok {
            Tok::Var(letter, idx) => (letter, idx),
            _ if starred => return Err(lx.err("expected a variable after '*'")),
            _ => break,
        };
        let pos = lx.tok_pos;
        let slot = ring.var_index(letter, idx, pos)?;
        lx.advance()?;
        let mut exp = 1u32;
        if lx.tok == Tok::Caret {
            lx.advance()?;
            let Tok::Int(e) = &lx.tok else {
                return Err(lx.err("expected an exponent after '^'"));
            };
            exp = u32::try_from(e).map_err(|_| lx.err("exponent too large"))?;
            lx.advance()?;
        }
        term.factors.push((slot, exp));
        saw_anything = true;
    }
    if !saw_anything {
        return Err(lx.err("expected a coefficient or variable"));
    }
    Ok(term)
}

/// Parses a Weyl-algebra expression, normalizing noncommutative input.
pub fn parse_weyl(text: &str, ring: &RingDescriptor) -> Result<WeylElement> {
    parse_weyl_at(text, ring, 1)
}

pub(crate) fn parse_weyl_at(text: &str, ring: &RingDescriptor, line: usize) -> Result<WeylElement> {
    if ring.kind != RingKind::Weyl {
        return Err(Error::Parse {
            line,
            col: 1,
            msg: "this expression needs a weyl ring".into(),
        });
    }
    let terms = parse_terms(text, ring, line)?;
    let n = ring.n;
    let mut out = WeylElement::zero(n, ring.ctx);
    for t in terms {
        let mut coeff = ring.ctx.from_ratio(&t.num, &t.den)?;
        if t.negative {
            coeff = ring.ctx.neg(&coeff);
        }
        let mut elem = WeylElement::constant(n, ring.ctx, coeff);
        for (slot, exp) in t.factors {
            let gen =
                WeylElement::monomial(n, ring.ctx, power_mono(slot, exp, 2 * n), ring.ctx.one());
            elem = elem.mul(&gen)?;
        }
        out = out.add(&elem)?;
    }
    Ok(out)
}

/// Parses a commutative polynomial (plain or center coordinates).
pub fn parse_poly(text: &str, ring: &RingDescriptor) -> Result<Poly> {
    parse_poly_at(text, ring, 1)
}

pub(crate) fn parse_poly_at(text: &str, ring: &RingDescriptor, line: usize) -> Result<Poly> {
    if ring.kind == RingKind::Weyl {
        return Err(Error::Parse {
            line,
            col: 1,
            msg: "this expression needs a commutative ring (poly or center)".into(),
        });
    }
    let terms = parse_terms(text, ring, line)?;
    let width = ring.width();
    let mut out = Poly::zero(width, ring.ctx);
    for t in terms {
        let mut coeff = ring.ctx.from_ratio(&t.num, &t.den)?;
        if t.negative {
            coeff = ring.ctx.neg(&coeff);
        }
        let mut exps = vec![0u32; width];
        for (slot, exp) in t.factors {
            exps[slot] += exp;
        }
        out.add_term(Mono(exps), coeff);
    }
    Ok(out)
}

fn power_mono(slot: usize, exp: u32, width: usize) -> Mono {
    let mut e = vec![0u32; width];
    e[slot] = exp;
    Mono(e)
}

/// Shared term renderer: descending terms, `+`/`-` joiners, `*` between
/// factors, `^` for exponents, unit coefficients omitted.
pub(crate) fn format_terms<'a, I, F>(f: &mut fmt::Formatter<'_>, terms: I, namer: F) -> fmt::Result
where
    I: Iterator<Item = (&'a Mono, &'a Scalar)>,
    F: Fn(&Mono) -> Vec<(String, u32)>,
{
    use num_traits::Signed;
    let mut first = true;
    let mut wrote_any = false;
    for (m, c) in terms {
        let (neg, mag) = match c {
            Scalar::Rat(q) => (q.is_negative(), Scalar::Rat(q.abs())),
            Scalar::Mod(v) => (false, Scalar::Mod(*v)),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let vars = namer(m);
        if vars.is_empty() {
            write!(f, "{mag}")?;
        } else {
            let mut sep = "";
            if !mag.is_one() {
                write!(f, "{mag}")?;
                sep = "*";
            }
            for (name, e) in vars {
                write!(f, "{sep}{name}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                sep = "*";
            }
        }
        wrote_any = true;
    }
    if !wrote_any {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylElement;
    use proptest::prelude::*;

    fn wring(n: usize) -> RingDescriptor {
        RingDescriptor::weyl(n, FieldCtx::Rationals)
    }

    #[test]
    fn normalizes_noncommutative_input() {
        let e = parse_weyl("d1*x1", &wring(1)).unwrap();
        assert_eq!(e.to_string(), "x1*d1 + 1");
    }

    #[test]
    fn zero_and_literals() {
        assert!(parse_weyl("0", &wring(1)).unwrap().is_zero());
        let e = parse_weyl("3*x1^2*d2 - 1/2", &wring(2)).unwrap();
        assert_eq!(e.num_terms(), 2);
        assert_eq!(e.to_string(), "3*x1^2*d2 - 1/2");
        // leading minus and optional stars
        let m = parse_weyl("-x1 + 2 d1", &wring(1)).unwrap();
        assert_eq!(m.to_string(), "-x1 + 2*d1");
    }

    #[test]
    fn position_annotated_errors() {
        let err = parse_weyl("x1 + @", &wring(1)).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                col: 6,
                msg: "unexpected character '@'".into()
            }
        );
        let err = parse_weyl("x3", &wring(2)).unwrap_err();
        assert!(matches!(err, Error::Parse { col: 1, .. }));
        let err = parse_weyl("y1", &wring(1)).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        // poly rings reject the d letter
        let err = parse_poly("d1", &RingDescriptor::poly(1, FieldCtx::Rationals)).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn center_variables() {
        let ring = RingDescriptor::center(2, FieldCtx::prime_field(3).unwrap());
        let p = parse_poly("X1*Y2^2 + 2", &ring).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.display_with(&ring.var_names()).to_string(), "X1*Y2^2 + 2");
    }

    #[test]
    fn mod_p_coefficients_are_canonical() {
        let ring = RingDescriptor::weyl(1, FieldCtx::prime_field(5).unwrap());
        // -1 = 4 and 1/2 = 3 mod 5
        assert_eq!(parse_weyl("-x1", &ring).unwrap().to_string(), "4*x1");
        assert_eq!(parse_weyl("1/2", &ring).unwrap().to_string(), "3");
    }

    fn arb_weyl_element(n: usize) -> impl Strategy<Value = WeylElement> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..4, 2 * n), -9i64..9, 1i64..5),
            0..6,
        )
        .prop_map(move |terms| {
            let ctx = FieldCtx::Rationals;
            let mut e = WeylElement::zero(n, ctx);
            for (exps, num, den) in terms {
                let c = ctx
                    .from_ratio(&num.into(), &den.into())
                    .expect("nonzero denominator");
                e.add_term(Mono(exps), c);
            }
            e
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in arb_weyl_element(2)) {
            let ring = wring(2);
            let back = parse_weyl(&e.to_string(), &ring).unwrap();
            prop_assert_eq!(back, e);
        }
    }
}
