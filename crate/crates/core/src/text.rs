//! Text forms shared by the CLI and by configuration: expression parsing for
//! elements, skew polynomials and point sequences, plus the ring-spec
//! mini-language that selects and configures a coefficient ring.
//!
//! The expression grammar is whitespace-insensitive. A sum joins terms with
//! `+` and `-`; a term is a product of factors where `*` is optional
//! (juxtaposition multiplies, so `2g` and `2*g` agree) and `/` multiplies by
//! the inverse of a nonzero constant on the right; a factor is an atom with
//! an optional `^` and a non-negative integer exponent. Atoms are integer
//! literals, single-letter ring symbols (`g`, `i`, `j`, `k`, `z`), the
//! indeterminate `x` in polynomial contexts, and parenthesized
//! subexpressions. Multiplication order is preserved, so twisted products
//! such as `x*g` expand through the commutation rule exactly.
//!
//! Parse errors carry the byte offset of the failure and a description of
//! what was expected there. Printing (`format_elem`, `format_poly`) and
//! parsing are mutually inverse on canonical forms.

use crate::error::{Error, Result};
use crate::multiplicity::MultSeq;
use crate::poly::{SkewPoly, SkewPolyRing};
use crate::ring::SkewRing;
use crate::rings::{FiniteField, GaussianRationals, Quaternions, RatFunField};

/// Exponents above this are rejected while parsing, before any arithmetic,
/// so that a typo cannot allocate an enormous polynomial.
const MAX_EXPONENT: usize = 4096;

/// Parses a skew polynomial in `x`, e.g. `"x^2 + 2"` or `"(2+g)*x^3 + x + 1"`.
pub fn parse_poly<R: SkewRing>(ring: &SkewPolyRing<R>, text: &str) -> Result<SkewPoly<R>> {
    parse_with(ring, text, 0, 'x', true)
}

/// Parses a coefficient-ring element, e.g. `"2+g"`, `"1-2i+3j-4k"`, or
/// `"(z^2+1)/(z)"`. The indeterminate `x` is not available here.
pub fn parse_element<R: SkewRing>(ring: &SkewPolyRing<R>, text: &str) -> Result<R::Elem> {
    let p = parse_with(ring, text, 0, 'x', false)?;
    Ok(constant_of(ring, &p))
}

/// Parses a `;`-separated element list in brackets, e.g. `"[2*g; 2*g]"`.
/// The empty list `"[]"` is allowed here; sequence construction rejects it.
pub fn parse_element_list<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    text: &str,
) -> Result<Vec<R::Elem>> {
    let mut p = Parser { ring, src: text, pos: 0, var: 'x', allow_var: false };
    p.skip_ws();
    p.expect('[', "'['")?;
    let mut out = Vec::new();
    if !p.eat(']') {
        loop {
            let e = p.parse_expr()?;
            out.push(constant_of(ring, &e));
            p.skip_ws();
            if p.eat(';') {
                continue;
            }
            p.expect(']', "';' or ']'")?;
            break;
        }
    }
    p.expect_end()?;
    Ok(out)
}

/// Parses a point sequence literal into an (unvalidated) [`MultSeq`].
pub fn parse_seq<R: SkewRing>(ring: &SkewPolyRing<R>, text: &str) -> Result<MultSeq<R>> {
    let points = parse_element_list(ring, text)?;
    MultSeq::new(ring, points)
}

fn parse_with<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    text: &str,
    base: usize,
    var: char,
    allow_var: bool,
) -> Result<SkewPoly<R>> {
    let mut p = Parser { ring, src: text, pos: 0, var, allow_var };
    let result = (|| {
        let e = p.parse_expr()?;
        p.expect_end()?;
        Ok(e)
    })();
    result.map_err(|e| offset_error(e, base))
}

fn constant_of<R: SkewRing>(ring: &SkewPolyRing<R>, p: &SkewPoly<R>) -> R::Elem {
    debug_assert!(p.degree().finite().unwrap_or(0) == 0);
    p.coeffs().first().cloned().unwrap_or_else(|| ring.ring().zero())
}

fn offset_error(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { position, expected } => {
            Error::Parse { position: position + base, expected }
        }
        other => other,
    }
}

struct Parser<'a, R: SkewRing> {
    ring: &'a SkewPolyRing<R>,
    src: &'a str,
    pos: usize,
    var: char,
    allow_var: bool,
}

impl<'a, R: SkewRing> Parser<'a, R> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &str) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, expected))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "end of input"))
        }
    }

    fn parse_uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| Error::parse(start, "an integer literal in range"))?;
            self.bump();
        }
        if self.pos == start {
            return Err(Error::parse(start, "a digit"));
        }
        Ok(value)
    }

    fn parse_expr(&mut self) -> Result<SkewPoly<R>> {
        let mut acc = self.parse_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<SkewPoly<R>> {
        let mut negate = false;
        while self.eat('-') {
            negate = !negate;
        }
        let mut acc = self.parse_factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    let f = self.parse_factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                Some('/') => {
                    self.bump();
                    self.skip_ws();
                    let at = self.pos;
                    let f = self.parse_factor()?;
                    let inv = self.invert_constant(&f, at)?;
                    acc = self.ring.mul(&acc, &inv);
                }
                // Juxtaposition: an atom starting right here continues the
                // product, so "2g", "3/2i" and "(1+i)(1-i)" all parse.
                Some(c) if c.is_alphanumeric() || c == '(' => {
                    let f = self.parse_factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                _ => break,
            }
        }
        if negate {
            acc = self.ring.neg(&acc);
        }
        Ok(acc)
    }

    fn invert_constant(&self, f: &SkewPoly<R>, at: usize) -> Result<SkewPoly<R>> {
        if f.degree().finite() != Some(0) {
            return Err(Error::parse(at, "a nonzero constant divisor"));
        }
        let inv = self
            .ring
            .ring()
            .inv(&f.coeffs()[0])
            .map_err(|_| Error::parse(at, "a nonzero constant divisor"))?;
        Ok(self.ring.constant(inv))
    }

    fn parse_factor(&mut self) -> Result<SkewPoly<R>> {
        let mut acc = self.parse_atom()?;
        while self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let e = self.parse_uint()?;
            if e as usize > MAX_EXPONENT {
                return Err(Error::parse(at, "an exponent of at most 4096"));
            }
            acc = self.ring.pow(&acc, e as usize);
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<SkewPoly<R>> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.parse_expr()?;
                self.expect(')', "')'")?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.parse_uint()?;
                let n = i64::try_from(v)
                    .map_err(|_| Error::parse(at, "an integer literal in range"))?;
                Ok(self.ring.constant(self.ring.ring().from_int(n)))
            }
            Some(c) if c == self.var && self.allow_var => {
                self.bump();
                Ok(self.ring.x())
            }
            Some(c) if c.is_alphabetic() => match self.ring.ring().symbol_elem(c) {
                Some(e) => {
                    self.bump();
                    Ok(self.ring.constant(e))
                }
                None => Err(Error::parse(at, "a symbol recognized by this ring")),
            },
            _ => Err(Error::parse(at, "an expression atom")),
        }
    }
}

/// A coefficient ring chosen at runtime from a ring-spec string.
#[derive(Debug, Clone)]
pub enum AnyRing {
    Finite(FiniteField),
    Quat(Quaternions),
    Gauss(GaussianRationals),
    RatFun(RatFunField),
}

/// Parses a ring spec:
///
/// ```text
/// gf(p)  |  gf(p^m; mod=<monic polynomial in g over F_p>; frob=s)
/// quat   |  gaussian  |  ratfun(p)  |  ratfun(p; c=<rational function in z>)
/// ```
///
/// `frob` defaults to 1 (the `p`-power Frobenius) and `c` to 1. Syntax
/// failures report a byte offset; a spec that parses but names an invalid
/// ring (composite characteristic, reducible modulus) reports `InvalidRing`.
pub fn parse_ring(spec: &str) -> Result<AnyRing> {
    let mut s = SpecScanner { src: spec, pos: 0 };
    s.skip_ws();
    let name = s.ident();
    match name.as_str() {
        "quat" => {
            s.end()?;
            Ok(AnyRing::Quat(Quaternions::new()))
        }
        "gaussian" => {
            s.end()?;
            Ok(AnyRing::Gauss(GaussianRationals::new()))
        }
        "gf" => parse_gf(&mut s),
        "ratfun" => parse_ratfun(&mut s),
        _ => Err(Error::parse(
            s.pos - name.len(),
            "a ring spec: gf(...), quat, gaussian, or ratfun(...)",
        )),
    }
}

fn parse_gf(s: &mut SpecScanner) -> Result<AnyRing> {
    s.expect('(')?;
    let p = s.uint()?;
    let m = if s.eat('^') { s.uint()? as usize } else { 1 };
    let mut modulus: Option<(usize, &str)> = None;
    let mut frob: Option<usize> = None;
    while s.eat(';') {
        s.skip_ws();
        let at = s.pos;
        let key = s.ident();
        s.expect('=')?;
        match key.as_str() {
            "mod" => modulus = Some(s.value_slice()),
            "frob" => frob = Some(s.uint()? as usize),
            _ => return Err(Error::parse(at, "'mod' or 'frob'")),
        }
    }
    s.expect(')')?;
    s.end()?;

    let coeffs = match modulus {
        Some((base, text)) => {
            let fp = SkewPolyRing::new(FiniteField::prime(p)?);
            let poly = parse_with(&fp, text, base, 'g', true)?;
            poly.coeffs().iter().map(|e| e.coeffs().first().copied().unwrap_or(0)).collect()
        }
        None if m == 1 => vec![0, 1],
        None => return Err(Error::parse(s.pos, "mod=<defining polynomial> for an extension")),
    };
    Ok(AnyRing::Finite(FiniteField::new(p, m, &coeffs, frob.unwrap_or(1))?))
}

fn parse_ratfun(s: &mut SpecScanner) -> Result<AnyRing> {
    s.expect('(')?;
    let p = s.uint()?;
    let mut scale: Option<(usize, &str)> = None;
    while s.eat(';') {
        s.skip_ws();
        let at = s.pos;
        let key = s.ident();
        s.expect('=')?;
        match key.as_str() {
            "c" => scale = Some(s.value_slice()),
            _ => return Err(Error::parse(at, "'c'")),
        }
    }
    s.expect(')')?;
    s.end()?;

    let plain = RatFunField::standard(p)?;
    match scale {
        None => Ok(AnyRing::RatFun(plain)),
        Some((base, text)) => {
            let ring = SkewPolyRing::new(plain);
            let c = parse_with(&ring, text, base, 'x', false)?;
            let c = constant_of(&ring, &c);
            Ok(AnyRing::RatFun(RatFunField::new(p, c.num(), c.den())?))
        }
    }
}

/// Cursor over a ring-spec string; the nested `mod=`/`c=` values are sliced
/// out verbatim (respecting parentheses) and handed to the expression parser.
struct SpecScanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> SpecScanner<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("'{c}'")))
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "end of ring spec"))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphabetic()) {
            self.bump();
        }
        self.src[start..self.pos].to_string()
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| Error::parse(start, "an integer literal in range"))?;
            self.bump();
        }
        if self.pos == start {
            return Err(Error::parse(start, "a digit"));
        }
        Ok(value)
    }

    /// The raw text of a `key=` value: everything up to the next `;` or `)`
    /// at parenthesis depth zero. Returns the value's byte offset and slice.
    fn value_slice(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(c) = self.peek() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                ';' if depth == 0 => break,
                _ => {}
            }
            self.bump();
        }
        (start, self.src[start..self.pos].trim_end())
    }
}
