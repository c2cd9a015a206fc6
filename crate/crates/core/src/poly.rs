//! Skew polynomials F[x; sigma, delta] with left coefficients and the
//! commutation rule `x * a = sigma(a) * x + delta(a)`.
//!
//! [`SkewPolyRing`] is the context object wrapping a coefficient ring; a
//! [`SkewPoly`] is plain coefficient data (ascending powers, trailing zeros
//! trimmed, zero = no coefficients). Right division always works; left
//! division needs the twist to be invertible. Degrees use [`Degree`] so the
//! zero polynomial can sit strictly below all others.

use crate::error::{Error, Result};
use crate::ring::SkewRing;

/// Degree with a bottom element for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Dense skew polynomial: `coeffs[i]` multiplies `x^i` from the left.
#[derive(Debug, Clone)]
pub struct SkewPoly<R: SkewRing> {
    coeffs: Vec<R::Elem>,
}

// Manual impls: the derived ones would demand the bounds on `R` itself, but
// only the coefficient data participates.
impl<R: SkewRing> PartialEq for SkewPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: SkewRing> Eq for SkewPoly<R> {}

impl<R: SkewRing> std::hash::Hash for SkewPoly<R> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<R: SkewRing> SkewPoly<R> {
    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn leading(&self) -> &R::Elem {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }
}

/// The skew polynomial ring over a coefficient ring, with every operation
/// taking the context by reference.
#[derive(Debug, Clone)]
pub struct SkewPolyRing<R: SkewRing> {
    ring: R,
}

impl<R: SkewRing> SkewPolyRing<R> {
    pub fn new(ring: R) -> Self {
        SkewPolyRing { ring }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    // ---- Constructors ----

    /// Polynomial from ascending coefficients (trailing zeros trimmed).
    pub fn poly(&self, mut coeffs: Vec<R::Elem>) -> SkewPoly<R> {
        while coeffs.last().map(|c| self.ring.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero_poly(&self) -> SkewPoly<R> {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one_poly(&self) -> SkewPoly<R> {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, c: R::Elem) -> SkewPoly<R> {
        self.poly(vec![c])
    }

    pub fn x(&self) -> SkewPoly<R> {
        self.monomial(self.ring.one(), 1)
    }

    /// `c * x^d`.
    pub fn monomial(&self, c: R::Elem, d: usize) -> SkewPoly<R> {
        if self.ring.is_zero(&c) {
            return self.zero_poly();
        }
        let mut coeffs = vec![self.ring.zero(); d + 1];
        coeffs[d] = c;
        SkewPoly { coeffs }
    }

    /// The monic linear polynomial `x - a`.
    pub fn linear(&self, a: &R::Elem) -> SkewPoly<R> {
        SkewPoly { coeffs: vec![self.ring.neg(a), self.ring.one()] }
    }

    /// `(x - a_r) * ... * (x - a_1)` for the tuple `(a_1, ..., a_r)`: the
    /// factor of the *first* point sits rightmost.
    pub fn seq_poly(&self, points: &[R::Elem]) -> Result<SkewPoly<R>> {
        if points.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut acc = self.one_poly();
        for a in points {
            acc = self.mul(&self.linear(a), &acc);
        }
        Ok(acc)
    }

    // ---- Additive structure ----

    pub fn add(&self, f: &SkewPoly<R>, g: &SkewPoly<R>) -> SkewPoly<R> {
        let n = f.coeffs.len().max(g.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = f.coeffs.get(i);
            let b = g.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => self.ring.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        self.poly(out)
    }

    pub fn neg(&self, f: &SkewPoly<R>) -> SkewPoly<R> {
        SkewPoly { coeffs: f.coeffs.iter().map(|c| self.ring.neg(c)).collect() }
    }

    pub fn sub(&self, f: &SkewPoly<R>, g: &SkewPoly<R>) -> SkewPoly<R> {
        self.add(f, &self.neg(g))
    }

    // ---- Multiplicative structure ----

    /// Left scaling by a constant: coefficients become `c * f_i`.
    pub fn scale_left(&self, c: &R::Elem, f: &SkewPoly<R>) -> SkewPoly<R> {
        if self.ring.is_zero(c) {
            return self.zero_poly();
        }
        SkewPoly { coeffs: f.coeffs.iter().map(|fi| self.ring.mul(c, fi)).collect() }
    }

    /// `x * f`, pushing the twist and derivation through every coefficient.
    fn x_mul(&self, f: &SkewPoly<R>) -> SkewPoly<R> {
        let r = &self.ring;
        let mut out = vec![r.zero(); f.coeffs.len() + 1];
        for (j, c) in f.coeffs.iter().enumerate() {
            out[j + 1] = r.add(&out[j + 1], &r.sigma(c));
            out[j] = r.add(&out[j], &r.delta(c));
        }
        self.poly(out)
    }

    pub fn mul(&self, f: &SkewPoly<R>, g: &SkewPoly<R>) -> SkewPoly<R> {
        let mut acc = self.zero_poly();
        let mut shifted = g.clone(); // x^i * g as i advances
        for (i, fi) in f.coeffs.iter().enumerate() {
            if i > 0 {
                shifted = self.x_mul(&shifted);
            }
            if !self.ring.is_zero(fi) {
                acc = self.add(&acc, &self.scale_left(fi, &shifted));
            }
        }
        acc
    }

    /// `f^n` by repeated multiplication (`f^0 = 1`).
    pub fn pow(&self, f: &SkewPoly<R>, n: usize) -> SkewPoly<R> {
        let mut acc = self.one_poly();
        for _ in 0..n {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Left scaling by the inverse of the leading coefficient (zero stays zero).
    pub fn monic(&self, f: &SkewPoly<R>) -> SkewPoly<R> {
        if f.is_zero() {
            return self.zero_poly();
        }
        let c = self.ring.inv(f.leading()).expect("leading coefficient is nonzero");
        self.scale_left(&c, f)
    }

    // ---- Euclidean structure ----

    /// Right division `f = q * p + r` with `deg r < deg p`. Always available.
    pub fn right_divmod(&self, f: &SkewPoly<R>, p: &SkewPoly<R>) -> Result<(SkewPoly<R>, SkewPoly<R>)> {
        if p.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let e = p.degree().finite().unwrap();
        let pe = p.leading().clone();
        let mut rem = f.clone();
        let mut quo = self.zero_poly();
        while let Degree::Finite(d) = rem.degree() {
            if d < e {
                break;
            }
            let k = d - e;
            // Kill the x^d term: (c x^k) * p has leading c * sigma^k(p_e).
            let mut t = pe.clone();
            for _ in 0..k {
                t = self.ring.sigma(&t);
            }
            let c = self.ring.mul(rem.leading(), &self.ring.inv(&t)?);
            let mono = self.monomial(c, k);
            quo = self.add(&quo, &mono);
            let next = self.sub(&rem, &self.mul(&mono, p));
            debug_assert!(next.degree() < rem.degree(), "division must make progress");
            rem = next;
        }
        Ok((quo, rem))
    }

    /// Left division `f = p * q + r` with `deg r < deg p`. Needs an
    /// invertible twist; errors with `SigmaNotInvertible` otherwise.
    pub fn left_divmod(&self, f: &SkewPoly<R>, p: &SkewPoly<R>) -> Result<(SkewPoly<R>, SkewPoly<R>)> {
        if p.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if !self.ring.sigma_invertible() {
            return Err(Error::SigmaNotInvertible);
        }
        let e = p.degree().finite().unwrap();
        let pe_inv = self.ring.inv(p.leading())?;
        let mut rem = f.clone();
        let mut quo = self.zero_poly();
        while let Degree::Finite(d) = rem.degree() {
            if d < e {
                break;
            }
            let k = d - e;
            // Kill the x^d term: p * (c x^k) has leading p_e * sigma^e(c).
            let mut c = self.ring.mul(&pe_inv, rem.leading());
            for _ in 0..e {
                c = self.ring.sigma_inv(&c)?;
            }
            let mono = self.monomial(c, k);
            quo = self.add(&quo, &mono);
            let next = self.sub(&rem, &self.mul(p, &mono));
            debug_assert!(next.degree() < rem.degree(), "division must make progress");
            rem = next;
        }
        Ok((quo, rem))
    }

    // ---- Evaluation ----

    /// Evaluation at a point: the constant remainder of right division by
    /// `x - a`, computed directly as `sum f_i * N_i(a)` with `N_0 = 1`,
    /// `N_{i+1} = sigma(N_i) * a + delta(N_i)`.
    pub fn eval_point(&self, f: &SkewPoly<R>, a: &R::Elem) -> R::Elem {
        let r = &self.ring;
        let mut val = r.zero();
        let mut n_i = r.one();
        for (i, fi) in f.coeffs.iter().enumerate() {
            if i > 0 {
                n_i = r.dmap(a, &n_i);
            }
            if !r.is_zero(fi) {
                val = r.add(&val, &r.mul(fi, &n_i));
            }
        }
        val
    }

    /// Evaluation at a modulus of positive degree: the remainder of right
    /// division by `p`.
    pub fn eval_high(&self, f: &SkewPoly<R>, p: &SkewPoly<R>) -> Result<SkewPoly<R>> {
        match p.degree() {
            Degree::NegInfinity => Err(Error::DivisionByZeroPoly),
            Degree::Finite(0) => Err(Error::DegreeTooSmall),
            Degree::Finite(_) => Ok(self.right_divmod(f, p)?.1),
        }
    }

    // ---- Greatest common right divisor / least common left multiple ----

    /// Monic gcrd by the right Euclidean algorithm. Errors with `BothZero`
    /// when both arguments vanish.
    pub fn gcrd(&self, f: &SkewPoly<R>, g: &SkewPoly<R>) -> Result<SkewPoly<R>> {
        Ok(self.gcrd_extended(f, g)?.0)
    }

    /// Extended right Euclid: returns monic `d` and cofactors `(u, v)` with
    /// `d = u * f + v * g` (cofactors multiply from the left).
    pub fn gcrd_extended(
        &self,
        f: &SkewPoly<R>,
        g: &SkewPoly<R>,
    ) -> Result<(SkewPoly<R>, SkewPoly<R>, SkewPoly<R>)> {
        if f.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut u0, mut v0) = (f.clone(), self.one_poly(), self.zero_poly());
        let (mut r1, mut u1, mut v1) = (g.clone(), self.zero_poly(), self.one_poly());
        while !r1.is_zero() {
            let (q, r2) = self.right_divmod(&r0, &r1)?;
            let u2 = self.sub(&u0, &self.mul(&q, &u1));
            let v2 = self.sub(&v0, &self.mul(&q, &v1));
            (r0, u0, v0) = (r1, u1, v1);
            (r1, u1, v1) = (r2, u2, v2);
        }
        let c = self.ring.inv(r0.leading())?;
        Ok((
            self.scale_left(&c, &r0),
            self.scale_left(&c, &u0),
            self.scale_left(&c, &v0),
        ))
    }

    /// Monic least common left multiple of two nonzero polynomials: run the
    /// extended algorithm to exhaustion; the final cofactor of `f` gives the
    /// multiple `u * f = -v * g`. Errors with `ZeroPolynomial` on zero input.
    pub fn lclm(&self, f: &SkewPoly<R>, g: &SkewPoly<R>) -> Result<SkewPoly<R>> {
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut r0, mut u0) = (f.clone(), self.one_poly());
        let (mut r1, mut u1) = (g.clone(), self.zero_poly());
        while !r1.is_zero() {
            let (q, r2) = self.right_divmod(&r0, &r1)?;
            let u2 = self.sub(&u0, &self.mul(&q, &u1));
            (r0, u0) = (r1, u1);
            (r1, u1) = (r2, u2);
        }
        // Here u1 * f + v1 * g = 0, so u1 * f is a common left multiple of
        // minimal degree by the degree identity.
        Ok(self.monic(&self.mul(&u1, f)))
    }

    // ---- Brute-force zero sets (enumerable rings) ----

    /// All right zeros of a nonzero polynomial, in enumeration order.
    pub fn zero_set_brute(&self, f: &SkewPoly<R>) -> Result<Vec<R::Elem>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .ring
            .enumerate()?
            .into_iter()
            .filter(|a| self.ring.is_zero(&self.eval_point(f, a)))
            .collect())
    }

    // ---- Pretty printing ----

    /// Canonical display form, guaranteed to re-parse to the same polynomial.
    pub fn format_poly(&self, f: &SkewPoly<R>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in f.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            let cs = self.ring.format_elem(c);
            let xpart = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let part = if i == 0 {
                cs
            } else if cs == "1" {
                xpart
            } else if cs == "-1" {
                format!("-{xpart}")
            } else if needs_parens(&cs) {
                format!("({cs})*{xpart}")
            } else {
                format!("{cs}*{xpart}")
            };
            parts.push(part);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

/// A printed coefficient needs parentheses when it has a top-level `+`/`-`
/// past the leading sign (a sum like `g + 2`), since `*` binds tighter.
fn needs_parens(s: &str) -> bool {
    let mut depth = 0usize;
    for (pos, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 && pos > 0 => return true,
            _ => {}
        }
    }
    false
}

// ---- Point sets over the three flavors of evaluation data ----

/// One entry of a point set: a plain point, a repeated point `(x - a)^r`, or
/// a point tuple with its product of linear factors.
#[derive(Debug, Clone)]
pub enum PointEntry<R: SkewRing> {
    Simple(R::Elem),
    Power(R::Elem, usize),
    Sequence(Vec<R::Elem>),
}

impl<R: SkewRing> PartialEq for PointEntry<R> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (PointEntry::Simple(a), PointEntry::Simple(b)) => a == b,
            (PointEntry::Power(a, r), PointEntry::Power(b, s)) => a == b && r == s,
            (PointEntry::Sequence(a), PointEntry::Sequence(b)) => a == b,
            _ => false,
        }
    }
}

impl<R: SkewRing> Eq for PointEntry<R> {}

/// A finite family of entries with pairwise distinct associated polynomials.
#[derive(Debug, Clone)]
pub struct PointSet<R: SkewRing> {
    entries: Vec<PointEntry<R>>,
    polys: Vec<SkewPoly<R>>,
}

impl<R: SkewRing> PointSet<R> {
    /// Builds the set, rejecting empty powers/sequences and duplicate
    /// entries (compared by associated polynomial).
    pub fn new(ring: &SkewPolyRing<R>, entries: Vec<PointEntry<R>>) -> Result<Self> {
        let mut polys = Vec::with_capacity(entries.len());
        for e in &entries {
            let p = match e {
                PointEntry::Simple(a) => ring.linear(a),
                PointEntry::Power(_, 0) => return Err(Error::EmptySequence),
                PointEntry::Power(a, r) => ring.pow(&ring.linear(a), *r),
                PointEntry::Sequence(seq) => ring.seq_poly(seq)?,
            };
            if polys.contains(&p) {
                return Err(Error::DuplicatePoint);
            }
            polys.push(p);
        }
        Ok(PointSet { entries, polys })
    }

    pub fn entries(&self) -> &[PointEntry<R>] {
        &self.entries
    }

    /// Associated monic polynomials, in entry order.
    pub fn assoc_polys(&self) -> &[SkewPoly<R>] {
        &self.polys
    }

    /// Sum of the degrees of the associated polynomials.
    pub fn total_degree(&self) -> usize {
        self.polys.iter().map(|p| p.degree().finite().unwrap()).sum()
    }
}

/// Minimal monic polynomial vanishing on the whole set: the iterated least
/// common left multiple of the associated polynomials. Order-independent.
pub fn minimal_poly<R: SkewRing>(ring: &SkewPolyRing<R>, set: &PointSet<R>) -> Result<SkewPoly<R>> {
    let polys = set.assoc_polys();
    if polys.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut acc = polys[0].clone();
    for p in &polys[1..] {
        acc = ring.lclm(&acc, p)?;
    }
    Ok(acc)
}

/// Whether the set attains the degree bound: the minimal polynomial has
/// degree equal to the sum of the entry degrees.
pub fn is_p_independent<R: SkewRing>(ring: &SkewPolyRing<R>, set: &PointSet<R>) -> Result<bool> {
    let m = minimal_poly(ring, set)?;
    Ok(m.degree() == Degree::Finite(set.total_degree()))
}

/// Closure of a finite set of plain points: all zeros of its minimal
/// polynomial. Brute force, so enumerable rings only.
pub fn p_closure_brute<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    points: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut entries = Vec::new();
    let mut seen: Vec<&R::Elem> = Vec::new();
    for a in points {
        if !seen.contains(&a) {
            seen.push(a);
            entries.push(PointEntry::Simple(a.clone()));
        }
    }
    let set = PointSet::new(ring, entries)?;
    let m = minimal_poly(ring, &set)?;
    ring.zero_set_brute(&m)
}
