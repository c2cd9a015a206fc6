//! Zero multiplicities for skew polynomials.
//!
//! Two notions coexist. Multiplicity at a *repeated point* asks whether
//! `(x - a)^r` right-divides `F`. Multiplicity via a *sequence* `(a_1, ..,
//! a_r)` asks whether `P = (x - a_r) ... (x - a_1)` right-divides `F`; the
//! sequence is meaningful when `a_1` is the only right zero of `P`, which is
//! what validation decides. Both reduce to iterated remainders (Taylor
//! expansion); validation reduces, pair by pair, to a conjugation solve plus
//! a coordinate-subspace membership test.

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{is_p_independent, minimal_poly, Degree, PointEntry, PointSet, SkewPoly, SkewPolyRing};
use crate::ring::{RingId, SkewRing};

/// A point tuple `(a_1, .., a_r)` with its cached product of linear factors
/// and a validation mark. Length-1 sequences are valid by definition and are
/// born validated; longer ones must go through [`MultSeq::validated`].
#[derive(Debug, Clone)]
pub struct MultSeq<R: SkewRing> {
    points: Vec<R::Elem>,
    poly: SkewPoly<R>,
    validated: bool,
}

impl<R: SkewRing> MultSeq<R> {
    pub fn new(ring: &SkewPolyRing<R>, points: Vec<R::Elem>) -> Result<Self> {
        let poly = ring.seq_poly(&points)?; // rejects the empty tuple
        let validated = points.len() == 1;
        Ok(MultSeq { points, poly, validated })
    }

    pub fn points(&self) -> &[R::Elem] {
        &self.points
    }

    /// `(x - a_r) ... (x - a_1)`.
    pub fn poly(&self) -> &SkewPoly<R> {
        &self.poly
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty tuples
    }

    pub fn head(&self) -> &R::Elem {
        &self.points[0]
    }

    pub fn last(&self) -> &R::Elem {
        self.points.last().unwrap()
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Runs the decision procedure and returns the marked sequence, or
    /// `InvalidSequence` if the tuple is not a multiplicity sequence.
    pub fn validated(mut self, ring: &SkewPolyRing<R>) -> Result<Self> {
        if !self.validated {
            if !validate_multseq(ring, &self.points)? {
                return Err(Error::InvalidSequence);
            }
            self.validated = true;
        }
        Ok(self)
    }
}

/// The constant extracted by one full chain of right divisions: order,
/// defining prefix, and the value itself.
#[derive(Debug, Clone)]
pub struct HasseValue<R: SkewRing> {
    pub order: usize,
    pub prefix: Vec<R::Elem>,
    pub value: R::Elem,
}

/// Iterated right division of `f` by `(x - a_1)`, then of the quotient by
/// `(x - a_2)`, and so on. Returns the final quotient `G` and the constant
/// remainders `(c_1, .., c_r)`, which satisfy
/// `f = G * P_(a_1..a_r) + c_r * P_(a_1..a_{r-1}) + ... + c_2 * P_(a_1) + c_1`.
pub fn taylor_expand<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    f: &SkewPoly<R>,
    points: &[R::Elem],
) -> Result<(SkewPoly<R>, Vec<R::Elem>)> {
    if points.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut quo = f.clone();
    let mut coeffs = Vec::with_capacity(points.len());
    for a in points {
        let (next, rem) = ring.right_divmod(&quo, &ring.linear(a))?;
        coeffs.push(rem.coeffs().first().cloned().unwrap_or_else(|| ring.ring().zero()));
        quo = next;
    }
    Ok((quo, coeffs))
}

/// The order-`r` derivative of `f` along the full prefix: the last Taylor
/// coefficient. For `r = 1` this is plain evaluation at `a_1`.
pub fn hasse_value<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    f: &SkewPoly<R>,
    points: &[R::Elem],
) -> Result<HasseValue<R>> {
    let (_, coeffs) = taylor_expand(ring, f, points)?;
    Ok(HasseValue {
        order: points.len(),
        prefix: points.to_vec(),
        value: coeffs.last().cloned().unwrap(),
    })
}

pub fn hasse_derivative<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    f: &SkewPoly<R>,
    points: &[R::Elem],
) -> Result<R::Elem> {
    Ok(hasse_value(ring, f, points)?.value)
}

/// Whether `(x - a)^r` right-divides `f`. Decided by remainder; the
/// equivalent criterion "the first `r` derivatives at the constant prefix
/// all vanish" is recomputed and the two answers are asserted equal.
pub fn mult_check_1<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    f: &SkewPoly<R>,
    a: &R::Elem,
    r: usize,
) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if r == 0 {
        return Err(Error::EmptySequence);
    }
    let modulus = ring.pow(&ring.linear(a), r);
    let by_remainder = ring.right_divmod(f, &modulus)?.1.is_zero();
    let (_, coeffs) = taylor_expand(ring, f, &vec![a.clone(); r])?;
    let by_derivatives = coeffs.iter().all(|c| ring.ring().is_zero(c));
    assert_eq!(by_remainder, by_derivatives, "the two multiplicity criteria must agree");
    Ok(by_remainder)
}

/// Coordinate rows (over the coordinate subfield) spanning the image of the
/// defect map `b -> D_a(b) - a * b`. A conjugation witness landing in this
/// row span is useless for extending a sequence past `a`; the image is a
/// proper subspace, of right codimension one over the centralizer of `a`.
pub fn defect_image_rows<R: SkewRing>(ring: &R, a: &R::Elem) -> Result<Vec<Vec<R::Elem>>> {
    linalg::map_image_rows(ring, |b| ring.sub(&ring.dmap(a, b), &ring.mul(a, b)))
}

fn pair_valid<R: SkewRing>(ring: &R, u: &R::Elem, v: &R::Elem) -> Result<bool> {
    match ring.solve_conjugation(u, v)? {
        None => Ok(false),
        Some(beta) => {
            debug_assert!(!ring.is_zero(&beta), "conjugation witnesses are nonzero");
            let rows = defect_image_rows(ring, u)?;
            let coords = ring.coordinates(&beta)?;
            // All witnesses form one coset over the centralizer, and the
            // defect image is closed under right centralizer multiplication,
            // so this single representative decides the pair.
            Ok(!linalg::in_row_span(ring, &rows, &coords))
        }
    }
}

/// Whether `(a_1, .., a_r)` is a multiplicity sequence: `a_1` must be the
/// only right zero of its product of linear factors. Decided pair by pair:
/// consecutive points must be conjugate with a witness outside the defect
/// image. Singletons are always valid.
pub fn validate_multseq<R: SkewRing>(ring: &SkewPolyRing<R>, points: &[R::Elem]) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::EmptySequence);
    }
    for w in points.windows(2) {
        if !pair_valid(ring.ring(), &w[0], &w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same decision as [`validate_multseq`], computed from each ring's
/// closed-form pair condition instead of linear algebra.
pub fn validate_multseq_specialized<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    points: &[R::Elem],
) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::EmptySequence);
    }
    for w in points.windows(2) {
        if !ring.ring().pair_valid_closed_form(&w[0], &w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extends a validated sequence by one point: picks the first deterministic
/// witness `beta` outside the defect image of the last point (single basis
/// vectors in coordinate order, then sums of two) and appends `a_r^beta`.
/// The result is valid by construction and returned already marked.
pub fn extend_multseq<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    seq: &MultSeq<R>,
) -> Result<MultSeq<R>> {
    if !seq.is_validated() {
        return Err(Error::InvalidSequence);
    }
    let r = ring.ring();
    if r.ring_id() == RingId::RatFun {
        return Err(Error::UnsupportedRing("multiplicity sequence extension"));
    }
    let u = seq.last();
    let rows = defect_image_rows(r, u)?;
    let basis = r.basis()?;
    let mut candidates: Vec<R::Elem> = basis.clone();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            candidates.push(r.add(&basis[i], &basis[j]));
        }
    }
    for beta in &candidates {
        if !linalg::in_row_span(r, &rows, &r.coordinates(beta)?) {
            let next = r.conjugate(u, beta)?;
            let mut points = seq.points().to_vec();
            points.push(next.clone());
            return Ok(MultSeq {
                poly: ring.mul(&ring.linear(&next), seq.poly()),
                points,
                validated: true,
            });
        }
    }
    // The defect image is a proper subspace, so it cannot contain every
    // basis vector; the loop above always returns.
    unreachable!("no witness outside a proper subspace found");
}

/// Whether `f` has a zero of multiplicity `r` via the validated sequence:
/// true iff the sequence polynomial right-divides `f`. The equivalent
/// criterion "all `r` derivative values along the prefixes vanish" is
/// asserted against the remainder answer.
pub fn mult_check_2<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    f: &SkewPoly<R>,
    seq: &MultSeq<R>,
) -> Result<bool> {
    if !seq.is_validated() {
        return Err(Error::InvalidSequence);
    }
    let by_remainder = ring.eval_high(f, seq.poly())?.is_zero();
    let (_, coeffs) = taylor_expand(ring, f, seq.points())?;
    let by_derivatives = coeffs.iter().all(|c| ring.ring().is_zero(c));
    assert_eq!(by_remainder, by_derivatives, "the two multiplicity criteria must agree");
    Ok(by_remainder)
}

fn peel_all_factorizations<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    q: &SkewPoly<R>,
    acc: &mut Vec<R::Elem>,
    out: &mut Vec<Vec<R::Elem>>,
) -> Result<()> {
    if q.degree() == Degree::Finite(0) {
        out.push(acc.clone());
        return Ok(());
    }
    for b in ring.zero_set_brute(q)? {
        let (quo, rem) = ring.right_divmod(q, &ring.linear(&b))?;
        debug_assert!(rem.is_zero());
        acc.push(b);
        peel_all_factorizations(ring, &quo, acc, out)?;
        acc.pop();
    }
    Ok(())
}

/// Exhaustive cross-check over enumerable rings: true iff *every* complete
/// factorization of the sequence polynomial into linear factors, found by
/// peeling right zeros in all possible orders, recovers exactly the given
/// sequence. Equivalent to validity, but decided by brute force.
pub fn unique_factorization_check<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    seq: &MultSeq<R>,
) -> Result<bool> {
    let mut all = Vec::new();
    peel_all_factorizations(ring, seq.poly(), &mut Vec::new(), &mut all)?;
    Ok(!all.is_empty() && all.iter().all(|fact| fact == seq.points()))
}

/// Minimal monic skew polynomial vanishing on the whole conjugacy class of
/// `a`, by the ring's closed form. Zeros at sampled conjugates are asserted.
pub fn conjclass_minpoly<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    a: &R::Elem,
) -> Result<SkewPoly<R>> {
    let f = ring.poly(ring.ring().class_minpoly_coeffs(a)?);
    #[cfg(debug_assertions)]
    for beta in ring.ring().basis()? {
        let b = ring.ring().conjugate(a, &beta)?;
        debug_assert!(
            ring.ring().is_zero(&ring.eval_point(&f, &b)),
            "class polynomial must vanish on sampled conjugates"
        );
    }
    Ok(f)
}

/// `conjclass_minpoly(a)^r`, the minimal polynomial vanishing on the class
/// with multiplicity `r` everywhere.
pub fn conjclass_minpoly_pow<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    a: &R::Elem,
    r: usize,
) -> Result<SkewPoly<R>> {
    if r == 0 {
        return Err(Error::EmptySequence);
    }
    Ok(ring.pow(&conjclass_minpoly(ring, a)?, r))
}

/// Whether every element of the conjugacy class of `a` is a zero of `f` of
/// multiplicity at least `r`: true iff the `r`-th power of the class
/// polynomial right-divides `f`.
pub fn mult_on_class_check<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    f: &SkewPoly<R>,
    a: &R::Elem,
    r: usize,
) -> Result<bool> {
    let p = conjclass_minpoly_pow(ring, a, r)?;
    Ok(ring.right_divmod(f, &p)?.1.is_zero())
}

/// Complete linear factorization of the minimal polynomial of a
/// P-independent family of simple/repeated points, ordered so that the
/// factors of the first entry sit rightmost: returns `(c_1, .., c_N)` with
/// `F = (x - c_N) ... (x - c_1)`, each `c` conjugate to its entry's point.
/// Brute-force search over enumerable rings; reconstruction is asserted.
pub fn factor_p_independent<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    set: &PointSet<R>,
) -> Result<Vec<R::Elem>> {
    let mut class_order: Vec<&R::Elem> = Vec::new();
    for entry in set.entries() {
        match entry {
            PointEntry::Simple(a) => class_order.push(a),
            PointEntry::Power(a, r) => class_order.extend(std::iter::repeat(a).take(*r)),
            PointEntry::Sequence(_) => return Err(Error::InvalidSequence),
        }
    }
    if !is_p_independent(ring, set)? {
        return Err(Error::NotPIndependent);
    }
    let target = minimal_poly(ring, set)?;
    let mut out = Vec::with_capacity(class_order.len());
    let found = peel_in_class_order(ring, &target, &class_order, &mut out)?;
    assert!(found, "a P-independent family always factors in entry order");
    assert_eq!(ring.seq_poly(&out)?, target, "factorization must reconstruct the polynomial");
    Ok(out)
}

/// Depth-first peeling constrained by the required conjugacy class at each
/// position; takes the first (enumeration-order) branch that completes.
fn peel_in_class_order<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    q: &SkewPoly<R>,
    classes: &[&R::Elem],
    out: &mut Vec<R::Elem>,
) -> Result<bool> {
    let Some((want, rest)) = classes.split_first() else {
        return Ok(q.degree() == Degree::Finite(0));
    };
    for b in ring.zero_set_brute(q)? {
        if !ring.ring().is_conjugate(want, &b)? {
            continue;
        }
        let (quo, rem) = ring.right_divmod(q, &ring.linear(&b))?;
        debug_assert!(rem.is_zero());
        out.push(b);
        if peel_in_class_order(ring, &quo, rest, out)? {
            return Ok(true);
        }
        out.pop();
    }
    Ok(false)
}
