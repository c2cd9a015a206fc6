//! Confluent Vandermonde matrices, division-ring linear solving, and
//! Lagrange/Hermite interpolation.
//!
//! Side convention, fixed once: polynomials carry LEFT coefficients, so
//! sampling `F = sum f_t x^t` along a derivative column is `sum f_t * entry`
//! with the unknown on the left. Interpolation therefore solves row-vector
//! systems `f * M = b`, and the solver only ever combines equations with
//! multipliers applied FROM THE RIGHT — the one side that is legal here.

use crate::error::{Error, Result};
use crate::multiplicity::{hasse_derivative, MultSeq};
use crate::poly::{SkewPoly, SkewPolyRing};
use crate::ring::SkewRing;

/// A row-vector linear system `f * matrix = rhs`. `matrix[t]` is the row of
/// coefficients multiplied by the unknown `f_t`; columns index equations.
#[derive(Debug, Clone)]
pub struct LinearSystem<R: SkewRing> {
    matrix: Vec<Vec<R::Elem>>,
    rhs: Vec<R::Elem>,
}

impl<R: SkewRing> LinearSystem<R> {
    pub fn new(matrix: Vec<Vec<R::Elem>>, rhs: Vec<R::Elem>) -> Result<Self> {
        for row in &matrix {
            if row.len() != rhs.len() {
                return Err(Error::DimensionMismatch(format!(
                    "matrix row has {} entries but the right-hand side has {}",
                    row.len(),
                    rhs.len()
                )));
            }
        }
        Ok(LinearSystem { matrix, rhs })
    }

    pub fn unknowns(&self) -> usize {
        self.matrix.len()
    }

    pub fn equations(&self) -> usize {
        self.rhs.len()
    }
}

/// Gauss-Jordan elimination for `f * M = b` over a division ring. Equations
/// (columns) are scaled and combined by right multipliers only. Returns the
/// unique solution, `NoSolution` with an inconsistent equation's index, or
/// `NonUnique` with a pivot-free unknown's index.
pub fn solve_left_linear<R: SkewRing>(ring: &R, sys: &LinearSystem<R>) -> Result<Vec<R::Elem>> {
    let n = sys.unknowns();
    let m = sys.equations();
    // One equation per original column: coefficient vector over the
    // unknowns, right-hand side, original index for error reporting.
    struct Eq<E> {
        coeffs: Vec<E>,
        rhs: E,
        index: usize,
    }
    let mut eqs: Vec<Eq<R::Elem>> = (0..m)
        .map(|c| Eq {
            coeffs: (0..n).map(|t| sys.matrix[t][c].clone()).collect(),
            rhs: sys.rhs[c].clone(),
            index: c,
        })
        .collect();

    let mut pivot_of: Vec<Option<usize>> = vec![None; n];
    let mut is_pivot = vec![false; m];
    for t in 0..n {
        let Some(e) = (0..m).find(|&e| !is_pivot[e] && !ring.is_zero(&eqs[e].coeffs[t])) else {
            continue;
        };
        // Normalize the pivot coefficient to 1 by a right multiplier.
        let inv = ring.inv(&eqs[e].coeffs[t])?;
        for s in 0..n {
            eqs[e].coeffs[s] = ring.mul(&eqs[e].coeffs[s], &inv);
        }
        eqs[e].rhs = ring.mul(&eqs[e].rhs, &inv);
        // Clear the coefficient of f_t from every other equation.
        for e2 in 0..m {
            if e2 == e || ring.is_zero(&eqs[e2].coeffs[t]) {
                continue;
            }
            let factor = eqs[e2].coeffs[t].clone();
            for s in 0..n {
                let sub = ring.mul(&eqs[e].coeffs[s], &factor);
                eqs[e2].coeffs[s] = ring.sub(&eqs[e2].coeffs[s], &sub);
            }
            let sub = ring.mul(&eqs[e].rhs, &factor);
            eqs[e2].rhs = ring.sub(&eqs[e2].rhs, &sub);
        }
        is_pivot[e] = true;
        pivot_of[t] = Some(e);
    }

    // Leftover equations are all-zero rows; a nonzero right-hand side there
    // certifies inconsistency.
    for (e, eq) in eqs.iter().enumerate() {
        if !is_pivot[e] && !ring.is_zero(&eq.rhs) {
            debug_assert!(eq.coeffs.iter().all(|c| ring.is_zero(c)));
            return Err(Error::NoSolution { column: eq.index });
        }
    }
    // Every unknown needs its own pivot, or the solution is not unique.
    let mut solution = Vec::with_capacity(n);
    for (t, p) in pivot_of.iter().enumerate() {
        match p {
            Some(e) => solution.push(eqs[*e].rhs.clone()),
            None => return Err(Error::NonUnique { column: t }),
        }
    }
    Ok(solution)
}

/// Confluent Vandermonde matrix of order `N` for a family of point tuples:
/// one block of columns per tuple, the block's `j`-th column holding the
/// order-`j` derivative values of the monomials `1, x, .., x^{N-1}` along
/// the tuple's length-`j` prefix.
#[derive(Debug, Clone)]
pub struct ConfluentVandermonde<R: SkewRing> {
    order: usize,
    block_sizes: Vec<usize>,
    matrix: Vec<Vec<R::Elem>>,
}

impl<R: SkewRing> ConfluentVandermonde<R> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Row-major entries: `matrix()[t][c]` is the derivative of `x^t` at the
    /// `c`-th prefix (blocks concatenated left to right).
    pub fn matrix(&self) -> &[Vec<R::Elem>] {
        &self.matrix
    }

    pub fn cols(&self) -> usize {
        self.block_sizes.iter().sum()
    }
}

/// Builds the order-`n` confluent Vandermonde matrix of the given tuples.
/// With all tuples of length 1 this is the twisted Vandermonde matrix of
/// iterated-evaluation values.
pub fn build_vandermonde<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    seqs: &[MultSeq<R>],
    n: usize,
) -> Result<ConfluentVandermonde<R>> {
    let mut matrix = vec![Vec::new(); n];
    for (t, row) in matrix.iter_mut().enumerate() {
        let monomial = ring.monomial(ring.ring().one(), t);
        for seq in seqs {
            for j in 1..=seq.len() {
                row.push(hasse_derivative(ring, &monomial, &seq.points()[..j])?);
            }
        }
    }
    Ok(ConfluentVandermonde {
        order: n,
        block_sizes: seqs.iter().map(|s| s.len()).collect(),
        matrix,
    })
}

/// Hermite interpolation: the unique `F` with `deg F < N = sum r_i` hitting
/// the prescribed derivative value at every prefix of every tuple.
///
/// Tuples must either be validated multiplicity sequences or constant
/// tuples `(a, .., a)` — the latter carry repeated-point (classical
/// derivative) data, for which interpolation needs no sequence validity,
/// only P-independence. A singular system reports `NotPIndependent`.
/// The returned polynomial is re-checked against every target.
pub fn hermite_interpolate<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    seqs: &[MultSeq<R>],
    values: &[R::Elem],
) -> Result<SkewPoly<R>> {
    if seqs.is_empty() {
        return Err(Error::EmptySet);
    }
    for seq in seqs {
        let constant = seq.points().iter().all(|a| a == seq.head());
        if !seq.is_validated() && !constant {
            return Err(Error::ValidationMissing);
        }
    }
    let n: usize = seqs.iter().map(|s| s.len()).sum();
    if values.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n} prefix targets required, got {}",
            values.len()
        )));
    }
    let vand = build_vandermonde(ring, seqs, n)?;
    let sys = LinearSystem::new(vand.matrix.clone(), values.to_vec())?;
    let coeffs = match solve_left_linear(ring.ring(), &sys) {
        Ok(c) => c,
        Err(Error::NoSolution { .. }) | Err(Error::NonUnique { .. }) => {
            return Err(Error::NotPIndependent)
        }
        Err(e) => return Err(e),
    };
    let f = ring.poly(coeffs);
    // Defense against elimination bugs over noncommutative entries: check
    // the interpolant against every target directly.
    let mut col = 0;
    for seq in seqs {
        for j in 1..=seq.len() {
            let got = hasse_derivative(ring, &f, &seq.points()[..j])?;
            assert!(
                got == values[col],
                "interpolant misses a prescribed derivative value"
            );
            col += 1;
        }
    }
    Ok(f)
}

/// Lagrange interpolation: Hermite with all tuples of length one.
pub fn lagrange_interpolate<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    points: &[R::Elem],
    values: &[R::Elem],
) -> Result<SkewPoly<R>> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let seqs = points
        .iter()
        .map(|a| MultSeq::new(ring, vec![a.clone()]))
        .collect::<Result<Vec<_>>>()?;
    hermite_interpolate(ring, &seqs, values)
}
