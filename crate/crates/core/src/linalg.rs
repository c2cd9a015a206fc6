//! Coordinate-level linear algebra.
//!
//! Every ring here is finite-dimensional over a *commutative* coordinate
//! subfield K (fixed by the twist, killed by the derivation), and the
//! conjugacy machinery reduces to linear algebra on coordinate vectors whose
//! entries all lie in K. The routines below are plain Gaussian elimination
//! carried out with ring operations; they are only correct when fed such
//! vectors, which is an invariant of the call sites, not something checked
//! per entry.
//!
//! The *noncommutative* solver for systems with arbitrary division-ring
//! entries (the interpolation path) lives in the interp module; do not use
//! these helpers there.

use crate::error::Result;
use crate::ring::SkewRing;

/// Reduced row echelon form in place. Returns the pivot column of each pivot
/// row. Entries must lie in a commutative subfield.
pub fn rref<R: SkewRing>(ring: &R, mat: &mut [Vec<R::Elem>]) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !ring.is_zero(&mat[i][c])) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = ring.inv(&mat[r][c]).expect("pivot is nonzero");
        for x in mat[r].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !ring.is_zero(&mat[i][c]) {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let t = ring.mul(&mat[r][j], &f);
                    mat[i][j] = ring.sub(&mat[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of the row space (commutative-subfield entries).
pub fn row_rank<R: SkewRing>(ring: &R, rows: &[Vec<R::Elem>]) -> usize {
    let mut work = rows.to_vec();
    rref(ring, &mut work).len()
}

/// Whether `target` lies in the row span of `rows`.
pub fn in_row_span<R: SkewRing>(ring: &R, rows: &[Vec<R::Elem>], target: &[R::Elem]) -> bool {
    let base = row_rank(ring, rows);
    let mut extended = rows.to_vec();
    extended.push(target.to_vec());
    row_rank(ring, &extended) == base
}

/// Basis of {v : mat * v = 0} for a rows x cols matrix with
/// commutative-subfield entries.
pub fn kernel<R: SkewRing>(ring: &R, mat: &[Vec<R::Elem>], cols: usize) -> Vec<Vec<R::Elem>> {
    let mut work = mat.to_vec();
    let pivots = rref(ring, &mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![ring.zero(); cols];
        v[f] = ring.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ring.neg(&work[row][f]);
        }
        basis.push(v);
    }
    basis
}

/// Coordinate rows of `f(e_j)` for each coordinate-basis vector `e_j`.
/// The row span is the coordinate image of any additive, K-linear map.
pub fn map_image_rows<R: SkewRing>(
    ring: &R,
    f: impl Fn(&R::Elem) -> R::Elem,
) -> Result<Vec<Vec<R::Elem>>> {
    ring.basis()?
        .iter()
        .map(|e| ring.coordinates(&f(e)))
        .collect()
}

/// Kernel of an additive, K-linear map F -> F, as ring elements.
pub fn map_kernel_basis<R: SkewRing>(
    ring: &R,
    f: impl Fn(&R::Elem) -> R::Elem,
) -> Result<Vec<R::Elem>> {
    let image_rows = map_image_rows(ring, f)?;
    // Transpose: kernel() wants columns indexed by the basis position.
    let n = ring.basis()?.len();
    let mut mat = vec![vec![ring.zero(); n]; n];
    for (j, row) in image_rows.iter().enumerate() {
        for (i, entry) in row.iter().enumerate() {
            mat[i][j] = entry.clone();
        }
    }
    let ker = kernel(ring, &mat, n);
    ker.iter().map(|v| ring.from_coordinates(v)).collect()
}
