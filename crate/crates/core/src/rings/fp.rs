//! Internal arithmetic over the prime field F_p: modular integers, dense
//! polynomials (ascending coefficients, trailing zeros trimmed, empty = 0),
//! and just enough dense linear algebra for basis changes.
//!
//! Shared by the finite-field ring (elements are residues modulo an
//! irreducible polynomial) and the rational-function ring (elements are
//! reduced fractions of these polynomials).

// ---- Integers modulo p ----

pub fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

pub fn subm(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + p as u128 - b as u128 % p as u128) % p as u128;
    s as u64
}

pub fn negm(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

/// Inverse of `a` modulo the prime `p`. Panics on 0 (callers check).
pub fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero modulo {p}");
    // Extended Euclid on (p, a); coefficients tracked for a only.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} is not invertible modulo {p}");
    t0.rem_euclid(p as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- Dense polynomials over F_p ----
//
// Representation: Vec<u64>, coefficient of z^i at index i, entries reduced
// mod p, no trailing zeros. The zero polynomial is the empty vector.

pub type Poly = Vec<u64>;

pub fn trim(mut v: Poly) -> Poly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn deg(a: &Poly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = addm(x, y, p);
    }
    trim(out)
}

pub fn neg(a: &Poly, p: u64) -> Poly {
    a.iter().map(|&c| negm(c, p)).collect()
}

pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    add(a, &neg(b, p), p)
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    trim(out)
}

pub fn scale(a: &Poly, c: u64, p: u64) -> Poly {
    trim(a.iter().map(|&x| mulm(x, c, p)).collect())
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`. Panics on `b = 0`.
pub fn divmod(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by the zero polynomial over F_p");
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = invm(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = mulm(*r.last().unwrap(), lead_inv, p);
        q[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = subm(r[shift + i], mulm(coef, bc, p), p);
        }
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    (trim(q), r)
}

pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    divmod(a, b, p).1
}

/// Monic normalization (zero stays zero).
pub fn monic(a: &Poly, p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, invm(lc, p), p),
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Formal derivative d/dz.
pub fn deriv(a: &Poly, p: u64) -> Poly {
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() - 1];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = mulm(a[i + 1], (i as u64 + 1) % p, p);
    }
    trim(out)
}

/// Inverse of `a` modulo the (irreducible) polynomial `m`: extended Euclid.
/// Panics when `gcd(a, m) != 1` (cannot happen for irreducible `m` and
/// `a != 0 mod m`).
pub fn inv_mod(a: &Poly, m: &Poly, p: u64) -> Poly {
    let (mut r0, mut r1) = (m.clone(), rem(a, m, p));
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r2) = divmod(&r0, &r1, p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        (r0, r1) = (r1, r2);
        (t0, t1) = (t1, t2);
    }
    assert_eq!(deg(&r0), Some(0), "element is not invertible modulo the modulus");
    let c = invm(r0[0], p);
    rem(&scale(&t0, c, p), m, p)
}

/// Whether `m` is irreducible over F_p: trial division by every monic
/// polynomial of degree up to deg(m)/2. Desk scale by design.
pub fn is_irreducible(m: &Poly, p: u64) -> bool {
    let d = match deg(m) {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    for e in 1..=d / 2 {
        // All monic polynomials of degree e: p^e candidates.
        let count = (p as u128).pow(e as u32);
        for idx in 0..count {
            let mut cand = vec![0u64; e + 1];
            let mut n = idx;
            for slot in cand.iter_mut().take(e) {
                *slot = (n % p as u128) as u64;
                n /= p as u128;
            }
            cand[e] = 1;
            if rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

// ---- Dense matrices over F_p (row-major) ----

/// Reduced row echelon form in place; returns pivot column per pivot row.
pub fn rref(mat: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = invm(mat[r][c], p);
        for x in mat[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && mat[i][c] != 0 {
                let f = mat[i][c];
                for j in 0..cols {
                    let t = mulm(f, mat[r][j], p);
                    mat[i][j] = subm(mat[i][j], t, p);
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

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(mat: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<u64>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(j == i)));
            r
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right kernel {v : mat * v = 0}.
pub fn kernel(mat: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut work: Vec<Vec<u64>> = mat.to_vec();
    let pivots = rref(&mut work, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![0u64; cols];
        v[f] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = negm(work[row][f], p);
        }
        basis.push(v);
    }
    basis
}

/// Matrix-vector product.
pub fn matvec(mat: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&m, &x)| addm(acc, mulm(m, x, p), p))
        })
        .collect()
}
