//! The finite field gf(p^m) = F_p[g] / (modulus), twisted by a Frobenius
//! power `sigma(a) = a^(p^s)` with zero derivation.
//!
//! The fixed field of `sigma` is F_(p^d) with d = gcd(s, m); that subfield is
//! the coordinate subfield, so `base_dim` is m/d on the basis
//! (1, g, ..., g^(m/d - 1)). Enumeration and the conjugation search are
//! brute-force by design and intended for small fields (p^m up to a few
//! thousand).

use crate::error::{Error, Result};
use crate::ring::{RingId, SkewRing};
use crate::rings::fp::{self, Poly};

/// Element of gf(p^m): residue coefficients, ascending powers of `g`,
/// trailing zeros trimmed (so zero is the empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FfElem(Poly);

impl FfElem {
    /// Raw residue coefficients (ascending powers of `g`).
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

/// Context for gf(p^m) with `sigma = Frobenius^s`, `delta = 0`.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u64,
    m: usize,
    modulus: Poly,
    /// Frobenius exponent reduced mod m (s = 0 means sigma is the identity).
    frob: usize,
    /// d = gcd(s, m): the coordinate subfield is F_(p^d).
    subfield_deg: usize,
    /// m x m matrix of sigma on the power basis (columns are sigma(g^i)).
    sigma_mat: Vec<Vec<u64>>,
    sigma_inv_mat: Vec<Vec<u64>>,
    /// F_p-basis of the coordinate subfield (d elements).
    subfield_basis: Vec<FfElem>,
    /// Inverse of the change of basis from (g^i * kappa_j) to the power basis;
    /// used to split an element into coordinate-subfield coordinates.
    coord_inv: Vec<Vec<u64>>,
}

impl FiniteField {
    /// Builds gf(p^m) from the modulus coefficients (ascending, must be monic
    /// of degree m and irreducible over F_p) and the Frobenius exponent.
    pub fn new(p: u64, m: usize, modulus: &[u64], frob: usize) -> Result<Self> {
        if !fp::is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidRing("extension degree must be at least 1".into()));
        }
        let modulus: Poly = fp::trim(modulus.iter().map(|&c| c % p).collect());
        if fp::deg(&modulus) != Some(m) {
            return Err(Error::InvalidRing(format!(
                "modulus must have degree {m} after reduction mod {p}"
            )));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidRing("modulus must be monic".into()));
        }
        if !fp::is_irreducible(&modulus, p) {
            return Err(Error::InvalidRing("modulus is not irreducible".into()));
        }

        let frob = frob % m;
        let subfield_deg = if frob == 0 { m } else { gcd(frob, m) };

        // sigma(g) = g^(p^s), computed by iterating the p-th power map; the
        // matrix columns are its powers since sigma is a field map.
        let g = fp::rem(&vec![0, 1], &modulus, p);
        let mut sg = g.clone();
        for _ in 0..frob {
            sg = poly_pow_mod(&sg, p, &modulus, p);
        }
        let mut sigma_mat = vec![vec![0u64; m]; m];
        let mut col = vec![1u64];
        for i in 0..m {
            for (r, row) in sigma_mat.iter_mut().enumerate() {
                row[i] = col.get(r).copied().unwrap_or(0);
            }
            if i + 1 < m {
                col = fp::rem(&fp::mul(&col, &sg, p), &modulus, p);
            }
        }
        let sigma_inv_mat = fp::invert(&sigma_mat, p)
            .expect("a field automorphism matrix is invertible");

        // Coordinate subfield: kernel of (sigma - id) over F_p.
        let mut fix = sigma_mat.clone();
        for (i, row) in fix.iter_mut().enumerate() {
            row[i] = fp::subm(row[i], 1, p);
        }
        let kappa = fp::kernel(&fix, m, p);
        assert_eq!(kappa.len(), subfield_deg, "fixed field has dimension gcd(s, m)");
        let subfield_basis: Vec<FfElem> = kappa.iter().map(|v| FfElem(fp::trim(v.clone()))).collect();

        // Change of basis: columns g^i * kappa_j, flat index i*d + j.
        let k = m / subfield_deg;
        let mut change = vec![vec![0u64; m]; m];
        let mut gpow = vec![1u64];
        for i in 0..k {
            for (j, kb) in subfield_basis.iter().enumerate() {
                let prod = fp::rem(&fp::mul(&gpow, &kb.0, p), &modulus, p);
                for (r, row) in change.iter_mut().enumerate() {
                    row[i * subfield_deg + j] = prod.get(r).copied().unwrap_or(0);
                }
            }
            if i + 1 < k {
                gpow = fp::rem(&fp::mul(&gpow, &g, p), &modulus, p);
            }
        }
        let coord_inv = fp::invert(&change, p)
            .expect("powers of g over the fixed field form a basis");

        Ok(FiniteField {
            p,
            m,
            modulus,
            frob,
            subfield_deg,
            sigma_mat,
            sigma_inv_mat,
            subfield_basis,
            coord_inv,
        })
    }

    /// The prime field F_p as the trivial extension (modulus `g`, identity twist).
    pub fn prime(p: u64) -> Result<Self> {
        FiniteField::new(p, 1, &[0, 1], 0)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.m
    }

    pub fn frobenius_exponent(&self) -> usize {
        self.frob
    }

    /// Number of field elements p^m.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.m as u32)
    }

    /// Element from residue coefficients (reduced mod p and the modulus).
    pub fn element(&self, coeffs: &[u64]) -> FfElem {
        let v: Poly = coeffs.iter().map(|&c| c % self.p).collect();
        FfElem(fp::rem(&fp::trim(v), &self.modulus, self.p))
    }

    /// The residue class of `g`.
    pub fn gen(&self) -> FfElem {
        self.element(&[0, 1])
    }

    fn pad(&self, a: &FfElem) -> Vec<u64> {
        let mut v = a.0.clone();
        v.resize(self.m, 0);
        v
    }

    /// Multiplicative order of a nonzero element.
    fn mult_order(&self, a: &FfElem) -> u128 {
        assert!(!a.0.is_empty());
        let mut acc = a.clone();
        let mut n = 1u128;
        while !self.is_one(&acc) {
            acc = self.mul(&acc, a);
            n += 1;
        }
        n
    }

    /// Smallest generator of the multiplicative group in enumeration order.
    pub fn find_primitive(&self) -> FfElem {
        let target = self.order() - 1;
        for a in self.enumerate().expect("finite fields enumerate") {
            if !self.is_zero(&a) && self.mult_order(&a) == target {
                return a;
            }
        }
        unreachable!("every finite field has a primitive element")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn poly_pow_mod(base: &Poly, mut exp: u64, modulus: &Poly, p: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = fp::rem(&fp::mul(&acc, &b, p), modulus, p);
        }
        b = fp::rem(&fp::mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

impl SkewRing for FiniteField {
    type Elem = FfElem;

    fn ring_id(&self) -> RingId {
        RingId::FiniteField
    }

    fn zero(&self) -> FfElem {
        FfElem(Vec::new())
    }

    fn one(&self) -> FfElem {
        FfElem(vec![1])
    }

    fn from_int(&self, n: i64) -> FfElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        FfElem(fp::trim(vec![r]))
    }

    fn add(&self, a: &FfElem, b: &FfElem) -> FfElem {
        FfElem(fp::add(&a.0, &b.0, self.p))
    }

    fn neg(&self, a: &FfElem) -> FfElem {
        FfElem(fp::neg(&a.0, self.p))
    }

    fn mul(&self, a: &FfElem, b: &FfElem) -> FfElem {
        FfElem(fp::rem(&fp::mul(&a.0, &b.0, self.p), &self.modulus, self.p))
    }

    fn inv(&self, a: &FfElem) -> Result<FfElem> {
        if a.0.is_empty() {
            return Err(Error::InversionOfZero);
        }
        Ok(FfElem(fp::inv_mod(&a.0, &self.modulus, self.p)))
    }

    fn sigma(&self, a: &FfElem) -> FfElem {
        FfElem(fp::trim(fp::matvec(&self.sigma_mat, &self.pad(a), self.p)))
    }

    fn sigma_invertible(&self) -> bool {
        true
    }

    fn sigma_inv(&self, a: &FfElem) -> Result<FfElem> {
        Ok(FfElem(fp::trim(fp::matvec(&self.sigma_inv_mat, &self.pad(a), self.p))))
    }

    fn delta(&self, _a: &FfElem) -> FfElem {
        self.zero()
    }

    fn base_dim(&self) -> Option<usize> {
        Some(self.m / self.subfield_deg)
    }

    fn basis(&self) -> Result<Vec<FfElem>> {
        let k = self.m / self.subfield_deg;
        let g = self.gen();
        let mut out = vec![self.one()];
        for _ in 1..k {
            let last = out.last().unwrap().clone();
            out.push(self.mul(&last, &g));
        }
        Ok(out)
    }

    fn coordinates(&self, a: &FfElem) -> Result<Vec<FfElem>> {
        let flat = fp::matvec(&self.coord_inv, &self.pad(a), self.p);
        let d = self.subfield_deg;
        let k = self.m / d;
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let mut c = self.zero();
            for (j, kb) in self.subfield_basis.iter().enumerate() {
                let scalar = FfElem(fp::trim(vec![flat[i * d + j]]));
                c = self.add(&c, &self.mul(&scalar, kb));
            }
            out.push(c);
        }
        Ok(out)
    }

    fn from_coordinates(&self, coords: &[FfElem]) -> Result<FfElem> {
        let k = self.m / self.subfield_deg;
        if coords.len() != k {
            return Err(Error::DimensionMismatch(format!(
                "expected {k} coordinates, got {}",
                coords.len()
            )));
        }
        let basis = self.basis()?;
        let mut acc = self.zero();
        for (c, b) in coords.iter().zip(&basis) {
            if self.sigma(c) != *c {
                return Err(Error::ContextMismatch(
                    "coordinate lies outside the coordinate subfield".into(),
                ));
            }
            acc = self.add(&acc, &self.mul(c, b));
        }
        Ok(acc)
    }

    fn enumerable(&self) -> bool {
        true
    }

    /// All p^m elements, ordered by residue coefficients with the constant
    /// coefficient varying fastest: 0, 1, ..., p-1, g, g+1, ...
    fn enumerate(&self) -> Result<Vec<FfElem>> {
        let total = self.order();
        assert!(total <= 1 << 20, "enumeration is meant for small fields");
        let mut out = Vec::with_capacity(total as usize);
        for n in 0..total {
            let mut v = Vec::with_capacity(self.m);
            let mut rest = n;
            for _ in 0..self.m {
                v.push((rest % self.p as u128) as u64);
                rest /= self.p as u128;
            }
            out.push(FfElem(fp::trim(v)));
        }
        Ok(out)
    }

    /// First beta in enumeration order with `a^beta = b`, by exhaustive
    /// search; `None` when the classes differ.
    fn solve_conjugation(&self, a: &FfElem, b: &FfElem) -> Result<Option<FfElem>> {
        for beta in self.enumerate()? {
            if self.is_zero(&beta) {
                continue;
            }
            if self.conjugate(a, &beta)? == *b {
                return Ok(Some(beta));
            }
        }
        Ok(None)
    }

    /// Norm form of conjugacy: nonzero `a, b` are conjugate exactly when
    /// `b / a` has norm 1 down to the fixed field; zero is conjugate only to
    /// itself.
    fn is_conjugate(&self, a: &FfElem, b: &FfElem) -> Result<bool> {
        match (self.is_zero(a), self.is_zero(b)) {
            (true, true) => Ok(true),
            (true, false) | (false, true) => Ok(false),
            (false, false) => Ok(self.is_one(&self.norm(&self.div(b, a)?)?)),
        }
    }

    /// Closed form for a valid length-2 sequence: both zero, or both nonzero
    /// with a conjugating multiplier beta such that trace(beta / a) != 0.
    fn pair_valid_closed_form(&self, a: &FfElem, b: &FfElem) -> Result<bool> {
        match (self.is_zero(a), self.is_zero(b)) {
            (true, true) => Ok(true),
            (true, false) | (false, true) => Ok(false),
            (false, false) => match self.solve_conjugation(a, b)? {
                None => Ok(false),
                Some(beta) => {
                    let t = self.trace(&self.div(&beta, a)?)?;
                    Ok(!self.is_zero(&t))
                }
            },
        }
    }

    fn galois_order(&self) -> Result<usize> {
        Ok(self.m / self.subfield_deg)
    }

    /// `x` for `a = 0`; otherwise the Hilbert-90 form `x^ord - N(a)` with
    /// `ord = [F : Fix(sigma)]`: the class of `a` is the norm fiber of `N(a)`
    /// and iterated evaluation of `x^ord` computes exactly the norm.
    fn class_minpoly_coeffs(&self, a: &FfElem) -> Result<Vec<FfElem>> {
        if self.is_zero(a) {
            return Ok(vec![self.zero(), self.one()]);
        }
        let ord = self.galois_order()?;
        let mut coeffs = vec![self.zero(); ord + 1];
        coeffs[0] = self.neg(&self.norm(a)?);
        coeffs[ord] = self.one();
        Ok(coeffs)
    }

    fn symbol_elem(&self, name: char) -> Option<FfElem> {
        if name == 'g' {
            Some(self.gen())
        } else {
            None
        }
    }

    fn format_elem(&self, a: &FfElem) -> String {
        if a.0.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in a.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (c, i) {
                (_, 0) => format!("{c}"),
                (1, 1) => "g".to_string(),
                (1, _) => format!("g^{i}"),
                (_, 1) => format!("{c}*g"),
                (_, _) => format!("{c}*g^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}
