//! Rational functions F_p(z) with the identity twist and derivation
//! `delta = c * d/dz` for a fixed nonzero scale c.
//!
//! The derivation kernel — and the centralizer of every point — is the
//! subfield of p-th powers F_p(z^p), which serves as the coordinate subfield
//! with basis (1, z, ..., z^(p-1)). delta is nilpotent (`delta^p = 0`), and
//! no sequence-validity decision procedure is available here: those
//! operations answer `UnsupportedRing` by contract.

use crate::error::{Error, Result};
use crate::ring::{RingId, SkewRing};
use crate::rings::fp::{self, Poly};

/// Reduced fraction num/den over F_p[z]: gcd(num, den) = 1, den monic,
/// zero stored as 0/1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn num(&self) -> &[u64] {
        &self.num
    }

    pub fn den(&self) -> &[u64] {
        &self.den
    }
}

/// Context for F_p(z) with `delta = c * d/dz`.
#[derive(Clone, Debug)]
pub struct RatFunField {
    p: u64,
    scale: RatFun,
}

impl RatFunField {
    /// Builds F_p(z) with `delta = c * d/dz`; `c` must be nonzero.
    pub fn new(p: u64, c_num: &[u64], c_den: &[u64]) -> Result<Self> {
        if !fp::is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        let mut ring = RatFunField { p, scale: RatFun { num: vec![1], den: vec![1] } };
        let c = ring.fraction(c_num, c_den)?;
        if ring.is_zero(&c) {
            return Err(Error::InvalidRing("derivation scale must be nonzero".into()));
        }
        ring.scale = c;
        Ok(ring)
    }

    /// The standard derivation d/dz (scale 1).
    pub fn standard(p: u64) -> Result<Self> {
        RatFunField::new(p, &[1], &[1])
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn derivation_scale(&self) -> &RatFun {
        &self.scale
    }

    /// Reduced fraction from raw coefficient lists (ascending powers of z).
    pub fn fraction(&self, num: &[u64], den: &[u64]) -> Result<RatFun> {
        let n = fp::trim(num.iter().map(|&c| c % self.p).collect());
        let d = fp::trim(den.iter().map(|&c| c % self.p).collect());
        if d.is_empty() {
            return Err(Error::InversionOfZero);
        }
        Ok(self.reduce(n, d))
    }

    /// Polynomial element.
    pub fn poly(&self, num: &[u64]) -> RatFun {
        self.fraction(num, &[1]).expect("denominator 1 is nonzero")
    }

    pub fn z(&self) -> RatFun {
        self.poly(&[0, 1])
    }

    fn reduce(&self, num: Poly, den: Poly) -> RatFun {
        if num.is_empty() {
            return RatFun { num: Vec::new(), den: vec![1] };
        }
        let g = fp::gcd(&num, &den, self.p);
        let (n, _) = fp::divmod(&num, &g, self.p);
        let (d, _) = fp::divmod(&den, &g, self.p);
        let lc_inv = fp::invm(*d.last().unwrap(), self.p);
        RatFun { num: fp::scale(&n, lc_inv, self.p), den: fp::scale(&d, lc_inv, self.p) }
    }

    /// Derivative with unit scale: (n'd - nd') / d^2.
    fn raw_deriv(&self, a: &RatFun) -> RatFun {
        let p = self.p;
        let n1 = fp::deriv(&a.num, p);
        let d1 = fp::deriv(&a.den, p);
        let num = fp::sub(&fp::mul(&n1, &a.den, p), &fp::mul(&a.num, &d1, p), p);
        let den = fp::mul(&a.den, &a.den, p);
        self.reduce(num, den)
    }

    fn fmt_poly(poly: &Poly) -> String {
        if poly.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in poly.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let part = match (c, i) {
                (_, 0) => format!("{c}"),
                (1, 1) => "z".to_string(),
                (1, _) => format!("z^{i}"),
                (_, 1) => format!("{c}*z"),
                (_, _) => format!("{c}*z^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl SkewRing for RatFunField {
    type Elem = RatFun;

    fn ring_id(&self) -> RingId {
        RingId::RatFun
    }

    fn zero(&self) -> RatFun {
        RatFun { num: Vec::new(), den: vec![1] }
    }

    fn one(&self) -> RatFun {
        RatFun { num: vec![1], den: vec![1] }
    }

    fn from_int(&self, n: i64) -> RatFun {
        let r = n.rem_euclid(self.p as i64) as u64;
        self.poly(&[r])
    }

    fn add(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let p = self.p;
        let num = fp::add(
            &fp::mul(&a.num, &b.den, p),
            &fp::mul(&b.num, &a.den, p),
            p,
        );
        let den = fp::mul(&a.den, &b.den, p);
        self.reduce(num, den)
    }

    fn neg(&self, a: &RatFun) -> RatFun {
        RatFun { num: fp::neg(&a.num, self.p), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFun, b: &RatFun) -> RatFun {
        let p = self.p;
        self.reduce(fp::mul(&a.num, &b.num, p), fp::mul(&a.den, &b.den, p))
    }

    fn inv(&self, a: &RatFun) -> Result<RatFun> {
        if a.num.is_empty() {
            return Err(Error::InversionOfZero);
        }
        Ok(self.reduce(a.den.clone(), a.num.clone()))
    }

    fn sigma(&self, a: &RatFun) -> RatFun {
        a.clone()
    }

    fn sigma_invertible(&self) -> bool {
        true
    }

    fn sigma_inv(&self, a: &RatFun) -> Result<RatFun> {
        Ok(a.clone())
    }

    fn delta(&self, a: &RatFun) -> RatFun {
        self.mul(&self.scale, &self.raw_deriv(a))
    }

    fn base_dim(&self) -> Option<usize> {
        Some(self.p as usize)
    }

    fn basis(&self) -> Result<Vec<RatFun>> {
        Ok((0..self.p as usize)
            .map(|r| {
                let mut v = vec![0u64; r + 1];
                v[r] = 1;
                self.poly(&v)
            })
            .collect())
    }

    /// Split over F_p(z^p): write n/d = N(z)/d(z)^p with N = n * d^(p-1) and
    /// collect the z-exponents of N by residue class mod p. Everything stays a
    /// p-th power (A(z^p) = A(z)^p over F_p), so each coordinate reduces
    /// inside the subfield.
    fn coordinates(&self, a: &RatFun) -> Result<Vec<RatFun>> {
        let p = self.p;
        let pu = p as usize;
        let mut dpow = vec![1u64]; // d^(p-1)
        for _ in 1..p {
            dpow = fp::mul(&dpow, &a.den, p);
        }
        let big_num = fp::mul(&a.num, &dpow, p);
        let big_den = fp::mul(&dpow, &a.den, p); // d^p
        let mut out = Vec::with_capacity(pu);
        for r in 0..pu {
            let mut split = Vec::new();
            for (i, &c) in big_num.iter().enumerate() {
                if i % pu == r {
                    let k = i / pu;
                    if split.len() <= k * pu {
                        split.resize(k * pu + 1, 0);
                    }
                    split[k * pu] = c;
                }
            }
            out.push(self.reduce(fp::trim(split), big_den.clone()));
        }
        Ok(out)
    }

    fn from_coordinates(&self, coords: &[RatFun]) -> Result<RatFun> {
        if coords.len() != self.p as usize {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                self.p,
                coords.len()
            )));
        }
        let basis = self.basis()?;
        let mut acc = self.zero();
        for (c, b) in coords.iter().zip(&basis) {
            if !self.is_zero(&self.raw_deriv(c)) {
                return Err(Error::ContextMismatch(
                    "coordinate lies outside the constant subfield".into(),
                ));
            }
            acc = self.add(&acc, &self.mul(b, c));
        }
        Ok(acc)
    }

    fn symbol_elem(&self, name: char) -> Option<RatFun> {
        if name == 'z' {
            Some(self.z())
        } else {
            None
        }
    }

    fn format_elem(&self, a: &RatFun) -> String {
        if a.den == vec![1] {
            Self::fmt_poly(&a.num)
        } else {
            format!("({})/({})", Self::fmt_poly(&a.num), Self::fmt_poly(&a.den))
        }
    }
}
