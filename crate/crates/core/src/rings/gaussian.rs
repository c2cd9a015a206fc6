//! Gaussian rationals Q(i) twisted by complex conjugation, zero derivation.
//!
//! A commutative field made genuinely skew by the twist: x * a = conj(a) * x.
//! This is the degree-2 cyclic case, so norm (a * conj(a)) and trace
//! (a + conj(a)) land in Q and Hilbert 90 decides conjugacy.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::ring::{RingId, SkewRing};
use crate::rings::fmt_rational;

/// re + im * i with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussQ { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussQ { re, im: BigRational::zero() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// Context object for Q(i) with sigma = conjugation.
#[derive(Clone, Debug, Default)]
pub struct GaussianRationals;

impl GaussianRationals {
    pub fn new() -> Self {
        GaussianRationals
    }

    pub fn from_ints(&self, re: i64, im: i64) -> GaussQ {
        GaussQ::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    /// Complex conjugate (this is also sigma).
    pub fn conj(&self, a: &GaussQ) -> GaussQ {
        GaussQ::new(a.re.clone(), -a.im.clone())
    }
}

impl SkewRing for GaussianRationals {
    type Elem = GaussQ;

    fn ring_id(&self) -> RingId {
        RingId::Gaussian
    }

    fn zero(&self) -> GaussQ {
        GaussQ::real(BigRational::zero())
    }

    fn one(&self) -> GaussQ {
        GaussQ::real(BigRational::one())
    }

    fn from_int(&self, n: i64) -> GaussQ {
        GaussQ::real(BigRational::from_integer(n.into()))
    }

    fn add(&self, a: &GaussQ, b: &GaussQ) -> GaussQ {
        GaussQ::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn neg(&self, a: &GaussQ) -> GaussQ {
        GaussQ::new(-a.re.clone(), -a.im.clone())
    }

    fn mul(&self, a: &GaussQ, b: &GaussQ) -> GaussQ {
        GaussQ::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
    }

    fn inv(&self, a: &GaussQ) -> Result<GaussQ> {
        if self.is_zero(a) {
            return Err(Error::InversionOfZero);
        }
        let n = &a.re * &a.re + &a.im * &a.im;
        Ok(GaussQ::new(&a.re / &n, -a.im.clone() / &n))
    }

    fn sigma(&self, a: &GaussQ) -> GaussQ {
        self.conj(a)
    }

    fn sigma_invertible(&self) -> bool {
        true
    }

    /// Conjugation is an involution, so it is its own inverse.
    fn sigma_inv(&self, a: &GaussQ) -> Result<GaussQ> {
        Ok(self.conj(a))
    }

    fn delta(&self, _a: &GaussQ) -> GaussQ {
        self.zero()
    }

    fn base_dim(&self) -> Option<usize> {
        Some(2)
    }

    fn basis(&self) -> Result<Vec<GaussQ>> {
        Ok(vec![self.one(), self.symbol_elem('i').unwrap()])
    }

    fn coordinates(&self, a: &GaussQ) -> Result<Vec<GaussQ>> {
        Ok(vec![GaussQ::real(a.re.clone()), GaussQ::real(a.im.clone())])
    }

    fn from_coordinates(&self, coords: &[GaussQ]) -> Result<GaussQ> {
        if coords.len() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "expected 2 coordinates, got {}",
                coords.len()
            )));
        }
        for c in coords {
            if !c.is_real() {
                return Err(Error::ContextMismatch(
                    "coordinate lies outside the rational subfield".into(),
                ));
            }
        }
        Ok(GaussQ::new(coords[0].re.clone(), coords[1].re.clone()))
    }

    /// Kernel vector of `beta -> conj(beta)*a - b*beta` over the rational
    /// coordinates.
    fn solve_conjugation(&self, a: &GaussQ, b: &GaussQ) -> Result<Option<GaussQ>> {
        let kernel = linalg::map_kernel_basis(self, |beta| {
            self.sub(&self.mul(&self.sigma(beta), a), &self.mul(b, beta))
        })?;
        Ok(kernel.into_iter().next())
    }

    /// Hilbert 90: nonzero points are conjugate exactly when their norms
    /// (squared moduli) agree.
    fn is_conjugate(&self, a: &GaussQ, b: &GaussQ) -> Result<bool> {
        match (self.is_zero(a), self.is_zero(b)) {
            (true, true) => Ok(true),
            (true, false) | (false, true) => Ok(false),
            (false, false) => Ok(self.norm(a)? == self.norm(b)?),
        }
    }

    /// Closed form for a valid length-2 sequence: both zero, or both nonzero
    /// with equal norms and `conj(b) != -a`.
    fn pair_valid_closed_form(&self, a: &GaussQ, b: &GaussQ) -> Result<bool> {
        match (self.is_zero(a), self.is_zero(b)) {
            (true, true) => Ok(true),
            (true, false) | (false, true) => Ok(false),
            (false, false) => {
                Ok(self.norm(a)? == self.norm(b)? && self.conj(b) != self.neg(a))
            }
        }
    }

    fn galois_order(&self) -> Result<usize> {
        Ok(2)
    }

    /// `x` for `a = 0`; otherwise `x^2 - N(a)`: the class of `a` under
    /// conjugation twisted by complex conjugation is the full norm circle
    /// `{b : |b|^2 = |a|^2}`, even for real `a`.
    fn class_minpoly_coeffs(&self, a: &GaussQ) -> Result<Vec<GaussQ>> {
        if self.is_zero(a) {
            return Ok(vec![self.zero(), self.one()]);
        }
        Ok(vec![self.neg(&self.norm(a)?), self.zero(), self.one()])
    }

    fn symbol_elem(&self, name: char) -> Option<GaussQ> {
        if name == 'i' {
            Some(GaussQ::new(BigRational::zero(), BigRational::one()))
        } else {
            None
        }
    }

    fn format_elem(&self, a: &GaussQ) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !a.re.is_zero() {
            parts.push(fmt_rational(&a.re));
        }
        if !a.im.is_zero() {
            if a.im.is_one() {
                parts.push("i".to_string());
            } else if (-a.im.clone()).is_one() {
                parts.push("-i".to_string());
            } else {
                parts.push(format!("{}i", fmt_rational(&a.im)));
            }
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}
