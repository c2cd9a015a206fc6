//! Rational quaternions H = Q + Qi + Qj + Qk with the identity twist and
//! zero derivation: the classic noncommutative division ring, where twisted
//! conjugacy is ordinary similarity `a -> beta * a * beta^{-1}`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::ring::{RingId, SkewRing};
use crate::rings::fmt_rational;

/// w + x*i + y*j + z*k with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quat {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl Quat {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Quat { w, x, y, z }
    }

    pub fn scalar(w: BigRational) -> Self {
        Quat { w, x: BigRational::zero(), y: BigRational::zero(), z: BigRational::zero() }
    }

    /// Whether the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

/// Context object for the rational quaternions.
#[derive(Clone, Debug, Default)]
pub struct Quaternions;

impl Quaternions {
    pub fn new() -> Self {
        Quaternions
    }

    /// Quaternion from integer components.
    pub fn from_ints(&self, w: i64, x: i64, y: i64, z: i64) -> Quat {
        let r = |n: i64| BigRational::from_integer(n.into());
        Quat::new(r(w), r(x), r(y), r(z))
    }

    /// Real part, as a scalar quaternion.
    pub fn quat_re(&self, a: &Quat) -> Quat {
        Quat::scalar(a.w.clone())
    }

    /// Quaternion conjugate w - xi - yj - zk.
    pub fn quat_conj(&self, a: &Quat) -> Quat {
        Quat::new(a.w.clone(), -a.x.clone(), -a.y.clone(), -a.z.clone())
    }

    /// Squared modulus w^2 + x^2 + y^2 + z^2, as a scalar quaternion.
    pub fn quat_mod_sq(&self, a: &Quat) -> Quat {
        let m = &a.w * &a.w + &a.x * &a.x + &a.y * &a.y + &a.z * &a.z;
        Quat::scalar(m)
    }
}

impl SkewRing for Quaternions {
    type Elem = Quat;

    fn ring_id(&self) -> RingId {
        RingId::Quaternion
    }

    fn zero(&self) -> Quat {
        Quat::scalar(BigRational::zero())
    }

    fn one(&self) -> Quat {
        Quat::scalar(BigRational::one())
    }

    fn from_int(&self, n: i64) -> Quat {
        Quat::scalar(BigRational::from_integer(n.into()))
    }

    fn add(&self, a: &Quat, b: &Quat) -> Quat {
        Quat::new(&a.w + &b.w, &a.x + &b.x, &a.y + &b.y, &a.z + &b.z)
    }

    fn neg(&self, a: &Quat) -> Quat {
        Quat::new(-a.w.clone(), -a.x.clone(), -a.y.clone(), -a.z.clone())
    }

    fn mul(&self, a: &Quat, b: &Quat) -> Quat {
        Quat::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }

    fn inv(&self, a: &Quat) -> Result<Quat> {
        if self.is_zero(a) {
            return Err(Error::InversionOfZero);
        }
        let m = self.quat_mod_sq(a).w;
        let c = self.quat_conj(a);
        Ok(Quat::new(c.w / &m, c.x / &m, c.y / &m, c.z / &m))
    }

    fn sigma(&self, a: &Quat) -> Quat {
        a.clone()
    }

    fn sigma_invertible(&self) -> bool {
        true
    }

    fn sigma_inv(&self, a: &Quat) -> Result<Quat> {
        Ok(a.clone())
    }

    fn delta(&self, _a: &Quat) -> Quat {
        self.zero()
    }

    fn base_dim(&self) -> Option<usize> {
        Some(4)
    }

    fn basis(&self) -> Result<Vec<Quat>> {
        Ok(vec![
            self.one(),
            self.symbol_elem('i').unwrap(),
            self.symbol_elem('j').unwrap(),
            self.symbol_elem('k').unwrap(),
        ])
    }

    fn coordinates(&self, a: &Quat) -> Result<Vec<Quat>> {
        Ok(vec![
            Quat::scalar(a.w.clone()),
            Quat::scalar(a.x.clone()),
            Quat::scalar(a.y.clone()),
            Quat::scalar(a.z.clone()),
        ])
    }

    fn from_coordinates(&self, coords: &[Quat]) -> Result<Quat> {
        if coords.len() != 4 {
            return Err(Error::DimensionMismatch(format!(
                "expected 4 coordinates, got {}",
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
        Ok(Quat::new(
            coords[0].w.clone(),
            coords[1].w.clone(),
            coords[2].w.clone(),
            coords[3].w.clone(),
        ))
    }

    /// Kernel vector of `beta -> beta*a - b*beta` over the rational
    /// coordinates; similarity classes are cut out by real part and modulus.
    fn solve_conjugation(&self, a: &Quat, b: &Quat) -> Result<Option<Quat>> {
        let kernel = linalg::map_kernel_basis(self, |beta| {
            self.sub(&self.mul(beta, a), &self.mul(b, beta))
        })?;
        Ok(kernel.into_iter().next())
    }

    fn is_conjugate(&self, a: &Quat, b: &Quat) -> Result<bool> {
        if a.is_real() {
            return Ok(a == b);
        }
        Ok(!b.is_real()
            && self.quat_re(a) == self.quat_re(b)
            && self.quat_mod_sq(a) == self.quat_mod_sq(b))
    }

    /// Closed form for a valid length-2 sequence: a repeated real point, or
    /// two non-real points with equal real parts, equal moduli, and
    /// `conj(b) != a`.
    fn pair_valid_closed_form(&self, a: &Quat, b: &Quat) -> Result<bool> {
        if a.is_real() || b.is_real() {
            return Ok(a == b && a.is_real());
        }
        Ok(self.quat_re(a) == self.quat_re(b)
            && self.quat_mod_sq(a) == self.quat_mod_sq(b)
            && self.quat_conj(b) != *a)
    }

    /// `x - a` for central (real) `a`; otherwise the characteristic
    /// polynomial `x^2 - 2 Re(a) x + |a|^2`, whose zeros form the similarity
    /// class of `a`.
    fn class_minpoly_coeffs(&self, a: &Quat) -> Result<Vec<Quat>> {
        if a.is_real() {
            return Ok(vec![self.neg(a), self.one()]);
        }
        let two_re = self.mul(&self.from_int(2), &self.quat_re(a));
        Ok(vec![self.quat_mod_sq(a), self.neg(&two_re), self.one()])
    }

    fn symbol_elem(&self, name: char) -> Option<Quat> {
        let one = BigRational::one();
        let zero = BigRational::zero;
        match name {
            'i' => Some(Quat::new(zero(), one, zero(), zero())),
            'j' => Some(Quat::new(zero(), zero(), one, zero())),
            'k' => Some(Quat::new(zero(), zero(), zero(), one)),
            _ => None,
        }
    }

    fn format_elem(&self, a: &Quat) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !a.w.is_zero() {
            parts.push(fmt_rational(&a.w));
        }
        for (c, unit) in [(&a.x, "i"), (&a.y, "j"), (&a.z, "k")] {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(unit.to_string());
            } else if (-c.clone()).is_one() {
                parts.push(format!("-{unit}"));
            } else {
                parts.push(format!("{}{unit}", fmt_rational(c)));
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
