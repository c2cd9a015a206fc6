//! The coefficient-ring abstraction: a division ring together with a twist
//! endomorphism `sigma` and a `sigma`-derivation `delta`.
//!
//! Everything in this crate is generic over [`SkewRing`]. A ring is a *context
//! object* (it may carry a modulus, a Frobenius exponent, a derivation scale);
//! elements are plain data owned by the caller and only make sense relative to
//! the context that produced them. All operations take `&self` and never
//! mutate the context.
//!
//! Laws every implementation must satisfy:
//!
//! * the element operations form a division ring (every nonzero element has a
//!   two-sided inverse);
//! * `sigma` is a ring endomorphism fixing 1;
//! * `delta` is additive and satisfies the twisted product rule
//!   `delta(a*b) = sigma(a)*delta(b) + delta(a)*b`;
//! * `coordinates`/`from_coordinates` are mutually inverse bijections between
//!   the ring and finite coordinate vectors over the *coordinate subfield* — a
//!   commutative subfield fixed by `sigma` and killed by `delta`, so that both
//!   maps and the coordinate arithmetic are compatible with the twist.
//!
//! Optional capabilities come as defaulted methods returning typed errors:
//! `sigma_inv` (needed by left division), `enumerate` (brute-force zero sets),
//! `solve_conjugation` / `pair_valid_closed_form` / `galois_order` (the
//! sequence-validity machinery and class polynomials). A fifth ring can be
//! plugged in by implementing the required core and overriding whichever
//! capabilities it supports; operations it does not opt into fail with
//! `UnsupportedRing`, `NotEnumerable` or `SigmaNotInvertible` rather than
//! misbehaving silently.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Tag identifying which concrete coefficient ring a context is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingId {
    /// gf(p^m) with a power-of-Frobenius twist and zero derivation.
    FiniteField,
    /// Rational quaternions with identity twist and zero derivation.
    Quaternion,
    /// Gaussian rationals with conjugation twist and zero derivation.
    Gaussian,
    /// Rational functions over a prime field with identity twist and
    /// derivation `c * d/dz`.
    RatFun,
}

/// A division ring `F` equipped with an endomorphism `sigma` and a
/// `sigma`-derivation `delta`, presented as a context object.
pub trait SkewRing: Clone + Debug {
    /// Element representation. Canonical: equal elements compare equal.
    type Elem: Clone + PartialEq + Eq + Hash + Debug;

    fn ring_id(&self) -> RingId;

    // ---- Ring arithmetic ----

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    /// Image of the integer `n` under the unique ring map from the integers.
    fn from_int(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Two-sided multiplicative inverse. Errors with `InversionOfZero` on 0.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Right quotient `a * b^{-1}`.
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    // ---- Twist and derivation ----

    fn sigma(&self, a: &Self::Elem) -> Self::Elem;

    /// Whether `sigma` has an inverse available (needed for left division).
    fn sigma_invertible(&self) -> bool {
        false
    }

    /// Preimage under `sigma`. Errors with `SigmaNotInvertible` by default.
    fn sigma_inv(&self, _a: &Self::Elem) -> Result<Self::Elem> {
        Err(Error::SigmaNotInvertible)
    }

    fn delta(&self, a: &Self::Elem) -> Self::Elem;

    // ---- Coordinates over the coordinate subfield ----

    /// Dimension of the ring as a vector space over its coordinate subfield,
    /// or `None` if no finite coordinatization exists.
    fn base_dim(&self) -> Option<usize>;

    /// The coordinate basis, length `base_dim()`. Errors with
    /// `NoFiniteCoordinatization` when `base_dim()` is `None`.
    fn basis(&self) -> Result<Vec<Self::Elem>>;

    /// Coordinates of `a` on `basis()`; every entry lies in the coordinate
    /// subfield. Inverse of `from_coordinates`.
    fn coordinates(&self, a: &Self::Elem) -> Result<Vec<Self::Elem>>;

    /// Element with the given coordinates. Errors with `DimensionMismatch`
    /// when the vector length is not `base_dim()`.
    fn from_coordinates(&self, coords: &[Self::Elem]) -> Result<Self::Elem>;

    // ---- Enumeration (finite rings only) ----

    fn enumerable(&self) -> bool {
        false
    }

    /// All ring elements in a fixed deterministic order (coordinate
    /// lexicographic for the finite fields). Errors with `NotEnumerable`.
    fn enumerate(&self) -> Result<Vec<Self::Elem>> {
        Err(Error::NotEnumerable)
    }

    // ---- Derived twisted-conjugacy operations ----

    /// The map `beta -> sigma(beta) * a + delta(beta)` whose iterates drive
    /// high-degree evaluation at `a`.
    fn dmap(&self, a: &Self::Elem, beta: &Self::Elem) -> Self::Elem {
        self.add(&self.mul(&self.sigma(beta), a), &self.delta(beta))
    }

    /// Twisted conjugate `a^beta = sigma(beta) * a * beta^{-1} + delta(beta) * beta^{-1}`.
    /// Errors with `InversionOfZero` when `beta = 0`.
    fn conjugate(&self, a: &Self::Elem, beta: &Self::Elem) -> Result<Self::Elem> {
        let beta_inv = self.inv(beta)?;
        Ok(self.mul(&self.dmap(a, beta), &beta_inv))
    }

    /// Whether `beta` centralizes `a`, i.e. `sigma(beta)*a + delta(beta) = a*beta`.
    /// The centralizer of any point is a division subring containing the
    /// coordinate subfield; 0 is included by convention.
    fn centralizer_contains(&self, a: &Self::Elem, beta: &Self::Elem) -> bool {
        self.dmap(a, beta) == self.mul(a, beta)
    }

    // ---- Conjugacy decision procedures (per-ring capability) ----

    /// Some `beta != 0` with `a^beta = b`, or `None` when `a` and `b` are not
    /// conjugate. Errors with `UnsupportedRing` when the ring has no
    /// procedure. The full solution set is `beta * K_a^*` for the centralizer
    /// `K_a`, so a single representative determines everything downstream.
    fn solve_conjugation(&self, _a: &Self::Elem, _b: &Self::Elem) -> Result<Option<Self::Elem>> {
        Err(Error::UnsupportedRing("conjugacy solving"))
    }

    /// Whether `a` and `b` are twisted-conjugate, by the ring's closed form.
    fn is_conjugate(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        Ok(self.solve_conjugation(a, b)?.is_some())
    }

    /// Closed-form decision for "(a, b) is a valid length-2 multiplicity
    /// sequence", special to each ring. The generic linear-algebra criterion
    /// lives in the multiplicity module; this is the independent cross-check.
    fn pair_valid_closed_form(&self, _a: &Self::Elem, _b: &Self::Elem) -> Result<bool> {
        Err(Error::UnsupportedRing("closed-form sequence validation"))
    }

    /// Ascending coefficients of the minimal monic skew polynomial vanishing
    /// on the entire conjugacy class of `a`. Rings without a closed form
    /// report `UnsupportedRing`.
    fn class_minpoly_coeffs(&self, _a: &Self::Elem) -> Result<Vec<Self::Elem>> {
        Err(Error::UnsupportedRing("conjugacy-class minimal polynomials"))
    }

    // ---- Cyclic Galois structure (finite fields and gaussian rationals) ----

    /// Order of `sigma` as an automorphism over the fixed field, for rings
    /// where `F/Fix(sigma)` is a finite cyclic extension and `delta = 0`.
    fn galois_order(&self) -> Result<usize> {
        Err(Error::UnsupportedRing("cyclic Galois structure"))
    }

    /// Field norm `a * sigma(a) * ... * sigma^{ord-1}(a)` down to the fixed
    /// field of `sigma`. The result is checked to be sigma-fixed.
    fn norm(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let ord = self.galois_order()?;
        let mut acc = self.one();
        let mut pow = a.clone();
        for _ in 0..ord {
            acc = self.mul(&acc, &pow);
            pow = self.sigma(&pow);
        }
        assert_eq!(self.sigma(&acc), acc, "norm landed outside the fixed field");
        Ok(acc)
    }

    /// Field trace `a + sigma(a) + ... + sigma^{ord-1}(a)` down to the fixed
    /// field of `sigma`. The result is checked to be sigma-fixed.
    fn trace(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let ord = self.galois_order()?;
        let mut acc = self.zero();
        let mut pow = a.clone();
        for _ in 0..ord {
            acc = self.add(&acc, &pow);
            pow = self.sigma(&pow);
        }
        assert_eq!(self.sigma(&acc), acc, "trace landed outside the fixed field");
        Ok(acc)
    }

    // ---- Text hooks (used by the shared expression parser and printers) ----

    /// Named generator this ring understands in element literals
    /// (`g` for finite fields, `i`/`j`/`k` for quaternions, `i` for gaussian
    /// rationals, `z` for rational functions).
    fn symbol_elem(&self, name: char) -> Option<Self::Elem>;

    /// Canonical display form; guaranteed to re-parse to the same element.
    fn format_elem(&self, a: &Self::Elem) -> String;
}
