//! Shared fixtures for the integration suites: ring constructors and seeded
//! generators for random elements and polynomials.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewmult_core::multiplicity::{extend_multseq, MultSeq};
use skewmult_core::poly::{SkewPoly, SkewPolyRing};
use skewmult_core::ring::SkewRing;
use skewmult_core::rings::{
    FfElem, FiniteField, GaussQ, GaussianRationals, Quat, Quaternions, RatFun, RatFunField,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn f9() -> SkewPolyRing<FiniteField> {
    SkewPolyRing::new(FiniteField::new(3, 2, &[1, 0, 1], 1).unwrap())
}

pub fn f27() -> SkewPolyRing<FiniteField> {
    SkewPolyRing::new(FiniteField::new(3, 3, &[1, 2, 0, 1], 1).unwrap())
}

pub fn quat() -> SkewPolyRing<Quaternions> {
    SkewPolyRing::new(Quaternions::new())
}

pub fn gauss() -> SkewPolyRing<GaussianRationals> {
    SkewPolyRing::new(GaussianRationals::new())
}

pub fn ratfun3() -> SkewPolyRing<RatFunField> {
    SkewPolyRing::new(RatFunField::standard(3).unwrap())
}

pub fn rand_ff(r: &FiniteField, rng: &mut ChaCha8Rng) -> FfElem {
    let coeffs: Vec<u64> = (0..r.extension_degree())
        .map(|_| rng.gen_range(0..r.characteristic()))
        .collect();
    r.element(&coeffs)
}

pub fn rand_quat(r: &Quaternions, rng: &mut ChaCha8Rng) -> Quat {
    let q = r.from_ints(
        rng.gen_range(-9..10),
        rng.gen_range(-9..10),
        rng.gen_range(-9..10),
        rng.gen_range(-9..10),
    );
    let den = r.from_int(rng.gen_range(1..4));
    r.mul(&q, &r.inv(&den).unwrap())
}

pub fn rand_gauss(r: &GaussianRationals, rng: &mut ChaCha8Rng) -> GaussQ {
    let a = r.from_ints(rng.gen_range(-9..10), rng.gen_range(-9..10));
    let den = r.from_int(rng.gen_range(1..4));
    r.mul(&a, &r.inv(&den).unwrap())
}

pub fn rand_ratfun(r: &RatFunField, rng: &mut ChaCha8Rng) -> RatFun {
    let p = r.characteristic();
    let num: Vec<u64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..p)).collect();
    let mut den: Vec<u64> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..p)).collect();
    if den.iter().all(|&c| c == 0) {
        den = vec![1];
    }
    r.fraction(&num, &den).unwrap()
}

pub fn rand_nonzero<R: SkewRing>(
    ring: &R,
    rng: &mut ChaCha8Rng,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem,
) -> R::Elem {
    loop {
        let a = gen(ring, rng);
        if a != ring.zero() {
            return a;
        }
    }
}

/// Random polynomial of degree exactly `deg` (the leading coefficient is
/// resampled until nonzero).
pub fn rand_poly<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    rng: &mut ChaCha8Rng,
    deg: usize,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem,
) -> SkewPoly<R> {
    let mut coeffs: Vec<R::Elem> = (0..deg).map(|_| gen(ring.ring(), rng)).collect();
    coeffs.push(rand_nonzero(ring.ring(), rng, gen));
    ring.poly(coeffs)
}

/// Extends a head to a validated multiplicity sequence of the given length.
pub fn grow_sequence<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    head: R::Elem,
    len: usize,
) -> MultSeq<R> {
    let mut seq = MultSeq::new(ring, vec![head]).unwrap();
    while seq.len() < len {
        seq = extend_multseq(ring, &seq).unwrap();
    }
    seq
}

/// Three distinct conjugates of one point whose witnesses are forced into a
/// two-dimensional coordinate-subfield span — a P-dependent family of heads
/// by the independence characterization.
pub fn dependent_cluster<R: SkewRing>(
    ring: &R,
    rng: &mut ChaCha8Rng,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem + Copy,
) -> Vec<R::Elem> {
    loop {
        let a = rand_nonzero(ring, rng, gen);
        let b1 = rand_nonzero(ring, rng, gen);
        let b2 = rand_nonzero(ring, rng, gen);
        let k1 = ring.from_int(rng.gen_range(1..3));
        let k2 = ring.from_int(rng.gen_range(1..3));
        let b3 = ring.add(&ring.mul(&b1, &k1), &ring.mul(&b2, &k2));
        if ring.is_zero(&b3) {
            continue;
        }
        let heads: Vec<_> = [b1, b2, b3]
            .iter()
            .map(|b| ring.conjugate(&a, b).unwrap())
            .collect();
        if heads[0] != heads[1] && heads[0] != heads[2] && heads[1] != heads[2] {
            return heads;
        }
    }
}
