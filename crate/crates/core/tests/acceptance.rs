//! Acceptance gate: twelve numbered checks, one per release criterion, each
//! printing a single pass/fail line (`cargo test -- --nocapture` shows them).
//! Together they pin the worked examples and the exhaustive/statistical
//! guarantees the library is expected to uphold.

mod common;

use std::collections::HashSet;
use std::time::Instant;

use common::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use skewmult_core::interp::hermite_interpolate;
use skewmult_core::linalg;
use skewmult_core::multiplicity::{
    conjclass_minpoly, defect_image_rows, hasse_derivative, mult_check_1, mult_check_2,
    taylor_expand, unique_factorization_check, validate_multseq, validate_multseq_specialized,
    MultSeq,
};
use skewmult_core::poly::{
    is_p_independent, minimal_poly, Degree, PointEntry, PointSet, SkewPolyRing,
};
use skewmult_core::ring::SkewRing;
use skewmult_core::rings::FiniteField;
use skewmult_core::text::parse_poly;
use skewmult_core::Error;

fn report(n: usize, label: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("criterion {n} [{label}]: PASS"),
        Err(e) => {
            println!("criterion {n} [{label}]: FAIL — {e}");
            panic!("criterion {n} [{label}] failed: {e}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: skewmult_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---- 1: the repeated-point collision in gf(9) ----

#[test]
fn criterion_01_power_collision_regression() {
    report(1, "repeated-point collision in gf(9)", (|| {
        let start = Instant::now();
        let ring = f9();
        let f = ring.ring();

        // gamma = g + 1 generates the multiplicative group (order 8).
        let gamma = f.element(&[1, 1]);
        let mut cur = gamma.clone();
        let mut order = 1usize;
        while cur != f.one() {
            cur = f.mul(&cur, &gamma);
            order += 1;
            ensure!(order <= 8, "g + 1 does not have multiplicative order 8");
        }
        ensure!(order == 8, "g + 1 has order {order}, expected 8");

        let a = f.mul(&gamma, &gamma);
        ensure!(a == f.element(&[0, 2]), "gamma^2 must equal 2g");
        let b = f.neg(&a);
        ensure!(a != b, "the two points must differ");

        let pa2 = ring.pow(&ring.linear(&a), 2);
        let pb2 = ring.pow(&ring.linear(&b), 2);
        let target = ok(parse_poly(&ring, "x^2 + 2"))?;
        ensure!(pa2 == target, "(x - 2g)^2 != x^2 + 2: got {}", ring.format_poly(&pa2));
        ensure!(pb2 == target, "(x - g)^2 != x^2 + 2: got {}", ring.format_poly(&pb2));

        let heads = ok(PointSet::new(
            &ring,
            vec![PointEntry::Simple(a.clone()), PointEntry::Simple(b.clone())],
        ))?;
        ensure!(ok(is_p_independent(&ring, &heads))?, "the two points must be P-independent");

        let powers = ok(PointSet::new(
            &ring,
            vec![PointEntry::Power(a.clone(), 2), PointEntry::Power(b.clone(), 3)],
        ))?;
        ensure!(
            !ok(is_p_independent(&ring, &powers))?,
            "the colliding power family must be P-dependent"
        );

        ensure!(start.elapsed().as_secs_f64() < 1.0, "check exceeded one second");
        Ok(())
    })());
}

// ---- 2: the four sequence predicates agree ----

fn oracles_agree(
    ring: &SkewPolyRing<FiniteField>,
    points: &[skewmult_core::rings::FfElem],
) -> Result<(), String> {
    let seq = ok(MultSeq::new(ring, points.to_vec()))?;
    let brute = ok(ring.zero_set_brute(seq.poly()))?.len() == 1;
    let pairwise = ok(validate_multseq_specialized(ring, points))?;
    let membership = ok(validate_multseq(ring, points))?;
    let factorization = ok(unique_factorization_check(ring, &seq))?;
    ensure!(
        brute == pairwise && pairwise == membership && membership == factorization,
        "oracle disagreement at {points:?}: brute={brute} pairwise={pairwise} \
         membership={membership} factorization={factorization}"
    );
    Ok(())
}

#[test]
fn criterion_02_sequence_oracle_equivalence() {
    report(2, "four sequence oracles agree exhaustively", (|| {
        let start = Instant::now();
        let ring = f9();
        let all = ring.ring().enumerate().map_err(|e| e.to_string())?;
        for a in &all {
            for b in &all {
                oracles_agree(&ring, &[a.clone(), b.clone()])?;
                for c in &all {
                    oracles_agree(&ring, &[a.clone(), b.clone(), c.clone()])?;
                }
            }
        }
        let ring = f27();
        let all = ring.ring().enumerate().map_err(|e| e.to_string())?;
        for a in &all {
            for b in &all {
                oracles_agree(&ring, &[a.clone(), b.clone()])?;
            }
        }
        ensure!(start.elapsed().as_secs_f64() < 60.0, "check exceeded sixty seconds");
        Ok(())
    })());
}

// ---- 3: degree identity for gcrd and lclm ----

fn degree_identity<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    rng: &mut ChaCha8Rng,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem + Copy,
    rounds: usize,
) -> Result<(), String> {
    for _ in 0..rounds {
        let (df, dg) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let f = rand_poly(ring, rng, df, gen);
        let g = rand_poly(ring, rng, dg, gen);
        let d = ok(ring.gcrd(&f, &g))?.degree().finite().unwrap();
        let m = ok(ring.lclm(&f, &g))?.degree().finite().unwrap();
        ensure!(
            d + m == df + dg,
            "degree identity failed: deg(gcrd)={d}, deg(lclm)={m}, inputs {df}+{dg}"
        );
    }
    Ok(())
}

#[test]
fn criterion_03_gcrd_lclm_degree_identity() {
    report(3, "gcrd/lclm degree identity", (|| {
        let mut r = rng(301);
        degree_identity(&f9(), &mut r, rand_ff, 1000)?;
        degree_identity(&quat(), &mut r, rand_quat, 1000)?;
        degree_identity(&gauss(), &mut r, rand_gauss, 1000)?;
        degree_identity(&ratfun3(), &mut r, rand_ratfun, 1000)?;
        Ok(())
    })());
}

// ---- 4: product rule and the twisted-evaluation formula ----

fn product_and_connection<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    rng: &mut ChaCha8Rng,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem + Copy,
    rounds: usize,
) -> Result<(), String> {
    let base = ring.ring();
    for i in 0..rounds {
        let a = gen(base, rng);

        // Product rule, with the vanishing branch forced every third round.
        let (df, dg) = (rng.gen_range(0..=4), rng.gen_range(0..=3));
        let f = rand_poly(ring, rng, df, gen);
        let g = if i % 3 == 0 {
            let h = rand_poly(ring, rng, dg, gen);
            ring.mul(&h, &ring.linear(&a))
        } else {
            rand_poly(ring, rng, dg, gen)
        };
        let fg_at_a = ring.eval_point(&ring.mul(&f, &g), &a);
        let g_at_a = ring.eval_point(&g, &a);
        if base.is_zero(&g_at_a) {
            ensure!(base.is_zero(&fg_at_a), "product must vanish when the right factor does");
        } else {
            let shifted = ok(base.conjugate(&a, &g_at_a))?;
            let expected = base.mul(&ring.eval_point(&f, &shifted), &g_at_a);
            ensure!(fg_at_a == expected, "product rule failed at round {i}");
        }

        // Evaluation at a conjugate equals the twisted operator sum:
        // F(a^beta) * beta = sum_i f_i * D_a^i(beta).
        let beta = rand_nonzero(base, rng, gen);
        let lhs = base.mul(
            &ring.eval_point(&f, &ok(base.conjugate(&a, &beta))?),
            &beta,
        );
        let mut rhs = base.zero();
        let mut dpow = beta.clone();
        for c in f.coeffs() {
            rhs = base.add(&rhs, &base.mul(c, &dpow));
            dpow = base.dmap(&a, &dpow);
        }
        ensure!(lhs == rhs, "connecting identity failed at round {i}");
    }
    Ok(())
}

#[test]
fn criterion_04_product_rule_and_connecting_evaluations() {
    report(4, "product rule and connecting evaluations", (|| {
        let mut r = rng(401);
        product_and_connection(&f9(), &mut r, rand_ff, 1000)?;
        product_and_connection(&quat(), &mut r, rand_quat, 1000)?;
        product_and_connection(&gauss(), &mut r, rand_gauss, 1000)?;
        product_and_connection(&ratfun3(), &mut r, rand_ratfun, 1000)?;
        Ok(())
    })());
}

// ---- 5: Hermite round-trip with exact singularity detection ----

/// One interpolation instance; returns whether the system was solvable.
fn hermite_instance<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    rng: &mut ChaCha8Rng,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem + Copy,
    cluster: bool,
) -> Result<bool, String> {
    let base = ring.ring();
    let heads = if cluster {
        dependent_cluster(base, rng, gen)
    } else {
        let n = rng.gen_range(1..=3);
        let mut heads = Vec::new();
        while heads.len() < n {
            let h = gen(base, rng);
            if !heads.contains(&h) {
                heads.push(h);
            }
        }
        heads
    };
    let seqs: Vec<_> = heads
        .iter()
        .map(|h| {
            let len = rng.gen_range(1..=2);
            grow_sequence(ring, h.clone(), len)
        })
        .collect();
    let n_total: usize = seqs.iter().map(|s| s.len()).sum();

    let df = rng.gen_range(0..n_total);
    let f = rand_poly(ring, rng, df, gen);
    let mut targets = Vec::new();
    for s in &seqs {
        for j in 1..=s.len() {
            targets.push(ok(hasse_derivative(ring, &f, &s.points()[..j]))?);
        }
    }

    let entries = seqs
        .iter()
        .map(|s| {
            if s.len() == 1 {
                PointEntry::Simple(s.head().clone())
            } else {
                PointEntry::Sequence(s.points().to_vec())
            }
        })
        .collect();
    let independent = ok(is_p_independent(ring, &ok(PointSet::new(ring, entries))?))?;

    match hermite_interpolate(ring, &seqs, &targets) {
        Ok(got) => {
            ensure!(independent, "solved a system the independence test calls singular");
            ensure!(got == f, "interpolation did not recover the sampled polynomial");
            Ok(true)
        }
        Err(Error::NotPIndependent) => {
            ensure!(!independent, "singular system for a P-independent family");
            Ok(false)
        }
        Err(e) => Err(format!("unexpected interpolation error: {e}")),
    }
}

#[test]
fn criterion_05_hermite_round_trip() {
    report(5, "hermite round-trip with exact singularity detection", (|| {
        let mut r = rng(501);

        let ring = f27();
        let mut solved = 0usize;
        let mut singular = 0usize;
        for i in 0..200 {
            match hermite_instance(&ring, &mut r, rand_ff, i % 4 == 3)? {
                true => solved += 1,
                false => singular += 1,
            }
        }
        ensure!(solved >= 10 && singular >= 10, "gf(27) coverage too thin: {solved}/{singular}");

        let ring = quat();
        let mut solved = 0usize;
        let mut singular = 0usize;
        for i in 0..200 {
            match hermite_instance(&ring, &mut r, rand_quat, i % 4 == 3)? {
                true => solved += 1,
                false => singular += 1,
            }
        }
        ensure!(solved >= 10 && singular >= 10, "quaternion coverage too thin: {solved}/{singular}");
        Ok(())
    })());
}

// ---- 6: class polynomial and multiplicity over a full conjugacy class ----

#[test]
fn criterion_06_multiplicity_across_a_class() {
    report(6, "class polynomial and class-wide multiplicity", (|| {
        let ring = f9();
        let f = ring.ring();
        let a = f.element(&[0, 2]); // 2g

        let class_poly = ok(conjclass_minpoly(&ring, &a))?;
        ensure!(
            class_poly == ok(parse_poly(&ring, "x^2 - 1"))?,
            "class polynomial of 2g must be x^2 - 1, got {}",
            ring.format_poly(&class_poly)
        );

        // The zero set of the class polynomial is exactly the class, size 4.
        let zeros: HashSet<_> = ok(ring.zero_set_brute(&class_poly))?.into_iter().collect();
        let mut class = HashSet::new();
        for beta in ok(f.enumerate())? {
            if !f.is_zero(&beta) {
                class.insert(ok(f.conjugate(&a, &beta))?);
            }
        }
        ensure!(class.len() == 4, "the class of 2g must have 4 elements, got {}", class.len());
        ensure!(zeros == class, "zero set of the class polynomial must equal the class");

        // (x^2 - 1)^2 divides F  <=>  every class element carries a validated
        // length-2 sequence whose polynomial divides F.
        let square = ring.pow(&class_poly, 2);
        let everyone = ok(f.enumerate())?;
        let mut r = rng(601);
        for i in 0..50 {
            let ff = if i % 2 == 0 {
                let dg = r.gen_range(0..=2);
                ring.mul(&rand_poly(&ring, &mut r, dg, rand_ff), &square)
            } else {
                let df = r.gen_range(2..=5);
                rand_poly(&ring, &mut r, df, rand_ff)
            };
            let by_division = ok(ring.right_divmod(&ff, &square))?.1.is_zero();
            let mut by_sequences = true;
            'class: for b in &class {
                for c in &everyone {
                    if ok(validate_multseq(&ring, &[b.clone(), c.clone()]))? {
                        let seq = ok(MultSeq::new(&ring, vec![b.clone(), c.clone()]))?;
                        let seq = ok(seq.validated(&ring))?;
                        if ok(mult_check_2(&ring, &ff, &seq))? {
                            continue 'class;
                        }
                    }
                }
                by_sequences = false;
                break;
            }
            ensure!(
                by_division == by_sequences,
                "class-wide multiplicity mismatch at round {i}: division={by_division}, \
                 sequences={by_sequences}"
            );
        }
        Ok(())
    })());
}

// ---- 7: quaternion chains, closed form versus linear algebra ----

#[test]
fn criterion_07_quaternion_chains() {
    report(7, "quaternion chain validation, closed form vs linear algebra", (|| {
        let ring = quat();
        let f = ring.ring();
        let mut r = rng(701);
        let mut outcomes = [0usize; 2];
        for _ in 0..500 {
            let len = r.gen_range(1..=4);
            let mut points = vec![rand_quat(f, &mut r)];
            while points.len() < len {
                let next = if r.gen_range(0..5) < 4 {
                    let beta = rand_nonzero(f, &mut r, rand_quat);
                    ok(f.conjugate(points.last().unwrap(), &beta))?
                } else {
                    rand_quat(f, &mut r)
                };
                points.push(next);
            }
            let closed = ok(validate_multseq_specialized(&ring, &points))?;
            let algebra = ok(validate_multseq(&ring, &points))?;
            ensure!(closed == algebra, "criteria disagree on {points:?}");
            outcomes[closed as usize] += 1;
        }
        ensure!(
            outcomes[0] >= 50 && outcomes[1] >= 50,
            "sampling must exercise both outcomes: {outcomes:?}"
        );

        // Constant tuples always validate.
        for _ in 0..100 {
            let a = rand_quat(f, &mut r);
            let len = r.gen_range(2..=4);
            ensure!(
                ok(validate_multseq(&ring, &vec![a.clone(); len]))?,
                "constant tuple rejected at {a:?}"
            );
        }

        // (i, -i) is conjugate but never a multiplicity sequence.
        let i = f.symbol_elem('i').unwrap();
        let pair = [i.clone(), f.neg(&i)];
        ensure!(ok(f.is_conjugate(&pair[0], &pair[1]))?, "i and -i must be conjugate");
        ensure!(!ok(validate_multseq(&ring, &pair))?, "(i, -i) must be rejected");
        ensure!(
            !ok(validate_multseq_specialized(&ring, &pair))?,
            "(i, -i) must be rejected by the closed form"
        );
        Ok(())
    })());
}

// ---- 8: gaussian rationals, conjugation twist ----

#[test]
fn criterion_08_gaussian_pathology() {
    report(8, "gaussian repeated-point pathology", (|| {
        let ring = gauss();
        let f = ring.ring();

        let squared = ok(parse_poly(&ring, "(x - 2i)^2"))?;
        ensure!(
            squared == ok(parse_poly(&ring, "x^2 - 4"))?,
            "(x - 2i)^2 must collapse to x^2 - 4, got {}",
            ring.format_poly(&squared)
        );
        for v in [2i64, -2] {
            let at = ring.eval_point(&squared, &f.from_int(v));
            ensure!(f.is_zero(&at), "{v} must be a zero of (x - 2i)^2");
        }

        let two_i = f.mul(&f.from_int(2), &f.symbol_elem('i').unwrap());
        ensure!(
            !ok(validate_multseq(&ring, &[two_i.clone(), two_i.clone()]))?,
            "(2i, 2i) must be rejected"
        );
        let a = f.add(&f.from_int(1), &f.symbol_elem('i').unwrap());
        ensure!(
            ok(validate_multseq(&ring, &[a.clone(), a.clone()]))?,
            "(1+i, 1+i) must be accepted"
        );
        Ok(())
    })());
}

// ---- 9: rational functions, derivation twist ----

#[test]
fn criterion_09_rational_function_pathology() {
    report(9, "rational-function derivation pathology", (|| {
        let ring = ratfun3();
        let f = ring.ring();
        let x_sq = ring.pow(&ring.x(), 2);

        let z_inv = ok(f.inv(&f.z()))?;
        ensure!(!f.is_zero(&z_inv), "1/z is nonzero");
        ensure!(
            f.is_zero(&ring.eval_point(&x_sq, &z_inv)),
            "1/z must be a zero of x^2"
        );
        ensure!(
            f.is_zero(&ring.eval_point(&x_sq, &f.zero())),
            "0 must be a zero of x^2"
        );

        let mut r = rng(901);
        for _ in 0..200 {
            let a = rand_ratfun(f, &mut r);
            let ddd = f.delta(&f.delta(&f.delta(&a)));
            ensure!(f.is_zero(&ddd), "third derivative must vanish at {a:?}");
        }
        Ok(())
    })());
}

// ---- 10: unions of power families and the degree bound ----

#[test]
fn criterion_10_union_and_degree_bound() {
    report(10, "cross-class unions and degree-bound equality", (|| {
        let ring = f27();
        let f = ring.ring();
        let mut r = rng(1001);
        let mut done = 0usize;
        let mut equality_cases = 0usize;
        while done < 200 {
            // One side per conjugacy class, each side P-independent on its own.
            let u = rand_nonzero(f, &mut r, rand_ff);
            let v = loop {
                let v = rand_nonzero(f, &mut r, rand_ff);
                if !ok(f.is_conjugate(&u, &v))? {
                    break v;
                }
            };
            let mut sides = Vec::new();
            for anchor in [&u, &v] {
                let n = r.gen_range(1..=2);
                let mut pts = Vec::new();
                while pts.len() < n {
                    let beta = rand_nonzero(f, &mut r, rand_ff);
                    let p = ok(f.conjugate(anchor, &beta))?;
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
                let family: Vec<_> = pts
                    .into_iter()
                    .map(|p| PointEntry::Power(p, r.gen_range(1..=2)))
                    .collect();
                sides.push(family);
            }
            let union_entries: Vec<_> = sides.concat();

            // Hypotheses: each side alone must be P-independent.
            let mut hypotheses = true;
            for family in &sides {
                match PointSet::new(&ring, family.clone()) {
                    Ok(set) => {
                        if !ok(is_p_independent(&ring, &set))? {
                            hypotheses = false;
                        }
                    }
                    Err(_) => hypotheses = false,
                }
            }
            if !hypotheses {
                continue;
            }

            let union = ok(PointSet::new(&ring, union_entries))?;
            ensure!(
                ok(is_p_independent(&ring, &union))?,
                "cross-class union of independent sides must stay independent"
            );

            // Degree bound: F = G * F_union keeps every prescribed
            // multiplicity; equality in the bound picks out constant G.
            let f_union = ok(minimal_poly(&ring, &union))?;
            let dg = r.gen_range(0..=2);
            let g = rand_poly(&ring, &mut r, dg, rand_ff);
            let big = ring.mul(&g, &f_union);
            for entry in union.entries() {
                if let PointEntry::Power(p, m) = entry {
                    ensure!(
                        ok(mult_check_1(&ring, &big, p, *m))?,
                        "a prescribed multiplicity was lost"
                    );
                }
            }
            let total = union.total_degree();
            let deg_big = big.degree().finite().unwrap();
            ensure!(total <= deg_big, "degree bound violated: {total} > {deg_big}");
            ensure!(
                (total == deg_big) == (dg == 0),
                "equality must single out scalar multiples of the minimal polynomial"
            );
            if dg == 0 {
                equality_cases += 1;
            }
            done += 1;
        }
        ensure!(equality_cases >= 20, "too few equality cases: {equality_cases}");
        Ok(())
    })());
}

// ---- 11: Taylor reconstruction and derivative witnesses ----

fn taylor_and_witnesses<R: SkewRing>(
    ring: &SkewPolyRing<R>,
    rng: &mut ChaCha8Rng,
    gen: impl Fn(&R, &mut ChaCha8Rng) -> R::Elem + Copy,
    rounds: usize,
) -> Result<(), String> {
    let base = ring.ring();
    for i in 0..rounds {
        let r_len = rng.gen_range(1..=3);
        let points: Vec<_> = (0..r_len).map(|_| gen(base, rng)).collect();
        let df = rng.gen_range(0..=6);
        let f = rand_poly(ring, rng, df, gen);

        let (g, coeffs) = ok(taylor_expand(ring, &f, &points))?;
        ensure!(coeffs.len() == r_len, "one coefficient per prefix");

        // Reconstruction: F = G * P_r + sum_i c_i * P_(i-1).
        let p_full = ok(ring.seq_poly(&points))?;
        let mut acc = ring.mul(&g, &p_full);
        for (j, c) in coeffs.iter().enumerate() {
            let prefix = if j == 0 {
                ring.one_poly()
            } else {
                ok(ring.seq_poly(&points[..j]))?
            };
            acc = ring.add(&acc, &ring.scale_left(c, &prefix));
        }
        ensure!(acc == f, "reconstruction identity failed at round {i}");

        // Witness form of the top derivative: it is the coefficient of
        // x^(r-1) in the remainder, and when nonzero the remainder rescales
        // to a monic polynomial of degree exactly r - 1.
        let d = ok(hasse_derivative(ring, &f, &points))?;
        ensure!(d == coeffs[r_len - 1], "derivative must be the last coefficient");
        let (q, rem) = ok(ring.right_divmod(&f, &p_full))?;
        ensure!(q == g, "quotient of the full division must match the expansion");
        let lead = rem.coeffs().get(r_len - 1).cloned().unwrap_or_else(|| base.zero());
        ensure!(lead == d, "derivative must sit in degree r - 1 of the remainder");
        if base.is_zero(&d) {
            ensure!(
                rem.degree() < Degree::Finite(r_len - 1),
                "vanishing derivative forces a short remainder"
            );
        } else {
            let h = ring.scale_left(&ok(base.inv(&d))?, &rem);
            ensure!(h.degree() == Degree::Finite(r_len - 1), "witness degree must be r - 1");
            ensure!(
                h.coeffs().last() == Some(&base.one()),
                "witness must be monic"
            );
            let back = ring.add(&ring.mul(&q, &p_full), &ring.scale_left(&d, &h));
            ensure!(back == f, "witness pair must rebuild the polynomial");
        }
    }
    Ok(())
}

#[test]
fn criterion_11_taylor_and_hasse_witnesses() {
    report(11, "taylor reconstruction and derivative witnesses", (|| {
        let mut r = rng(1101);
        taylor_and_witnesses(&f9(), &mut r, rand_ff, 500)?;
        taylor_and_witnesses(&quat(), &mut r, rand_quat, 500)?;
        taylor_and_witnesses(&gauss(), &mut r, rand_gauss, 500)?;
        taylor_and_witnesses(&ratfun3(), &mut r, rand_ratfun, 500)?;
        Ok(())
    })());
}

// ---- 12: the defect image is a hyperplane ----

fn hyperplane_dims<R: SkewRing>(ring: &R, a: &R::Elem) -> Result<(), String> {
    let rank = linalg::row_rank(ring, &ok(defect_image_rows(ring, a))?);
    let nullity = ok(linalg::map_kernel_basis(ring, |b| {
        ring.sub(&ring.dmap(a, b), &ring.mul(a, b))
    }))?
    .len();
    let base = ring.base_dim().ok_or("a finite coordinate dimension is required")?;
    ensure!(rank + nullity == base, "rank-nullity failed at {a:?}");
    ensure!(base % nullity == 0, "centralizer dimension must divide the total");
    ensure!(
        rank == (base / nullity - 1) * nullity,
        "defect image must have centralizer codimension one at {a:?}"
    );
    Ok(())
}

#[test]
fn criterion_12_hyperplane_dimension() {
    report(12, "defect image has centralizer codimension one", (|| {
        for ring in [f9(), f27()] {
            for a in ok(ring.ring().enumerate())? {
                hyperplane_dims(ring.ring(), &a)?;
            }
        }
        let mut r = rng(1201);
        let q = quat();
        for _ in 0..100 {
            hyperplane_dims(q.ring(), &rand_quat(q.ring(), &mut r))?;
        }
        let g = gauss();
        for _ in 0..100 {
            hyperplane_dims(g.ring(), &rand_gauss(g.ring(), &mut r))?;
        }
        Ok(())
    })());
}

