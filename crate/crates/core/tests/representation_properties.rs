//! Property tests for quiver representations: Hom/Ext dimensions, the AR
//! translate, middle terms and submodule Grassmannians.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clusterchar_core::exactalg::{PrimeField, Rationals};
use clusterchar_core::repmod::{
    ar_translate, count_subreps, decompose, ext_space, grassmannian_euler, hom_space,
    interval_indecomposables, middle_term, IntRep, IntervalRep, PathAlgebra, QuiverShape,
};

/// A random direct sum of interval representations of the linear quiver.
fn random_interval_sum(rng: &mut ChaCha8Rng, shape: &QuiverShape, summands: usize) -> IntRep {
    let mut x = IntRep::zero(shape);
    for _ in 0..summands {
        let lo = rng.gen_range(0..shape.n);
        let hi = rng.gen_range(lo..shape.n);
        x = x.direct_sum(&IntervalRep { lo, hi }.to_rep(shape));
    }
    x
}

fn sub_dim_vectors(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|e| (0..=d).map(move |i| e.iter().copied().chain([i]).collect()))
            .collect();
    }
    out
}

#[test]
fn hom_minus_ext_equals_the_euler_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let k = Rationals;
    for n in 2..=4 {
        let shape = QuiverShape::linear_a(n);
        for _ in 0..25 {
            let x = { let s = rng.gen_range(1..=3); random_interval_sum(&mut rng, &shape, s) };
            let y = { let s = rng.gen_range(1..=3); random_interval_sum(&mut rng, &shape, s) };
            let hom = hom_space(&k, &x.to_field(&k), &y.to_field(&k)).len() as i64;
            let ext = ext_space(&k, &x.to_field(&k), &y.to_field(&k)).dim as i64;
            assert_eq!(hom - ext, shape.euler_form(&x.dims, &y.dims));
        }
    }
}

#[test]
fn hom_dimension_is_field_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let q = Rationals;
    let shape = QuiverShape::linear_a(3);
    for _ in 0..15 {
        let x = { let s = rng.gen_range(1..=3); random_interval_sum(&mut rng, &shape, s) };
        let y = { let s = rng.gen_range(1..=3); random_interval_sum(&mut rng, &shape, s) };
        let over_q = hom_space(&q, &x.to_field(&q), &y.to_field(&q)).len();
        for p in [2u64, 3, 5, 7] {
            let k = PrimeField::new(p);
            let over_p = hom_space(&k, &x.to_field(&k), &y.to_field(&k)).len();
            assert_eq!(over_q, over_p, "characteristic {p} disagrees");
        }
    }
}

#[test]
fn translate_of_the_first_simple_is_the_second() {
    // On the linear two-vertex quiver 0→1 the AR translate of the simple
    // at the source is the simple at the sink.
    let k = Rationals;
    let shape = QuiverShape::linear_a(2);
    let alg = PathAlgebra::new(&shape).unwrap();
    let s0 = IntervalRep { lo: 0, hi: 0 }.to_rep(&shape).to_field(&k);
    let tau = ar_translate(&k, &alg, &s0).unwrap();
    assert_eq!(tau.dims, vec![0, 1]);
}

#[test]
fn translate_of_a_projective_is_rejected() {
    let k = Rationals;
    let shape = QuiverShape::linear_a(2);
    let alg = PathAlgebra::new(&shape).unwrap();
    let p0 = IntRep::projective(&alg, 0).to_field(&k);
    assert!(ar_translate(&k, &alg, &p0).is_err());
}

#[test]
fn grassmannians_of_the_long_projective_are_points() {
    // Submodules of the interval [0, n−1] are exactly the suffix intervals,
    // so each achievable dimension vector carries Euler characteristic 1.
    for n in 2..=4 {
        let shape = QuiverShape::linear_a(n);
        let p = IntervalRep { lo: 0, hi: n - 1 }.to_rep(&shape);
        for e in sub_dim_vectors(&p.dims) {
            let suffix = (0..n).all(|i| i + 1 >= n || e[i] <= e[i + 1]);
            let expected = if suffix { BigInt::one() } else { BigInt::ZERO };
            assert_eq!(grassmannian_euler(&p, &e).unwrap(), expected, "e = {e:?}");
        }
    }
}

#[test]
fn submodule_counts_of_the_two_dimensional_projective() {
    // Over F_q, the interval [0,1] on 0→1 has exactly three submodules:
    // zero, the simple socle and the whole module.
    let shape = QuiverShape::linear_a(2);
    let p = IntervalRep { lo: 0, hi: 1 }.to_rep(&shape);
    for q in [2u64, 3, 5] {
        let k = PrimeField::new(q);
        let pf = p.to_field(&k);
        assert_eq!(count_subreps(&k, &pf, &[0, 0]), BigInt::one());
        assert_eq!(count_subreps(&k, &pf, &[0, 1]), BigInt::one());
        assert_eq!(count_subreps(&k, &pf, &[1, 1]), BigInt::one());
        assert_eq!(count_subreps(&k, &pf, &[1, 0]), BigInt::ZERO);
    }
}

#[test]
fn middle_terms_are_independent_of_the_cocycle_scale() {
    // For a one-dimensional Ext space every nonzero class gives the same
    // middle term; for the two simples on 0→1 it is the projective [0,1].
    let k = Rationals;
    let shape = QuiverShape::linear_a(2);
    let s0 = IntervalRep { lo: 0, hi: 0 }.to_rep(&shape).to_field(&k);
    let s1 = IntervalRep { lo: 1, hi: 1 }.to_rep(&shape).to_field(&k);
    let ext = ext_space(&k, &s0, &s1);
    assert_eq!(ext.dim, 1);
    let mut seen = Vec::new();
    for scale in 1..=3i64 {
        let cocycle: Vec<_> = ext.basis[0]
            .iter()
            .map(|m| m.scale(&k, &num_rational::BigRational::from_integer(BigInt::from(scale))))
            .collect();
        let mid = middle_term(&k, &s0, &s1, &cocycle);
        let summands = decompose(&mid).unwrap();
        seen.push(summands);
    }
    for s in &seen {
        assert_eq!(s, &vec![(IntervalRep { lo: 0, hi: 1 }, 1)]);
    }
}

#[test]
fn hom_from_the_projective_counts_the_socle() {
    // dim Hom(P_0, S_0) = 1 on the linear quiver: maps out of the
    // projective cover of the simple at 0 are determined on its top.
    let k = Rationals;
    let shape = QuiverShape::linear_a(2);
    let alg = PathAlgebra::new(&shape).unwrap();
    let p0 = IntRep::projective(&alg, 0).to_field(&k);
    let s0 = IntervalRep { lo: 0, hi: 0 }.to_rep(&shape).to_field(&k);
    assert_eq!(hom_space(&k, &p0, &s0).len(), 1);
}

#[test]
fn interval_list_matches_the_positive_root_count() {
    for n in 1..=5 {
        let shape = QuiverShape::linear_a(n);
        let inds = interval_indecomposables(&shape).unwrap();
        assert_eq!(inds.len(), n * (n + 1) / 2);
    }
}
