//! The specialization of the last initial variable to 1: polygon reduction,
//! the certificate-producing recursion, and the closure of the reduced
//! character algebra under specialization.

use num_bigint::BigInt;
use num_traits::One;

use clusterchar_core::clustercat::{Arc, ArcObject};
use clusterchar_core::exactalg::LaurentPoly;
use clusterchar_core::specialize::{
    check_specialization_closure, specialize_at_one, specialize_cc, CertificateNode,
    ReductionContext,
};

#[test]
fn substituting_one_drops_the_variable() {
    // x1 x2^{-1} + x2 at x2 = 1 gives x1 + 1.
    let p = LaurentPoly::monomial(2, &[1, -1], BigInt::one()).add(&LaurentPoly::var(2, 2));
    let s = specialize_at_one(&p, 2);
    assert_eq!(s, LaurentPoly::var(1, 1).add(&LaurentPoly::one(1)));
    // A constant is untouched.
    let c = LaurentPoly::constant(2, 5);
    assert_eq!(specialize_at_one(&c, 1), LaurentPoly::constant(1, 5));
}

#[test]
fn reduction_cuts_polygon_and_fixes_initial_arcs() {
    for n in 2..=4usize {
        let rc = ReductionContext::new(n).unwrap();
        assert_eq!(rc.parent.cat.big_n, n + 3);
        assert_eq!(rc.reduced.cat.big_n, n + 2);
        // The initial arcs other than the cut one project to the initial
        // arcs of the reduced polygon.
        for i in 1..n {
            let t = ArcObject::single(rc.parent.cat.big_n, rc.parent.cat.t_arc(i));
            let img = rc.project(&t).unwrap();
            assert_eq!(img, ArcObject::single(rc.reduced.cat.big_n, rc.reduced.cat.t_arc(i)));
        }
        // The cut arc itself projects to zero.
        let tn = ArcObject::single(rc.parent.cat.big_n, rc.cut);
        assert!(rc.project(&tn).unwrap().is_zero());
    }
}

#[test]
fn base_case_is_a_leaf_and_cut_arc_specializes_to_one() {
    let rc = ReductionContext::new(2).unwrap();
    // X = the cut arc: σ(x2) = 1 with a trivial certificate.
    let tn = ArcObject::single(rc.parent.cat.big_n, rc.cut);
    let (v, cert) = specialize_cc(&rc, &tn).unwrap();
    assert_eq!(v, LaurentPoly::one(1));
    assert!(matches!(cert, CertificateNode::Leaf { .. }));
    // X avoiding the cut arc: the value is the reduced character of the
    // image.
    let x = ArcObject::single(rc.parent.cat.big_n, rc.parent.cat.t_arc(1));
    let (v, cert) = specialize_cc(&rc, &x).unwrap();
    assert_eq!(v, LaurentPoly::var(1, 1));
    assert!(matches!(cert, CertificateNode::Leaf { .. }));
}

/// The worked pentagon computation: the character (x1 + x2 + 1)/(x1 x2)
/// specializes to (x1 + 2)/x1.
#[test]
fn pentagon_deep_arc_specializes_to_known_value() {
    let rc = ReductionContext::new(2).unwrap();
    let big_n = rc.parent.cat.big_n;
    // The arc crossing both initial arcs has the three-term numerator.
    let x = ArcObject::single(big_n, Arc::new(big_n, 2, 5).unwrap());
    let expected = LaurentPoly::var(2, 1)
        .add(&LaurentPoly::var(2, 2))
        .add(&LaurentPoly::one(2))
        .mul(&LaurentPoly::monomial(2, &[-1, -1], BigInt::one()));
    assert_eq!(rc.parent.cc(&x).unwrap(), expected);
    let (v, cert) = specialize_cc(&rc, &x).unwrap();
    let target = LaurentPoly::var(1, 1)
        .add(&LaurentPoly::constant(1, 2))
        .mul(&LaurentPoly::monomial(1, &[-1], BigInt::one()));
    assert_eq!(v, target);
    assert!(matches!(cert, CertificateNode::Step { .. }));
    // Replay is bit-for-bit reproducible.
    assert_eq!(cert.replay(), v);
}

/// Certificate replay agrees with direct substitution for every
/// indecomposable, and the recursion produces only integer coefficients
/// (by construction of the types) with strictly decreasing measure
/// (asserted internally).
#[test]
fn certificates_replay_exactly_for_all_indecomposables() {
    for n in 2..=4usize {
        let rc = ReductionContext::new(n).unwrap();
        for arc in rc.parent.cat.all_arcs() {
            let x = ArcObject::single(rc.parent.cat.big_n, arc);
            let (v, cert) = specialize_cc(&rc, &x).unwrap();
            assert_eq!(cert.replay(), v);
            let direct = specialize_at_one(&rc.parent.cc(&x).unwrap(), n);
            assert_eq!(v, direct, "mismatch at {:?}", arc);
        }
    }
}

/// Certificates also cover decomposable objects.
#[test]
fn certificates_replay_for_direct_sums() {
    let rc = ReductionContext::new(3).unwrap();
    let big_n = rc.parent.cat.big_n;
    let arcs = rc.parent.cat.all_arcs();
    for (i, &a) in arcs.iter().enumerate() {
        for &b in &arcs[i..] {
            let x = ArcObject::single(big_n, a).direct_sum(&ArcObject::single(big_n, b));
            let (v, _) = specialize_cc(&rc, &x).unwrap();
            let direct = specialize_at_one(&rc.parent.cc(&x).unwrap(), 3);
            assert_eq!(v, direct, "mismatch at {:?} ⊕ {:?}", a, b);
        }
    }
}

#[test]
fn closure_two_to_one() {
    let report = check_specialization_closure(2).unwrap();
    assert!(report.pass);
    assert!(report.surjective);
    assert_eq!(report.expansions.len(), 5);
}

#[test]
fn closure_three_to_two() {
    let report = check_specialization_closure(3).unwrap();
    assert!(report.pass);
    assert!(report.surjective);
    assert_eq!(report.expansions.len(), 9);
}
