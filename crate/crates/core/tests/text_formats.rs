//! Round-trip and rejection tests for the plain-text file formats.

use num_bigint::BigInt;

use clusterchar_core::clustercat::{Arc, ArcCategory, ArcObject, ModIndec, ModObject};
use clusterchar_core::error::Error;
use clusterchar_core::quiver::ExchangeQuiver;
use clusterchar_core::repmod::{IntervalRep, QuiverShape};
use clusterchar_core::textio::{
    parse_arc_object, parse_frieze_file, parse_mod_object, parse_quiver, parse_rep,
    render_arc_object, render_frieze_file, render_mod_object, render_quiver, render_rep,
};

#[test]
fn quiver_round_trip() {
    for n in 1..=5 {
        let q = ExchangeQuiver::type_a(n);
        let text = render_quiver(&q);
        assert_eq!(parse_quiver(&text).unwrap(), q);
    }
    // Comments and blank lines are ignored.
    let q = parse_quiver("# linear A2\n\n2\n1 2 1\n").unwrap();
    assert_eq!(q, ExchangeQuiver::type_a(2));
}

#[test]
fn malformed_quivers_are_rejected() {
    for text in [
        "",
        "two\n1 2 1\n",
        "2\n1 2\n",
        "2\n1 3 1\n",
        "2\n1 2 -1\n",
        "2\n2 2 1\n",
    ] {
        assert!(
            matches!(parse_quiver(text), Err(Error::Parse(_)) | Err(Error::Hypothesis(_))),
            "accepted malformed quiver {text:?}"
        );
    }
}

#[test]
fn rep_round_trip() {
    let shape = QuiverShape::linear_a(3);
    let rep = IntervalRep { lo: 0, hi: 1 }
        .to_rep(&shape)
        .direct_sum(&IntervalRep { lo: 1, hi: 2 }.to_rep(&shape));
    let text = render_rep(&rep);
    assert_eq!(parse_rep(&shape, &text).unwrap(), rep);

    // Wrong dimension-vector length and short matrix blocks are rejected.
    assert!(parse_rep(&shape, "1 1\n1\n").is_err());
    assert!(parse_rep(&shape, "1 1 1\n1\n").is_err());
}

#[test]
fn arc_object_round_trip() {
    let cat = ArcCategory::type_a(3);
    let obj = ArcObject::new(
        cat.big_n,
        vec![Arc { a: 1, b: 3 }, Arc { a: 2, b: 5 }, Arc { a: 2, b: 5 }],
    );
    let text = render_arc_object(&obj);
    assert_eq!(parse_arc_object(&text).unwrap(), obj);

    // Boundary edges name zero objects and are dropped.
    let zero = parse_arc_object("polygon 6; arcs (1,2) (6,1)").unwrap();
    assert!(zero.arcs.is_empty());

    assert!(parse_arc_object("polygon 3; arcs").is_err());
    assert!(parse_arc_object("polygon 6; arcs (1,7)").is_err());
    assert!(parse_arc_object("polygon 6; arcs 1,4").is_err());
}

#[test]
fn mod_object_round_trip() {
    let obj = ModObject::new(vec![
        ModIndec::Interval(IntervalRep { lo: 0, hi: 1 }),
        ModIndec::Interval(IntervalRep { lo: 0, hi: 1 }),
        ModIndec::Interval(IntervalRep { lo: 2, hi: 2 }),
        ModIndec::Shift(1),
        ModIndec::Shift(3),
    ]);
    let text = render_mod_object(3, &obj);
    assert_eq!(parse_mod_object(3, &text).unwrap(), obj);

    assert!(parse_mod_object(3, "0 0 0\nshift 4\n").is_err());
    assert!(parse_mod_object(3, "0 0 0\nshift zero\n").is_err());
}

#[test]
fn frieze_file_round_trip() {
    let q = ExchangeQuiver::type_a(2);
    let values = vec![BigInt::from(1), BigInt::from(2)];
    let text = render_frieze_file(&q, &values);
    let (q2, v2) = parse_frieze_file(&text).unwrap();
    assert_eq!(q2, q);
    assert_eq!(v2, values);

    // Number of values must match the quiver rank.
    assert!(parse_frieze_file("2\n1 2 1\n1 2 3\n").is_err());
    assert!(parse_frieze_file("2\n").is_err());
}
