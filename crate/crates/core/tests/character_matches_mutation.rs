//! End-to-end consistency between the two roads to cluster variables:
//! mutation closure of the seed (exchange combinatorics) and character
//! values on indecomposable objects of the arc model.

use std::collections::BTreeSet;

use clusterchar_core::cccharacter::CharacterContext;
use clusterchar_core::clustercat::{ArcCategory, ArcObject};
use clusterchar_core::exactalg::LaurentPoly;
use clusterchar_core::quiver::{enumerate_cluster_variables, ExchangeQuiver};

fn character_values(n: usize) -> BTreeSet<LaurentPoly> {
    let cat = ArcCategory::type_a(n);
    let ctx = CharacterContext::new(cat).expect("iota must solve");
    ctx.cat
        .all_arcs()
        .iter()
        .map(|&arc| ctx.cc(&ArcObject::single(ctx.cat.big_n, arc)).unwrap())
        .collect()
}

#[test]
fn characters_of_t_summands_are_initial_variables() {
    for n in 1..=4 {
        let cat = ArcCategory::type_a(n);
        let ctx = CharacterContext::new(cat).unwrap();
        for i in 1..=n {
            let t = ArcObject::single(ctx.cat.big_n, ctx.cat.t_arc(i));
            assert_eq!(ctx.cc(&t).unwrap(), LaurentPoly::var(n, i));
        }
    }
}

#[test]
fn character_of_zero_object_is_one() {
    let cat = ArcCategory::type_a(3);
    let ctx = CharacterContext::new(cat).unwrap();
    assert_eq!(ctx.cc(&ArcObject::zero(6)).unwrap(), LaurentPoly::one(3));
}

#[test]
fn indecomposable_characters_equal_cluster_variables() {
    for n in 2..=4 {
        let vars = enumerate_cluster_variables(&ExchangeQuiver::type_a(n), 10_000).unwrap();
        let ccs = character_values(n);
        assert_eq!(vars.len(), n * (n + 3) / 2);
        assert_eq!(ccs, vars, "A_{n} characters vs mutation closure");
    }
}

#[test]
fn character_multiplicative_on_direct_sums() {
    let cat = ArcCategory::type_a(3);
    let ctx = CharacterContext::new(cat).unwrap();
    let arcs = ctx.cat.all_arcs();
    for &x in &arcs {
        for &y in &arcs {
            let xo = ArcObject::single(ctx.cat.big_n, x);
            let yo = ArcObject::single(ctx.cat.big_n, y);
            let sum = xo.direct_sum(&yo);
            assert_eq!(
                ctx.cc(&sum).unwrap(),
                ctx.cc(&xo).unwrap().mul(&ctx.cc(&yo).unwrap())
            );
        }
    }
}
