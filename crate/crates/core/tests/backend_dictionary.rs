//! The polygon/arc backend and the module backend agree through the
//! arc ↔ module dictionary: Hom dimensions, suspension, indices, the
//! functor F, and elementary cones. The module backend's extension cones
//! are additionally cross-checked against an explicit extension-cocycle
//! middle-term computation over the rationals.

use clusterchar_core::clustercat::modback::{arc_to_indec, arc_to_mod, indec_to_arc, mod_to_arc};
use clusterchar_core::clustercat::{ArcCategory, ArcObject, ModCategory, ModIndec, ModObject};
use clusterchar_core::error::Error;
use clusterchar_core::exactalg::Rationals;
use clusterchar_core::repmod::{decompose, ext_space, middle_term};

fn backends(n: usize) -> (ArcCategory, ModCategory) {
    (ArcCategory::type_a(n), ModCategory::type_a(n))
}

#[test]
fn dictionary_is_a_bijection_on_indecomposables() {
    for n in 1..=4usize {
        let (cat, _) = backends(n);
        for arc in cat.all_arcs() {
            assert_eq!(indec_to_arc(&cat, arc_to_indec(&cat, arc)), arc);
        }
        // Fan diagonals are the summands of T.
        for i in 1..=n {
            assert_eq!(arc_to_indec(&cat, cat.t_arc(i)), ModIndec::Shift(i));
        }
    }
}

#[test]
fn suspension_commutes_with_the_dictionary() {
    for n in 1..=4usize {
        let (cat, mc) = backends(n);
        for arc in cat.all_arcs() {
            let via_arcs = arc_to_indec(&cat, cat.suspend_arc(arc));
            let via_modules = mc.suspend_indec(arc_to_indec(&cat, arc));
            assert_eq!(via_arcs, via_modules, "suspension mismatch at {arc:?}");
        }
    }
}

#[test]
fn hom_dimensions_agree() {
    for n in 2..=4usize {
        let (cat, mc) = backends(n);
        let arcs = cat.all_arcs();
        for &x in &arcs {
            for &y in &arcs {
                let xo = ArcObject::single(cat.big_n, x);
                let yo = ArcObject::single(cat.big_n, y);
                let a = cat.hom_to_shift_dim(&xo, &yo);
                let b = mc.hom_to_shift_dim(&arc_to_mod(&cat, &xo), &arc_to_mod(&cat, &yo));
                assert_eq!(a, b, "dim Hom mismatch at ({x:?}, {y:?})");
            }
        }
        // Additivity on a decomposable pair.
        let l = ArcObject::new(cat.big_n, vec![arcs[0], arcs[0], arcs[1]]);
        let m = ArcObject::new(cat.big_n, vec![arcs[2], arcs[3]]);
        assert_eq!(
            cat.hom_to_shift_dim(&l, &m),
            mc.hom_to_shift_dim(&arc_to_mod(&cat, &l), &arc_to_mod(&cat, &m))
        );
    }
}

#[test]
fn t_is_rigid_in_both_backends() {
    for n in 2..=4usize {
        let (cat, mc) = backends(n);
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(mc.hom_to_shift_indec(mc.t_summand(i), mc.t_summand(j)), 0);
                let ti = ArcObject::single(cat.big_n, cat.t_arc(i));
                let tj = ArcObject::single(cat.big_n, cat.t_arc(j));
                assert_eq!(cat.hom_to_shift_dim(&ti, &tj), 0);
            }
        }
    }
}

#[test]
fn two_calabi_yau_symmetry_in_the_module_backend() {
    for n in 2..=4usize {
        let (cat, mc) = backends(n);
        let indecs: Vec<ModIndec> =
            cat.all_arcs().into_iter().map(|a| arc_to_indec(&cat, a)).collect();
        for &x in &indecs {
            for &y in &indecs {
                assert_eq!(
                    mc.hom_to_shift_indec(x, y),
                    mc.hom_to_shift_indec(y, x),
                    "2-CY symmetry fails at ({x:?}, {y:?})"
                );
            }
        }
    }
}

#[test]
fn indices_and_f_images_agree() {
    for n in 2..=4usize {
        let (cat, mc) = backends(n);
        for arc in cat.all_arcs() {
            let ao = ArcObject::single(cat.big_n, arc);
            let mo = ModObject::single(arc_to_indec(&cat, arc));
            assert_eq!(cat.index(&ao), mc.index(&mo), "index mismatch at {arc:?}");
            assert_eq!(cat.f_rep(&ao).dims, mc.f_module(&mo).dims, "F mismatch at {arc:?}");
        }
    }
}

#[test]
fn elementary_cones_agree() {
    for n in 2..=4usize {
        let (cat, mc) = backends(n);
        let arcs = cat.all_arcs();
        let mut supported = 0;
        let mut unsupported = 0;
        for &x in &arcs {
            for &y in &arcs {
                let l = ArcObject::single(cat.big_n, x);
                let m = ArcObject::single(cat.big_n, y);
                let pairs = cat.crossing_pairs(&l, &m);
                if pairs.len() != 1 {
                    continue;
                }
                let via_arcs = cat.cone_of_support(&l, &m, &pairs);
                match mc.cone_elementary(arc_to_indec(&cat, x), arc_to_indec(&cat, y)) {
                    Ok(cone) => {
                        assert_eq!(
                            mod_to_arc(&cat, &cone),
                            via_arcs,
                            "cone mismatch at ({x:?}, {y:?})"
                        );
                        supported += 1;
                    }
                    Err(Error::UnsupportedCone(_)) => {
                        // The dual-extension component: documented
                        // limitation of the module backend. The arc
                        // backend still produces the exchange partner,
                        // which must be the cone of the opposite
                        // direction morphism's rotation, i.e. agree on
                        // the Hom dimension count.
                        unsupported += 1;
                    }
                    Err(e) => panic!("unexpected error at ({x:?}, {y:?}): {e:?}"),
                }
            }
        }
        // Pairs with a T-summand (or suspension) on one side are supported
        // in both directions; module-module crossings in exactly one (the
        // extension direction), the other being the dual component.
        assert!(supported > 0 && unsupported > 0);
        assert!(supported >= unsupported);
    }
}

/// The module backend's glued-interval extension cone matches an explicit
/// middle-term computation from a nonzero extension cocycle.
#[test]
fn extension_cones_match_cocycle_middle_terms() {
    for n in 2..=4usize {
        let (cat, mc) = backends(n);
        let k = Rationals;
        let arcs = cat.all_arcs();
        for &x in &arcs {
            for &y in &arcs {
                let (ModIndec::Interval(a), ModIndec::Interval(b)) =
                    (arc_to_indec(&cat, x), arc_to_indec(&cat, y))
                else {
                    continue;
                };
                let xr = a.to_rep(&mc.shape).to_field(&k);
                let yr = b.to_rep(&mc.shape).to_field(&k);
                let ext = ext_space(&k, &xr, &yr);
                if ext.dim != 1 {
                    continue;
                }
                let cone = mc.cone_elementary(ModIndec::Interval(a), ModIndec::Interval(b));
                let e = middle_term(&k, &xr, &yr, &ext.basis[0]);
                let mut expected: Vec<ModIndec> = decompose(&e)
                    .unwrap()
                    .into_iter()
                    .flat_map(|(iv, mult)| vec![ModIndec::Interval(iv); mult])
                    .collect();
                expected.sort();
                assert_eq!(cone.unwrap().summands, expected, "at ({x:?}, {y:?})");
            }
        }
    }
}
