//! Module-theoretic model of the type-A cluster category: objects are
//! direct sums of interval modules over the linear quiver together with
//! suspended projectives, recorded as shift markers. The cluster-tilting
//! object is T = ΣP_1 ⊕ … ⊕ ΣP_n, whose endomorphism algebra is the path
//! algebra itself, so F X = Hom(T, ΣX) is the module part of X.
//!
//! Cone support is restricted: genuine module extensions, and morphisms
//! with a summand of T (or a suspension thereof) on one side, where the
//! cone is a triangle rotation of a module kernel/cokernel computation.
//! Mixed dual-extension cones are unsupported.

use crate::clustercat::{Arc, ArcCategory, ArcObject};
use crate::error::{Error, Result};
use crate::repmod::{IntRep, IntervalRep, QuiverShape};

/// An indecomposable object: an interval module, or the suspended
/// projective ΣP_v = T_v (1-based vertex v).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModIndec {
    Interval(IntervalRep),
    Shift(usize),
}

/// A direct sum of indecomposables, stored as a sorted multiset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModObject {
    pub summands: Vec<ModIndec>,
}

impl ModObject {
    pub fn new(mut summands: Vec<ModIndec>) -> ModObject {
        summands.sort();
        ModObject { summands }
    }

    pub fn zero() -> ModObject {
        ModObject { summands: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn single(x: ModIndec) -> ModObject {
        ModObject { summands: vec![x] }
    }

    pub fn direct_sum(&self, other: &ModObject) -> ModObject {
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().copied());
        ModObject::new(s)
    }
}

/// Ext¹([a,b], [c,d]) ≠ 0 over 1 → 2 → … → n (0-based intervals): the
/// extension glues the intervals, which requires a+1 ≤ c ≤ b+1 ≤ d.
fn ext_nonzero(l: IntervalRep, m: IntervalRep) -> bool {
    l.lo + 1 <= m.lo && m.lo <= l.hi + 1 && l.hi + 1 <= m.hi
}

pub struct ModCategory {
    pub n: usize,
    pub shape: QuiverShape,
}

impl ModCategory {
    pub fn type_a(n: usize) -> ModCategory {
        ModCategory { n, shape: QuiverShape::linear_a(n) }
    }

    /// The summands of the cluster-tilting object.
    pub fn t_summand(&self, i: usize) -> ModIndec {
        assert!(i >= 1 && i <= self.n);
        ModIndec::Shift(i)
    }

    /// Suspension: an interval module goes to its translate, wrapping
    /// projectives to shift markers; a shift marker goes to the
    /// corresponding injective.
    pub fn suspend_indec(&self, x: ModIndec) -> ModIndec {
        match x {
            ModIndec::Interval(iv) => {
                if iv.hi + 1 == self.n {
                    // [lo, n−1] is the projective at vertex lo+1.
                    ModIndec::Shift(iv.lo + 1)
                } else {
                    ModIndec::Interval(IntervalRep { lo: iv.lo + 1, hi: iv.hi + 1 })
                }
            }
            // Σ²P_v is the injective at v.
            ModIndec::Shift(v) => ModIndec::Interval(IntervalRep { lo: 0, hi: v - 1 }),
        }
    }

    pub fn suspend(&self, x: &ModObject) -> ModObject {
        ModObject::new(x.summands.iter().map(|&s| self.suspend_indec(s)).collect())
    }

    /// dim Hom(x, Σy) between indecomposables. For two modules this is
    /// the extension dimension plus the dual-extension dimension; a shift
    /// marker pairs against the module's dimension at its vertex; two
    /// markers are rigid.
    pub fn hom_to_shift_indec(&self, x: ModIndec, y: ModIndec) -> usize {
        match (x, y) {
            (ModIndec::Interval(l), ModIndec::Interval(m)) => {
                usize::from(ext_nonzero(l, m)) + usize::from(ext_nonzero(m, l))
            }
            (ModIndec::Shift(i), ModIndec::Interval(m)) => {
                usize::from(m.lo <= i - 1 && i - 1 <= m.hi)
            }
            (ModIndec::Interval(l), ModIndec::Shift(j)) => {
                usize::from(l.lo <= j - 1 && j - 1 <= l.hi)
            }
            (ModIndec::Shift(_), ModIndec::Shift(_)) => 0,
        }
    }

    pub fn hom_to_shift_dim(&self, x: &ModObject, y: &ModObject) -> usize {
        x.summands
            .iter()
            .map(|&l| y.summands.iter().map(|&m| self.hom_to_shift_indec(l, m)).sum::<usize>())
            .sum()
    }

    /// Index in K₀(add T): a marker is a summand of T; a module gets its
    /// class from the triangle T-resolution rotated out of the minimal
    /// injective copresentation.
    pub fn index_indec(&self, x: ModIndec) -> Vec<i64> {
        let mut idx = vec![0i64; self.n];
        match x {
            ModIndec::Shift(v) => idx[v - 1] = 1,
            ModIndec::Interval(iv) => {
                if iv.lo >= 1 {
                    idx[iv.lo - 1] += 1;
                }
                idx[iv.hi] -= 1;
            }
        }
        idx
    }

    pub fn index(&self, x: &ModObject) -> Vec<i64> {
        let mut idx = vec![0i64; self.n];
        for &s in &x.summands {
            for (t, v) in idx.iter_mut().zip(self.index_indec(s)) {
                *t += v;
            }
        }
        idx
    }

    /// F X = Hom(T, ΣX): the module part of X (markers are summands of T
    /// and contribute zero).
    pub fn f_module(&self, x: &ModObject) -> IntRep {
        let mut rep = IntRep::zero(&self.shape);
        for &s in &x.summands {
            if let ModIndec::Interval(iv) = s {
                rep = rep.direct_sum(&iv.to_rep(&self.shape));
            }
        }
        rep
    }

    /// Cone of a nonzero morphism ε spanning the one-dimensional
    /// Hom(l, Σm): the object Y in the triangle m → Y → l → Σm.
    ///
    /// Supported shapes: a genuine module extension of l by m; a marker on
    /// either side (triangle rotation of a kernel/cokernel computation).
    /// A module-module morphism in the dual-extension component is
    /// unsupported.
    pub fn cone_elementary(&self, l: ModIndec, m: ModIndec) -> Result<ModObject> {
        if self.hom_to_shift_indec(l, m) != 1 {
            return Err(Error::Hypothesis("Hom(l, Σm) must be one-dimensional".into()));
        }
        let mut out = Vec::new();
        match (l, m) {
            (ModIndec::Interval(a), ModIndec::Interval(b)) => {
                if !ext_nonzero(a, b) {
                    return Err(Error::UnsupportedCone(
                        "module-module morphism in the dual-extension component".into(),
                    ));
                }
                // Short exact sequence 0 → m → E → l → 0 glues the
                // intervals: E = [a.lo, b.hi] ⊕ [b.lo, a.hi].
                out.push(ModIndec::Interval(IntervalRep { lo: a.lo, hi: b.hi }));
                if b.lo <= a.hi {
                    out.push(ModIndec::Interval(IntervalRep { lo: b.lo, hi: a.hi }));
                }
            }
            (ModIndec::Shift(i), ModIndec::Interval(b)) => {
                // ε corresponds to the canonical module map f: P_i → m
                // with image [i−1, b.hi]; the rotated triangle gives
                // Y = coker f ⊕ ΣP(ker f).
                let w = i - 1;
                if w > b.lo {
                    out.push(ModIndec::Interval(IntervalRep { lo: b.lo, hi: w - 1 }));
                }
                if b.hi + 1 < self.n {
                    out.push(ModIndec::Shift(b.hi + 2));
                }
            }
            (ModIndec::Interval(a), ModIndec::Shift(j)) => {
                // Σm is the injective I_j; ε corresponds to the canonical
                // map g: l → I_j with image [a.lo, j−1], and
                // Y = ker g ⊕ Σ⁻¹(coker g) with Σ⁻¹I_{a.lo} a marker.
                let w = j - 1;
                if w < a.hi {
                    out.push(ModIndec::Interval(IntervalRep { lo: w + 1, hi: a.hi }));
                }
                if a.lo >= 1 {
                    out.push(ModIndec::Shift(a.lo));
                }
            }
            (ModIndec::Shift(_), ModIndec::Shift(_)) => unreachable!("rigid pair"),
        }
        Ok(ModObject::new(out))
    }
}

/// Dictionary between the two backends: a fan diagonal corresponds to the
/// suspended projective at its far vertex, every other diagonal to the
/// interval module of the backing arc category.
pub fn arc_to_indec(cat: &ArcCategory, arc: Arc) -> ModIndec {
    match cat.arc_interval(arc) {
        Some(iv) => ModIndec::Interval(iv),
        None => ModIndec::Shift(arc.b - 2),
    }
}

pub fn indec_to_arc(cat: &ArcCategory, x: ModIndec) -> Arc {
    match x {
        ModIndec::Interval(iv) => cat.interval_arc(iv),
        ModIndec::Shift(v) => cat.t_arc(v),
    }
}

pub fn arc_to_mod(cat: &ArcCategory, x: &ArcObject) -> ModObject {
    ModObject::new(x.arcs.iter().map(|&a| arc_to_indec(cat, a)).collect())
}

pub fn mod_to_arc(cat: &ArcCategory, x: &ModObject) -> ArcObject {
    ArcObject::new(cat.big_n, x.summands.iter().map(|&s| indec_to_arc(cat, s)).collect())
}
