//! The cluster character: a Laurent-polynomial-valued invariant of objects,
//! assembled from the index, the module-valued functor F and submodule
//! Grassmannian Euler characteristics, together with the linear exponent
//! map ι solved from object samples.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::clustercat::{ArcCategory, ArcObject};
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::repmod::{grassmannian_euler, DimVector, IntRep};

/// The linear map ι on dimension vectors, with values in K₀(add T);
/// characterized by ι(dim FX) = ind ΣX + ind X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaMap {
    /// Column i is ι of the i-th unit vector.
    pub cols: Vec<Vec<i64>>,
}

impl IotaMap {
    pub fn apply(&self, e: &[usize]) -> Vec<i64> {
        let n = self.cols.len();
        let mut out = vec![0i64; n];
        for (i, col) in self.cols.iter().enumerate() {
            for (o, c) in out.iter_mut().zip(col) {
                *o += (e[i] as i64) * c;
            }
        }
        out
    }
}

/// Solve ι from samples: the simple interval at each vertex realizes the
/// i-th unit vector as an F-dimension vector, and every other arc provides
/// an overdetermined consistency check.
pub fn compute_iota(cat: &ArcCategory) -> Result<IotaMap> {
    let n = cat.n;
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let simple = cat.interval_arc(crate::repmod::IntervalRep { lo: i, hi: i });
        let x = ArcObject::single(cat.big_n, simple);
        let sx = cat.suspend(&x);
        let col: Vec<i64> = cat
            .index(&sx)
            .iter()
            .zip(cat.index(&x))
            .map(|(a, b)| a + b)
            .collect();
        cols.push(col);
    }
    let iota = IotaMap { cols };
    // Consistency on all indecomposables: ι is well-defined on dimension
    // vectors, so every arc must reproduce ind ΣX + ind X.
    for arc in cat.all_arcs() {
        let x = ArcObject::single(cat.big_n, arc);
        let e: DimVector = cat.f_rep(&x).dims.clone();
        let expect: Vec<i64> = cat
            .index(&cat.suspend(&x))
            .iter()
            .zip(cat.index(&x))
            .map(|(a, b)| a + b)
            .collect();
        if iota.apply(&e) != expect {
            return Err(Error::Internal(format!(
                "iota inconsistent on arc ({},{})",
                arc.a, arc.b
            )));
        }
    }
    Ok(iota)
}

/// Identity-class fingerprint of an object: its index together with the
/// full table of Grassmannian Euler characteristics of its F-image. Two
/// cones with equal fingerprints contribute identically to every character
/// identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub index: Vec<i64>,
    pub chi_table: Vec<(DimVector, BigInt)>,
}

/// All componentwise-bounded dimension vectors 0 ≤ e ≤ d.
pub fn sub_dim_vectors(d: &[usize]) -> Vec<DimVector> {
    let mut out = vec![Vec::new()];
    for &di in d {
        let mut next = Vec::new();
        for v in &out {
            for x in 0..=di {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Euler characteristic table of the F-image (only nonzero entries kept).
pub fn chi_table(rep: &IntRep) -> Result<Vec<(DimVector, BigInt)>> {
    let mut table = Vec::new();
    for e in sub_dim_vectors(&rep.dims) {
        let chi = grassmannian_euler(rep, &e)?;
        if !chi.is_zero() {
            table.push((e, chi));
        }
    }
    Ok(table)
}

/// Character evaluation context: category instance, solved ι, and a value
/// cache (characters are recomputed many times during verification).
pub struct CharacterContext {
    pub cat: ArcCategory,
    pub iota: IotaMap,
    cache: RefCell<HashMap<ArcObject, LaurentPoly>>,
}

impl CharacterContext {
    pub fn new(cat: ArcCategory) -> Result<CharacterContext> {
        let iota = compute_iota(&cat)?;
        Ok(CharacterContext { cat, iota, cache: RefCell::new(HashMap::new()) })
    }

    pub fn fingerprint(&self, x: &ArcObject) -> Result<Fingerprint> {
        Ok(Fingerprint { index: self.cat.index(x), chi_table: chi_table(&self.cat.f_rep(x))? })
    }

    /// The cluster character of an object.
    pub fn cc(&self, x: &ArcObject) -> Result<LaurentPoly> {
        if let Some(v) = self.cache.borrow().get(x) {
            return Ok(v.clone());
        }
        let n = self.cat.n;
        let rep = self.cat.f_rep(x);
        let mut sum = LaurentPoly::zero(n);
        for e in sub_dim_vectors(&rep.dims) {
            let chi = grassmannian_euler(&rep, &e)?;
            if chi.is_zero() {
                continue;
            }
            let exp: Vec<i32> = self.iota.apply(&e).iter().map(|v| -(*v) as i32).collect();
            sum = sum.add(&LaurentPoly::monomial(n, &exp, chi));
        }
        let ind: Vec<i32> = self.cat.index(x).iter().map(|&v| v as i32).collect();
        let value = LaurentPoly::monomial(n, &ind, 1).mul(&sum);
        self.cache.borrow_mut().insert(x.clone(), value.clone());
        Ok(value)
    }
}
