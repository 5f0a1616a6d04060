//! Indecomposables and direct-sum decomposition for type-A quiver shapes.
//!
//! For any orientation of a type-A line, the indecomposables are exactly the
//! interval representations. Multiplicities in a direct sum are recovered
//! from Hom dimensions against all indecomposables (the Hom matrix of a
//! representation-finite hereditary algebra is invertible over ℚ).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::rep::{hom_space, IntRep, Rep};
use crate::error::{Error, Result};
use crate::exactalg::{Mat, Rationals};
use crate::repmod::shape::QuiverShape;

/// An interval `[lo, hi]` of vertices (0-based, inclusive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalRep {
    pub lo: usize,
    pub hi: usize,
}

impl IntervalRep {
    pub fn to_rep(self, shape: &QuiverShape) -> IntRep {
        assert!(self.hi < shape.n && self.lo <= self.hi);
        let dims: Vec<usize> = (0..shape.n)
            .map(|i| usize::from(i >= self.lo && i <= self.hi))
            .collect();
        let maps = shape
            .arrows
            .iter()
            .map(|&(s, t)| {
                if dims[s] == 1 && dims[t] == 1 {
                    vec![1i64]
                } else {
                    vec![]
                }
            })
            .collect();
        IntRep {
            shape: shape.clone(),
            dims,
            maps,
        }
    }
}

/// All interval indecomposables of a type-A line shape.
pub fn interval_indecomposables(shape: &QuiverShape) -> Result<Vec<IntervalRep>> {
    if !shape.is_type_a_line() {
        return Err(Error::Hypothesis(
            "indecomposable enumeration implemented for type-A line shapes".into(),
        ));
    }
    let mut out = Vec::new();
    for lo in 0..shape.n {
        for hi in lo..shape.n {
            out.push(IntervalRep { lo, hi });
        }
    }
    Ok(out)
}

/// Decompose a representation of a type-A line shape into interval
/// indecomposables with multiplicities, via Hom-dimension counts.
pub fn decompose(x: &Rep<Rationals>) -> Result<Vec<(IntervalRep, usize)>> {
    let shape = &x.shape;
    let inds = interval_indecomposables(shape)?;
    let k = Rationals;
    let reps: Vec<Rep<Rationals>> = inds.iter().map(|iv| iv.to_rep(shape).to_field(&k)).collect();
    // G[a][b] = dim Hom(ind_a, ind_b); h[a] = dim Hom(ind_a, X).
    let m = inds.len();
    let g = Mat::from_fn(m, m, |a, b| {
        BigRational::from_integer(BigInt::from(hom_space(&k, &reps[a], &reps[b]).len()))
    });
    let h: Vec<BigRational> = (0..m)
        .map(|a| BigRational::from_integer(BigInt::from(hom_space(&k, &reps[a], x).len())))
        .collect();
    if g.rank(&k) != m {
        return Err(Error::Internal("Hom matrix of indecomposables singular".into()));
    }
    let sol = g.solve(&k, &h)?;
    let mut out = Vec::new();
    let mut total = 0usize;
    for (i, c) in sol.iter().enumerate() {
        if c.is_integer() {
            let v = c.to_integer();
            if v < BigInt::from(0) {
                return Err(Error::Internal("negative multiplicity in decomposition".into()));
            }
            let mult: usize = v.to_string().parse().unwrap();
            if mult > 0 {
                out.push((inds[i], mult));
                total += mult * (inds[i].hi - inds[i].lo + 1);
            }
        } else {
            return Err(Error::Internal("non-integer multiplicity in decomposition".into()));
        }
    }
    if total != x.total_dim() {
        return Err(Error::Internal("decomposition dimension mismatch".into()));
    }
    Ok(out)
}
