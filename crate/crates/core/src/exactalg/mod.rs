//! Exact arithmetic: scalars over ℚ and 𝔽_p, Laurent polynomials over ℤ,
//! linear algebra over exact fields, and point-count interpolation.

pub mod field;
pub mod matrix;
pub mod laurent;
pub mod interp;

pub use field::{Field, FieldScalar, PrimeField, Rationals};
pub use laurent::{IntPolynomial, LaurentPoly};
pub use matrix::Mat;
pub use interp::interpolate_and_eval_at_one;

use crate::error::{Error, Result};

/// Solve `a·x = rhs` over a common exact field; the matrix is given row-major.
///
/// Returns a particular solution; errors if the system is inconsistent or the
/// scalars do not all live in the same field.
pub fn solve_linear(a: &[Vec<FieldScalar>], rhs: &[FieldScalar]) -> Result<Vec<FieldScalar>> {
    let rows = a.len();
    if rhs.len() != rows {
        return Err(Error::InconsistentSystem("rhs length mismatch".into()));
    }
    let mut all: Vec<&FieldScalar> = a.iter().flatten().collect();
    all.extend(rhs.iter());
    let proto = match all.first() {
        None => return Ok(Vec::new()),
        Some(s) => (*s).clone(),
    };
    for s in &all {
        if !proto.same_field(s) {
            return Err(Error::MixedFields(format!("{proto:?} vs {s:?}")));
        }
    }
    match &proto {
        FieldScalar::Rat(_) => {
            let k = Rationals;
            let cols = a.first().map_or(0, |r| r.len());
            let m = Mat::from_fn(rows, cols, |i, j| match &a[i][j] {
                FieldScalar::Rat(x) => x.clone(),
                _ => unreachable!(),
            });
            let b: Vec<_> = rhs
                .iter()
                .map(|s| match s {
                    FieldScalar::Rat(x) => x.clone(),
                    _ => unreachable!(),
                })
                .collect();
            let sol = m.solve(&k, &b)?;
            Ok(sol.into_iter().map(FieldScalar::Rat).collect())
        }
        FieldScalar::Fp { p, .. } => {
            let k = PrimeField::new(*p);
            let cols = a.first().map_or(0, |r| r.len());
            let m = Mat::from_fn(rows, cols, |i, j| match &a[i][j] {
                FieldScalar::Fp { v, .. } => *v,
                _ => unreachable!(),
            });
            let b: Vec<_> = rhs
                .iter()
                .map(|s| match s {
                    FieldScalar::Fp { v, .. } => *v,
                    _ => unreachable!(),
                })
                .collect();
            let sol = m.solve(&k, &b)?;
            Ok(sol
                .into_iter()
                .map(|v| FieldScalar::Fp { p: *p, v })
                .collect())
        }
    }
}
