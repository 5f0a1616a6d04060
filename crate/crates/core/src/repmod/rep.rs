//! Representations, Hom/Ext spaces and extension middle terms.

use num_bigint::BigInt;

use super::shape::{PathAlgebra, QuiverShape};
use crate::exactalg::{Field, Mat};

/// A representation of an acyclic quiver over the field `K`: a vector space
/// dimension per vertex and, for each arrow `a: s → t`, a `dims[t] × dims[s]`
/// matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep<K: Field> {
    pub shape: QuiverShape,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat<K>>,
}

impl<K: Field> Rep<K> {
    pub fn zero(k: &K, shape: &QuiverShape) -> Self {
        Rep {
            shape: shape.clone(),
            dims: vec![0; shape.n],
            maps: shape
                .arrows
                .iter()
                .map(|_| Mat::zero(k, 0, 0))
                .collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, k: &K, other: &Rep<K>) -> Rep<K> {
        assert_eq!(self.shape, other.shape);
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .shape
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(s, t))| {
                Mat::from_fn(dims[t], dims[s], |i, j| {
                    if i < self.dims[t] && j < self.dims[s] {
                        self.maps[ai].at(i, j).clone()
                    } else if i >= self.dims[t] && j >= self.dims[s] {
                        other.maps[ai].at(i - self.dims[t], j - self.dims[s]).clone()
                    } else {
                        k.zero()
                    }
                })
            })
            .collect();
        Rep {
            shape: self.shape.clone(),
            dims,
            maps,
        }
    }

    /// The matrix of the action of a path (composite of its arrow maps).
    pub fn path_action(&self, k: &K, arrows: &[usize], from: usize) -> Mat<K> {
        let mut acc = Mat::identity(k, self.dims[from]);
        for &ai in arrows {
            acc = self.maps[ai].mul(k, &acc);
        }
        acc
    }
}

/// A representation with integer matrix entries, reducible into any exact
/// field. This is the form in which module data is described and cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntRep {
    pub shape: QuiverShape,
    pub dims: Vec<usize>,
    /// One row-major integer matrix (dims[t] × dims[s]) per arrow.
    pub maps: Vec<Vec<i64>>,
}

impl IntRep {
    pub fn zero(shape: &QuiverShape) -> Self {
        IntRep {
            shape: shape.clone(),
            dims: vec![0; shape.n],
            maps: shape.arrows.iter().map(|_| vec![]).collect(),
        }
    }

    pub fn to_field<K: Field>(&self, k: &K) -> Rep<K> {
        let maps = self
            .shape
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(s, t))| {
                Mat::from_fn(self.dims[t], self.dims[s], |i, j| {
                    k.from_int(&BigInt::from(self.maps[ai][i * self.dims[s] + j]))
                })
            })
            .collect();
        Rep {
            shape: self.shape.clone(),
            dims: self.dims.clone(),
            maps,
        }
    }

    pub fn direct_sum(&self, other: &IntRep) -> IntRep {
        assert_eq!(self.shape, other.shape);
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .shape
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(s, t))| {
                let mut m = vec![0i64; dims[t] * dims[s]];
                for i in 0..self.dims[t] {
                    for j in 0..self.dims[s] {
                        m[i * dims[s] + j] = self.maps[ai][i * self.dims[s] + j];
                    }
                }
                for i in 0..other.dims[t] {
                    for j in 0..other.dims[s] {
                        m[(self.dims[t] + i) * dims[s] + (self.dims[s] + j)] =
                            other.maps[ai][i * other.dims[s] + j];
                    }
                }
                m
            })
            .collect();
        IntRep {
            shape: self.shape.clone(),
            dims,
            maps,
        }
    }

    /// The indecomposable projective P_v: basis = paths starting at v.
    pub fn projective(alg: &PathAlgebra, v: usize) -> IntRep {
        let shape = &alg.shape;
        let basis: Vec<Vec<usize>> = (0..shape.n).map(|j| alg.paths_between(v, j)).collect();
        let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
        let maps = shape
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(s, t))| {
                let mut m = vec![0i64; dims[t] * dims[s]];
                for (col, &pi) in basis[s].iter().enumerate() {
                    // extend path by arrow ai
                    let mut arrows = alg.paths[pi].arrows.clone();
                    arrows.push(ai);
                    let row = basis[t]
                        .iter()
                        .position(|&qi| alg.paths[qi].arrows == arrows)
                        .expect("extended path must exist");
                    m[row * dims[s] + col] = 1;
                }
                m
            })
            .collect();
        IntRep {
            shape: shape.clone(),
            dims,
            maps,
        }
    }

    /// The indecomposable injective I_v: basis = dual basis of paths ending
    /// at v; an arrow `a: s → t` acts by precomposition with `a`.
    pub fn injective(alg: &PathAlgebra, v: usize) -> IntRep {
        let shape = &alg.shape;
        let basis: Vec<Vec<usize>> = (0..shape.n).map(|j| alg.paths_between(j, v)).collect();
        let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
        let maps = shape
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, &(s, t))| {
                let mut m = vec![0i64; dims[t] * dims[s]];
                // φ ∈ (I_v)_s is a functional on paths s→v; (a·φ)(q: t→v) =
                // φ(q∘a). In dual bases: row q, column p has a 1 iff p = q∘a.
                for (row, &qi) in basis[t].iter().enumerate() {
                    let mut arrows = vec![ai];
                    arrows.extend(alg.paths[qi].arrows.iter());
                    if let Some(col) = basis[s]
                        .iter()
                        .position(|&pi| alg.paths[pi].arrows == arrows)
                    {
                        m[row * dims[s] + col] = 1;
                    }
                }
                m
            })
            .collect();
        IntRep {
            shape: shape.clone(),
            dims,
            maps,
        }
    }
}

/// Basis of Hom(X, Y): each element is one matrix per vertex satisfying the
/// intertwining relations.
pub fn hom_space<K: Field>(k: &K, x: &Rep<K>, y: &Rep<K>) -> Vec<Vec<Mat<K>>> {
    assert_eq!(x.shape, y.shape, "different quivers");
    let shape = &x.shape;
    // Unknowns: entries of f_i (dims_Y[i] × dims_X[i]), vertex by vertex.
    let offsets: Vec<usize> = {
        let mut o = vec![0usize];
        for i in 0..shape.n {
            o.push(o[i] + y.dims[i] * x.dims[i]);
        }
        o
    };
    let nvar = offsets[shape.n];
    let mut rows: Vec<Vec<K::Elem>> = Vec::new();
    for (ai, &(s, t)) in shape.arrows.iter().enumerate() {
        // f_t ∘ X_a − Y_a ∘ f_s = 0, one equation per (r, c).
        for r in 0..y.dims[t] {
            for c in 0..x.dims[s] {
                let mut row = vec![k.zero(); nvar];
                for m in 0..x.dims[t] {
                    // coefficient of (f_t)_{r,m}: X_a[m, c]
                    row[offsets[t] + r * x.dims[t] + m] =
                        k.add(&row[offsets[t] + r * x.dims[t] + m], x.maps[ai].at(m, c));
                }
                for m in 0..y.dims[s] {
                    // coefficient of (f_s)_{m,c}: −Y_a[r, m]
                    row[offsets[s] + m * x.dims[s] + c] = k.sub(
                        &row[offsets[s] + m * x.dims[s] + c],
                        y.maps[ai].at(r, m),
                    );
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        // No constraints: the whole space.
        let mut basis = Vec::new();
        for i in 0..nvar {
            let mut v = vec![k.zero(); nvar];
            v[i] = k.one();
            basis.push(v);
        }
        basis
    } else {
        Mat::from_rows(k, &rows).kernel_basis(k)
    };
    kernel
        .into_iter()
        .map(|v| {
            (0..shape.n)
                .map(|i| {
                    Mat::from_fn(y.dims[i], x.dims[i], |r, c| {
                        v[offsets[i] + r * x.dims[i] + c].clone()
                    })
                })
                .collect()
        })
        .collect()
}

/// The Ext¹(X, Y) data for a hereditary path algebra: cocycles are tuples
/// ξ = (ξ_a)_a with ξ_a: X_s → Y_t, coboundaries are images of vertex maps.
#[derive(Clone, Debug)]
pub struct ExtSpace<K: Field> {
    pub x: Rep<K>,
    pub y: Rep<K>,
    /// Dimension of Ext¹.
    pub dim: usize,
    /// Cocycle representatives of a basis, one tuple of matrices per element.
    pub basis: Vec<Vec<Mat<K>>>,
    /// Row space of the coboundary image plus chosen basis cocycles, used to
    /// reduce arbitrary cocycles to coordinates. Internal layout.
    reducer: Mat<K>,
    cob_rank: usize,
    nvar: usize,
    offsets: Vec<usize>,
}

impl<K: Field> ExtSpace<K> {
    /// Coordinates of a cocycle with respect to `basis`, modulo coboundaries.
    pub fn reduce(&self, k: &K, cocycle: &[Mat<K>]) -> Vec<K::Elem> {
        let mut v = vec![k.zero(); self.nvar];
        for (ai, m) in cocycle.iter().enumerate() {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    v[self.offsets[ai] + r * m.cols + c] = m.at(r, c).clone();
                }
            }
        }
        // Solve reducerᵀ · t = v; the coordinates of interest are the
        // entries of t beyond the coboundary block.
        let sol = self
            .reducer
            .transpose()
            .solve(k, &v)
            .expect("cocycle must lie in the cocycle space");
        sol[self.cob_rank..self.cob_rank + self.dim].to_vec()
    }
}

/// Compute Ext¹(X, Y) with explicit cocycle representatives.
pub fn ext_space<K: Field>(k: &K, x: &Rep<K>, y: &Rep<K>) -> ExtSpace<K> {
    assert_eq!(x.shape, y.shape, "different quivers");
    let shape = x.shape.clone();
    // Cocycle space: ⊕_a Hom_k(X_s, Y_t). Coboundary of (f_i)_i is
    // (Y_a f_s − f_t X_a)_a.
    let offsets: Vec<usize> = {
        let mut o = vec![0usize];
        for (ai, &(s, t)) in shape.arrows.iter().enumerate() {
            o.push(o[ai] + y.dims[t] * x.dims[s]);
        }
        o
    };
    let nvar = offsets[shape.arrows.len()];
    // Columns of the coboundary map, one per entry of each f_i.
    let mut image_vectors: Vec<Vec<K::Elem>> = Vec::new();
    for i in 0..shape.n {
        for r in 0..y.dims[i] {
            for c in 0..x.dims[i] {
                // f = elementary matrix E_{r,c} at vertex i.
                let mut v = vec![k.zero(); nvar];
                for (ai, &(s, t)) in shape.arrows.iter().enumerate() {
                    // (Y_a f_s − f_t X_a) entry (p, q)
                    if s == i {
                        for p in 0..y.dims[t] {
                            // Y_a[p, r] at column c
                            v[offsets[ai] + p * x.dims[s] + c] = k.add(
                                &v[offsets[ai] + p * x.dims[s] + c],
                                y.maps[ai].at(p, r),
                            );
                        }
                    }
                    if t == i {
                        for q in 0..x.dims[s] {
                            // −X_a[c, q] at row r
                            v[offsets[ai] + r * x.dims[s] + q] = k.sub(
                                &v[offsets[ai] + r * x.dims[s] + q],
                                x.maps[ai].at(c, q),
                            );
                        }
                    }
                }
                image_vectors.push(v);
            }
        }
    }
    // Row-reduce the image, then extend by standard vectors to a basis of
    // the full cocycle space; the extension represents Ext¹.
    let kk = k.clone();
    let img = if image_vectors.is_empty() {
        Vec::new()
    } else {
        Mat::from_rows(&kk, &image_vectors).row_basis(&kk)
    };
    let cob_rank = img.len();
    let mut rows = img;
    let mut chosen: Vec<usize> = Vec::new();
    for e in 0..nvar {
        if rows.len() == nvar {
            break;
        }
        let mut cand = vec![k.zero(); nvar];
        cand[e] = k.one();
        let mut test = rows.clone();
        test.push(cand.clone());
        if Mat::from_rows(&kk, &test).rank(&kk) > rows.len() {
            rows.push(cand);
            chosen.push(e);
        }
    }
    let dim = rows.len() - cob_rank;
    let basis: Vec<Vec<Mat<K>>> = chosen
        .iter()
        .map(|&e| {
            shape
                .arrows
                .iter()
                .enumerate()
                .map(|(ai, &(s, t))| {
                    Mat::from_fn(y.dims[t], x.dims[s], |r, c| {
                        if offsets[ai] + r * x.dims[s] + c == e {
                            k.one()
                        } else {
                            k.zero()
                        }
                    })
                })
                .collect()
        })
        .collect();
    let reducer = Mat::from_rows(&kk, &rows);
    ExtSpace {
        x: x.clone(),
        y: y.clone(),
        dim,
        basis,
        reducer,
        cob_rank,
        nvar,
        offsets,
    }
}

/// The middle term of the extension of X by Y with cocycle ξ:
/// E = Y ⊕ X with arrow maps [[Y_a, ξ_a], [0, X_a]], so that
/// 0 → Y → E → X → 0 is exact.
pub fn middle_term<K: Field>(k: &K, x: &Rep<K>, y: &Rep<K>, cocycle: &[Mat<K>]) -> Rep<K> {
    assert_eq!(x.shape, y.shape);
    let shape = x.shape.clone();
    let dims: Vec<usize> = x.dims.iter().zip(&y.dims).map(|(a, b)| a + b).collect();
    let maps = shape
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, &(s, t))| {
            Mat::from_fn(dims[t], dims[s], |i, j| {
                let yd_t = y.dims[t];
                let yd_s = y.dims[s];
                if i < yd_t && j < yd_s {
                    y.maps[ai].at(i, j).clone()
                } else if i < yd_t && j >= yd_s {
                    cocycle[ai].at(i, j - yd_s).clone()
                } else if i >= yd_t && j >= yd_s {
                    x.maps[ai].at(i - yd_t, j - yd_s).clone()
                } else {
                    k.zero()
                }
            })
        })
        .collect();
    Rep { shape, dims, maps }
}
