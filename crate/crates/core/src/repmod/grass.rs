//! Submodule Grassmannians: exact point counts over 𝔽_q and Euler
//! characteristics by polynomial interpolation at q = 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rep::{IntRep, Rep};
use crate::error::Result;
use crate::exactalg::interp::{first_primes, interpolate_and_eval_at_one, samples_needed};
use crate::exactalg::{Mat, PrimeField};

/// Enumerate all `dim`-dimensional subspaces of 𝔽_q^`ambient` containing the
/// column span of `forced` (a matrix whose columns must lie in the subspace).
/// Each subspace is returned as a basis matrix (ambient × dim).
fn subspaces_containing(
    k: &PrimeField,
    ambient: usize,
    dim: usize,
    forced: &Mat<PrimeField>,
) -> Vec<Mat<PrimeField>> {
    // Reduce the forced block to a basis.
    let forced_basis = if forced.cols == 0 {
        Vec::new()
    } else {
        forced.transpose().row_basis(k)
    };
    let u = forced_basis.len();
    if dim < u || dim > ambient {
        return Vec::new();
    }
    // Work in the quotient by the forced subspace: choose a complement of
    // pivot coordinates. Pivot columns of the forced row basis.
    let mut is_pivot = vec![false; ambient];
    {
        let rows = forced_basis.clone();
        if !rows.is_empty() {
            let (_, piv) = Mat::from_rows(k, &rows).rref(k);
            for &c in &piv {
                is_pivot[c] = true;
            }
        }
    }
    let free_coords: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
    let qdim = free_coords.len();
    let need = dim - u;
    // Enumerate rref bases of `need`-dimensional subspaces of 𝔽_q^qdim and
    // lift through the free coordinates.
    let mut out = Vec::new();
    for rref_rows in enumerate_rref(k, qdim, need) {
        let mut basis = Mat::zero(k, ambient, dim);
        for (c, row) in forced_basis.iter().enumerate() {
            for r in 0..ambient {
                *basis.at_mut(r, c) = row[r].clone();
            }
        }
        for (j, row) in rref_rows.iter().enumerate() {
            for (idx, &coord) in free_coords.iter().enumerate() {
                *basis.at_mut(coord, u + j) = row[idx];
            }
        }
        out.push(basis);
    }
    out
}

/// All reduced row-echelon bases of `dim`-dimensional subspaces of 𝔽_q^n.
fn enumerate_rref(k: &PrimeField, n: usize, dim: usize) -> Vec<Vec<Vec<u64>>> {
    if dim > n {
        return Vec::new();
    }
    if dim == 0 {
        return vec![vec![]];
    }
    let q = k.modulus();
    // Choose pivot columns, then fill free entries.
    let mut out = Vec::new();
    let mut pivots = (0..dim).collect::<Vec<usize>>();
    loop {
        // Free entries: row i, column c with c > pivots[i], c not a pivot.
        let mut free_slots = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in (p + 1)..n {
                if !pivots.contains(&c) {
                    free_slots.push((i, c));
                }
            }
        }
        let total = free_slots.len();
        let mut counter = vec![0u64; total];
        loop {
            let mut rows = vec![vec![0u64; n]; dim];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (slot, &(i, c)) in free_slots.iter().enumerate() {
                rows[i][c] = counter[slot];
            }
            out.push(rows);
            // increment counter in base q
            let mut carry = 0;
            loop {
                if carry == total {
                    break;
                }
                counter[carry] += 1;
                if counter[carry] < q {
                    break;
                }
                counter[carry] = 0;
                carry += 1;
            }
            if total == 0 || carry == total {
                break;
            }
        }
        // next pivot combination (lexicographic)
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < n - (dim - i) {
                pivots[i] += 1;
                for j in i + 1..dim {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Count subrepresentations of `x` with dimension vector `e` over the prime
/// field of `k`, by explicit enumeration with arrow-stability pruning.
pub fn count_subreps(k: &PrimeField, x: &Rep<PrimeField>, e: &[usize]) -> BigInt {
    assert_eq!(e.len(), x.shape.n);
    if e.iter().zip(&x.dims).any(|(a, b)| a > b) {
        return BigInt::zero();
    }
    let order = x.shape.topological_order().expect("acyclic");
    // Depth-first over vertices in topological order; at each vertex the
    // subspace must contain the images of the previously chosen subspaces.
    fn recurse(
        k: &PrimeField,
        x: &Rep<PrimeField>,
        e: &[usize],
        order: &[usize],
        depth: usize,
        chosen: &mut Vec<Option<Mat<PrimeField>>>,
        count: &mut BigInt,
    ) {
        if depth == order.len() {
            *count += BigInt::one();
            return;
        }
        let v = order[depth];
        // Forced vectors: images of chosen subspaces along arrows into v.
        let mut forced_cols: Vec<Vec<u64>> = Vec::new();
        for (ai, &(s, t)) in x.shape.arrows.iter().enumerate() {
            if t != v {
                continue;
            }
            if let Some(ws) = &chosen[s] {
                let img = x.maps[ai].mul(k, ws);
                for c in 0..img.cols {
                    forced_cols.push((0..img.rows).map(|r| *img.at(r, c)).collect());
                }
            }
        }
        let forced = Mat::from_fn(x.dims[v], forced_cols.len(), |r, c| forced_cols[c][r]);
        for basis in subspaces_containing(k, x.dims[v], e[v], &forced) {
            chosen[v] = Some(basis);
            recurse(k, x, e, order, depth + 1, chosen, count);
            chosen[v] = None;
        }
    }
    // The topological order guarantees all arrows into `v` come from already
    // chosen vertices only if the order lists sources first; arrows from
    // later vertices are checked on arrival at the later vertex... they are
    // not: stability for arrow s→t needs W_s chosen before W_t, which the
    // topological order provides.
    let mut chosen: Vec<Option<Mat<PrimeField>>> = vec![None; x.shape.n];
    let mut count = BigInt::zero();
    recurse(k, x, e, &order, 0, &mut chosen, &mut count);
    count
}

/// Euler characteristic of the submodule Grassmannian Gr_e(x): point counts
/// over the first `degree_bound + 2` primes, interpolated and evaluated at 1.
pub fn grassmannian_euler(x: &IntRep, e: &[usize]) -> Result<BigInt> {
    let degree_bound: usize = e
        .iter()
        .zip(&x.dims)
        .map(|(&ei, &di)| ei * (di - ei.min(di)))
        .sum();
    let primes = first_primes(samples_needed(degree_bound));
    let samples: Vec<(u64, BigInt)> = primes
        .iter()
        .map(|&p| {
            let k = PrimeField::new(p);
            let xp = x.to_field(&k);
            (p, count_subreps(&k, &xp, e))
        })
        .collect();
    interpolate_and_eval_at_one(&samples, degree_bound)
}
