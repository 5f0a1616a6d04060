//! Stratification of projectivized morphism spaces by cone class and exact
//! verification of the multiplication identity, its classical special case,
//! the almost-split-triangle identity, and the add-T-factoring identity.
//!
//! Euler characteristics of strata are computed two independent ways: a
//! combinatorial method over coordinate-support cells (inclusion–exclusion
//! over subspace dimensions) and finite-field point counting followed by
//! polynomial interpolation. Both require the support patterns occurring in
//! the space to be forests on summand instances, which makes every point of
//! a cell equivalent to a chosen representative under automorphism rescaling.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cccharacter::{CharacterContext, Fingerprint};
use crate::clustercat::{ArcCategory, ArcObject};
use crate::error::{Error, Result};
use crate::exactalg::interp::interpolate_and_eval_at_one;
use crate::exactalg::{Field, LaurentPoly, Mat, PrimeField, Rationals};

/// A subspace of a morphism space Hom(L, ΣM), given by basis rows over the
/// canonical crossing-pair coordinates.
pub type SubspaceBasis = Vec<Vec<BigRational>>;

/// Basis of the full morphism space (identity coordinates).
pub fn full_space_basis(dim: usize) -> SubspaceBasis {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

/// Basis of the coordinate subspace supported on the given pair positions.
pub fn coordinate_basis(dim: usize, positions: &[usize]) -> SubspaceBasis {
    positions
        .iter()
        .map(|&p| {
            (0..dim)
                .map(|j| if j == p { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

/// One cone class inside a projectivized space, with its exact Euler
/// characteristic.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub fingerprint: Fingerprint,
    pub representative: ArcObject,
    pub chi: BigInt,
}

/// Outcome of one identity check, with both sides and the strata tables.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub strata_v: Vec<Stratum>,
    pub strata_r: Vec<Stratum>,
    pub pass: bool,
}

fn rat_mat(rows: &[Vec<BigRational>]) -> Mat<Rationals> {
    let k = Rationals;
    if rows.is_empty() {
        return Mat::zero(&k, 0, 0);
    }
    Mat::from_rows(&k, rows)
}

fn rank_of(rows: &[Vec<BigRational>]) -> usize {
    if rows.is_empty() {
        0
    } else {
        rat_mat(rows).rank(&Rationals)
    }
}

/// dim of { v ∈ span(basis) : supp(v) ⊆ mask } for every mask, where the
/// ambient coordinates are the crossing pairs.
fn subspace_dims_by_mask(basis: &SubspaceBasis, dim_amb: usize) -> Vec<usize> {
    let total = rank_of(basis);
    let nmasks = 1usize << dim_amb;
    let mut dims = vec![0usize; nmasks];
    for mask in 0..nmasks {
        // dim V_S = dim V − rank of V projected onto the complement coords.
        let complement: Vec<usize> =
            (0..dim_amb).filter(|c| mask & (1 << c) == 0).collect();
        if complement.is_empty() {
            dims[mask] = total;
            continue;
        }
        let projected: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|row| complement.iter().map(|&c| row[c].clone()).collect())
            .collect();
        dims[mask] = total - rank_of(&projected);
    }
    dims
}

/// Check that the support pattern is a forest on the bipartite instance
/// graph (L instances × M instances); in that case automorphism rescaling
/// makes all scalar choices on the support equivalent.
fn support_is_forest(pairs: &[(usize, usize)], mask: usize) -> bool {
    let mut parent: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    fn find(
        parent: &mut BTreeMap<(usize, usize), (usize, usize)>,
        x: (usize, usize),
    ) -> (usize, usize) {
        let p = *parent.get(&x).unwrap_or(&x);
        if p == x {
            x
        } else {
            let r = find(parent, p);
            parent.insert(x, r);
            r
        }
    }
    for (pos, &(i, j)) in pairs.iter().enumerate() {
        if mask & (1 << pos) == 0 {
            continue;
        }
        let a = (0usize, i);
        let b = (1usize, j);
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra == rb {
            return false;
        }
        parent.insert(ra, rb);
    }
    true
}

/// Find a vector of V with support exactly `mask` (assumed nonempty cell):
/// a generic combination of a basis of V_S works; scan small parameter
/// values until the support is exact.
fn cell_representative(
    basis: &SubspaceBasis,
    dim_amb: usize,
    mask: usize,
) -> Result<Vec<BigRational>> {
    let complement: Vec<usize> = (0..dim_amb).filter(|c| mask & (1 << c) == 0).collect();
    let k = Rationals;
    // Basis of V_S: combinations x of the given rows with x·B zero on the
    // complement coordinates.
    let coeff_rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|row| complement.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let inside: Vec<Vec<BigRational>> = if complement.is_empty() {
        basis.clone()
    } else {
        let m = rat_mat(&coeff_rows);
        m.transpose()
            .kernel_basis(&k)
            .into_iter()
            .map(|x| {
                // x has one coefficient per basis row.
                let mut v = vec![BigRational::zero(); dim_amb];
                for (coef, row) in x.iter().zip(basis) {
                    for (vi, ri) in v.iter_mut().zip(row) {
                        *vi += coef * ri;
                    }
                }
                v
            })
            .collect()
    };
    for t in 1..200i64 {
        let mut v = vec![BigRational::zero(); dim_amb];
        let mut scale = BigRational::one();
        let tq = BigRational::from_integer(t.into());
        for row in &inside {
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi += &scale * ri;
            }
            scale *= &tq;
        }
        let supp_ok = (0..dim_amb).all(|c| (mask & (1 << c) != 0) != v[c].is_zero());
        if supp_ok {
            return Ok(v);
        }
    }
    Err(Error::Internal("no representative with exact support found".into()))
}

/// Stratify ℙV ⊆ ℙHom(L, ΣM) by cone class, combinatorially: cells are
/// coordinate-support patterns; χ of a cell is an inclusion–exclusion over
/// dimensions of coordinate sections of V, and the cone class of a cell is
/// read off from one representative.
pub fn stratify(
    ctx: &CharacterContext,
    l: &ArcObject,
    m: &ArcObject,
    basis: &SubspaceBasis,
) -> Result<Vec<Stratum>> {
    let cat = &ctx.cat;
    let pairs = cat.crossing_pairs(l, m);
    let d = pairs.len();
    if d == 0 || rank_of(basis) == 0 {
        return Err(Error::Hypothesis("stratification of a zero space".into()));
    }
    if d > 16 {
        return Err(Error::Hypothesis("morphism space too large to stratify".into()));
    }
    let dims = subspace_dims_by_mask(basis, d);
    let mut merged: BTreeMap<Fingerprint, (ArcObject, BigInt)> = BTreeMap::new();
    for mask in 1usize..(1 << d) {
        if dims[mask] == 0 {
            continue;
        }
        // Cell is nonempty iff dropping any support coordinate loses
        // dimension.
        let nonempty = (0..d)
            .filter(|c| mask & (1 << c) != 0)
            .all(|c| dims[mask & !(1 << c)] < dims[mask]);
        if !nonempty {
            continue;
        }
        // χ(cell) = Σ_{S'⊆S} (−1)^{|S∖S'|} dim V_{S'} (the q−1 derivative
        // of the point-count at q = 1).
        let mut chi: i64 = 0;
        let mut sub = mask;
        loop {
            let sign = if (mask.count_ones() - sub.count_ones()) % 2 == 0 { 1 } else { -1 };
            chi += sign * dims[sub] as i64;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        if !support_is_forest(&pairs, mask) {
            return Err(Error::UnsupportedCone(format!(
                "support pattern {mask:b} is not a forest; cone class is not \
                 constant on the scalar cell"
            )));
        }
        if chi == 0 {
            continue;
        }
        let rep_vec = cell_representative(basis, d, mask)?;
        debug_assert!(point_support(&rep_vec) == mask);
        let support: Vec<(usize, usize)> = (0..d)
            .filter(|c| mask & (1 << c) != 0)
            .map(|c| pairs[c])
            .collect();
        let cone = cat.cone_of_support(l, m, &support);
        let fp = ctx.fingerprint(&cone)?;
        let entry = merged.entry(fp).or_insert_with(|| (cone.clone(), BigInt::zero()));
        entry.1 += chi;
    }
    Ok(merged
        .into_iter()
        .filter(|(_, (_, chi))| !chi.is_zero())
        .map(|(fingerprint, (representative, chi))| Stratum { fingerprint, representative, chi })
        .collect())
}

fn point_support(v: &[BigRational]) -> usize {
    v.iter().enumerate().fold(0usize, |acc, (i, x)| {
        if x.is_zero() { acc } else { acc | (1 << i) }
    })
}

/// Independent χ computation: count stratum points of ℙV over several
/// prime fields and interpolate the counting polynomial at q = 1.
pub fn stratify_finite_field(
    ctx: &CharacterContext,
    l: &ArcObject,
    m: &ArcObject,
    basis: &SubspaceBasis,
    primes: &[u64],
) -> Result<Vec<(Fingerprint, BigInt)>> {
    let cat = &ctx.cat;
    let pairs = cat.crossing_pairs(l, m);
    let d = pairs.len();
    let dim_v = rank_of(basis);
    if d == 0 || dim_v == 0 {
        return Err(Error::Hypothesis("stratification of a zero space".into()));
    }
    if primes.len() < dim_v + 1 {
        return Err(Error::Hypothesis(format!(
            "need at least {} primes for a degree-{} count",
            dim_v + 1,
            dim_v - 1
        )));
    }
    // Clear denominators: integer basis rows.
    let int_basis: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| {
                if x.is_zero() { acc } else { num_integer::lcm(acc, x.denom().abs()) }
            });
            row.iter().map(|x| (x * &lcm).to_integer()).collect()
        })
        .collect();
    let mut counts: BTreeMap<Fingerprint, Vec<(u64, BigInt)>> = BTreeMap::new();
    for &p in primes {
        let k = PrimeField::new(p);
        let rows: Vec<Vec<u64>> = int_basis
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let r = x % BigInt::from(p);
                        let r = if r.sign() == num_bigint::Sign::Minus { r + p } else { r };
                        u64::try_from(r).unwrap()
                    })
                    .collect()
            })
            .collect();
        let mat = Mat::from_rows(&k, &rows);
        let red = mat.row_basis(&k);
        if red.len() != dim_v {
            return Err(Error::Internal(format!(
                "subspace degenerates modulo {p}; choose different primes"
            )));
        }
        // Enumerate ℙ(V ⊗ F_p): coefficient vectors with first nonzero = 1.
        let mut local: BTreeMap<Fingerprint, BigInt> = BTreeMap::new();
        let mut coeff = vec![0u64; dim_v];
        enumerate_projective(&mut coeff, 0, false, p, &mut |c: &[u64]| -> Result<()> {
            let mut v = vec![0u64; d];
            for (ci, row) in c.iter().zip(&red) {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = k.add(vi, &k.mul(ci, ri));
                }
            }
            let mask = v.iter().enumerate().fold(0usize, |acc, (i, x)| {
                if *x == 0 { acc } else { acc | (1 << i) }
            });
            if mask == 0 {
                return Err(Error::Internal("zero vector enumerated as point".into()));
            }
            if !support_is_forest(&pairs, mask) {
                return Err(Error::UnsupportedCone(
                    "non-forest support pattern in finite-field count".into(),
                ));
            }
            let support: Vec<(usize, usize)> = (0..d)
                .filter(|c2| mask & (1 << c2) != 0)
                .map(|c2| pairs[c2])
                .collect();
            let cone = cat.cone_of_support(l, m, &support);
            let fp = ctx.fingerprint(&cone)?;
            *local.entry(fp).or_insert_with(BigInt::zero) += 1;
            Ok(())
        })?;
        for (fp, c) in local {
            counts.entry(fp).or_default().push((p, c));
        }
    }
    let mut out = Vec::new();
    for (fp, mut samples) in counts {
        // A fingerprint absent over some prime has count zero there.
        for &p in primes {
            if !samples.iter().any(|&(q, _)| q == p) {
                samples.push((p, BigInt::zero()));
            }
        }
        samples.sort();
        let chi = interpolate_and_eval_at_one(&samples, dim_v - 1)?;
        if !chi.is_zero() {
            out.push((fp, chi));
        }
    }
    Ok(out)
}

fn enumerate_projective(
    coeff: &mut Vec<u64>,
    pos: usize,
    pivot_set: bool,
    p: u64,
    f: &mut impl FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    if pos == coeff.len() {
        if pivot_set {
            f(coeff)?;
        }
        return Ok(());
    }
    if !pivot_set {
        coeff[pos] = 0;
        enumerate_projective(coeff, pos + 1, false, p, f)?;
        coeff[pos] = 1;
        enumerate_projective(coeff, pos + 1, true, p, f)?;
        coeff[pos] = 0;
        Ok(())
    } else {
        for v in 0..p {
            coeff[pos] = v;
            enumerate_projective(coeff, pos + 1, true, p, f)?;
        }
        coeff[pos] = 0;
        Ok(())
    }
}

/// Kernel of the pairing β(V, ·) inside Hom(M, ΣL): β is the sum over
/// matched crossing pairs of products of coordinates, so the kernel is cut
/// out by one linear form per basis vector of V.
pub fn beta_kernel_basis(
    cat: &ArcCategory,
    l: &ArcObject,
    m: &ArcObject,
    basis: &SubspaceBasis,
) -> SubspaceBasis {
    let pairs_lm = cat.crossing_pairs(l, m);
    let pairs_ml = cat.crossing_pairs(m, l);
    let k = Rationals;
    // Row per V basis vector, column per (j, i) coordinate of Hom(M, ΣL).
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|v| {
            pairs_ml
                .iter()
                .map(|&(j, i)| {
                    let pos = pairs_lm
                        .iter()
                        .position(|&q| q == (i, j))
                        .expect("crossing pairs are symmetric");
                    v[pos].clone()
                })
                .collect()
        })
        .collect();
    if pairs_ml.is_empty() {
        return Vec::new();
    }
    rat_mat(&rows).kernel_basis(&k)
}

/// Strata of R = ℙHom(M, ΣL) ∖ ℙKer β(V, ·): the χ of a cone class in R is
/// its χ in the full space minus its χ in the projectivized kernel.
pub fn complement_set_r(
    ctx: &CharacterContext,
    l: &ArcObject,
    m: &ArcObject,
    basis: &SubspaceBasis,
) -> Result<Vec<Stratum>> {
    let cat = &ctx.cat;
    let pairs_ml = cat.crossing_pairs(m, l);
    let full = stratify(ctx, m, l, &full_space_basis(pairs_ml.len()))?;
    let ker = beta_kernel_basis(cat, l, m, basis);
    let mut merged: BTreeMap<Fingerprint, (ArcObject, BigInt)> = BTreeMap::new();
    for s in full {
        merged.insert(s.fingerprint, (s.representative, s.chi));
    }
    if rank_of(&ker) > 0 {
        for s in stratify(ctx, m, l, &ker)? {
            let entry = merged
                .entry(s.fingerprint)
                .or_insert_with(|| (s.representative.clone(), BigInt::zero()));
            entry.1 -= s.chi;
        }
    }
    Ok(merged
        .into_iter()
        .filter(|(_, (_, chi))| !chi.is_zero())
        .map(|(fingerprint, (representative, chi))| Stratum { fingerprint, representative, chi })
        .collect())
}

/// Verify the multiplication identity for the triple (L, M, V):
/// χ(ℙV)·CC(L)·CC(M) = Σ χ(ℙV_⟨Y⟩)·CC(Y) + Σ χ(R_⟨Y⟩)·CC(Y).
pub fn verify_refined(
    ctx: &CharacterContext,
    l: &ArcObject,
    m: &ArcObject,
    basis: &SubspaceBasis,
) -> Result<VerificationReport> {
    let dim_v = rank_of(basis);
    if dim_v == 0 {
        return Err(Error::Hypothesis("V must be nonzero".into()));
    }
    if ctx.cat.crossing_pairs(l, m).is_empty() {
        return Err(Error::Hypothesis("Hom(L, ΣM) must be nonzero".into()));
    }
    let strata_v = stratify(ctx, l, m, basis)?;
    let strata_r = complement_set_r(ctx, l, m, basis)?;
    let n = ctx.cat.n;
    let lhs = LaurentPoly::constant(n, dim_v as i64)
        .mul(&ctx.cc(l)?)
        .mul(&ctx.cc(m)?);
    let mut rhs = LaurentPoly::zero(n);
    for s in strata_v.iter().chain(strata_r.iter()) {
        rhs = rhs.add(&ctx.cc(&s.representative)?.scale(&s.chi));
    }
    let pass = lhs == rhs;
    Ok(VerificationReport { name: "refined".into(), lhs, rhs, strata_v, strata_r, pass })
}

/// The almost-split-triangle identity CC(Z)·CC(ΣZ) = CC(Y) + 1 for an
/// indecomposable Z, via the multiplication identity with V the full
/// (one-dimensional) space Hom(Z, Σ(ΣZ)).
pub fn verify_ar(ctx: &CharacterContext, z: crate::clustercat::Arc) -> Result<VerificationReport> {
    let cat = &ctx.cat;
    let zo = ArcObject::single(cat.big_n, z);
    let sz = cat.suspend(&zo);
    let pairs = cat.crossing_pairs(&zo, &sz);
    if pairs.len() != 1 {
        return Err(Error::Internal("Hom(Z, Σ²Z) must be one-dimensional".into()));
    }
    let mut report = verify_refined(ctx, &zo, &sz, &full_space_basis(1))?;
    report.name = "ar".into();
    // Cross-check the shape of the right-hand side: middle term plus one.
    let y = cat.cone_of_support(&zo, &sz, &pairs);
    let direct = ctx.cc(&y)?.add(&LaurentPoly::one(cat.n));
    if direct != report.rhs {
        report.pass = false;
    }
    Ok(report)
}

/// The add-T-factoring identity: run the multiplication identity with
/// V = (T)(L, ΣM), after checking Ker β(V, ·) = (T)(M, ΣL).
pub fn verify_factor_ideal(
    ctx: &CharacterContext,
    l: &ArcObject,
    m: &ArcObject,
) -> Result<VerificationReport> {
    let cat = &ctx.cat;
    let pairs_lm = cat.crossing_pairs(l, m);
    let ideal_lm = cat.factor_ideal_pairs(l, m);
    if ideal_lm.is_empty() {
        return Err(Error::Hypothesis("factoring ideal (T)(L, ΣM) is zero".into()));
    }
    let positions: Vec<usize> = ideal_lm
        .iter()
        .map(|p| pairs_lm.iter().position(|q| q == p).unwrap())
        .collect();
    let basis = coordinate_basis(pairs_lm.len(), &positions);

    // Kernel identity: Ker β(V, ·) must equal the opposite ideal.
    let pairs_ml = cat.crossing_pairs(m, l);
    let ideal_ml = cat.factor_ideal_pairs(m, l);
    let ker = beta_kernel_basis(cat, l, m, &basis);
    let ker_positions: Vec<usize> = pairs_ml
        .iter()
        .enumerate()
        .filter(|&(_, &(j, i))| !ideal_lm.contains(&(i, j)))
        .map(|(pos, _)| pos)
        .collect();
    let expected: Vec<usize> = pairs_ml
        .iter()
        .enumerate()
        .filter(|&(_, p)| ideal_ml.contains(p))
        .map(|(pos, _)| pos)
        .collect();
    let kernel_matches = ker_positions == expected && rank_of(&ker) == ker_positions.len() && {
        // The kernel must be exactly the coordinate subspace on those
        // positions.
        let coord = coordinate_basis(pairs_ml.len(), &ker_positions);
        let mut both = ker.clone();
        both.extend(coord.iter().cloned());
        rank_of(&both) == ker_positions.len()
    };
    let mut report = verify_refined(ctx, l, m, &basis)?;
    report.name = "ideal".into();
    if !kernel_matches {
        report.pass = false;
    }
    Ok(report)
}
