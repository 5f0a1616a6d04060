//! The Auslander–Reiten translate from a minimal projective presentation.

use crate::error::{Error, Result};
use crate::exactalg::{Field, Mat};

use super::rep::{IntRep, Rep};
use super::shape::PathAlgebra;

/// A morphism of representations: one matrix per vertex.
pub type RepMap<K> = Vec<Mat<K>>;

/// Per-vertex kernel of a morphism `f: X → Y`, as a subrepresentation:
/// returns (kernel rep, inclusion matrices into X).
pub fn kernel_subrep<K: Field>(k: &K, x: &Rep<K>, f: &RepMap<K>) -> (Rep<K>, RepMap<K>) {
    let shape = x.shape.clone();
    let mut incl: Vec<Mat<K>> = Vec::new();
    let mut dims = Vec::new();
    for i in 0..shape.n {
        let basis = f[i].kernel_basis(k);
        dims.push(basis.len());
        incl.push(Mat::from_fn(x.dims[i], basis.len(), |r, c| basis[c][r].clone()));
    }
    let mut maps = Vec::with_capacity(shape.arrows.len());
    for (ai, &(s, t)) in shape.arrows.iter().enumerate() {
        // Solve incl_t · N = X_a · incl_s column by column.
        let rhs_block = x.maps[ai].mul(k, &incl[s]);
        let mut m = Mat::zero(k, dims[t], dims[s]);
        for c in 0..dims[s] {
            let col: Vec<K::Elem> = (0..x.dims[t]).map(|r| rhs_block.at(r, c).clone()).collect();
            let sol = incl[t].solve(k, &col).expect("kernel not arrow-stable?");
            for r in 0..dims[t] {
                *m.at_mut(r, c) = sol[r].clone();
            }
        }
        maps.push(m);
    }
    (
        Rep {
            shape,
            dims,
            maps,
        },
        incl,
    )
}

/// Radical dimensions and a choice of top-lifting vectors per vertex:
/// vectors of X_i spanning a complement of rad(X)_i.
fn top_lifts<K: Field>(k: &K, x: &Rep<K>) -> Vec<Vec<Vec<K::Elem>>> {
    let shape = &x.shape;
    (0..shape.n)
        .map(|i| {
            // rad_i = Σ images of incoming arrows.
            let mut rows: Vec<Vec<K::Elem>> = Vec::new();
            for (ai, &(s, t)) in shape.arrows.iter().enumerate() {
                if t == i {
                    for c in 0..x.dims[s] {
                        rows.push((0..x.dims[i]).map(|r| x.maps[ai].at(r, c).clone()).collect());
                    }
                }
            }
            let mut span = if rows.is_empty() {
                Vec::new()
            } else {
                Mat::from_rows(k, &rows).row_basis(k)
            };
            let rad_rank = span.len();
            let mut lifts = Vec::new();
            for e in 0..x.dims[i] {
                if span.len() == x.dims[i] {
                    break;
                }
                let mut cand = vec![k.zero(); x.dims[i]];
                cand[e] = k.one();
                let mut test = span.clone();
                test.push(cand.clone());
                if Mat::from_rows(k, &test).rank(k) > span.len() {
                    span.push(cand.clone());
                    lifts.push(cand);
                }
            }
            let _ = rad_rank;
            lifts
        })
        .collect()
}

/// The AR translate τX computed from a minimal projective presentation
/// P_1 → P_0 → X → 0 and the Nakayama transport of the presentation map.
/// Errors if X is projective (zero syzygy).
pub fn ar_translate<K: Field>(k: &K, alg: &PathAlgebra, x: &Rep<K>) -> Result<Rep<K>> {
    let shape = &alg.shape;
    assert_eq!(*shape, x.shape, "different quivers");
    let projs: Vec<Rep<K>> = (0..shape.n)
        .map(|v| IntRep::projective(alg, v).to_field(k))
        .collect();
    let injs: Vec<Rep<K>> = (0..shape.n)
        .map(|v| IntRep::injective(alg, v).to_field(k))
        .collect();

    // Projective cover P_0 = ⊕_v P_v^{top dims}, with the explicit map π.
    let lifts = top_lifts(k, x);
    let mut p0 = Rep::zero(k, shape);
    let mut p0_summands: Vec<usize> = Vec::new(); // vertex per summand
    let mut gen_images: Vec<Vec<K::Elem>> = Vec::new(); // image of each generator in X
    for (v, ls) in lifts.iter().enumerate() {
        for g in ls {
            p0 = p0.direct_sum(k, &projs[v]);
            p0_summands.push(v);
            gen_images.push(g.clone());
        }
    }
    let pi = morphism_from_generators(k, alg, &projs, &p0, &p0_summands, &gen_images, x);
    // Surjectivity of the cover.
    for i in 0..shape.n {
        if pi[i].rank(k) != x.dims[i] {
            return Err(Error::Internal("projective cover not surjective".into()));
        }
    }
    let (syz, syz_incl) = kernel_subrep(k, &p0, &pi);
    if syz.total_dim() == 0 {
        return Err(Error::Hypothesis(
            "AR translate of a projective representation".into(),
        ));
    }

    // Projective cover of the syzygy: P_1 → syz, with generators expressed
    // inside P_0 via the inclusion.
    let syz_lifts = top_lifts(k, &syz);
    let mut p1_summands: Vec<usize> = Vec::new();
    let mut p1_gen_in_p0: Vec<Vec<K::Elem>> = Vec::new();
    for (v, ls) in syz_lifts.iter().enumerate() {
        for g in ls {
            p1_summands.push(v);
            p1_gen_in_p0.push(syz_incl[v].apply(k, g));
        }
    }

    // Express the presentation map P_1 → P_0 by path coefficients: the
    // generator of the summand P_v lands in ⊕ (P_w)_v, whose basis is by
    // construction indexed by paths w → v, summand by summand.
    // Then transport under Nakayama: P_w ↦ I_w, same path coefficients
    // acting by precomposition on functionals.
    let mut nu_p0 = Rep::zero(k, shape);
    for &w in &p0_summands {
        nu_p0 = nu_p0.direct_sum(k, &injs[w]);
    }
    let mut nu_p1 = Rep::zero(k, shape);
    for &v in &p1_summands {
        nu_p1 = nu_p1.direct_sum(k, &injs[v]);
    }
    // Build νφ vertexwise.
    let mut nu_phi: Vec<Mat<K>> = (0..shape.n)
        .map(|j| Mat::zero(k, nu_p0.dims[j], nu_p1.dims[j]))
        .collect();
    // Offsets of each summand's block at each vertex.
    let p0_off = block_offsets(shape.n, &p0_summands, |w, j| alg.paths_between(w, j).len());
    let p1_off = block_offsets(shape.n, &p1_summands, |v, j| alg.paths_between(v, j).len());
    for (b1, &v) in p1_summands.iter().enumerate() {
        // Path coefficients of this generator in each P_w block of (P_0)_v.
        let gen = &p1_gen_in_p0[b1];
        let mut cursor = 0usize;
        for (b0, &w) in p0_summands.iter().enumerate() {
            let paths_wv = alg.paths_between(w, v);
            let coeffs: Vec<K::Elem> = (0..paths_wv.len())
                .map(|t| gen[cursor + t].clone())
                .collect();
            cursor += paths_wv.len();
            // ν of the map P_v → P_w with coefficients over paths w→v:
            // at vertex j, entry [q: j→w][r: j→v] = Σ_p coeff_p [p∘q = r].
            for j in 0..shape.n {
                let rows_q = alg.paths_between(j, w);
                let cols_r = alg.paths_between(j, v);
                for (qi, &q) in rows_q.iter().enumerate() {
                    for (pi_idx, &p) in paths_wv.iter().enumerate() {
                        if k.is_zero(&coeffs[pi_idx]) {
                            continue;
                        }
                        // composite p∘q : j → v
                        let mut arrows = alg.paths[q].arrows.clone();
                        arrows.extend(alg.paths[p].arrows.iter());
                        if let Some(ri) = cols_r
                            .iter()
                            .position(|&r| alg.paths[r].arrows == arrows)
                        {
                            let e = nu_phi[j]
                                .at(p0_off[j][b0] + qi, p1_off[j][b1] + ri)
                                .clone();
                            *nu_phi[j].at_mut(p0_off[j][b0] + qi, p1_off[j][b1] + ri) =
                                k.add(&e, &coeffs[pi_idx]);
                        }
                    }
                }
            }
        }
    }
    // τX = ker(νφ : νP_1 → νP_0).
    let (tau, _) = kernel_subrep(k, &nu_p1, &nu_phi);
    Ok(tau)
}

fn block_offsets(
    n: usize,
    summands: &[usize],
    dim_of: impl Fn(usize, usize) -> usize,
) -> Vec<Vec<usize>> {
    (0..n)
        .map(|j| {
            let mut offs = Vec::with_capacity(summands.len());
            let mut acc = 0usize;
            for &v in summands {
                offs.push(acc);
                acc += dim_of(v, j);
            }
            offs
        })
        .collect()
}

/// Morphism ⊕ P_{v_b} → X sending each generator to the given vector.
fn morphism_from_generators<K: Field>(
    k: &K,
    alg: &PathAlgebra,
    projs: &[Rep<K>],
    p0: &Rep<K>,
    summands: &[usize],
    gen_images: &[Vec<K::Elem>],
    x: &Rep<K>,
) -> RepMap<K> {
    let shape = &alg.shape;
    let _ = projs;
    let offs = block_offsets(shape.n, summands, |v, j| alg.paths_between(v, j).len());
    (0..shape.n)
        .map(|j| {
            let mut m = Mat::zero(k, x.dims[j], p0.dims[j]);
            for (b, &v) in summands.iter().enumerate() {
                for (c, &pidx) in alg.paths_between(v, j).iter().enumerate() {
                    // basis path p: v → j acts on the generator image.
                    let act = x.path_action(k, &alg.paths[pidx].arrows, v);
                    let img = act.apply(k, &gen_images[b]);
                    for r in 0..x.dims[j] {
                        *m.at_mut(r, offs[j][b] + c) = img[r].clone();
                    }
                }
            }
            m
        })
        .collect()
}
