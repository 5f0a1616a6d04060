//! Exchange quivers, seeds, mutation and cluster-variable enumeration.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Mat, Rationals};

/// A quiver without loops or 2-cycles, encoded by its skew-symmetric
/// exchange matrix `b[i][j]` = (arrows i→j) − (arrows j→i), 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeQuiver {
    pub n: usize,
    pub b: Vec<Vec<i64>>,
}

impl ExchangeQuiver {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        for row in &b {
            if row.len() != n {
                return Err(Error::Parse("exchange matrix is not square".into()));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if b[i][j] != -b[j][i] {
                    return Err(Error::Parse(format!(
                        "exchange matrix not skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(ExchangeQuiver { n, b })
    }

    /// The linearly oriented type-A quiver 1→2→…→n.
    pub fn type_a(n: usize) -> Self {
        let mut b = vec![vec![0i64; n]; n];
        for i in 0..n.saturating_sub(1) {
            b[i][i + 1] = 1;
            b[i + 1][i] = -1;
        }
        ExchangeQuiver { n, b }
    }

    /// Matrix mutation at vertex `k` (0-based).
    pub fn mutate(&self, k: usize) -> Self {
        assert!(k < self.n);
        let mut nb = vec![vec![0i64; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                nb[i][j] = if i == k || j == k {
                    -self.b[i][j]
                } else {
                    self.b[i][j]
                        + (self.b[i][k].abs() * self.b[k][j] + self.b[i][k] * self.b[k][j].abs())
                            / 2
                };
            }
        }
        ExchangeQuiver { n: self.n, b: nb }
    }

    /// Delete a vertex (0-based), keeping the induced subquiver.
    pub fn delete_vertex(&self, k: usize) -> Self {
        assert!(k < self.n);
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        let b = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.b[i][j]).collect())
            .collect();
        ExchangeQuiver { n: self.n - 1, b }
    }
}

/// A seed: an exchange quiver together with a cluster of Laurent polynomials
/// in the initial variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub quiver: ExchangeQuiver,
    pub cluster: Vec<LaurentPoly>,
}

impl Seed {
    /// The initial seed: cluster = the initial variables themselves.
    pub fn initial(quiver: ExchangeQuiver) -> Self {
        let n = quiver.n;
        Seed {
            quiver,
            cluster: (1..=n).map(|i| LaurentPoly::var(n, i)).collect(),
        }
    }

    /// Seed mutation at vertex `k` (0-based): the exchange relation
    /// x_k · x_k' = ∏_{b_ik > 0} x_i^{b_ik} + ∏_{b_ik < 0} x_i^{−b_ik},
    /// with the division performed exactly in the initial Laurent ring.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.quiver.n;
        assert!(k < n);
        let nvars = self.cluster[0].nvars();
        let mut pos = LaurentPoly::one(nvars);
        let mut neg = LaurentPoly::one(nvars);
        for i in 0..n {
            let e = self.quiver.b[i][k];
            if e > 0 {
                pos = pos.mul(&self.cluster[i].pow(e as u32));
            } else if e < 0 {
                neg = neg.mul(&self.cluster[i].pow((-e) as u32));
            }
        }
        let new_var = pos.add(&neg).div_exact(&self.cluster[k])?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new_var;
        Ok(Seed {
            quiver: self.quiver.mutate(k),
            cluster,
        })
    }

    fn cluster_key(&self) -> BTreeSet<LaurentPoly> {
        self.cluster.iter().cloned().collect()
    }
}

/// All seeds reachable from `seed` by mutation, each with one mutation path
/// from the start. Errors with `NotClosed` if more than `max_seeds` distinct
/// clusters appear.
pub fn enumerate_seeds(seed: &Seed, max_seeds: usize) -> Result<Vec<(Seed, Vec<usize>)>> {
    let mut out: Vec<(Seed, Vec<usize>)> = Vec::new();
    let mut seen: HashSet<BTreeSet<LaurentPoly>> = HashSet::new();
    let mut queue: VecDeque<(Seed, Vec<usize>)> = VecDeque::new();
    seen.insert(seed.cluster_key());
    queue.push_back((seed.clone(), Vec::new()));
    while let Some((s, path)) = queue.pop_front() {
        out.push((s.clone(), path.clone()));
        for k in 0..s.quiver.n {
            let next = s.mutate(k)?;
            if seen.insert(next.cluster_key()) {
                if seen.len() > max_seeds {
                    return Err(Error::NotClosed(format!(
                        "more than {max_seeds} clusters reached"
                    )));
                }
                let mut p = path.clone();
                p.push(k);
                queue.push_back((next, p));
            }
        }
    }
    Ok(out)
}

/// The set of all cluster variables of the cluster algebra of `quiver`,
/// as Laurent polynomials in the initial cluster. `max_seeds` bounds the
/// mutation closure (`NotClosed` on overflow).
pub fn enumerate_cluster_variables(
    quiver: &ExchangeQuiver,
    max_seeds: usize,
) -> Result<BTreeSet<LaurentPoly>> {
    let seeds = enumerate_seeds(&Seed::initial(quiver.clone()), max_seeds)?;
    let mut vars = BTreeSet::new();
    for (s, _) in seeds {
        vars.extend(s.cluster);
    }
    Ok(vars)
}

/// Expand `target` as an integer linear combination of monomials (with
/// nonnegative exponents, total degree ≤ `degree_bound`) in the given
/// Laurent polynomials. Returns the list of (exponent vector, coefficient)
/// pairs, or `NoExpansion`.
pub fn expand_in_cluster_monomials(
    target: &LaurentPoly,
    vars: &[LaurentPoly],
    degree_bound: usize,
) -> Result<Vec<(Vec<u32>, BigInt)>> {
    let nvars = target.nvars();
    for v in vars {
        assert_eq!(v.nvars(), nvars, "variable count mismatch");
    }
    // All monomials in `vars` of total degree ≤ bound.
    let mut monomials: Vec<(Vec<u32>, LaurentPoly)> =
        vec![(vec![0; vars.len()], LaurentPoly::one(nvars))];
    let mut frontier = monomials.clone();
    for _ in 0..degree_bound {
        let mut next = Vec::new();
        for (e, p) in &frontier {
            // Extend by the last incremented index to avoid duplicates.
            let start = e.iter().rposition(|&k| k > 0).unwrap_or(0);
            for (i, v) in vars.iter().enumerate().skip(start) {
                let mut e2 = e.clone();
                e2[i] += 1;
                next.push((e2, p.mul(v)));
            }
        }
        monomials.extend(next.iter().cloned());
        frontier = next;
    }
    // Coefficient-matching linear system over ℚ.
    let mut exps: BTreeMap<Vec<i32>, usize> = BTreeMap::new();
    for (e, _) in target.terms() {
        let l = exps.len();
        exps.entry(e.clone()).or_insert(l);
    }
    for (_, p) in &monomials {
        for (e, _) in p.terms() {
            let l = exps.len();
            exps.entry(e.clone()).or_insert(l);
        }
    }
    let rows = exps.len();
    let cols = monomials.len();
    let k = Rationals;
    let mut a = Mat::zero(&k, rows, cols);
    for (j, (_, p)) in monomials.iter().enumerate() {
        for (e, c) in p.terms() {
            *a.at_mut(exps[e], j) = BigRational::from_integer(c.clone());
        }
    }
    let mut rhs = vec![BigRational::zero(); rows];
    for (e, c) in target.terms() {
        rhs[exps[e]] = BigRational::from_integer(c.clone());
    }
    let sol = a
        .solve(&k, &rhs)
        .map_err(|_| Error::NoExpansion(format!("no expansion within degree {degree_bound}")))?;
    let mut out = Vec::new();
    for (j, c) in sol.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NoExpansion(format!(
                "solution has non-integer coefficient {c}"
            )));
        }
        out.push((monomials[j].0.clone(), c.to_integer()));
    }
    // Paranoia: re-multiply and compare.
    let mut check = LaurentPoly::zero(nvars);
    for (e, c) in &out {
        let mut m = LaurentPoly::constant(nvars, c.clone());
        for (i, &k2) in e.iter().enumerate() {
            m = m.mul(&vars[i].pow(k2));
        }
        check = check.add(&m);
    }
    if &check != target {
        return Err(Error::Internal("expansion re-check failed".into()));
    }
    Ok(out)
}
