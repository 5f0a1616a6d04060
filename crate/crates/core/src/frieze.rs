//! Friezes: ring morphisms from a finite-type cluster algebra to ℤ taking
//! positive values on every cluster variable. Validation, enumeration via
//! triangulations (seed transport), and lifting along the specialization of
//! one initial variable to 1.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::quiver::{enumerate_cluster_variables, enumerate_seeds, ExchangeQuiver, Seed};
use crate::specialize::{specialize_at_one, ReductionContext};

/// A frieze on the cluster algebra of an exchange quiver, stored by its
/// initial values; every cluster variable evaluates to a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frieze {
    pub quiver: ExchangeQuiver,
    pub values: Vec<BigInt>,
    /// All cluster-variable values, for display and cross-checks.
    pub variable_values: Vec<BigInt>,
}

impl Frieze {
    /// Evaluate a Laurent polynomial in the initial cluster at the frieze's
    /// initial values, requiring an integer outcome.
    pub fn eval(&self, p: &LaurentPoly) -> Result<BigInt> {
        eval_positive_integer(p, &self.values, false)
    }
}

fn eval_positive_integer(p: &LaurentPoly, values: &[BigInt], positive: bool) -> Result<BigInt> {
    let rats: Vec<BigRational> =
        values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    let v = p.eval(&rats);
    if !v.is_integer() {
        return Err(Error::NotAFrieze(format!(
            "{} evaluates to the non-integer {}",
            p.render(),
            v
        )));
    }
    let v = v.to_integer();
    if positive && !v.is_positive() {
        return Err(Error::NotAFrieze(format!(
            "{} evaluates to the non-positive {}",
            p.render(),
            v
        )));
    }
    Ok(v)
}

/// Validate initial values as a frieze: every cluster variable must take a
/// positive integer value.
pub fn make_frieze(quiver: &ExchangeQuiver, values: &[BigInt]) -> Result<Frieze> {
    let n = quiver.n;
    if values.len() != n {
        return Err(Error::Hypothesis("one initial value per vertex required".into()));
    }
    if values.iter().any(|v| !v.is_positive()) {
        return Err(Error::NotAFrieze("initial values must be positive".into()));
    }
    let vars = enumerate_cluster_variables(quiver, 10_000)?;
    let mut variable_values = Vec::new();
    for v in &vars {
        variable_values.push(eval_positive_integer(v, values, true)?);
    }
    Ok(Frieze { quiver: quiver.clone(), values: values.to_vec(), variable_values })
}

/// All friezes of the quiver, one per seed (triangulation): assigning 1 to
/// every variable of a seed's cluster determines the frieze, and transport
/// back along the mutation path yields its initial values.
pub fn enumerate_friezes(quiver: &ExchangeQuiver) -> Result<Vec<Frieze>> {
    let seeds = enumerate_seeds(&Seed::initial(quiver.clone()), 10_000)?;
    let mut initials: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for (_, path) in &seeds {
        // Evaluate the initial cluster variables at the far seed's
        // all-ones assignment by replaying exchange arithmetic backwards:
        // walk the path from the far seed, maintaining the value of each
        // current cluster variable.
        let mut quivers = vec![quiver.clone()];
        for &k in path {
            quivers.push(quivers.last().unwrap().mutate(k));
        }
        let n = quiver.n;
        let mut vals: Vec<BigRational> = vec![BigRational::one(); n];
        for (step, &k) in path.iter().enumerate().rev() {
            // Undo mutation at k performed on the quiver `quivers[step]`:
            // the exchange relation v_k · v_k' = ∏ v^{[b_ik]+} + ∏ v^{[-b_ik]+}
            // reads the exchange matrix of the seed before the mutation.
            let b = &quivers[step].b;
            let mut plus = BigRational::one();
            let mut minus = BigRational::one();
            for i in 0..n {
                let e = b[i][k];
                if e > 0 {
                    plus *= pow_rat(&vals[i], e as u32);
                } else if e < 0 {
                    minus *= pow_rat(&vals[i], (-e) as u32);
                }
            }
            vals[k] = (plus + minus) / &vals[k];
        }
        if vals.iter().all(|v| v.is_integer()) {
            initials.insert(vals.into_iter().map(|v| v.to_integer()).collect());
        }
    }
    let mut out = Vec::new();
    for values in initials {
        // Transport can only produce genuine friezes, but validate anyway.
        out.push(make_frieze(quiver, &values)?);
    }
    Ok(out)
}

fn pow_rat(v: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= v;
    }
    out
}

/// Exhaustive search over bounded initial values; a completeness oracle for
/// `enumerate_friezes` on small types.
pub fn search_friezes_bounded(quiver: &ExchangeQuiver, bound: u64) -> Result<Vec<Frieze>> {
    let n = quiver.n;
    let mut out = Vec::new();
    let mut values = vec![BigInt::one(); n];
    search_rec(quiver, bound, 0, &mut values, &mut out)?;
    Ok(out)
}

fn search_rec(
    quiver: &ExchangeQuiver,
    bound: u64,
    pos: usize,
    values: &mut Vec<BigInt>,
    out: &mut Vec<Frieze>,
) -> Result<()> {
    if pos == values.len() {
        if let Ok(f) = make_frieze(quiver, values) {
            out.push(f);
        }
        return Ok(());
    }
    for v in 1..=bound {
        values[pos] = BigInt::from(v);
        search_rec(quiver, bound, pos + 1, values, out)?;
    }
    values[pos] = BigInt::one();
    Ok(())
}

/// Lift a frieze along the specialization of the last initial variable to
/// 1: the lift keeps the given values on the other vertices, takes 1 at the
/// last, and satisfies f(v) = f′(σ(v)) on every cluster variable. The lift
/// is validated and checked unique among initial-value vectors compatible
/// with f′∘σ.
pub fn lift_frieze(rc: &ReductionContext, f_prime: &Frieze) -> Result<Frieze> {
    let n = rc.parent.cat.n;
    if f_prime.quiver.n != n - 1 {
        return Err(Error::Hypothesis("frieze rank must match the reduced quiver".into()));
    }
    let mut values = f_prime.values.clone();
    values.push(BigInt::one());
    let quiver = ExchangeQuiver::type_a(n);
    let lifted = make_frieze(&quiver, &values)?;
    // Composition identity on every cluster variable.
    for v in enumerate_cluster_variables(&quiver, 10_000)? {
        let through = f_prime.eval(&specialize_at_one(&v, n))?;
        let direct = lifted.eval(&v)?;
        if through != direct {
            return Err(Error::Internal(format!(
                "lift disagrees with composition on {}",
                v.render()
            )));
        }
    }
    // Uniqueness: f(x_j) = f′(σ(x_j)) pins every initial value, since
    // σ(x_j) = x_j for j < n and σ(x_n) = 1.
    for j in 0..n - 1 {
        if lifted.values[j] != f_prime.values[j] {
            return Err(Error::Internal("lift must restrict to the given frieze".into()));
        }
    }
    if lifted.values[n - 1] != BigInt::one() {
        return Err(Error::Internal("lift must take 1 at the removed vertex".into()));
    }
    Ok(lifted)
}
