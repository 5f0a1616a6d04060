//! Specialization of the last initial variable to 1, the reduced category
//! obtained by cutting the polygon along the last summand of T, and the
//! recursion expressing every specialized character over the reduced
//! category, with a replayable certificate.

use num_bigint::BigInt;
use num_traits::One;

use crate::cccharacter::CharacterContext;
use crate::clustercat::{Arc, ArcCategory, ArcObject};
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::multverify::{complement_set_r, coordinate_basis, stratify};
use crate::quiver::{enumerate_cluster_variables, expand_in_cluster_monomials, ExchangeQuiver};

/// Substitute 1 for the variable `i` (1-based) and drop it, returning a
/// Laurent polynomial in one fewer variable.
pub fn specialize_at_one(p: &LaurentPoly, i: usize) -> LaurentPoly {
    let set = p.specialize(i, &BigInt::one()).expect("substituting 1 is exact");
    let mut out = LaurentPoly::zero(p.nvars() - 1);
    for (e, c) in set.terms() {
        let mut e2 = e.clone();
        e2.remove(i - 1);
        out = out.add(&LaurentPoly::monomial(p.nvars() - 1, &e2, c.clone()));
    }
    out
}

/// The parent category together with its reduction at the last summand of
/// T: cutting the polygon along that arc leaves a polygon with one fewer
/// vertex, and the diagonals avoiding the cut arc survive the projection.
pub struct ReductionContext {
    pub parent: CharacterContext,
    pub reduced: CharacterContext,
    /// The cut arc (the last summand of T).
    pub cut: Arc,
}

impl ReductionContext {
    /// Reduce at the last summand of T. Only that summand is supported:
    /// the fan dictionary pins the cut arc to one side of the polygon.
    pub fn new(n: usize) -> Result<ReductionContext> {
        if n < 2 {
            return Err(Error::Hypothesis("reduction needs at least two summands".into()));
        }
        let parent = CharacterContext::new(ArcCategory::type_a(n))?;
        let reduced = CharacterContext::new(ArcCategory::type_a(n - 1))?;
        let cut = parent.cat.t_arc(n);
        Ok(ReductionContext { parent, reduced, cut })
    }

    /// Number of crossings of X with the cut arc: the induction measure
    /// dim Hom(T_n, ΣX).
    pub fn measure(&self, x: &ArcObject) -> usize {
        let t = ArcObject::single(self.parent.cat.big_n, self.cut);
        self.parent.cat.crossing_pairs(&t, x).len()
    }

    /// Projection of an object with no crossings with the cut arc: copies
    /// of the cut arc are dropped, every other arc lies in the cut-off
    /// polygon and keeps its vertex labels.
    pub fn project(&self, x: &ArcObject) -> Result<ArcObject> {
        if self.measure(x) != 0 {
            return Err(Error::Hypothesis("object crosses the cut arc".into()));
        }
        let keep: Vec<Arc> = x.arcs.iter().copied().filter(|&a| a != self.cut).collect();
        for a in &keep {
            if a.b >= self.parent.cat.big_n {
                return Err(Error::Internal(
                    "arc avoiding the cut arc must live in the cut-off polygon".into(),
                ));
            }
        }
        Ok(ArcObject::new(self.reduced.cat.big_n, keep))
    }
}

/// Replayable record of the specialization recursion: a leaf holds an
/// object not crossing the cut arc with its projection; a step holds the
/// chosen triangle X → E → T_n → ΣX and the complement strata with their
/// Euler characteristics.
pub enum CertificateNode {
    Leaf {
        object: ArcObject,
        image: ArcObject,
        /// Character of the image in the reduced category.
        value: LaurentPoly,
    },
    Step {
        object: ArcObject,
        /// The crossing pair of (T_n, X) supporting the chosen connecting
        /// morphism ξ.
        xi_pair: (usize, usize),
        /// Subtree for E in the triangle X → E → T_n → ΣX.
        cone: Box<CertificateNode>,
        /// Subtrees for the complement-set objects Y with their χ.
        complement: Vec<(BigInt, CertificateNode)>,
    },
}

impl CertificateNode {
    /// Recompute the certified value bottom-up.
    pub fn replay(&self) -> LaurentPoly {
        match self {
            CertificateNode::Leaf { value, .. } => value.clone(),
            CertificateNode::Step { cone, complement, .. } => {
                let mut v = cone.replay();
                for (chi, child) in complement {
                    v = v.add(&child.replay().scale(chi));
                }
                v
            }
        }
    }

    /// Render as an indented tree, one step per line.
    pub fn render(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        match self {
            CertificateNode::Leaf { object, image, .. } => {
                out.push_str(&format!(
                    "{pad}leaf {} -> {}\n",
                    object.render(),
                    image.render()
                ));
            }
            CertificateNode::Step { object, xi_pair, cone, complement } => {
                out.push_str(&format!(
                    "{pad}step {} xi=({},{})\n",
                    object.render(),
                    xi_pair.0,
                    xi_pair.1
                ));
                cone.render(out, indent + 1);
                for (chi, child) in complement {
                    out.push_str(&format!("{pad}  coeff {chi}\n"));
                    child.render(out, indent + 1);
                }
            }
        }
    }
}

/// σ(CC(X)) as a character combination over the reduced category, with a
/// certificate. The result is asserted equal to substituting 1 for the
/// last variable in CC(X).
pub fn specialize_cc(
    rc: &ReductionContext,
    x: &ArcObject,
) -> Result<(LaurentPoly, CertificateNode)> {
    let cert = specialize_node(rc, x, rc.measure(x), 0)?;
    let value = cert.replay();
    let direct = specialize_at_one(&rc.parent.cc(x)?, rc.parent.cat.n);
    if value != direct {
        return Err(Error::Internal(format!(
            "certificate value {} differs from direct specialization {}",
            value.render(),
            direct.render()
        )));
    }
    Ok((value, cert))
}

fn specialize_node(
    rc: &ReductionContext,
    x: &ArcObject,
    measure: usize,
    depth: usize,
) -> Result<CertificateNode> {
    if depth > 64 {
        return Err(Error::Internal("specialization recursion too deep".into()));
    }
    let cat = &rc.parent.cat;
    if measure == 0 {
        let image = rc.project(x)?;
        let value = rc.reduced.cc(&image)?;
        return Ok(CertificateNode::Leaf { object: x.clone(), image, value });
    }
    let t = ArcObject::single(cat.big_n, rc.cut);
    let pairs = cat.crossing_pairs(&t, x);
    // Deterministic choice: the connecting morphism ξ is the first basis
    // vector of Hom(T_n, ΣX).
    let xi_pair = pairs[0];
    let xi_pos = [0usize];
    let basis = coordinate_basis(pairs.len(), &xi_pos);

    // Multiplication identity for V = span(ξ): the V-side stratum is the
    // single cone E of the triangle X → E → T_n → ΣX, the complement side
    // runs over cones of morphisms X → ΣT_n.
    let strata_v = stratify(&rc.parent, &t, x, &basis)?;
    if strata_v.len() != 1 || !strata_v[0].chi.is_one() {
        return Err(Error::Internal("span of ξ must be a single point".into()));
    }
    let e = strata_v[0].representative.clone();
    let me = rc.measure(&e);
    if me >= measure {
        return Err(Error::Internal("induction measure did not decrease at the cone".into()));
    }
    let cone = Box::new(specialize_node(rc, &e, me, depth + 1)?);

    let mut complement = Vec::new();
    for s in complement_set_r(&rc.parent, &t, x, &basis)? {
        let my = rc.measure(&s.representative);
        if my >= measure {
            return Err(Error::Internal(
                "induction measure did not decrease on the complement side".into(),
            ));
        }
        let child = specialize_node(rc, &s.representative, my, depth + 1)?;
        complement.push((s.chi, child));
    }
    Ok(CertificateNode::Step { object: x.clone(), xi_pair, cone, complement })
}

/// Report of the closure check σ(𝒜) = 𝒜′ on cluster variables.
pub struct ClosureReport {
    /// One entry per parent cluster variable: the variable, its
    /// specialization, and the expansion over reduced cluster variables.
    pub expansions: Vec<(LaurentPoly, LaurentPoly, Vec<(Vec<u32>, BigInt)>)>,
    /// Reduced cluster variables hit by specialized parent variables.
    pub surjective: bool,
    pub pass: bool,
}

/// Check both inclusions of σ(𝒜) = 𝒜′ on generators: every specialized
/// parent cluster variable expands integrally over the reduced cluster
/// variables, and every reduced cluster variable is the specialization of
/// a parent one.
pub fn check_specialization_closure(n: usize) -> Result<ClosureReport> {
    if n < 2 {
        return Err(Error::Hypothesis("closure check needs at least two vertices".into()));
    }
    let parent_vars = enumerate_cluster_variables(&ExchangeQuiver::type_a(n), 10_000)?;
    let reduced_vars: Vec<LaurentPoly> =
        enumerate_cluster_variables(&ExchangeQuiver::type_a(n - 1), 10_000)?
            .into_iter()
            .collect();
    let mut expansions = Vec::new();
    let mut hit = vec![false; reduced_vars.len()];
    let mut pass = true;
    for v in parent_vars {
        let s = specialize_at_one(&v, n);
        if let Some(k) = reduced_vars.iter().position(|w| *w == s) {
            hit[k] = true;
        }
        match expand_in_cluster_monomials(&s, &reduced_vars, 2) {
            Ok(expansion) => expansions.push((v, s, expansion)),
            Err(_) => {
                pass = false;
                expansions.push((v, s, Vec::new()));
            }
        }
    }
    let surjective = hit.iter().all(|&h| h);
    let pass = pass && surjective;
    Ok(ClosureReport { expansions, surjective, pass })
}
