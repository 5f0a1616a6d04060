//! Arc model of the type-A cluster category: objects are multisets of
//! diagonals of a convex N-gon (N = n + 3), Hom spaces to a suspension are
//! spanned by crossings, suspension rotates arcs, and cones are computed by
//! resolving crossings geometrically.
//!
//! The cluster-tilting object is the fan triangulation at vertex 1:
//! `T_i = (1, i + 2)`. Every other arc corresponds to an interval module
//! over the linear quiver `1 → 2 → ⋯ → n` via `(a, b) ↦ [a-2, b-4]`
//! (0-based interval); this dictionary drives the index and the functor F.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::repmod::{IntRep, IntervalRep, QuiverShape};

/// A diagonal of the N-gon, stored with `1 ≤ a < b ≤ N`, non-adjacent
/// endpoints (so neither `b = a + 1` nor `(a, b) = (1, N)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub a: usize,
    pub b: usize,
}

impl Arc {
    /// Normalize a vertex pair; returns `None` for boundary edges (which
    /// are zero objects) and panics on equal endpoints.
    pub fn reduce(big_n: usize, mut a: usize, mut b: usize) -> Option<Arc> {
        a = (a - 1) % big_n + 1;
        b = (b - 1) % big_n + 1;
        assert_ne!(a, b, "degenerate arc");
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        if b == a + 1 || (a == 1 && b == big_n) {
            None
        } else {
            Some(Arc { a, b })
        }
    }

    pub fn new(big_n: usize, a: usize, b: usize) -> Result<Arc> {
        Arc::reduce(big_n, a, b).ok_or_else(|| {
            Error::Hypothesis(format!("({a},{b}) is a boundary edge of the {big_n}-gon"))
        })
    }
}

/// An object of the arc model: a multiset of diagonals, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcObject {
    pub big_n: usize,
    pub arcs: Vec<Arc>,
}

impl ArcObject {
    pub fn new(big_n: usize, mut arcs: Vec<Arc>) -> ArcObject {
        arcs.sort();
        ArcObject { big_n, arcs }
    }

    pub fn zero(big_n: usize) -> ArcObject {
        ArcObject { big_n, arcs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn direct_sum(&self, other: &ArcObject) -> ArcObject {
        assert_eq!(self.big_n, other.big_n);
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().copied());
        ArcObject::new(self.big_n, arcs)
    }

    /// Compact display form: the arcs as vertex pairs, `0` for the zero
    /// object.
    pub fn render(&self) -> String {
        if self.arcs.is_empty() {
            "0".to_string()
        } else {
            self.arcs.iter().map(|a| format!("({},{})", a.a, a.b)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn single(big_n: usize, arc: Arc) -> ArcObject {
        ArcObject { big_n, arcs: vec![arc] }
    }
}

/// The type-A_n cluster category in its polygon incarnation, with the fan
/// triangulation at vertex 1 as cluster-tilting object.
#[derive(Clone, Debug)]
pub struct ArcCategory {
    /// Rank (number of cluster variables).
    pub n: usize,
    /// Polygon size, `n + 3`.
    pub big_n: usize,
    /// Shape of the quiver carrying F-images: the linear quiver on n vertices.
    pub shape: QuiverShape,
}

impl ArcCategory {
    pub fn type_a(n: usize) -> ArcCategory {
        assert!(n >= 1, "rank must be positive");
        ArcCategory { n, big_n: n + 3, shape: QuiverShape::linear_a(n) }
    }

    /// All diagonals of the polygon, sorted.
    pub fn all_arcs(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        for a in 1..=self.big_n {
            for b in a + 2..=self.big_n {
                if let Some(arc) = Arc::reduce(self.big_n, a, b) {
                    if arc == (Arc { a, b }) {
                        out.push(arc);
                    }
                }
            }
        }
        out
    }

    /// The i-th summand of the cluster-tilting object, `1 ≤ i ≤ n`.
    pub fn t_arc(&self, i: usize) -> Arc {
        assert!((1..=self.n).contains(&i));
        Arc { a: 1, b: i + 2 }
    }

    pub fn t_object(&self) -> ArcObject {
        ArcObject::new(self.big_n, (1..=self.n).map(|i| self.t_arc(i)).collect())
    }

    pub fn is_t_summand(&self, arc: Arc) -> bool {
        arc.a == 1
    }

    /// Whether two diagonals cross in the interior.
    pub fn crossing(&self, x: Arc, y: Arc) -> bool {
        let inside = |v: usize, lo: usize, hi: usize| lo < v && v < hi;
        // x = (a,b) with a < b; y crosses x iff they share no endpoint and
        // exactly one endpoint of y lies strictly between a and b.
        x.a != y.a
            && x.a != y.b
            && x.b != y.a
            && x.b != y.b
            && (inside(y.a, x.a, x.b) != inside(y.b, x.a, x.b))
    }

    /// Rotate an arc by `k` steps (k may be negative): the suspension is
    /// rotation by +1.
    pub fn rotate_arc(&self, x: Arc, k: i64) -> Arc {
        let m = self.big_n as i64;
        let sh = |v: usize| -> usize {
            let r = ((v as i64 - 1 + k) % m + m) % m;
            r as usize + 1
        };
        Arc::reduce(self.big_n, sh(x.a), sh(x.b)).expect("rotation preserves non-adjacency")
    }

    pub fn suspend_arc(&self, x: Arc) -> Arc {
        self.rotate_arc(x, 1)
    }

    pub fn suspend(&self, x: &ArcObject) -> ArcObject {
        ArcObject::new(self.big_n, x.arcs.iter().map(|&a| self.suspend_arc(a)).collect())
    }

    /// dim Hom(X, ΣY) = number of crossing instance pairs.
    pub fn hom_to_shift_dim(&self, x: &ArcObject, y: &ArcObject) -> usize {
        self.crossing_pairs(x, y).len()
    }

    /// dim Hom(X, Y) between plain objects (= crossings of X with Σ⁻¹Y).
    pub fn hom_dim(&self, x: &ArcObject, y: &ArcObject) -> usize {
        let y_desuspended =
            ArcObject::new(self.big_n, y.arcs.iter().map(|&a| self.rotate_arc(a, -1)).collect());
        self.hom_to_shift_dim(x, &y_desuspended)
    }

    /// Canonical coordinates of Hom(L, ΣM): the crossing instance pairs
    /// `(i, j)` (index into `l.arcs`, `m.arcs`), in lexicographic order.
    pub fn crossing_pairs(&self, l: &ArcObject, m: &ArcObject) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &la) in l.arcs.iter().enumerate() {
            for (j, &ma) in m.arcs.iter().enumerate() {
                if self.crossing(la, ma) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cone of a morphism `ε: L → ΣM` supported (with any nonzero scalars)
    /// exactly on the given crossing pairs: the triangle `M → Y' → L → ΣM`
    /// has `Y'` obtained by resolving the selected crossings of the chord
    /// diagram of L and M. Valid whenever the support pattern is a forest
    /// on instances, where all scalar choices are equivalent.
    pub fn cone_of_support(
        &self,
        l: &ArcObject,
        m: &ArcObject,
        support: &[(usize, usize)],
    ) -> ArcObject {
        resolve_crossings(self, l, m, support)
    }

    /// Index of an arc in K₀(add T), as an integer vector over T_1..T_n
    /// (0-based positions).
    pub fn index_arc(&self, x: Arc) -> Vec<i64> {
        let mut idx = vec![0i64; self.n];
        if x.a == 1 {
            idx[x.b - 3] = 1;
        } else {
            // interval module [lo, hi] (0-based): lo = a-2, hi = b-4.
            let (lo, hi) = (x.a - 2, x.b - 4);
            if lo >= 1 {
                idx[lo - 1] += 1;
            }
            idx[hi + 1 - 1] -= 1;
        }
        idx
    }

    pub fn index(&self, x: &ArcObject) -> Vec<i64> {
        let mut idx = vec![0i64; self.n];
        for &arc in &x.arcs {
            for (t, v) in idx.iter_mut().zip(self.index_arc(arc)) {
                *t += v;
            }
        }
        idx
    }

    /// The interval module (0-based) of a non-T arc, `None` for summands
    /// of T (whose F-image vanishes).
    pub fn arc_interval(&self, x: Arc) -> Option<IntervalRep> {
        (x.a >= 2).then(|| IntervalRep { lo: x.a - 2, hi: x.b - 4 })
    }

    /// FX = Hom(T, ΣX) as a representation of the linear quiver.
    pub fn f_rep(&self, x: &ArcObject) -> IntRep {
        let mut rep = IntRep::zero(&self.shape);
        for &arc in &x.arcs {
            if let Some(iv) = self.arc_interval(arc) {
                rep = rep.direct_sum(&iv.to_rep(&self.shape));
            }
        }
        rep
    }

    /// The arc realizing a given interval module (inverse of `arc_interval`).
    pub fn interval_arc(&self, iv: IntervalRep) -> Arc {
        Arc { a: iv.lo + 2, b: iv.hi + 4 }
    }

    /// Coordinate set of the morphisms L → ΣM factoring through add T:
    /// the subspace is spanned by the crossing-pair coordinates through
    /// which some T_k passes as a nonzero composite.
    pub fn factor_ideal_pairs(&self, l: &ArcObject, m: &ArcObject) -> Vec<(usize, usize)> {
        // The quotient by the factoring ideal is equivalent to the module
        // category over End(T), via X ↦ FX = Hom(T, ΣX). A crossing
        // morphism f: L → ΣM between indecomposables therefore factors
        // through add T exactly when its image Ff: FL → F(ΣM) vanishes,
        // and between interval modules the nonvanishing of the canonical
        // morphism is a containment condition on the intervals.
        self.crossing_pairs(l, m)
            .into_iter()
            .filter(|&(i, j)| {
                let fl = self.arc_interval(l.arcs[i]);
                let fsm = self.arc_interval(self.suspend_arc(m.arcs[j]));
                match (fl, fsm) {
                    (Some(s), Some(t)) => !interval_hom_nonzero(s, t),
                    // Either end has zero image in the module category, so
                    // the induced morphism vanishes.
                    _ => true,
                }
            })
            .collect()
    }
}

/// Hom([s,t], [u,v]) ≠ 0 for interval modules over the linear quiver
/// 1 → 2 → … → n: the canonical morphism exists iff u ≤ s ≤ v ≤ t (the
/// image is the interval [s, v]).
fn interval_hom_nonzero(x: IntervalRep, y: IntervalRep) -> bool {
    y.lo <= x.lo && x.lo <= y.hi && y.hi <= x.hi
}

type Q = Ratio<i64>;

/// Parameter t ∈ (0,1) of the intersection of chord p1→p2 with chord q1→q2,
/// measured along p1→p2.
fn crossing_param(p1: (Q, Q), p2: (Q, Q), q1: (Q, Q), q2: (Q, Q)) -> Q {
    let cross = |u: (Q, Q), v: (Q, Q)| u.0 * v.1 - u.1 * v.0;
    let d = (p2.0 - p1.0, p2.1 - p1.1);
    let e = (q2.0 - q1.0, q2.1 - q1.1);
    let w = (q1.0 - p1.0, q1.1 - p1.1);
    cross(w, e) / cross(d, e)
}

/// A terminal of a chord segment: either a polygon endpoint of a chord or
/// one of the four sides of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Terminal {
    /// (chord id, which endpoint: 0 = start vertex, 1 = end vertex)
    End(usize, u8),
    /// (crossing id, side): side is the polygon vertex toward which this
    /// port points along its chord.
    Port(usize, usize),
}

fn resolve_crossings(
    cat: &ArcCategory,
    l: &ArcObject,
    m: &ArcObject,
    support: &[(usize, usize)],
) -> ArcObject {
    // Chords: L instances first, then M instances.
    let chords: Vec<Arc> = l.arcs.iter().chain(m.arcs.iter()).copied().collect();
    let n_l = l.arcs.len();

    // Repeated summands coincide as straight chords; shrink each chord
    // instance toward its interior by a distinct small amount so copies of
    // one arc become nested (hence non-crossing) parallel strands, while
    // every crossing of distinct arcs persists (vertex labels differ by at
    // least 1, the shifts by less than 1/4).
    let eps = Q::new(1, 4 * (chords.len() as i64 + 1));
    let endpoints = |cid: usize| -> ((Q, Q), (Q, Q)) {
        let c = chords[cid];
        let shift = eps * Q::from_integer(cid as i64);
        let xa = Q::from_integer(c.a as i64) + shift;
        let xb = Q::from_integer(c.b as i64) - shift;
        ((xa, xa * xa), (xb, xb * xb))
    };

    // Crossings: id → (l chord id, m chord id, param on l, param on m).
    struct Crossing {
        lc: usize,
        mc: usize,
        tl: Q,
        tm: Q,
    }
    let crossings: Vec<Crossing> = support
        .iter()
        .map(|&(i, j)| {
            let la = l.arcs[i];
            let ma = m.arcs[j];
            assert!(cat.crossing(la, ma), "support pair must be a crossing");
            let (p1, p2) = endpoints(i);
            let (q1, q2) = endpoints(n_l + j);
            Crossing {
                lc: i,
                mc: n_l + j,
                tl: crossing_param(p1, p2, q1, q2),
                tm: crossing_param(q1, q2, p1, p2),
            }
        })
        .collect();

    // Per chord: crossings ordered along it from its `a` endpoint.
    let mut on_chord: Vec<Vec<(Q, usize)>> = vec![Vec::new(); chords.len()];
    for (cid, c) in crossings.iter().enumerate() {
        on_chord[c.lc].push((c.tl, cid));
        on_chord[c.mc].push((c.tm, cid));
    }
    for list in &mut on_chord {
        list.sort();
        for w in list.windows(2) {
            // Vertices on a parabola keep distinct crossings at distinct
            // points; coincident parameters would make the order ambiguous.
            assert_ne!(w[0].0, w[1].0, "concurrent crossings on one chord");
        }
    }

    // Segment edges: consecutive terminals along each chord.
    let mut link: std::collections::HashMap<Terminal, Terminal> = std::collections::HashMap::new();
    let connect = |a: Terminal, b: Terminal, link: &mut std::collections::HashMap<_, _>| {
        assert!(link.insert(a, b).is_none(), "terminal reused");
        assert!(link.insert(b, a).is_none(), "terminal reused");
    };
    for (cid, chord) in chords.iter().enumerate() {
        // Walking from the `a` endpoint: each crossing is entered through
        // its port facing `a` and left through its port facing `b`.
        let mut prev = Terminal::End(cid, 0);
        for &(_, x) in &on_chord[cid] {
            connect(prev, Terminal::Port(x, chord.a), &mut link);
            prev = Terminal::Port(x, chord.b);
        }
        connect(prev, Terminal::End(cid, 1), &mut link);
    }

    // Matching edges at each crossing: with l = (l1, l2) and the m endpoint
    // m1 strictly between l1 and l2 (and m2 the other), a morphism L → ΣM
    // resolves the crossing into the pairs (l1, m2) and (m1, l2): the port
    // of l facing l1 joins the port of m facing m2, and the port of m
    // facing m1 joins the port of l facing l2.
    let mut mate: std::collections::HashMap<Terminal, Terminal> = std::collections::HashMap::new();
    for (xid, c) in crossings.iter().enumerate() {
        let la = chords[c.lc];
        let ma = chords[c.mc];
        let (m1, m2) = if la.a < ma.a && ma.a < la.b {
            (ma.a, ma.b)
        } else {
            (ma.b, ma.a)
        };
        let (l1, l2) = (la.a, la.b);
        mate.insert(Terminal::Port(xid, l1), Terminal::Port(xid, m2));
        mate.insert(Terminal::Port(xid, m2), Terminal::Port(xid, l1));
        mate.insert(Terminal::Port(xid, m1), Terminal::Port(xid, l2));
        mate.insert(Terminal::Port(xid, l2), Terminal::Port(xid, m1));
    }

    // Walk strands from each unvisited chord endpoint.
    let mut seen: std::collections::HashSet<Terminal> = std::collections::HashSet::new();
    let mut out_arcs = Vec::new();
    for (cid, chord) in chords.iter().enumerate() {
        for (which, vstart) in [(0u8, chord.a), (1u8, chord.b)] {
            let start = Terminal::End(cid, which);
            if seen.contains(&start) {
                continue;
            }
            seen.insert(start);
            let mut cur = start;
            let vend;
            loop {
                let next = link[&cur];
                seen.insert(next);
                match next {
                    Terminal::End(c2, w2) => {
                        vend = if w2 == 0 { chords[c2].a } else { chords[c2].b };
                        break;
                    }
                    Terminal::Port(..) => {
                        let jump = mate[&next];
                        seen.insert(jump);
                        cur = jump;
                    }
                }
            }
            if let Some(arc) = Arc::reduce(cat.big_n, vstart, vend) {
                out_arcs.push(arc);
            }
        }
    }
    ArcObject::new(cat.big_n, out_arcs)
}
