//! Quiver shapes (vertex/arrow data) and their path algebras.

use crate::error::{Error, Result};

/// An acyclic quiver: `n` vertices (0-based) and a list of arrows `s → t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverShape {
    pub n: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl QuiverShape {
    pub fn new(n: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            if s >= n || t >= n {
                return Err(Error::Parse(format!("arrow ({s},{t}) out of range")));
            }
            if s == t {
                return Err(Error::Hypothesis("quiver has a loop".into()));
            }
        }
        let shape = QuiverShape { n, arrows };
        shape.topological_order()?;
        Ok(shape)
    }

    /// The linearly oriented type-A quiver 0→1→…→(n−1).
    pub fn linear_a(n: usize) -> Self {
        QuiverShape {
            n,
            arrows: (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Vertices in an order where every arrow goes forward.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: Vec<usize> = (0..self.n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push(t);
                    }
                }
            }
        }
        if order.len() != self.n {
            return Err(Error::Hypothesis("quiver has an oriented cycle".into()));
        }
        Ok(order)
    }

    /// Euler form ⟨d, e⟩ = Σ_i d_i e_i − Σ_{a: s→t} d_s e_t.
    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> i64 {
        let mut acc: i64 = d.iter().zip(e).map(|(&a, &b)| (a * b) as i64).sum();
        for &(s, t) in &self.arrows {
            acc -= (d[s] * e[t]) as i64;
        }
        acc
    }

    /// True if the underlying graph is a type-A line (any orientation),
    /// with vertices in line order 0,1,…,n−1.
    pub fn is_type_a_line(&self) -> bool {
        if self.arrows.len() != self.n.saturating_sub(1) {
            return false;
        }
        let mut seen = vec![false; self.n.saturating_sub(1)];
        for &(s, t) in &self.arrows {
            let (lo, hi) = (s.min(t), s.max(t));
            if hi != lo + 1 || seen[lo] {
                return false;
            }
            seen[lo] = true;
        }
        true
    }
}

/// A path in a quiver, stored as the arrow index sequence (may be empty:
/// the lazy path at a vertex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub from: usize,
    pub to: usize,
    pub arrows: Vec<usize>,
}

/// The path algebra of an acyclic quiver: an explicit enumeration of all
/// paths, used to build projectives/injectives and transport maps under the
/// Nakayama correspondence.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub shape: QuiverShape,
    pub paths: Vec<Path>,
}

impl PathAlgebra {
    pub fn new(shape: &QuiverShape) -> Result<Self> {
        let order = shape.topological_order()?;
        let mut paths: Vec<Path> = (0..shape.n)
            .map(|v| Path {
                from: v,
                to: v,
                arrows: vec![],
            })
            .collect();
        // Extend paths in topological order of their endpoints.
        let mut pos = vec![0usize; shape.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut frontier = paths.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (ai, &(s, t)) in shape.arrows.iter().enumerate() {
                    if s == p.to {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            from: p.from,
                            to: t,
                            arrows,
                        });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let _ = pos;
        Ok(PathAlgebra {
            shape: shape.clone(),
            paths,
        })
    }

    /// Indices (into `self.paths`) of all paths from `i` to `j`.
    pub fn paths_between(&self, i: usize, j: usize) -> Vec<usize> {
        self.paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.from == i && p.to == j)
            .map(|(k, _)| k)
            .collect()
    }
}
