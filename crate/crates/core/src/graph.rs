//! Finite simple graphs and the monomial ideals attached to them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A simple graph on vertices `0..n`. Edges are stored as `(i, j)` with
/// `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Duplicate edges collapse; loops and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {}", a + 1)));
            }
            if let Some(&bad) = [a, b].iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SimpleGraph { n, edges: set })
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid")
    }

    /// The graph whose edges are the supports of a squarefree quadratic
    /// ideal's generators.
    pub fn from_quadratic_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let mut edges = Vec::new();
        for g in ideal.gens() {
            if g.degree() != 2 || !g.is_squarefree() {
                return Err(Error::domain(format!(
                    "expected squarefree quadratic generators, found {g}"
                )));
            }
            let vs: Vec<usize> = g.support().collect();
            edges.push((vs[0], vs[1]));
        }
        Self::new(ideal.n(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.edges.iter().all(|&(a, b)| a != v && b != v)
    }

    /// Deletes `v` and relabels the vertices above it down by one.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)));
        SimpleGraph::new(self.n - 1, edges).expect("valid")
    }

    /// Connectivity of the vertex set restricted to `alive`.
    fn connected_on(&self, alive: &[bool]) -> bool {
        let Some(start) = alive.iter().position(|&a| a) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if alive[u] && !seen[u] && self.has_edge(u, v) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        (0..self.n).all(|u| !alive[u] || seen[u])
    }

    pub fn is_connected(&self) -> bool {
        self.connected_on(&vec![true; self.n])
    }

    /// Removal sequence keeping every intermediate graph connected: each step
    /// deletes the largest-labeled vertex whose removal leaves the rest
    /// connected.
    pub fn peel_order(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::domain("a disconnected graph has no peel order"));
        }
        let mut alive = vec![true; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let mut pick = None;
            for v in (0..self.n).rev().filter(|&v| alive[v]) {
                let mut rest = alive.clone();
                rest[v] = false;
                if self.connected_on(&rest) {
                    pick = Some(v);
                    break;
                }
            }
            let v = pick.expect("a connected graph has a non-cut vertex");
            alive[v] = false;
            order.push(v);
        }
        Ok(order)
    }

    /// Every labeled graph on `n` vertices, indexed by edge subsets of the
    /// pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn all_labeled(n: usize) -> impl Iterator<Item = SimpleGraph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        assert!(pairs.len() < 32, "too many vertices to enumerate");
        (0u32..1 << pairs.len()).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            SimpleGraph::new(n, edges).expect("valid")
        })
    }
}

/// `(x_i x_j : {i, j} ∈ E(G))`; the zero ideal for an edgeless graph.
pub fn edge_ideal(g: &SimpleGraph) -> MonomialIdeal {
    MonomialIdeal::new(
        g.n,
        g.edges().map(|(a, b)| Monomial::squarefree(g.n, [a, b])),
    )
    .expect("same ring")
}

/// `(x_[n] / (x_i x_j) : {i, j} ∈ E(G))`, generated in degree `n - 2`.
pub fn complementary_edge_ideal(g: &SimpleGraph) -> Result<MonomialIdeal> {
    if g.n < 2 {
        return Err(Error::domain("complementary edge ideals need at least two vertices"));
    }
    Ok(MonomialIdeal::new(
        g.n,
        g.edges().map(|(a, b)| {
            Monomial::squarefree(g.n, (0..g.n).filter(|&v| v != a && v != b))
        }),
    )
    .expect("same ring"))
}
