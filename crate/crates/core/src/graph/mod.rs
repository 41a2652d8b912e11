//! Signed multigraphs.
//!
//! Loops and parallel edges are first-class: contracting an edge of an
//! unbalanced digon produces a negative loop, and the book-graph families
//! need parallel pairs of opposite sign.

mod balance;
mod cycles;
mod format;
mod iso;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use balance::{
    balancing_set, is_balanced, switching_equivalent, switching_equivalent_unordered,
};
pub use cycles::{negative_cycles, simple_cycles, CycleSignRecord};
pub use format::parse_graph;
pub use iso::{automorphisms, isomorphisms, switching_isomorphic, Permutation};

/// Default vertex bound for exhaustive searches (cycles, automorphisms).
pub const DEFAULT_SIZE_GUARD: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn token(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// Endpoints with the smaller id first.
    pub fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// The set of negative edges of a signed graph, as edge indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature(BTreeSet<usize>);

impl Signature {
    pub fn new(edges: impl IntoIterator<Item = usize>) -> Self {
        Signature(edges.into_iter().collect())
    }

    pub fn empty() -> Self {
        Signature::default()
    }

    /// |σ|
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.contains(&edge)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn from_mask(mask: u64, edge_count: usize) -> Self {
        Signature((0..edge_count).filter(|e| mask >> e & 1 == 1).collect())
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &e| acc | 1 << e)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A signed multigraph on vertices `0..vertex_count`.
///
/// `zero_forbidden` marks vertices that may not take color 0. It is only
/// set by the deletion-contraction engine when it strips a negative loop;
/// graphs built by callers or read from files have no marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedMultigraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    zero_forbidden: Vec<bool>,
    labels: BTreeMap<usize, String>,
}

impl SignedMultigraph {
    pub fn new(vertex_count: usize) -> Self {
        SignedMultigraph {
            vertex_count,
            edges: Vec::new(),
            zero_forbidden: vec![false; vertex_count],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<Self> {
        let mut g = SignedMultigraph::new(vertex_count);
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Appends an edge and returns its index.
    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.edges.push(Edge::new(u, v, sign));
        Ok(self.edges.len() - 1)
    }

    pub fn set_label(&mut self, vertex: usize, label: impl Into<String>) -> Result<()> {
        self.check_vertex(vertex)?;
        self.labels.insert(vertex, label.into());
        Ok(())
    }

    pub fn label(&self, vertex: usize) -> Option<&str> {
        self.labels.get(&vertex).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Label if present, otherwise the vertex id.
    pub fn vertex_name(&self, vertex: usize) -> String {
        self.label(vertex)
            .map(str::to_owned)
            .unwrap_or_else(|| vertex.to_string())
    }

    pub fn set_zero_forbidden(&mut self, vertex: usize, forbidden: bool) -> Result<()> {
        self.check_vertex(vertex)?;
        self.zero_forbidden[vertex] = forbidden;
        Ok(())
    }

    pub fn is_zero_forbidden(&self, vertex: usize) -> bool {
        self.zero_forbidden[vertex]
    }

    pub fn zero_forbidden(&self) -> &[bool] {
        &self.zero_forbidden
    }

    pub fn has_zero_forbidden(&self) -> bool {
        self.zero_forbidden.iter().any(|&z| z)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::EdgeOutOfRange {
            edge: e,
            edge_count: self.edges.len(),
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn signature(&self) -> Signature {
        Signature::new(
            self.edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.sign.is_negative())
                .map(|(i, _)| i),
        )
    }

    /// Same underlying graph with the given set of negative edges.
    pub fn with_signature(&self, sig: &Signature) -> Result<Self> {
        if let Some(bad) = sig.iter().find(|&e| e >= self.edges.len()) {
            return Err(Error::EdgeOutOfRange {
                edge: bad,
                edge_count: self.edges.len(),
            });
        }
        let mut g = self.clone();
        for (i, e) in g.edges.iter_mut().enumerate() {
            e.sign = if sig.contains(i) {
                Sign::Negative
            } else {
                Sign::Positive
            };
        }
        Ok(g)
    }

    /// All edges positive.
    pub fn underlying(&self) -> Self {
        self.with_signature(&Signature::empty())
            .expect("empty signature is always valid")
    }

    pub fn has_positive_loop(&self) -> bool {
        self.edges
            .iter()
            .any(|e| e.is_loop() && e.sign == Sign::Positive)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Number of non-loop edge ends at `v` plus two per loop.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    /// Neighbor lists over non-loop edges: `(neighbor, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            if !e.is_loop() {
                adj[e.u].push((e.v, i));
                adj[e.v].push((e.u, i));
            }
        }
        adj
    }

    /// Edge multiplicity between every ordered pair; loops on the diagonal.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count;
        let mut mat = vec![vec![0u32; n]; n];
        for e in &self.edges {
            mat[e.u][e.v] += 1;
            if !e.is_loop() {
                mat[e.v][e.u] += 1;
            }
        }
        mat
    }

    /// Connected components in ascending order of their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut comps = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &(y, _) in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Switching at `set`: every non-loop edge with exactly one endpoint in
    /// `set` changes sign. Loops keep their sign.
    pub fn switch(&self, set: &[usize]) -> Result<Self> {
        let mut inside = vec![false; self.vertex_count];
        for &x in set {
            self.check_vertex(x)?;
            inside[x] = true;
        }
        let mut g = self.clone();
        for e in &mut g.edges {
            if inside[e.u] != inside[e.v] {
                e.sign = e.sign.flipped();
            }
        }
        Ok(g)
    }

    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        self.edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// Identifies the endpoints of positive non-loop edge `e` and drops `e`.
    ///
    /// The merged vertex keeps the smaller id and the larger id is removed,
    /// shifting later ids down by one. Remaining parallel copies of `e` turn
    /// into loops with their signs intact. Zero marks are OR-ed.
    pub fn contract_edge(&self, e: usize) -> Result<Self> {
        let edge = *self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::Contract {
                edge: e,
                reason: "edge is a loop",
            });
        }
        if edge.sign.is_negative() {
            return Err(Error::Contract {
                edge: e,
                reason: "edge is negative",
            });
        }
        let (keep, gone) = edge.key();
        let remap = |x: usize| -> usize {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, f)| Edge::new(remap(f.u), remap(f.v), f.sign))
            .collect();
        let mut zero_forbidden = self.zero_forbidden.clone();
        zero_forbidden[keep] |= zero_forbidden[gone];
        zero_forbidden.remove(gone);
        let labels = self
            .labels
            .iter()
            .filter(|(&v, _)| v != gone)
            .map(|(&v, l)| (remap(v), l.clone()))
            .collect();
        Ok(SignedMultigraph {
            vertex_count: self.vertex_count - 1,
            edges,
            zero_forbidden,
            labels,
        })
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut g = SignedMultigraph::new(vertices.len());
        for e in &self.edges {
            if index[e.u] != usize::MAX && index[e.v] != usize::MAX {
                g.edges.push(Edge::new(index[e.u], index[e.v], e.sign));
            }
        }
        for (i, &v) in vertices.iter().enumerate() {
            g.zero_forbidden[i] = self.zero_forbidden[v];
            if let Some(l) = self.labels.get(&v) {
                g.labels.insert(i, l.clone());
            }
        }
        Ok(g)
    }

    /// Removes one vertex together with its incident edges.
    pub fn remove_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.vertex_count).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Renames vertex `x` to `perm[x]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        iso::check_permutation(perm, self.vertex_count)?;
        let mut g = SignedMultigraph::new(self.vertex_count);
        g.edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.u], perm[e.v], e.sign))
            .collect();
        for (v, &mark) in self.zero_forbidden.iter().enumerate() {
            g.zero_forbidden[perm[v]] = mark;
        }
        g.labels = self
            .labels
            .iter()
            .map(|(&v, l)| (perm[v], l.clone()))
            .collect();
        Ok(g)
    }

    /// True when both graphs list the same endpoints edge by edge (ignoring
    /// orientation of each edge).
    pub fn same_underlying_edges(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.key() == b.key())
    }

    pub fn to_text(&self) -> String {
        format::serialize(self)
    }
}

impl fmt::Display for SignedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
