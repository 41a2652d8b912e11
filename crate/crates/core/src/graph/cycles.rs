use std::collections::BTreeMap;

use serde::Serialize;

use super::{Sign, SignedMultigraph};
use crate::error::{Error, Result};

/// A simple cycle (loop, digon or longer) and the product of its edge signs.
///
/// `vertices[i]` and `vertices[i + 1]` (cyclically) are joined by `edges[i]`.
/// The walk starts at the smallest vertex and runs in the direction whose
/// edge sequence is lexicographically smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CycleSignRecord {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub sign: Sign,
}

impl CycleSignRecord {
    pub fn edge_set(&self) -> Vec<usize> {
        let mut set = self.edges.clone();
        set.sort_unstable();
        set
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// All simple cycles, ordered by their sorted edge sets.
pub fn simple_cycles(g: &SignedMultigraph, guard: usize) -> Result<Vec<CycleSignRecord>> {
    if g.vertex_count() > guard {
        return Err(Error::SizeGuard {
            actual: g.vertex_count(),
            limit: guard,
        });
    }
    let adj = g.adjacency();
    let mut found: BTreeMap<Vec<usize>, CycleSignRecord> = BTreeMap::new();

    for (i, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            found.insert(
                vec![i],
                CycleSignRecord {
                    vertices: vec![e.u],
                    edges: vec![i],
                    sign: e.sign,
                },
            );
        }
    }

    let mut on_path = vec![false; g.vertex_count()];
    for start in 0..g.vertex_count() {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        on_path[start] = true;
        walk(
            g,
            &adj,
            start,
            &mut vertices,
            &mut edges,
            &mut on_path,
            &mut found,
        );
        on_path[start] = false;
    }
    Ok(found.into_values().collect())
}

fn walk(
    g: &SignedMultigraph,
    adj: &[Vec<(usize, usize)>],
    start: usize,
    vertices: &mut Vec<usize>,
    edges: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut BTreeMap<Vec<usize>, CycleSignRecord>,
) {
    let here = *vertices.last().expect("path starts at `start`");
    for &(next, e) in &adj[here] {
        if edges.contains(&e) {
            continue;
        }
        if next == start {
            edges.push(e);
            record(g, vertices, edges, found);
            edges.pop();
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            vertices.push(next);
            edges.push(e);
            walk(g, adj, start, vertices, edges, on_path, found);
            edges.pop();
            vertices.pop();
            on_path[next] = false;
        }
    }
}

fn record(
    g: &SignedMultigraph,
    vertices: &[usize],
    edges: &[usize],
    found: &mut BTreeMap<Vec<usize>, CycleSignRecord>,
) {
    let mut key = edges.to_vec();
    key.sort_unstable();
    if found.contains_key(&key) {
        return;
    }
    // Reverse direction: same start vertex, edges read backwards.
    let mut rev_edges: Vec<usize> = edges.iter().rev().copied().collect();
    let mut rev_vertices = vec![vertices[0]];
    rev_vertices.extend(vertices[1..].iter().rev());
    let (vertices, edges) = if rev_edges.as_slice() < edges {
        (rev_vertices, std::mem::take(&mut rev_edges))
    } else {
        (vertices.to_vec(), edges.to_vec())
    };
    let sign = edges
        .iter()
        .fold(Sign::Positive, |acc, &e| acc * g.edges()[e].sign);
    found.insert(
        key,
        CycleSignRecord {
            vertices,
            edges,
            sign,
        },
    );
}

/// The negative simple cycles of `g`, in the order of [`simple_cycles`].
pub fn negative_cycles(g: &SignedMultigraph, guard: usize) -> Result<Vec<CycleSignRecord>> {
    Ok(simple_cycles(g, guard)?
        .into_iter()
        .filter(|c| c.sign.is_negative())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_SIZE_GUARD;
    use Sign::{Negative as N, Positive as P};

    #[test]
    fn positive_square_has_no_negative_cycles() {
        let g =
            SignedMultigraph::from_edges(4, [(0, 1, P), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap();
        assert!(negative_cycles(&g, DEFAULT_SIZE_GUARD).unwrap().is_empty());
        assert_eq!(simple_cycles(&g, DEFAULT_SIZE_GUARD).unwrap().len(), 1);
    }

    #[test]
    fn negative_triangle() {
        let g = SignedMultigraph::from_edges(3, [(0, 1, P), (1, 2, P), (2, 0, N)]).unwrap();
        let cycles = negative_cycles(&g, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices, vec![0, 1, 2]);
        assert_eq!(cycles[0].edges, vec![0, 1, 2]);
    }

    #[test]
    fn digons_and_loops_are_cycles() {
        let g =
            SignedMultigraph::from_edges(2, [(0, 1, P), (0, 1, N), (1, 1, N), (0, 0, P)]).unwrap();
        let all = simple_cycles(&g, DEFAULT_SIZE_GUARD).unwrap();
        let sets: Vec<_> = all.iter().map(|c| c.edge_set()).collect();
        assert_eq!(sets, vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(negative_cycles(&g, DEFAULT_SIZE_GUARD).unwrap().len(), 2);
    }

    #[test]
    fn k4_has_seven_cycles() {
        let mut g = SignedMultigraph::new(4);
        for a in 0..4 {
            for b in a + 1..4 {
                g.add_edge(a, b, P).unwrap();
            }
        }
        // 4 triangles + 3 four-cycles
        assert_eq!(simple_cycles(&g, DEFAULT_SIZE_GUARD).unwrap().len(), 7);
    }

    #[test]
    fn guard() {
        let g = SignedMultigraph::new(5);
        assert!(matches!(simple_cycles(&g, 4), Err(Error::SizeGuard { .. })));
    }
}
