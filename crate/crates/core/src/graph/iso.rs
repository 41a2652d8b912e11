use super::balance::switching_equivalent_unordered;
use super::SignedMultigraph;
use crate::error::{Error, Result};

/// `perm[x]` is the image of vertex `x`.
pub type Permutation = Vec<usize>;

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidSpec(format!(
            "permutation has {} entries for {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidSpec("not a permutation".into()));
        }
    }
    Ok(())
}

/// Every vertex bijection from `g1` onto `g2` preserving edge multiplicities
/// (loops included, signs ignored), sorted lexicographically.
pub fn isomorphisms(
    g1: &SignedMultigraph,
    g2: &SignedMultigraph,
    guard: usize,
) -> Result<Vec<Permutation>> {
    let n = g1.vertex_count();
    if n > guard {
        return Err(Error::SizeGuard {
            actual: n,
            limit: guard,
        });
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(Vec::new());
    }
    let search = Search {
        m1: g1.multiplicity_matrix(),
        m2: g2.multiplicity_matrix(),
        deg1: (0..n).map(|v| g1.degree(v)).collect(),
        deg2: (0..n).map(|v| g2.degree(v)).collect(),
        order: bfs_order(g1),
    };
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    search.extend(0, &mut image, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// Automorphisms of the underlying multigraph, identity first.
pub fn automorphisms(g: &SignedMultigraph, guard: usize) -> Result<Vec<Permutation>> {
    isomorphisms(g, g, guard)
}

/// `g1` is isomorphic to some switching of `g2`.
pub fn switching_isomorphic(
    g1: &SignedMultigraph,
    g2: &SignedMultigraph,
    guard: usize,
) -> Result<bool> {
    for psi in isomorphisms(g1, g2, guard)? {
        let moved = g1.relabel(&psi)?;
        if switching_equivalent_unordered(&moved, g2) {
            return Ok(true);
        }
    }
    Ok(false)
}

struct Search {
    m1: Vec<Vec<u32>>,
    m2: Vec<Vec<u32>>,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
    order: Vec<usize>,
}

impl Search {
    fn extend(
        &self,
        depth: usize,
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        if depth == self.order.len() {
            out.push(image.to_vec());
            return;
        }
        let a = self.order[depth];
        for b in 0..image.len() {
            if used[b] || self.deg1[a] != self.deg2[b] || self.m1[a][a] != self.m2[b][b] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&x| self.m1[a][x] == self.m2[b][image[x]]);
            if !consistent {
                continue;
            }
            image[a] = b;
            used[b] = true;
            self.extend(depth + 1, image, used, out);
            used[b] = false;
            image[a] = usize::MAX;
        }
    }
}

/// Breadth-first vertex order, so each vertex after the first in its
/// component has an already-placed neighbor.
fn bfs_order(g: &SignedMultigraph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.vertex_count());
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}
