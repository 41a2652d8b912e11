use std::collections::BTreeMap;

use super::{Sign, SignedMultigraph};
use crate::error::{Error, Result};

/// Tries to assign each vertex a potential in {+1, -1} so that every
/// constraint `(a, b, s)` satisfies `p(a) * p(b) = s`. A loop constraint is
/// satisfiable only when positive.
pub(crate) fn potentials<I>(vertex_count: usize, constraints: I) -> Option<Vec<Sign>>
where
    I: IntoIterator<Item = (usize, usize, Sign)>,
{
    let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); vertex_count];
    for (a, b, s) in constraints {
        if a == b {
            if s.is_negative() {
                return None;
            }
            continue;
        }
        adj[a].push((b, s));
        adj[b].push((a, s));
    }
    let mut potential: Vec<Option<Sign>> = vec![None; vertex_count];
    for root in 0..vertex_count {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Positive);
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            let px = potential[x].expect("visited");
            for &(y, s) in &adj[x] {
                let want = px * s;
                match potential[y] {
                    None => {
                        potential[y] = Some(want);
                        stack.push(y);
                    }
                    Some(py) if py != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(
        potential
            .into_iter()
            .map(|p| p.expect("all visited"))
            .collect(),
    )
}

/// Every cycle positive. Opposite-sign parallel pairs and negative loops
/// count as negative cycles; positive loops are ignored.
pub fn is_balanced(g: &SignedMultigraph) -> bool {
    potentials(
        g.vertex_count(),
        g.edges().iter().map(|e| (e.u, e.v, e.sign)),
    )
    .is_some()
}

/// Vertex set whose switching makes every edge of a balanced graph positive.
pub fn balancing_set(g: &SignedMultigraph) -> Option<Vec<usize>> {
    let p = potentials(
        g.vertex_count(),
        g.edges().iter().map(|e| (e.u, e.v, e.sign)),
    )?;
    Some(
        p.iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .map(|(v, _)| v)
            .collect(),
    )
}

/// `g2 = switch(g1, X)` for some `X`, with edges matched by index.
///
/// Decided by balance of the edge-wise product signature. The graphs must
/// share the same underlying edge list.
pub fn switching_equivalent(g1: &SignedMultigraph, g2: &SignedMultigraph) -> Result<bool> {
    if !g1.same_underlying_edges(g2) {
        return Err(Error::UnderlyingMismatch(
            "edge lists differ in vertex count, length or endpoints".into(),
        ));
    }
    Ok(potentials(
        g1.vertex_count(),
        g1.edges()
            .iter()
            .zip(g2.edges())
            .map(|(a, b)| (a.u, a.v, a.sign * b.sign)),
    )
    .is_some())
}

/// Switching equivalence where parallel edges are interchangeable, i.e. the
/// edge lists only need to agree as multisets of endpoint pairs.
///
/// Between each vertex pair, switching flips all parallel edges together, so
/// the sign multisets must be equal (same side) or opposite (different
/// sides). A pair carrying both `+` and `-` equally often fits either way.
/// Returns `false` rather than an error when the multigraphs differ.
pub fn switching_equivalent_unordered(g1: &SignedMultigraph, g2: &SignedMultigraph) -> bool {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let tally = |g: &SignedMultigraph| {
        let mut map: BTreeMap<(usize, usize), (u32, u32)> = BTreeMap::new();
        for e in g.edges() {
            let slot = map.entry(e.key()).or_default();
            match e.sign {
                Sign::Positive => slot.0 += 1,
                Sign::Negative => slot.1 += 1,
            }
        }
        map
    };
    let t1 = tally(g1);
    let t2 = tally(g2);
    if t1.len() != t2.len() {
        return false;
    }
    let mut constraints = Vec::new();
    for ((pair, (p1, n1)), (pair2, (p2, n2))) in t1.iter().zip(&t2) {
        if pair != pair2 {
            return false;
        }
        let (a, b) = *pair;
        let same = p1 == p2 && n1 == n2;
        let opposite = p1 == n2 && n1 == p2;
        if a == b {
            if !same {
                return false;
            }
            continue;
        }
        match (same, opposite) {
            (true, true) => {}
            (true, false) => constraints.push((a, b, Sign::Positive)),
            (false, true) => constraints.push((a, b, Sign::Negative)),
            (false, false) => return false,
        }
    }
    potentials(g1.vertex_count(), constraints).is_some()
}
