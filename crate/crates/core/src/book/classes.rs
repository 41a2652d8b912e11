//! Switching-isomorphism classes of signatures on B(m,n), and the
//! chromatic-number classification of B_l(m,n).

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::{build_book, page_edge, BookSpec, SigSelector, U, V};
use crate::error::{Error, Result};
use crate::graph::{automorphisms, Permutation, Signature, DEFAULT_SIZE_GUARD};

/// Largest edge count for which all 2^|E| signatures are enumerated.
pub const DEFAULT_CLASS_EDGE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwitchingClass {
    /// σ_l for the matching level when one exists, else the smallest member.
    pub representative: Signature,
    /// The `l` with σ_l in this class.
    pub level: Option<usize>,
    /// Number of raw signatures in the class.
    pub size: u64,
    /// Pages whose cycle is negative; constant on the class.
    pub negative_page_count: usize,
}

/// 2 when (m odd, l = n) or (m even, l = 0), otherwise 3. Only stated for
/// books with at least two pages.
pub fn chromatic_number_formula(m: usize, n: usize, l: usize) -> Result<u32> {
    if n < 2 {
        return Err(Error::OutOfScope(format!(
            "the classification needs n >= 2; for n = {n} use the counting oracle (the bound is 3)"
        )));
    }
    BookSpec::level(m, n, l)?;
    let two = (!m.is_multiple_of(2) && l == n) || (m.is_multiple_of(2) && l == 0);
    Ok(if two { 2 } else { 3 })
}

/// The group generated by page permutations and the u/v swap (which also
/// reverses every page), n!·2 elements.
pub fn book_automorphisms(m: usize, n: usize) -> Result<Vec<Permutation>> {
    let spec = BookSpec::level(m, n, 0)?;
    let inner = m - 2;
    let mut out = Vec::new();
    for pages in permutations(n) {
        for swap in [false, true] {
            let mut perm = vec![0; spec.vertex_count()];
            perm[U] = if swap { V } else { U };
            perm[V] = if swap { U } else { V };
            for (i, &target) in pages.iter().enumerate() {
                for j in 0..inner {
                    let jj = if swap { inner - 1 - j } else { j };
                    perm[2 + i * inner + j] = 2 + target * inner + jj;
                }
            }
            out.push(perm);
        }
    }
    out.sort();
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..=smaller.len() {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Number of pages whose cycle `u u_1^i .. v u` has an odd number of
/// negative edges.
pub fn negative_page_count(m: usize, n: usize, sig: &Signature) -> usize {
    (1..=n)
        .filter(|&i| {
            let negs = (0..m - 1)
                .filter(|&j| sig.contains(page_edge(m, i, j)))
                .count()
                + usize::from(sig.contains(0));
            negs % 2 == 1
        })
        .count()
}

/// Partitions all 2^|E| signatures of B(m,n) into switching-isomorphism
/// classes.
///
/// Two signatures are in the same class when some automorphism maps one to
/// a switching of the other. Each signature is normalised by switching so
/// that a fixed spanning tree is all positive (the unique such
/// representative of its switching class), and the class key is the least
/// normalised signature over the automorphism group.
pub fn enumerate_switching_classes(
    m: usize,
    n: usize,
    edge_limit: usize,
) -> Result<Vec<SwitchingClass>> {
    let base = build_book(&BookSpec::level(m, n, 0)?)?;
    let edge_count = base.edge_count();
    if edge_count > edge_limit || edge_count > 40 {
        return Err(Error::SizeGuard {
            actual: edge_count,
            limit: edge_limit.min(40),
        });
    }

    let group = if base.vertex_count() <= DEFAULT_SIZE_GUARD {
        automorphisms(&base, DEFAULT_SIZE_GUARD)?
    } else {
        book_automorphisms(m, n)?
    };

    let index: HashMap<(usize, usize), usize> = base
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.key(), i))
        .collect();
    // edge_maps[g][e] = image of edge e under automorphism g
    let edge_maps: Vec<Vec<usize>> = group
        .iter()
        .map(|perm| {
            base.edges()
                .iter()
                .map(|e| {
                    let a = perm[e.u].min(perm[e.v]);
                    let b = perm[e.u].max(perm[e.v]);
                    index[&(a, b)]
                })
                .collect()
        })
        .collect();

    let tree = spanning_tree(&base);
    let normalise = |mask: u64| -> u64 {
        let mut potential = vec![0u64; base.vertex_count()];
        for &(child, parent, e) in &tree {
            potential[child] = potential[parent] ^ (mask >> e & 1);
        }
        base.edges().iter().enumerate().fold(0u64, |acc, (i, e)| {
            let bit = (mask >> i & 1) ^ potential[e.u] ^ potential[e.v];
            acc | bit << i
        })
    };
    let class_key = |mask: u64| -> u64 {
        edge_maps
            .iter()
            .map(|map| {
                let moved = map
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (e, &to)| acc | (mask >> e & 1) << to);
                normalise(moved)
            })
            .min()
            .expect("the group contains the identity")
    };

    let total: u64 = 1 << edge_count;
    let tallies: BTreeMap<u64, (u64, u64)> = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<u64, (u64, u64)>, mask| {
            let slot = acc.entry(class_key(mask)).or_insert((0, mask));
            slot.0 += 1;
            slot.1 = slot.1.min(mask);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, (count, min)) in b {
                let slot = a.entry(k).or_insert((0, min));
                slot.0 += count;
                slot.1 = slot.1.min(min);
            }
            a
        });

    let levels: HashMap<u64, usize> = (0..=n)
        .map(|l| {
            let sig = BookSpec::new(m, n, SigSelector::Level(l))
                .expect("valid level")
                .signature();
            (class_key(sig.to_mask()), l)
        })
        .collect();

    let mut classes: Vec<SwitchingClass> = tallies
        .into_iter()
        .map(|(key, (size, min_mask))| {
            let level = levels.get(&key).copied();
            let representative = match level {
                Some(l) => BookSpec::level(m, n, l).expect("valid level").signature(),
                None => Signature::from_mask(min_mask, edge_count),
            };
            SwitchingClass {
                negative_page_count: negative_page_count(m, n, &representative),
                representative,
                level,
                size,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.negative_page_count, &a.representative).cmp(&(b.negative_page_count, &b.representative))
    });
    Ok(classes)
}

/// BFS tree edges as `(child, parent, edge index)` in discovery order.
fn spanning_tree(g: &crate::graph::SignedMultigraph) -> Vec<(usize, usize, usize)> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    out.push((y, x, e));
                    queue.push_back(y);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        assert_eq!(chromatic_number_formula(5, 3, 3).unwrap(), 2);
        assert_eq!(chromatic_number_formula(6, 2, 0).unwrap(), 2);
        assert_eq!(chromatic_number_formula(4, 2, 2).unwrap(), 3);
        assert_eq!(chromatic_number_formula(3, 2, 0).unwrap(), 3);
        assert!(matches!(
            chromatic_number_formula(4, 1, 0),
            Err(Error::OutOfScope(_))
        ));
        assert!(chromatic_number_formula(4, 2, 3).is_err());
    }

    #[test]
    fn structured_group_matches_brute_force() {
        for (m, n) in [(4, 2), (3, 3), (5, 2)] {
            let base = build_book(&BookSpec::level(m, n, 0).unwrap()).unwrap();
            let brute = automorphisms(&base, DEFAULT_SIZE_GUARD).unwrap();
            let structured = book_automorphisms(m, n).unwrap();
            assert_eq!(brute, structured, "B({m},{n})");
            let fact: usize = (1..=n).product();
            assert_eq!(brute.len(), 2 * fact);
        }
    }

    #[test]
    fn three_two_has_three_classes() {
        let classes = enumerate_switching_classes(3, 2, DEFAULT_CLASS_EDGE_LIMIT).unwrap();
        assert_eq!(classes.len(), 3);
        assert_eq!(classes.iter().map(|c| c.size).sum::<u64>(), 32);
        for (l, c) in classes.iter().enumerate() {
            assert_eq!(c.level, Some(l));
            assert_eq!(c.negative_page_count, l);
        }
    }

    #[test]
    fn edge_limit() {
        assert!(matches!(
            enumerate_switching_classes(5, 3, 10),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn page_counting() {
        assert_eq!(negative_page_count(4, 3, &Signature::new([0])), 3);
        assert_eq!(negative_page_count(4, 3, &Signature::new([1, 4])), 2);
        assert_eq!(negative_page_count(4, 3, &Signature::new([1, 2])), 0);
    }
}
