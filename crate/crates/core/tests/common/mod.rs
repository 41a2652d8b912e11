//! Shared generators for the integration suites. Everything is seeded so a
//! failure reproduces exactly.

#![allow(dead_code)]

use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigchrom::book::{BookSpec, Family};
use sigchrom::graph::parse_graph;
use sigchrom::{Sign, SignedMultigraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Random signed multigraph on 1..=max_n vertices. Parallel edges come up
/// often on purpose; loops (negative only) when `loops` is set.
pub fn random_graph(
    rng: &mut impl Rng,
    max_n: usize,
    max_edges: usize,
    loops: bool,
) -> SignedMultigraph {
    let n = rng.gen_range(1..=max_n);
    let mut g = SignedMultigraph::new(n);
    let edges = rng.gen_range(0..=max_edges);
    for _ in 0..edges {
        let u = rng.gen_range(0..n);
        if loops && rng.gen_bool(0.08) {
            g.add_edge(u, u, Sign::Negative).unwrap();
            continue;
        }
        if n == 1 {
            continue;
        }
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        g.add_edge(u, v, random_sign(rng)).unwrap();
    }
    g
}

/// Random graph with at least one non-loop edge.
pub fn random_graph_with_link(
    rng: &mut impl Rng,
    max_n: usize,
    max_edges: usize,
) -> SignedMultigraph {
    loop {
        let g = random_graph(rng, max_n.max(2), max_edges.max(1), true);
        if g.edges().iter().any(|e| !e.is_loop()) {
            return g;
        }
    }
}

/// Random balanced graph: loop-free, all positive, then switched at a
/// random vertex set.
pub fn random_balanced(rng: &mut impl Rng, max_n: usize, max_edges: usize) -> SignedMultigraph {
    let base = random_graph(rng, max_n, max_edges, false).underlying();
    let x = random_subset(rng, base.vertex_count());
    base.switch(&x).unwrap()
}

pub fn random_subset(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Graph files shipped next to the tests, plus the book families and a
/// batch of seeded random graphs.
pub fn corpus() -> Vec<(String, SignedMultigraph)> {
    let mut out = Vec::new();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .expect("corpus directory")
        .map(|entry| entry.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "sg"))
        .collect();
    files.sort();
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        out.push((name, parse_graph(&text).unwrap()));
    }

    let mut families = Vec::new();
    for n in 2..=6 {
        families.push(Family::UnbalancedCycle { n });
    }
    for (m, n) in [(3, 1), (3, 2), (4, 2), (4, 3), (5, 2)] {
        families.push(Family::DigonBook { m, n });
    }
    for m in 3..=5 {
        for n in 1..=3 {
            for l in 0..=n {
                families.push(Family::Book(BookSpec::level(m, n, l).unwrap()));
            }
            families.push(Family::Book(BookSpec::uv(m, n).unwrap()));
        }
    }
    for f in families {
        out.push((f.to_string(), f.build().unwrap()));
    }

    let mut r = rng(0x005e_edc0);
    for i in 0..30 {
        out.push((format!("random-{i}"), random_graph(&mut r, 7, 12, true)));
    }
    out
}
