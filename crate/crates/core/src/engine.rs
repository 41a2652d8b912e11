//! Signed deletion-contraction.
//!
//! For a positive non-loop edge `e`, χ(Σ) = χ(Σ∖e) − χ(Σ/e), and the same
//! holds for the zero-free polynomial. Before branching, each state is
//! reduced:
//!
//! * a positive loop makes the polynomial zero;
//! * a negative loop at `v` only forbids `c(v) = 0`, so in chromatic mode
//!   it becomes a zero mark on `v` and in zero-free mode it disappears;
//! * parallel edges of equal sign collapse to one;
//! * components multiply;
//! * a pendant vertex contributes a factor `(λ - 1)` (unless it carries a
//!   zero mark in chromatic mode, where its choices depend on its neighbor);
//! * with no positive edge left, switching at one endpoint of a negative
//!   edge creates one (both polynomials are switching invariant).
//!
//! Edgeless graphs evaluate to `λ^a (λ-1)^b` in chromatic mode, with `b`
//! the number of zero-marked vertices, and `λ^n` in zero-free mode.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedMultigraph};
use crate::poly::Polynomial;
use crate::EngineMode;

/// Which positive edge to branch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeChoice {
    /// A positive edge lying on a cycle if there is one, else the first.
    PreferCycle,
    First,
    Last,
    /// Pseudo-random pick driven by the seed and the state size.
    Seeded(u64),
}

#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Upper bound on recursive calls.
    pub budget: u64,
    pub memoize: bool,
    pub edge_choice: EdgeChoice,
    pub pendant_rule: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            budget: crate::coloring::DEFAULT_BUDGET,
            memoize: true,
            edge_choice: EdgeChoice::PreferCycle,
            pendant_rule: true,
        }
    }
}

/// χ_Σ(λ) or χ^b_Σ(λ) with the default configuration.
pub fn chromatic_poly(g: &SignedMultigraph, mode: EngineMode) -> Result<Polynomial> {
    Engine::new(mode, EngineConfig::default()).run(g)
}

pub fn chromatic_poly_with(
    g: &SignedMultigraph,
    mode: EngineMode,
    config: EngineConfig,
) -> Result<Polynomial> {
    Engine::new(mode, config).run(g)
}

pub struct Engine {
    mode: EngineMode,
    config: EngineConfig,
    calls: u64,
    memo: HashMap<Vec<u64>, Polynomial>,
}

impl Engine {
    pub fn new(mode: EngineMode, config: EngineConfig) -> Self {
        Engine {
            mode,
            config,
            calls: 0,
            memo: HashMap::new(),
        }
    }

    /// Recursive calls made so far.
    pub fn calls(&self) -> u64 {
        self.calls
    }

    pub fn run(&mut self, g: &SignedMultigraph) -> Result<Polynomial> {
        self.solve(g.clone())
    }

    fn tick(&mut self) -> Result<()> {
        self.calls += 1;
        if self.calls > self.config.budget {
            return Err(Error::BudgetExceeded {
                budget: self.config.budget,
            });
        }
        Ok(())
    }

    fn solve(&mut self, g: SignedMultigraph) -> Result<Polynomial> {
        self.tick()?;
        if g.has_positive_loop() {
            return Ok(Polynomial::zero());
        }
        let g = self.reduce(&g)?;

        if g.edge_count() == 0 {
            return Ok(self.edgeless(&g));
        }

        let comps = g.components();
        if comps.len() > 1 {
            let mut acc = Polynomial::one();
            for comp in comps {
                let part = g.induced(&comp)?;
                acc = acc * self.solve(part)?;
            }
            return Ok(acc);
        }

        if self.config.pendant_rule {
            if let Some(w) = self.pendant(&g) {
                let rest = self.solve(g.remove_vertex(w)?)?;
                return Ok(Polynomial::lambda_minus(1) * rest);
            }
        }

        let key = self.config.memoize.then(|| self.key(&g));
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Ok(hit.clone());
        }

        let g = if g.edges().iter().any(|e| e.sign == Sign::Positive) {
            g
        } else {
            let first_neg = g.edges()[0];
            g.switch(&[first_neg.u])?
        };

        let e = self.choose_edge(&g);
        let deleted = self.solve(g.delete_edge(e)?)?;
        let contracted = self.solve(g.contract_edge(e)?)?;
        let result = deleted - contracted;

        if let Some(k) = key {
            self.memo.insert(k, result.clone());
        }
        Ok(result)
    }

    /// Strips negative loops and duplicate parallel edges.
    fn reduce(&self, g: &SignedMultigraph) -> Result<SignedMultigraph> {
        let mut out = SignedMultigraph::new(g.vertex_count());
        for v in 0..g.vertex_count() {
            out.set_zero_forbidden(v, g.is_zero_forbidden(v))?;
        }
        let mut seen: Vec<(usize, usize, Sign)> = Vec::new();
        for e in g.edges() {
            if e.is_loop() {
                // positive loops were handled by the caller
                if self.mode == EngineMode::Chromatic {
                    out.set_zero_forbidden(e.u, true)?;
                }
                continue;
            }
            let (a, b) = e.key();
            if seen.contains(&(a, b, e.sign)) {
                continue;
            }
            seen.push((a, b, e.sign));
            out.add_edge(e.u, e.v, e.sign)?;
        }
        Ok(out)
    }

    fn edgeless(&self, g: &SignedMultigraph) -> Polynomial {
        let n = g.vertex_count() as u32;
        match self.mode {
            EngineMode::ZeroFree => Polynomial::lambda().pow(n),
            EngineMode::Chromatic => {
                let marked = g.zero_forbidden().iter().filter(|&&z| z).count() as u32;
                Polynomial::lambda().pow(n - marked) * Polynomial::lambda_minus(1).pow(marked)
            }
        }
    }

    fn pendant(&self, g: &SignedMultigraph) -> Option<usize> {
        (0..g.vertex_count()).find(|&v| {
            g.degree(v) == 1 && !(self.mode == EngineMode::Chromatic && g.is_zero_forbidden(v))
        })
    }

    fn key(&self, g: &SignedMultigraph) -> Vec<u64> {
        let mut edges: Vec<(usize, usize, Sign)> = g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.key();
                (a, b, e.sign)
            })
            .collect();
        edges.sort_unstable();
        let mut key = Vec::with_capacity(2 + g.vertex_count() + edges.len());
        key.push(self.mode as u64);
        key.push(g.vertex_count() as u64);
        key.extend(g.zero_forbidden().iter().map(|&z| u64::from(z)));
        key.extend(
            edges
                .into_iter()
                .map(|(a, b, s)| (a as u64) << 33 | (b as u64) << 1 | u64::from(s.is_negative())),
        );
        key
    }

    fn choose_edge(&self, g: &SignedMultigraph) -> usize {
        let positive: Vec<usize> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.sign == Sign::Positive && !e.is_loop())
            .map(|(i, _)| i)
            .collect();
        match self.config.edge_choice {
            EdgeChoice::First => positive[0],
            EdgeChoice::Last => *positive.last().expect("at least one positive edge"),
            EdgeChoice::Seeded(seed) => {
                let mix = seed
                    .wrapping_mul(0x9E37_79B9_7F4A_7C15)
                    .wrapping_add((g.vertex_count() * 31 + g.edge_count()) as u64);
                positive[(mix >> 17) as usize % positive.len()]
            }
            EdgeChoice::PreferCycle => positive
                .iter()
                .copied()
                .find(|&e| on_cycle(g, e))
                .unwrap_or(positive[0]),
        }
    }
}

/// Whether the endpoints of `e` stay connected once `e` is removed.
fn on_cycle(g: &SignedMultigraph, e: usize) -> bool {
    let Edge { u, v, .. } = g.edges()[e];
    let adj = g.adjacency();
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(x) = stack.pop() {
        for &(y, f) in &adj[x] {
            if f == e || seen[y] {
                continue;
            }
            if y == v {
                return true;
            }
            seen[y] = true;
            stack.push(y);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::poly::{gamma, sign_power};
    use Sign::{Negative as N, Positive as P};

    fn lm1() -> Polynomial {
        Polynomial::lambda_minus(1)
    }

    #[test]
    fn unbalanced_digon() {
        let g = parse_graph("p signed 2 2\ne 0 1 +\ne 0 1 -").unwrap();
        assert_eq!(
            chromatic_poly(&g, EngineMode::Chromatic).unwrap(),
            lm1().pow(2)
        );
        assert_eq!(
            chromatic_poly(&g, EngineMode::ZeroFree).unwrap(),
            Polynomial::from_i64s(&[0, -2, 1])
        );
    }

    #[test]
    fn positive_cycles_both_modes() {
        for m in 3..=5usize {
            let mut g = SignedMultigraph::new(m);
            for i in 0..m {
                g.add_edge(i, (i + 1) % m, P).unwrap();
            }
            let expected = lm1().pow(m as u32) + sign_power(m) * lm1();
            for mode in [EngineMode::Chromatic, EngineMode::ZeroFree] {
                assert_eq!(chromatic_poly(&g, mode).unwrap(), expected, "m={m}");
            }
        }
    }

    #[test]
    fn negative_loop_semantics() {
        let g = SignedMultigraph::from_edges(1, [(0, 0, N)]).unwrap();
        assert_eq!(chromatic_poly(&g, EngineMode::Chromatic).unwrap(), lm1());
        assert_eq!(
            chromatic_poly(&g, EngineMode::ZeroFree).unwrap(),
            Polynomial::lambda()
        );
        let p = SignedMultigraph::from_edges(2, [(0, 0, P), (0, 1, N)]).unwrap();
        assert!(chromatic_poly(&p, EngineMode::Chromatic).unwrap().is_zero());
    }

    #[test]
    fn all_negative_graph_is_switched() {
        // all-negative triangle ~ one negative edge
        let g = SignedMultigraph::from_edges(3, [(0, 1, N), (1, 2, N), (2, 0, N)]).unwrap();
        assert_eq!(
            chromatic_poly(&g, EngineMode::Chromatic).unwrap(),
            lm1().pow(3)
        );
    }

    #[test]
    fn digon_book_single_page() {
        // B_3^1: digon u,v plus path u - w - v
        let g =
            SignedMultigraph::from_edges(3, [(0, 1, P), (0, 1, N), (0, 2, P), (2, 1, P)]).unwrap();
        let expected = lm1().pow(2) * gamma(3).unwrap();
        assert_eq!(chromatic_poly(&g, EngineMode::Chromatic).unwrap(), expected);
    }

    #[test]
    fn configurations_agree() {
        let g = parse_graph(
            "p signed 5 8\ne 0 1 +\ne 1 2 -\ne 2 3 +\ne 3 4 +\ne 4 0 -\ne 0 2 +\ne 1 3 -\ne 2 2 -",
        )
        .unwrap();
        for mode in [EngineMode::Chromatic, EngineMode::ZeroFree] {
            let reference = chromatic_poly(&g, mode).unwrap();
            for choice in [EdgeChoice::First, EdgeChoice::Last, EdgeChoice::Seeded(7)] {
                for memoize in [false, true] {
                    for pendant_rule in [false, true] {
                        let config = EngineConfig {
                            edge_choice: choice,
                            memoize,
                            pendant_rule,
                            ..EngineConfig::default()
                        };
                        assert_eq!(chromatic_poly_with(&g, mode, config).unwrap(), reference);
                    }
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let mut g = SignedMultigraph::new(6);
        for a in 0..6 {
            for b in a + 1..6 {
                g.add_edge(a, b, P).unwrap();
            }
        }
        let config = EngineConfig {
            budget: 5,
            ..EngineConfig::default()
        };
        assert!(matches!(
            chromatic_poly_with(&g, EngineMode::Chromatic, config),
            Err(Error::BudgetExceeded { budget: 5 })
        ));
    }
}
