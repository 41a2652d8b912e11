//! Exact counting of proper signed colorings.
//!
//! A coloring `c` is proper when `c(x) != σ(e) c(y)` for every edge
//! `e = xy`, loops included. With colors `{-k..k}` the count is
//! χ(2k+1); with `{-k..-1, 1..k}` it is the zero-free χ^b(2k).
//!
//! Two counters are provided and cross-checked in tests: a backtracking
//! enumerator that touches every proper coloring, and a sum-product
//! eliminator that sums colors out one vertex at a time. Neither goes
//! through deletion-contraction, which is what lets them serve as the
//! reference for the polynomial engine.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedMultigraph};
use crate::EngineMode;

/// Default bound on counting work (candidate colorings or table cells).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Color palette of radius `k`: `{-k..k}`, or without 0 in zero-free mode.
pub fn palette(k: u32, mode: EngineMode) -> Vec<i64> {
    let k = i64::from(k);
    (-k..=k)
        .filter(|&c| mode == EngineMode::Chromatic || c != 0)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedColoring {
    colors: Vec<i64>,
    k: u32,
    mode: EngineMode,
}

impl SignedColoring {
    pub fn new(colors: Vec<i64>, k: u32, mode: EngineMode) -> Result<Self> {
        let radius = i64::from(k);
        for (v, &c) in colors.iter().enumerate() {
            if c.abs() > radius {
                return Err(Error::InvalidColoring(format!(
                    "vertex {v} has color {c} outside radius {k}"
                )));
            }
            if c == 0 && mode == EngineMode::ZeroFree {
                return Err(Error::InvalidColoring(format!(
                    "vertex {v} has color 0 in a zero-free coloring"
                )));
            }
        }
        Ok(SignedColoring { colors, k, mode })
    }

    pub fn colors(&self) -> &[i64] {
        &self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn mode(&self) -> EngineMode {
        self.mode
    }
}

#[inline]
fn edge_ok(cx: i64, cy: i64, sign: Sign) -> bool {
    cx != sign.value() * cy
}

pub fn is_proper(g: &SignedMultigraph, c: &SignedColoring) -> Result<bool> {
    let colors = c.colors();
    if colors.len() != g.vertex_count() {
        return Err(Error::IncompleteColoring {
            assigned: colors.len(),
            vertex_count: g.vertex_count(),
        });
    }
    let edges_ok = g
        .edges()
        .iter()
        .all(|e| edge_ok(colors[e.u], colors[e.v], e.sign));
    let marks_ok = (0..g.vertex_count()).all(|v| !(g.is_zero_forbidden(v) && colors[v] == 0));
    Ok(edges_ok && marks_ok)
}

/// χ_Σ(2k+1): proper colorings with colors `{-k..k}`.
pub fn count_proper(g: &SignedMultigraph, k: u32, budget: u64) -> Result<u128> {
    count_colorings(g, k, EngineMode::Chromatic, budget)
}

/// χ^b_Σ(2k): proper colorings with colors `{-k..-1, 1..k}`.
pub fn count_zero_free(g: &SignedMultigraph, k: u32, budget: u64) -> Result<u128> {
    count_colorings(g, k, EngineMode::ZeroFree, budget)
}

/// Count at λ, reading odd λ as 2k+1 colors and even λ as 2k zero-free
/// colors.
pub fn count_at(g: &SignedMultigraph, lambda: u32, budget: u64) -> Result<u128> {
    if lambda % 2 == 1 {
        count_proper(g, (lambda - 1) / 2, budget)
    } else {
        count_zero_free(g, lambda / 2, budget)
    }
}

/// Counts by summing out one vertex at a time (min-degree order).
pub fn count_colorings(
    g: &SignedMultigraph,
    k: u32,
    mode: EngineMode,
    budget: u64,
) -> Result<u128> {
    let colors = palette(k, mode);
    eliminate(g, &colors, budget)
}

/// Ordinary proper colorings of the underlying simple graph with
/// `colors` colors. Loops and edge signs are ignored.
pub fn count_unsigned(g: &SignedMultigraph, colors: u32, budget: u64) -> Result<u128> {
    let mut simple = SignedMultigraph::new(g.vertex_count());
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        simple.add_edge(e.u, e.v, Sign::Positive)?;
    }
    let palette: Vec<i64> = (0..i64::from(colors)).collect();
    eliminate(&simple, &palette, budget)
}

struct Factor {
    scope: Vec<usize>,
    table: Vec<u128>,
}

fn eliminate(g: &SignedMultigraph, colors: &[i64], budget: u64) -> Result<u128> {
    let q = colors.len();
    let n = g.vertex_count();
    let mut factors: Vec<Factor> = Vec::new();
    let mut work: u64 = 0;

    for e in g.edges() {
        if e.is_loop() {
            let table = colors
                .iter()
                .map(|&c| u128::from(edge_ok(c, c, e.sign)))
                .collect();
            factors.push(Factor {
                scope: vec![e.u],
                table,
            });
        } else {
            let (a, b) = e.key();
            let mut table = Vec::with_capacity(q * q);
            // index = ia + q * ib
            for &cb in colors {
                for &ca in colors {
                    table.push(u128::from(edge_ok(ca, cb, e.sign)));
                }
            }
            factors.push(Factor {
                scope: vec![a, b],
                table,
            });
        }
    }
    for v in (0..n).filter(|&v| g.is_zero_forbidden(v)) {
        factors.push(Factor {
            scope: vec![v],
            table: colors.iter().map(|&c| u128::from(c != 0)).collect(),
        });
    }

    let mut alive = vec![true; n];
    for _ in 0..n {
        let v = pick_vertex(&factors, &alive);
        alive[v] = false;
        let (touching, rest): (Vec<Factor>, Vec<Factor>) =
            factors.into_iter().partition(|f| f.scope.contains(&v));
        factors = rest;

        let mut scope: Vec<usize> = touching
            .iter()
            .flat_map(|f| f.scope.iter().copied())
            .filter(|&x| x != v)
            .collect();
        scope.sort_unstable();
        scope.dedup();

        let cells = q
            .checked_pow(scope.len() as u32 + 1)
            .and_then(|c| u64::try_from(c).ok())
            .ok_or(Error::BudgetExceeded { budget })?;
        work = work.saturating_add(cells);
        if work > budget {
            return Err(Error::BudgetExceeded { budget });
        }

        // Position of each factor variable inside `scope ++ [v]`.
        let full_pos = |x: usize| -> usize {
            if x == v {
                scope.len()
            } else {
                scope.binary_search(&x).expect("in scope")
            }
        };
        let layouts: Vec<Vec<usize>> = touching
            .iter()
            .map(|f| f.scope.iter().map(|&x| full_pos(x)).collect())
            .collect();

        let out_len = q.pow(scope.len() as u32);
        let mut table = vec![0u128; out_len];
        let mut assign = vec![0usize; scope.len() + 1];
        for (slot, cell) in table.iter_mut().enumerate() {
            let mut rem = slot;
            for a in assign.iter_mut().take(scope.len()) {
                *a = rem % q;
                rem /= q;
            }
            let mut total: u128 = 0;
            for cv in 0..q {
                assign[scope.len()] = cv;
                let mut prod: u128 = 1;
                for (f, layout) in touching.iter().zip(&layouts) {
                    let mut idx = 0;
                    let mut stride = 1;
                    for &pos in layout {
                        idx += assign[pos] * stride;
                        stride *= q;
                    }
                    prod = prod.checked_mul(f.table[idx]).ok_or(Error::Overflow)?;
                    if prod == 0 {
                        break;
                    }
                }
                total = total.checked_add(prod).ok_or(Error::Overflow)?;
            }
            *cell = total;
        }
        factors.push(Factor { scope, table });
    }

    factors.iter().try_fold(1u128, |acc, f| {
        debug_assert!(f.scope.is_empty());
        acc.checked_mul(f.table[0]).ok_or(Error::Overflow)
    })
}

/// Live vertex with the fewest distinct factor neighbors, lowest id on ties.
fn pick_vertex(factors: &[Factor], alive: &[bool]) -> usize {
    let n = alive.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for f in factors {
        for &x in &f.scope {
            nbrs[x].extend(f.scope.iter().copied().filter(|&y| y != x));
        }
    }
    (0..n)
        .filter(|&v| alive[v])
        .min_by_key(|&v| {
            let list = &mut nbrs[v];
            list.sort_unstable();
            list.dedup();
            (list.len(), v)
        })
        .expect("a live vertex remains")
}

/// Counts by depth-first enumeration of colorings, highest-degree vertices
/// first, abandoning a branch at the first violated edge. `budget` bounds
/// the number of color trials.
pub fn count_by_backtracking(
    g: &SignedMultigraph,
    k: u32,
    mode: EngineMode,
    budget: u64,
) -> Result<u128> {
    let colors = palette(k, mode);
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // checks[i]: edges whose later endpoint (in `order`) is order[i]
    let mut checks: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
    for e in g.edges() {
        let (first, last) = if rank[e.u] <= rank[e.v] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        checks[rank[last]].push((first, e.sign));
    }

    let mut state = Backtrack {
        g,
        colors: &colors,
        order: &order,
        checks: &checks,
        assigned: vec![0; n],
        trials: 0,
        budget,
    };
    state.run(0)
}

struct Backtrack<'a> {
    g: &'a SignedMultigraph,
    colors: &'a [i64],
    order: &'a [usize],
    checks: &'a [Vec<(usize, Sign)>],
    assigned: Vec<i64>,
    trials: u64,
    budget: u64,
}

impl Backtrack<'_> {
    fn run(&mut self, depth: usize) -> Result<u128> {
        if depth == self.order.len() {
            return Ok(1);
        }
        let v = self.order[depth];
        let mut total: u128 = 0;
        for &c in self.colors {
            self.trials += 1;
            if self.trials > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            if c == 0 && self.g.is_zero_forbidden(v) {
                continue;
            }
            self.assigned[v] = c;
            let ok = self.checks[depth]
                .iter()
                .all(|&(w, s)| edge_ok(c, self.assigned[w], s));
            if ok {
                total = total
                    .checked_add(self.run(depth + 1)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        Ok(total)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ChromaticNumber {
    Colorable(u32),
    /// A positive loop rules out every coloring.
    Uncolorable,
}

/// Smallest λ with χ(λ) > 0 (odd λ) or χ^b(λ) > 0 (even λ).
pub fn chromatic_number(g: &SignedMultigraph, budget: u64) -> Result<ChromaticNumber> {
    if g.has_positive_loop() {
        return Ok(ChromaticNumber::Uncolorable);
    }
    // ±1..±n with distinct absolute values always works, so λ <= 2n.
    let limit = (2 * g.vertex_count() as u32).max(1);
    for lambda in 1..=limit {
        if count_at(g, lambda, budget)? > 0 {
            return Ok(ChromaticNumber::Colorable(lambda));
        }
    }
    unreachable!("a coloring with distinct absolute values exists at λ = 2n")
}
