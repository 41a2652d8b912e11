//! Three-way agreement checks for signed book graphs: closed form,
//! deletion-contraction, and interpolation of brute-force counts.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::book::{build_book, closed_chi, BookSpec, Family, SigSelector};
use crate::coloring::count_colorings;
use crate::engine::{chromatic_poly_with, EngineConfig};
use crate::error::Result;
use crate::graph::SignedMultigraph;
use crate::interpolate::interpolate_poly;
use crate::poly::Polynomial;
use crate::EngineMode;

/// Interpolates χ (or χ^b) from oracle counts at the first `n + 2` arguments
/// of the mode's parity, `n` being the vertex count. The extra sample is a
/// residual check.
pub fn oracle_polynomial(
    g: &SignedMultigraph,
    mode: EngineMode,
    budget: u64,
) -> Result<Polynomial> {
    let degree = g.vertex_count();
    let first_k = match mode {
        EngineMode::Chromatic => 0,
        EngineMode::ZeroFree => 1,
    };
    let samples = (first_k..first_k + degree as u32 + 2)
        .map(|k| {
            let count = count_colorings(g, k, mode, budget)?;
            Ok((i64::from(mode.lambda_for(k)), BigInt::from(count)))
        })
        .collect::<Result<Vec<_>>>()?;
    interpolate_poly(&samples, degree)
}

/// Every signature selector of an n-page book: σ_0..σ_n and uv.
pub fn selectors(n: usize) -> Vec<SigSelector> {
    (0..=n)
        .map(SigSelector::Level)
        .chain([SigSelector::Uv])
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CellReport {
    pub book: BookSpec,
    pub mode: EngineMode,
    pub closed: Option<Polynomial>,
    pub engine: Option<Polynomial>,
    pub interpolated: Option<Polynomial>,
    pub pass: bool,
    pub error: Option<String>,
}

impl CellReport {
    pub fn label(&self) -> String {
        format!("{} {}", self.book, self.mode)
    }
}

/// Which routes to compute for a book.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Routes {
    pub closed: bool,
    pub engine: bool,
    pub oracle: bool,
}

impl Routes {
    pub const ALL: Routes = Routes {
        closed: true,
        engine: true,
        oracle: true,
    };
}

pub fn verify_cell(book: BookSpec, mode: EngineMode, routes: Routes, budget: u64) -> CellReport {
    let run = || -> Result<(Option<Polynomial>, Option<Polynomial>, Option<Polynomial>)> {
        let g = build_book(&book)?;
        let closed = routes
            .closed
            .then(|| closed_chi(&Family::Book(book), mode))
            .transpose()?;
        let engine = routes
            .engine
            .then(|| {
                let config = EngineConfig {
                    budget,
                    ..EngineConfig::default()
                };
                chromatic_poly_with(&g, mode, config)
            })
            .transpose()?;
        let interpolated = routes
            .oracle
            .then(|| oracle_polynomial(&g, mode, budget))
            .transpose()?;
        Ok((closed, engine, interpolated))
    };
    match run() {
        Ok((closed, engine, interpolated)) => {
            let present: Vec<&Polynomial> = [&closed, &engine, &interpolated]
                .into_iter()
                .flatten()
                .collect();
            let pass = present.windows(2).all(|w| w[0] == w[1]);
            CellReport {
                book,
                mode,
                closed,
                engine,
                interpolated,
                pass,
                error: None,
            }
        }
        Err(e) => CellReport {
            book,
            mode,
            closed: None,
            engine: None,
            interpolated: None,
            pass: false,
            error: Some(e.to_string()),
        },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub cells: Vec<CellReport>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.pass)
    }
}

/// Checks every (m, n, signature, mode) cell concurrently; cells come back
/// sorted by book then mode.
pub fn verify_matrix(
    ms: impl IntoIterator<Item = usize>,
    ns: impl IntoIterator<Item = usize> + Clone,
    routes: Routes,
    budget: u64,
) -> Result<VerifyReport> {
    let mut jobs = Vec::new();
    for m in ms {
        for n in ns.clone() {
            for sig in selectors(n) {
                let book = BookSpec::new(m, n, sig)?;
                for mode in EngineMode::BOTH {
                    jobs.push((book, mode));
                }
            }
        }
    }
    let mut cells: Vec<CellReport> = jobs
        .into_par_iter()
        .map(|(book, mode)| verify_cell(book, mode, routes, budget))
        .collect();
    cells.sort_by_key(|c| (c.book, c.mode));
    Ok(VerifyReport { cells })
}
