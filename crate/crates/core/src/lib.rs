//! Chromatic polynomials of signed graphs.
//!
//! The crate counts proper signed colorings exactly, computes the
//! chromatic polynomial χ_Σ(λ) and the zero-free chromatic polynomial
//! χ^b_Σ(λ) by signed deletion-contraction, and carries closed forms for
//! the switching classes of signed book graphs together with the tooling
//! to cross-check all three routes.

pub mod book;
pub mod coloring;
pub mod engine;
pub mod error;
pub mod graph;
pub mod interpolate;
pub mod poly;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};
pub use graph::{Sign, Signature, SignedMultigraph};
pub use poly::Polynomial;

/// Which polynomial is being computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EngineMode {
    /// χ_Σ, counting colorings in `{-k..k}` at λ = 2k+1.
    Chromatic,
    /// χ^b_Σ, counting colorings in `{-k..-1, 1..k}` at λ = 2k.
    ZeroFree,
}

impl EngineMode {
    pub const BOTH: [EngineMode; 2] = [EngineMode::Chromatic, EngineMode::ZeroFree];

    /// The λ at which this mode's polynomial counts colorings of radius `k`.
    pub fn lambda_for(self, k: u32) -> u32 {
        match self {
            EngineMode::Chromatic => 2 * k + 1,
            EngineMode::ZeroFree => 2 * k,
        }
    }

    /// Whether λ has the parity at which this mode counts colorings.
    pub fn counts_at(self, lambda: i64) -> bool {
        match self {
            EngineMode::Chromatic => lambda.rem_euclid(2) == 1,
            EngineMode::ZeroFree => lambda.rem_euclid(2) == 0,
        }
    }
}

impl fmt::Display for EngineMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineMode::Chromatic => "chromatic",
            EngineMode::ZeroFree => "zero-free",
        })
    }
}

impl FromStr for EngineMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chromatic" => Ok(EngineMode::Chromatic),
            "zero-free" | "zerofree" => Ok(EngineMode::ZeroFree),
            other => Err(Error::InvalidSpec(format!("unknown mode `{other}`"))),
        }
    }
}
