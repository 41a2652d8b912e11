//! Signed book graphs B(m,n): n cycles of length m sharing the edge uv.
//!
//! Vertex numbering is fixed: `u = 0`, `v = 1`, then page by page the
//! internal vertices `u_1^i .. u_{m-2}^i`. Edge 0 is `uv`; page `i` then
//! contributes its path `u u_1^i ... u_{m-2}^i v` in order, so the edge
//! `u u_1^i` has index `1 + (i-1)(m-1)`.

mod classes;
mod formulas;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, Signature, SignedMultigraph};

pub use classes::{
    book_automorphisms, chromatic_number_formula, enumerate_switching_classes, negative_page_count,
    SwitchingClass, DEFAULT_CLASS_EDGE_LIMIT,
};
pub use formulas::{
    closed_chi, closed_chi_factored, uv_closed_form, uv_denominator, uv_recursive, Factored,
};

pub const U: usize = 0;
pub const V: usize = 1;

/// Which signature a book carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigSelector {
    /// σ_l = {u u_1^1, .., u u_1^l}
    Level(usize),
    /// {uv}
    Uv,
}

impl fmt::Display for SigSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigSelector::Level(l) => write!(f, "{l}"),
            SigSelector::Uv => f.write_str("uv"),
        }
    }
}

impl FromStr for SigSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "uv" {
            return Ok(SigSelector::Uv);
        }
        s.parse().map(SigSelector::Level).map_err(|_| {
            Error::InvalidSpec(format!("signature selector `{s}` is not `uv` or a level"))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BookSpec {
    pub m: usize,
    pub n: usize,
    pub sig: SigSelector,
}

impl BookSpec {
    pub fn new(m: usize, n: usize, sig: SigSelector) -> Result<Self> {
        let spec = BookSpec { m, n, sig };
        spec.validate()?;
        Ok(spec)
    }

    pub fn level(m: usize, n: usize, l: usize) -> Result<Self> {
        Self::new(m, n, SigSelector::Level(l))
    }

    pub fn uv(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, SigSelector::Uv)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 3 {
            return Err(Error::InvalidSpec(format!(
                "page length m = {} < 3",
                self.m
            )));
        }
        if self.n < 1 {
            return Err(Error::InvalidSpec("a book needs at least one page".into()));
        }
        if let SigSelector::Level(l) = self.sig {
            if l > self.n {
                return Err(Error::InvalidSpec(format!(
                    "level l = {l} exceeds page count n = {}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.n * (self.m - 2)
    }

    pub fn edge_count(&self) -> usize {
        1 + self.n * (self.m - 1)
    }

    pub fn signature(&self) -> Signature {
        match self.sig {
            SigSelector::Uv => Signature::new([0]),
            SigSelector::Level(l) => Signature::new((1..=l).map(|i| page_edge(self.m, i, 0))),
        }
    }
}

impl fmt::Display for BookSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sig {
            SigSelector::Level(l) => write!(f, "B_{l}({},{})", self.m, self.n),
            SigSelector::Uv => write!(f, "B^uv({},{})", self.m, self.n),
        }
    }
}

/// Index of the `j`-th edge (0-based, from u) of page `i` (1-based).
pub fn page_edge(m: usize, i: usize, j: usize) -> usize {
    1 + (i - 1) * (m - 1) + j
}

/// Vertex id of `u_j^i` (both 1-based).
pub fn page_vertex(m: usize, i: usize, j: usize) -> usize {
    2 + (i - 1) * (m - 2) + (j - 1)
}

/// Appends `n` pages of length `m` between `u` and `v`.
fn add_pages(g: &mut SignedMultigraph, m: usize, n: usize) -> Result<()> {
    for i in 1..=n {
        let mut prev = U;
        for j in 1..=m - 2 {
            let w = page_vertex(m, i, j);
            g.set_label(w, format!("u_{j}^{i}"))?;
            g.add_edge(prev, w, Sign::Positive)?;
            prev = w;
        }
        g.add_edge(prev, V, Sign::Positive)?;
    }
    Ok(())
}

pub fn build_book(spec: &BookSpec) -> Result<SignedMultigraph> {
    spec.validate()?;
    let mut g = SignedMultigraph::new(spec.vertex_count());
    g.set_label(U, "u")?;
    g.set_label(V, "v")?;
    g.add_edge(U, V, Sign::Positive)?;
    add_pages(&mut g, spec.m, spec.n)?;
    g.with_signature(&spec.signature())
}

/// C_n^-: the cycle `0 1 .. n-1` whose closing edge `(0, n-1)` is negative.
/// For n = 2 this is the digon `+/-` on vertices 0 and 1.
pub fn build_unbalanced_cycle(n: usize) -> Result<SignedMultigraph> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!(
            "unbalanced cycle needs n >= 2, got {n}"
        )));
    }
    let mut g = SignedMultigraph::new(n);
    for i in 0..n - 1 {
        g.add_edge(i, i + 1, Sign::Positive)?;
    }
    g.add_edge(0, n - 1, Sign::Negative)?;
    Ok(g)
}

/// B_m^n: the book B(m,n) with `uv` replaced by the digon `uv+`, `uv-`.
/// `m = 2` is allowed only for a single page, where it is C_2^-.
pub fn build_digon_book(m: usize, n: usize) -> Result<SignedMultigraph> {
    if m < 2 || n < 1 {
        return Err(Error::InvalidSpec(format!(
            "digon book needs m >= 2, n >= 1; got ({m},{n})"
        )));
    }
    if m == 2 {
        if n != 1 {
            return Err(Error::InvalidSpec("B_2^n is only defined for n = 1".into()));
        }
        return build_unbalanced_cycle(2);
    }
    let mut g = SignedMultigraph::new(2 + n * (m - 2));
    g.set_label(U, "u")?;
    g.set_label(V, "v")?;
    g.add_edge(U, V, Sign::Positive)?;
    g.add_edge(U, V, Sign::Negative)?;
    add_pages(&mut g, m, n)?;
    Ok(g)
}

/// Every signed family with a closed-form polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// C_n^-
    UnbalancedCycle {
        n: usize,
    },
    /// B_m^n
    DigonBook {
        m: usize,
        n: usize,
    },
    Book(BookSpec),
}

impl Family {
    pub fn build(&self) -> Result<SignedMultigraph> {
        match *self {
            Family::UnbalancedCycle { n } => build_unbalanced_cycle(n),
            Family::DigonBook { m, n } => build_digon_book(m, n),
            Family::Book(spec) => build_book(&spec),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::UnbalancedCycle { n } => write!(f, "C_{n}^-"),
            Family::DigonBook { m, n } => write!(f, "B_{m}^{n}"),
            Family::Book(spec) => spec.fmt(f),
        }
    }
}
