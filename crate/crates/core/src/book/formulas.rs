//! Closed forms for both chromatic polynomials of the signed book families.

use std::fmt;

use super::{BookSpec, Family, SigSelector};
use crate::error::{Error, Result};
use crate::poly::{gamma, sign_power, Polynomial};
use crate::EngineMode;

fn lam() -> Polynomial {
    Polynomial::lambda()
}

fn lm(c: i64) -> Polynomial {
    Polynomial::lambda_minus(c)
}

fn g(m: usize) -> Polynomial {
    gamma(m).expect("callers pass m >= 2")
}

/// Product of polynomial factors with exponents, for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factored {
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factored {
    fn new(factors: Vec<(Polynomial, u32)>) -> Self {
        Factored {
            factors: factors
                .into_iter()
                .filter(|(p, e)| *e > 0 && *p != Polynomial::one())
                .collect(),
        }
    }

    pub fn expand(&self) -> Polynomial {
        self.factors.iter().map(|(p, e)| p.pow(*e)).product()
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *p == lam() {
                f.write_str("l")?;
            } else {
                write!(f, "({p})")?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// (λ-1)^2 in chromatic mode, λ(λ-2) in zero-free mode: the digon factor.
fn digon_factor(mode: EngineMode) -> Polynomial {
    match mode {
        EngineMode::Chromatic => lm(1).pow(2),
        EngineMode::ZeroFree => lam() * lm(2),
    }
}

/// χ of B^uv(m,n) by the page recursion
/// χ(n) = (λ-1) γ_{m-1} χ(n-1) + (-1)^{m-2} D γ_m^{n-1},
/// where D is the digon factor and χ(1) is the unbalanced m-cycle.
pub fn uv_recursive(m: usize, n: usize, mode: EngineMode) -> Result<Polynomial> {
    check_uv(m, n)?;
    let mut chi = match mode {
        EngineMode::Chromatic => lm(1).pow(m as u32),
        EngineMode::ZeroFree => lam() * g(m + 1),
    };
    let step = lm(1) * g(m - 1);
    let tail = sign_power(m - 2) * digon_factor(mode);
    for k in 2..=n {
        chi = &step * &chi + &tail * g(m).pow(k as u32 - 1);
    }
    Ok(chi)
}

/// (λ-1) γ_{m-1} - γ_m, which works out to the unit (-1)^{m-1}.
pub fn uv_denominator(m: usize) -> Result<Polynomial> {
    if m < 3 {
        return Err(Error::InvalidSpec(format!("m = {m} < 3")));
    }
    Ok(lm(1) * g(m - 1) - g(m))
}

/// The non-recursive expression for B^uv(m,n), with its quotient taken by
/// exact polynomial division.
pub fn uv_closed_form(m: usize, n: usize, mode: EngineMode) -> Result<Polynomial> {
    check_uv(m, n)?;
    let e = (n - 1) as u32;
    let numerator = lm(1).pow(e) * g(m - 1).pow(e) - g(m).pow(e);
    let denominator = uv_denominator(m)?;
    let quotient = numerator.div_exact(&denominator).ok_or_else(|| {
        Error::InvalidSpec(format!(
            "closed form for B^uv({m},{n}) does not divide exactly"
        ))
    })?;
    let head = match mode {
        EngineMode::Chromatic => lm(1).pow((m + n - 1) as u32) * g(m - 1).pow(e),
        EngineMode::ZeroFree => lam() * lm(1).pow(e) * g(m - 1).pow(e) * g(m + 1),
    };
    Ok(head + sign_power(m - 2) * g(m) * digon_factor(mode) * quotient)
}

fn check_uv(m: usize, n: usize) -> Result<()> {
    if m < 3 || n < 1 {
        return Err(Error::InvalidSpec(format!(
            "B^uv(m,n) needs m >= 3 and n >= 1; got ({m},{n})"
        )));
    }
    Ok(())
}

/// Closed-form χ (or χ^b) of a signed family.
pub fn closed_chi(family: &Family, mode: EngineMode) -> Result<Polynomial> {
    if let Some(f) = closed_chi_factored(family, mode)? {
        return Ok(f.expand());
    }
    match *family {
        Family::Book(BookSpec {
            m,
            n,
            sig: SigSelector::Uv,
        }) => uv_recursive(m, n, mode),
        Family::Book(BookSpec {
            m,
            n,
            sig: SigSelector::Level(l),
        }) if l == n && n >= 2 => uv_recursive(m, n, mode),
        _ => unreachable!("every other family has a factored form"),
    }
}

/// Factored closed form where the family has one; `None` for B^uv(m,n)
/// and B_n(m,n) with n >= 2, which are only given by recursion.
pub fn closed_chi_factored(family: &Family, mode: EngineMode) -> Result<Option<Factored>> {
    use EngineMode::{Chromatic, ZeroFree};
    let out = match *family {
        Family::UnbalancedCycle { n } => {
            if n < 2 {
                return Err(Error::InvalidSpec(format!("C_n^- needs n >= 2, got {n}")));
            }
            match mode {
                Chromatic => vec![(lm(1), n as u32)],
                // (λ-1)^n - (-1)^n = λ γ_{n+1}
                ZeroFree => vec![(lam(), 1), (g(n + 1), 1)],
            }
        }
        Family::DigonBook { m, n } => {
            if m < 2 || n < 1 || (m == 2 && n != 1) {
                return Err(Error::InvalidSpec(format!("B_m^n undefined for ({m},{n})")));
            }
            let head = match mode {
                Chromatic => vec![(lm(1), 2)],
                ZeroFree => vec![(lam(), 1), (lm(2), 1)],
            };
            head.into_iter().chain([(g(m), n as u32)]).collect()
        }
        Family::Book(spec) => {
            spec.validate()?;
            let BookSpec { m, n, sig } = spec;
            let (m32, n32) = (m as u32, n as u32);
            match (sig, mode) {
                (SigSelector::Level(0), _) => vec![(lam(), 1), (lm(1), 1), (g(m), n32)],
                (SigSelector::Level(1), Chromatic) => vec![(lm(1), m32), (g(m), n32 - 1)],
                (SigSelector::Level(1), ZeroFree) => {
                    vec![(lam(), 1), (g(m), n32 - 1), (g(m + 1), 1)]
                }
                (SigSelector::Level(l), _) if l < n => {
                    vec![(g(m), (n - l) as u32), (uv_recursive(m, l, mode)?, 1)]
                }
                _ => return Ok(None),
            }
        }
    };
    Ok(Some(Factored::new(out)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn level_one_three_two() {
        let spec = BookSpec::level(3, 2, 1).unwrap();
        let chi = closed_chi(&Family::Book(spec), EngineMode::Chromatic).unwrap();
        assert_eq!(chi, lm(1).pow(3) * lm(2));
        assert_eq!(chi, p(&[2, -7, 9, -5, 1]));
        let f = closed_chi_factored(&Family::Book(spec), EngineMode::Chromatic)
            .unwrap()
            .unwrap();
        assert_eq!(f.to_string(), "(l - 1)^3 * (l - 2)");
    }

    #[test]
    fn uv_three_two() {
        let chi = closed_chi(
            &Family::Book(BookSpec::uv(3, 2).unwrap()),
            EngineMode::Chromatic,
        )
        .unwrap();
        assert_eq!(chi, lm(1).pow(4) - lm(2) * lm(1).pow(2));
        assert_eq!(chi.eval_i64(3), 12.into());
    }

    #[test]
    fn unsigned_book() {
        let chi = closed_chi(
            &Family::Book(BookSpec::level(4, 2, 0).unwrap()),
            EngineMode::Chromatic,
        )
        .unwrap();
        assert_eq!(chi, lam() * lm(1) * p(&[3, -3, 1]).pow(2));
    }

    #[test]
    fn zero_free_unbalanced_cycle() {
        let chi = closed_chi(&Family::UnbalancedCycle { n: 5 }, EngineMode::ZeroFree).unwrap();
        assert_eq!(chi, lm(1).pow(5) + Polynomial::one());
        for n in 2..10 {
            let direct = lm(1).pow(n as u32) - sign_power(n);
            let closed = closed_chi(&Family::UnbalancedCycle { n }, EngineMode::ZeroFree).unwrap();
            assert_eq!(closed, direct);
        }
    }

    #[test]
    fn uv_denominator_is_a_unit() {
        for m in 3..=10 {
            assert_eq!(uv_denominator(m).unwrap(), sign_power(m - 1));
        }
    }

    #[test]
    fn uv_closed_form_matches_recursion() {
        for m in 3..=7 {
            for n in 1..=5 {
                for mode in EngineMode::BOTH {
                    assert_eq!(
                        uv_closed_form(m, n, mode).unwrap(),
                        uv_recursive(m, n, mode).unwrap(),
                        "m={m} n={n} {mode}"
                    );
                }
            }
        }
    }

    #[test]
    fn seams() {
        for m in 3..=6 {
            for mode in EngineMode::BOTH {
                let b1 =
                    closed_chi(&Family::Book(BookSpec::level(m, 1, 1).unwrap()), mode).unwrap();
                let cyc = closed_chi(&Family::UnbalancedCycle { n: m }, mode).unwrap();
                assert_eq!(b1, cyc);
                assert_eq!(uv_recursive(m, 1, mode).unwrap(), cyc);
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(uv_recursive(3, 0, EngineMode::Chromatic).is_err());
        assert!(closed_chi(&Family::UnbalancedCycle { n: 1 }, EngineMode::Chromatic).is_err());
        assert!(closed_chi(&Family::DigonBook { m: 2, n: 3 }, EngineMode::Chromatic).is_err());
        assert!(closed_chi(
            &Family::Book(BookSpec {
                m: 3,
                n: 2,
                sig: SigSelector::Level(5)
            }),
            EngineMode::Chromatic
        )
        .is_err());
    }
}
