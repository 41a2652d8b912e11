//! Exact univariate polynomials over the integers, in the variable λ
//! (rendered as `l`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient `i` belongs to `λ^i`. There is never a trailing zero, so
/// the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// λ
    pub fn lambda() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// λ - c
    pub fn lambda_minus(c: i64) -> Self {
        Self::from_i64s(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Quotient when `divisor` divides `self` exactly over the integers.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let d_deg = divisor.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let n_deg = self.degree()?;
        if n_deg < d_deg {
            return None;
        }
        let mut quot = vec![BigInt::zero(); n_deg - d_deg + 1];
        for shift in (0..=n_deg - d_deg).rev() {
            let top = &rem[shift + d_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Polynomial::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Coefficients as JSON numbers, ascending powers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomials always serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidSpec(format!("bad polynomial JSON: {e}")))
    }

    /// Renders with a caller-chosen variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let var_part = match power {
                0 => String::new(),
                1 => var.to_string(),
                p => format!("{var}^{p}"),
            };
            if power == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var_part);
            } else {
                out.push_str(&format!("{mag}*{var_part}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("l"))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(small) => seq.serialize_element(&small)?,
                None => {
                    let num: serde_json::Number =
                        c.to_string().parse().map_err(serde::ser::Error::custom)?;
                    seq.serialize_element(&num)?;
                }
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<serde_json::Number> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|n| {
                n.to_string()
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("coefficient `{n}` is not an integer")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

/// `(-1)^e` as a constant polynomial.
pub fn sign_power(e: usize) -> Polynomial {
    Polynomial::constant(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// γ_m = χ_{C_m}(λ) / (λ(λ-1)) as the alternating sum
/// Σ_{i=0}^{m-2} (-1)^i (λ-1)^{m-2-i}, degree m - 2.
pub fn gamma(m: usize) -> Result<Polynomial> {
    if m < 2 {
        return Err(Error::InvalidSpec(format!("gamma needs m >= 2, got {m}")));
    }
    let shifted = Polynomial::lambda_minus(1);
    Ok((0..=m - 2)
        .map(|i| sign_power(i) * shifted.pow((m - 2 - i) as u32))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn eval_and_mul() {
        let sq = Polynomial::lambda_minus(1).pow(2);
        assert_eq!(sq.eval_i64(3), BigInt::from(4));
        assert_eq!(
            Polynomial::lambda_minus(1) * Polynomial::lambda_minus(1),
            p(&[1, -2, 1])
        );
        assert_eq!(Polynomial::lambda_minus(2).pow(0), Polynomial::one());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[-1, 3, -3, 1]).to_string(), "l^3 - 3*l^2 + 3*l - 1");
        assert_eq!(p(&[1, -2, 1]).to_string(), "l^2 - 2*l + 1");
        assert_eq!(p(&[0, -2, 1]).to_string(), "l^2 - 2*l");
        assert_eq!(p(&[0, 1]).to_string(), "l");
        assert_eq!(p(&[1, 0, -1]).to_string(), "-l^2 + 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-7]).to_string(), "-7");
    }

    #[test]
    fn json_is_ascending_coefficients() {
        assert_eq!(p(&[0, 1]).to_json().to_string(), "[0,1]");
        let big = Polynomial::constant(BigInt::from(10).pow(30)) * Polynomial::lambda();
        let text = big.to_json().to_string();
        assert_eq!(text, "[0,1000000000000000000000000000000]");
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, big);
        assert!(serde_json::from_str::<Polynomial>("[1.5]").is_err());
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, -2, 1]);
        assert_eq!(
            a.div_exact(&Polynomial::lambda_minus(1)),
            Some(Polynomial::lambda_minus(1))
        );
        assert_eq!(a.div_exact(&Polynomial::lambda()), None);
        assert_eq!(
            p(&[2, 4]).div_exact(&Polynomial::constant(2)),
            Some(p(&[1, 2]))
        );
        assert_eq!(p(&[1, 4]).div_exact(&Polynomial::constant(2)), None);
        assert_eq!(a.div_exact(&Polynomial::zero()), None);
    }

    #[test]
    fn gamma_small_cases() {
        assert_eq!(gamma(2).unwrap(), Polynomial::one());
        assert_eq!(gamma(3).unwrap(), p(&[-2, 1]));
        assert_eq!(gamma(4).unwrap(), p(&[3, -3, 1]));
        assert!(gamma(1).is_err());
    }

    #[test]
    fn gamma_matches_division_form() {
        for m in 2..=12 {
            let top = Polynomial::lambda_minus(1).pow(m as u32 - 1) - sign_power(m - 1);
            let by_division = top.div_exact(&Polynomial::lambda()).unwrap();
            let g = gamma(m).unwrap();
            assert_eq!(g, by_division, "m = {m}");
            assert_eq!(g.degree(), Some(m - 2));
            // γ_m = χ_{C_m} / (λ(λ-1))
            let cycle = Polynomial::lambda_minus(1).pow(m as u32)
                + sign_power(m) * Polynomial::lambda_minus(1);
            let denom = Polynomial::lambda() * Polynomial::lambda_minus(1);
            if m >= 3 {
                assert_eq!(cycle.div_exact(&denom).unwrap(), g);
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|c| Polynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_homomorphism_under_eval(a in arb_poly(), b in arb_poly(), x in -20i64..20) {
            prop_assert_eq!((&a + &b).eval_i64(x), a.eval_i64(x) + b.eval_i64(x));
            prop_assert_eq!((&a - &b).eval_i64(x), a.eval_i64(x) - b.eval_i64(x));
            prop_assert_eq!((&a * &b).eval_i64(x), a.eval_i64(x) * b.eval_i64(x));
            prop_assert_eq!(a.pow(3).eval_i64(x), a.eval_i64(x).pow(3));
        }

        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            prop_assert_eq!(Polynomial::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
