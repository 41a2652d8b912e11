//! Lagrange interpolation over the rationals, returning integer polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// The unique polynomial of degree at most `degree` through the first
/// `degree + 1` samples. Every further sample is checked as a residual, and
/// the coefficients must come out integral.
pub fn interpolate_poly(samples: &[(i64, BigInt)], degree: usize) -> Result<Polynomial> {
    if samples.len() < degree + 1 {
        return Err(Error::Interpolation(format!(
            "need {} samples for degree {degree}, got {}",
            degree + 1,
            samples.len()
        )));
    }
    let fit = &samples[..=degree];
    for (i, (x, _)) in fit.iter().enumerate() {
        if fit[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::Interpolation(format!("repeated sample point {x}")));
        }
    }

    let mut acc = vec![BigRational::zero(); degree + 1];
    for (i, (xi, yi)) in fit.iter().enumerate() {
        // basis_i(λ) = Π_{j≠i} (λ - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in fit.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(*xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(*xi)) - xj;
        }
        let weight = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in basis.into_iter().enumerate() {
            acc[k] += c * &weight;
        }
    }

    let mut coeffs = Vec::with_capacity(acc.len());
    for (k, c) in acc.into_iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!(
                "coefficient of l^{k} is {c}, not an integer"
            )));
        }
        coeffs.push(c.to_integer());
    }
    let poly = Polynomial::from_coeffs(coeffs);

    for (x, y) in &samples[degree + 1..] {
        let got = poly.eval_i64(*x);
        if &got != y {
            return Err(Error::Interpolation(format!(
                "sample at {x} is {y} but the fitted polynomial gives {got}"
            )));
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(pairs: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        pairs.iter().map(|&(x, y)| (x, BigInt::from(y))).collect()
    }

    #[test]
    fn square_of_shifted_lambda() {
        let p = interpolate_poly(&s(&[(1, 0), (3, 4), (5, 16)]), 2).unwrap();
        assert_eq!(p, Polynomial::lambda_minus(1).pow(2));
    }

    #[test]
    fn identity() {
        let p = interpolate_poly(&s(&[(1, 1), (2, 2)]), 1).unwrap();
        assert_eq!(p, Polynomial::lambda());
    }

    #[test]
    fn non_integer_coefficients_are_rejected() {
        // λ(λ-1)/2 through (0,0), (1,0), (2,1)
        let err = interpolate_poly(&s(&[(0, 0), (1, 0), (2, 1)]), 2).unwrap_err();
        assert!(matches!(err, Error::Interpolation(_)));
    }

    #[test]
    fn residual_mismatch_is_rejected() {
        let err = interpolate_poly(&s(&[(1, 1), (2, 2), (3, 4)]), 1).unwrap_err();
        assert!(matches!(err, Error::Interpolation(_)));
        assert!(interpolate_poly(&s(&[(1, 1), (2, 2), (3, 3)]), 1).is_ok());
    }

    #[test]
    fn too_few_or_repeated_samples() {
        assert!(interpolate_poly(&s(&[(1, 1)]), 1).is_err());
        assert!(interpolate_poly(&s(&[(1, 1), (1, 1)]), 1).is_err());
    }
}
