use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in one variable, or a power series known up to `truncation`.
///
/// Coefficients are indexed by degree. Exact polynomials carry no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniSeries {
    coeffs: Vec<BigInt>,
    truncation: Option<usize>,
}

impl UniSeries {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut s = UniSeries { coeffs, truncation: None };
        s.normalize();
        s
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// A series whose coefficients are known only up to degree `max_degree`.
    pub fn truncated(mut coeffs: Vec<BigInt>, max_degree: usize) -> Self {
        coeffs.truncate(max_degree + 1);
        let mut s = UniSeries { coeffs, truncation: Some(max_degree) };
        s.normalize();
        s
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// `c * x^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    fn normalize(&mut self) {
        if let Some(t) = self.truncation {
            self.coeffs.truncate(t + 1);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// Drops the truncation marker, treating the known coefficients as exact.
    pub fn into_polynomial(mut self) -> Self {
        self.truncation = None;
        self
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest nonzero known coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn combined_truncation(&self, other: &Self) -> Option<usize> {
        match (self.truncation, other.truncation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        let mut s = UniSeries { coeffs, truncation: self.combined_truncation(other) };
        s.normalize();
        s
    }

    pub fn neg(&self) -> Self {
        UniSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), truncation: self.truncation }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut s = UniSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            truncation: self.truncation,
        };
        s.normalize();
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        let truncation = self.combined_truncation(other);
        if self.is_zero() || other.is_zero() {
            return UniSeries { coeffs: Vec::new(), truncation };
        }
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(t) = truncation {
            len = len.min(t + 1);
        }
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        let mut s = UniSeries { coeffs, truncation };
        s.normalize();
        s
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(UniSeries::one(), |acc, _| acc.mul(self))
    }

    /// Exact division of polynomials; fails if there is a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let lead = divisor.coeffs.last().ok_or(Error::InexactDivision)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if rem.is_empty() { Ok(UniSeries::zero()) } else { Err(Error::InexactDivision) };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(UniSeries::new(quot))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Renders in the variable `var`, e.g. `1 + 3q - q^2`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if d == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            match d {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{d}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        if let Some(t) = self.truncation {
            out.push_str(&format!(" + O({var}^{})", t + 1));
        }
        out
    }
}

impl fmt::Display for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_rendering() {
        let p = UniSeries::from_i64(&[1, 1]);
        assert_eq!(p.pow(2), UniSeries::from_i64(&[1, 2, 1]));
        assert_eq!(UniSeries::from_i64(&[1, 3]).to_string(), "1 + 3q");
        assert_eq!(UniSeries::from_i64(&[1, -1, -6]).render("t"), "1 - t - 6t^2");
        assert_eq!(UniSeries::zero().to_string(), "0");
        assert_eq!(UniSeries::from_i64(&[0, 0, 0]), UniSeries::zero());
    }

    #[test]
    fn exact_division() {
        let a = UniSeries::from_i64(&[1, 2, 1]);
        assert_eq!(a.div_exact(&UniSeries::from_i64(&[1, 1])).unwrap(), UniSeries::from_i64(&[1, 1]));
        assert_eq!(
            UniSeries::from_i64(&[1, 0, 1]).div_exact(&UniSeries::from_i64(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(
            UniSeries::from_i64(&[1, 1]).div_exact(&UniSeries::from_i64(&[0, 2])),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn truncated_products() {
        let geo = UniSeries::truncated(vec![BigInt::one(); 6], 5);
        let one_minus = UniSeries::from_i64(&[1, -1]);
        let prod = geo.mul(&one_minus);
        assert_eq!(prod.truncation(), Some(5));
        assert_eq!(prod.into_polynomial(), UniSeries::one());
    }
}
