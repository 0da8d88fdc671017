use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UniSeries;

/// Integer polynomial in `q` and `t`, keyed by `(q-exponent, t-exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    /// `c * q^i * t^j`.
    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// `1 + q t^m`.
    pub fn one_plus_qt(m: u32) -> Self {
        BiPoly::one().add(&BiPoly::monomial(BigInt::one(), 1, m))
    }

    pub fn from_terms(terms: &[(i64, u32, u32)]) -> Self {
        let mut p = BiPoly::zero();
        for &(c, i, j) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms ordered by `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.coeffs {
            out.add_term(i, j, a * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.coeffs {
            for (&(i2, j2), b) in &other.coeffs {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(BiPoly::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes `q = value`, leaving a polynomial in `t`.
    pub fn eval_q(&self, value: &BigInt) -> UniSeries {
        let max_j = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut out = vec![BigInt::zero(); max_j + 1];
        for (&(i, j), c) in &self.coeffs {
            out[j as usize] += c * num_traits::pow(value.clone(), i as usize);
        }
        UniSeries::new(out)
    }

    /// Substitutes `t = 1`, leaving a polynomial in `q`.
    pub fn eval_t_one(&self) -> UniSeries {
        let max_i = self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0) as usize;
        let mut out = vec![BigInt::zero(); max_i + 1];
        for (&(i, _), c) in &self.coeffs {
            out[i as usize] += c;
        }
        UniSeries::new(out)
    }

    /// Multiplies by `q^i t^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        BiPoly { coeffs: self.coeffs.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect() }
    }

    /// Embeds a polynomial in `t` as `q^i * p(t)`.
    pub fn from_t_poly(p: &UniSeries, i: u32) -> Self {
        let mut out = BiPoly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(i, j as u32, c.clone());
        }
        out
    }

    /// Renders with implicit products, e.g. `1 + qt + 6qt^2 + 14q^2t^3`.
    pub fn render(&self) -> String {
        self.render_with(false)
    }

    /// Renders with explicit `*` for computer-algebra input.
    pub fn render_m2(&self) -> String {
        self.render_with(true)
    }

    fn render_with(&self, explicit: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let star = if explicit { "*" } else { "" };
        let sep_plus = if explicit { "+" } else { " + " };
        let sep_minus = if explicit { "-" } else { " - " };
        let mut out = String::new();
        for (k, (&(i, j), c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(sep_minus),
                (_, false) => out.push_str(sep_plus),
            }
            let mut factors: Vec<String> = Vec::new();
            let abs = c.abs();
            if (i, j) == (0, 0) || !abs.is_one() {
                factors.push(abs.to_string());
            }
            let var = |name: &str, e: u32| match e {
                0 => None,
                1 => Some(name.to_string()),
                _ => Some(format!("{name}^{e}")),
            };
            factors.extend(var("q", i));
            factors.extend(var("t", j));
            out.push_str(&factors.join(star));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_rendering() {
        let p = BiPoly::one_plus_qt(1).mul(&BiPoly::one_plus_qt(2));
        assert_eq!(p, BiPoly::from_terms(&[(1, 0, 0), (1, 1, 1), (1, 1, 2), (1, 2, 3)]));
        assert_eq!(p.render(), "1 + qt + qt^2 + q^2t^3");
        assert_eq!(p.render_m2(), "1+q*t+q*t^2+q^2*t^3");
        assert_eq!(p.eval_q(&BigInt::from(-1)), UniSeries::from_i64(&[1, -1, -1, 1]));
        assert_eq!(p.eval_t_one(), UniSeries::from_i64(&[1, 2, 1]));
        let neg = BiPoly::from_terms(&[(-3, 1, 0)]);
        assert_eq!(neg.render(), "-3q");
    }
}
