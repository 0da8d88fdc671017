use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Monomial;
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients over `nvars` variables.
///
/// Terms are kept in a map ordered by index-lex with no zero coefficients, so
/// equality of polynomials is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MvPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MvPoly {
    pub fn zero(nvars: usize) -> Self {
        MvPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = MvPoly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// The variable `x{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var(nvars, i))
    }

    /// Builds a polynomial from integer-coefficient terms; duplicates are summed.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Monomial)>,
    {
        let mut p = MvPoly::zero(nvars);
        for (c, m) in terms {
            assert_eq!(m.nvars(), nvars, "monomial in the wrong ring");
            p.add_term(m, BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending index-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The common degree of all terms, or `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Returns the single monomial when the polynomial is one term with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &MvPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &MvPoly) -> Result<MvPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MvPoly) -> Result<MvPoly> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MvPoly) -> Result<MvPoly> {
        self.check_ring(other)?;
        let mut out = MvPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> MvPoly {
        if c.is_zero() {
            return MvPoly::zero(self.nvars);
        }
        MvPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> MvPoly {
        MvPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), -a)).collect(),
        }
    }

    /// Multiplies every term by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> MvPoly {
        MvPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Renders with `*` for products and `^` for powers, e.g. `x1^2 - x2^2`.
    pub fn to_m2_string(&self) -> String {
        self.to_string().replace(' ', "")
    }
}

fn fmt_coeff_prefix(c: &BigRational, is_const: bool) -> String {
    let abs = c.abs();
    if abs.is_one() && !is_const {
        String::new()
    } else if abs.is_integer() {
        format!("{}{}", abs.numer(), if is_const { "" } else { "*" })
    } else {
        format!("{}/{}{}", abs.numer(), abs.denom(), if is_const { "" } else { "*" })
    }
}

impl fmt::Display for MvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let prefix = fmt_coeff_prefix(c, m.is_one());
            if m.is_one() {
                write!(f, "{prefix}")?;
            } else {
                write!(f, "{prefix}{m}")?;
            }
        }
        Ok(())
    }
}

/// `e_r` in the variables listed in `subset` (0-based, any order).
///
/// Returns `1` for `r = 0` and `0` for `r > |subset|`.
pub fn elementary_symmetric(subset: &[usize], r: usize, nvars: usize) -> MvPoly {
    let sorted: Vec<usize> = subset.iter().copied().sorted().dedup().collect();
    let terms = sorted
        .into_iter()
        .combinations(r)
        .map(|c| (1, Monomial::from_support(nvars, &c)));
    MvPoly::from_terms(nvars, terms)
}

/// `e_r(x1, ..., xn)`.
pub fn elementary_symmetric_all(r: usize, nvars: usize) -> MvPoly {
    let all: Vec<usize> = (0..nvars).collect();
    elementary_symmetric(&all, r, nvars)
}

/// All monomials of degree `d` in `n` variables, ascending index-lex.
pub fn monomials_of_degree(n: usize, d: usize, squarefree_only: bool) -> Vec<Monomial> {
    if squarefree_only {
        (0..n)
            .combinations(d)
            .map(|c| Monomial::from_support(n, &c))
            .collect()
    } else {
        (0..n)
            .combinations_with_replacement(d)
            .map(|c| Monomial::from_support(n, &c))
            .collect()
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
