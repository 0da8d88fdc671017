use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, MvPoly};

/// Largest ring handled by the exhaustive minimal-prime search.
pub const MAX_EXHAUSTIVE_VARS: usize = 20;

/// Monomial ideal with a minimal generating set, kept in ascending index-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the given generators: drops duplicates and anything divisible
    /// by another generator.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            assert_eq!(g.nvars(), nvars, "generator {g} in the wrong ring");
        }
        all.sort_by_key(|m| (m.degree(), m.clone()));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort();
        MonomialIdeal { nvars, gens: kept }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    /// All squarefree monomials of degree `d` in `n` variables.
    pub fn squarefree_power(n: usize, d: usize) -> Self {
        MonomialIdeal::new(n, monomials_of_degree(n, d, true))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True when every generator is a single variable (the zero ideal counts).
    pub fn is_generated_by_variables(&self) -> bool {
        self.gens.iter().all(|g| g.degree() == 1)
    }

    /// Common generator degree, if there is one.
    pub fn generator_degree(&self) -> Option<u32> {
        let first = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == first).then_some(first)
    }

    pub fn to_polys(&self) -> Vec<MvPoly> {
        self.gens.iter().cloned().map(MvPoly::from_monomial).collect()
    }

    /// `I : m`, generated by `lcm(g, m) / m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.lcm(m).div(m).expect("m divides lcm(g, m)"));
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Minimal primes of a squarefree monomial ideal as ascending lists of
    /// 0-based variable indices: the minimal vertex covers of its generators.
    ///
    /// Subsets are scanned by increasing size and supersets of covers already
    /// found are skipped, so every cover found is minimal.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<usize>>> {
        assert!(self.is_squarefree(), "minimal_primes needs a squarefree ideal");
        let n = self.nvars;
        if n > MAX_EXHAUSTIVE_VARS {
            return Err(Error::TooLarge { nvars: n, max: MAX_EXHAUSTIVE_VARS });
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let masks: Vec<u64> = self.gens.iter().map(Monomial::support_mask).collect();
        let mut covers: Vec<u64> = Vec::new();
        for size in 0..=n {
            for subset in (0..n).combinations(size) {
                let s = subset.iter().fold(0u64, |acc, &i| acc | (1 << i));
                if covers.iter().any(|&c| c & s == c) {
                    continue;
                }
                if masks.iter().all(|&g| g & s != 0) {
                    covers.push(s);
                }
            }
        }
        Ok(covers
            .into_iter()
            .map(|c| (0..n).filter(|i| c & (1 << i) != 0).collect())
            .collect())
    }

    /// Alexander dual: one generator per minimal prime, the product of its variables.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let primes = self.minimal_primes()?;
        Ok(MonomialIdeal::new(
            self.nvars,
            primes.iter().map(|p| Monomial::from_support(self.nvars, p)),
        ))
    }

    /// Height of the ideal: the smallest minimal prime.
    pub fn height(&self) -> Result<usize> {
        self.minimal_primes()?
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(Error::UnitIdeal)
    }

    /// `dim R/I = n - height(I)`.
    pub fn krull_dim_quotient(&self) -> Result<usize> {
        Ok(self.nvars - self.height()?)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().join(", "))
    }
}

/// The colon ideals of an ordered generating set, one per generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotients {
    /// Generators in the order used, ascending index-lex.
    pub order: Vec<Monomial>,
    /// `colons[i] = (M_1, ..., M_{i-1}) : M_i`; the first is the zero ideal.
    pub colons: Vec<MonomialIdeal>,
}

impl LinearQuotients {
    pub fn is_linear(&self) -> bool {
        self.colons.iter().all(MonomialIdeal::is_generated_by_variables)
    }

    /// `|set(M_i)|` for each generator, when every colon is generated by variables.
    pub fn set_sizes(&self) -> Option<Vec<usize>> {
        self.is_linear()
            .then(|| self.colons.iter().map(|c| c.gens().len()).collect())
    }

    /// Variable indices (0-based) generating each colon, when linear.
    pub fn sets(&self) -> Option<Vec<Vec<usize>>> {
        self.is_linear().then(|| {
            self.colons
                .iter()
                .map(|c| c.gens().iter().flat_map(|g| g.support()).collect())
                .collect()
        })
    }
}

/// Orders the generators ascending index-lex and computes each successive colon.
pub fn linear_quotients_lex(ideal: &MonomialIdeal) -> LinearQuotients {
    if ideal.generator_degree().is_none() && !ideal.is_zero() {
        log::warn!("linear quotient test on an ideal with mixed generator degrees: {ideal}");
    }
    let order = ideal.gens().to_vec();
    let colons = (0..order.len())
        .map(|i| MonomialIdeal::new(ideal.nvars(), order[..i].iter().cloned()).colon(&order[i]))
        .collect();
    LinearQuotients { order, colons }
}
