use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;

use super::MonomialIdeal;
use crate::partition::{Hook, Partition};
use crate::poly::{elementary_symmetric, elementary_symmetric_all, MvPoly};
use crate::series::binomial;

/// Tanisaki generators of the De Concini-Procesi ideal of `mu`:
/// every `e_r(S)` with `|S| = k >= 1` and `k >= r > k - delta_k(mu)`.
///
/// Listed by `k`, then `r`, then `S` in lex order; duplicates keep their
/// first occurrence.
pub fn tanisaki_generators(mu: &Partition) -> Vec<MvPoly> {
    let n = mu.n();
    let deltas = mu.deltas();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for k in 1..=n {
        let lowest = (k + 1).saturating_sub(deltas[k - 1]).max(1);
        for r in lowest..=k {
            for subset in (0..n).combinations(k) {
                let e = elementary_symmetric(&subset, r, n);
                if seen.insert(e.clone()) {
                    out.push(e);
                }
            }
        }
    }
    out
}

/// The hook decomposition `I = J + E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookSplit {
    pub hook: Hook,
    /// All squarefree monomials of degree `b + 1`.
    pub monomial_part: MonomialIdeal,
    /// `e_1, ..., e_b` in all `n` variables.
    pub symmetric_part: Vec<MvPoly>,
}

impl HookSplit {
    pub fn new(hook: Hook) -> Self {
        let n = hook.n();
        HookSplit {
            hook,
            monomial_part: MonomialIdeal::squarefree_power(n, hook.b + 1),
            symmetric_part: (1..=hook.b).map(|i| elementary_symmetric_all(i, n)).collect(),
        }
    }

    /// Monomial generators followed by `e_1, ..., e_b`.
    pub fn flatten(&self) -> Vec<MvPoly> {
        let mut all = self.monomial_part.to_polys();
        all.extend(self.symmetric_part.iter().cloned());
        all
    }

    /// `C(n, b+1) + b`.
    pub fn generator_count(&self) -> usize {
        self.monomial_part.gens().len() + self.symmetric_part.len()
    }
}

pub fn hook_split(hook: Hook) -> HookSplit {
    HookSplit::new(hook)
}

/// Generators of `I_mu`: the hook split when `mu` is a hook, the raw
/// Tanisaki list otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSet {
    Hook(HookSplit),
    General(Vec<MvPoly>),
}

impl GeneratorSet {
    pub fn for_partition(mu: &Partition) -> Self {
        match mu.as_hook() {
            Some(h) => GeneratorSet::Hook(HookSplit::new(h)),
            None => GeneratorSet::General(tanisaki_generators(mu)),
        }
    }

    pub fn flatten(&self) -> Vec<MvPoly> {
        match self {
            GeneratorSet::Hook(split) => split.flatten(),
            GeneratorSet::General(gens) => gens.clone(),
        }
    }
}

/// Predicted multiset of `|set(M)|` over the generators of `J`:
/// size `i` occurs `C(b+i, b)` times for `0 <= i <= a`.
pub fn set_size_multiset(hook: Hook) -> BTreeMap<usize, BigUint> {
    (0..=hook.a).map(|i| (i, binomial(hook.b + i, hook.b))).collect()
}
