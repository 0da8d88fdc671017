use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{hilbert_oracle, nzd_sequence_truncated, total_dimension};
use crate::error::{Error, Result};
use crate::ideal::{hook_split, linear_quotients_lex, set_size_multiset, tanisaki_generators, MonomialIdeal};
use crate::partition::{Hook, Partition};
use crate::series::{
    betti_table, binomial, euler_identity_check, factorial, hilbert_hook, poincare_hook,
    regularity_from_table, regularity_hook, UniSeries,
};

/// One comparison between a closed form and an independent computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub got: String,
}

impl Check {
    fn compare(name: &str, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check { name: name.into(), pass: expected == got, expected, got }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hook: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    pub checks: Vec<Check>,
    pub dmax: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match (&self.hook, &self.partition) {
            (Some([a, b]), _) => out.push_str(&format!("hook ({a} | {b}), dmax = {}\n", self.dmax)),
            (None, Some(p)) => out.push_str(&format!("partition {p:?}, dmax = {}\n", self.dmax)),
            _ => {}
        }
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}: expected {}, got {}\n", c.name, c.expected, c.got));
        }
        out
    }
}

fn dims_as_series(dims: &[usize]) -> UniSeries {
    UniSeries::new(dims.iter().map(|&d| BigInt::from(d)).collect())
}

/// Runs every closed-form check for a hook against the oracle.
///
/// `dmax` must be at least `b(b+1)/2 + 1`; the nonzerodivisor checks are
/// verified up to degree `dmax` only.
pub fn verify_hook(h: Hook, dmax: usize) -> Result<VerificationReport> {
    let top = regularity_hook(h);
    if dmax < top + 1 {
        return Err(Error::TruncationTooSmall { need: top + 1, got: dmax });
    }
    let n = h.n();
    let split = hook_split(h);
    let gens = split.flatten();
    let j = &split.monomial_part;
    let mut checks = Vec::new();

    let closed = hilbert_hook(h);
    let oracle = hilbert_oracle(&gens, n, dmax)?;
    let mut got = dims_as_series(&oracle.dims).to_string();
    if !oracle.stabilized_zero {
        got.push_str(&format!(" + O(q^{})", dmax + 1));
    }
    checks.push(Check::compare("hilbert_series", &closed, got));

    let expected_total = factorial(n) / factorial(h.a + 1);
    let got_total = match total_dimension(&gens, n, dmax) {
        Ok(t) => t.to_string(),
        Err(e) => e.to_string(),
    };
    checks.push(Check::compare("total_dimension", expected_total, got_total));

    let table = betti_table(&poincare_hook(h))?;
    checks.push(Check::compare(
        "first_betti_number",
        binomial(n, h.b + 1) + h.b,
        table.total(1),
    ));

    let predicted: Vec<String> = set_size_multiset(h)
        .into_iter()
        .map(|(size, count)| format!("{size}:{count}"))
        .collect();
    let lq = linear_quotients_lex(j);
    let got_sizes = match lq.set_sizes() {
        Some(sizes) => {
            let mut counts = std::collections::BTreeMap::<usize, usize>::new();
            for s in sizes {
                *counts.entry(s).or_default() += 1;
            }
            counts.iter().map(|(s, c)| format!("{s}:{c}")).collect::<Vec<_>>().join(" ")
        }
        None => "not linear".to_string(),
    };
    checks.push(Check::compare("set_sizes", predicted.join(" "), got_sizes));

    checks.push(Check::compare("euler_identity", true, euler_identity_check(h)));

    checks.push(Check::compare("krull_dim_j", h.b, j.krull_dim_quotient()?));

    let dual = j.alexander_dual()?;
    let expected_dual = MonomialIdeal::squarefree_power(n, n - h.b);
    checks.push(Check {
        name: "alexander_dual".into(),
        pass: dual == expected_dual,
        expected: format!("all squarefree monomials of degree {}", n - h.b),
        got: describe_dual(&dual),
    });

    let failed: Vec<String> = nzd_sequence_truncated(&j.to_polys(), &split.symmetric_part, n, dmax)?
        .into_iter()
        .enumerate()
        .filter(|(_, ok)| !ok)
        .map(|(i, _)| format!("e_{}", i + 1))
        .collect();
    let got = if failed.is_empty() {
        format!("verified up to degree {dmax}")
    } else {
        format!("zerodivisor: {}", failed.join(", "))
    };
    checks.push(Check::compare("regular_sequence", format!("verified up to degree {dmax}"), got));

    checks.push(Check::compare("regularity", top, regularity_from_table(&table)));

    Ok(VerificationReport { hook: Some([h.a, h.b]), partition: None, checks, dmax })
}

fn describe_dual(dual: &MonomialIdeal) -> String {
    match dual.generator_degree() {
        Some(d) if dual.is_squarefree() && *dual == MonomialIdeal::squarefree_power(dual.nvars(), d as usize) => {
            format!("all squarefree monomials of degree {d}")
        }
        _ => dual.to_string(),
    }
}

/// Total dimension of `R/I_mu` from the Tanisaki generators against the multinomial.
pub fn verify_dimension(mu: &Partition, hard_cap: usize) -> Result<VerificationReport> {
    let gens = tanisaki_generators(mu);
    let got = match total_dimension(&gens, mu.n(), hard_cap) {
        Ok(t) => t.to_string(),
        Err(e) => e.to_string(),
    };
    let checks = vec![Check::compare("total_dimension", mu.multinomial(), got)];
    Ok(VerificationReport {
        hook: None,
        partition: Some(mu.parts()[..mu.length()].to_vec()),
        checks,
        dmax: hard_cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hooks_pass() {
        for (h, dmax) in [(Hook::new(2, 1), 3), (Hook::new(1, 2), 4), (Hook::new(0, 0), 1)] {
            let report = verify_hook(h, dmax).unwrap();
            assert_eq!(report.checks.len(), 9);
            assert!(report.all_passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn truncation_guard() {
        assert_eq!(
            verify_hook(Hook::new(0, 2), 3),
            Err(Error::TruncationTooSmall { need: 4, got: 3 })
        );
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify_hook(Hook::new(2, 1), 3).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"hook":[2,1],"checks":[{"name":"hilbert_series","pass":true"#));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn dimension_only() {
        let report = verify_dimension(&Partition::new(&[2, 2]).unwrap(), 12).unwrap();
        assert!(report.all_passed(), "{}", report.render_text());
    }
}
