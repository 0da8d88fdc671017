//! Graded Betti tables read off a Poincare series, and their renderings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::BiPoly;
use crate::error::{Error, Result};
use crate::partition::Hook;

/// `beta_{i,j}` for `R/I`, keyed by homological degree `i` and internal degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(u32, u32), BigUint>,
}

/// Reads `beta_{i,j}` as the coefficient of `q^i t^j`.
///
/// Fails unless every coefficient is nonnegative and the `q^0` part is exactly `1`.
pub fn betti_table(p: &BiPoly) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    for (i, j, c) in p.terms() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient { i, j, coeff: c.to_string() });
        }
        if i == 0 && (j != 0 || !c.is_one()) {
            return Err(Error::BadDegreeZeroPart(p.render()));
        }
        entries.insert((i, j), c.magnitude().clone());
    }
    if !entries.contains_key(&(0, 0)) {
        return Err(Error::BadDegreeZeroPart(p.render()));
    }
    Ok(BettiTable { entries })
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> u32 {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total Betti number `beta_i = sum_j beta_{i,j}`.
    pub fn total(&self, i: u32) -> BigUint {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> u32 {
        self.entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0)
    }

    fn grid(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let header: Vec<String> = (0..=pd).map(|i| i.to_string()).collect();
        let rows = (0..=reg)
            .map(|r| {
                (0..=pd)
                    .map(|i| {
                        let v = self.get(i, i + r);
                        if v.is_zero() { ".".to_string() } else { v.to_string() }
                    })
                    .collect()
            })
            .collect();
        (header, rows)
    }

    fn render_grid(labels: &[String], header: &[String], rows: &[Vec<String>], header_label: &str) -> String {
        let label_width = labels.iter().map(String::len).max().unwrap_or(0).max(header_label.len());
        let widths: Vec<usize> = (0..header.len())
            .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(1))
            .collect();
        let line = |label: &str, cells: &[String]| {
            let mut s = format!("{label:>label_width$}");
            for (cell, w) in cells.iter().zip(&widths) {
                s.push(' ');
                s.push_str(&format!("{cell:>w$}"));
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(header_label, header);
        for (label, row) in labels.iter().zip(rows) {
            out.push_str(&line(label, row));
        }
        out
    }

    /// Plain diagram: header of homological degrees, one row per `j - i`, `.` for zero.
    pub fn render_text(&self) -> String {
        let (header, rows) = self.grid();
        let labels: Vec<String> = (0..rows.len()).map(|r| format!("{r}:")).collect();
        Self::render_grid(&labels, &header, &rows, "")
    }

    /// Macaulay2-style diagram with a `total:` row.
    pub fn render_m2(&self) -> String {
        let (header, mut rows) = self.grid();
        let totals: Vec<String> = (0..header.len() as u32).map(|i| self.total(i).to_string()).collect();
        rows.insert(0, totals);
        let mut labels = vec!["total:".to_string()];
        labels.extend((0..rows.len() - 1).map(|r| format!("{r}:")));
        Self::render_grid(&labels, &header, &rows, "")
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            betti: self
                .entries
                .iter()
                .map(|(&(i, j), v)| (i, j, big_number(v)))
                .collect(),
            regularity: self.regularity(),
            projective_dimension: self.projective_dimension(),
        }
    }
}

/// Serialized form of a Betti table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub betti: Vec<(u32, u32, serde_json::Number)>,
    pub regularity: u32,
    pub projective_dimension: u32,
}

pub(crate) fn big_number(v: &BigUint) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal integers are JSON numbers")
}

/// `reg(R/I) = b(b+1)/2` for a hook.
pub fn regularity_hook(h: Hook) -> usize {
    h.b * (h.b + 1) / 2
}

pub fn regularity_from_table(t: &BettiTable) -> usize {
    t.regularity() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{binomial, poincare_hook};

    #[test]
    fn hook_2_1_table() {
        let t = betti_table(&poincare_hook(Hook::new(2, 1))).unwrap();
        let expected = [(1, 1, 1u32), (1, 2, 6), (2, 3, 14), (3, 4, 11), (4, 5, 3)];
        for (i, j, v) in expected {
            assert_eq!(t.get(i, j), BigUint::from(v));
        }
        assert_eq!(t.entries().count(), expected.len() + 1);
        assert_eq!(t.projective_dimension(), 4);
        assert_eq!(regularity_from_table(&t), 1);
    }

    #[test]
    fn hook_1_1_table() {
        let t = betti_table(&poincare_hook(Hook::new(1, 1))).unwrap();
        for (i, j, v) in [(1, 1, 1u32), (1, 2, 3), (2, 3, 5), (3, 4, 2)] {
            assert_eq!(t.get(i, j), BigUint::from(v));
        }
    }

    #[test]
    fn rejects_invalid_series() {
        let bad = BiPoly::from_terms(&[(1, 0, 0), (-2, 1, 1)]);
        assert!(matches!(betti_table(&bad), Err(Error::NegativeCoefficient { i: 1, j: 1, .. })));
        let no_const = BiPoly::from_terms(&[(1, 1, 1)]);
        assert!(matches!(betti_table(&no_const), Err(Error::BadDegreeZeroPart(_))));
        let two = BiPoly::from_terms(&[(2, 0, 0)]);
        assert!(matches!(betti_table(&two), Err(Error::BadDegreeZeroPart(_))));
    }

    #[test]
    fn regularity_and_generators_over_hooks() {
        for h in Hook::all_up_to(10) {
            let t = betti_table(&poincare_hook(h)).unwrap();
            assert_eq!(regularity_from_table(&t), regularity_hook(h), "{h}");
            assert_eq!(t.total(1), binomial(h.n(), h.b + 1) + h.b, "{h}");
        }
        assert_eq!(regularity_hook(Hook::new(2, 1)), 1);
        assert_eq!(regularity_hook(Hook::new(0, 3)), 6);
        assert_eq!(regularity_hook(Hook::new(5, 0)), 0);
    }

    #[test]
    fn renderings() {
        let t = betti_table(&poincare_hook(Hook::new(2, 1))).unwrap();
        assert_eq!(t.render_text(), "   0 1  2  3 4\n0: 1 1  .  . .\n1: . 6 14 11 3\n");
        assert_eq!(
            t.render_m2(),
            "       0 1  2  3 4\ntotal: 1 7 14 11 3\n    0: 1 1  .  . .\n    1: . 6 14 11 3\n"
        );
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"betti":[[0,0,1],[1,1,1],[1,2,6],[2,3,14],[3,4,11],[4,5,3]],"regularity":1,"projective_dimension":4}"#
        );
        let back: BettiJson = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
