//! Integer partitions, their conjugates, the tail sums `delta_k`, and hooks.
//!
//! A [`Partition`] of `n` is always stored with exactly `n` parts, padded
//! with zeros, so `delta_k` indexing never needs special cases.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition of `n`, zero-padded to `n` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its nonzero parts (zeros anywhere are dropped).
    ///
    /// The remaining entries must be weakly decreasing and sum to a positive `n`.
    pub fn new(parts: &[usize]) -> Result<Self> {
        let nonzero: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if nonzero.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let n: usize = nonzero.iter().sum();
        if n == 0 {
            return Err(Error::NotAPartition(format!("{parts:?} has size zero")));
        }
        let mut padded = nonzero;
        padded.resize(n, 0);
        Ok(Partition { parts: padded })
    }

    /// Like [`Partition::new`] but accepts signed input, rejecting negatives.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NotAPartition(format!("{parts:?} has a negative entry")));
        }
        let parts: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
        Partition::new(&parts)
    }

    /// The size `n`; also the number of stored parts.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// All `n` parts, zero-padded.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// `mu'_i = #{ j : mu_j >= i }`, padded to `n` parts.
    pub fn conjugate(&self) -> Partition {
        let n = self.n();
        let parts = (1..=n)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `delta_k = mu'_n + mu'_{n-1} + ... + mu'_{n-k+1}` for `1 <= k <= n`.
    pub fn delta(&self, k: usize) -> Result<usize> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
        let conj = self.conjugate();
        Ok(conj.parts[n - k..].iter().sum())
    }

    /// `(delta_1, ..., delta_n)`.
    pub fn deltas(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let n = self.n();
        let mut acc = 0;
        (1..=n)
            .map(|k| {
                acc += conj.parts[n - k];
                acc
            })
            .collect()
    }

    /// Returns the Frobenius form `(a | b)` when the partition is `(a+1, 1^b)`.
    pub fn as_hook(&self) -> Option<Hook> {
        let len = self.length();
        let first = self.parts[0];
        if self.parts[1..len].iter().all(|&p| p == 1) {
            Some(Hook { a: first - 1, b: len - 1 })
        } else {
            None
        }
    }

    pub fn is_hook(&self) -> bool {
        self.as_hook().is_some()
    }

    /// Multinomial coefficient `n! / (mu_1! ... mu_n!)`.
    pub fn multinomial(&self) -> num_bigint::BigUint {
        use num_traits::One;
        let fact = |m: usize| (1..=m).fold(num_bigint::BigUint::one(), |acc, i| acc * i);
        let denom = self
            .parts
            .iter()
            .fold(num_bigint::BigUint::one(), |acc, &p| acc * fact(p));
        fact(self.n()) / denom
    }

    /// Every partition of `n`, in reverse lexicographic order starting with `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|p| Partition::new(&p).expect("generated partitions are valid"))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3,1"`, `"(3,1,0,0)"` or `"3 1"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::NotAPartition(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<i64>>>()?;
        Partition::from_signed(&parts)
    }
}

/// A hook `(a | b)`: the partition `(a+1, 1^b)` of `n = a + b + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hook {
    /// Arm length.
    pub a: usize,
    /// Leg length.
    pub b: usize,
}

impl Hook {
    pub fn new(a: usize, b: usize) -> Self {
        Hook { a, b }
    }

    pub fn n(&self) -> usize {
        self.a + self.b + 1
    }

    pub fn partition(&self) -> Partition {
        let mut parts = vec![self.a + 1];
        parts.extend(std::iter::repeat(1).take(self.b));
        Partition::new(&parts).expect("hooks are partitions")
    }

    /// All hooks of size `n`, ordered by increasing leg.
    pub fn all_of_size(n: usize) -> Vec<Hook> {
        (0..n).map(|b| Hook::new(n - 1 - b, b)).collect()
    }

    /// All hooks with `1 <= n <= max_n`.
    pub fn all_up_to(max_n: usize) -> Vec<Hook> {
        (1..=max_n).flat_map(Hook::all_of_size).collect()
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pads_to_n_parts() {
        let p = Partition::new(&[3, 1]).unwrap();
        assert_eq!(p.parts(), &[3, 1, 0, 0]);
        assert_eq!(p.n(), 4);
        assert_eq!(Partition::new(&[1]).unwrap().parts(), &[1]);
    }

    #[test]
    fn rejects_increasing_and_negative() {
        assert!(matches!(Partition::new(&[1, 2]), Err(Error::NotAPartition(_))));
        assert!(matches!(Partition::from_signed(&[2, -1]), Err(Error::NotAPartition(_))));
        assert!(Partition::new(&[]).is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!("(3,1,0,0)".parse::<Partition>().unwrap(), Partition::new(&[3, 1]).unwrap());
    }

    #[test]
    fn conjugates() {
        let p = Partition::new(&[3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1, 0]);
        assert_eq!(Partition::new(&[1, 1, 1]).unwrap().conjugate().parts(), &[3, 0, 0]);
        let q = Partition::new(&[5, 4, 2, 1]).unwrap();
        assert_eq!(q.conjugate().conjugate(), q);
    }

    #[test]
    fn delta_example() {
        let p = Partition::new(&[3, 1]).unwrap();
        assert_eq!(p.deltas(), vec![0, 1, 2, 4]);
        for k in 1..=4 {
            assert_eq!(p.delta(k).unwrap(), p.deltas()[k - 1]);
        }
        assert_eq!(p.delta(0), Err(Error::IndexOutOfRange { index: 0, max: 4 }));
        assert_eq!(p.delta(5), Err(Error::IndexOutOfRange { index: 5, max: 4 }));
    }

    #[test]
    fn hook_deltas_follow_the_arm() {
        // (0,...,0 [b times], 1, 2, ..., a, n)
        for h in Hook::all_up_to(9) {
            let mut expected = vec![0; h.b];
            expected.extend(1..=h.a);
            expected.push(h.n());
            assert_eq!(h.partition().deltas(), expected, "{h}");
        }
    }

    #[test]
    fn hook_recognition() {
        assert_eq!(Partition::new(&[3, 1]).unwrap().as_hook(), Some(Hook::new(2, 1)));
        assert_eq!(Partition::new(&[1, 1, 1]).unwrap().as_hook(), Some(Hook::new(0, 2)));
        assert_eq!(Partition::new(&[2, 2]).unwrap().as_hook(), None);
        assert_eq!(Hook::new(2, 1).partition().parts(), &[3, 1, 0, 0]);
        assert_eq!(Hook::new(0, 0).partition().parts(), &[1]);
        assert_eq!(Hook::new(3, 0).partition().parts(), &[4, 0, 0, 0]);
    }

    #[test]
    fn exhaustive_small_partitions() {
        for n in 1..=10 {
            let all = Partition::all(n);
            for p in &all {
                assert_eq!(p.conjugate().conjugate(), *p);
                let d = p.deltas();
                assert_eq!(d[n - 1], n);
                assert!(d.windows(2).all(|w| w[0] <= w[1]));
            }
        }
        // partition counts p(1..=10)
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hook_round_trip() {
        for h in Hook::all_up_to(12) {
            assert_eq!(h.partition().as_hook(), Some(h));
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(Partition::new(&[2, 2]).unwrap().multinomial(), 6u32.into());
        assert_eq!(Partition::new(&[1, 1, 1]).unwrap().multinomial(), 6u32.into());
        assert_eq!(Partition::new(&[3, 1]).unwrap().multinomial(), 4u32.into());
    }
}
