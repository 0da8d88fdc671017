//! Ordinary and `t`-analogue binomial coefficients.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{BiPoly, UniSeries};
use crate::error::Result;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn binomial_int(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// `n!`.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `[j]_t = 1 + t + ... + t^{j-1}`.
pub fn t_integer(j: usize) -> UniSeries {
    UniSeries::new(vec![BigInt::one(); j])
}

/// `[j]_t! = [1]_t [2]_t ... [j]_t`.
pub fn t_factorial(j: usize) -> UniSeries {
    (1..=j).fold(UniSeries::one(), |acc, i| acc.mul(&t_integer(i)))
}

/// `[n]_t! / ([k]_t! [n-k]_t!)` by exact polynomial division.
pub fn t_binomial(n: usize, k: usize) -> Result<UniSeries> {
    assert!(k <= n, "t_binomial needs k <= n");
    let denom = t_factorial(k).mul(&t_factorial(n - k));
    t_factorial(n).div_exact(&denom)
}

/// Checks `prod_{k=1}^{n} (1 + q t^k) = sum_k q^k t^{k(k+1)/2} [n choose k]_t` exactly.
pub fn cauchy_identity_check(n: usize) -> bool {
    let lhs = (1..=n).fold(BiPoly::one(), |acc, k| acc.mul(&BiPoly::one_plus_qt(k as u32)));
    let mut rhs = BiPoly::zero();
    for k in 0..=n {
        let Ok(tb) = t_binomial(n, k) else {
            return false;
        };
        rhs = rhs.add(&BiPoly::from_t_poly(&tb, k as u32).shift(0, (k * (k + 1) / 2) as u32));
    }
    lhs == rhs
}

/// Checks `sum_{i=0}^{n-b-1} C(b+i, b) = C(n, b+1)` for `0 <= b < n`.
pub fn hockey_stick_check(n: usize) -> bool {
    (0..n).all(|b| {
        let lhs: BigUint = (0..n - b).map(|i| binomial(b + i, b)).sum();
        lhs == binomial(n, b + 1)
    })
}
