//! Hilbert series of `R/I` for hooks.

use num_bigint::BigInt;
use num_traits::Zero;

use super::tbinom::{binomial_int, t_factorial};
use super::{poincare_hook, regularity_hook, UniSeries};
use crate::error::{Error, Result};
use crate::partition::Hook;

/// `[b]_q! * sum_{c=0}^{b} C(n, c) q^c (1-q)^{b-c}`.
pub fn hilbert_hook(h: Hook) -> UniSeries {
    let n = h.n();
    let one_minus = UniSeries::from_i64(&[1, -1]);
    let sum = (0..=h.b).fold(UniSeries::zero(), |acc, c| {
        let term = UniSeries::monomial(binomial_int(n, c), c).mul(&one_minus.pow(h.b - c));
        acc.add(&term)
    });
    t_factorial(h.b).mul(&sum)
}

/// Hilbert series of `R/J` to degree `dmax`: `1 + sum_{s>=1} sum_{c=1}^{b} C(n,c) C(s-1,c-1) q^s`.
///
/// Degree-`s` monomials outside `J` use `c <= b` variables, each with a
/// positive exponent; there are `C(s-1, c-1)` exponent vectors per support.
pub fn hilbert_j_truncated(h: Hook, dmax: usize) -> UniSeries {
    let n = h.n();
    let coeffs = (0..=dmax)
        .map(|s| {
            if s == 0 {
                BigInt::from(1)
            } else {
                (1..=h.b)
                    .map(|c| binomial_int(n, c) * binomial_int(s - 1, c - 1))
                    .fold(BigInt::zero(), |a, b| a + b)
            }
        })
        .collect();
    UniSeries::truncated(coeffs, dmax)
}

/// `prod_{i=1}^{b} (1 - q^i) h_{R/J}(q)` computed to degree `dmax`.
///
/// Every coefficient above `b(b+1)/2` must vanish inside the window; the
/// result is returned as an exact polynomial.
pub fn hilbert_via_factorization(h: Hook, dmax: usize) -> Result<UniSeries> {
    let top = regularity_hook(h);
    if dmax < top + 1 {
        return Err(Error::TruncationTooSmall { need: top + 1, got: dmax });
    }
    let factor = (1..=h.b).fold(UniSeries::one(), |acc, i| {
        acc.mul(&UniSeries::one().sub(&UniSeries::monomial(BigInt::from(1), i)))
    });
    let product = hilbert_j_truncated(h, dmax).mul(&factor);
    for d in top + 1..=dmax {
        let c = product.coeff(d);
        if !c.is_zero() {
            return Err(Error::NonVanishingTail { degree: d, coeff: c.to_string() });
        }
    }
    Ok(product.into_polynomial())
}

/// Checks `P(-1, q) = h(q) (1-q)^n`, reading the `t` of the Poincare series as `q`.
pub fn euler_identity_check(h: Hook) -> bool {
    let lhs = poincare_hook(h).eval_q(&BigInt::from(-1));
    let rhs = hilbert_hook(h).mul(&UniSeries::from_i64(&[1, -1]).pow(h.n()));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::factorial;
    use num_bigint::BigUint;

    #[test]
    fn small_hooks() {
        assert_eq!(hilbert_hook(Hook::new(2, 1)), UniSeries::from_i64(&[1, 3]));
        assert_eq!(hilbert_hook(Hook::new(1, 2)), UniSeries::from_i64(&[1, 3, 5, 3]));
        for a in 0..6 {
            assert_eq!(hilbert_hook(Hook::new(a, 0)), UniSeries::one());
            assert_eq!(hilbert_via_factorization(Hook::new(a, 0), 1).unwrap(), UniSeries::one());
        }
    }

    #[test]
    fn factorization_route() {
        assert_eq!(
            hilbert_j_truncated(Hook::new(2, 1), 3),
            UniSeries::truncated(vec![1, 4, 4, 4].into_iter().map(BigInt::from).collect(), 3)
        );
        assert_eq!(hilbert_via_factorization(Hook::new(2, 1), 3).unwrap(), UniSeries::from_i64(&[1, 3]));
        assert_eq!(
            hilbert_via_factorization(Hook::new(2, 1), 1),
            Err(Error::TruncationTooSmall { need: 2, got: 1 })
        );
        for h in Hook::all_up_to(10) {
            let dmax = regularity_hook(h) + 2;
            assert_eq!(hilbert_via_factorization(h, dmax).unwrap(), hilbert_hook(h), "{h}");
        }
    }

    #[test]
    fn degree_and_total_dimension() {
        for h in Hook::all_up_to(10) {
            let hs = hilbert_hook(h);
            assert_eq!(hs.degree(), Some(regularity_hook(h)), "{h}");
            let total = hs.eval(&BigInt::from(1));
            let expected: BigUint = factorial(h.n()) / factorial(h.a + 1);
            assert_eq!(total, BigInt::from(expected), "{h}");
        }
    }

    #[test]
    fn euler_examples() {
        let lhs = poincare_hook(Hook::new(1, 1)).eval_q(&BigInt::from(-1));
        assert_eq!(lhs, UniSeries::from_i64(&[1, -1, -3, 5, -2]));
        let lhs = poincare_hook(Hook::new(2, 1)).eval_q(&BigInt::from(-1));
        assert_eq!(lhs, UniSeries::from_i64(&[1, -1, -6, 14, -11, 3]));
        assert!(Hook::all_up_to(10).into_iter().all(euler_identity_check));
    }
}
