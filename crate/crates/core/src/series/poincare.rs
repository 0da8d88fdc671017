//! Bigraded Poincare series of `R/I` and `R/J` for hooks.

use num_bigint::BigInt;
use num_traits::One;

use super::tbinom::binomial_int;
use super::{BiPoly, UniSeries};
use crate::partition::Hook;

/// `prod_{k=1}^{m} (1 + q t^k)`.
fn koszul_factor(m: usize) -> BiPoly {
    (1..=m).fold(BiPoly::one(), |acc, k| acc.mul(&BiPoly::one_plus_qt(k as u32)))
}

/// `1 + q t^{b+1} sum_{i=0}^{a} C(b+i, b) (1 + qt)^i`, the series of `R/J`.
pub fn poincare_j_hook(h: Hook) -> BiPoly {
    let one_qt = BiPoly::one_plus_qt(1);
    let mut sum = BiPoly::zero();
    let mut power = BiPoly::one();
    for i in 0..=h.a {
        sum = sum.add(&power.scale(&binomial_int(h.b + i, h.b)));
        power = power.mul(&one_qt);
    }
    BiPoly::one().add(&sum.shift(1, (h.b + 1) as u32))
}

/// `prod_{k=1}^{b} (1 + q t^k) * P_{R/J}(q, t)`, the series of `R/I` for a hook.
pub fn poincare_hook(h: Hook) -> BiPoly {
    koszul_factor(h.b).mul(&poincare_j_hook(h))
}

/// Series of `R/J` for an ideal with linear quotients generated in degree `d`:
/// `1 + sum_M (1 + qt)^{|set(M)|} q t^d`.
pub fn herzog_takayama_poincare(set_sizes: &[usize], gen_degree: u32) -> BiPoly {
    let one_qt = BiPoly::one_plus_qt(1);
    let sum = set_sizes
        .iter()
        .fold(BiPoly::zero(), |acc, &s| acc.add(&one_qt.pow(s)));
    BiPoly::one().add(&sum.shift(1, gen_degree))
}

/// `(1 + q t^m) P`: adjoining a nonzerodivisor of degree `m`.
pub fn mapping_cone_shift(p: &BiPoly, m: u32) -> BiPoly {
    BiPoly::one_plus_qt(m).mul(p)
}

/// Builds `P_{(a|b)}` from `P_{(0|b)} = prod_{k=1}^{b+1}(1 + q t^k)` one arm cell at a time:
/// `P_{(a|b)} = P_{(a-1|b)} + prod_{k=1}^{b}(1 + q t^k) q t^{b+1} C(b+a, a) (1 + qt)^a`.
pub fn poincare_recursive(h: Hook) -> BiPoly {
    let leg = koszul_factor(h.b);
    let one_qt = BiPoly::one_plus_qt(1);
    let mut p = koszul_factor(h.b + 1);
    for a in 1..=h.a {
        let cell = leg
            .mul(&one_qt.pow(a))
            .scale(&binomial_int(h.b + a, a))
            .shift(1, (h.b + 1) as u32);
        p = p.add(&cell);
    }
    p
}

/// Ungraded version: `P_{(a|b)}(q) = P_{(a-1|b)}(q) + C(a+b, b) q (1+q)^{a+b}`,
/// starting from `(1+q)^{b+1}`.
pub fn poincare_recursive_ungraded(h: Hook) -> UniSeries {
    let one_q = UniSeries::from_i64(&[1, 1]);
    let mut p = one_q.pow(h.b + 1);
    for a in 1..=h.a {
        let cell = one_q
            .pow(a + h.b)
            .mul(&UniSeries::monomial(BigInt::one(), 1))
            .scale(&binomial_int(a + h.b, h.b));
        p = p.add(&cell);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_2_1_expansion() {
        // hand expansion: (1+qt)(1 + 6qt^2 + 8q^2t^3 + 3q^3t^4)
        let expected = BiPoly::from_terms(&[
            (1, 0, 0),
            (1, 1, 1),
            (6, 1, 2),
            (14, 2, 3),
            (11, 3, 4),
            (3, 4, 5),
        ]);
        assert_eq!(poincare_hook(Hook::new(2, 1)), expected);
        assert_eq!(
            poincare_j_hook(Hook::new(2, 1)),
            BiPoly::from_terms(&[(1, 0, 0), (6, 1, 2), (8, 2, 3), (3, 3, 4)])
        );
    }

    #[test]
    fn row_and_column_shapes() {
        for a in 0..6 {
            let n = a + 1;
            assert_eq!(poincare_hook(Hook::new(a, 0)), BiPoly::one_plus_qt(1).pow(n));
            assert_eq!(poincare_j_hook(Hook::new(a, 0)), BiPoly::one_plus_qt(1).pow(n));
        }
        for b in 0..6 {
            assert_eq!(poincare_hook(Hook::new(0, b)), koszul_factor(b + 1));
            let principal = BiPoly::one().add(&BiPoly::monomial(BigInt::one(), 1, (b + 1) as u32));
            assert_eq!(poincare_j_hook(Hook::new(0, b)), principal);
        }
    }

    #[test]
    fn herzog_takayama_small() {
        assert_eq!(herzog_takayama_poincare(&[0], 1), BiPoly::one_plus_qt(1));
        assert_eq!(
            herzog_takayama_poincare(&[0, 1], 1),
            BiPoly::from_terms(&[(1, 0, 0), (2, 1, 1), (1, 2, 2)])
        );
        assert_eq!(
            herzog_takayama_poincare(&[0, 1, 2, 1, 2, 2], 2),
            poincare_j_hook(Hook::new(2, 1))
        );
    }

    #[test]
    fn shifts() {
        assert_eq!(mapping_cone_shift(&BiPoly::one(), 3), BiPoly::one_plus_qt(3));
        let p = poincare_j_hook(Hook::new(1, 2));
        assert_eq!(
            mapping_cone_shift(&mapping_cone_shift(&p, 1), 2),
            mapping_cone_shift(&mapping_cone_shift(&p, 2), 1)
        );
    }

    #[test]
    fn recursion_agrees_with_closed_form() {
        for h in Hook::all_up_to(10) {
            let closed = poincare_hook(h);
            assert_eq!(poincare_recursive(h), closed, "{h}");
            assert_eq!(poincare_recursive_ungraded(h), closed.eval_t_one(), "{h}");
            let shifted = (1..=h.b as u32).fold(poincare_j_hook(h), |p, m| mapping_cone_shift(&p, m));
            assert_eq!(shifted, closed, "{h}");
        }
    }

    #[test]
    fn ungraded_first_cell() {
        // P_{(1|b)}(q) = (1+q)^{b+1} (1 + (b+1) q)
        for b in 0..8 {
            let expected = UniSeries::from_i64(&[1, 1])
                .pow(b + 1)
                .mul(&UniSeries::from_i64(&[1, (b + 1) as i64]));
            assert_eq!(poincare_recursive_ungraded(Hook::new(1, b)), expected);
        }
    }
}
