//! Brute-force checks by exact linear algebra over the rationals: graded
//! dimensions of `R/I`, truncated Hilbert series, total dimension,
//! truncated nonzerodivisor tests, and the bundled hook verification.

mod linalg;
mod quotient;
mod verify;

use num_bigint::BigInt;

pub use linalg::{clear_denominators, rank_fraction_free};
pub use quotient::GradedQuotient;
pub use verify::{verify_dimension, verify_hook, Check, VerificationReport};

use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, MvPoly};

/// Default truncation for hook checks: `b(b+1)/2 + 2`.
pub fn default_dmax(b: usize) -> usize {
    b * (b + 1) / 2 + 2
}

/// `dim_k (R/I)_d` from the full Macaulay matrix in degree `d`.
///
/// Rows are `m * g` for every generator `g` and monomial `m` of complementary
/// degree, written in the degree-`d` monomial basis; the rank comes from
/// fraction-free elimination. This is the literal definition and is only
/// practical for small `n` and `d`; [`hilbert_oracle`] scales further.
pub fn graded_dim(gens: &[MvPoly], n: usize, d: usize) -> Result<usize> {
    let basis = monomials_of_degree(n, d, false);
    let col: std::collections::HashMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let deg = g
            .homogeneous_degree()
            .ok_or_else(|| Error::NonHomogeneousGenerator(g.to_string()))? as usize;
        if deg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - deg, false) {
            let mut row = vec![num_rational::BigRational::from_integer(0.into()); basis.len()];
            for (t, c) in g.mul_monomial(&m).terms() {
                row[col[t]] = c.clone();
            }
            rows.push(clear_denominators(&row));
        }
    }
    Ok(basis.len() - rank_fraction_free(rows))
}

/// Graded dimensions of `R/I` up to some degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDims {
    /// `dims[d] = dim_k (R/I)_d`.
    pub dims: Vec<usize>,
    /// A zero was reached, so every later piece vanishes too.
    pub stabilized_zero: bool,
}

impl GradedDims {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// `dim (R/I)_d` for `d = 0..=dmax`, stopping at the first zero.
///
/// Stopping is sound: for an ideal generated in positive degrees,
/// `(R/I)_d = 0` means every monomial of degree `d` lies in `I`, hence so
/// does every monomial of higher degree.
pub fn hilbert_oracle(gens: &[MvPoly], n: usize, dmax: usize) -> Result<GradedDims> {
    let mut q = GradedQuotient::new(gens, n)?;
    let mut dims = Vec::new();
    for d in 0..=dmax {
        let v = q.dim(d);
        dims.push(v);
        if v == 0 {
            return Ok(GradedDims { dims, stabilized_zero: true });
        }
    }
    Ok(GradedDims { dims, stabilized_zero: false })
}

/// Hilbert function values for `d = 0..=dmax` with no early stop.
pub fn hilbert_function(gens: &[MvPoly], n: usize, dmax: usize) -> Result<Vec<usize>> {
    let mut q = GradedQuotient::new(gens, n)?;
    Ok((0..=dmax).map(|d| q.dim(d)).collect())
}

/// `dim_k R/I`, which must be reached (a zero piece found) by degree `hard_cap`.
pub fn total_dimension(gens: &[MvPoly], n: usize, hard_cap: usize) -> Result<usize> {
    let dims = hilbert_oracle(gens, n, hard_cap)?;
    if !dims.stabilized_zero {
        return Err(Error::NotArtinianWithinCap(hard_cap));
    }
    Ok(dims.total())
}

/// Whether multiplication by `e` (homogeneous of degree `m`) is injective
/// from `(R/I)_d` to `(R/I)_{d+m}` for every `d <= dmax`.
///
/// The image of `(R/I)_d` in `(R/I)_{d+m}` has dimension
/// `dim (R/I)_{d+m} - dim (R/(I+e))_{d+m}`, so injectivity is that number
/// equalling `dim (R/I)_d`. A pass is evidence up to `dmax`, not a proof.
pub fn nzd_truncated_check(gens: &[MvPoly], e: &MvPoly, n: usize, dmax: usize) -> Result<bool> {
    let m = e
        .homogeneous_degree()
        .ok_or_else(|| Error::NonHomogeneousGenerator(e.to_string()))? as usize;
    let base = hilbert_function(gens, n, dmax + m)?;
    let mut extended = gens.to_vec();
    extended.push(e.clone());
    let with_e = hilbert_function(&extended, n, dmax + m)?;
    Ok((0..=dmax).all(|d| base[d + m] - with_e[d + m] == base[d]))
}

/// Stepwise version of [`nzd_truncated_check`]: whether each `seq[k]` is a
/// nonzerodivisor modulo `gens + seq[..k]`, in the same degree window.
///
/// Each intermediate quotient is built once and reused for the next step.
pub fn nzd_sequence_truncated(gens: &[MvPoly], seq: &[MvPoly], n: usize, dmax: usize) -> Result<Vec<bool>> {
    let mut acc = gens.to_vec();
    let mut current = GradedQuotient::new(&acc, n)?;
    let mut out = Vec::with_capacity(seq.len());
    for e in seq {
        let m = e
            .homogeneous_degree()
            .ok_or_else(|| Error::NonHomogeneousGenerator(e.to_string()))? as usize;
        acc.push(e.clone());
        let mut next = GradedQuotient::new(&acc, n)?;
        out.push((0..=dmax).all(|d| current.dim(d + m) - next.dim(d + m) == current.dim(d)));
        current = next;
    }
    Ok(out)
}

/// Whether `(A)` and `(B)` agree in every degree `<= dmax`.
///
/// Compares the Hilbert functions of `A`, `B` and `A + B`: `A_d = B_d` exactly
/// when both have the dimension of `(A + B)_d`.
pub fn equal_as_ideals_truncated(a: &[MvPoly], b: &[MvPoly], n: usize, dmax: usize) -> Result<bool> {
    let ha = hilbert_function(a, n, dmax)?;
    let hb = hilbert_function(b, n, dmax)?;
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    let hab = hilbert_function(&both, n, dmax)?;
    Ok(ha == hab && hb == hab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{hook_split, tanisaki_generators};
    use crate::partition::{Hook, Partition};
    use crate::poly::elementary_symmetric_all;
    use crate::series::hilbert_hook;

    fn ideal_of(h: Hook) -> Vec<MvPoly> {
        hook_split(h).flatten()
    }

    #[test]
    fn graded_dim_examples() {
        let i = ideal_of(Hook::new(2, 1));
        assert_eq!(graded_dim(&i, 4, 0).unwrap(), 1);
        assert_eq!(graded_dim(&i, 4, 1).unwrap(), 3);
        assert_eq!(graded_dim(&i, 4, 2).unwrap(), 0);
    }

    #[test]
    fn engine_matches_macaulay_matrix() {
        for h in Hook::all_up_to(4) {
            let gens = ideal_of(h);
            let n = h.n();
            let engine = hilbert_function(&gens, n, 5).unwrap();
            let direct: Vec<usize> = (0..=5).map(|d| graded_dim(&gens, n, d).unwrap()).collect();
            assert_eq!(engine, direct, "{h}");
        }
        let mu = Partition::new(&[2, 2]).unwrap();
        let gens = tanisaki_generators(&mu);
        let engine = hilbert_function(&gens, 4, 4).unwrap();
        let direct: Vec<usize> = (0..=4).map(|d| graded_dim(&gens, 4, d).unwrap()).collect();
        assert_eq!(engine, direct);
        // a non-Artinian quotient: J of (1|2) with e_1 adjoined
        let mut gens = hook_split(Hook::new(1, 2)).monomial_part.to_polys();
        gens.push(elementary_symmetric_all(1, 4));
        let engine = hilbert_function(&gens, 4, 5).unwrap();
        let direct: Vec<usize> = (0..=5).map(|d| graded_dim(&gens, 4, d).unwrap()).collect();
        assert_eq!(engine, direct);
    }

    #[test]
    fn oracle_series() {
        let d = hilbert_oracle(&ideal_of(Hook::new(2, 1)), 4, 3).unwrap();
        assert_eq!(d, GradedDims { dims: vec![1, 3, 0], stabilized_zero: true });
        let d = hilbert_oracle(&ideal_of(Hook::new(3, 0)), 4, 3).unwrap();
        assert_eq!(d, GradedDims { dims: vec![1, 0], stabilized_zero: true });
        let h = hilbert_hook(Hook::new(1, 2));
        let d = hilbert_oracle(&ideal_of(Hook::new(1, 2)), 4, 4).unwrap();
        let expected: Vec<usize> = h.coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(d.dims[..4], expected[..]);
    }

    #[test]
    fn total_dimensions() {
        assert_eq!(total_dimension(&ideal_of(Hook::new(2, 1)), 4, 10).unwrap(), 4);
        assert_eq!(total_dimension(&ideal_of(Hook::new(0, 2)), 3, 10).unwrap(), 6);
        assert_eq!(total_dimension(&ideal_of(Hook::new(3, 0)), 4, 10).unwrap(), 1);
        let mu = Partition::new(&[2, 2]).unwrap();
        assert_eq!(total_dimension(&tanisaki_generators(&mu), 4, 10).unwrap(), 6);
        let j = hook_split(Hook::new(1, 1)).monomial_part.to_polys();
        assert_eq!(total_dimension(&j, 3, 6), Err(Error::NotArtinianWithinCap(6)));
    }

    #[test]
    fn nonzerodivisors() {
        let j = hook_split(Hook::new(2, 1)).monomial_part.to_polys();
        assert!(nzd_truncated_check(&j, &elementary_symmetric_all(1, 4), 4, 6).unwrap());
        let x1 = vec![MvPoly::var(2, 0)];
        assert!(!nzd_truncated_check(&x1, &MvPoly::var(2, 0), 2, 3).unwrap());
        let mut gens = hook_split(Hook::new(1, 2)).monomial_part.to_polys();
        for i in 1..=2 {
            let e = elementary_symmetric_all(i, 4);
            assert!(nzd_truncated_check(&gens, &e, 4, 6).unwrap(), "e_{i}");
            gens.push(e);
        }
        let split = hook_split(Hook::new(1, 2));
        let seq = nzd_sequence_truncated(&split.monomial_part.to_polys(), &split.symmetric_part, 4, 6).unwrap();
        assert_eq!(seq, vec![true, true]);
        let seq = nzd_sequence_truncated(&[], &[MvPoly::var(2, 0), MvPoly::var(2, 0)], 2, 3).unwrap();
        assert_eq!(seq, vec![true, false]);
    }

    #[test]
    fn ideal_equality() {
        let t = tanisaki_generators(&Partition::new(&[3, 1]).unwrap());
        let s = hook_split(Hook::new(2, 1)).flatten();
        assert!(equal_as_ideals_truncated(&t, &s, 4, 4).unwrap());
        assert!(equal_as_ideals_truncated(&s, &s, 4, 4).unwrap());
        let a = vec![MvPoly::var(2, 0)];
        let b = vec![MvPoly::var(2, 1)];
        assert!(!equal_as_ideals_truncated(&a, &b, 2, 1).unwrap());
    }

    #[test]
    fn order_independent() {
        let mut gens = tanisaki_generators(&Partition::new(&[2, 2]).unwrap());
        let forward = hilbert_function(&gens, 4, 5).unwrap();
        gens.reverse();
        gens.rotate_left(3);
        assert_eq!(hilbert_function(&gens, 4, 5).unwrap(), forward);
    }
}
