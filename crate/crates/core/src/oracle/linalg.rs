//! Fraction-free exact rank over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions are exact.
pub fn rank_fraction_free(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let v = &pivot * &rows[r][c] - &factor * &rows[rank][c];
                rows[r][c] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Scales a rational row by the lcm of its denominators.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_fraction_free(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_fraction_free(m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank_fraction_free(m(&[&[2, 3, 5], &[4, 6, 10], &[1, 0, 1], &[0, 3, 3]])), 2);
        assert_eq!(rank_fraction_free(Vec::new()), 0);
        assert_eq!(rank_fraction_free(m(&[&[0, 0, 0]])), 0);
    }

    #[test]
    fn vandermonde_is_full_rank() {
        let rows: Vec<Vec<BigInt>> = (1..=6i64)
            .map(|x| (0..6u32).map(|e| BigInt::from(x.pow(e))).collect())
            .collect();
        assert_eq!(rank_fraction_free(rows), 6);
    }

    #[test]
    fn denominators() {
        let row = vec![BigRational::new(1.into(), 2.into()), BigRational::new(2.into(), 3.into())];
        assert_eq!(clear_denominators(&row), vec![BigInt::from(3), BigInt::from(4)]);
    }
}
