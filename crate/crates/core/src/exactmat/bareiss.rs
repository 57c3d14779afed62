//! Fraction-free (Bareiss) elimination.
//!
//! After `k` pivot steps every live entry equals a `(k+1)`-minor of the input,
//! so the division by the previous pivot is exact in any integral domain and
//! entries never grow beyond Hadamard's bound.

use super::Matrix;
use crate::scalar::Scalar;

struct Reduced<T> {
    rank: usize,
    last_pivot: T,
    swaps: usize,
}

fn eliminate<T: Scalar>(a: &Matrix<T>) -> Reduced<T> {
    let (rows, cols) = a.shape();
    let mut w: Vec<Vec<T>> = (0..rows).map(|r| a.row(r).to_vec()).collect();
    let mut prev = T::one();
    let mut rank = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !w[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            w.swap(p, rank);
            swaps += 1;
        }
        let (head, tail) = w.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = pivot.clone() * row[j].clone() - factor.clone() * pivot_row[j].clone();
                row[j] = v / prev.clone();
            }
            row[c] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Reduced {
        rank,
        last_pivot: prev,
        swaps,
    }
}

/// Rank over the fraction field of `T`.
pub fn rank_exact<T: Scalar>(a: &Matrix<T>) -> usize {
    eliminate(a).rank
}

/// Determinant of a square matrix; `None` if the matrix is not square.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> Option<T> {
    if !a.is_square() {
        return None;
    }
    if a.rows() == 0 {
        return Some(T::one());
    }
    let red = eliminate(a);
    if red.rank < a.rows() {
        return Some(T::zero());
    }
    Some(if red.swaps.is_multiple_of(2) {
        red.last_pivot
    } else {
        -red.last_pivot
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn rank_examples() {
        assert_eq!(rank_exact(&Matrix::<BigRational>::zeros(3, 3)), 0);
        assert_eq!(rank_exact(&Matrix::<BigRational>::identity(5)), 5);
        let prop = Matrix::<BigRational>::from_i64_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(rank_exact(&prop), 1);
    }

    #[test]
    fn rank_over_integers_matches_rationals() {
        let rows = [[2, 4, 6, 8], [1, 3, 5, 7], [3, 7, 11, 15], [0, 1, 0, 1]];
        let zi = Matrix::<BigInt>::from_i64_rows(&rows).unwrap();
        let q = Matrix::<BigRational>::from_i64_rows(&rows).unwrap();
        assert_eq!(rank_exact(&zi), 3);
        assert_eq!(rank_exact(&q), 3);
    }

    #[test]
    fn rank_with_skipped_columns() {
        let a = Matrix::<BigInt>::from_i64_rows(&[[0, 1, 2], [0, 2, 4], [0, 0, 3]]).unwrap();
        assert_eq!(rank_exact(&a), 2);
    }

    #[test]
    fn determinant_small_cases() {
        let a = Matrix::<BigInt>::from_i64_rows(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]).unwrap();
        assert_eq!(determinant(&a), Some(BigInt::from(4)));
        let swap = Matrix::<BigInt>::from_i64_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(determinant(&swap), Some(BigInt::from(-1)));
        assert_eq!(determinant(&Matrix::<BigInt>::zeros(2, 3)), None);
    }

    #[test]
    fn hadamard_sized_determinant_needs_big_integers() {
        // Sylvester-Hadamard matrix of order 32: |det| = 32^16 = 2^80.
        let h2 = Matrix::<BigInt>::from_i64_rows(&[[1, 1], [1, -1]]).unwrap();
        let mut h = h2.clone();
        for _ in 0..4 {
            h = h.kron(&h2);
        }
        let det = determinant(&h).unwrap();
        assert_eq!(det.magnitude(), &(num_bigint::BigUint::from(1u8) << 80));
    }
}
