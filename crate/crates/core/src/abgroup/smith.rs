//! Smith normal form over the integers.
//!
//! Elementary row and column operations with a smallest-pivot strategy. After
//! each pivot is cleared from its row and column, the remaining submatrix is
//! checked for divisibility by the pivot, so the divisibility chain holds
//! directly without a separate gcd/lcm pass.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Output of [`smith_normal_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// The diagonalized matrix, same shape as the input.
    pub diagonal: IntMatrix,
    /// Nonzero diagonal entries `d1 | d2 | ... | dr`, all positive; `r` is the rank.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = -a[(i, t)].div_floor(&a[(t, t)]);
                    a.add_row_multiple(i, t, &q);
                    clean &= a[(i, t)].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = -a[(t, j)].div_floor(&a[(t, t)]);
                    a.add_col_multiple(j, t, &q);
                    clean &= a[(t, j)].is_zero();
                }
            }
            if !clean {
                // A nonzero remainder is strictly smaller than the pivot.
                let (pi, pj) = smallest_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            if let Some(i) = first_non_multiple_row(&a, t) {
                a.add_row_multiple(t, i, &BigInt::from(1));
                continue;
            }
            break;
        }
        if a[(t, t)].sign() == Sign::Minus {
            a.negate_row(t);
        }
        t += 1;
    }
    let invariants = (0..t).map(|i| a[(i, i)].clone()).collect();
    SmithForm {
        diagonal: a,
        invariants,
    }
}

fn smallest_entry(
    a: &IntMatrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().map_or(true, |(_, b)| abs < *b) {
                best = Some(((i, j), abs));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn smallest_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let col = smallest_entry(a, t..a.rows(), t..t + 1);
    let row = smallest_entry(a, t..t + 1, t..a.cols());
    match (col, row) {
        (Some(c), Some(r)) => {
            if a[c].abs() <= a[r].abs() {
                c
            } else {
                r
            }
        }
        (Some(p), None) | (None, Some(p)) => p,
        (None, None) => (t, t),
    }
}

fn first_non_multiple_row(a: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = &a[(t, t)];
    (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !a[(i, j)].is_multiple_of(pivot)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2 and |det| = 8, so the chain is (2, 4).
        let m = IntMatrix::from_rows(2, &[[2, 4], [6, 8]]).unwrap();
        assert_eq!(smith_normal_form(&m).invariants, ints(&[2, 4]));
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(
            smith_normal_form(&IntMatrix::identity(3)).invariants,
            ints(&[1, 1, 1])
        );
        let z = IntMatrix::zeros(2, 3);
        let snf = smith_normal_form(&z);
        assert!(snf.invariants.is_empty());
        assert_eq!(snf.diagonal, z);
    }

    #[test]
    fn empty_shapes() {
        assert!(smith_normal_form(&IntMatrix::zeros(0, 4))
            .invariants
            .is_empty());
        assert!(smith_normal_form(&IntMatrix::zeros(3, 0))
            .invariants
            .is_empty());
    }

    #[test]
    fn diagonal_needs_regrouping() {
        let m = IntMatrix::diagonal(2, 2, ints(&[4, 6]));
        assert_eq!(smith_normal_form(&m).invariants, ints(&[2, 12]));
        let m = IntMatrix::diagonal(3, 3, ints(&[2, 3, 5]));
        assert_eq!(smith_normal_form(&m).invariants, ints(&[1, 1, 30]));
    }

    #[test]
    fn diagonal_matrix_is_diagonal() {
        let m = IntMatrix::from_rows(3, &[[3, 9, -6], [12, 6, 0], [1, 1, 1]]).unwrap();
        let snf = smith_normal_form(&m);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(snf.diagonal[(i, j)].is_zero());
                }
            }
        }
        let det: BigInt = snf.invariants.iter().product();
        // det = 3(6-0) - 9(12-0) + (-6)(12-6) = 18 - 108 - 36 = -126
        assert_eq!(det, BigInt::from(126));
        assert!(snf.invariants[0].is_one());
    }
}
