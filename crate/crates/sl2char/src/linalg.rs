//! Exact linear algebra over the rationals: just enough Gaussian elimination
//! to invert elements of the cyclotomic field by solving M·x = e₀.

use crate::Rational;
use num_traits::Zero;

/// Solves the square system `a · x = b` exactly. Returns `None` when the
/// matrix is singular. `a` is row-major and consumed as scratch space.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n));

    for col in 0..n {
        // Exact arithmetic needs no magnitude pivoting — any nonzero works.
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &a[col][col];
            for k in col..n {
                let t = &factor * &a[col][k];
                a[row][k] -= t;
            }
            let t = &factor * &b[col];
            b[row] -= t;
        }
    }

    let mut x = vec![Rational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for k in row + 1..n {
            acc -= &a[row][k] * &x[k];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn solves_2x2() {
        // x + 2y = 5, 3x + 4y = 11  =>  x = 1, y = 2.
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]];
        let b = vec![q(5, 1), q(11, 1)];
        assert_eq!(solve(a, b).unwrap(), vec![q(1, 1), q(2, 1)]);
    }

    #[test]
    fn needs_row_swap() {
        // Leading zero forces a pivot swap.
        let a = vec![vec![q(0, 1), q(1, 1)], vec![q(2, 1), q(0, 1)]];
        let b = vec![q(3, 1), q(4, 1)];
        assert_eq!(solve(a, b).unwrap(), vec![q(2, 1), q(3, 1)]);
    }

    #[test]
    fn rejects_singular() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        let b = vec![q(1, 1), q(2, 1)];
        assert!(solve(a, b).is_none());
    }

    #[test]
    fn exact_fractions_survive() {
        // Hilbert-like 3x3 with known exact solution: verify by residual.
        let a: Vec<Vec<Rational>> = (1..=3)
            .map(|i| (1..=3).map(|j| q(1, i + j - 1)).collect())
            .collect();
        let b = vec![q(1, 1), q(0, 1), q(0, 1)];
        let x = solve(a.clone(), b.clone()).unwrap();
        for i in 0..3 {
            let mut acc = Rational::zero();
            for j in 0..3 {
                acc += &a[i][j] * &x[j];
            }
            assert_eq!(acc, b[i]);
        }
    }
}
