//! Binomial coefficients and the binomial matrix `R = (C(i−1, n−j))`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// `C(m, k)`, zero when `k < 0` or `k > m`.
pub fn binom(m: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > m {
        return BigInt::zero();
    }
    let k = (k as u64).min(m - k as u64);
    // Multiplicative formula; each partial product C(m-k+i, i) is integral.
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (m - k + i) / i;
    }
    acc
}

/// Rows `0..=m` of Pascal's triangle.
pub(crate) fn pascal_rows(m: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
    for r in 0..=m {
        let mut row = vec![BigInt::one(); r + 1];
        for k in 1..r {
            row[k] = &rows[r - 1][k - 1] + &rows[r - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// The `n×n` matrix with entry `(i, j) = C(i−1, n−j)` for `1 ≤ i, j ≤ n`.
///
/// Row `i` holds row `i−1` of Pascal's triangle, right-aligned.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinomialMatrix {
    matrix: IntMatrix,
}

impl BinomialMatrix {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let triangle = pascal_rows(n - 1);
        let matrix = IntMatrix::from_fn(n, |r, c| {
            // 0-based: C(r, n-1-c)
            let k = n - 1 - c;
            triangle[r].get(k).cloned().unwrap_or_else(BigInt::zero)
        });
        Ok(BinomialMatrix { matrix })
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    /// 1-based entry `C(i−1, n−j)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<&BigInt> {
        let n = self.order();
        for index in [i, j] {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        Ok(self.matrix.get(i - 1, j - 1))
    }

    pub fn as_int_matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn into_int_matrix(self) -> IntMatrix {
        self.matrix
    }
}
