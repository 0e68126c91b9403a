//! Binomial coefficients over the integers.
//!
//! Hasse derivatives need `binom(j, m)` in every characteristic. The values
//! are built with Pascal's recurrence in `Z` and only then mapped into the
//! coefficient field; a factorial quotient would divide by zero in `GF(p)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rows `0..=n` of Pascal's triangle, `table[j][m] = binom(j, m)`.
pub fn pascal_triangle(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut row = vec![BigInt::one(); j + 1];
        if let Some(prev) = rows.last() {
            for m in 1..j {
                row[m] = &prev[m - 1] + &prev[m];
            }
        }
        rows.push(row);
    }
    rows
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Product form keeps every intermediate an integer: binom(n-k+i, i).
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - k + i) / BigInt::from(i))
}
