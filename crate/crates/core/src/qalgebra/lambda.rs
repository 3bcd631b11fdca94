//! Lambda- and sigma-operations on Z[q].
//!
//! Z[q] carries the unique lambda-ring structure with
//! `lambda_k(m * q^n) = lambda_k(m) * q^(nk)` for integers m, extending the
//! binomial lambda-structure `lambda_t(m) = (1+t)^m` on Z. The generating
//! series `lambda_t` is multiplicative over sums, so for an arbitrary
//! polynomial we take the product of `(1 + q^n t)^(c_n)` over its monomials,
//! with negative exponents meaning truncated power-series inverses.
//!
//! On representation rings lambda_k is the k'th exterior power and sigma_k
//! the k'th symmetric power; here they give the closed formulas
//! `sigma_k([n]) = [n+k-1 choose k]` and
//! `lambda_k([n]) = q^(k choose 2) [n choose k]` used throughout the
//! equivariant stratum computations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::QPoly;

/// Generalized binomial coefficient `C(c, j)` for integer (possibly
/// negative) `c`: the coefficient of `t^j` in `(1+t)^c`.
fn binom_general(c: &BigInt, j: usize) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..j {
        acc *= c - BigInt::from(t);
        acc /= BigInt::from(t + 1); // exact: product of i consecutive ints is divisible by i!
    }
    acc
}

/// Truncated product of two power series in `t` with Z[q] coefficients.
fn series_mul(a: &[QPoly], b: &[QPoly], order: usize) -> Vec<QPoly> {
    let mut out = vec![QPoly::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// The coefficient of `t^k` in `lambda_t(p)`.
///
/// `lambda_0 = 1` for every input. Inputs may have negative coefficients:
/// `lambda_t(-x) = lambda_t(x)^(-1)` as a power series truncated at `t^k`,
/// which the generalized binomial expansion of `(1 + q^n t)^c` handles
/// uniformly for either sign of `c`.
pub fn lambda_k(p: &QPoly, k: u32) -> QPoly {
    let k = k as usize;
    let mut series = vec![QPoly::zero(); k + 1];
    series[0] = QPoly::one();
    for (n, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let factor: Vec<QPoly> = (0..=k)
            .map(|j| {
                let b = binom_general(c, j);
                if b.is_zero() {
                    QPoly::zero()
                } else {
                    QPoly::monomial(b, n * j)
                }
            })
            .collect();
        series = series_mul(&series, &factor, k);
    }
    series.swap_remove(k)
}

/// The k'th sigma-operation `sigma_k(x) = (-1)^k lambda_k(-x)`.
pub fn sigma_k(p: &QPoly, k: u32) -> QPoly {
    let l = lambda_k(&-p, k);
    if k % 2 == 0 {
        l
    } else {
        -l
    }
}
