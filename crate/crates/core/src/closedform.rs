//! Closed-form Poincare polynomials and Betti numbers.
//!
//! This module is the second, independent route to the invariants of the
//! two-pointed space: everything here is assembled from geometric sums in
//! Z[q], sharing nothing with the stratification pipeline beyond the
//! polynomial ring itself.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::qalgebra::QPoly;

/// `q^lo + q^(lo+1) + ... + q^hi`, zero when the range is empty.
fn geometric(lo: i64, hi: i64) -> QPoly {
    if hi < lo {
        return QPoly::zero();
    }
    debug_assert!(lo >= 0);
    let mut coeffs = vec![BigInt::from(0); (hi + 1) as usize];
    for c in coeffs.iter_mut().skip(lo as usize) {
        *c = BigInt::from(1);
    }
    QPoly::from_vec(coeffs)
}

/// The Poincare polynomial of the two-pointed degree-two space, as the
/// closed three-factor product
/// `(sum_0^r q^i)(sum_0^(r-1) q^i)(sum_0^(r+2) q^i + 2 sum_1^(r+1) q^i + 2 sum_2^r q^i)`.
pub fn serre_m02_closed(r: u32) -> QPoly {
    let r = r as i64;
    let third = &(&geometric(0, r + 2) + &(&QPoly::constant(2) * &geometric(1, r + 1)))
        + &(&QPoly::constant(2) * &geometric(2, r));
    &(&geometric(0, r) * &geometric(0, r - 1)) * &third
}

/// The Poincare polynomial of the one-pointed degree-two space. The first
/// two factors depend on the parity of r; the third factor is the parity-free
/// `sum_0^(r+2) q^i + sum_1^(r+1) q^i + sum_2^r q^i`.
pub fn serre_m01_closed(r: u32) -> QPoly {
    let r = r as i64;
    let third =
        &(&geometric(0, r + 2) + &geometric(1, r + 1)) + &geometric(2, r);
    let (linear, even_top) = if r % 2 == 0 {
        (geometric(0, r), (r - 2) / 2)
    } else {
        (geometric(0, r - 1), (r - 1) / 2)
    };
    let mut even = QPoly::zero();
    for i in 0..=even_top {
        even = &even + &QPoly::monomial(1, (2 * i) as usize);
    }
    &(&linear * &even) * &third
}

/// Euler characteristic of the two-pointed space: `r(r+1)(5r+3)`.
pub fn euler_m02(r: u32) -> u64 {
    let r = r as u64;
    r * (r + 1) * (5 * r + 3)
}

/// The i'th Betti number of the flag variety of pointed lines in P^r,
/// whose Poincare polynomial is `[r+1][r]`. The pattern rises 1, 2, 3, ...,
/// plateaus at the two middle values r, and falls back to 1:
/// `alpha_i = r + 1/2 - |r - 1/2 - i|` on `0..=2r-1`, zero outside.
pub fn alpha(r: u32, i: i64) -> u64 {
    let r = r as i64;
    if i < 0 || i > 2 * r - 1 {
        return 0;
    }
    // Doubled to stay in integers; the parity always works out.
    let doubled = (2 * r + 1) - (2 * r - 1 - 2 * i).abs();
    debug_assert!(doubled >= 0 && doubled % 2 == 0);
    (doubled / 2) as u64
}

fn alpha_sum(r: u32, lo: i64, hi: i64) -> u64 {
    if hi < lo {
        return 0;
    }
    (lo..=hi).map(|i| alpha(r, i)).sum()
}

/// Result of one piecewise Betti branch, together with its name for
/// diagnostics.
fn branches(r: u32, j: i64) -> Vec<(&'static str, u64)> {
    let rr = r as i64;
    let mut out = Vec::new();
    if j <= rr {
        out.push((
            "j <= r",
            alpha_sum(r, 0, j) + 2 * alpha_sum(r, 0, j - 1) + 2 * alpha_sum(r, 0, j - 2),
        ));
    }
    if j == rr + 1 {
        out.push((
            "j = r+1",
            alpha_sum(r, 0, rr + 1) + 2 * alpha_sum(r, 0, rr) + 2 * alpha_sum(r, 1, rr - 1),
        ));
    }
    if (rr + 2..=2 * rr - 1).contains(&j) {
        out.push((
            "r+2 <= j <= 2r-1",
            alpha_sum(r, j - rr - 2, j)
                + 2 * alpha_sum(r, j - rr - 1, j - 1)
                + 2 * alpha_sum(r, j - rr, j - 2),
        ));
    }
    if j == 2 * rr {
        out.push((
            "j = 2r",
            alpha_sum(r, rr - 2, 2 * rr - 1)
                + 2 * alpha_sum(r, rr - 1, 2 * rr - 1)
                + 2 * alpha_sum(r, rr, 2 * rr - 2),
        ));
    }
    if (2 * rr + 1..=3 * rr + 1).contains(&j) {
        out.push((
            "2r+1 <= j <= 3r+1",
            alpha_sum(r, j - rr - 2, 2 * rr - 1)
                + 2 * alpha_sum(r, j - rr - 1, 2 * rr - 1)
                + 2 * alpha_sum(r, j - rr, 2 * rr - 1),
        ));
    }
    out
}

/// The j'th Betti number of the two-pointed degree-two space.
///
/// The canonical value is the coefficient of `q^j` in
/// [`serre_m02_closed`] (zero outside `0..=3r+1`). Every piecewise branch
/// whose condition applies is evaluated as well and must agree; the branch
/// conditions overlap for small r, so rather than pick a precedence order we
/// insist they all give the same number.
pub fn betti(r: u32, j: i64) -> Result<u64, Error> {
    let coeff = if j < 0 {
        0
    } else {
        serre_m02_closed(r)
            .coeff(j as usize)
            .to_u64()
            .expect("Betti numbers fit in u64 at supported r")
    };
    for (branch, got) in branches(r, j) {
        if got != coeff {
            return Err(Error::BranchMismatch {
                r,
                j,
                branch,
                got,
                expected: coeff,
            });
        }
    }
    Ok(coeff)
}

/// The limiting Betti number `(5j^2 + 3j + 2) / 2`, attained for all r > j.
/// The numerator is always even, so this is exact integer arithmetic.
pub fn betti_stable(j: u64) -> u64 {
    let num = 5 * j * j + 3 * j + 2;
    debug_assert!(num % 2 == 0);
    num / 2
}

/// The full Betti vector of the two-pointed space for one value of r.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub r: u32,
    /// `betti[j]` for j = 0..=3r+1.
    pub betti: Vec<u64>,
    pub euler: u64,
}

/// Computes the Betti vector beta_0..beta_(3r+1) with the piecewise
/// cross-check active at every degree.
pub fn betti_table(r: u32) -> Result<BettiTable, Error> {
    let betti: Vec<u64> = (0..=3 * r as i64 + 1)
        .map(|j| betti(r, j))
        .collect::<Result<_, _>>()?;
    let euler = betti.iter().sum();
    Ok(BettiTable { r, betti, euler })
}
