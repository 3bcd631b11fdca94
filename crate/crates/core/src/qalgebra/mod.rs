//! The exact polynomial ring Z[q] and its lambda-ring structure.
//!
//! Everything downstream is a computation in this ring: Serre (virtual
//! Poincare) polynomials of varieties are elements of Z[q], projective
//! spaces and Grassmannians are q-integers and q-binomials, and fiber-space
//! quotients are exact divisions. Coefficients are arbitrary-precision
//! integers so no computation can silently overflow.
//!
//! The lambda-operations [`lambda_k`] and the associated sigma-operations
//! [`sigma_k`] live in a submodule; they are what makes the equivariant
//! computations in [`crate::equivrep`] possible.

mod lambda;

pub use lambda::{lambda_k, sigma_k};

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A univariate polynomial in `q` with exact integer coefficients.
///
/// Coefficients are stored densely, little-endian by degree: `coeffs[i]` is
/// the coefficient of `q^i`. The representation is canonical: no trailing
/// zero coefficients, and the zero polynomial is the empty vector, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_vec(vec![c.into()])
    }

    /// The monomial `c * q^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        QPoly { coeffs }
    }

    /// Builds a polynomial from little-endian coefficients, trimming
    /// trailing zeros to restore canonical form.
    pub fn from_vec(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Convenience constructor from machine integers, little-endian.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_vec(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Little-endian coefficient slice (canonical: no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluates at `q = 1`, i.e. sums the coefficients. For a Poincare
    /// polynomial this is the Euler characteristic.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True when the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^n`.
    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `p` with `p * den == self`.
    ///
    /// This is the polynomial form of the fiber-space rule
    /// Serre(total) = Serre(base) * Serre(fiber): dividing out a known factor
    /// must leave no remainder. A nonzero remainder means the claimed product
    /// structure does not hold and is reported as [`Error::DivisionNotExact`].
    pub fn exact_div(&self, den: &QPoly) -> Result<QPoly, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let not_exact = || Error::DivisionNotExact {
            num: self.to_string(),
            den: den.to_string(),
        };
        let dn = den.coeffs.len() - 1;
        let lead = &den.coeffs[dn];
        let mut rem = self.coeffs.clone();
        if rem.len() < den.coeffs.len() {
            return Err(not_exact());
        }
        let qn = rem.len() - 1 - dn;
        let mut quot = vec![BigInt::zero(); qn + 1];
        for i in (0..=qn).rev() {
            let top = std::mem::take(&mut rem[i + dn]);
            if top.is_zero() {
                continue;
            }
            // If self == p * den, every partial remainder is a multiple of
            // den, so its leading coefficient is divisible by lead.
            if !(&top % lead).is_zero() {
                return Err(not_exact());
            }
            let c = &top / lead;
            for (j, d) in den.coeffs[..dn].iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(not_exact());
        }
        Ok(QPoly::from_vec(quot))
    }
}

/// The q-integer `[n] = 1 + q + ... + q^(n-1)`, the Serre polynomial of
/// P^(n-1). By convention `[0] = 0`.
pub fn q_int(n: u32) -> QPoly {
    QPoly::from_vec(vec![BigInt::one(); n as usize])
}

/// The q-factorial `[n]! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(n: u32) -> QPoly {
    (1..=n).map(q_int).fold(QPoly::one(), |acc, f| &acc * &f)
}

/// The q-binomial (Gaussian) coefficient `[n]! / ([k]! [n-k]!)`, the Serre
/// polynomial of the Grassmannian G(k, n).
///
/// Returns 0 for `k` outside `[0, n]`, matching the combinatorial
/// convention, so summations never need edge guards.
pub fn q_binomial(n: u32, k: i64) -> QPoly {
    if k < 0 || k > n as i64 {
        return QPoly::zero();
    }
    let k = k as u32;
    if k == 0 || k == n {
        return QPoly::one();
    }
    let den = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n)
        .exact_div(&den)
        .expect("[n]! is divisible by [k]![n-k]!")
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_vec((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_vec((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_vec(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}
