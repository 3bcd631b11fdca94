//! The ring R(S2)[q] of S2-equivariant Serre polynomials.
//!
//! The virtual representation ring of the two-element group is free on the
//! trivial representation and the sign representation eps, with eps^2 = 1.
//! An equivariant Serre polynomial records, in each cohomological degree,
//! how the group acts: `a*1 + b*eps` with a, b in Z[q].
//!
//! The augmentation (the coefficient of the trivial representation) computes
//! the Serre polynomial of a quotient stack; the rank (forget the action)
//! must always recover the plain Serre polynomial of the total space, which
//! every computation here cross-checks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::qalgebra::{lambda_k, sigma_k, QPoly};

/// An element `triv * 1 + sign * eps` of R(S2)[q].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EquivPoly2 {
    triv: QPoly,
    sign: QPoly,
}

impl EquivPoly2 {
    pub fn new(triv: QPoly, sign: QPoly) -> Self {
        EquivPoly2 { triv, sign }
    }

    /// The multiplicative identity (the trivial representation).
    pub fn one() -> Self {
        EquivPoly2::scalar(QPoly::one())
    }

    /// The sign representation eps.
    pub fn eps() -> Self {
        EquivPoly2::new(QPoly::zero(), QPoly::one())
    }

    /// A polynomial acting trivially, `p * 1`.
    pub fn scalar(p: QPoly) -> Self {
        EquivPoly2::new(p, QPoly::zero())
    }

    pub fn zero() -> Self {
        EquivPoly2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.triv.is_zero() && self.sign.is_zero()
    }

    /// Coefficient of the trivial representation.
    pub fn triv(&self) -> &QPoly {
        &self.triv
    }

    /// Coefficient of the sign representation.
    pub fn sign(&self) -> &QPoly {
        &self.sign
    }

    /// The augmentation morphism: extracts the trivial-representation
    /// coefficient. For a group acting on a variety this is the Serre
    /// polynomial of the quotient.
    pub fn augment(&self) -> QPoly {
        self.triv.clone()
    }

    /// The dimension homomorphism `1 -> 1, eps -> 1`: forgetting the action
    /// must recover the plain Serre polynomial of the total space.
    pub fn rank(&self) -> QPoly {
        &self.triv + &self.sign
    }

    /// Componentwise exact division by a polynomial acting trivially.
    pub fn exact_div_scalar(&self, den: &QPoly) -> Result<EquivPoly2, Error> {
        Ok(EquivPoly2 {
            triv: self.triv.exact_div(den)?,
            sign: self.sign.exact_div(den)?,
        })
    }
}

/// The equivariant Serre polynomial of `X^2` with S2 switching the factors:
/// `sigma_2(p) * 1 + lambda_2(p) * eps` where `p = Serre(X)`.
///
/// Requires an honest Serre polynomial (nonnegative coefficients); a virtual
/// class has no symmetric/exterior square decomposition of this form.
pub fn equivariant_square(p: &QPoly) -> Result<EquivPoly2, Error> {
    if !p.has_nonnegative_coeffs() {
        return Err(Error::NegativeInput {
            poly: p.to_string(),
        });
    }
    Ok(EquivPoly2::new(sigma_k(p, 2), lambda_k(p, 2)))
}

impl Add for &EquivPoly2 {
    type Output = EquivPoly2;
    fn add(self, rhs: &EquivPoly2) -> EquivPoly2 {
        EquivPoly2::new(&self.triv + &rhs.triv, &self.sign + &rhs.sign)
    }
}

impl Sub for &EquivPoly2 {
    type Output = EquivPoly2;
    fn sub(self, rhs: &EquivPoly2) -> EquivPoly2 {
        EquivPoly2::new(&self.triv - &rhs.triv, &self.sign - &rhs.sign)
    }
}

/// Multiplication with `eps^2 = 1`:
/// `(a + b eps)(c + d eps) = (ac + bd) + (ad + bc) eps`.
impl Mul for &EquivPoly2 {
    type Output = EquivPoly2;
    fn mul(self, rhs: &EquivPoly2) -> EquivPoly2 {
        let (a, b, c, d) = (&self.triv, &self.sign, &rhs.triv, &rhs.sign);
        EquivPoly2::new(&(a * c) + &(b * d), &(a * d) + &(b * c))
    }
}

impl Neg for &EquivPoly2 {
    type Output = EquivPoly2;
    fn neg(self) -> EquivPoly2 {
        EquivPoly2::new(-&self.triv, -&self.sign)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for EquivPoly2 {
            type Output = EquivPoly2;
            fn $method(self, rhs: EquivPoly2) -> EquivPoly2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&EquivPoly2> for EquivPoly2 {
            type Output = EquivPoly2;
            fn $method(self, rhs: &EquivPoly2) -> EquivPoly2 {
                (&self).$method(rhs)
            }
        }
        impl $trait<EquivPoly2> for &EquivPoly2 {
            type Output = EquivPoly2;
            fn $method(self, rhs: EquivPoly2) -> EquivPoly2 {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for EquivPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*1 + ({})*eps", self.triv, self.sign)
    }
}

impl fmt::Debug for EquivPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EquivPoly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::q_int;
    use num_bigint::BigInt;

    #[test]
    fn eps_squares_to_one() {
        assert_eq!(&EquivPoly2::eps() * &EquivPoly2::eps(), EquivPoly2::one());
    }

    #[test]
    fn one_is_identity() {
        let x = EquivPoly2::new(QPoly::from_ints(&[1, -2]), QPoly::from_ints(&[0, 3]));
        assert_eq!(&x * &EquivPoly2::one(), x);
    }

    #[test]
    fn product_rule() {
        // (q*1 + eps)(1 - eps) = (q-1)*1 + (1-q)*eps
        let x = EquivPoly2::new(QPoly::q(), QPoly::one());
        let y = EquivPoly2::new(QPoly::one(), QPoly::constant(-1));
        let expected = EquivPoly2::new(QPoly::from_ints(&[-1, 1]), QPoly::from_ints(&[1, -1]));
        assert_eq!(&x * &y, expected);
    }

    #[test]
    fn augment_and_rank() {
        // Serre_2(M_{0,4}) = (q-1)*1 - eps
        let m04 = EquivPoly2::new(QPoly::from_ints(&[-1, 1]), QPoly::constant(-1));
        assert_eq!(m04.augment(), QPoly::from_ints(&[-1, 1]));
        assert_eq!(m04.rank(), QPoly::from_ints(&[-2, 1]));
        assert_eq!(EquivPoly2::eps().augment(), QPoly::zero());
        assert_eq!(EquivPoly2::one().rank(), QPoly::one());
    }

    #[test]
    fn square_of_p1() {
        // X = P^1: Serre_2(X^2) = [3]*1 + q*eps
        let sq = equivariant_square(&q_int(2)).unwrap();
        assert_eq!(sq, EquivPoly2::new(q_int(3), QPoly::q()));
        // X = point
        assert_eq!(equivariant_square(&QPoly::one()).unwrap(), EquivPoly2::one());
        // X = P^2: sigma_2([3]) = [4 choose 2], lambda_2([3]) = q [3 choose 2]
        let sq = equivariant_square(&q_int(3)).unwrap();
        assert_eq!(
            sq,
            EquivPoly2::new(QPoly::from_ints(&[1, 1, 2, 1, 1]), QPoly::from_ints(&[0, 1, 1, 1]))
        );
    }

    #[test]
    fn square_rejects_virtual_classes() {
        assert!(matches!(
            equivariant_square(&QPoly::from_ints(&[-2, 1])),
            Err(Error::NegativeInput { .. })
        ));
    }

    #[test]
    fn rank_of_square_is_square() {
        for p in [q_int(2), q_int(5), QPoly::from_ints(&[2, 0, 3, 1])] {
            let sq = equivariant_square(&p).unwrap();
            assert_eq!(sq.rank(), &p * &p);
        }
    }

    #[test]
    fn augment_of_square_at_one_counts_symmetric_pairs() {
        for p in [q_int(2), q_int(4), QPoly::from_ints(&[1, 2, 2])] {
            let m = p.eval_at_one();
            let expected = (&m * (&m + BigInt::from(1))) / BigInt::from(2);
            let sq = equivariant_square(&p).unwrap();
            assert_eq!(sq.augment().eval_at_one(), expected);
        }
    }

    #[test]
    fn scalar_division() {
        // Serre_2(F(P^1,4)) / Serre(PGL(2)) = (q-1)*1 - eps
        let num = EquivPoly2::new(
            QPoly::from_ints(&[0, 1, -1, -1, 1]),
            QPoly::from_ints(&[0, 1, 0, -1]),
        );
        let den = QPoly::from_ints(&[0, -1, 0, 1]);
        let expected = EquivPoly2::new(QPoly::from_ints(&[-1, 1]), QPoly::constant(-1));
        assert_eq!(num.exact_div_scalar(&den).unwrap(), expected);

        let x = EquivPoly2::new(QPoly::from_ints(&[1, 2]), QPoly::q());
        assert_eq!(x.exact_div_scalar(&QPoly::one()).unwrap(), x);

        let y = EquivPoly2::scalar(QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(
            y.exact_div_scalar(&QPoly::q()).unwrap(),
            EquivPoly2::scalar(QPoly::from_ints(&[1, 1]))
        );
        assert_eq!(y.exact_div_scalar(&QPoly::zero()), Err(Error::DivisionByZero));
    }
}
