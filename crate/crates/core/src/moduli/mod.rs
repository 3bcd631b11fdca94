//! Building-block moduli spaces, the equivariant computations, the
//! ten-stratum assembly, and stable-tree enumeration.
//!
//! A stable map from a nodal rational curve degenerates along a tree of
//! components; the moduli space stratifies by that dual tree, and each
//! stratum is (a finite quotient of) a fiber product of spaces of maps with
//! smooth domain. This module provides the Serre polynomials of the smooth
//! building blocks, the two S2-equivariant strata, and the sum over all ten
//! strata of the two-pointed degree-two space.

mod partition;
pub mod strata;
pub mod trees;

pub use strata::{serre_m02_strata, serre_stratum, stratum_recipes, AutGroup, StratumRecipe};
pub use trees::{enumerate_stable_trees, StableTree, StableTreeClass};

use crate::equivrep::{equivariant_square, EquivPoly2};
use crate::error::Error;
use crate::qalgebra::{q_binomial, q_int, QPoly};

/// Serre polynomial of the space of degree-d maps with smooth unpointed
/// domain, `q^((d-1)(r+1)) [r+1 choose 2]`: the Chow ring of this nonlinear
/// Grassmannian agrees with that of the Grassmannian of lines, shifted
/// because Serre polynomials grade by dimension rather than codimension.
pub fn serre_m00(r: u32, d: u32) -> QPoly {
    assert!(r >= 1 && d >= 1);
    q_binomial(r + 1, 2).shift(((d - 1) * (r + 1)) as usize)
}

/// Serre polynomial `[r+1][r]` of the flag variety of pointed lines in P^r.
pub fn serre_flag01(r: u32) -> QPoly {
    assert!(r >= 1);
    &q_int(r + 1) * &q_int(r)
}

/// Serre polynomial of the configuration space of n distinct labeled points
/// on P^1: `prod_{i=0}^{n-1} (Serre(P^1) - i)`.
pub fn serre_config_p1(n: u32) -> QPoly {
    let p1 = q_int(2);
    (0..n as i64).fold(QPoly::one(), |acc, i| {
        &acc * &(&p1 - &QPoly::constant(i))
    })
}

/// Serre polynomial of PGL(2), the complement of a quadric surface in P^3:
/// `[4] - [2]^2 = q^3 - q`.
pub fn serre_pgl2() -> QPoly {
    &q_int(4) - &q_int(2).pow(2)
}

/// Serre polynomial of the n-pointed degree-d building block with smooth
/// domain. For d >= 1 this is an F(P^1, n)-bundle over the unpointed space;
/// for d = 0 it is `M_{0,n} x P^r`, needed only for n = 3, 4.
pub(crate) fn serre_block(r: u32, n: u32, d: u32) -> QPoly {
    if d >= 1 {
        &serre_config_p1(n) * &serre_m00(r, d)
    } else {
        match n {
            3 => q_int(r + 1),
            // M_{0,4} is P^1 minus three points
            4 => &QPoly::from_ints(&[-2, 1]) * &q_int(r + 1),
            _ => unreachable!("degree-zero blocks are only needed for n = 3, 4"),
        }
    }
}

/// Equivariant Serre polynomial of `(P^1)^4` where S2 exchanges the two
/// factors named by `swap` (1-based, distinct).
///
/// Computed from the Kunneth basis: the sixteen monomials in the hyperplane
/// pullbacks either are fixed by the exchange (contributing to the trivial
/// part) or pair up, each pair splitting into one symmetric and one
/// antisymmetric class of the same degree. The result is independent of
/// which pair of factors is swapped.
pub fn equivariant_p1_4(swap: (usize, usize)) -> EquivPoly2 {
    let (a, b) = swap;
    assert!(a != b && (1..=4).contains(&a) && (1..=4).contains(&b));
    let (a, b) = (a - 1, b - 1);
    let mut triv = QPoly::zero();
    let mut sign = QPoly::zero();
    for mask in 0u32..16 {
        let deg = mask.count_ones() as usize;
        let swapped = swap_bits(mask, a, b);
        if swapped == mask {
            triv = &triv + &QPoly::monomial(1, deg);
        } else if swapped > mask {
            // one symmetric + one antisymmetric combination per pair
            triv = &triv + &QPoly::monomial(1, deg);
            sign = &sign + &QPoly::monomial(1, deg);
        }
    }
    EquivPoly2::new(triv, sign)
}

fn swap_bits(mask: u32, i: usize, j: usize) -> u32 {
    let bi = (mask >> i) & 1;
    let bj = (mask >> j) & 1;
    mask & !(1 << i) & !(1 << j) | (bi << j) | (bj << i)
}

/// Equivariant Serre polynomial of the configuration space F(P^1, 4) with
/// S2 exchanging two of the four labels.
///
/// Assembled from [`equivariant_p1_4`] by removing the fifteen diagonal
/// cells: the six large diagonals (two exchanged pairs among them), the
/// seven two-identification diagonals (again two exchanged pairs), and the
/// small diagonal. An independent sieve over the partition lattice
/// ([`partition`]) recomputes the value; disagreement is reported as an
/// internal inconsistency rather than ever returned.
pub fn equivariant_f_p1_4() -> Result<EquivPoly2, Error> {
    let ambient = equivariant_p1_4((1, 2));
    // Large diagonals: the pairs (D13, D23) and (D14, D24) are exchanged,
    // the other two are fixed with trivial action on each.
    let large = EquivPoly2::new(
        QPoly::from_ints(&[0, 4, 0, -4]),
        QPoly::from_ints(&[0, 2, 0, -2]),
    );
    // Two-identification diagonals: (D134, D234) and (D(13)(24), D(14)(23))
    // are exchanged.
    let medium = EquivPoly2::new(
        QPoly::from_ints(&[0, -5, -5]),
        QPoly::from_ints(&[0, -2, -2]),
    );
    // The small diagonal is fixed pointwise.
    let small = EquivPoly2::scalar(QPoly::from_ints(&[-1, -1]));
    let value = &(&(&ambient + &large) + &medium) + &small;

    let oracle = equivariant_f_p1_4_lattice();
    if value != oracle {
        return Err(Error::Inconsistency {
            context: "equivariant_f_p1_4",
            detail: format!("cell contributions gave {value}, partition-lattice sieve gave {oracle}"),
        });
    }
    Ok(value)
}

/// The partition-lattice route to `Serre_2(F(P^1, 4))`, exposed so the two
/// routes can be compared directly in tests and verification reports.
pub fn equivariant_f_p1_4_lattice() -> EquivPoly2 {
    partition::equivariant_config_space(&q_int(2), 4, (0, 1))
}

/// Equivariant Serre polynomial of the four-point moduli space M_{0,4} with
/// S2 exchanging two of the marked points: `(q-1)*1 - eps`.
///
/// PGL(2) acts freely on F(P^1, 4) with quotient M_{0,4}, and the action
/// does not touch the cohomology of PGL(2), so this is a scalar division of
/// [`equivariant_f_p1_4`] by `q^3 - q`.
pub fn equivariant_m04() -> Result<EquivPoly2, Error> {
    equivariant_f_p1_4()?.exact_div_scalar(&serre_pgl2())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m00_values() {
        assert_eq!(serre_m00(1, 2), QPoly::monomial(1, 2));
        assert_eq!(serre_m00(1, 1), QPoly::one());
        assert_eq!(serre_m00(2, 2), QPoly::from_ints(&[0, 0, 0, 1, 1, 1]));
    }

    #[test]
    fn flag_values() {
        assert_eq!(serre_flag01(1), QPoly::from_ints(&[1, 1]));
        assert_eq!(serre_flag01(2), QPoly::from_ints(&[1, 2, 2, 1]));
        assert_eq!(serre_flag01(3), QPoly::from_ints(&[1, 2, 3, 3, 2, 1]));
    }

    #[test]
    fn config_space_values() {
        assert_eq!(serre_config_p1(0), QPoly::one());
        assert_eq!(serre_config_p1(2), QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(serre_config_p1(4), QPoly::from_ints(&[0, 2, -1, -2, 1]));
    }

    #[test]
    fn pgl2_value() {
        let p = serre_pgl2();
        assert_eq!(p, QPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(p.eval_at_one(), 0.into());
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn p1_fourth_power() {
        let expected = EquivPoly2::new(
            QPoly::from_ints(&[1, 3, 4, 3, 1]),
            QPoly::from_ints(&[0, 1, 2, 1]),
        );
        assert_eq!(equivariant_p1_4((1, 2)), expected);
        // independent of which pair is exchanged
        for swap in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)] {
            assert_eq!(equivariant_p1_4(swap), expected);
        }
        // rank is the Kunneth fourth power
        assert_eq!(expected.rank(), q_int(2).pow(4));
        // 16 monomials, 4 exchanged pairs: 12 symmetric classes
        assert_eq!(expected.augment().eval_at_one(), 12.into());
    }

    #[test]
    fn f_p1_4_equivariant() {
        let v = equivariant_f_p1_4().unwrap();
        assert_eq!(
            v,
            EquivPoly2::new(
                QPoly::from_ints(&[0, 1, -1, -1, 1]),
                QPoly::from_ints(&[0, 1, 0, -1]),
            )
        );
        assert_eq!(v.rank(), serre_config_p1(4));
        assert_eq!(v.augment().eval_at_one(), 0.into());
        assert_eq!(v, equivariant_f_p1_4_lattice());
    }

    #[test]
    fn m04_equivariant() {
        let v = equivariant_m04().unwrap();
        assert_eq!(
            v,
            EquivPoly2::new(QPoly::from_ints(&[-1, 1]), QPoly::constant(-1))
        );
        assert_eq!(v.rank(), QPoly::from_ints(&[-2, 1]));
        assert_eq!(v.augment(), QPoly::from_ints(&[-1, 1]));
        // consistency with the degree-zero building block
        assert_eq!(&v.rank() * &q_int(3), serre_block(2, 4, 0));
    }

    #[test]
    fn block_values() {
        assert_eq!(serre_block(2, 1, 1), serre_flag01(2));
        assert_eq!(serre_block(1, 2, 2), QPoly::from_ints(&[0, 0, 0, 1, 1]));
        assert_eq!(serre_block(3, 3, 0), q_int(4));
    }
}
