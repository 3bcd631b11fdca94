//! Exact-arithmetic invariants of moduli spaces of degree-two stable maps.
//!
//! This crate computes Serre (virtual Poincare) polynomials, Betti numbers,
//! Euler characteristics, and additive Chow-basis dimension catalogs for the
//! spaces of two- and one-pointed degree-two stable maps to projective
//! r-space, entirely in exact integer arithmetic.
//!
//! The headline invariant is computed by two independent routes that must
//! agree coefficient-by-coefficient:
//!
//! - [`moduli::serre_m02_strata`] stratifies the space by degeneration type
//!   (ten strata, two of them quotients by an S2-action handled through
//!   equivariant Serre polynomials), and
//! - [`closedform::serre_m02_closed`] evaluates a closed three-factor
//!   product formula.
//!
//! The modules layer as follows: [`qalgebra`] is the polynomial ring Z[q]
//! with its lambda-ring operations; [`equivrep`] is the two-element
//! representation ring over it; [`moduli`] holds the building-block spaces,
//! the stratification, and stable-tree enumeration; [`closedform`] the
//! closed formulas and Betti numbers; [`basis`] the additive-basis catalog;
//! [`verify`] bundles every cross-check into a reportable harness.

pub mod basis;
pub mod closedform;
pub mod equivrep;
pub mod error;
pub mod moduli;
pub mod qalgebra;
pub mod verify;

pub use basis::{basis_catalog, basis_dims, verify_basis, BasisReport, BasisSummand};
pub use closedform::{betti, betti_stable, betti_table, euler_m02, serre_m01_closed, serre_m02_closed, BettiTable};
pub use equivrep::{equivariant_square, EquivPoly2};
pub use error::Error;
pub use moduli::{
    enumerate_stable_trees, serre_m02_strata, serre_stratum, stratum_recipes, StableTree,
    StratumRecipe,
};
pub use qalgebra::{lambda_k, q_binomial, q_factorial, q_int, sigma_k, QPoly};
