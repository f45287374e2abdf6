//! Exact computational toolkit for ideal arrangements of root systems and
//! the cohomology rings of regular Hessenberg varieties.
//!
//! Everything runs over arbitrary-precision rationals; identities are
//! machine-checked by exact equality, never by approximation. The main
//! pipeline, bottom to top:
//!
//! * [`polyalg`] — multivariate polynomials over Q and exact linear algebra;
//! * [`rootsystem`] — root data and Weyl groups for types A, B, C, D, G2;
//! * [`lowerideal`] — lower ideals of positive roots and their exponents;
//! * [`arrangement`] — Poincare polynomials and chamber counts of ideal
//!   arrangements;
//! * [`derivbasis`] — explicit bases of logarithmic derivation modules,
//!   Saito certificates, and the generators of the ideal `a(I)`;
//! * [`gradedring`] — the graded quotient `R/a(I)`: Hilbert series, colon
//!   identities, Poincare duality, and Lefschetz/Hodge-Riemann checks;
//! * [`fixedpoints`] — fixed-point combinatorics and Poincare polynomials
//!   of the associated varieties;
//! * [`gkm`] — GKM graphs, the dot action, and graded dimension checks;
//! * [`volume`] — volume polynomials and the annihilator correspondence.

pub mod arrangement;
pub mod derivbasis;
pub mod error;
pub mod fixedpoints;
pub mod gkm;
pub mod gradedring;
pub mod lowerideal;
pub mod polyalg;
pub mod rootsystem;
pub mod volume;

pub use error::{Error, Result};
pub use polyalg::{Integer, Monomial, Polynomial, Rational};
pub use rootsystem::{Family, Root, RootSystem, RootSystemType, WeylElement, WeylGroup};
