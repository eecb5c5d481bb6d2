//! Exact-arithmetic computation of Gieseker semistability verdicts, leading
//! Harder-Narasimhan cocharacters, and multi-weighted lexicographic
//! Harder-Narasimhan filtrations for torus-diagonalized principal sheaves
//! under split reductive groups embedded in products of general linear groups.
//!
//! Everything is computed over the rationals; no floating point appears
//! anywhere. The "for n >> 0" order on Hilbert polynomials is symbolic.

pub mod fixtures;
pub mod ghn;
pub mod invariant;
pub mod linalg;
pub mod optimizer;
pub mod polyq;
pub mod ratio;
pub mod rootdata;
pub mod schema;
pub mod sheafmodel;

#[cfg(test)]
pub(crate) mod testutil;

pub use ghn::{ghn_filtration, LexFiltration};
pub use invariant::{compare_nu, is_semistable, nu, NuValue};
pub use optimizer::{brute_force_max, leading_cochar, slope_canonical};
pub use polyq::RationalPoly;
pub use ratio::Rat;
pub use rootdata::{Cocharacter, GroupDatum, Representation};
pub use sheafmodel::{CombinatorialRhoSheaf, Summand, VarietyDescriptor};
