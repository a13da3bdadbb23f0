//! Exact computation of graded Jacobian syzygies of projective hypersurfaces
//! with isolated singularities.
//!
//! Given f homogeneous of degree N in Q[x_0..x_n] and its singular points,
//! the crate computes (all over exact rationals):
//!
//! - Hilbert functions of the Milnor algebra S/J_f, with the stabilized value
//!   certifying the global Tjurina number;
//! - local Milnor and Tjurina numbers, and Saito's weighted-homogeneity test
//!   mu == tau, via truncated local algebra with a Nakayama stopping rule;
//! - the graded syzygy spaces of the partial derivatives, their Koszul
//!   subspaces, and essential quotients, both by dimension formulas and by
//!   exact matrix kernels;
//! - the splitting of a degree-m syzygy basis into Koszul relations plus
//!   essential representatives by testing chart components against the local
//!   Tjurina ideals of the singular points — the kernel equals the Koszul
//!   subspace in every degree exactly when all singularities are weighted
//!   homogeneous (given a transversal chart);
//! - defects of the singular subscheme and the dimension inequalities
//!   relating the small- and high-degree essential relations.

pub mod error;
pub mod fixtures;
pub mod germ;
pub mod hypersurface;
pub mod matrix;
pub mod milnor;
mod par;
pub mod poly;
pub mod rational;
pub mod syzygy;

pub use error::{Error, Result};
pub use hypersurface::Hypersurface;
pub use par::parallelism_enabled;
pub use rational::Rational;
