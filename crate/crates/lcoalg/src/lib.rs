//! Exact construction and verification of L-coalgebras.

pub mod coalgebra;
pub mod complex;
pub mod constructions;
pub mod convolution;
pub mod exactlinalg;
pub mod fixtures;
pub mod graphs;
pub mod ncpoly;
