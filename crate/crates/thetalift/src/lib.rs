//! Exact computations for the higher metaplectic theta lift: matrix groups
//! in anti-diagonal form, unipotent radicals and their characters, the
//! tensor and block-diagonal embeddings, tame Hilbert symbols and torus
//! cocycles, symplectic nilpotent orbits, and Weyl elements.

pub mod error;
pub mod matrix;
pub mod scalars;
pub mod groups;
pub mod unipotent;
pub mod embed;
pub mod cocycle;
pub mod orbits;
pub mod weyl;
pub mod sampling;
pub mod exponents;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalars::{Fp, MuR, PAdicScalar, PrimeFieldElement, Rational, Scalar};
