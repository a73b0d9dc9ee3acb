//! Cohomology of irreducible equivariant vector bundles on isotropic
//! Grassmannians of types B, C and D, and the classification of the Ulrich
//! ones among them.
//!
//! All arithmetic is exact: weights are stored as doubled integers and
//! representation dimensions are big integers.

pub mod bbw;
pub mod classification;
pub mod enumeration;
pub mod error;
pub mod grassmannian;
pub mod reproduce;
pub mod root_system;
pub mod sampling;
pub mod ulrich;

pub use bbw::{bundle_rank, cohomology, degree, hilbert_value, weyl_dim, CohomologyResult};
pub use classification::classify;
pub use enumeration::{enumerate_ulrich, verify_twist_vanishing, EnumerateOptions, SearchBounds};
pub use error::{Error, Result};
pub use grassmannian::{AlphaBeta, IsotropicGrassmannian, SpinorComponent};
pub use root_system::{Dominantized, LieFamily, Root, RootSystem, Weight};
pub use ulrich::{irr_closed, irr_generic, is_ulrich, Contribution, UlrichCertificate};
