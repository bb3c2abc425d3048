//! Refined Littlewood-Richardson coefficients `c_{λμ}^ν(w)`.
//!
//! Three independent engines compute the same number:
//!
//! * [`poly`]: expand `π_{w₀}(x^λ · κ_{w,μ})` in Schur polynomials,
//! * [`crystal`]: count Demazure-crystal tableaux whose concatenated word is dominant,
//! * [`hive`]: count integer hives on the Kogan faces indexed by `w₀w`.
//!
//! [`refined`] dispatches between them, cross-checks results and hosts the
//! saturation scanner and the hive symmetry bijection.

pub mod crystal;
pub mod error;
pub mod hive;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod refined;

pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::Permutation;
