//! Exact computation of Jack symmetric functions and W-algebra singular
//! vectors in Heisenberg Fock modules.
//!
//! The crate provides, bottom to top:
//!
//! - [`scalar`]: the exact coefficient field `Q(t)[a]/(a^2 t - 1)`, with
//!   specialization to quadratic number fields and high-precision reals
//! - [`partition`]: integer-partition combinatorics (dominance order,
//!   arm/leg statistics, containment, rectangle sums, enumeration)
//! - [`symfunc`]: the ring of symmetric functions in the power-sum basis;
//!   Jack functions, dual norms, skew Jacks, evaluation norms, the
//!   truncated Cauchy identity and a Schur cross-check
//! - [`heisenberg`]: sl(N) weight geometry, Fock modules over the rank
//!   N-1 Heisenberg algebra, and the mode actions of the Virasoro field,
//!   the weight-3 W field and the quantum Miura generators
//! - [`screening`]: the free-field isomorphism from symmetric functions to
//!   creation polynomials and the evaluated singular-vector formulas
//! - [`verify`]: independent certification by annihilation checks,
//!   eigenvalue checks and a brute-force kernel oracle
//! - [`cli`]: the job configuration and dispatch behind the `wfock` binary
//!
//! All arithmetic is exact; no floating point enters any computation.

pub mod cli;
pub mod error;
pub mod heisenberg;
pub mod partition;
pub mod scalar;
pub mod screening;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use heisenberg::{FockVector, Weight};
pub use partition::Partition;
pub use scalar::Scalar;
pub use screening::ScreeningSpec;
pub use symfunc::SymFunc;
