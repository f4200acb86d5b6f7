//! Symmetric-group module structure of the rational cohomology of the groups
//! `Γ_{n,s}` (with `Γ_{n,0} = Out(F_n)` and `Γ_{n,1} = Aut(F_n)`) for rank
//! `n ≤ 2`, together with a vanishing-verdict engine for assembly maps built
//! by gluing leaves of graphs.
//!
//! The algebra is generic over the multiplicity scalar (see [`Multiplicity`]);
//! the aliases below fix it to arbitrary precision, which is what the CLI and
//! the assembly engine use.

pub mod assembly;
pub mod error;
pub mod gamma;
pub mod modular;
pub mod partition;
pub mod rep_ring;
pub mod scalar;
pub mod selfcheck;

pub use error::{Error, Result};
pub use partition::Partition;
pub use rep_ring::ModuleSum;
pub use scalar::Multiplicity;

/// Arbitrary-precision non-negative integer.
pub type BigNat = num_bigint::BigUint;

/// An `S_n`-module with exact multiplicities.
pub type Module = ModuleSum<BigNat>;

/// An `S_n`-module with machine-word multiplicities, for small computations
/// where overflow is known not to occur.
pub type Module64 = ModuleSum<u64>;

/// `W_q` with exact multiplicities.
pub type WModule = gamma::ModularLayeredSum<BigNat>;
