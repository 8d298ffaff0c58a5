//! Exact computation of Kronecker coefficients of the symmetric group.
//!
//! Four independent routes are provided:
//!
//! - [`symfun::kronecker_coefficient_oracle`]: the character formula
//!   `Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`;
//! - [`colored::count_blasiak`]: colored Yamanouchi tableaux built by mixed
//!   insertion, for one hook index;
//! - [`rosas::rosas_kronecker`]: the piecewise closed form for a two-row
//!   partition against a hook;
//! - [`nearhook`]: the Giambelli–Littlewood reduction of a near-hook index
//!   `(a, b, 1^c)` to Littlewood–Richardson and hook-indexed coefficients.
//!
//! Everything is exact; there is no floating point in the crate.

pub mod colored;
pub mod error;
pub mod nearhook;
pub mod partition;
pub mod rosas;
pub mod symfun;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
