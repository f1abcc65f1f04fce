//! Exact-arithmetic laboratory for enumerative geometry.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere in the crate. The main subsystems:
//!
//! - [`exact`]: Bernoulli numbers, elementary symmetric polynomials, the
//!   combinatorial bracket factors, Hodge integral values, and the
//!   sine-ratio power series in the genus parameter.
//! - [`series`]: truncated multivariate formal series in descendent
//!   variables `t^a_k`, the genus parameter `λ`, and curve-class variables
//!   `q^β`, with explicit tracking of which coefficients survive
//!   truncation exactly.
//! - [`target`]: the cohomological data of a target variety (basis, Hodge
//!   bidegrees, Poincaré pairing, anticanonical action, Chern numbers).
//! - [`bps`]: the BPS/Gopakumar-Vafa series transform for threefolds in
//!   both directions, with integrality and genus-vanishing audits.
//! - [`virasoro`]: symbolic construction of the Virasoro operators `L_k`,
//!   exact commutators, bracket verification, and constraint residuals.
//! - [`point`]: the point-target specialization, solving the constraints
//!   for psi-class intersection numbers.
//! - [`gorenstein`]: nondegeneracy audit for finite graded algebras.

pub mod bps;
pub mod error;
pub mod exact;
pub mod exec;
pub mod gorenstein;
pub mod linalg;
pub mod point;
pub mod rational;
pub mod schema;
pub mod series;
pub mod target;
pub mod virasoro;

pub use error::Error;
pub use rational::Rat;
