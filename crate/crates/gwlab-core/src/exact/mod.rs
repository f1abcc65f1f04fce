//! Exact arithmetic kernels: Bernoulli numbers, elementary symmetric
//! polynomials, the combinatorial bracket factors `[x]^k_i`, the Hodge
//! integral values, and the sine-ratio power series.

mod bernoulli;
mod lambda;
mod poly;
mod symmetric;

pub use bernoulli::{bernoulli, hodge_lambda_cubed};
pub use lambda::{sin_ratio_power, EvenLambdaSeries};
pub use poly::MPoly;
pub use symmetric::{bracket_factor, bracket_factor_poly, elem_symmetric};
