//! Exact arithmetic in `Q[H]/(H^9)` and order-2 jets in an auxiliary `k`.
//!
//! Every adjusted predegree polynomial, correction term and local factor in
//! this crate is a [`TruncSeries`]; the irreducible-singularity formula is
//! evaluated through [`KJet2`].

mod jet;
mod rational;
mod trunc;

pub use jet::{kjet_inverse_cube, kjet_mul, KJet2};
pub use rational::{ParseRationalError, Rational};
pub use trunc::{TruncSeries, LEN, TOP};
