//! Exact arithmetic for the minimal Euclidean function on the Gaussian
//! integers.
//!
//! - [`arith`]: the [`GInt`] type, norms, valuations, canonical units.
//! - [`phi`]: the closed-form minimal Euclidean function φ.
//! - [`division`]: Gauss division and the φ-decreasing [`minimal_divide`].
//! - [`expansion`]: (1+i)-ary expansions and a brute-force degree oracle.
//! - [`euclid`]: gcd engines with traces and Bezout coefficients.
//! - [`verify`]: exhaustive property suites over boxes of the lattice.

pub mod arith;
pub mod division;
pub mod error;
pub mod euclid;
pub mod expansion;
pub mod phi;
pub mod sample;
pub mod verify;

pub use arith::{GInt, Unit};
pub use division::{
    adjustment_unnecessary, gauss_divide, minimal_divide, nint_ratio, Condition, DivisionOutcome,
    Strategy,
};
pub use error::{Error, Result};
pub use euclid::{gcd_minimal, gcd_norm, xgcd, xgcd_with, Bezout, Engine, EuclidStep, EuclidTrace};
pub use expansion::{eval_expansion, min_degree_bfs, minimal_expansion, Expansion};
pub use phi::{phi, phi_int, phi_le, phi_parts, w, PhiBranch, PhiParts};
