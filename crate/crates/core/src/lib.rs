//! Exact-arithmetic engine for Taylor coefficients of quantum modular forms at
//! `q = 1` and the linear congruences they satisfy.
//!
//! The crate computes Fishburn-type sequences along two independent routes:
//!
//! * [`habiro`]: expansion of Habiro-ring elements `Σ aₙ(q)(q;q)ₙ` at `q = 1`
//!   (Kontsevich's function, the Hikami multi-sums `F_m^(α)`);
//! * [`lfunc`]: the coefficients `H_{a,b,χ}(n)` of a partial theta function,
//!   written as polynomials in special values `L_χ(-n)`.
//!
//! [`congruence`] turns a theta datum `(a, b, χ)` into predicted congruences
//! `H(pᴬn − B) ≡ 0 (mod pᴬ)` and checks them against computed sequences.

pub mod arith;
pub mod congruence;
pub mod error;
pub mod habiro;
pub mod lfunc;

pub use error::{Error, Result};
