//! Periodic characters, generalized Bernoulli numbers, `L_χ(−n)`, the
//! functional `𝕃_χ(xⁿ) = L_χ(−n)` and the coefficients `H_{a,b,χ}(n)` of
//! partial theta functions.

mod asymptotic;
mod bernoulli;
mod chi;
mod stirling;
mod theta;

pub use asymptotic::{asymptotic_residual, Residual};
pub use bernoulli::{
    bernoulli_number, bernoulli_numbers, bernoulli_poly, gen_bernoulli, gen_bernoulli_series, l_operator, l_value,
    LTable,
};
pub use chi::PeriodicChi;
pub use stirling::{stirling1, stirling1_table, stirling2, stirling2_table};
pub use theta::{
    alpha_coefficients, h_coefficient, h_sequence, h_via_stirling, theta_integrality_check, HSequence,
    IntegralityReport, ThetaDatum,
};
