//! Zeta-zero tables and the special functions the explicit formulas need:
//! `ζ′/ζ` on the real line, the digamma function, `li`, and the residue
//! constants of the truncated explicit formula.

mod special;
mod zeros;

pub use special::{digamma, log_deriv_zeta, log_integral, residues_a_b, ResiduePair, EULER_GAMMA};
pub use zeros::{
    sum_inverse_gamma_sq, tail_bound_inverse_gamma_sq, ZeroSum, ZeroTable,
    INVERSE_GAMMA_SQ_BOUND,
};
