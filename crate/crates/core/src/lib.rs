//! Prime-power sums and the analytic objects built from them.
//!
//! - [`sieve`]: segmented prime and prime-power streams.
//! - [`prime_sums`]: `π_k`, `ψ_k`, `Π_k`, `π_k − π(x^{k+1})` and exact
//!   integrals of these step functions.
//! - [`zeta`]: zero tables, `ζ′/ζ`, digamma, `li`, explicit-formula residues.
//! - [`explicit_formula`]: the truncated explicit formula for `∫ψ_k`, the
//!   averaged oscillation identity and oscillation scans.
//! - [`analysis`]: closed-form evaluation of the weighted and unweighted
//!   integrals of `π_k − π(t^{k+1})`, Mertens and zero-sum diagnostics.

pub mod analysis;
pub mod error;
pub mod explicit_formula;
pub mod phase;
pub mod prime_sums;
pub mod sieve;
pub mod summation;
pub mod zeta;

pub use error::{Error, Result};
pub use prime_sums::Exponent;
pub use sieve::{PrimePowerTerm, SieveConfig};
pub use summation::{Accumulator, CompensatedSum};
pub use zeta::{ResiduePair, ZeroSum, ZeroTable};
pub use explicit_formula::{ExplicitFormulaReport, LittlewoodReport, OscillationScan};
pub use analysis::{SignScanReport, WeightedIntegralReport};
