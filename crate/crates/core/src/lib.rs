//! Exact Euler and Bernoulli machinery, Dedekind and DC sums, and an audit
//! engine that evaluates identities among them over parameter grids.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the evaluation path.

pub mod appell;
pub mod audit;
pub mod cli;
pub mod numeric;
pub mod periodic;
pub mod poly;
pub mod report;
pub mod sums;
pub mod umbral;

pub use appell::{
    bernoulli_number, bernoulli_poly, euler_number, euler_poly, eval_poly, poly_derivative,
    poly_integral, series_coeffs_oracle, SequenceCache, SeriesKind,
};
pub use audit::{run_check, sweep, AuditError, AuditReport, CheckResult, ParamGrid, Params};
pub use numeric::{binomial, rat_pow, Int, NumericError, Rational};
pub use periodic::{bernoulli_function, euler_function, floor_frac, sawtooth};
pub use poly::Poly;
pub use report::{format_rational, OutputFormat};
pub use sums::{
    alt_power_sum, dc_sum, dedekind_sum, gen_dedekind_sum, lattice_partition,
    restricted_lattice_sum, theorem8_rhs, LatticeKernel, LatticePartition, PreconditionError,
};
pub use umbral::{theorem9_rhs, umbral_power, UmbraId, UmbralError, UmbralTerm};
