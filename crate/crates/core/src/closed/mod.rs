//! Second routes to the numbers computed in [`crate::sums`]: recurrences,
//! printed closed forms, lambda-chain sums, the `m -> m-1` reduction, and
//! generating-function identities checked with the series engine.
//!
//! Closed forms are claims under test. Every one of them is compared against
//! direct summation in this module's tests and in the identity registry.

mod forms;
pub mod gf;
mod lambda;
mod recurrence;
mod reduce;

pub use forms::{m3_closed, p_closed, two_var_closed, M3Form};
pub use gf::{delta_gf_check, gf_remark_check, gf_remark_mismatches, gf_remark_steps};
pub use lambda::{lambda_chains, lambda_prefactor, lambda_sum, LambdaChain, LambdaVariant};
pub use recurrence::{
    overline_p, overline_p_direct, pq_recurrence, two_var_recurrence, uv_recurrence,
};
pub use reduce::chain_reduce;
