//! Closed forms for hooks: Poincare series, Betti tables, regularity,
//! Hilbert series, and the `t`-binomial identities behind them.

mod betti;
mod bi;
mod hilbert;
mod poincare;
mod tbinom;
mod uni;

pub use betti::{betti_table, regularity_from_table, regularity_hook, BettiJson, BettiTable};
pub use bi::BiPoly;
pub use hilbert::{euler_identity_check, hilbert_hook, hilbert_j_truncated, hilbert_via_factorization};
pub use poincare::{
    herzog_takayama_poincare, mapping_cone_shift, poincare_hook, poincare_j_hook,
    poincare_recursive, poincare_recursive_ungraded,
};
pub use tbinom::{
    binomial, binomial_int, cauchy_identity_check, factorial, hockey_stick_check, t_binomial,
    t_factorial, t_integer,
};
pub use uni::UniSeries;
