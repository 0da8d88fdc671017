//! Tanisaki generators, the hook split `I = J + E`, and monomial-ideal
//! combinatorics (colons, linear quotients, minimal primes, Alexander duality).

mod monomial_ideal;
mod tanisaki;

pub use monomial_ideal::{linear_quotients_lex, LinearQuotients, MonomialIdeal, MAX_EXHAUSTIVE_VARS};
pub use tanisaki::{hook_split, set_size_multiset, tanisaki_generators, GeneratorSet, HookSplit};

pub use crate::oracle::equal_as_ideals_truncated;
