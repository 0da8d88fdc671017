//! De Concini-Procesi ideals `I_mu` in `Q[x1, ..., xn]`.
//!
//! For hook partitions `(a | b)` the crate computes graded Betti tables,
//! bigraded Poincare series, regularity and Hilbert series from closed forms,
//! and checks them against a brute-force oracle doing exact linear algebra
//! over the rationals.
//!
//! ```
//! use deconcini::partition::Hook;
//! use deconcini::series::{betti_table, hilbert_hook, poincare_hook};
//!
//! let h = Hook::new(2, 1);
//! assert_eq!(poincare_hook(h).render(), "1 + qt + 6qt^2 + 14q^2t^3 + 11q^3t^4 + 3q^4t^5");
//! assert_eq!(hilbert_hook(h).to_string(), "1 + 3q");
//! assert_eq!(betti_table(&poincare_hook(h)).unwrap().regularity(), 1);
//! ```
//!
//! Runnable walkthroughs live in `examples/`: `partitions`, `generators`,
//! `betti`, `hilbert`, `verify`, `identities` and `duality`.

pub mod cli;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use partition::{Hook, Partition};
