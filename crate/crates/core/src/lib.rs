//! Parity proofs of the Kochen-Specker theorem in the 40-ray, 25-basis
//! three-qubit system.
//!
//! The crate has four parts:
//!
//! - [`tables`]: the fixed basis table, the Γ-sets derived from it, and the
//!   Λ bookkeeping the constructions use.
//! - [`generators`]: three constructions that produce every parity proof
//!   with 36, 38 and 40 rays (320, 640 and 64 sets).
//! - [`verifier`]: checks that do not touch the generators, including an
//!   exhaustive scan of all 2^25 basis subsets.
//! - [`io`]: JSON records, the ray-coordinate file and DOT export.
//!
//! ```
//! use ks_parity::generators::{run_algorithm_i, ChoiceI};
//! use ks_parity::tables::GammaIndex;
//! use ks_parity::RayId;
//!
//! let choice = ChoiceI {
//!     gamma: GammaIndex::new(1, 1)?,
//!     sigma5: RayId::new(13)?,
//!     sigma6: RayId::new(23)?,
//! };
//! let run = run_algorithm_i(choice)?;
//! assert_eq!(run.set.bases.to_vec(), [1, 6, 7, 8, 10, 14, 15, 17, 20, 21, 25]);
//! assert_eq!(run.set.signature.to_string(), "28_2 8_4 - 11_8");
//! # Ok::<(), ks_parity::Error>(())
//! ```

pub mod error;
pub mod generators;
pub mod ids;
pub mod io;
mod ks_set;
pub mod tables;
pub mod verifier;

pub use error::{Error, Result};
pub use ids::{BasisId, BasisSet, RayId, RaySet};
pub use ks_set::{canonicalize, KsSet};

// Runs the Rust snippets in the guide as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/incidence.md")]
    mod incidence {}
    #[doc = include_str!("../../../book/src/gamma-sets.md")]
    mod gamma_sets {}
    #[doc = include_str!("../../../book/src/algorithm-one.md")]
    mod algorithm_one {}
    #[doc = include_str!("../../../book/src/algorithm-two.md")]
    mod algorithm_two {}
    #[doc = include_str!("../../../book/src/algorithm-three.md")]
    mod algorithm_three {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/colouring.md")]
    mod colouring {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
