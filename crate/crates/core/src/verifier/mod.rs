//! Checks that do not depend on the generators: the parity certificate, the
//! exhaustive subset oracle, and a direct search for {0,1} colourings.

mod colour;
mod oracle;
mod parity;

pub use colour::{find_colouring, noncolourability_check};
pub use oracle::{oracle_enumerate, oracle_enumerate_parallel, OracleResult};
pub use parity::{basis_mask, verify_parity, OccurrenceMask, ParityCertificate, Signature};
