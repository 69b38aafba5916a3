//! Exact evaluation of the integer spin-network symbols `gon` and `tet`,
//! their rational and surd relatives, and their q-deformations.

pub mod error;
pub mod exactnum;
pub mod gon;
pub mod hilbert;
pub mod identities;
pub mod linalg;
pub mod quantum;
pub mod serde_bigint;
pub mod spinnet;
pub mod tet;
pub mod triples;

pub use error::{Error, Result};
