//! Exact prime counting in arithmetic progressions, explicit GRH-conditional
//! error bounds for those counts, and a numerical margin checker for the
//! elementary inequalities the bounds rely on.

pub mod arith;
pub mod bounds;
pub mod characters;
pub mod error;
pub mod sieve;
pub mod specialfn;
pub mod verifier;
pub mod sum;

pub use error::{Error, Result};
