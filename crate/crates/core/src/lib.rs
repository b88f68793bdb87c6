//! Trees of fixed order and independence number, and the largest Sombor
//! index among them.
//!
//! [`verify`] checks the closed-form maximum against exhaustive enumeration;
//! [`transforms`] holds the edge rewirings that move any tree toward the
//! extremal one.

pub mod canon;
pub mod edgelist;
pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod invariants;
pub mod transforms;
pub mod tree;
pub mod verify;

pub use canon::CanonicalCode;
pub use error::{Error, Result, StructureError};
pub use tree::{Stripped, Tree};
