//! Homology of three families of 2-step nilpotent Lie algebras (symplectic,
//! orthogonal and general linear), computed by Weyl coset enumeration and by
//! partition modification rules, and checked against an exact
//! Chevalley–Eilenberg computation.

pub mod ce_oracle;
pub mod charlib;
pub mod cli;
pub mod error;
pub mod kostant;
pub mod linalg;
pub mod modrule;
pub mod partition;
pub mod util;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use partition::Partition;
