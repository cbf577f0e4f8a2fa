//! Exact characters of minimally supported type-A rational Cherednik
//! modules, colored HOMFLY invariants of torus knots and links, D-module
//! characters on nilpotent cones, and Koszul-BGG homology.

pub mod error;
pub mod laurent;
pub mod partition;
pub mod rational;
pub mod symfunc;
pub mod cherednik;
pub mod knots;
pub mod dmod;
pub mod koszul;

pub use error::{Error, Result};
pub use laurent::{LaurentAQ, RationalAQ};
pub use partition::Partition;
pub use rational::Q;
