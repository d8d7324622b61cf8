pub mod assoc;
pub mod cli;
mod dense;
pub mod error;
pub mod dbc;
pub mod exchange;
pub mod graph;
pub mod laurent;
pub mod linalg;
pub mod polygon;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
pub use exchange::{ExtendedExchangeMatrix, Seed, SeedJson};
pub use laurent::{DenominatorVector, LaurentPoly, Monomial};
