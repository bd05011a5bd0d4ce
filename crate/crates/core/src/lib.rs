pub mod auxiliary;
pub mod casework;
pub mod cli;
pub mod error;
pub mod exact;
pub mod exotica;
pub mod genus;
pub mod homology;
pub mod io;
pub mod knot;
pub mod obstructions;
pub mod symbolic;

pub use error::{Error, Result};
