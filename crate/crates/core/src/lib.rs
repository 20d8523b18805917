pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod euler;
pub mod exact;
pub mod gcn;
pub mod higher_order;
pub mod linalg;
pub mod matrix_unit;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
