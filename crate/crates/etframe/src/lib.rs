pub mod config;
pub mod error;
pub mod operator;

pub use config::ToleranceConfig;
pub use error::{Error, NotDecomposableReason, Result};
pub use operator::{EigenSystem, SymmetricOperator};
