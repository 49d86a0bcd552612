pub mod error;
pub mod assembly;
pub mod dilation;
pub mod linalg;

pub use error::{Error, Result};
