pub mod class_ring;
pub mod cli;
pub mod error;
pub mod groups;
pub mod io;
pub mod gsets;
pub mod limits;
pub mod perm;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
