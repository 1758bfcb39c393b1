pub mod error;
pub mod fkalg;
pub mod fkcanon;
pub mod polyring;
pub mod skew;
pub mod symgroup;
pub mod verify;

pub use error::{Error, Result};
