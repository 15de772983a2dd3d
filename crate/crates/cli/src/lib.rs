//! Std companion to `induced-menger-core`: JSON formats, the figure
//! fixtures, random generators and the threaded closure driver.

pub mod figures;
pub mod gen;
pub mod io;
pub mod par;
pub mod verify;

use induced_menger_core::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// 1 for a mathematical negative, 2 for bad input or an exhausted budget,
/// 3 for a violated invariant.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotEnoughPaths { .. } => 1,
        Error::Input(_) | Error::Budget(_) => 2,
        Error::Invariant(_) => 3,
    }
}
