//! Report generation, file formats and the cross-verification engine behind
//! the `rainbow` command-line tool.

pub mod adjudicate;
pub mod bench;
pub mod beta;
pub mod clock;
pub mod dot;
pub mod report;
pub mod verify;

pub use clock::WallClock;
