//! Dense truncated power series in one and two variables.

mod bi;
mod uni;

pub use bi::BiSeries;
pub use uni::UniSeries;
