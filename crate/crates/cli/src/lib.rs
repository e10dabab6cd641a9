//! File formats, run reports and the `detold` command line built on
//! [`detold_core`].

pub mod app;
pub mod formats;
pub mod report;
