//! Instance formats, generators, and report shaping for the `matchlift`
//! command line. The algorithms live in `matchlift-core`; this crate only
//! moves data in and out of them.

pub mod format;
pub mod gen;
pub mod report;
