//! Document format, JSON reports and the command-line driver for `blfkit-core`.

pub mod cli;
pub mod doc;
pub mod report;
pub mod selftest;
