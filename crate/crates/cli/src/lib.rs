//! IO companion to `gvcalc-core`: category description files, graph and
//! braid text formats, JSON/CSV report rendering, and the command
//! implementations behind the `gvcalc` binary.

pub mod approx;
pub mod braid_text;
pub mod category_file;
pub mod commands;
pub mod graph_file;
pub mod json;
