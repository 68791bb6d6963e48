//! Library surface of the command-line tool: the diagram file format, the
//! report structure, and the command implementations. The binary in
//! `main.rs` is a thin argument-parsing wrapper around these.

pub mod doc;
pub mod report;
pub mod run;
