//! Library surface of the command-line front end: the expression parser, the
//! input-file format, and the report pipeline. The `syzygy` binary is a thin
//! wrapper over these.

pub mod input;
pub mod parse;
pub mod report;
