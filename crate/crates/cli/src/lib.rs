//! Library half of the `gjx` command-line tool: matrix text parsing,
//! the JSON trace document, the seeded fuzz harness, and the command
//! implementations themselves. The binary is a thin argument-parsing
//! wrapper so everything here is testable in-process.

pub mod commands;
pub mod doc;
pub mod fuzz;
pub mod parse;
