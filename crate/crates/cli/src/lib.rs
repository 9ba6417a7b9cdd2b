//! Command-line front end: expression parsing, scenario files, and
//! deterministic reports over the exact verification library.

pub mod lex;
pub mod parse;
pub mod report;
pub mod run;
pub mod scenario;
