//! Batch front end for `neutrosophic-core`: a small declaration/query
//! language, its evaluator, and text/JSON output.

pub mod dsl;
pub mod format;
pub mod run;

pub use dsl::{parse_expr, parse_program, parse_value, DslError, Pos, Program, Statement};
pub use format::{format_outcomes, format_value, value_from_json, value_to_json, OutputFormat};
pub use run::{run_program, table, Outcome, RunError, TableReport};
