//! Ring expression parsing, table files, the catalog, and report output.

pub mod catalog;
pub mod emit;
pub mod parse;
pub mod table;

pub use catalog::{catalog_lookup, catalog_names, catalog_source};
pub use emit::{emit_profile, emit_report, emit_verdicts, Format};
pub use parse::parse_ring_expr;
pub use table::{emit_table, load_table_file, parse_table_text};
