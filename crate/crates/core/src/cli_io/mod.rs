//! Command line, OEIS b-files and tabular output.

pub mod bfile;
pub mod cli;
pub mod table;

pub use bfile::{
    compare_reference, parse_bfile, parse_bfile_str, records_from_triples, write_bfile, BFileRecord,
};
pub use cli::run_cli;
pub use table::{fmt_real, RowFormat, TableWriter};
