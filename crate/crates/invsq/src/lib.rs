//! Command-line front end, table formats and figure data for `invsq-core`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod figures;
pub mod grid;
pub mod suites;
pub mod table;
