//! `{1,2}`-tables, descent resolution and the Bender-Knuth involutions.
//!
//! A [`Table12`] fills a convex cell set with 1s and 2s, columns weakly
//! increasing. Resolving descents of a benign table terminates (the potential
//! [`Table12::ell`] drops at each step) and always ends at the same 12-rpp,
//! whatever the order; [`rewrite`] both relies on and checks this.
//! [`bk12`] flips pure columns and resolves, and [`bk_general`] applies that
//! to the entries `i`, `i+1` of an arbitrary rpp.

mod classical;
pub mod fast;
mod involution;
mod random;
mod resolve;
pub mod rewrite;
mod table;

pub use classical::classical_bk;
pub use involution::{bk12, bk_general};
pub use random::{all_benign_tables, random_benign_table};
pub use resolve::DescentType;
pub use rewrite::{check_local_confluence, normal_forms, normalize, DescentResolution, RewriteSystem, Strategy};
pub use table::{Column, ColumnClass, Table12};
