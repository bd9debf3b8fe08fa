use alloc::string::String;

use crate::shapes::Cell;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a partition: parts must be weakly decreasing ({0})")]
    NotAPartition(String),
    #[error("mu is not contained in lambda (row {row}: {mu} > {lambda})")]
    NotContained { row: usize, mu: u32, lambda: u32 },
    #[error("no cell of the shape lies in columns [{start}, {end})")]
    EmptyRestriction { start: u32, end: u32 },
    #[error("cell set is not convex")]
    NonConvexDomain,
    #[error("filling is not a reverse plane partition")]
    NotAnRpp,
    #[error("filling is not a semistandard tableau")]
    NotAnSsyt,
    #[error("filling is not a 12-table: {0}")]
    NotATable12(String),
    #[error("column {0} is not mixed")]
    NotMixed(u32),
    #[error("column {0} is not a descent")]
    NotADescent(u32),
    #[error("12-table is not benign (seplist is not weakly decreasing)")]
    NotBenign,
    #[error("polynomial uses x{index} but only {nvars} variables were declared")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("partition is not admissible: supp({0}) is empty")]
    NotAdmissible(u32),
    #[error("partition is not representable")]
    NonRepresentable,
    #[error("shape is not connected or has empty columns")]
    DisconnectedShape,
    #[error("ceq vector is infeasible at row {row}")]
    InfeasibleCeq { row: u32 },
    #[error("cell {0} is outside the domain")]
    CellOutsideDomain(Cell),
}
