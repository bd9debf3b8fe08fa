use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, CellSet};
use crate::tableaux::{Filling, WeakComposition};

/// The content type of one column of a {1,2}-table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColumnClass {
    Empty,
    OnePure,
    TwoPure,
    Mixed,
}

impl ColumnClass {
    /// Weight of the class in the potential [`Table12::ell`].
    pub fn sig(self) -> u32 {
        match self {
            ColumnClass::Empty | ColumnClass::TwoPure => 0,
            ColumnClass::Mixed => 1,
            ColumnClass::OnePure => 2,
        }
    }
}

/// One column: rows `top .. top+len`, the first `ones` of them holding 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column {
    pub top: u32,
    pub len: u32,
    pub ones: u32,
}

impl Column {
    pub const EMPTY: Column = Column { top: 0, len: 0, ones: 0 };

    pub fn class(&self) -> ColumnClass {
        match (self.len, self.ones) {
            (0, _) => ColumnClass::Empty,
            (l, o) if o == l => ColumnClass::OnePure,
            (_, 0) => ColumnClass::TwoPure,
            _ => ColumnClass::Mixed,
        }
    }

    /// Rows `[start, end)` holding 2.
    fn twos(&self) -> (u32, u32) {
        (self.top + self.ones, self.top + self.len)
    }

    /// Rows `[start, end)` holding 1.
    fn ones_rows(&self) -> (u32, u32) {
        (self.top, self.top + self.ones)
    }

    fn value_at(&self, row: u32) -> Option<u32> {
        if row < self.top || row >= self.top + self.len {
            None
        } else if row < self.top + self.ones {
            Some(1)
        } else {
            Some(2)
        }
    }
}

/// A filling of a finite convex cell set by 1 and 2 whose columns weakly
/// increase downwards.
///
/// Column `j` (1-based) is stored at index `j-1`; columns without cells are
/// [`Column::EMPTY`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Table12 {
    columns: Vec<Column>,
}

impl Table12 {
    /// Builds a table from its columns; checks convexity of the domain.
    pub fn from_columns(mut columns: Vec<Column>) -> Result<Self> {
        for (k, c) in columns.iter_mut().enumerate() {
            if c.len == 0 {
                *c = Column::EMPTY;
            } else if c.top == 0 || c.ones > c.len {
                return Err(Error::NotATable12(format!("column {} is malformed", k + 1)));
            }
        }
        while columns.last().is_some_and(|c| c.len == 0) {
            columns.pop();
        }
        let t = Table12 { columns };
        if !t.domain().is_convex() {
            return Err(Error::NonConvexDomain);
        }
        Ok(t)
    }

    /// Reads a filling with entries in `{1,2}`.
    pub fn from_filling(f: &Filling) -> Result<Self> {
        let mut by_col: alloc::collections::BTreeMap<u32, Vec<(u32, u32)>> = Default::default();
        for (cell, v) in f.iter() {
            if v != 1 && v != 2 {
                return Err(Error::NotATable12(format!("entry {v} at {cell}")));
            }
            by_col.entry(cell.col).or_default().push((cell.row, v));
        }
        let mut columns: Vec<Column> = Vec::new();
        for (col, entries) in by_col {
            let idx = col as usize - 1;
            if columns.len() <= idx {
                columns.resize(idx + 1, Column::EMPTY);
            }
            let top = entries[0].0;
            for (k, &(row, _)) in entries.iter().enumerate() {
                if row != top + k as u32 {
                    return Err(Error::NonConvexDomain);
                }
            }
            let ones = entries.iter().take_while(|(_, v)| *v == 1).count() as u32;
            if entries[ones as usize..].iter().any(|(_, v)| *v == 1) {
                return Err(Error::NotATable12(format!("column {col} is not weakly increasing")));
            }
            columns[idx] = Column { top, len: entries.len() as u32, ones };
        }
        Table12::from_columns(columns)
    }

    pub fn to_filling(&self) -> Filling {
        let mut f = Filling::new();
        for (k, c) in self.columns.iter().enumerate() {
            for row in c.top..c.top + c.len {
                f.set(Cell::new(row, k as u32 + 1), c.value_at(row).unwrap());
            }
        }
        f
    }

    pub fn domain(&self) -> CellSet {
        let mut s = CellSet::new();
        for (k, c) in self.columns.iter().enumerate() {
            for row in c.top..c.top + c.len {
                s.insert(Cell::new(row, k as u32 + 1));
            }
        }
        s
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    /// Index of the last nonempty column.
    pub fn num_cols(&self) -> u32 {
        self.columns.len() as u32
    }

    /// Column `k` (1-based); empty beyond the table.
    pub fn column(&self, k: u32) -> Column {
        if k == 0 {
            return Column::EMPTY;
        }
        self.columns.get(k as usize - 1).copied().unwrap_or(Column::EMPTY)
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.column(cell.col).value_at(cell.row)
    }

    pub fn column_class(&self, k: u32) -> ColumnClass {
        self.column(k).class()
    }

    /// `Σ_h h · sig(column h)`.
    pub fn ell(&self) -> u64 {
        self.columns
            .iter()
            .enumerate()
            .map(|(k, c)| (k as u64 + 1) * u64::from(c.class().sig()))
            .sum()
    }

    /// First row of column `k` holding a 2, for a mixed column.
    pub fn sep(&self, k: u32) -> Result<u32> {
        let c = self.column(k);
        if c.class() != ColumnClass::Mixed {
            return Err(Error::NotMixed(k));
        }
        Ok(c.top + c.ones)
    }

    /// `sep` of all mixed columns, left to right.
    pub fn seplist(&self) -> Vec<u32> {
        self.columns
            .iter()
            .filter(|c| c.class() == ColumnClass::Mixed)
            .map(|c| c.top + c.ones)
            .collect()
    }

    pub fn is_benign(&self) -> bool {
        self.seplist().windows(2).all(|w| w[0] >= w[1])
    }

    /// Exchanges the contents of 1-pure and 2-pure columns.
    pub fn flip(&self) -> Table12 {
        let columns = self
            .columns
            .iter()
            .map(|c| match c.class() {
                ColumnClass::OnePure => Column { ones: 0, ..*c },
                ColumnClass::TwoPure => Column { ones: c.len, ..*c },
                _ => *c,
            })
            .collect();
        Table12 { columns }
    }

    /// Whether some row has a 2 in column `k` and a 1 in column `k+1`.
    pub fn is_descent(&self, k: u32) -> bool {
        if k == 0 {
            return false;
        }
        let (a0, a1) = self.column(k).twos();
        let (b0, b1) = self.column(k + 1).ones_rows();
        a0.max(b0) < a1.min(b1)
    }

    /// All descents in increasing order.
    pub fn descents(&self) -> Vec<u32> {
        (1..self.num_cols()).filter(|&k| self.is_descent(k)).collect()
    }

    /// A 12-table without descents is a 12-rpp (rows increase weakly).
    pub fn is_rpp(&self) -> bool {
        self.descents().is_empty()
    }

    /// `(#columns containing a 1, #columns containing a 2)`.
    pub fn ircont(&self) -> WeakComposition {
        let ones = self.columns.iter().filter(|c| c.ones > 0).count() as u32;
        let twos = self.columns.iter().filter(|c| c.ones < c.len).count() as u32;
        WeakComposition::new(alloc::vec![ones, twos])
    }

    pub fn ceq(&self) -> WeakComposition {
        self.to_filling().ceq()
    }

    /// Columns taken as given; the caller guarantees a convex domain.
    pub(crate) fn from_columns_unchecked(columns: Vec<Column>) -> Self {
        Table12 { columns }
    }

    pub(crate) fn into_columns(self) -> Vec<Column> {
        self.columns
    }

    /// Flips pure columns in place.
    pub(crate) fn flip_in_place(&mut self) {
        for c in &mut self.columns {
            match c.class() {
                ColumnClass::OnePure => c.ones = 0,
                ColumnClass::TwoPure => c.ones = c.len,
                _ => {}
            }
        }
    }

    pub(crate) fn set_column(&mut self, k: u32, c: Column) {
        self.columns[k as usize - 1] = c;
    }
}

impl fmt::Display for Table12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_filling().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use crate::fixtures::*;
    use super::*;
    use alloc::vec;

    #[test]
    fn ell_example_statistics() {
        let t = ell_example();
        assert_eq!(t.ell(), 18);
        assert_eq!(t.descents(), vec![1, 4]);
        assert!(t.is_benign());
        assert_eq!(t.column_class(2), ColumnClass::Mixed);
        assert_eq!(t.column_class(3), ColumnClass::OnePure);
        assert_eq!(t.column_class(40), ColumnClass::Empty);
        // columns 3 and 4 replaced by (1,2,2) and (1,1,2)
        let mut bad = t.clone();
        bad.set_column(3, Column { top: 1, len: 3, ones: 1 });
        bad.set_column(4, Column { top: 1, len: 3, ones: 2 });
        assert!(!bad.is_benign());
    }

    #[test]
    fn seplist_example_statistics() {
        let t = seplist_example();
        assert_eq!(t.sep(1), Ok(4));
        assert_eq!(t.sep(3), Ok(4));
        assert_eq!(t.sep(5), Ok(2));
        assert_eq!(t.sep(2), Err(Error::NotMixed(2)));
        assert_eq!(t.seplist(), vec![4, 4, 2]);
    }

    #[test]
    fn sig_values() {
        assert_eq!(ColumnClass::Empty.sig(), 0);
        assert_eq!(ColumnClass::TwoPure.sig(), 0);
        assert_eq!(ColumnClass::Mixed.sig(), 1);
        assert_eq!(ColumnClass::OnePure.sig(), 2);
        let lone = table(&[(5, &[1])]);
        assert_eq!(lone.ell(), 10);
    }

    #[test]
    fn flip_examples() {
        let (t, flipped, _) = involution_example();
        assert_eq!(t.flip(), flipped);
        assert_eq!(flipped.flip(), t);
        assert_eq!(table(&[(1, &[1, 2])]).flip(), table(&[(1, &[2, 1])]));
        let mixed = table(&[(1, &[1, 1]), (1, &[2, 2])]);
        assert_eq!(mixed.flip(), mixed);
    }

    #[test]
    fn round_trip_and_errors() {
        let t = ell_example();
        assert_eq!(Table12::from_filling(&t.to_filling()).unwrap(), t);
        assert!(matches!(Table12::from_filling(&grid(&[(1, &[3])])), Err(Error::NotATable12(_))));
        assert!(matches!(Table12::from_filling(&grid(&[(1, &[2]), (1, &[1])])), Err(Error::NotATable12(_))));
        let mut gap = Filling::new();
        gap.set(Cell::new(1, 1), 1);
        gap.set(Cell::new(3, 1), 1);
        assert_eq!(Table12::from_filling(&gap), Err(Error::NonConvexDomain));
    }

    #[test]
    fn ircont_matches_filling() {
        for t in [ell_example(), seplist_example(), resolve_example()] {
            assert_eq!(t.ircont(), t.to_filling().ircont());
        }
    }
}
