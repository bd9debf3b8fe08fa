//! Fillings, the rpp and SSYT predicates, the statistics `cont`, `ircont`
//! and `ceq`, and bounded-entry enumeration.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, CellSet, SkewShape};

/// A finite vector of naturals with implicit trailing zeros.
///
/// Stored trimmed, so derived equality ignores trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition(Vec<u32>);

impl WeakComposition {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeakComposition(entries)
    }

    pub fn zero() -> Self {
        WeakComposition(Vec::new())
    }

    /// Stored entries, without trailing zeros.
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// The `i`-th entry, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `|α|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the last nonzero entry (0 for the zero composition).
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    /// `s_i · α`: transposes the entries `i` and `i+1`.
    pub fn transpose(&self, i: usize) -> WeakComposition {
        let mut v = self.0.clone();
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        v.swap(i - 1, i);
        WeakComposition::new(v)
    }

    pub(crate) fn add_at(&mut self, i: usize, amount: u32) {
        if amount == 0 {
            return;
        }
        if self.0.len() < i {
            self.0.resize(i, 0);
        }
        self.0[i - 1] += amount;
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(v: Vec<u32>) -> Self {
        WeakComposition::new(v)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A map from a finite set of cells to positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    entries: BTreeMap<Cell, u32>,
}

impl Filling {
    pub fn new() -> Self {
        Filling::default()
    }

    /// Fills `shape` row by row; `rows[i-1]` lists the entries of row `i`
    /// from column `μ_i+1` to `λ_i`.
    pub fn from_rows(shape: &SkewShape, rows: &[Vec<u32>]) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let nrows = shape.num_rows() as usize;
        if rows.len() > nrows && rows[nrows..].iter().any(|r| !r.is_empty()) {
            return Err(Error::Parse(format!("{} rows given for a shape with {nrows} rows", rows.len())));
        }
        for i in 1..=shape.num_rows() {
            let range = shape.row_range(i);
            let row = rows.get(i as usize - 1).map(Vec::as_slice).unwrap_or(&[]);
            if row.len() != range.len() as usize {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, shape needs {}",
                    row.len(),
                    range.len()
                )));
            }
            for (col, &v) in range.iter().zip(row) {
                if v == 0 {
                    return Err(Error::Parse(format!("entry at ({i},{col}) must be positive")));
                }
                entries.insert(Cell::new(i, col), v);
            }
        }
        Ok(Filling { entries })
    }

    /// Parses a grid such as `". . 1 2 / . 1 1 2 / 2 1 1 2"`: rows are
    /// separated by `/` or newlines, `.` marks a position outside the domain.
    pub fn parse_grid(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        let lines = text.split(['/', '\n']).map(str::trim).filter(|l| !l.is_empty());
        for (r, line) in lines.enumerate() {
            for (c, tok) in line.split_whitespace().enumerate() {
                if tok == "." || tok == "_" {
                    continue;
                }
                let v: u32 = tok.parse().map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
                if v == 0 {
                    return Err(Error::Parse("entries must be positive".to_string()));
                }
                entries.insert(Cell::new(r as u32 + 1, c as u32 + 1), v);
            }
        }
        Ok(Filling { entries })
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.entries.get(&cell).copied()
    }

    pub fn set(&mut self, cell: Cell, value: u32) {
        self.entries.insert(cell, value);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn domain(&self) -> CellSet {
        self.entries.keys().copied().collect()
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.entries.iter().map(|(&c, &v)| (c, v))
    }

    /// Whether the domain of `self` is exactly the diagram of `shape`.
    pub fn has_shape(&self, shape: &SkewShape) -> bool {
        self.entries.len() == shape.num_cells() && self.entries.keys().all(|&c| shape.contains(c))
    }

    /// The sub-filling on cells whose entry satisfies `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(u32) -> bool) -> Filling {
        Filling { entries: self.entries.iter().filter(|(_, &v)| keep(v)).map(|(&c, &v)| (c, v)).collect() }
    }

    /// Applies `f` to every entry.
    pub fn map_values(&self, mut f: impl FnMut(u32) -> u32) -> Filling {
        Filling { entries: self.entries.iter().map(|(&c, &v)| (c, f(v))).collect() }
    }

    /// Overwrites the entries of `self` at the cells of `other`.
    pub fn overlay(&mut self, other: &Filling) {
        for (c, v) in other.iter() {
            self.entries.insert(c, v);
        }
    }

    /// Entries of row `i` in column order.
    pub fn row(&self, i: u32) -> Vec<(Cell, u32)> {
        self.entries
            .range(Cell::new(i, 0)..Cell::new(i + 1, 0))
            .map(|(&c, &v)| (c, v))
            .collect()
    }

    /// Rows as `Option` grids left-aligned at column 1, covering rows
    /// `1..=max_row`.
    pub fn to_grid(&self) -> Vec<Vec<Option<u32>>> {
        let rows = self.entries.keys().map(|c| c.row).max().unwrap_or(0);
        (1..=rows)
            .map(|i| {
                let row = self.row(i);
                let width = row.last().map(|(c, _)| c.col).unwrap_or(0);
                let mut line = vec![None; width as usize];
                for (c, v) in row {
                    line[c.col as usize - 1] = Some(v);
                }
                line
            })
            .collect()
    }

    /// Weakly increasing along rows and down columns.
    pub fn is_rpp(&self) -> Result<bool> {
        self.check_order(false)
    }

    /// An rpp whose columns strictly increase.
    pub fn is_ssyt(&self) -> Result<bool> {
        self.check_order(true)
    }

    fn check_order(&self, strict_columns: bool) -> Result<bool> {
        if !self.domain().is_convex() {
            return Err(Error::NonConvexDomain);
        }
        for (&c, &v) in &self.entries {
            if let Some(&r) = self.entries.get(&c.right()) {
                if r < v {
                    return Ok(false);
                }
            }
            if let Some(&b) = self.entries.get(&c.below()) {
                if b < v || (strict_columns && b == v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `cont(T)_i = |T⁻¹(i)|`.
    pub fn cont(&self) -> WeakComposition {
        let mut out = WeakComposition::zero();
        for &v in self.entries.values() {
            out.add_at(v as usize, 1);
        }
        out
    }

    /// `ircont(T)_i` = number of columns containing an entry `i`.
    pub fn ircont(&self) -> WeakComposition {
        let pairs: BTreeSet<(u32, u32)> = self.entries.iter().map(|(c, &v)| (c.col, v)).collect();
        let mut out = WeakComposition::zero();
        for (_, v) in pairs {
            out.add_at(v as usize, 1);
        }
        out
    }

    /// Cells whose entry equals the entry directly below them.
    pub fn redundant_cells(&self) -> CellSet {
        self.entries
            .iter()
            .filter(|(c, v)| self.entries.get(&c.below()) == Some(v))
            .map(|(&c, _)| c)
            .collect()
    }

    /// `ceq(T)_i` = number of redundant cells in row `i`.
    pub fn ceq(&self) -> WeakComposition {
        let mut out = WeakComposition::zero();
        for c in self.redundant_cells().iter() {
            out.add_at(c.row as usize, 1);
        }
        out
    }
}

impl fmt::Display for Filling {
    /// One line per row, `.` for cells outside the domain.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grid = self.to_grid();
        for (k, row) in grid.iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let line: Vec<String> = row
                .iter()
                .map(|e| match e {
                    Some(v) => v.to_string(),
                    None => ".".to_string(),
                })
                .collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

/// Precomputed neighbour structure of a skew shape, cells in row-major order.
///
/// Used by the enumerators and by fast statistic evaluation on the raw
/// entry vectors they produce.
#[derive(Debug, Clone)]
pub struct CellLayout {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    cells_below: Vec<u32>,
    columns: Vec<Vec<usize>>,
}

impl CellLayout {
    pub fn new(shape: &SkewShape) -> Self {
        let cells: Vec<Cell> = shape.cells().iter().collect();
        let index: BTreeMap<Cell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let left = cells
            .iter()
            .map(|c| if c.col > 1 { index.get(&Cell::new(c.row, c.col - 1)).copied() } else { None })
            .collect();
        let above = cells
            .iter()
            .map(|c| if c.row > 1 { index.get(&Cell::new(c.row - 1, c.col)).copied() } else { None })
            .collect();
        let below: Vec<Option<usize>> = cells.iter().map(|c| index.get(&c.below()).copied()).collect();
        let cells_below = cells
            .iter()
            .map(|&c| {
                let mut n = 0;
                let mut cur = c.below();
                while index.contains_key(&cur) {
                    n += 1;
                    cur = cur.below();
                }
                n
            })
            .collect();
        let ncols = cells.iter().map(|c| c.col).max().unwrap_or(0) as usize;
        let mut columns = vec![Vec::new(); ncols];
        for (k, c) in cells.iter().enumerate() {
            columns[c.col as usize - 1].push(k);
        }
        CellLayout { cells, left, above, below, cells_below, columns }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Index of the cell directly above cell `k`, if in the shape.
    pub fn above(&self, k: usize) -> Option<usize> {
        self.above[k]
    }

    /// Index of the cell directly below cell `k`, if in the shape.
    pub fn below(&self, k: usize) -> Option<usize> {
        self.below[k]
    }

    /// Cell indices of each column `1..=λ₁` (at position `j-1`), top to
    /// bottom.
    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn to_filling(&self, values: &[u32]) -> Filling {
        Filling { entries: self.cells.iter().copied().zip(values.iter().copied()).collect() }
    }

    /// `ceq` of the filling `values` (row-major).
    pub fn ceq(&self, values: &[u32]) -> WeakComposition {
        let mut out = Vec::new();
        self.ceq_into(values, &mut out);
        WeakComposition::new(out)
    }

    /// Writes `ceq(values)` untrimmed, one slot per row of the layout.
    pub fn ceq_into(&self, values: &[u32], out: &mut Vec<u32>) {
        out.clear();
        out.resize(self.cells.last().map_or(0, |c| c.row as usize), 0);
        for (k, b) in self.below.iter().enumerate() {
            if let Some(b) = *b {
                if values[b] == values[k] {
                    out[self.cells[k].row as usize - 1] += 1;
                }
            }
        }
    }

    /// `ircont` of an rpp `values`. In a weakly increasing column the
    /// distinct entries are exactly those of the non-redundant cells.
    pub fn ircont_of_rpp(&self, values: &[u32]) -> WeakComposition {
        let mut out = Vec::new();
        self.ircont_of_rpp_into(values, &mut out);
        WeakComposition::new(out)
    }

    /// Writes `ircont(values)` of an rpp untrimmed, one slot per value up to
    /// the largest entry.
    pub fn ircont_of_rpp_into(&self, values: &[u32], out: &mut Vec<u32>) {
        out.clear();
        for (k, b) in self.below.iter().enumerate() {
            let redundant = matches!(b, Some(b) if values[*b] == values[k]);
            if !redundant {
                let v = values[k] as usize;
                if out.len() < v {
                    out.resize(v, 0);
                }
                out[v - 1] += 1;
            }
        }
    }

    pub fn cont(&self, values: &[u32]) -> WeakComposition {
        let mut out = WeakComposition::zero();
        for &v in values {
            out.add_at(v as usize, 1);
        }
        out
    }
}

/// Lexicographic (row-major) enumeration of rpps or SSYTs with entries in
/// `1..=max_entry`.
///
/// [`next_values`](Self::next_values) lends the raw entry vector without
/// allocating; the [`Iterator`] impl yields owned [`Filling`]s.
#[derive(Debug, Clone)]
pub struct FillingEnumerator {
    layout: CellLayout,
    max_entry: u32,
    strict: bool,
    values: Vec<u32>,
    started: bool,
    done: bool,
}

impl FillingEnumerator {
    pub fn rpps(shape: &SkewShape, max_entry: u32) -> Self {
        Self::new(shape, max_entry, false)
    }

    pub fn ssyts(shape: &SkewShape, max_entry: u32) -> Self {
        Self::new(shape, max_entry, true)
    }

    fn new(shape: &SkewShape, max_entry: u32, strict: bool) -> Self {
        let layout = CellLayout::new(shape);
        let values = vec![0; layout.len()];
        FillingEnumerator { layout, max_entry, strict, values, started: false, done: false }
    }

    pub fn layout(&self) -> &CellLayout {
        &self.layout
    }

    fn lower(&self, p: usize) -> u32 {
        let mut lo = 1;
        if let Some(l) = self.layout.left[p] {
            lo = lo.max(self.values[l]);
        }
        if let Some(a) = self.layout.above[p] {
            lo = lo.max(self.values[a] + u32::from(self.strict));
        }
        lo
    }

    fn upper(&self, p: usize) -> u32 {
        if self.strict {
            self.max_entry.saturating_sub(self.layout.cells_below[p])
        } else {
            self.max_entry
        }
    }

    // Depth-first search for the next assignment in lexicographic order,
    // resuming at position `pos`.
    fn search(&mut self, mut pos: usize, mut descending: bool) -> bool {
        let n = self.values.len();
        loop {
            if descending {
                if pos == n {
                    return true;
                }
                let lo = self.lower(pos);
                if lo <= self.upper(pos) {
                    self.values[pos] = lo;
                    pos += 1;
                } else {
                    if pos == 0 {
                        return false;
                    }
                    descending = false;
                    pos -= 1;
                }
            } else if self.values[pos] < self.upper(pos) {
                self.values[pos] += 1;
                pos += 1;
                descending = true;
            } else {
                if pos == 0 {
                    return false;
                }
                pos -= 1;
            }
        }
    }

    /// Entries of the filling most recently returned by
    /// [`next_values`](Self::next_values).
    pub fn current_values(&self) -> &[u32] {
        &self.values
    }

    /// Advances to the next filling and returns its entries in row-major
    /// order, or `None` when exhausted.
    pub fn next_values(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.search(0, true)
        } else if self.values.is_empty() {
            false
        } else {
            let last = self.values.len() - 1;
            self.search(last, false)
        };
        if found {
            Some(&self.values)
        } else {
            self.done = true;
            None
        }
    }
}

impl Iterator for FillingEnumerator {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        self.next_values()?;
        Some(self.layout.to_filling(&self.values))
    }
}

/// Every rpp of `shape` with entries in `1..=max_entry`, in lexicographic
/// order of the row-major entry sequence.
pub fn enumerate_rpps(shape: &SkewShape, max_entry: u32) -> FillingEnumerator {
    FillingEnumerator::rpps(shape, max_entry)
}

/// Every SSYT of `shape` with entries in `1..=max_entry`, same order.
pub fn enumerate_ssyts(shape: &SkewShape, max_entry: u32) -> FillingEnumerator {
    FillingEnumerator::ssyts(shape, max_entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::statistics_example;
    use crate::shapes::all_shapes;

    fn wc(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn weak_composition_trailing_zeros() {
        assert_eq!(wc(&[1, 0, 0]), wc(&[1]));
        assert_eq!(wc(&[0, 0]).to_string(), "()");
        assert_eq!(wc(&[0, 1, 2]).transpose(1), wc(&[1, 0, 2]));
        assert_eq!(wc(&[3]).transpose(2), wc(&[3]));
        assert_eq!(wc(&[0, 4]).transpose(2), wc(&[0, 0, 4]));
    }

    #[test]
    fn fig1_predicates() {
        let (_, ta, tb, tc) = statistics_example();
        assert!(!ta.is_rpp().unwrap());
        assert!(tb.is_rpp().unwrap());
        assert!(!tb.is_ssyt().unwrap());
        assert!(tc.is_ssyt().unwrap());
        assert!(Filling::new().is_rpp().unwrap());
        assert!(Filling::new().is_ssyt().unwrap());
        let bad = Filling::parse_grid("1 . / . 1").unwrap();
        assert_eq!(bad.is_rpp(), Err(Error::NonConvexDomain));
    }

    #[test]
    fn fig1_statistics() {
        let (_, ta, tb, tc) = statistics_example();
        assert_eq!(tb.cont(), wc(&[0, 1, 4, 1]));
        assert_eq!(ta.ircont(), wc(&[0, 1, 2, 1, 0, 1]));
        assert_eq!(tb.ircont(), wc(&[0, 1, 3, 1]));
        assert_eq!(tc.ircont(), wc(&[0, 1, 3, 1, 0, 0, 1]));
        assert_eq!(ta.ceq(), wc(&[0, 1]));
        assert_eq!(tb.ceq(), wc(&[1]));
        assert_eq!(tc.ceq(), wc(&[]));
        assert_eq!(ta.redundant_cells(), [Cell::new(2, 2)].into_iter().collect());
        assert!(tc.redundant_cells().is_empty());
    }

    #[test]
    fn small_statistics() {
        assert_eq!(Filling::new().cont(), WeakComposition::zero());
        let single = Filling::parse_grid("3").unwrap();
        assert_eq!(single.cont(), wc(&[0, 0, 1]));
        let column = Filling::parse_grid("1/1/2").unwrap();
        assert_eq!(column.ircont(), wc(&[1, 1]));
        let constant = Filling::parse_grid("5/5/5").unwrap();
        let expected: CellSet = [Cell::new(1, 1), Cell::new(2, 1)].into_iter().collect();
        assert_eq!(constant.redundant_cells(), expected);
    }

    #[test]
    fn enumerate_21() {
        let shape: SkewShape = "2,1".parse().unwrap();
        let got: Vec<String> = enumerate_rpps(&shape, 2).map(|t| t.to_string().replace('\n', "/")).collect();
        assert_eq!(got, ["1 1/1", "1 1/2", "1 2/1", "1 2/2", "2 2/2"]);
        let ssyt: Vec<String> = enumerate_ssyts(&shape, 2).map(|t| t.to_string().replace('\n', "/")).collect();
        assert_eq!(ssyt, ["1 1/2", "1 2/2"]);
    }

    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn enumeration_counts_rows_and_columns() {
        for n in 1..=5u32 {
            let row = SkewShape::straight(&[n]).unwrap();
            let col = SkewShape::straight(&vec![1; n as usize]).unwrap();
            for max in 0..=4u32 {
                let rows = enumerate_rpps(&row, max).count() as u64;
                assert_eq!(rows, binomial((max + n - 1) as u64, n as u64), "row n={n} N={max}");
                let strict = enumerate_ssyts(&col, max).count() as u64;
                assert_eq!(strict, binomial(max as u64, n as u64), "column n={n} N={max}");
            }
        }
    }

    #[test]
    fn enumeration_edge_cases() {
        let empty = SkewShape::empty();
        assert_eq!(enumerate_rpps(&empty, 0).count(), 1);
        assert_eq!(enumerate_rpps(&empty, 3).count(), 1);
        let shape: SkewShape = "2,1".parse().unwrap();
        assert_eq!(enumerate_rpps(&shape, 0).count(), 0);
        let tall = SkewShape::straight(&[1, 1, 1]).unwrap();
        assert_eq!(enumerate_ssyts(&tall, 2).count(), 0);
    }

    // Independent count: fill column by column from the left, each column a
    // weakly (or strictly) increasing sequence compatible with the column to
    // its left.
    fn count_by_columns(shape: &SkewShape, max: u32, strict: bool) -> usize {
        fn columns(shape: &SkewShape) -> Vec<Vec<Cell>> {
            (1..=shape.num_cols())
                .map(|j| shape.cells().iter().filter(|c| c.col == j).collect())
                .collect()
        }
        fn chains(len: usize, max: u32, strict: bool) -> Vec<Vec<u32>> {
            if len == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for rest in chains(len - 1, max, strict) {
                let lo = rest.last().map(|&v| v + u32::from(strict)).unwrap_or(1);
                for v in lo.max(1)..=max {
                    let mut c = rest.clone();
                    c.push(v);
                    out.push(c);
                }
            }
            out
        }
        fn rec(cols: &[Vec<Cell>], k: usize, prev: &BTreeMap<u32, u32>, max: u32, strict: bool) -> usize {
            if k == cols.len() {
                return 1;
            }
            let mut total = 0;
            for chain in chains(cols[k].len(), max, strict) {
                let ok = cols[k].iter().zip(&chain).all(|(c, v)| prev.get(&c.row).is_none_or(|p| p <= v));
                if ok {
                    let next: BTreeMap<u32, u32> = cols[k].iter().map(|c| c.row).zip(chain).collect();
                    total += rec(cols, k + 1, &next, max, strict);
                }
            }
            total
        }
        rec(&columns(shape), 0, &BTreeMap::new(), max, strict)
    }

    #[test]
    fn enumeration_matches_column_oracle() {
        for shape in all_shapes(8) {
            for max in 0..=3 {
                let rpps = enumerate_rpps(&shape, max).count();
                assert_eq!(rpps, count_by_columns(&shape, max, false), "rpps {shape} N={max}");
                let ssyts = enumerate_ssyts(&shape, max).count();
                assert_eq!(ssyts, count_by_columns(&shape, max, true), "ssyts {shape} N={max}");
            }
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_valid() {
        for shape in all_shapes(5) {
            let mut e = enumerate_rpps(&shape, 3);
            let mut prev: Option<Vec<u32>> = None;
            while let Some(v) = e.next_values() {
                let v = v.to_vec();
                if let Some(p) = &prev {
                    assert!(p < &v);
                }
                let t = e.layout().to_filling(&v);
                assert!(t.is_rpp().unwrap());
                assert!(t.has_shape(&shape));
                prev = Some(v);
            }
            let filtered: Vec<Filling> = enumerate_rpps(&shape, 3).filter(|t| t.is_ssyt().unwrap()).collect();
            let direct: Vec<Filling> = enumerate_ssyts(&shape, 3).collect();
            assert_eq!(filtered, direct);
        }
    }

    #[test]
    fn statistic_identities_on_rpps() {
        for shape in all_shapes(6) {
            let mut e = enumerate_rpps(&shape, 3);
            while let Some(v) = e.next_values() {
                let v = v.to_vec();
                let t = e.layout().to_filling(&v);
                let (ceq, ircont) = (t.ceq(), t.ircont());
                assert_eq!((ceq.total() + ircont.total()) as usize, shape.num_cells());
                assert_eq!(t.redundant_cells().len() as u32, ceq.total());
                assert_eq!(e.layout().ceq(&v), ceq);
                assert_eq!(e.layout().ircont_of_rpp(&v), ircont);
                if t.is_ssyt().unwrap() {
                    assert_eq!(t.cont(), ircont);
                }
            }
        }
    }
}
