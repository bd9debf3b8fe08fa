//! Partitions, skew shapes and finite cell sets.
//!
//! All coordinates are 1-based, matrix convention: `(row, col)` with `(1,1)`
//! in the top-left corner. Two skew shapes compare equal when their Young
//! diagrams coincide, even if `(λ, μ)` differ (e.g. `(3,1,1)/(2,1)` and
//! `(3,2,1)/(2,2)`).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(join(&parts)));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero beyond the stored length.
    pub fn part(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i as usize - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

fn join(parts: &[u32]) -> String {
    let mut s = String::new();
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&p.to_string());
    }
    s
}

/// A box of the plane, `row` and `col` both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub const fn new(row: u32, col: u32) -> Self {
        Cell { row, col }
    }

    pub fn below(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Half-open column interval `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColumnRange {
    pub start: u32,
    pub end: u32,
}

impl ColumnRange {
    pub const fn new(start: u32, end: u32) -> Self {
        ColumnRange { start, end }
    }

    /// `[first, last]` as a half-open range; empty when `first > last`.
    pub fn closed(first: u32, last: u32) -> Self {
        if first > last {
            ColumnRange::new(first, first)
        } else {
            ColumnRange::new(first, last + 1)
        }
    }

    pub fn is_empty(&self) -> bool {
        self.start >= self.end
    }

    pub fn len(&self) -> u32 {
        self.end.saturating_sub(self.start)
    }

    pub fn contains(&self, col: u32) -> bool {
        self.start <= col && col < self.end
    }

    /// Whether every column of `self` lies in `other`. The empty range is a
    /// subset of everything.
    pub fn is_subset_of(&self, other: &ColumnRange) -> bool {
        self.is_empty() || (other.start <= self.start && self.end <= other.end)
    }

    pub fn intersects(&self, other: &ColumnRange) -> bool {
        !self.is_empty() && !other.is_empty() && self.start < other.end && other.start < self.end
    }

    pub fn iter(&self) -> core::ops::Range<u32> {
        self.start..self.end.max(self.start)
    }
}

impl fmt::Display for ColumnRange {
    /// Printed closed, `[a,b]`, or `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "[{},{}]", self.start, self.end - 1)
        }
    }
}

/// A finite set of cells.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.0.insert(cell)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.0.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    pub fn max_col(&self) -> u32 {
        self.0.iter().map(|c| c.col).max().unwrap_or(0)
    }

    pub fn max_row(&self) -> u32 {
        self.0.iter().map(|c| c.row).max().unwrap_or(0)
    }

    /// Convexity: whenever `(i,j)` and `(i″,j″)` are in the set with
    /// `i ≤ i′ ≤ i″` and `j ≤ j′ ≤ j″`, so is `(i′,j′)`.
    pub fn is_convex(&self) -> bool {
        let cells: Vec<Cell> = self.iter().collect();
        for (k, &a) in cells.iter().enumerate() {
            for &b in &cells[k..] {
                if a.row <= b.row && a.col <= b.col {
                    for r in a.row..=b.row {
                        for c in a.col..=b.col {
                            if !self.contains(Cell::new(r, c)) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Edge-connected components, ordered by smallest column, then smallest row.
    pub fn components(&self) -> Vec<CellSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.iter() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = CellSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(c) = stack.pop() {
                comp.insert(c);
                let mut neighbours = vec![c.below(), c.right()];
                if c.row > 1 {
                    neighbours.push(Cell::new(c.row - 1, c.col));
                }
                if c.col > 1 {
                    neighbours.push(Cell::new(c.row, c.col - 1));
                }
                for n in neighbours {
                    if self.contains(n) && seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
            out.push(comp);
        }
        out.sort_by_key(|c| {
            let min_col = c.iter().map(|x| x.col).min().unwrap_or(0);
            let min_row = c.iter().map(|x| x.row).min().unwrap_or(0);
            (min_col, min_row)
        });
        out
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

/// A skew partition `λ/μ` together with its cell set.
#[derive(Debug, Clone)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
    cells: CellSet,
}

impl PartialEq for SkewShape {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for SkewShape {}

impl PartialOrd for SkewShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewShape {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells.cmp(&other.cells)
    }
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        for (k, &m) in mu.parts().iter().enumerate() {
            let l = lambda.part(k as u32 + 1);
            if m > l {
                return Err(Error::NotContained { row: k + 1, mu: m, lambda: l });
            }
        }
        let mut cells = CellSet::new();
        for (k, &l) in lambda.parts().iter().enumerate() {
            let row = k as u32 + 1;
            for col in mu.part(row) + 1..=l {
                cells.insert(Cell::new(row, col));
            }
        }
        Ok(SkewShape { lambda, mu, cells })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(lambda: &[u32], mu: &[u32]) -> Result<Self> {
        SkewShape::new(Partition::new(lambda.to_vec())?, Partition::new(mu.to_vec())?)
    }

    /// The straight shape `λ/∅`.
    pub fn straight(lambda: &[u32]) -> Result<Self> {
        SkewShape::from_parts(lambda, &[])
    }

    pub fn empty() -> Self {
        SkewShape { lambda: Partition::empty(), mu: Partition::empty(), cells: CellSet::new() }
    }

    /// Parses `"λ₁,λ₂,…[/μ₁,μ₂,…]"`, e.g. `"7,7,7,4,4/5,3,2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (l, m) = match text.split_once('/') {
            Some((l, m)) => (l, m),
            None => (text, ""),
        };
        let lambda = Partition::new(parse_parts(l)?)?;
        let mu = Partition::new(parse_parts(m)?)?;
        SkewShape::new(lambda, mu)
    }

    /// Rebuilds a skew shape from a cell set that is the diagram of some
    /// skew partition, keeping the coordinates as given.
    pub fn from_cells(cells: &CellSet) -> Result<Self> {
        if cells.is_empty() {
            return Ok(SkewShape::empty());
        }
        let mut rows: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
        for c in cells.iter() {
            let e = rows.entry(c.row).or_insert((c.col, c.col));
            e.0 = e.0.min(c.col);
            e.1 = e.1.max(c.col);
        }
        let last = cells.max_row();
        let mut lambda = vec![0u32; last as usize];
        let mut mu = vec![0u32; last as usize];
        // Rows without cells get λ_i = μ_i equal to the next row's λ.
        let mut below = 0u32;
        for r in (1..=last).rev() {
            match rows.get(&r) {
                Some(&(lo, hi)) => {
                    lambda[r as usize - 1] = hi;
                    mu[r as usize - 1] = lo - 1;
                    below = hi;
                }
                None => {
                    lambda[r as usize - 1] = below;
                    mu[r as usize - 1] = below;
                }
            }
        }
        let lambda = Partition::new(lambda).map_err(|_| Error::NonConvexDomain)?;
        let mu = Partition::new(mu).map_err(|_| Error::NonConvexDomain)?;
        let shape = SkewShape::new(lambda, mu).map_err(|_| Error::NonConvexDomain)?;
        if &shape.cells != cells {
            return Err(Error::NonConvexDomain);
        }
        Ok(shape)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn cells(&self) -> &CellSet {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of rows of `λ`, i.e. `ℓ(λ)`.
    pub fn num_rows(&self) -> u32 {
        self.lambda.len() as u32
    }

    /// `λ₁`.
    pub fn num_cols(&self) -> u32 {
        self.lambda.part(1)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        let row = cell.row;
        row >= 1 && cell.col > self.mu.part(row) && cell.col <= self.lambda.part(row)
    }

    /// Columns occupied in row `i`: `[μ_i+1, λ_i]`.
    pub fn row_range(&self, i: u32) -> ColumnRange {
        ColumnRange::closed(self.mu.part(i) + 1, self.lambda.part(i))
    }

    /// Rows occupied in column `j`, as a half-open range of row indices.
    pub fn column_rows(&self, j: u32) -> core::ops::Range<u32> {
        let mut rows = self.cells.iter().filter(|c| c.col == j).map(|c| c.row);
        match rows.next() {
            None => 0..0,
            Some(first) => {
                let last = rows.last().unwrap_or(first);
                first..last + 1
            }
        }
    }

    /// `supp(i) = [μ_i+1, λ_{i+1}]`: the columns `j` with both `(i,j)` and
    /// `(i+1,j)` in the shape.
    pub fn support(&self, i: u32) -> ColumnRange {
        ColumnRange::closed(self.mu.part(i) + 1, self.lambda.part(i + 1))
    }

    pub fn is_connected(&self) -> bool {
        self.cells.components().len() <= 1
    }

    /// True when some column in `1..=λ₁` holds no cell.
    pub fn has_empty_columns(&self) -> bool {
        let used: BTreeSet<u32> = self.cells.iter().map(|c| c.col).collect();
        (1..=self.num_cols()).any(|c| !used.contains(&c))
    }

    /// Edge-connected components, each translated so that its first row and
    /// first column are 1. Ordered by smallest original column.
    pub fn connected_components(&self) -> Vec<SkewShape> {
        self.placed_components().into_iter().map(|(s, _, _)| s).collect()
    }

    /// [`connected_components`](Self::connected_components) together with the
    /// `(row, column)` offsets that move each one back into place.
    pub fn placed_components(&self) -> Vec<(SkewShape, u32, u32)> {
        self.cells
            .components()
            .iter()
            .map(|comp| {
                let dr = comp.iter().map(|c| c.row).min().unwrap_or(1) - 1;
                let dc = comp.iter().map(|c| c.col).min().unwrap_or(1) - 1;
                let moved: CellSet = comp.iter().map(|c| Cell::new(c.row - dr, c.col - dc)).collect();
                let shape = SkewShape::from_cells(&moved).expect("component of a skew diagram is a skew diagram");
                (shape, dr, dc)
            })
            .collect()
    }

    /// Keeps the cells with column in `[a, b)`, renumbers columns from 1 and
    /// drops the leading rows that become empty.
    pub fn restrict_columns(&self, a: u32, b: u32) -> Result<SkewShape> {
        self.restrict_columns_with_offset(a, b).map(|r| r.shape)
    }

    /// Like [`restrict_columns`](Self::restrict_columns), also reporting how
    /// many leading rows were dropped.
    pub fn restrict_columns_with_offset(&self, a: u32, b: u32) -> Result<ColumnRestriction> {
        let a = a.max(1);
        if a >= b {
            return Err(Error::EmptyRestriction { start: a, end: b });
        }
        let width = b - a;
        let clamp = |v: u32| v.saturating_sub(a - 1).min(width);
        let rows = self.num_rows();
        let lam: Vec<u32> = (1..=rows).map(|i| clamp(self.lambda.part(i))).collect();
        let mu: Vec<u32> = (1..=rows).map(|i| clamp(self.mu.part(i))).collect();
        let first = (0..rows as usize).find(|&k| lam[k] > mu[k]);
        let Some(first) = first else {
            return Err(Error::EmptyRestriction { start: a, end: b });
        };
        let shape = SkewShape::new(
            Partition::new(lam[first..].to_vec())?,
            Partition::new(mu[first..].to_vec())?,
        )?;
        Ok(ColumnRestriction { shape, row_offset: first as u32, col_offset: a - 1 })
    }

    /// Text form `λ/μ` accepted by [`SkewShape::parse`].
    pub fn to_text(&self) -> String {
        if self.mu.is_empty() {
            join(self.lambda.parts())
        } else {
            format!("{}/{}", join(self.lambda.parts()), join(self.mu.parts()))
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SkewShape::parse(s)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Result of [`SkewShape::restrict_columns_with_offset`]: cell `(i, j)` of
/// `shape` is cell `(i + row_offset, j + col_offset)` of the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnRestriction {
    pub shape: SkewShape,
    pub row_offset: u32,
    pub col_offset: u32,
}

fn parse_parts(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() || text == "∅" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            let p = p.trim();
            p.parse::<u32>().map_err(|_| Error::Parse(format!("invalid part {p:?}")))
        })
        .collect()
}

/// Cell-set convexity test.
pub fn is_convex(z: &CellSet) -> bool {
    z.is_convex()
}

/// Every skew diagram with between 1 and `max_cells` cells that has no empty
/// rows and no empty columns, each listed once (up to diagram equality).
///
/// Diagrams with empty rows or columns in between are translates of these
/// up to independent shifts of their components.
pub fn all_shapes(max_cells: usize) -> Vec<SkewShape> {
    all_shapes_of_width(max_cells, max_cells as u32)
}

/// The shapes of [`all_shapes`] with at most `max_width` columns.
pub fn all_shapes_of_width(max_cells: usize, max_width: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    let max = max_cells as u32;
    for width in 1..=max.min(max_width) {
        let mut rows: Vec<(u32, u32)> = Vec::new();
        extend_rows(width, max, 0, &mut rows, &mut out);
    }
    out.sort();
    out
}

// Rows are chosen top-down as closed intervals [lo, hi] with lo and hi weakly
// decreasing; the first row ends at `width`.
fn extend_rows(width: u32, max: u32, used: u32, rows: &mut Vec<(u32, u32)>, out: &mut Vec<SkewShape>) {
    if let Some(&(lo, _)) = rows.last() {
        if lo == 1 && covers_all_columns(rows, width) {
            let lambda: Vec<u32> = rows.iter().map(|r| r.1).collect();
            let mu: Vec<u32> = rows.iter().map(|r| r.0 - 1).collect();
            out.push(SkewShape::from_parts(&lambda, &mu).expect("valid by construction"));
        }
    }
    let (max_lo, max_hi) = match rows.last() {
        Some(&(lo, hi)) => (lo, hi),
        None => (width, width),
    };
    for hi in 1..=max_hi {
        if rows.is_empty() && hi != width {
            continue;
        }
        for lo in 1..=max_lo.min(hi) {
            let len = hi - lo + 1;
            if used + len > max {
                continue;
            }
            rows.push((lo, hi));
            extend_rows(width, max, used + len, rows, out);
            rows.pop();
        }
    }
}

fn covers_all_columns(rows: &[(u32, u32)], width: u32) -> bool {
    (1..=width).all(|c| rows.iter().any(|&(lo, hi)| lo <= c && c <= hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> SkewShape {
        "7,7,7,4,4/5,3,2".parse().unwrap()
    }

    #[test]
    fn parse_fig1_shape() {
        let s: SkewShape = "3,2,2/1".parse().unwrap();
        let expected: CellSet = [(1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 2)]
            .iter()
            .map(|&(r, c)| Cell::new(r, c))
            .collect();
        assert_eq!(s.cells(), &expected);
    }

    #[test]
    fn parse_straight_and_errors() {
        let s: SkewShape = "2,1".parse().unwrap();
        assert_eq!(s.num_cells(), 3);
        assert!(s.mu().is_empty());
        assert!(matches!(SkewShape::parse("1/2"), Err(Error::NotContained { .. })));
        assert!(matches!(SkewShape::parse("1,2"), Err(Error::NotAPartition(_))));
        assert!(matches!(SkewShape::parse("3,x"), Err(Error::Parse(_))));
        assert!(SkewShape::parse("").unwrap().is_empty());
    }

    #[test]
    fn diagram_equality_ignores_representation() {
        let a = SkewShape::parse("3,1,1/2,1").unwrap();
        let b = SkewShape::parse("3,2,1/2,2").unwrap();
        assert_eq!(a, b);
        assert_ne!(a.lambda(), b.lambda());
    }

    #[test]
    fn supports_of_running_example() {
        let s = running();
        assert_eq!(s.support(3), ColumnRange::closed(3, 4));
        assert_eq!(s.support(2), ColumnRange::closed(4, 7));
        assert_eq!(s.support(4), ColumnRange::closed(1, 4));
        assert_eq!(s.support(3).to_string(), "[3,4]");
        let one = SkewShape::parse("1").unwrap();
        assert!(one.support(1).is_empty());
    }

    #[test]
    fn support_matches_brute_force() {
        for shape in all_shapes(7) {
            for i in 1..=shape.num_rows() + 1 {
                let brute: Vec<u32> = (1..=shape.num_cols() + 1)
                    .filter(|&j| shape.contains(Cell::new(i, j)) && shape.contains(Cell::new(i + 1, j)))
                    .collect();
                let supp: Vec<u32> = shape.support(i).iter().collect();
                assert_eq!(brute, supp, "shape {shape}, row {i}");
            }
        }
    }

    #[test]
    fn convexity() {
        assert!(running().cells().is_convex());
        let diag: CellSet = [Cell::new(1, 1), Cell::new(2, 2)].into_iter().collect();
        assert!(!diag.is_convex());
        assert!(CellSet::new().is_convex());
        let anti: CellSet = [Cell::new(2, 1), Cell::new(1, 3)].into_iter().collect();
        assert!(anti.is_convex());
    }

    #[test]
    fn components() {
        assert_eq!(running().connected_components().len(), 1);
        let comps = SkewShape::parse("2,1/1").unwrap().connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.num_cells() == 1));
        assert_eq!(comps[0], SkewShape::parse("1").unwrap());
        assert!(SkewShape::empty().connected_components().is_empty());
    }

    #[test]
    fn restrictions_of_running_example() {
        let s = running();
        let left = s.restrict_columns_with_offset(1, 3).unwrap();
        assert_eq!(left.shape, SkewShape::parse("2,2").unwrap());
        assert_eq!(left.row_offset, 3);
        let right = s.restrict_columns(5, 8).unwrap();
        assert_eq!(right, SkewShape::parse("3,3,3/1").unwrap());
        assert_eq!(s.restrict_columns(1, s.num_cols() + 1).unwrap(), s);
        let top = SkewShape::parse("3,1/2").unwrap();
        assert!(matches!(top.restrict_columns(2, 3), Err(Error::EmptyRestriction { .. })));
    }

    #[test]
    fn cell_count_and_convexity_of_all_shapes() {
        let shapes = all_shapes(6);
        for s in &shapes {
            assert_eq!(s.num_cells() as u32, s.lambda().size() - s.mu().size());
            assert!(s.cells().is_convex());
            let comps = s.cells().components();
            let total: usize = comps.iter().map(|c| c.len()).sum();
            assert_eq!(total, s.num_cells());
            assert!(comps.iter().all(|c| c.is_convex()));
        }
        let distinct: BTreeSet<&SkewShape> = shapes.iter().collect();
        assert_eq!(distinct.len(), shapes.len());
    }

    #[test]
    fn connected_shape_counts() {
        // parallelogram polyominoes by area: 1, 2, 4, 9, 20, 46
        let counts: Vec<usize> = (1..=6)
            .map(|n| all_shapes(6).iter().filter(|s| s.num_cells() == n && s.is_connected()).count())
            .collect();
        assert_eq!(counts, [1, 2, 4, 9, 20, 46]);
    }

    #[test]
    fn width_bound_filters_all_shapes() {
        let narrow = all_shapes_of_width(7, 3);
        let expected: Vec<SkewShape> = all_shapes(7).into_iter().filter(|s| s.num_cols() <= 3).collect();
        assert_eq!(narrow, expected);
    }

    #[test]
    fn placed_components_rebuild_the_diagram() {
        let s = SkewShape::parse("4,4,1/3,2").unwrap();
        let mut cells = CellSet::new();
        for (c, dr, dc) in s.placed_components() {
            for x in c.cells().iter() {
                cells.insert(Cell::new(x.row + dr, x.col + dc));
            }
        }
        assert_eq!(&cells, s.cells());
        assert_eq!(s.placed_components().len(), 2);
    }

    #[test]
    fn from_cells_round_trip() {
        for s in all_shapes(6) {
            assert_eq!(SkewShape::from_cells(s.cells()).unwrap(), s);
        }
        let bad: CellSet = [Cell::new(1, 1), Cell::new(2, 2)].into_iter().collect();
        assert!(SkewShape::from_cells(&bad).is_err());
    }
}
