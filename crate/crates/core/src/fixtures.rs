//! Small hand-checked fillings and tables used as reference data by the unit
//! tests and the acceptance suite.
//!
//! Rows are given as `(first column, entries)` and start at row 1.

use alloc::vec;

use crate::bkengine::Table12;
use crate::shapes::{Cell, SkewShape};
use crate::tableaux::Filling;

/// A filling from rows `(first column, entries)`, row 1 first.
pub fn grid(rows: &[(u32, &[u32])]) -> Filling {
    let mut f = Filling::new();
    for (r, &(start, entries)) in rows.iter().enumerate() {
        for (k, &v) in entries.iter().enumerate() {
            f.set(Cell::new(r as u32 + 1, start + k as u32), v);
        }
    }
    f
}

/// Panics unless the rows form a valid `{1,2}`-table.
pub fn table(rows: &[(u32, &[u32])]) -> Table12 {
    Table12::from_filling(&grid(rows)).unwrap()
}

/// The benign table with ℓ = 18 and descents 1 and 4.
pub fn ell_example() -> Table12 {
    table(&[(3, &[1, 2, 1, 2]), (2, &[1, 1, 2]), (1, &[2, 1, 1, 2]), (1, &[2, 2])])
}

/// Separating rows (4,4,2).
pub fn seplist_example() -> Table12 {
    table(&[(3, &[1, 1, 1]), (2, &[2, 1, 1, 2]), (1, &[1, 2, 1]), (1, &[2, 2, 2])])
}

/// The table with descents of all three types.
pub fn resolve_example() -> Table12 {
    table(&[(3, &[1, 2, 1]), (2, &[1, 1, 2]), (1, &[2, 1, 1]), (1, &[2, 2, 1]), (1, &[2])])
}

/// Its resolutions at descents 1, 2 and 4.
pub fn resolve_example_results() -> [(u32, Table12); 3] {
    [
        (1, table(&[(3, &[1, 2, 1]), (2, &[2, 1, 2]), (1, &[1, 2, 1]), (1, &[2, 2, 1]), (1, &[2])])),
        (2, table(&[(3, &[1, 2, 1]), (2, &[1, 1, 2]), (1, &[2, 1, 1]), (1, &[2, 1, 2]), (1, &[2])])),
        (4, table(&[(3, &[1, 1, 2]), (2, &[1, 1, 1]), (1, &[2, 1, 1]), (1, &[2, 2, 1]), (1, &[2])])),
    ]
}

/// A 12-rpp, its flip and its image under the involution.
pub fn involution_example() -> (Table12, Table12, Table12) {
    let t = table(&[(9, &[1]), (6, &[1, 1, 2]), (4, &[1, 2, 2, 2]), (1, &[1, 2]), (1, &[2])]);
    let flipped = table(&[(9, &[2]), (6, &[1, 1, 1]), (4, &[2, 1, 2, 2]), (1, &[1, 1]), (1, &[2])]);
    let image = table(&[(9, &[2]), (6, &[1, 1, 1]), (4, &[1, 2, 2, 2]), (1, &[1, 1]), (1, &[2])]);
    (t, flipped, image)
}

/// An SSYT and its image under the classical involution with `i = 2`.
pub fn classical_example() -> (Filling, Filling) {
    let t = grid(&[(4, &[1, 1, 2, 2]), (1, &[1, 2, 2, 2, 3, 3]), (1, &[3, 3, 5, 6]), (1, &[4])]);
    let image = grid(&[(4, &[1, 1, 2, 3]), (1, &[1, 2, 2, 3, 3, 3]), (1, &[2, 3, 5, 6]), (1, &[4])]);
    (t, image)
}

/// The shape `(3,2,2)/(1)` with three fillings: not an rpp, an rpp that is not
/// semistandard, and an SSYT.
pub fn statistics_example() -> (SkewShape, Filling, Filling, Filling) {
    let shape: SkewShape = "3,2,2/1".parse().unwrap();
    let rows = |r: [[u32; 2]; 3]| Filling::from_rows(&shape, &r.map(|x| vec![x[0], x[1]])).unwrap();
    let ta = rows([[6, 3], [2, 4], [3, 4]]);
    let tb = rows([[3, 3], [2, 3], [3, 4]]);
    let tc = rows([[3, 3], [2, 4], [3, 7]]);
    (shape, ta, tb, tc)
}

/// The shape `(7,7,7,4,4)/(5,3,2)`.
pub fn running_shape() -> SkewShape {
    "7,7,7,4,4/5,3,2".parse().unwrap()
}

/// Two 12-rpps of [`running_shape`] with seplist-partition (4,3,3,2).
///
/// In the second one cell (5,1) holds a 1; a 2 there would put a fifth NR
/// cell at (4,1).
pub fn seplist_examples() -> (Filling, Filling) {
    let t1 = grid(&[(6, &[1, 2]), (4, &[1, 1, 1, 2]), (3, &[1, 1, 1, 2, 2]), (1, &[1, 2, 2, 2]), (1, &[2, 2, 2, 2])]);
    let t2 = grid(&[(6, &[1, 1]), (4, &[1, 1, 1, 1]), (3, &[1, 1, 1, 1, 2]), (1, &[1, 1, 2, 2]), (1, &[1, 2, 2, 2])]);
    (t1, t2)
}
