//! Bender-Knuth maps on the raw row-major entry vectors produced by
//! [`FillingEnumerator`](crate::tableaux::FillingEnumerator), for exhaustive
//! checks over millions of fillings. Inputs must be rpps (SSYTs for the
//! classical map) of the layout's shape; this is not re-checked.

use alloc::vec::Vec;

use super::table::{Column, Table12};
use crate::tableaux::CellLayout;

/// Reusable column storage for [`bk_general_values`].
#[derive(Debug, Default)]
pub struct Scratch {
    columns: Vec<Column>,
}

/// Writes `B_i(values)` into `out`.
pub fn bk_general_values(layout: &CellLayout, values: &[u32], i: u32, out: &mut Vec<u32>) {
    bk_general_values_with(layout, values, i, out, &mut Scratch::default());
}

/// [`bk_general_values`] reusing `scratch` between calls.
pub fn bk_general_values_with(layout: &CellLayout, values: &[u32], i: u32, out: &mut Vec<u32>, scratch: &mut Scratch) {
    out.clear();
    out.extend_from_slice(values);
    let cells = layout.cells();
    let mut columns = core::mem::take(&mut scratch.columns);
    columns.clear();
    let mut any = false;
    for col in layout.columns() {
        let mut c = Column::EMPTY;
        for &k in col {
            let v = values[k];
            if v == i || v == i + 1 {
                if c.len == 0 {
                    c.top = cells[k].row;
                }
                c.len += 1;
                c.ones += u32::from(v == i);
            }
        }
        any |= c.len > 0;
        columns.push(c);
    }
    if !any {
        scratch.columns = columns;
        return;
    }
    let mut t = Table12::from_columns_unchecked(columns);
    t.flip_in_place();
    t.normalize_in_place();
    for (col, c) in layout.columns().iter().zip(t.columns()) {
        let mut seen = 0;
        for &k in col {
            let v = values[k];
            if v == i || v == i + 1 {
                out[k] = if seen < c.ones { i } else { i + 1 };
                seen += 1;
            }
        }
    }
    scratch.columns = t.into_columns();
}

/// Writes the classical `BK_i(values)` into `out`.
pub fn classical_bk_values(layout: &CellLayout, values: &[u32], i: u32, out: &mut Vec<u32>) {
    out.clear();
    out.extend_from_slice(values);
    let cells = layout.cells();
    let mut free: Vec<usize> = Vec::new();
    let mut start = 0;
    while start < cells.len() {
        let row = cells[start].row;
        let mut end = start;
        while end < cells.len() && cells[end].row == row {
            end += 1;
        }
        free.clear();
        let mut r = 0;
        for k in start..end {
            let v = values[k];
            let frozen = if v == i {
                layout.below(k).is_some_and(|b| values[b] == i + 1)
            } else if v == i + 1 {
                layout.above(k).is_some_and(|a| values[a] == i)
            } else {
                continue;
            };
            if !frozen {
                free.push(k);
                r += usize::from(v == i);
            }
        }
        let s = free.len() - r;
        for (n, &k) in free.iter().enumerate() {
            out[k] = if n < s { i } else { i + 1 };
        }
        start = end;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkengine::{bk_general, classical_bk};
    use crate::shapes::all_shapes;
    use crate::tableaux::{enumerate_rpps, enumerate_ssyts};

    #[test]
    fn agrees_with_filling_versions() {
        let mut out = Vec::new();
        for shape in all_shapes(6) {
            let mut e = enumerate_rpps(&shape, 3);
            while let Some(v) = e.next_values() {
                let v = v.to_vec();
                let t = e.layout().to_filling(&v);
                for i in 1..=2 {
                    bk_general_values(e.layout(), &v, i, &mut out);
                    assert_eq!(e.layout().to_filling(&out), bk_general(&t, i).unwrap());
                }
            }
            let mut e = enumerate_ssyts(&shape, 3);
            while let Some(v) = e.next_values() {
                let v = v.to_vec();
                let t = e.layout().to_filling(&v);
                for i in 1..=2 {
                    classical_bk_values(e.layout(), &v, i, &mut out);
                    assert_eq!(e.layout().to_filling(&out), classical_bk(&t, i).unwrap());
                }
            }
        }
    }
}
