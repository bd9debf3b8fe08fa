use alloc::vec::Vec;

use rand_core::RngCore;

use super::table::{Column, Table12};
use crate::shapes::SkewShape;

fn below(rng: &mut impl RngCore, n: u32) -> u32 {
    (rng.next_u64() % u64::from(n)) as u32
}

/// A random benign 12-table on the diagram of `shape`.
///
/// Each column is 1-pure, 2-pure or mixed with equal probability; a mixed
/// column draws its separating row uniformly among the rows that keep the
/// seplist weakly decreasing, and falls back to a pure column when there are
/// none.
pub fn random_benign_table(shape: &SkewShape, rng: &mut impl RngCore) -> Table12 {
    let mut columns = Vec::new();
    let mut max_sep = u32::MAX;
    for j in 1..=shape.num_cols() {
        let rows = shape.column_rows(j);
        let (top, len) = (rows.start, rows.end - rows.start);
        if len == 0 {
            columns.push(Column::EMPTY);
            continue;
        }
        let pure = |rng: &mut _| if below(rng, 2) == 0 { 0 } else { len };
        let ones = match below(rng, 3) {
            0 => 0,
            1 => len,
            _ => {
                // sep ranges over top+1 ..= min(top+len-1, max_sep)
                let hi = (top + len - 1).min(max_sep);
                if hi > top {
                    let sep = top + 1 + below(rng, hi - top);
                    max_sep = sep;
                    sep - top
                } else {
                    pure(rng)
                }
            }
        };
        columns.push(Column { top, len, ones });
    }
    Table12::from_columns(columns).expect("skew diagrams are convex")
}

/// Every benign 12-table on the diagram of `shape`, in lexicographic order
/// of the column contents.
pub fn all_benign_tables(shape: &SkewShape) -> Vec<Table12> {
    fn extend(shape: &SkewShape, j: u32, max_sep: u32, cur: &mut Vec<Column>, out: &mut Vec<Table12>) {
        if j > shape.num_cols() {
            out.push(Table12::from_columns(cur.clone()).expect("skew diagrams are convex"));
            return;
        }
        let rows = shape.column_rows(j);
        let (top, len) = (rows.start, rows.end - rows.start);
        if len == 0 {
            cur.push(Column::EMPTY);
            extend(shape, j + 1, max_sep, cur, out);
            cur.pop();
            return;
        }
        for ones in 0..=len {
            let mixed = ones > 0 && ones < len;
            if mixed && top + ones > max_sep {
                continue;
            }
            cur.push(Column { top, len, ones });
            extend(shape, j + 1, if mixed { top + ones } else { max_sep }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(shape, 1, u32::MAX, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::all_shapes;
    use alloc::vec;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_tables_are_benign_and_fill_the_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let shapes = all_shapes(7);
        for k in 0..2000 {
            let shape = &shapes[k % shapes.len()];
            let t = random_benign_table(shape, &mut rng);
            assert!(t.is_benign());
            assert_eq!(&t.domain(), shape.cells());
        }
    }

    #[test]
    fn all_benign_tables_matches_a_filter_over_all_fillings() {
        for shape in all_shapes(6) {
            let tables = all_benign_tables(&shape);
            let mut expected: Vec<Table12> = all_column_fillings(&shape).into_iter().filter(Table12::is_benign).collect();
            expected.sort();
            let mut sorted = tables.clone();
            sorted.sort();
            assert_eq!(sorted, tables);
            assert_eq!(tables, expected, "{shape}");
        }
    }

    // every filling with weakly increasing 1/2 columns, benign or not
    fn all_column_fillings(shape: &SkewShape) -> Vec<Table12> {
        let mut out = vec![Vec::new()];
        for j in 1..=shape.num_cols() {
            let rows = shape.column_rows(j);
            let (top, len) = (rows.start, rows.end - rows.start);
            out = out
                .into_iter()
                .flat_map(|cols: Vec<Column>| {
                    (0..=len).map(move |ones| {
                        let mut c = cols.clone();
                        c.push(Column { top, len, ones });
                        c
                    })
                })
                .collect();
        }
        out.into_iter().map(|c| Table12::from_columns(c).unwrap()).collect()
    }
}
