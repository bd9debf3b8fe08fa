use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::shapes::Cell;
use crate::tableaux::Filling;

/// The classical Bender-Knuth involution on semistandard tableaux.
///
/// An `i` with an `i+1` directly below it, and that `i+1`, are frozen. In
/// each row the remaining `i`s and `i+1`s form a contiguous run of `r` copies
/// of `i` followed by `s` copies of `i+1`, which is replaced by `s` copies of
/// `i` followed by `r` copies of `i+1`.
pub fn classical_bk(t: &Filling, i: u32) -> Result<Filling> {
    assert!(i >= 1, "i is 1-based");
    match t.is_ssyt() {
        Ok(true) => {}
        Ok(false) => return Err(Error::NotAnSsyt),
        Err(e) => return Err(e),
    }
    let frozen = |c: Cell, v: u32| {
        if v == i {
            t.get(c.below()) == Some(i + 1)
        } else {
            c.row > 1 && t.get(Cell::new(c.row - 1, c.col)) == Some(i)
        }
    };
    let mut out = t.clone();
    let rows: Vec<u32> = {
        let mut r: Vec<u32> = t.iter().map(|(c, _)| c.row).collect();
        r.dedup();
        r
    };
    for row in rows {
        let free: Vec<(Cell, u32)> = t
            .row(row)
            .into_iter()
            .filter(|&(c, v)| (v == i || v == i + 1) && !frozen(c, v))
            .collect();
        if let (Some(first), Some(last)) = (free.first(), free.last()) {
            debug_assert_eq!((last.0.col - first.0.col) as usize + 1, free.len());
        }
        let r = free.iter().filter(|(_, v)| *v == i).count();
        let s = free.len() - r;
        for (k, (c, _)) in free.iter().enumerate() {
            out.set(*c, if k < s { i } else { i + 1 });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use crate::fixtures::{classical_example, grid};
    use super::*;

    #[test]
    fn textbook_example() {
        let (t, expected) = classical_example();
        let b = classical_bk(&t, 2).unwrap();
        assert_eq!(b, expected);
        assert_eq!(classical_bk(&b, 2).unwrap(), t);
        assert_eq!(super::super::bk_general(&t, 2).unwrap(), expected);
    }

    #[test]
    fn trivial_cases() {
        let t = grid(&[(1, &[1, 4]), (1, &[5])]);
        assert_eq!(classical_bk(&t, 2).unwrap(), t);
        assert_eq!(classical_bk(&grid(&[(1, &[3, 3])]), 3).unwrap(), grid(&[(1, &[4, 4])]));
        assert_eq!(classical_bk(&grid(&[(1, &[1]), (1, &[1])]), 1), Err(Error::NotAnSsyt));
    }
}
