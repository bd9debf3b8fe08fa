use core::fmt;

use super::table::{Column, ColumnClass, Table12};
use crate::error::{Error, Result};

/// The shape of the two columns at a descent of a benign table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescentType {
    /// Mixed column followed by a 1-pure column.
    M1,
    /// 2-pure column followed by a mixed column.
    TwoM,
    /// 2-pure column followed by a 1-pure column.
    TwoOne,
}

impl fmt::Display for DescentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DescentType::M1 => "M1",
            DescentType::TwoM => "2M",
            DescentType::TwoOne => "21",
        })
    }
}

impl Table12 {
    /// Classifies the descent at `k`.
    pub fn descent_type(&self, k: u32) -> Result<DescentType> {
        if !self.is_descent(k) {
            return Err(Error::NotADescent(k));
        }
        if !self.is_benign() {
            return Err(Error::NotBenign);
        }
        // A descent needs a 2 on the left and a 1 on the right, so the left
        // column is 2-pure or mixed and the right one 1-pure or mixed.
        match (self.column_class(k), self.column_class(k + 1)) {
            (ColumnClass::Mixed, ColumnClass::OnePure) => Ok(DescentType::M1),
            (ColumnClass::TwoPure, ColumnClass::Mixed) => Ok(DescentType::TwoM),
            (ColumnClass::TwoPure, ColumnClass::OnePure) => Ok(DescentType::TwoOne),
            // two adjacent mixed columns with a descent have increasing seps
            _ => Err(Error::NotBenign),
        }
    }

    /// Resolves the descent at `k`.
    ///
    /// * `M1`: column `k` becomes 1-pure; column `k+1` becomes mixed with the
    ///   old separating row of column `k`.
    /// * `2M`: column `k` becomes mixed with the old separating row of column
    ///   `k+1`; column `k+1` becomes 2-pure.
    /// * `21`: column `k` becomes 1-pure and column `k+1` 2-pure.
    pub fn resolve(&self, k: u32) -> Result<Table12> {
        let ty = self.descent_type(k)?;
        let mut out = self.clone();
        out.resolve_as(k, ty);
        debug_assert!(out.is_benign());
        Ok(out)
    }

    fn resolve_as(&mut self, k: u32, ty: DescentType) {
        let (left, right) = (self.column(k), self.column(k + 1));
        let (new_left, new_right) = match ty {
            DescentType::M1 => {
                let sep = left.top + left.ones;
                (Column { ones: left.len, ..left }, with_sep(right, sep))
            }
            DescentType::TwoM => {
                let sep = right.top + right.ones;
                (with_sep(left, sep), Column { ones: 0, ..right })
            }
            DescentType::TwoOne => (Column { ones: left.len, ..left }, Column { ones: 0, ..right }),
        };
        self.set_column(k, new_left);
        self.set_column(k + 1, new_right);
    }

    /// Resolves smallest descents in place until none is left. The caller
    /// guarantees the table is benign.
    pub(crate) fn normalize_in_place(&mut self) {
        // resolving at k only touches columns k and k+1, so no descent can
        // appear left of k-1
        let mut from = 1;
        while let Some(k) = (from..self.num_cols()).find(|&k| self.is_descent(k)) {
            from = k.saturating_sub(1).max(1);
            let ty = match (self.column_class(k), self.column_class(k + 1)) {
                (ColumnClass::Mixed, ColumnClass::OnePure) => DescentType::M1,
                (ColumnClass::TwoPure, ColumnClass::Mixed) => DescentType::TwoM,
                (ColumnClass::TwoPure, ColumnClass::OnePure) => DescentType::TwoOne,
                _ => panic!("descent between two mixed columns in a benign table"),
            };
            self.resolve_as(k, ty);
        }
    }
}

// The moved separating row must fall strictly inside the target column.
fn with_sep(c: Column, sep: u32) -> Column {
    assert!(
        c.top < sep && sep < c.top + c.len,
        "separating row {sep} does not split rows {}..{}",
        c.top,
        c.top + c.len
    );
    Column { ones: sep - c.top, ..c }
}

#[cfg(test)]
mod tests {
    use crate::fixtures::*;
    use super::*;
    use alloc::vec;

    #[test]
    fn example_types_and_results() {
        let p = resolve_example();
        assert_eq!(p.descents(), vec![1, 2, 4]);
        assert_eq!(p.descent_type(1), Ok(DescentType::TwoM));
        assert_eq!(p.descent_type(2), Ok(DescentType::M1));
        assert_eq!(p.descent_type(4), Ok(DescentType::TwoOne));
        assert_eq!(p.descent_type(3), Err(Error::NotADescent(3)));
        for (k, expected) in resolve_example_results() {
            assert_eq!(p.resolve(k).unwrap(), expected, "k={k}");
        }
    }

    #[test]
    fn two_column_pictures() {
        // M1
        let t = table(&[(1, &[1, 1]), (1, &[2, 1]), (1, &[2, 1])]);
        assert_eq!(t.resolve(1).unwrap(), table(&[(1, &[1, 1]), (1, &[1, 2]), (1, &[1, 2])]));
        // 2M
        let t = table(&[(1, &[2, 1]), (1, &[2, 1]), (1, &[2, 2])]);
        assert_eq!(t.resolve(1).unwrap(), table(&[(1, &[1, 2]), (1, &[1, 2]), (1, &[2, 2])]));
        // 21
        let t = table(&[(1, &[2, 1])]);
        assert_eq!(t.resolve(1).unwrap(), table(&[(1, &[1, 2])]));
    }

    #[test]
    fn resolution_properties_on_example() {
        let p = resolve_example();
        for k in p.descents() {
            let r = p.resolve(k).unwrap();
            assert_eq!(r.seplist(), p.seplist());
            assert_eq!(r.ceq(), p.ceq());
            assert_eq!(r.ircont(), p.ircont());
            assert!(r.ell() < p.ell());
            assert_eq!(r.flip().resolve(k).unwrap(), p.flip());
        }
    }

    #[test]
    fn adjacent_mixed_descent_is_not_benign() {
        let t = table(&[(1, &[1, 1]), (1, &[2, 1]), (1, &[2, 2])]);
        assert!(t.is_descent(1));
        assert!(!t.is_benign());
        assert_eq!(t.resolve(1), Err(Error::NotBenign));
    }
}
