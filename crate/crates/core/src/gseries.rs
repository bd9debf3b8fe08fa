//! Truncated `g̃`, `g` and Schur polynomials of skew shapes.
//!
//! Truncation at `nx` means only entries `1..=nx` are allowed, which is the
//! same as setting `x_{nx+1} = x_{nx+2} = ⋯ = 0` in the full series. The `t`
//! variables are never truncated; only `t₁ … t_{rows-1}` can occur.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use crate::polynomial::{Monomial, SparsePoly};
use crate::shapes::SkewShape;
use crate::tableaux::{enumerate_rpps, enumerate_ssyts, WeakComposition};

// Each counter grows by one per enumerated filling, so `u64` cannot overflow
// in any run that finishes.
fn collect(counts: BTreeMap<Monomial, u64>) -> SparsePoly {
    SparsePoly::from_terms(counts.into_iter().map(|(m, c)| (BigInt::from(c), m)))
}

/// `Σ t^{ceq(T)} x^{ircont(T)}` over rpps `T` of `shape` with entries `≤ nx`.
pub fn gtilde(shape: &SkewShape, nx: u32) -> SparsePoly {
    let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
    let mut e = enumerate_rpps(shape, nx);
    while e.next_values().is_some() {
        let (layout, values) = (e.layout(), e.current_values());
        let m = Monomial::new(layout.ircont_of_rpp(values), layout.ceq(values));
        *counts.entry(m).or_insert(0) += 1;
    }
    collect(counts)
}

/// `g_{λ/μ} = Σ x^{ircont(T)}` over rpps with entries `≤ nx`, i.e. [`gtilde`]
/// at `t = (1,1,…)`, computed directly.
pub fn g_poly(shape: &SkewShape, nx: u32) -> SparsePoly {
    let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
    let mut e = enumerate_rpps(shape, nx);
    while e.next_values().is_some() {
        let m = Monomial::new(e.layout().ircont_of_rpp(e.current_values()), WeakComposition::zero());
        *counts.entry(m).or_insert(0) += 1;
    }
    collect(counts)
}

/// `s_{λ/μ}`: `Σ x^{cont(T)}` over SSYTs with entries `≤ nx`.
pub fn schur_poly(shape: &SkewShape, nx: u32) -> SparsePoly {
    let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
    let mut e = enumerate_ssyts(shape, nx);
    while e.next_values().is_some() {
        let m = Monomial::new(e.layout().cont(e.current_values()), WeakComposition::zero());
        *counts.entry(m).or_insert(0) += 1;
    }
    collect(counts)
}

/// Whether [`gtilde`]`(shape, nx)` is symmetric in `x₁ … x_nx`.
pub fn check_symmetry(shape: &SkewShape, nx: u32) -> bool {
    gtilde(shape, nx)
        .is_symmetric_x(nx as usize)
        .expect("entries never exceed nx")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::TValue;
    use alloc::string::ToString;
    use crate::shapes::all_shapes;
    use alloc::vec;
    use alloc::vec::Vec;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn two_one() {
        let s = shape("2,1");
        let g = gtilde(&s, 2);
        assert_eq!(g.to_string(), "x1^2*x2 + x1*x2^2 + t1*x1^2 + t1*x1*x2 + t1*x2^2");
        assert_eq!(g_poly(&s, 2).to_string(), "x1^2*x2 + x1*x2^2 + x1^2 + x1*x2 + x2^2");
        assert_eq!(schur_poly(&s, 2).to_string(), "x1^2*x2 + x1*x2^2");
        assert!(check_symmetry(&s, 2));
    }

    #[test]
    fn degenerate_cases() {
        let empty = SkewShape::empty();
        assert_eq!(gtilde(&empty, 3), SparsePoly::one());
        assert_eq!(g_poly(&empty, 0), SparsePoly::one());
        assert!(check_symmetry(&empty, 3));
        let col = SkewShape::straight(&[1, 1, 1]).unwrap();
        assert!(schur_poly(&col, 2).is_zero());
        assert!(check_symmetry(&shape("3,2,2/1"), 3));
    }

    #[test]
    fn row_is_complete_homogeneous() {
        for n in 1..=5 {
            let row = SkewShape::straight(&[n]).unwrap();
            for nx in 0..=3 {
                let h = SparsePoly::complete_homogeneous(n, nx as usize);
                assert_eq!(gtilde(&row, nx), h);
                assert_eq!(g_poly(&row, nx), h);
            }
        }
    }

    #[test]
    fn column_is_elementary_in_t_and_x() {
        for n in 1..=5usize {
            let col = SkewShape::straight(&vec![1; n]).unwrap();
            for nx in 0..=3usize {
                let mut vars: Vec<SparsePoly> = (1..n).map(SparsePoly::t).collect();
                vars.extend((1..=nx).map(SparsePoly::x));
                assert_eq!(gtilde(&col, nx as u32), SparsePoly::elementary(n, &vars));
                let xs: Vec<SparsePoly> = (1..=nx).map(SparsePoly::x).collect();
                assert_eq!(schur_poly(&col, nx as u32), SparsePoly::elementary(n, &xs));
            }
        }
    }

    #[test]
    fn specializations_and_top_degree() {
        for s in all_shapes(6) {
            let g = gtilde(&s, 3);
            let schur = schur_poly(&s, 3);
            assert_eq!(g.specialize_t(TValue::Zero), schur, "{s}");
            assert_eq!(g.specialize_t(TValue::One), g_poly(&s, 3), "{s}");
            let top = g_poly(&s, 3).x_homogeneous_component(s.num_cells() as u32);
            assert_eq!(top, schur, "{s}");
            assert!(g.max_t_var() < s.num_rows().max(1) as usize);
        }
    }

    #[test]
    fn disconnected_shapes_factor() {
        for s in all_shapes(6).into_iter().filter(|s| !s.is_connected()) {
            // components kept in place so their t indices match
            let product = s
                .cells()
                .components()
                .iter()
                .map(|c| SkewShape::from_cells(c).unwrap())
                .fold(SparsePoly::one(), |acc, c| &acc * &gtilde(&c, 2));
            assert_eq!(gtilde(&s, 2), product, "{s}");
        }
    }

    #[test]
    fn truncation_is_setting_variables_to_zero() {
        for s in all_shapes(5) {
            assert_eq!(gtilde(&s, 3).truncate_x(2), gtilde(&s, 2), "{s}");
        }
    }
}
