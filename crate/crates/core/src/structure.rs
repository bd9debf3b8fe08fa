//! Structure of `{1,2}`-rpps with a prescribed seplist-partition: supports,
//! the representability classification, the decomposition into irreducible
//! components, and the closed form of `Σ x^{ircont}` over such rpps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bkengine::{bk12, ColumnClass, Table12};
use crate::error::{Error, Result};
use crate::polynomial::{Monomial, SparsePoly};
use crate::shapes::{Cell, CellSet, ColumnRange, SkewShape};
use crate::tableaux::{enumerate_rpps, Filling, WeakComposition};

/// A weakly decreasing list of positive row indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeplistPartition(Vec<u32>);

impl SeplistPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(SeplistPartition(parts))
    }

    /// Parses `"4,3,3,2"`; the empty string and `"()"` give the empty list.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if text.is_empty() {
            return Ok(SeplistPartition::default());
        }
        let parts = text
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("invalid entry {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        SeplistPartition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn filtered(&self, mut keep: impl FnMut(u32) -> bool) -> SeplistPartition {
        SeplistPartition(self.0.iter().copied().filter(|&i| keep(i)).collect())
    }

    /// Subtracts `offset` from every entry.
    pub fn shifted_down(&self, offset: u32) -> SeplistPartition {
        SeplistPartition(self.0.iter().map(|&i| i - offset).collect())
    }
}

impl fmt::Display for SeplistPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn ensure_12_rpp(t: &Filling) -> Result<()> {
    if t.iter().any(|(_, v)| v > 2) || !t.is_rpp()? {
        return Err(Error::NotAnRpp);
    }
    Ok(())
}

/// Cells holding a 1 with a 2 directly below.
pub fn nr_cells(t: &Filling) -> Result<CellSet> {
    ensure_12_rpp(t)?;
    Ok(t.iter().filter(|&(c, v)| v == 1 && t.get(c.below()) == Some(2)).map(|(c, _)| c).collect())
}

/// Rows of [`nr_cells`] read by increasing column.
pub fn seplist_partition(t: &Filling) -> Result<SeplistPartition> {
    let mut cells: Vec<Cell> = nr_cells(t)?.iter().collect();
    cells.sort_by_key(|c| c.col);
    SeplistPartition::new(cells.iter().map(|c| c.row).collect())
}

fn check_admissible(nu: &SeplistPartition, shape: &SkewShape) -> Result<()> {
    match nu.0.iter().find(|&&i| shape.support(i).is_empty()) {
        Some(&i) => Err(Error::NotAdmissible(i)),
        None => Ok(()),
    }
}

/// Whether every entry of `nu` has a nonempty support in `shape`.
pub fn is_admissible(nu: &SeplistPartition, shape: &SkewShape) -> bool {
    check_admissible(nu, shape).is_ok()
}

/// Entries whose support lies in `[a, b)`.
pub fn nu_subset(nu: &SeplistPartition, shape: &SkewShape, a: u32, b: u32) -> Result<SeplistPartition> {
    check_admissible(nu, shape)?;
    let range = ColumnRange::new(a, b);
    Ok(nu.filtered(|i| shape.support(i).is_subset_of(&range)))
}

/// Entries whose support meets `[a, b)`.
pub fn nu_cap(nu: &SeplistPartition, shape: &SkewShape, a: u32, b: u32) -> Result<SeplistPartition> {
    check_admissible(nu, shape)?;
    let range = ColumnRange::new(a, b);
    Ok(nu.filtered(|i| shape.support(i).intersects(&range)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    NonRepresentable,
    Reducible,
    Irreducible,
}

impl Classification {
    pub fn is_representable(self) -> bool {
        self != Classification::NonRepresentable
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::NonRepresentable => "non-representable",
            Classification::Reducible => "reducible",
            Classification::Irreducible => "irreducible",
        })
    }
}

fn count_inside(nu: &SeplistPartition, shape: &SkewShape, a: u32, b: u32) -> u32 {
    let range = ColumnRange::new(a, b);
    nu.0.iter().filter(|&&i| shape.support(i).is_subset_of(&range)).count() as u32
}

/// Compares `#ν|_{⊆[a,b)}` with `b - a` over all `1 ≤ a < b ≤ λ₁+1`.
pub fn classify(nu: &SeplistPartition, shape: &SkewShape) -> Result<Classification> {
    check_admissible(nu, shape)?;
    let end = shape.lambda().part(1) + 1;
    let mut tight = false;
    for a in 1..end {
        for b in a + 1..=end {
            let n = count_inside(nu, shape, a, b);
            if n > b - a {
                return Ok(Classification::NonRepresentable);
            }
            tight |= n == b - a;
        }
    }
    // entries of ν always have supports inside [1, λ₁+1), so a long ν is
    // caught above; an empty shape admits only the empty ν
    Ok(if tight { Classification::Reducible } else { Classification::Irreducible })
}

/// One irreducible component of a representable `ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Columns `[start, end)` of the component in the original shape.
    pub columns: ColumnRange,
    /// Entries of `ν` whose support meets the columns, original row indices.
    pub nu: SeplistPartition,
    /// Number of pure columns in the component.
    pub degree: u32,
}

impl Component {
    /// The shape restricted to the component's columns, together with `ν`
    /// re-indexed to its rows. `None` for a component without columns.
    pub fn restricted(&self, shape: &SkewShape) -> Option<(SkewShape, SeplistPartition)> {
        let r = shape.restrict_columns_with_offset(self.columns.start, self.columns.end).ok()?;
        let nu = self.nu.shifted_down(r.row_offset);
        Some((r.shape, nu))
    }
}

/// Maximal intervals `[a_k, b_k)` of forced mixed columns and the irreducible
/// components between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// The intervals `[a_1,b_1), …, [a_r,b_r)`.
    pub mixed_blocks: Vec<ColumnRange>,
    /// `r + 1` components; the `k`-th spans `[b_k, a_{k+1})` with `b_0 = 1`
    /// and `a_{r+1} = λ₁+1`.
    pub components: Vec<Component>,
    /// `#ν`.
    pub total_mixed: u32,
}

impl Decomposition {
    pub fn r(&self) -> usize {
        self.mixed_blocks.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.degree).collect()
    }

    /// `(1, a_1, b_1, …, a_r, b_r, λ₁+1)`.
    pub fn boundaries(&self) -> Vec<u32> {
        let mut out = vec![1];
        for block in &self.mixed_blocks {
            out.push(block.start);
            out.push(block.end);
        }
        out.push(self.components.last().map(|c| c.columns.end).unwrap_or(1));
        out
    }

    /// Components with at least one entry of `ν` or one column.
    pub fn nonempty_components(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| !c.columns.is_empty())
    }
}

fn ensure_standard_shape(shape: &SkewShape) -> Result<()> {
    if !shape.is_connected() || shape.has_empty_columns() {
        return Err(Error::DisconnectedShape);
    }
    Ok(())
}

/// Splits a representable `ν` into irreducible components.
pub fn decompose(nu: &SeplistPartition, shape: &SkewShape) -> Result<Decomposition> {
    ensure_standard_shape(shape)?;
    if !classify(nu, shape)?.is_representable() {
        return Err(Error::NonRepresentable);
    }
    let end = shape.lambda().part(1) + 1;
    let mut tight = Vec::new();
    for a in 1..end {
        for b in a + 1..=end {
            if count_inside(nu, shape, a, b) == b - a {
                tight.push(ColumnRange::new(a, b));
            }
        }
    }
    let mut blocks: Vec<ColumnRange> = tight
        .iter()
        .copied()
        .filter(|t| !tight.iter().any(|u| u != t && t.is_subset_of(u)))
        .collect();
    blocks.sort_by_key(|b| b.start);
    for w in blocks.windows(2) {
        assert!(w[0].end < w[1].start, "maximal tight intervals must be separated");
    }
    let mut starts = vec![1];
    starts.extend(blocks.iter().map(|b| b.end));
    let mut ends: Vec<u32> = blocks.iter().map(|b| b.start).collect();
    ends.push(end);
    let components = starts
        .into_iter()
        .zip(ends)
        .map(|(b, a)| {
            let columns = ColumnRange::new(b, a);
            let part = nu.filtered(|i| shape.support(i).intersects(&columns));
            let degree = columns.len() - part.len() as u32;
            Component { columns, nu: part, degree }
        })
        .collect();
    Ok(Decomposition { mixed_blocks: blocks, components, total_mixed: nu.len() as u32 })
}

/// `P_n(x₁,x₂) = x₁ⁿ + x₁ⁿ⁻¹x₂ + ⋯ + x₂ⁿ`.
pub fn p_poly(n: u32) -> SparsePoly {
    SparsePoly::from_terms((0..=n).map(|k| (1, Monomial::new(vec![n - k, k], vec![]))))
}

/// `(x₁x₂)^M · Π_k P_{n_k}` for a representable `ν`.
pub fn q_formula(nu: &SeplistPartition, shape: &SkewShape) -> Result<SparsePoly> {
    let d = decompose(nu, shape)?;
    let base = SparsePoly::term(1, Monomial::new(vec![d.total_mixed, d.total_mixed], vec![]));
    Ok(d.degrees().into_iter().fold(base, |acc, n| &acc * &p_poly(n)))
}

/// A connected component of a shape, moved to start at row and column 1,
/// with the entries of `ν` that belong to it re-indexed accordingly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapePiece {
    pub shape: SkewShape,
    pub nu: SeplistPartition,
    pub row_offset: u32,
    pub col_offset: u32,
}

/// Splits `shape` into connected components and distributes `nu` over them.
/// An entry `i` goes to the component holding row `i`.
pub fn split_by_component(nu: &SeplistPartition, shape: &SkewShape) -> Result<Vec<ShapePiece>> {
    check_admissible(nu, shape)?;
    Ok(shape
        .placed_components()
        .into_iter()
        .map(|(piece, dr, dc)| {
            let part = nu.filtered(|i| {
                let (row, col) = (i.checked_sub(dr), shape.support(i).start.checked_sub(dc));
                matches!((row, col), (Some(r), Some(c)) if r > 0 && c > 0 && piece.contains(Cell::new(r, c)))
            });
            ShapePiece { nu: part.shifted_down(dr), shape: piece, row_offset: dr, col_offset: dc }
        })
        .collect())
}

/// `Σ x^{ircont(T)}` over the 12-rpps of any shape with seplist-partition
/// `nu`: the product of [`q_formula`] over the components, or zero when some
/// component is non-representable.
pub fn generating_polynomial(nu: &SeplistPartition, shape: &SkewShape) -> Result<SparsePoly> {
    let mut out = SparsePoly::one();
    for piece in split_by_component(nu, shape)? {
        if !classify(&piece.nu, &piece.shape)?.is_representable() {
            return Ok(SparsePoly::zero());
        }
        out = &out * &q_formula(&piece.nu, &piece.shape)?;
    }
    Ok(out)
}

/// Text summary such as `reducible; components (4),(2); degrees 1,2;
/// Q=(x1x2)^4·P1·P2`.
pub fn describe(nu: &SeplistPartition, shape: &SkewShape) -> Result<String> {
    let class = classify(nu, shape)?;
    if !class.is_representable() {
        return Ok(format!("{class}; no 12-rpp has this seplist-partition; Q=0"));
    }
    let d = decompose(nu, shape)?;
    let comps: Vec<String> = d.components.iter().map(|c| format!("{}", c.nu)).collect();
    let degs: Vec<String> = d.degrees().iter().map(|n| format!("{n}")).collect();
    let mut q = format!("(x1x2)^{}", d.total_mixed);
    for n in d.degrees() {
        q.push_str(&format!("·P{n}"));
    }
    Ok(format!("{class}; components {}; degrees {}; Q={q}", comps.join(","), degs.join(",")))
}

/// `ceq ↦ ν`: row `i` contributes `|supp(i)| - α_i` entries `i`.
pub fn ceq_to_seplist(shape: &SkewShape, alpha: &WeakComposition) -> Result<SeplistPartition> {
    let rows = shape.num_rows().max(alpha.support_len() as u32);
    let mut parts = Vec::new();
    for i in (1..=rows).rev() {
        let width = shape.support(i).len();
        let h = alpha.get(i as usize);
        if h > width {
            return Err(Error::InfeasibleCeq { row: i });
        }
        parts.extend(core::iter::repeat_n(i, (width - h) as usize));
    }
    SeplistPartition::new(parts)
}

/// `ν ↦ ceq`, inverse of [`ceq_to_seplist`].
pub fn seplist_to_ceq(shape: &SkewShape, nu: &SeplistPartition) -> Result<WeakComposition> {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &i in nu.parts() {
        *counts.entry(i).or_insert(0) += 1;
    }
    let rows = shape.num_rows().max(counts.keys().last().copied().unwrap_or(0));
    let mut alpha = Vec::new();
    for i in 1..=rows {
        let width = shape.support(i).len();
        let c = counts.get(&i).copied().unwrap_or(0);
        if c > width {
            return Err(Error::InfeasibleCeq { row: i });
        }
        alpha.push(width - c);
    }
    Ok(WeakComposition::new(alpha))
}

/// All 12-rpps of `shape` whose seplist-partition is `nu`.
pub fn enumerate_by_seplist(shape: &SkewShape, nu: &SeplistPartition) -> Vec<Filling> {
    enumerate_rpps(shape, 2)
        .filter(|t| seplist_partition(t).as_ref() == Ok(nu))
        .collect()
}

/// All 12-rpps of `shape` grouped by seplist-partition.
pub fn group_by_seplist(shape: &SkewShape) -> BTreeMap<SeplistPartition, Vec<Filling>> {
    let mut out: BTreeMap<SeplistPartition, Vec<Filling>> = BTreeMap::new();
    for t in enumerate_rpps(shape, 2) {
        let nu = seplist_partition(&t).expect("enumerated fillings are 12-rpps");
        out.entry(nu).or_default().push(t);
    }
    out
}

/// `Σ x^{ircont(T)}` over the given fillings.
pub fn ircont_polynomial(fillings: &[Filling]) -> SparsePoly {
    SparsePoly::from_terms(fillings.iter().map(|t| (1, Monomial::new(t.ircont(), WeakComposition::zero()))))
}

/// Admissible `ν` for `shape` with at most `max_len` entries, each row `i`
/// used at most `|supp(i)| + 1` times.
///
/// A seplist-partition of a 12-rpp uses row `i` at most `|supp(i)|` times and
/// has at most `λ₁` entries, so with `max_len > λ₁` every omitted `ν` is
/// non-representable for the same reason as an included one.
pub fn admissible_partitions(shape: &SkewShape, max_len: usize) -> Vec<SeplistPartition> {
    let rows: Vec<(u32, u32)> = (1..=shape.num_rows())
        .rev()
        .map(|i| (i, shape.support(i).len()))
        .filter(|&(_, w)| w > 0)
        .collect();
    let mut out = Vec::new();
    fn rec(rows: &[(u32, u32)], max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<SeplistPartition>) {
        let Some((&(i, w), rest)) = rows.split_first() else {
            out.push(SeplistPartition(cur.clone()));
            return;
        };
        let room = (max_len - cur.len()).min(w as usize + 1);
        for m in 0..=room {
            cur.extend(core::iter::repeat_n(i, m));
            rec(rest, max_len, cur, out);
            cur.truncate(cur.len() - m);
        }
    }
    rec(&rows, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// For rpps whose seplist-partition is irreducible: every 1-pure column lies
/// left of every 2-pure column.
pub fn one_pure_left_of_two_pure(t: &Filling) -> Result<bool> {
    ensure_12_rpp(t)?;
    let table = Table12::from_filling(t)?;
    let table = &table;
    let cols = |class| (1..=table.num_cols()).filter(move |&k| table.column_class(k) == class);
    let last_one = cols(ColumnClass::OnePure).max();
    let first_two = cols(ColumnClass::TwoPure).min();
    Ok(match (last_one, first_two) {
        (Some(a), Some(b)) => a < b,
        _ => true,
    })
}

/// Every bijection `b` of `set` with `ircont(b(T))` equal to `ircont(T)` with
/// its first two entries swapped, as index maps.
///
/// Exhaustive depth-first search over all bijections, cutting a branch as
/// soon as an assignment violates the condition.
pub fn ircont_transposing_bijections(set: &[Filling]) -> Vec<Vec<usize>> {
    let ircont: Vec<WeakComposition> = set.iter().map(Filling::ircont).collect();
    let want: Vec<WeakComposition> = ircont.iter().map(|a| a.transpose(1)).collect();
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(set.len());
    let mut used = vec![false; set.len()];
    fn rec(
        k: usize,
        ircont: &[WeakComposition],
        want: &[WeakComposition],
        image: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == ircont.len() {
            out.push(image.clone());
            return;
        }
        for j in 0..ircont.len() {
            if !used[j] && ircont[j] == want[k] {
                used[j] = true;
                image.push(j);
                rec(k + 1, ircont, want, image, used, out);
                image.pop();
                used[j] = false;
            }
        }
    }
    rec(0, &ircont, &want, &mut image, &mut used, &mut out);
    out
}

/// The index map of [`bk12`] on `set`, or `None` if it leaves the set.
pub fn bk12_index_map(set: &[Filling]) -> Result<Option<Vec<usize>>> {
    let mut out = Vec::with_capacity(set.len());
    for t in set {
        let image = bk12(t)?;
        match set.iter().position(|s| *s == image) {
            Some(j) => out.push(j),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}
