//! Exhaustive and seeded-random checks of the library's identities.
//!
//! Every suite returns a [`Report`]. Work is spread over threads with rayon
//! but results are merged in input order, so reports are reproducible.

use std::fmt;

use bkrpp_core::bkengine::fast::{bk_general_values_with, classical_bk_values, Scratch};
use bkrpp_core::bkengine::{
    all_benign_tables, bk12, bk_general, check_local_confluence, classical_bk, normal_forms, normalize, random_benign_table,
    ColumnClass, DescentResolution, Strategy, Table12,
};
use bkrpp_core::fixtures;
use bkrpp_core::gseries::{g_poly, gtilde, schur_poly};
use bkrpp_core::polynomial::{Monomial, SparsePoly, TValue};
use bkrpp_core::shapes::{all_shapes, all_shapes_of_width, Cell, CellSet, ColumnRange, SkewShape};
use bkrpp_core::structure::{
    admissible_partitions, bk12_index_map, classify, decompose, describe, enumerate_by_seplist, group_by_seplist,
    ircont_polynomial, ircont_transposing_bijections, nr_cells, nu_cap, nu_subset, one_pure_left_of_two_pure,
    p_poly, q_formula, seplist_partition, Classification, SeplistPartition,
};
use bkrpp_core::tableaux::{enumerate_rpps, enumerate_ssyts, CellLayout, WeakComposition};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Seed used when none is given on the command line.
pub const DEFAULT_SEED: u64 = 7;

const MAX_EXAMPLES: usize = 5;

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    /// The first few failing cases.
    pub examples: Vec<String>,
    /// Size of the workload, for the summary line.
    pub detail: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {}: {} checks; {}", self.name, self.checks, self.detail)
        } else {
            write!(f, "FAIL {}: {} of {} checks failed; {}", self.name, self.failures, self.checks, self.detail)?;
            for e in &self.examples {
                write!(f, "\n  {e}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Default)]
struct Tally {
    checks: u64,
    failures: u64,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures += other.failures;
        let room = MAX_EXAMPLES - self.examples.len();
        self.examples.extend(other.examples.into_iter().take(room));
        self
    }

    fn report(self, name: &str, detail: String) -> Report {
        Report { name: name.to_string(), checks: self.checks, failures: self.failures, examples: self.examples, detail }
    }
}

fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

/// Connected diagrams with at most `max_cells` cells.
pub fn connected_shapes(max_cells: usize) -> Vec<SkewShape> {
    all_shapes(max_cells).into_iter().filter(SkewShape::is_connected).collect()
}

/// Connected diagrams with at most `max_cells` cells and `max_width` columns.
pub fn narrow_connected_shapes(max_cells: usize, max_width: u32) -> Vec<SkewShape> {
    all_shapes_of_width(max_cells, max_width).into_iter().filter(SkewShape::is_connected).collect()
}

/// `g̃` is unchanged by swapping `x_i` and `x_{i+1}` for `i < nx`.
pub fn symmetry(shapes: &[SkewShape], nx: u32) -> Report {
    let parts = par_map(shapes, |s| {
        let mut t = Tally::default();
        let g = gtilde(s, nx);
        for i in 1..nx as usize {
            t.check(g.swap_x(i) == g, || format!("{s}: not symmetric in x{i}, x{}", i + 1));
        }
        t
    });
    merge_all(parts).report("symmetry", format!("{} shapes, {nx} x-variables", shapes.len()))
}

/// `t = 0` gives the Schur polynomial, `t = 1` the dual stable Grothendieck
/// polynomial; single rows and columns of length `n ≤ max_n` give `h_n` and
/// `e_n(t_1, …, t_{n-1}, x_1, …)` for every `nx ≤ max_nx`.
pub fn specializations(shapes: &[SkewShape], nx: u32, max_n: u32, max_nx: u32) -> Report {
    let parts = par_map(shapes, |s| {
        let mut t = Tally::default();
        let g = gtilde(s, nx);
        t.check(g.specialize_t(TValue::Zero) == schur_poly(s, nx), || format!("{s}: t=0 differs from s"));
        t.check(g.specialize_t(TValue::One) == g_poly(s, nx), || format!("{s}: t=1 differs from g"));
        t
    });
    let mut tally = merge_all(parts);
    for n in 1..=max_n {
        for k in 1..=max_nx {
            let row = SkewShape::straight(&[n]).unwrap();
            let h = SparsePoly::complete_homogeneous(n, k as usize);
            tally.check(gtilde(&row, k) == h, || format!("row of {n} with {k} variables is not h_{n}"));
            let column = SkewShape::straight(&vec![1; n as usize]).unwrap();
            let vars: Vec<SparsePoly> =
                (1..n as usize).map(SparsePoly::t).chain((1..=k as usize).map(SparsePoly::x)).collect();
            let e = SparsePoly::elementary(n as usize, &vars);
            tally.check(gtilde(&column, k) == e, || format!("column of {n} with {k} variables is not e_{n}"));
        }
    }
    tally.report(
        "specializations",
        format!("{} shapes, {nx} x-variables; rows and columns up to {max_n} with up to {max_nx} variables", shapes.len()),
    )
}

fn rpp_values(layout: &CellLayout, v: &[u32]) -> bool {
    let cells = layout.cells();
    (0..v.len()).all(|k| {
        let left_ok = k == 0 || cells[k - 1].row != cells[k].row || v[k - 1] <= v[k];
        let above_ok = layout.above(k).is_none_or(|a| v[a] <= v[k]);
        left_ok && above_ok
    })
}

fn at(v: &[u32], k: usize) -> u32 {
    v.get(k).copied().unwrap_or(0)
}

// `after` is `before` with 1-based positions i and i+1 exchanged.
fn transposed(before: &[u32], after: &[u32], i: u32) -> bool {
    let (a, b) = (i as usize - 1, i as usize);
    let len = before.len().max(after.len()).max(b + 1);
    (0..len).all(|k| {
        let src = if k == a { b } else if k == b { a } else { k };
        at(after, k) == at(before, src)
    })
}

/// For every rpp with entries `≤ max_entry` and every `i` in `indices`:
/// `B_i` is an involution, keeps the rpp property, the cells holding `i` or
/// `i+1` and `ceq`, and transposes `ircont` at `(i, i+1)`.
pub fn involution(shapes: &[SkewShape], max_entry: u32, indices: &[u32]) -> Report {
    let parts = par_map(shapes, |s| {
        let mut tally = Tally::default();
        let mut e = enumerate_rpps(s, max_entry);
        let layout = e.layout().clone();
        let mut scratch = Scratch::default();
        let (mut out, mut back) = (Vec::new(), Vec::new());
        let (mut ceq_a, mut ceq_b, mut ir_a, mut ir_b) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        let mut fillings = 0u64;
        while let Some(v) = e.next_values() {
            fillings += 1;
            layout.ceq_into(v, &mut ceq_a);
            layout.ircont_of_rpp_into(v, &mut ir_a);
            for &i in indices {
                bk_general_values_with(&layout, v, i, &mut out, &mut scratch);
                bk_general_values_with(&layout, &out, i, &mut back, &mut scratch);
                let is_rpp = rpp_values(&layout, &out);
                let in_range = |x: u32| x == i || x == i + 1;
                let same_cells = v.iter().zip(&out).all(|(&a, &b)| in_range(a) == in_range(b));
                let mut ok = is_rpp && same_cells && back == v;
                if ok {
                    layout.ceq_into(&out, &mut ceq_b);
                    layout.ircont_of_rpp_into(&out, &mut ir_b);
                    ok = ceq_a == ceq_b && transposed(&ir_a, &ir_b, i);
                }
                tally.check(ok, || format!("{s}: B_{i} fails on {:?}", layout.to_filling(v).to_string()));
            }
        }
        (tally, fillings)
    });
    let fillings: u64 = parts.iter().map(|p| p.1).sum();
    let tally = merge_all(parts.into_iter().map(|p| p.0));
    tally.report(
        "involution",
        format!("{} shapes, {fillings} rpps with entries <= {max_entry}, i in {indices:?}", shapes.len()),
    )
}

/// A random skew diagram with between 1 and `max_cells` cells, moved so that
/// its first column is 1.
///
/// Half of the draws use the full budget. Consecutive rows usually overlap,
/// so most diagrams are connected, but gaps do occur.
pub fn random_shape(rng: &mut impl Rng, max_cells: usize) -> SkewShape {
    let max = max_cells.max(1) as u32;
    let budget = if rng.gen_bool(0.5) { max } else { rng.gen_range(1..=max) };
    let width = rng.gen_range(1..=budget);
    let (mut lo, mut hi) = (rng.gen_range(width.div_ceil(2)..=width), width);
    let mut used = 0;
    let mut cells = CellSet::new();
    for row in 1.. {
        for col in lo..=hi {
            cells.insert(Cell::new(row, col));
        }
        used += hi - lo + 1;
        let next_hi = rng.gen_range(lo.saturating_sub(1).max(1)..=hi);
        let next_lo = rng.gen_range(1..=lo.min(next_hi));
        if used + next_hi - next_lo + 1 > budget {
            break;
        }
        (lo, hi) = (next_lo, next_hi);
    }
    let shift = cells.iter().map(|c| c.col).min().unwrap_or(1) - 1;
    let moved: CellSet = cells.iter().map(|c| Cell::new(c.row, c.col - shift)).collect();
    SkewShape::from_cells(&moved).expect("rows with weakly decreasing ends form a skew diagram")
}

/// Parameters of [`confluence`].
#[derive(Debug, Clone)]
pub struct ConfluenceParams {
    pub tables: usize,
    pub max_cells: usize,
    pub seed: u64,
    /// Random orders tried per table on top of smallest-first and
    /// largest-first.
    pub random_orders: usize,
    /// The strategy whose trace is replayed and checked step by step.
    pub reference: Strategy,
    /// Draw every table on this shape instead of random ones.
    pub shape: Option<SkewShape>,
}

impl Default for ConfluenceParams {
    fn default() -> Self {
        ConfluenceParams {
            tables: 10_000,
            max_cells: 12,
            seed: DEFAULT_SEED,
            random_orders: 20,
            reference: Strategy::SmallestFirst,
            shape: None,
        }
    }
}

/// Facts gathered by [`check_table`].
#[derive(Debug, Default, Clone, Copy)]
pub struct TableStats {
    pub steps: u64,
    pub initial_descents: usize,
    pub states: u64,
}

fn check_table_into(t: &Table12, reference: Strategy, orders: usize, rng: &mut impl RngCore, tally: &mut Tally) -> TableStats {
    let run = normalize(&DescentResolution, t, reference);
    let nf = &run.normal_form;
    tally.check(run.potentials.windows(2).all(|w| w[0] > w[1]), || format!("{t:?}: potential not decreasing"));
    tally.check(nf.is_rpp() && nf.domain() == t.domain(), || format!("{t:?}: normal form is not a 12-rpp of the domain"));
    let mut state = t.clone();
    for &k in &run.steps {
        tally.check(check_local_confluence(&state) == Ok(true), || format!("{state:?}: not locally confluent"));
        let next = state.resolve(k).expect("trace steps are descents");
        let kept = next.seplist() == state.seplist() && next.ceq() == state.ceq() && next.ircont() == state.ircont();
        tally.check(kept && next.ell() < state.ell(), || format!("{state:?}: resolving {k} changed an invariant"));
        state = next;
    }
    let mut strategies = vec![Strategy::SmallestFirst, Strategy::LargestFirst];
    strategies.extend((0..orders).map(|_| Strategy::Random(rng.next_u64())));
    for s in strategies {
        tally.check(t.normalize(s).as_ref() == Ok(nf), || format!("{t:?}: strategy {s:?} reaches another table"));
    }
    let forms = normal_forms(&DescentResolution, t);
    tally.check(forms.len() == 1, || format!("{t:?}: {} normal forms", forms.len()));
    TableStats { steps: run.steps.len() as u64, initial_descents: t.descents().len(), states: 1 + run.steps.len() as u64 }
}

/// Checks one benign table: the reference trace lowers `ℓ` and keeps
/// seplist, `ceq` and `ircont` at every step, every visited state is locally
/// confluent, smallest-first, largest-first and `orders` random orders agree,
/// and exhaustive search finds a single normal form.
pub fn check_table(t: &Table12, reference: Strategy, orders: usize, seed: u64) -> (Report, TableStats) {
    let mut tally = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stats = check_table_into(t, reference, orders, &mut rng, &mut tally);
    let detail = format!("{} resolution steps, {} initial descents", stats.steps, stats.initial_descents);
    (tally.report("confluence", detail), stats)
}

/// [`check_table`] on every benign table of every shape, with `orders`
/// random orders seeded from `seed`.
pub fn confluence_exhaustive(shapes: &[SkewShape], orders: usize, seed: u64) -> Report {
    let parts = par_map(shapes, |s| {
        let mut tally = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut stats = (0u64, 0u64);
        for t in all_benign_tables(s) {
            let st = check_table_into(&t, Strategy::SmallestFirst, orders, &mut rng, &mut tally);
            stats.0 += 1;
            stats.1 += st.steps;
        }
        (tally, stats)
    });
    let tables: u64 = parts.iter().map(|p| p.1 .0).sum();
    let steps: u64 = parts.iter().map(|p| p.1 .1).sum();
    let tally = merge_all(parts.into_iter().map(|p| p.0));
    tally.report(
        "confluence (all benign tables)",
        format!("{} shapes, {tables} tables, {orders} random orders each; {steps} steps", shapes.len()),
    )
}

/// [`check_table`] on seeded random benign tables.
pub fn confluence(p: &ConfluenceParams) -> Report {
    let indices: Vec<u64> = (0..p.tables as u64).collect();
    let parts = par_map(&indices, |&k| {
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        rng.set_stream(k);
        let shape = p.shape.clone().unwrap_or_else(|| random_shape(&mut rng, p.max_cells));
        let t = random_benign_table(&shape, &mut rng);
        let mut tally = Tally::default();
        let stats = check_table_into(&t, p.reference, p.random_orders, &mut rng, &mut tally);
        (tally, stats)
    });
    let steps: u64 = parts.iter().map(|p| p.1.steps).sum();
    let branching = parts.iter().filter(|p| p.1.initial_descents >= 2).count();
    let longest = parts.iter().map(|p| p.1.steps).max().unwrap_or(0);
    let tally = merge_all(parts.into_iter().map(|p| p.0));
    let domain = match &p.shape {
        Some(s) => format!("shape {s}"),
        None => format!("shapes <= {} cells", p.max_cells),
    };
    tally.report(
        "confluence",
        format!(
            "{} tables on {domain}, seed {}, {} random orders; {steps} steps, longest {longest}, {branching} tables start with >= 2 descents",
            p.tables, p.seed, p.random_orders
        ),
    )
}

/// The hand-checked reference values.
pub fn fixture_checks() -> Report {
    let mut t = Tally::default();
    let ell = fixtures::ell_example();
    t.check(ell.ell() == 18, || format!("ell = {}, expected 18", ell.ell()));
    t.check(ell.descents() == [1, 4], || format!("descents {:?}", ell.descents()));
    let sep = fixtures::seplist_example();
    t.check(sep.seplist() == [4, 4, 2], || format!("seplist {:?}", sep.seplist()));

    let p = fixtures::resolve_example();
    let types: Vec<String> = [1, 2, 4].iter().map(|&k| p.descent_type(k).map(|d| d.to_string()).unwrap_or_default()).collect();
    t.check(types == ["2M", "M1", "21"], || format!("descent types {types:?}"));
    for (k, expected) in fixtures::resolve_example_results() {
        t.check(p.resolve(k).as_ref() == Ok(&expected), || format!("resolving at {k} differs"));
    }
    let (rpp, flipped, image) = fixtures::involution_example();
    t.check(rpp.flip() == flipped, || "flip differs".into());
    t.check(rpp.bk().as_ref() == Ok(&image), || "12-involution image differs".into());

    let (shape, ta, tb, tc) = fixtures::statistics_example();
    let wc = |v: &[u32]| WeakComposition::new(v.to_vec());
    t.check(!ta.is_rpp().unwrap() && tb.is_rpp().unwrap() && !tb.is_ssyt().unwrap() && tc.is_ssyt().unwrap(), || {
        "rpp/SSYT predicates differ".into()
    });
    t.check(tb.cont() == wc(&[0, 1, 4, 1]) && tb.ircont() == wc(&[0, 1, 3, 1]) && tb.ceq() == wc(&[1]), || {
        "statistics of the rpp differ".into()
    });
    t.check(ta.ceq() == wc(&[0, 1]) && tc.ircont() == wc(&[0, 1, 3, 1, 0, 0, 1]), || "statistics differ".into());
    let g = gtilde(&"2,1".parse().unwrap(), 2).to_string();
    t.check(g == "x1^2*x2 + x1*x2^2 + t1*x1^2 + t1*x1*x2 + t1*x2^2", || format!("g̃(2,1) = {g}"));
    t.check(shape.num_cells() == 6, || "shape size".into());

    let (s, i) = fixtures::classical_example();
    t.check(classical_bk(&s, 2).as_ref() == Ok(&i), || "classical image differs".into());
    t.check(bk_general(&s, 2).as_ref() == Ok(&i), || "general image of the SSYT differs".into());

    let running = fixtures::running_shape();
    let nu = |v: &[u32]| SeplistPartition::new(v.to_vec()).unwrap();
    let main = nu(&[4, 3, 3, 2]);
    let cells = |v: &[(u32, u32)]| v.iter().map(|&(r, c)| Cell::new(r, c)).collect::<CellSet>();
    let (t1, t2) = fixtures::seplist_examples();
    t.check(nr_cells(&t1) == Ok(cells(&[(4, 1), (3, 3), (3, 4), (2, 6)])), || "NR cells of the first rpp".into());
    t.check(nr_cells(&t2) == Ok(cells(&[(4, 2), (3, 3), (3, 4), (2, 7)])), || "NR cells of the second rpp".into());
    for f in [&t1, &t2] {
        t.check(f.has_shape(&running) && seplist_partition(f).as_ref() == Ok(&main), || "seplist-partition".into());
    }
    for (i, a, b) in [(3, 3, 4), (2, 4, 7), (4, 1, 4)] {
        t.check(running.support(i) == ColumnRange::closed(a, b), || format!("supp({i}) = {}", running.support(i)));
    }
    for (a, b, want, inside) in [(2, 7, &[3, 3][..], true), (2, 8, &[3, 3, 2], true), (4, 8, &[2], true), (4, 5, &[4, 3, 3, 2], false)] {
        let got = if inside { nu_subset(&main, &running, a, b) } else { nu_cap(&main, &running, a, b) };
        t.check(got == Ok(nu(want)), || format!("restriction to [{a},{b}) is {got:?}"));
    }
    t.check(classify(&main, &running) == Ok(Classification::Reducible), || "classification".into());
    match decompose(&main, &running) {
        Ok(d) => {
            t.check(d.r() == 1 && d.degrees() == [1, 2], || format!("r = {}, degrees {:?}", d.r(), d.degrees()));
            t.check(d.boundaries() == [1, 3, 5, 8], || format!("boundaries {:?}", d.boundaries()));
            for (c, size) in d.components.iter().zip([2, 3]) {
                let found = c.restricted(&running).map(|(s, n)| enumerate_by_seplist(&s, &n).len());
                t.check(found == Some(size), || format!("component {} has {found:?} rpps", c.nu));
            }
        }
        Err(e) => t.check(false, || format!("decompose failed: {e}")),
    }
    let text = describe(&main, &running).unwrap_or_default();
    t.check(text == "reducible; components (4),(2); degrees 1,2; Q=(x1x2)^4·P1·P2", || text.clone());
    let q = q_formula(&main, &running);
    t.check(q.as_ref().ok() == Some(&ircont_polynomial(&enumerate_by_seplist(&running, &main))), || "Q differs".into());
    t.report("fixtures", "reference tables, fillings and the running seplist example".into())
}

/// The classical involution agrees with the general one on every SSYT with
/// entries `≤ max_entry`, and on the reference example.
pub fn classical(shapes: &[SkewShape], max_entry: u32, indices: &[u32]) -> Report {
    let parts = par_map(shapes, |s| {
        let mut tally = Tally::default();
        let mut e = enumerate_ssyts(s, max_entry);
        let layout = e.layout().clone();
        let mut scratch = Scratch::default();
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut count = 0u64;
        while let Some(v) = e.next_values() {
            count += 1;
            for &i in indices {
                classical_bk_values(&layout, v, i, &mut a);
                bk_general_values_with(&layout, v, i, &mut b, &mut scratch);
                tally.check(a == b, || format!("{s}: maps differ for i={i} on {:?}", layout.to_filling(v).to_string()));
            }
        }
        (tally, count)
    });
    let count: u64 = parts.iter().map(|p| p.1).sum();
    let mut tally = merge_all(parts.into_iter().map(|p| p.0));
    let (t, image) = fixtures::classical_example();
    tally.check(classical_bk(&t, 2).as_ref() == Ok(&image), || "reference example: classical image".into());
    tally.check(bk_general(&t, 2).as_ref() == Ok(&image), || "reference example: general image".into());
    tally.report(
        "classical",
        format!("{} shapes, {count} SSYTs with entries <= {max_entry}, i in {indices:?}, plus the reference example", shapes.len()),
    )
}

/// Structure and uniqueness suites over `shapes` (connected, no
/// empty columns) and all admissible `ν` of length at most `λ₁ + 1`.
///
/// The first report compares enumeration by seplist-partition with the
/// closed form, and for irreducible `ν` checks the count, the number of
/// 1-pure columns, the two-variable formula and the 1-pure/2-pure ordering.
/// The second checks that exactly one bijection transposes `ircont` and that
/// it is the 12-involution.
pub fn structure(shapes: &[SkewShape]) -> (Report, Report) {
    let parts = par_map(shapes, |s| {
        let (mut main, mut unique) = (Tally::default(), Tally::default());
        let lambda1 = s.lambda().part(1);
        let groups = group_by_seplist(s);
        let all = admissible_partitions(s, lambda1 as usize + 1);
        let mut counts = [0u64; 4];
        for n in groups.keys() {
            main.check(all.binary_search(n).is_ok(), || format!("{s}: seplist {n} missing from the admissible list"));
        }
        for n in &all {
            let found = groups.get(n).map(Vec::as_slice).unwrap_or(&[]);
            counts[3] += found.len() as u64;
            let class = classify(n, s).expect("admissible");
            match class {
                Classification::NonRepresentable => {
                    counts[0] += 1;
                    main.check(found.is_empty(), || format!("{s} {n}: non-representable but realized"));
                    continue;
                }
                Classification::Reducible => counts[1] += 1,
                Classification::Irreducible => counts[2] += 1,
            }
            let poly = ircont_polynomial(found);
            main.check(q_formula(n, s).as_ref() == Ok(&poly), || format!("{s} {n}: closed form differs"));
            if class != Classification::Irreducible {
                continue;
            }
            let free = lambda1 - n.len() as u32;
            main.check(found.len() as u32 == free + 1, || format!("{s} {n}: {} rpps, expected {}", found.len(), free + 1));
            let mut ones: Vec<u32> = found
                .iter()
                .map(|t| {
                    let table = Table12::from_filling(t).expect("12-rpp");
                    (1..=table.num_cols()).filter(|&k| table.column_class(k) == ColumnClass::OnePure).count() as u32
                })
                .collect();
            ones.sort_unstable();
            main.check(ones == (0..=free).collect::<Vec<_>>(), || format!("{s} {n}: 1-pure column counts {ones:?}"));
            let m = n.len() as u32;
            let expected = &SparsePoly::term(1, Monomial::new(vec![m, m], vec![])) * &p_poly(free);
            main.check(poly == expected, || format!("{s} {n}: generating polynomial {poly}"));
            main.check(found.iter().all(|t| one_pure_left_of_two_pure(t) == Ok(true)), || {
                format!("{s} {n}: a 1-pure column lies right of a 2-pure column")
            });
            let maps = ircont_transposing_bijections(found);
            unique.check(maps.len() == 1, || format!("{s} {n}: {} transposing bijections", maps.len()));
            let bk = bk12_index_map(found);
            unique.check(maps.len() == 1 && bk == Ok(Some(maps[0].clone())), || format!("{s} {n}: bk12 is not the bijection"));
            debug_assert!(found.iter().all(|t| bk12(t).is_ok()));
        }
        (main, unique, counts)
    });
    let mut counts = [0u64; 4];
    for p in &parts {
        for (total, n) in counts.iter_mut().zip(p.2) {
            *total += n;
        }
    }
    let (mut main, mut unique) = (Tally::default(), Tally::default());
    for (a, b, _) in parts {
        main = main.merge(a);
        unique = unique.merge(b);
    }
    let [non, red, irr, rpps] = counts;
    let detail = format!(
        "{} shapes; {} admissible partitions ({non} non-representable, {red} reducible, {irr} irreducible); {rpps} 12-rpps",
        shapes.len(),
        non + red + irr
    );
    (main.report("structure", detail), unique.report("uniqueness", format!("{irr} irreducible partitions")))
}

/// Parameters of [`run_all`].
#[derive(Debug, Clone)]
pub struct AllParams {
    pub max_cells: usize,
    pub nx: u32,
    pub seed: u64,
    pub tables: usize,
}

/// Every suite at a common scale, in a fixed order.
///
/// Shapes have at most `max_cells` cells. The polynomial suites use `nx`
/// variables; the involution suites use entries up to `nx + 1` and every
/// `i ≤ nx`; confluence is checked on `tables` random tables and on every
/// benign table; structure shapes are also capped at 6 columns.
pub fn run_all(p: &AllParams) -> Vec<Report> {
    let connected = connected_shapes(p.max_cells);
    let every = all_shapes(p.max_cells);
    let indices: Vec<u32> = (1..=p.nx).collect();
    let mut out = vec![
        symmetry(&connected, p.nx),
        specializations(&connected, p.nx, 5, p.nx),
        involution(&every, p.nx + 1, &indices),
        confluence(&ConfluenceParams { tables: p.tables, max_cells: p.max_cells, seed: p.seed, ..Default::default() }),
        confluence_exhaustive(&every, 20, p.seed),
        fixture_checks(),
        classical(&every, p.nx + 1, &indices),
    ];
    let (main, unique) = structure(&narrow_connected_shapes(p.max_cells, 6));
    out.push(main);
    out.push(unique);
    out
}
