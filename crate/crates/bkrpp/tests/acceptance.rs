//! One PASS/FAIL line per acceptance criterion; exits non-zero on failure.

use std::process::ExitCode;
use std::time::Instant;

use bkrpp::verify::{self, ConfluenceParams, Report, DEFAULT_SEED};
use bkrpp_core::bkengine::Strategy;
use bkrpp_core::shapes::all_shapes;

fn main() -> ExitCode {
    let mut ok = true;
    let mut line = |n: u32, title: &str, reports: Vec<Report>, started: Instant| {
        let passed = reports.iter().all(Report::passed);
        ok &= passed;
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {n}: {title} ({:.1} s)", started.elapsed().as_secs_f64());
        for r in reports {
            println!("    {r}");
        }
    };

    let connected = verify::connected_shapes(10);
    let every8 = all_shapes(8);

    let t = Instant::now();
    line(1, "symmetry in x1, x2, x3 over connected shapes <= 10 cells", vec![verify::symmetry(&connected, 3)], t);

    let t = Instant::now();
    line(2, "t = 0 and t = 1 specializations; rows and columns", vec![verify::specializations(&connected, 3, 5, 3)], t);

    let t = Instant::now();
    let r = verify::involution(&every8, 4, &[1, 2, 3]);
    line(3, "B_i involution, ceq kept, ircont transposed on shapes <= 8 cells, entries <= 4", vec![r], t);

    let t = Instant::now();
    let p = ConfluenceParams {
        tables: 10_000,
        max_cells: 12,
        seed: DEFAULT_SEED,
        random_orders: 20,
        reference: Strategy::SmallestFirst,
        shape: None,
    };
    let reports = vec![verify::confluence(&p), verify::confluence_exhaustive(&all_shapes(8), 20, DEFAULT_SEED)];
    line(4, "confluence of descent resolution on random and on all small benign tables", reports, t);

    let t = Instant::now();
    line(5, "reference values", vec![verify::fixture_checks()], t);

    let t = Instant::now();
    let r = verify::classical(&every8, 4, &[1, 2, 3]);
    line(6, "classical and general involutions agree on SSYTs", vec![r], t);

    let t = Instant::now();
    let (structure, uniqueness) = verify::structure(&verify::narrow_connected_shapes(12, 6));
    line(7, "closed forms by seplist-partition for connected shapes with <= 6 columns, <= 12 cells", vec![structure], t);
    line(8, "unique ircont-transposing bijection equals the 12-involution", vec![uniqueness], t);

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
