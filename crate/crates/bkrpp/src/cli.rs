//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage,
//! parse or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use bkrpp_core::bkengine::{bk_general, normalize, DescentResolution, Strategy, Table12};
use bkrpp_core::gseries::{gtilde, schur_poly};
use bkrpp_core::polynomial::{SparsePoly, TValue};
use bkrpp_core::shapes::SkewShape;
use bkrpp_core::structure::{
    classify, describe, enumerate_by_seplist, generating_polynomial, ircont_polynomial, split_by_component,
    SeplistPartition,
};
use bkrpp_core::tableaux::Filling;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::json::{self, FillingJson};
use crate::verify::{self, AllParams, ConfluenceParams, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "bkrpp", version, about = "Refined dual stable Grothendieck polynomials and Bender-Knuth involutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print g̃ of a skew shape in x1..x_nx
    Gtilde {
        /// Skew shape, e.g. "3,2,2/1"
        #[arg(long, value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        nx: u32,
        /// Set every t variable to 0
        #[arg(long, conflicts_with = "t1")]
        t0: bool,
        /// Set every t variable to 1
        #[arg(long)]
        t1: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the skew Schur polynomial in x1..x_nx
    Schur {
        #[arg(long, value_parser = parse_shape)]
        shape: SkewShape,
        #[arg(long)]
        nx: u32,
        #[arg(long)]
        json: bool,
    },
    /// Apply the involution B_i to an rpp read from a file
    Bk {
        #[arg(long, value_parser = parse_shape)]
        shape: SkewShape,
        /// JSON filling or a text grid ("." for cells outside the shape)
        #[arg(long, value_name = "FILE")]
        rpp: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
        /// Check the involution, ceq and ircont contracts
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check that descent resolution reaches the same 12-rpp in every order
    Confluence {
        /// Draw every random table on this shape
        #[arg(long, value_parser = parse_shape, conflicts_with = "table")]
        shape: Option<SkewShape>,
        #[arg(long, default_value_t = 12)]
        max_cells: usize,
        #[arg(long, default_value_t = 1000)]
        tables: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Order whose resolution trace is replayed and printed
        #[arg(long, value_enum, default_value_t = StrategyArg::Min)]
        strategy: StrategyArg,
        /// Random orders per table besides min and max
        #[arg(long, default_value_t = 20)]
        orders: usize,
        /// Check this single benign table instead (JSON filling or grid)
        #[arg(long, value_name = "FILE")]
        table: Option<PathBuf>,
    },
    /// Classify a seplist-partition and print the closed form of its rpps
    Structure {
        #[arg(long, value_parser = parse_shape)]
        shape: SkewShape,
        /// Weakly decreasing row indices, e.g. "4,3,3,2"
        #[arg(long, value_parser = parse_nu)]
        nu: SeplistPartition,
        /// Compare with an enumeration of all matching 12-rpps
        #[arg(long)]
        check: bool,
    },
    /// Run every verification suite at a common scale
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        max_cells: usize,
        #[arg(long, default_value_t = 3)]
        nx: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random tables for the confluence suite
        #[arg(long, default_value_t = 10_000)]
        tables: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Min,
    Max,
    Random,
}

impl StrategyArg {
    fn strategy(self, seed: u64) -> Strategy {
        match self {
            StrategyArg::Min => Strategy::SmallestFirst,
            StrategyArg::Max => Strategy::LargestFirst,
            StrategyArg::Random => Strategy::Random(seed),
        }
    }
}

fn parse_shape(text: &str) -> Result<SkewShape, String> {
    SkewShape::parse(text).map_err(|e| e.to_string())
}

fn parse_nu(text: &str) -> Result<SeplistPartition, String> {
    SeplistPartition::parse(text).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Verification,
}

type Outcome = Result<(), Failure>;

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("error: {flag}: {e}"))
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Gtilde { shape, nx, t0, t1, json } => {
            let g = gtilde(&shape, nx);
            let g = match (t0, t1) {
                (true, _) => g.specialize_t(TValue::Zero),
                (_, true) => g.specialize_t(TValue::One),
                _ => g,
            };
            print_poly(out, &g, json)
        }
        Command::Schur { shape, nx, json } => print_poly(out, &schur_poly(&shape, nx), json),
        Command::Bk { shape, rpp, i, verify, json } => bk(out, &shape, &rpp, i, verify, json),
        Command::Confluence { shape, max_cells, tables, seed, strategy, orders, table } => {
            let reference = strategy.strategy(seed);
            match table {
                Some(path) => confluence_table(out, &path, reference, orders, seed),
                None => {
                    let p = ConfluenceParams { tables, max_cells, seed, random_orders: orders, reference, shape };
                    report_all(out, &[verify::confluence(&p)])
                }
            }
        }
        Command::Structure { shape, nu, check } => structure(out, &shape, &nu, check),
        Command::VerifyAll { max_cells, nx, seed, tables } => {
            if nx == 0 {
                Err(usage("--nx", "must be at least 1"))
            } else {
                report_all(out, &verify::run_all(&AllParams { max_cells, nx, seed, tables }))
            }
        }
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "{msg}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(format!("error: writing output: {e}"))
}

fn print_poly(out: &mut dyn Write, p: &SparsePoly, as_json: bool) -> Outcome {
    if as_json {
        writeln!(out, "{}", json::poly_to_string(p)).map_err(io)
    } else {
        writeln!(out, "{p}").map_err(io)
    }
}

fn report_all(out: &mut dyn Write, reports: &[verify::Report]) -> Outcome {
    for r in reports {
        writeln!(out, "{r}").map_err(io)?;
    }
    if reports.iter().all(verify::Report::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Reads a filling from a JSON document or a text grid. A JSON shape must
/// match `expected` when one is given.
fn read_filling(flag: &str, path: &Path, expected: Option<&SkewShape>) -> Result<Filling, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(flag, format!("{}: {e}", path.display())))?;
    let filling = if text.trim_start().starts_with('{') {
        let (shape, t) = json::filling_from_str(&text).map_err(|e| usage(flag, e))?;
        if expected.is_some_and(|s| *s != shape) {
            return Err(usage(flag, format!("file has shape {shape}, --shape says {}", expected.unwrap())));
        }
        t
    } else {
        Filling::parse_grid(&text).map_err(|e| usage(flag, e))?
    };
    if let Some(s) = expected {
        if !filling.has_shape(s) {
            return Err(usage(flag, format!("filling does not have shape {s}")));
        }
    }
    Ok(filling)
}

#[derive(Serialize)]
struct StatDiff {
    before: Vec<u32>,
    after: Vec<u32>,
}

#[derive(Serialize)]
struct BkJson {
    i: u32,
    image: FillingJson,
    ceq: StatDiff,
    ircont: StatDiff,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

fn bk(out: &mut dyn Write, shape: &SkewShape, path: &Path, i: u32, check: bool, as_json: bool) -> Outcome {
    let t = read_filling("--rpp", path, Some(shape))?;
    let image = bk_general(&t, i).map_err(|e| usage("--rpp", e))?;
    let (ceq_a, ceq_b) = (t.ceq(), image.ceq());
    let (ir_a, ir_b) = (t.ircont(), image.ircont());
    let mut failures = Vec::new();
    if check {
        let back = bk_general(&image, i).map_err(|e| usage("--rpp", e))?;
        if back != t {
            failures.push("applying B_i twice does not give back the input".to_string());
        }
        if ceq_a != ceq_b {
            failures.push("ceq changed".to_string());
        }
        if ir_b != ir_a.transpose(i as usize) {
            failures.push(format!("ircont is not transposed at ({i},{})", i + 1));
        }
    }
    if as_json {
        let doc = BkJson {
            i,
            image: FillingJson::new(shape, &image),
            ceq: StatDiff { before: ceq_a.entries().to_vec(), after: ceq_b.entries().to_vec() },
            ircont: StatDiff { before: ir_a.entries().to_vec(), after: ir_b.entries().to_vec() },
            verified: check.then_some(failures.is_empty()),
        };
        writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable")).map_err(io)?;
    } else {
        writeln!(out, "{image}").map_err(io)?;
        writeln!(out, "ceq: {ceq_a} -> {ceq_b}").map_err(io)?;
        writeln!(out, "ircont: {ir_a} -> {ir_b}").map_err(io)?;
        if check {
            if failures.is_empty() {
                writeln!(out, "verify: involution, ceq and ircont contracts hold").map_err(io)?;
            }
            for f in &failures {
                writeln!(out, "verify: FAIL {f}").map_err(io)?;
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn confluence_table(out: &mut dyn Write, path: &Path, reference: Strategy, orders: usize, seed: u64) -> Outcome {
    let filling = read_filling("--table", path, None)?;
    let t = Table12::from_filling(&filling).map_err(|e| usage("--table", e))?;
    if !t.is_benign() {
        return Err(usage("--table", bkrpp_core::Error::NotBenign));
    }
    let run = normalize(&DescentResolution, &t, reference);
    writeln!(out, "descents: {:?}; ell = {}", t.descents(), t.ell()).map_err(io)?;
    let mut state = t.clone();
    for &k in &run.steps {
        let ty = state.descent_type(k).expect("trace steps are descents");
        state = state.resolve(k).expect("trace steps are descents");
        writeln!(out, "resolve {k} ({ty}): ell = {}", state.ell()).map_err(io)?;
    }
    writeln!(out, "normal form:\n{}", run.normal_form.to_filling()).map_err(io)?;
    let (report, _) = verify::check_table(&t, reference, orders, seed);
    report_all(out, &[report])
}

fn structure(out: &mut dyn Write, shape: &SkewShape, nu: &SeplistPartition, check: bool) -> Outcome {
    let pieces = split_by_component(nu, shape).map_err(|e| usage("--nu", e))?;
    if pieces.len() == 1 && !shape.has_empty_columns() {
        let text = describe(nu, shape).map_err(|e| usage("--nu", e))?;
        writeln!(out, "{text}").map_err(io)?;
    } else {
        writeln!(out, "{} connected components", pieces.len()).map_err(io)?;
        for (k, p) in pieces.iter().enumerate() {
            let text = describe(&p.nu, &p.shape).map_err(|e| usage("--nu", e))?;
            writeln!(
                out,
                "component {}: shape {} at rows +{}, columns +{}; nu {}; {text}",
                k + 1,
                p.shape,
                p.row_offset,
                p.col_offset,
                p.nu
            )
            .map_err(io)?;
        }
    }
    let q = generating_polynomial(nu, shape).map_err(|e| usage("--nu", e))?;
    writeln!(out, "Q = {q}").map_err(io)?;
    if !check {
        return Ok(());
    }
    let found = enumerate_by_seplist(shape, nu);
    let poly = ircont_polynomial(&found);
    let representable = pieces.iter().all(|p| classify(&p.nu, &p.shape).is_ok_and(|c| c.is_representable()));
    if poly == q && representable != found.is_empty() {
        writeln!(out, "check: {} 12-rpps; their generating polynomial equals Q", found.len()).map_err(io)?;
        Ok(())
    } else {
        writeln!(out, "check: FAIL {} 12-rpps with generating polynomial {poly}", found.len()).map_err(io)?;
        Err(Failure::Verification)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("bkrpp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gtilde_text_and_specializations() {
        let (code, out, _) = call(&["gtilde", "--shape", "2,1", "--nx", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x1^2*x2 + x1*x2^2 + t1*x1^2 + t1*x1*x2 + t1*x2^2\n");
        let (_, t0, _) = call(&["gtilde", "--shape", "2,1", "--nx", "2", "--t0"]);
        let (_, schur, _) = call(&["schur", "--shape", "2,1", "--nx", "2"]);
        assert_eq!(t0, schur);
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let (code, _, err) = call(&["gtilde", "--shape", "1,2", "--nx", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("--shape"), "{err}");
        let (code, _, err) = call(&["structure", "--shape", "2,2", "--nu", "9"]);
        assert_eq!(code, 2);
        assert!(err.contains("--nu"), "{err}");
        assert_eq!(call(&["gtilde", "--shape", "1", "--nx", "1", "--t0", "--t1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn structure_running_example() {
        let (code, out, _) = call(&["structure", "--shape", "7,7,7,4,4/5,3,2", "--nu", "4,3,3,2", "--check"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "reducible; components (4),(2); degrees 1,2; Q=(x1x2)^4·P1·P2");
        assert!(lines[2].starts_with("check: 6 12-rpps"), "{out}");
    }
}
