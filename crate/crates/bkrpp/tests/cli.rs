use std::io::Write;
use std::process::{Command, Output};

use bkrpp::json;
use bkrpp_core::bkengine::bk_general;
use bkrpp_core::tableaux::Filling;

fn bkrpp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkrpp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn gtilde_json_has_five_terms() {
    let o = bkrpp(&["gtilde", "--shape", "2,1", "--nx", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let p = json::poly_from_str(&stdout(&o)).unwrap();
    assert_eq!(p.num_terms(), 5);
    assert_eq!(p.to_string(), "x1^2*x2 + x1*x2^2 + t1*x1^2 + t1*x1*x2 + t1*x2^2");
}

#[test]
fn t1_specialization_is_the_sum_over_rpps() {
    let o = bkrpp(&["gtilde", "--shape", "2,1", "--nx", "2", "--t1"]);
    assert_eq!(stdout(&o), "x1^2*x2 + x1*x2^2 + x1^2 + x1*x2 + x2^2\n");
}

#[test]
fn output_is_reproducible() {
    let args = ["confluence", "--max-cells", "9", "--tables", "300", "--seed", "11"];
    let (a, b) = (bkrpp(&args), bkrpp(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("PASS confluence: "));
}

#[test]
fn bk_reads_grid_files() {
    let f = temp_file(". 3 3\n2 3\n3 4\n");
    let path = f.path().to_str().unwrap();
    let o = bkrpp(&["bk", "--shape", "3,2,2/1", "--rpp", path, "--i", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let t = Filling::parse_grid(". 3 3\n2 3\n3 4").unwrap();
    let image = bk_general(&t, 2).unwrap();
    assert!(text.starts_with(&format!("{image}\n")), "{text}");
    assert!(text.contains(&format!("ircont: {} -> {}", t.ircont(), image.ircont())));
    assert!(text.contains("verify: involution, ceq and ircont contracts hold"));
}

#[test]
fn bk_json_round_trip() {
    let shape = "3,2,2/1".parse().unwrap();
    let t = Filling::parse_grid(". 1 2\n1 2\n2 2").unwrap();
    let f = temp_file(&json::filling_to_string(&shape, &t));
    let path = f.path().to_str().unwrap();
    let o = bkrpp(&["bk", "--shape", "3,2,2/1", "--rpp", path, "--i", "1", "--json", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["verified"], serde_json::Value::Bool(true));
    let (_, image) = json::filling_from_str(&doc["image"].to_string()).unwrap();
    assert_eq!(image, bk_general(&t, 1).unwrap());
}

#[test]
fn bk_input_errors_exit_2() {
    let not_rpp = temp_file("2 1\n");
    let o = bkrpp(&["bk", "--shape", "2", "--rpp", not_rpp.path().to_str().unwrap(), "--i", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let wrong_shape = temp_file("1 1 1\n");
    let o = bkrpp(&["bk", "--shape", "2", "--rpp", wrong_shape.path().to_str().unwrap(), "--i", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--rpp"));
    let o = bkrpp(&["bk", "--shape", "2", "--rpp", "/nonexistent/file", "--i", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = bkrpp(&["bk", "--shape", "2", "--rpp", "x", "--i", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--i"));
}

#[test]
fn confluence_on_a_single_table() {
    let f = temp_file(". . 1 2 1\n. 1 1 2\n2 1 1\n2 2 1\n2\n");
    let path = f.path().to_str().unwrap();
    for strategy in ["min", "max", "random"] {
        let o = bkrpp(&["confluence", "--table", path, "--strategy", strategy]);
        assert_eq!(o.status.code(), Some(0), "{strategy}");
        let text = stdout(&o);
        assert!(text.starts_with("descents: [1, 2, 4]"), "{text}");
        assert!(text.lines().last().unwrap().starts_with("PASS confluence"));
    }
    let bad = temp_file("1 1\n2 1\n2 2\n");
    let o = bkrpp(&["confluence", "--table", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structure_outputs() {
    let o = bkrpp(&["structure", "--shape", "7,7,7,4,4/5,3,2", "--nu", "4,3,3,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("reducible; components (4),(2); degrees 1,2; Q=(x1x2)^4·P1·P2"));

    let o = bkrpp(&["structure", "--shape", "2,2", "--nu", "1,1,1", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "non-representable; no 12-rpp has this seplist-partition; Q=0\nQ = 0\ncheck: 0 12-rpps; their generating polynomial equals Q\n"
    );

    let o = bkrpp(&["structure", "--shape", "2,2", "--nu", "1", "--check"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("Q = x1^2*x2 + x1*x2^2"));
}

#[test]
fn structure_splits_disconnected_shapes() {
    let o = bkrpp(&["structure", "--shape", "4,4,2,2/2,2", "--nu", "3,1", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("2 connected components\n"), "{text}");
    assert!(text.contains("component 1: shape 2,2 at rows +2, columns +0; nu (1); irreducible"), "{text}");
    assert!(text.contains("check: 4 12-rpps"), "{text}");
}

#[test]
fn verify_all_small_scale() {
    let o = bkrpp(&["verify-all", "--max-cells", "5", "--nx", "2", "--tables", "200"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(bkrpp(&[]).status.code(), Some(2));
    assert_eq!(bkrpp(&["gtilde", "--shape", "2,1"]).status.code(), Some(2));
    assert_eq!(bkrpp(&["confluence", "--strategy", "sideways"]).status.code(), Some(2));
    assert_eq!(bkrpp(&["structure", "--shape", "2,2", "--nu", "1,2"]).status.code(), Some(2));
    let o = bkrpp(&["schur", "--shape", "3,x", "--nx", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--shape"));
}
