use std::fs;
use std::path::Path;
use std::process::Command;

use enumgeom::gt::RelTable;
use enumgeom_cli::run;
use tempfile::TempDir;

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("enumgeom").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "args {args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    run(std::iter::once("enumgeom").chain(args.iter().copied())).code
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const TREFOIL: &str = "1 -1\n1 0\n";
const TORUS_IDENTITY: &str = "1\n\n1 0\n0 1\n\n1\n";

#[test]
fn kontsevich_cubic() {
    assert_eq!(ok(&["kontsevich", "--degree", "3"]), "12\n");
    assert_eq!(ok(&["kontsevich", "--degree", "5"]), "87304\n");
}

#[test]
fn zeta_of_torus_identity() {
    let dir = TempDir::new().unwrap();
    let action = write(&dir, "torus.txt", TORUS_IDENTITY);
    assert_eq!(
        ok(&["zeta", "--action", &action, "--order", "5"]),
        "rational: 1\nexpansion: 1\n"
    );
}

#[test]
fn enk_series_trefoil() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "trefoil.txt", TREFOIL);
    assert_eq!(ok(&["enk-series", "--matrix", &m, "--n", "3"]), "1 - 2t + 2t^2 - t^3\n");
    assert_eq!(ok(&["enk-series", "--knot", "trefoil", "--n", "2"]), "1 - t + t^2\n");
    assert_eq!(ok(&["enk-series", "--knot", "unknot", "--n", "2"]), "1\n");
    assert_eq!(ok(&["enk-series", "--knot", "trefoil", "--n", "3", "--order", "1"]), "1 - 2t\n");
}

#[test]
fn knot_series() {
    assert_eq!(ok(&["alexander", "--knot", "figure-eight"]), "1 - 3t + t^2\n");
    assert_eq!(
        ok(&["xk-series", "--knot", "trefoil", "--order", "4"]),
        "rational: (1 - t + t^2)/(1 - 2t + t^2)\nexpansion: 1 + t + 2t^2 + 3t^3 + 4t^4\n"
    );
}

#[test]
fn plane_curve_commands() {
    assert_eq!(ok(&["severi", "--degree", "4", "--nodes", "1"]), "27\n");
    assert_eq!(
        ok(&["severi-general", "--degree", "1", "--genus", "0", "--beta", "1"]),
        "1\n"
    );
    assert_eq!(ok(&["severi-general", "--degree", "3", "--genus", "0", "--beta", "3"]), "12\n");
    assert_eq!(ok(&["severi-general", "--degree", "4", "--genus", "1", "--beta", "4"]), "225\n");
    assert_eq!(ok(&["severi-general", "--degree", "3", "--genus", "-1", "--beta", "3"]), "0\n");
    assert_eq!(
        ok(&["bryan-leung", "--order", "3"]),
        "1 + 12q + 90q^2 + 520q^3\n"
    );
}

#[test]
fn moduli_commands() {
    assert_eq!(ok(&["descendant", "--powers", "2,0,0,0,0"]), "1\n");
    assert_eq!(ok(&["descendant", "--powers", "1", "--genus", "1"]), "1/24\n");
    assert_eq!(ok(&["kappa", "--a", "2"]), "1\n");
    assert_eq!(ok(&["dim", "--dimx", "4", "--c1a", "3", "--genus", "0", "--points", "2"]), "8\n");
}

#[test]
fn records_format() {
    assert_eq!(
        ok(&["--format", "records", "kontsevich", "--degree", "4"]),
        "{\"value\":\"620\"}\n"
    );
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["xk-series", "--knot", "trefoil", "--order", "2", "--format", "records"]))
            .unwrap();
    assert_eq!(v["rational"], "(1 - t + t^2)/(1 - 2t + t^2)");
    assert_eq!(v["expansion"], serde_json::json!(["1", "1", "2"]));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["kontsevich", "--degree", "x"]), 2);
    assert_eq!(code(&["kontsevich"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
    assert_eq!(code(&["kontsevich", "--degree", "0"]), 1);
    assert_eq!(code(&["severi", "--degree", "3", "--nodes", "1"]), 0);
    assert_eq!(code(&["severi", "--degree", "3", "--nodes", "2"]), 1);
    assert_eq!(code(&["enk-series", "--knot", "trefoil", "--n", "1"]), 1);
    assert_eq!(code(&["alexander", "--knot", "granny"]), 2);
    assert_eq!(code(&["descendant", "--powers", "0,0"]), 1);
    assert_eq!(code(&["--help"]), 0);

    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "1 2\n3\n");
    assert_eq!(code(&["alexander", "--matrix", &bad]), 2);
    let odd = write(&dir, "odd.txt", "1\n");
    assert_eq!(code(&["alexander", "--matrix", &odd]), 1);
    let table = write(&dir, "bad.jsonl", "{\"euler\":2}\n");
    assert_eq!(code(&["gt-exp", "--table", &table, "--caps", "2,2"]), 2);
    assert_eq!(code(&["gt-exp", "--table", &table, "--caps", "2"]), 2);
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_enumgeom");
    let out = Command::new(bin).args(["kontsevich", "--degree", "3"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "12\n");
    let out = Command::new(bin).args(["kontsevich", "--degree", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("degree"));
    let out = Command::new(bin).args(["kontsevich", "--degree", "-3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

const CONNECTED: &str = r#"{"euler":2,"bidegree":[1,0],"contacts":[2],"count":"1/2"}
{"euler":2,"bidegree":[0,1],"contacts":[1],"count":"3"}
{"euler":0,"bidegree":[1,1],"contacts":[],"count":"-2"}
"#;

fn reparse(path: &Path) -> RelTable {
    RelTable::parse_records(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn table_round_trip_and_determinism() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "connected.jsonl", CONNECTED);
    let first = ok(&["gt-exp", "--table", &input, "--caps", "3,2"]);
    let second = ok(&["gt-exp", "--table", &input, "--caps", "3,2"]);
    assert_eq!(first, second);
    let out = dir.path().join("disconnected.jsonl");
    fs::write(&out, &first).unwrap();
    let parsed = reparse(&out);
    assert_eq!(parsed.to_records(), first);

    let back = ok(&["gt-log", "--table", out.to_str().unwrap(), "--caps", "3,2"]);
    let connected = RelTable::parse_records(CONNECTED).unwrap();
    assert_eq!(back, connected.to_records());

    let glued = ok(&["gt-convolve", "--left", &input, "--right", &input, "--caps", "4,0"]);
    assert_eq!(glued, ok(&["gt-convolve", "--left", &input, "--right", &input, "--caps", "4,0"]));
    let glued_path = dir.path().join("glued.jsonl");
    fs::write(&glued_path, &glued).unwrap();
    assert_eq!(reparse(&glued_path).to_records(), glued);
    // (1/2)^2 * 2 / 1! at bidegree (2,0), 3 * 3 at (0,2), (-2)^2 at (2,2)
    assert_eq!(
        glued,
        "{\"euler\":0,\"bidegree\":[2,2],\"contacts\":[],\"count\":\"4\"}\n\
         {\"euler\":2,\"bidegree\":[0,2],\"contacts\":[],\"count\":\"9\"}\n\
         {\"euler\":2,\"bidegree\":[2,0],\"contacts\":[],\"count\":\"1/2\"}\n"
    );
}

#[test]
fn convolve_with_s_matrix_file() {
    let dir = TempDir::new().unwrap();
    let left = write(&dir, "l.jsonl", "{\"euler\":2,\"bidegree\":[1,0],\"contacts\":[2],\"count\":\"1\"}\n");
    let right = write(&dir, "r.jsonl", "{\"euler\":2,\"bidegree\":[0,1],\"contacts\":[1],\"count\":\"1\"}\n");
    assert_eq!(ok(&["gt-convolve", "--left", &left, "--right", &right, "--caps", "3,0"]), "\n");
    let s = write(
        &dir,
        "s.jsonl",
        "{\"from\":[2],\"to\":[1],\"shift\":[0,0],\"weight\":\"5\"}\n",
    );
    assert_eq!(
        ok(&["gt-convolve", "--left", &left, "--right", &right, "--smatrix", &s, "--caps", "3,0"]),
        "{\"euler\":2,\"bidegree\":[1,1],\"contacts\":[],\"count\":\"10\"}\n"
    );
}
