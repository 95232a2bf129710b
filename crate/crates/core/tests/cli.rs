use std::fs;
use std::process::Command;

use jacobi_codes::cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("jacobi-codes").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn weight_enumerators() {
    assert_eq!(stdout(&["we", "--catalog", "tetracode"]), "x^4+8xy^3\n");
    assert_eq!(stdout(&["we", "--catalog", "i2^2"]), "x^4+6x^2y^2+9y^4\n");
}

#[test]
fn zero_dimensional_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.gen");
    fs::write(&path, "# no rows\nq=5^1 n=3 ip=euclidean\n").unwrap();
    assert_eq!(stdout(&["we", "--code", path.to_str().unwrap()]), "x^3\n");
}

#[test]
fn extension_field_code_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i2.gen");
    fs::write(&path, "q=2^2 n=2 ip=hermitian modulus=1,1,1\n1.0 1.0\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["we", "--code", p]), "x^2+3y^2\n");
    assert_eq!(stdout(&["mw", "--code", p]), "x^2+3y^2\nSELF-DUAL-CONSISTENT\n");
}

#[test]
fn bad_code_files_name_the_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.gen");
    fs::write(&path, "q=3^1 n=3 ip=euclidean\n1 0 2\n1 7 0\n").unwrap();
    let out = cli(&["we", "--code", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bad.gen") && out.stderr.contains("line 3"), "{}", out.stderr);

    let out = cli(&["we", "--code", dir.path().join("missing.gen").to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("missing.gen"));
}

#[test]
fn jacobi_polynomials() {
    assert_eq!(
        stdout(&["jacobi", "--catalog", "golay12", "--T", "1"]),
        "w(x^11+132x^5y^6+110x^2y^9)+z(132x^6y^5+330x^3y^8+24y^11)\n"
    );
    assert_eq!(stdout(&["jacobi", "--catalog", "tetracode", "--T", "1,2"]), "w^2x^2+4wzy^2+4z^2xy\n");
    let out = stdout(&["jacobi", "--catalog", "golay12", "--t", "5", "--via-polarization"]);
    assert!(out.ends_with("\nMATCH\n"), "{out}");
}

#[test]
fn polarization_mismatch_and_non_integrality() {
    // coordinates 1 and 2 of i2^2 form one component, so the pair is not generic
    let out = cli(&["jacobi", "--catalog", "i2^2", "--t", "2", "--via-polarization"]);
    assert_eq!(out.code, 1, "{}", out.stderr);
    assert_eq!(
        out.stdout,
        "w^2(x^2+y^2)+4wzxy+z^2(x^2+9y^2)\ndirect: w^2(x^2+3y^2)+z^2(3x^2+9y^2)\nMISMATCH\n"
    );

    let out = cli(&["jacobi", "--catalog", "hexacode+i2", "--T", "1", "--via-polarization"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty() && out.stderr.contains("non-integral"), "{}", out.stderr);

    assert_eq!(stdout(&["polarize", "--poly", "x^2+y^2", "--t", "1"]), "wx+zy\n");
    let out = cli(&["polarize", "--poly", "x^2+xy+y^2", "--t", "1"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("non-integral"));
    assert_eq!(stdout(&["polarize", "--poly", "x^2+xy+y^2", "--t", "1", "--unnormalized"]), "w(2x+y)+z(x+2y)\n");
}

#[test]
fn multi_reference_vectors() {
    let raw = stdout(&["jacobi", "--catalog", "tetracode", "--refs", "1 0 0 0;0 1 0 0", "--raw"]);
    let by_t = stdout(&["jacobi", "--catalog", "tetracode", "--t", "1,1", "--raw"]);
    assert_eq!(raw, by_t);
    assert!(raw.contains("x_{") && !raw.contains('w'));
    let out = stdout(&["jacobi", "--catalog", "tetracode", "--t", "1,1", "--via-polarization"]);
    assert!(out.ends_with("\nMATCH\n"), "{out}");
}

#[test]
fn macwilliams() {
    assert_eq!(stdout(&["mw", "--catalog", "golay12"]), "x^12+264x^6y^6+440x^3y^9+24y^12\nSELF-DUAL-CONSISTENT\n");
    assert_eq!(stdout(&["mw", "--poly", "x^3", "--field", "q=3^1", "--size", "1"]), "x^3+6x^2y+12xy^2+8y^3\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.gen");
    fs::write(&path, "q=2^1 n=3 ip=euclidean\n1 1 1\n").unwrap();
    let out = stdout(&["mw", "--code", path.to_str().unwrap(), "--T", "1"]);
    assert!(out.ends_with("DUAL-MATCH\n"), "{out}");
    // transforming the dual's enumerator returns the original
    let dual = out.lines().next().unwrap().to_string();
    assert_eq!(stdout(&["mw", "--poly", &dual, "--ell", "1", "--size", "4"]), "wx^2+zy^2\n");
}

#[test]
fn designs() {
    assert_eq!(
        stdout(&["design", "--catalog", "tetracode^2", "--k", "3", "--t", "2"]),
        "2-(8,3,(0^{16},2^{12})) ; D_2(8,3,2) ≤ 8 ≤ C_0(8,3,2)\n"
    );
    let out = stdout(&["design", "--catalog", "golay12", "--k", "6", "--t", "5"]);
    assert!(out.trim_end().ends_with("5-design with λ=1"), "{out}");
    assert!(stdout(&["design", "--catalog", "golay12", "--k", "7", "--t", "2"]).starts_with("no blocks"));
    let json = stdout(&["design", "--catalog", "golay12", "--k", "7", "--t", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["blocks"], 0);
    assert_eq!(v["statement"], "no blocks");
}

#[test]
fn design_json_mirrors_text() {
    let json = stdout(&["--format", "json", "design", "--catalog", "tetracode^2", "--k", "3", "--t", "2"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["v"], 8);
    assert_eq!(v["blocks"], 8);
    assert_eq!(v["design"], false);
    assert_eq!(v["spectrum"], serde_json::json!([{ "lambda": 0, "count": 16 }, { "lambda": 2, "count": 12 }]));
    assert_eq!(v["statement"], "D_2(8,3,2) ≤ 8 ≤ C_0(8,3,2)");
}

#[test]
fn generalized_designs() {
    let homogeneous = stdout(&["design", "--catalog", "golay12", "--partition", "1-12", "--t", "5"]);
    assert!(homogeneous.starts_with("generalized 5-homogeneous"), "{homogeneous}");
    let weight = stdout(&["design", "--catalog", "golay12", "--partition", "1-6;7-12", "--k", "6", "--tvec", "3,2"]);
    assert!(weight.starts_with("generalized design: 264 blocks"), "{weight}");
    let literal = stdout(&["design", "--catalog", "golay12", "--partition", "1-6;7-12", "--kvec", "3,3", "--tvec", "1,1"]);
    assert!(literal.starts_with("not a generalized design"), "{literal}");
}

#[test]
fn molien() {
    assert_eq!(stdout(&["molien", "--group", "g3", "--part", "4"]), "u^4+u^3v+u^2v^2+uv^3+v^4\n");
    assert_eq!(stdout(&["molien", "--group", "g4", "--part", "2"]), "u^2+uv+v^2\n");
    assert_eq!(stdout(&["molien", "--group", "identity", "--part", "3"]), "4u^3+6u^2v+6uv^2+4v^3\n");
    assert_eq!(stdout(&["molien", "--group", "g3", "--order"]), "48\n");
    let csv = stdout(&["molien", "--group", "g4", "--max-degree", "2"]);
    assert_eq!(csv, "i,j,c\n0,0,1\n1,0,0\n0,1,0\n2,0,1\n1,1,1\n0,2,1\n");
    let ok = cli(&["molien", "--group", "g3", "--max-degree", "28", "--denominator", "(u-1)^2(u+1)^2(u^2+1)^2(u^2-u+1)(u^2+u+1)(u^4-u^2+1)"]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.starts_with("DENOMINATOR-CONSISTENT"));
    let bad = cli(&["molien", "--group", "g3", "--max-degree", "10", "--denominator", "1-u"]);
    assert_eq!(bad.code, 1);
}

#[test]
fn molien_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    fs::write(&path, "conductor 4\n# rotation by i\n[z, 0; 0, -z]\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["molien", "--group-file", p, "--order"]), "4\n");
    assert_eq!(stdout(&["molien", "--group-file", p, "--part", "2"]), "u^2+2uv+v^2\n");
}

#[test]
fn catalog_listing() {
    let out = stdout(&["catalog"]);
    assert!(out.contains("golay12    q=3 n=12 k=6 d=6 ip=euclidean type=III"), "{out}");
    let text = stdout(&["catalog", "--show", "tetracode"]);
    assert_eq!(text, "q=3^1 n=4 ip=euclidean\n1 0 1 1\n0 1 1 2\n");
}

#[test]
fn verify_builtin_suites() {
    let out = cli(&["verify"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.trim_end().ends_with("0 failed"));
    let one = stdout(&["verify", "--suite", "molien", "--filter", "g4-f"]);
    assert_eq!(one.lines().filter(|l| l.starts_with("PASS")).count(), 8);
    assert_eq!(cli(&["verify", "--suite", "nothing"]).code, 2);
    assert_eq!(cli(&["verify", "--filter", "no-such-case"]).code, 2);
}

#[test]
fn verify_reports_corrupted_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("edited.toml"),
        "[[case]]\nname = \"tetracode-we\"\nkind = \"weight-enumerator\"\ncode = \"tetracode\"\nexpect = \"x^4+7xy^3\"\n",
    )
    .unwrap();
    fs::write(dir.path().join("broken.toml"), "[[case]\nname = ").unwrap();
    let out = cli(&["verify", "--golden-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL edited/tetracode-we"), "{}", out.stdout);
    assert!(out.stdout.contains("FAIL broken/<file>"), "{}", out.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cli(&["jacobi", "--catalog", "tetracode"]).code, 2);
    assert_eq!(cli(&["we", "--catalog", "nonesuch"]).code, 2);
    assert_eq!(cli(&["we"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["jacobi", "--catalog", "tetracode", "--T", "9"]).code, 2);
    assert_eq!(cli(&["design", "--catalog", "tetracode", "--k", "3", "--t", "2", "--mode", "bag"]).code, 2);
}

#[test]
fn budget_limits_enumeration() {
    let out = cli(&["we", "--catalog", "golay12", "--budget", "100"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("budget"), "{}", out.stderr);
}

#[test]
fn binary_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_jacobi-codes");
    let args = ["jacobi", "--catalog", "hexacode", "--t", "1,1", "--raw"];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let budget = Command::new(bin).args(["we", "--catalog", "golay12"]).env("JACOBI_CODES_BUDGET", "10").output().unwrap();
    assert_eq!(budget.status.code(), Some(1));
    let usage = Command::new(bin).args(["verify", "--suite", "none"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
