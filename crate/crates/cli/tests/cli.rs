use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibext"))
        .args(args)
        .env_remove("LEIBEXT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn check_prints_fingerprint() {
    let o = run(&["--format", "machine", "check", "--catalog", "NF", "--n", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("check.leibniz.NF(n:5).lcs_dims=[5,4,3,2,1,0]"));
}

#[test]
fn check_rejects_malformed_file() {
    let dir = std::env::temp_dir().join(format!("leibext-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{ \"name\": \"bad\" ").unwrap();
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: parsing"));
}

#[test]
fn invalid_representation_is_named() {
    let o = run(&["cohomology", "--catalog", "H", "--alpha", "1", "1", "--beta", "0", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not a representation: l_x l_y = -l_x r_y"));
}

#[test]
fn cohomology_matches_listed_case() {
    let o = run(&["--format", "machine", "cohomology", "--catalog", "R", "--n", "4", "--gamma", "0", "-5"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains(".z2=6\n"));
    assert!(out.contains(".h2=1\n"));
    assert!(out.contains(".h2_rep1="));
}

#[test]
fn extend_builds_r_hat() {
    let o = run(&["extend", "--catalog", "R", "--n", "4", "--gamma", "0", "-5", "--omega", "e4,e1=1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("PASS  lemma/R^"));
    let json = &out[out.find('{').unwrap()..];
    let table = leibext::catalog::format::parse_algebra(json).unwrap();
    assert_eq!(table.dim(), 6);
    assert!(table.leibniz_check().holds());
}

#[test]
fn extend_names_the_violating_triple() {
    let o = run(&["extend", "--catalog", "R", "--n", "4", "--gamma", "0", "-5", "--omega", "e4,e1=1; e1,e1=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cocycle identity fails at (e1, e1, x)"));
}

#[test]
fn verify_subset_is_deterministic() {
    let a = run(&["--format", "machine", "verify", "--only", "l1", "--seed", "7"]);
    let b = run(&["--format", "machine", "verify", "--only", "l1", "--seed", "7"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).starts_with("command=verify\nseed=7\n"));
    assert!(stdout(&a).contains("summary.fail=0"));
}

#[test]
fn verify_rejects_unknown_tag() {
    let o = run(&["verify", "--only", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}
