use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn robp(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_robp-lab"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_compile_certify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = robp(d, &["gen", "--k", "6", "--r", "2", "--allow-small-r", "--out", "inst"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("k=6 y=3 r=2 p=1 path_len=2 n=14\n"));
    for ext in ["gr", "cnf", "td", "meta.txt"] {
        assert!(d.join(format!("inst/family_k6_r2.{ext}")).exists(), "{ext}");
    }

    let o = robp(d, &["compile", "inst/family_k6_r2.cnf", "--order", "random", "--seed", "4", "--out", "y.bp"]);
    assert!(o.status.success());
    let again = robp(d, &["compile", "inst/family_k6_r2.gr", "--order", "random", "--seed", "4"]);
    assert_eq!(fs::read_to_string(d.join("y.bp")).unwrap(), stdout(&again));

    let o = robp(d, &["uniformize", "y.bp", "--out", "u.bp"]);
    assert!(o.status.success());
    assert_eq!(fs::read(d.join("y.bp")).unwrap(), fs::read(d.join("u.bp")).unwrap());

    let o = robp(d, &["certify", "inst/family_k6_r2.gr", "--bp", "y.bp", "--out", "cert.txt"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = robp(d, &["certify", "inst/family_k6_r2.gr", "--bp", "y.bp", "--check", "cert.txt"]);
    assert!(o.status.success());

    assert_eq!(stdout(&robp(d, &["dmw", "inst/family_k6_r2.gr"])).split(' ').next(), Some("dmw=1"));
}

#[test]
fn widths_and_cover_of_a_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("c8.gr"), "c eight-cycle\np edge 8 8\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 8\ne 8 1\n").unwrap();
    assert!(stdout(&robp(d, &["mw", "c8.gr"])).starts_with("mw=2 "));
    assert!(stdout(&robp(d, &["dmw", "c8.gr"])).starts_with("dmw=2 "));
    let o = robp(d, &["cover", "c8.gr", "--t", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("q=4 t=2 x=2 coverlb=true\n"));
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = robp(d, &["verify", "widths", "--max-n", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("suite=widths ") && l.contains(" status=pass ")));

    let o = robp(d, &["verify", "bogus"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("graphs, widths, family"));
}

#[test]
fn experiment_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let args = ["experiment", "--k", "6", "--r-max", "3", "--order", "random", "--seed", "9"];
    let a = robp(d, &args);
    let b = robp(d, &args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let csv = stdout(&a);
    assert_eq!(csv.lines().next(), Some("k,r,n,edges,nodes,best_edges,dmw,q,lb"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn failures_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = robp(d, &["mw", "missing.gr"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.gr"));
    let o = robp(d, &["gen", "--k", "6", "--r", "1"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("threshold"));
    let o = robp(d, &["gen", "--k", "50", "--r", "30"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("n=51539607528"));
}
