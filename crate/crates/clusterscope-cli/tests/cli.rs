//! End-to-end runs of the installed binary: exit codes, pipelines,
//! and the JSON switch.

use std::io::Write;
use std::process::{Command, Stdio};

const A2: &str = "quiver a2\nvertices 2\nfrozen none\narrows\n1 2 1\nend\n";

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clusterscope"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn clusterscope");
    child
        .stdin
        .take()
        .expect("stdin handle")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("wait");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn catalog(name: &str) -> String {
    let (code, text, _) = run(&["catalog", name], "");
    assert_eq!(code, 0, "catalog {name}");
    text
}

#[test]
fn the_catalog_lists_names_and_writes_files() {
    let (code, list, _) = run(&["catalog", "--list"], "");
    assert_eq!(code, 0);
    assert!(list.lines().any(|l| l == "markov"));
    assert!(list.lines().any(|l| l == "x6"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x6.qvr");
    let (code, _, _) = run(&["catalog", "x6", "--out", path.to_str().unwrap()], "");
    assert_eq!(code, 0);
    let on_disk = std::fs::read_to_string(&path).unwrap();
    assert_eq!(on_disk.trim_end(), catalog("x6").trim_end());
}

#[test]
fn mutation_is_an_involution_through_the_binary() {
    let (code, once, _) = run(&["mutate", "--path", "1"], A2);
    assert_eq!(code, 0);
    assert!(once.contains("2 1 1"));
    let (code, twice, _) = run(&["mutate", "--path", "1,1"], A2);
    assert_eq!(code, 0);
    assert_eq!(twice.trim_end(), A2.trim_end());
}

#[test]
fn banff_succeeds_on_x6_and_the_certificate_verifies() {
    let (code, cert, err) = run(&["banff"], &catalog("x6"));
    assert_eq!(code, 0);
    assert!(err.contains("cover found"));
    assert!(cert.starts_with("certificate freezing stop=acyclic"));
    let (code, verdict, _) = run(&["banff-verify"], &cert);
    assert_eq!(code, 0);
    assert_eq!(verdict.trim_end(), "accept");
}

#[test]
fn banff_reports_the_markov_obstruction_with_exit_one() {
    let (code, text, _) = run(&["banff", "--stop", "acyclic"], &catalog("markov"));
    assert_eq!(code, 1);
    assert!(text.contains("no covering pair"));
}

#[test]
fn seed_level_certificates_survive_the_pipeline() {
    let (code, cert, _) = run(&["banff", "--seed-level"], &catalog("smallex"));
    assert_eq!(code, 0);
    assert!(cert.contains("cluster "));
    let (code, verdict, _) = run(&["banff-verify"], &cert);
    assert_eq!(code, 0);
    assert_eq!(verdict.trim_end(), "accept");
}

#[test]
fn a_tampered_certificate_is_rejected_with_exit_one() {
    let (_, cert, _) = run(&["banff"], &catalog("smallex"));
    let tampered = cert.replace("pair=1,4", "pair=1,3");
    assert_ne!(cert, tampered);
    let (code, verdict, _) = run(&["banff-verify"], &tampered);
    assert_eq!(code, 1);
    assert!(verdict.contains("reject at node"));
}

#[test]
fn pairless_quivers_fail_covering_pairs_with_exit_one() {
    let (code, text, _) = run(&["covering-pairs"], &catalog("x7"));
    assert_eq!(code, 1);
    assert_eq!(text.trim_end(), "none");
    let (code, text, _) = run(&["covering-pairs"], &catalog("smallex"));
    assert_eq!(code, 0);
    assert!(text.contains("1 -> 4"));
}

#[test]
fn surface_pipelines_classify_and_rank() {
    let (code, surf, _) = run(&["catalog", "torus2", "--surface"], "");
    assert_eq!(code, 0);
    let (code, verdict, _) = run(&["surface", "classify"], &surf);
    assert_eq!(code, 0);
    assert!(verdict.contains("locally acyclic"));
    assert!(verdict.contains("Thm-atleast2"));
    let (code, rank, _) = run(&["surface", "rank"], &surf);
    assert_eq!(code, 0);
    assert_eq!(rank.trim_end(), "rank: 5");

    let (_, markov_surf, _) = run(&["catalog", "markov", "--surface"], "");
    let (code, verdict, _) = run(&["surface", "classify"], &markov_surf);
    assert_eq!(code, 1);
    assert!(verdict.contains("not locally acyclic"));
    assert!(verdict.contains("Thm-noboundary"));
}

#[test]
fn exhausted_budgets_exit_three() {
    let (code, text, _) = run(&["class", "--budget", "3"], &catalog("x6"));
    assert_eq!(code, 3);
    assert!(text.contains("complete: false"));
    let (code, _, _) = run(&["find-acyclic", "--depth", "8"], &catalog("smallex"));
    assert_eq!(code, 3);
}

#[test]
fn usage_problems_exit_two() {
    let (code, _, err) = run(&["catalog", "nosuchname"], "");
    assert_eq!(code, 2);
    assert!(err.contains("unknown catalog name"));
    let (code, _, _) = run(&["mutate", "--path", "0"], A2);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["class"], "not a quiver\n");
    assert_eq!(code, 2);
    let (code, _, _) = run(&["no-such-command"], "");
    assert_eq!(code, 2);
}

#[test]
fn json_payloads_are_machine_readable() {
    let (code, text, _) = run(&["--json", "class"], &catalog("markov"));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["members"], 1);
    assert_eq!(v["complete"], true);

    let (code, text, _) = run(&["--json", "covering-pairs"], &catalog("smallex"));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["pairs"][0], serde_json::json!([1, 4]));

    let (code, text, _) = run(&["--json", "catalog", "nosuchname"], "");
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["error"].as_str().unwrap().contains("unknown"));
}

#[test]
fn worked_algebra_examples_come_through_the_cli() {
    let (code, text, _) = run(&["present"], A2);
    assert_eq!(code, 0);
    assert!(text.contains("a1*a1' = a2 + 1"));
    assert!(text.contains("a2*a2' = 1 + a1"));

    let (code, text, _) = run(
        &["evaluate", "--start", "1=1,2=1", "--path", "1,2,1,2,1"],
        A2,
    );
    assert_eq!(code, 0);
    assert!(text.contains("step 1: 2 1"));
    assert!(text.contains("step 2: 2 3"));
    assert!(text.ends_with("step 5: 1 1\n"));

    let (code, text, _) = run(&["degenerate-hom", "--depth", "4"], &catalog("markov"));
    assert_eq!(code, 0);
    assert!(text.contains("homomorphism verified"));
    let (code, text, _) = run(&["degenerate-hom"], &catalog("smallex"));
    assert_eq!(code, 1);
    assert!(text.contains("covering pair 1 -> 4"));
}

#[test]
fn thread_count_never_changes_the_answer() {
    let base = run(&["class"], &catalog("x6"));
    let flagged = run(&["--threads", "4", "class"], &catalog("x6"));
    assert_eq!(base, flagged);
    let via_env = {
        let mut child = Command::new(env!("CARGO_BIN_EXE_clusterscope"))
            .args(["class"])
            .env("CLUSTERSCOPE_THREADS", "3")
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(catalog("x6").as_bytes())
            .unwrap();
        let out = child.wait_with_output().unwrap();
        (
            out.status.code().unwrap(),
            String::from_utf8(out.stdout).unwrap(),
            String::from_utf8(out.stderr).unwrap(),
        )
    };
    assert_eq!(base, via_env);
}
