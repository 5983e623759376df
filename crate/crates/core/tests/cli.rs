use std::path::PathBuf;
use std::process::Command;

use dilatations::cli::{load, run, Config, EXIT_FAIL, EXIT_PARSE, EXIT_PASS, EXIT_RESOURCE};
use dilatations::poly::Limits;
use dilatations::Error;

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn dilata(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dilata")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_text(text: &str) -> (i32, String) {
    let config = Config::default();
    let inst = load(text, &[], &config).unwrap();
    let out = run(&inst, &config);
    (out.exit_code, out.machine_section())
}

fn parse_error(text: &str) -> (usize, usize, String) {
    match load(text, &[], &Config::default()) {
        Err(Error::Parse { line, column, message }) => (line, column, message),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn present_prints_the_naive_presentation() {
    let (code, machine) = run_text("ring A = QQ[a,g]\nideal M in A = (g)\ncenter C on A = [M / a]\nrequest present\n");
    assert_eq!(code, EXIT_PASS);
    assert!(machine.contains("\nrelations: g - a*x_1_1\n"), "{machine}");
    assert!(machine.contains("\nzero_ring: false\n"), "{machine}");
}

#[test]
fn check_reports_the_zero_ring() {
    let (code, machine) = run_text("ring A = QQ[u]\nrels A = (u^2)\ncenter C on A = [(u) / u]\nrequest check\n");
    assert_eq!(code, EXIT_PASS);
    assert!(machine.contains("\nzero_ring: true\n"), "{machine}");
}

#[test]
fn monopoly_on_two_centers() {
    let (code, machine) =
        run_text("ring A = QQ[a, b, x, y]\ncenter C on A = [(x) / a], [(y) / b]\nrequest iso monopoly C\n");
    assert_eq!(code, EXIT_PASS);
    assert!(machine.contains("\nmonopoly: pass\n"));
}

#[test]
fn diagnostics_locate_the_problem() {
    let (line, column, msg) = parse_error("ring A = QQ[a, g]\ncenter C on A = [N / a]\n");
    assert_eq!((line, column), (2, 18));
    assert!(msg.contains("`N`"), "{msg}");
    let (line, _, msg) = parse_error("ring A = Fp(6)[x]\n");
    assert_eq!(line, 1);
    assert!(msg.contains("6 is not prime"));
    let (_, _, msg) = parse_error("ring A = QQ[x]\nideal I in B = (x)\n");
    assert!(msg.contains("undeclared ring `B`"));
    let (_, _, msg) = parse_error("ring A = QQ[x]\nideal I in A = (x +)\n");
    assert!(!msg.is_empty());
    let (_, _, msg) = parse_error("ring A = QQ[x]\nideal I in A = (x)\nrels A = (x^2)\n");
    assert!(msg.contains("must come before"));
    let (_, _, msg) = parse_error("ring A = QQ[x]\nideal A in A = (x)\n");
    assert!(msg.contains("already declared"));
    let (_, _, msg) = parse_error("ring A = QQ[x]\nrequest present\n");
    assert!(msg.contains("no center"));
}

#[test]
fn failed_certificate_exits_one() {
    // M = (x) is not inside (a), so forgetting the first center is not onto
    let (code, machine) = run_text("ring A = QQ[a, b, x, y]\ncenter C on A = [(x) / a], [(y) / b]\nrequest iso forget C 2\n");
    assert_eq!(code, EXIT_FAIL);
    assert!(machine.contains("surjectivity_hypothesis: fail"));
}

#[test]
fn resource_limit_exits_three() {
    let config = Config {
        limits: Limits {
            degree_cap: 1,
            pair_cap: 10,
        },
        ..Config::default()
    };
    let inst = load("ring A = QQ[a,g]\ncenter C on A = [(g) / a]\nrequest present\n", &[], &config).unwrap();
    assert_eq!(run(&inst, &config).exit_code, EXIT_RESOURCE);
}

#[test]
fn command_line_overrides_requests() {
    let config = Config::default();
    let cmd: Vec<String> = ["check", "C"].iter().map(|s| s.to_string()).collect();
    let inst = load(&std::fs::read_to_string(instance("suite.dil")).unwrap(), &cmd, &config).unwrap();
    assert_eq!(inst.requests.len(), 1);
    assert_eq!(run(&inst, &config).exit_code, EXIT_PASS);
}

#[test]
fn binary_exit_codes() {
    let present = instance("present.dil");
    let (code, out, _) = dilata(&[present.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("--- machine ---"));
    let (code, out, _) = dilata(&[present.to_str().unwrap(), "--machine-only"]);
    assert_eq!(code, EXIT_PASS);
    assert!(!out.contains("=="));
    let (code, _, err) = dilata(&[present.to_str().unwrap(), "present", "Nope"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("Nope"));
    let (code, _, _) = dilata(&[present.to_str().unwrap(), "--degree-cap", "1"]);
    assert_eq!(code, EXIT_RESOURCE);
    let (code, _, _) = dilata(&["/nonexistent/file.dil"]);
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn machine_sections_are_byte_identical() {
    let suite = instance("suite.dil");
    let path = suite.to_str().unwrap();
    let (c1, a, _) = dilata(&[path, "--machine-only"]);
    let (c2, b, _) = dilata(&[path, "--machine-only", "--jobs", "4"]);
    assert_eq!((c1, c2), (EXIT_PASS, EXIT_PASS));
    assert_eq!(a, b);
}

#[test]
fn every_shipped_instance_passes() {
    for entry in std::fs::read_dir(instance("")).unwrap() {
        let path = entry.unwrap().path();
        let (code, out, err) = dilata(&[path.to_str().unwrap(), "--machine-only"]);
        assert_eq!(code, EXIT_PASS, "{}\n{out}{err}", path.display());
    }
}
