//! End-to-end tests of the `cgmix` binary: exit codes, output formats,
//! determinism, and file round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cgmix"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_gadget(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let out = run(&["gadget", name, "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "gadget {name}: {out:?}");
    path
}

#[test]
fn validate_accepts_gadgets_and_rejects_broken_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["thm2", "thm2-restricted", "thm4a", "thm4b", "thm5", "thm7"] {
        let path = write_gadget(dir.path(), name);
        let out = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
    }

    // Decreasing table.
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{
            "players": [{"alpha": "1", "strategies": [["a"]]}],
            "resources": {
                "a": {"latency": {"kind": "table", "values": [3, 1]},
                       "bottleneck": {"kind": "linear", "a": 0, "b": 0}}
            }
        }"#,
    )
    .unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("non-monotone-cost"));

    // Reference to a missing resource.
    let missing = dir.path().join("missing.json");
    std::fs::write(
        &missing,
        r#"{
            "players": [{"alpha": "1", "strategies": [["ghost"]]}],
            "resources": {
                "a": {"latency": {"kind": "linear", "a": 1, "b": 0},
                       "bottleneck": {"kind": "linear", "a": 1, "b": 0}}
            }
        }"#,
    )
    .unwrap();
    let out = run(&["validate", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("ghost"));
}

#[test]
fn solve_exit_codes_cover_found_empty_and_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let thm5 = write_gadget(dir.path(), "thm5");
    let out = run(&["solve", thm5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("pass=true"));
    assert!(stdout(&out).contains("method=singleton"));

    let thm2 = write_gadget(dir.path(), "thm2");
    let out = run(&["solve", thm2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", stdout(&out));

    // Cap small enough that enumeration refuses.
    let out = run(&["solve", thm2.to_str().unwrap(), "--cap", "10"]);
    assert_eq!(out.status.code(), Some(3), "{}", stdout(&out));
    assert!(stdout(&out).contains("inconclusive"));
}

#[test]
fn solve_respects_explicit_method_choice() {
    let dir = tempfile::tempdir().unwrap();
    let thm5 = write_gadget(dir.path(), "thm5");
    let out = run(&["solve", thm5.to_str().unwrap(), "--method", "enumerate"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("method=enumerate"));
    // Requesting an inapplicable specialized method is a usage error.
    let thm4a = write_gadget(dir.path(), "thm4a");
    let out = run(&["solve", thm4a.to_str().unwrap(), "--method", "pure-pref"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn dynamics_traces_cycles_and_convergence() {
    let dir = tempfile::tempdir().unwrap();
    let thm5 = write_gadget(dir.path(), "thm5");
    let out = run(&[
        "dynamics",
        thm5.to_str().unwrap(),
        "--start",
        "0,0,0",
        "--rule",
        "best",
        "--sched",
        "rr",
    ]);
    assert_eq!(out.status.code(), Some(4), "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7, "{text}");
    assert!(text.ends_with("verdict=cycle@0\n"));
    assert!(text.starts_with("step=1 player=1 from=r1 to=r2 cost_before=5 cost_after=4"));

    // Starting at an equilibrium converges in zero steps.
    let out = run(&[
        "dynamics",
        thm5.to_str().unwrap(),
        "--start",
        "0,1,0",
        "--rule",
        "lazy",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out), "verdict=converged\n");

    // Step cap.
    let out = run(&[
        "dynamics",
        thm5.to_str().unwrap(),
        "--start",
        "0,0,0",
        "--rule",
        "best",
        "--max-steps",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn seeded_random_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let thm5 = write_gadget(dir.path(), "thm5");
    let args = [
        "dynamics",
        thm5.to_str().unwrap(),
        "--start",
        "random",
        "--sched",
        "random",
        "--seed",
        "42",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn certify_passes_and_fails_with_exact_ratios() {
    let dir = tempfile::tempdir().unwrap();
    let thm2 = write_gadget(dir.path(), "thm2");
    let state = r#""r1+r2+r3","r6+r7""#;
    let out = run(&["certify", thm2.to_str().unwrap(), "--state", state]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("beta_achieved=28/15"));
    assert!(stdout(&out).contains("worst_player=2"));
    assert!(stdout(&out).contains("worst_deviation=r4+r5"));

    let out = run(&[
        "certify",
        thm2.to_str().unwrap(),
        "--state",
        state,
        "--beta",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // An equilibrium passes at beta 1.
    let thm5 = write_gadget(dir.path(), "thm5");
    let out = run(&[
        "certify",
        thm5.to_str().unwrap(),
        "--state",
        "0,1,0",
        "--beta",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn approx_routes_certify_their_targets() {
    let dir = tempfile::tempdir().unwrap();
    // thm5 is a matroid game with d = 1: the matroid route yields an exact
    // equilibrium.
    let thm5 = write_gadget(dir.path(), "thm5");
    let out = run(&["approx", thm5.to_str().unwrap(), "--potential", "matroid"]);
    assert_eq!(out.status.code(), Some(0), "{:?}", out);
    assert!(stdout(&out).contains("target=1"));
    assert!(stdout(&out).contains("pass=true"));

    // A small alpha-uniform game with equal curves exercises the potential
    // routes.
    let file = dir.path().join("uniform.json");
    std::fs::write(
        &file,
        r#"{
            "players": [
                {"alpha": "1/2", "strategies": [["a", "b"], ["b", "c"]]},
                {"alpha": "1/2", "strategies": [["a", "c"], ["a", "b"]]}
            ],
            "resources": {
                "a": {"latency": {"kind": "table", "values": [2, 4]},
                       "bottleneck": {"kind": "table", "values": [2, 4]}},
                "b": {"latency": {"kind": "table", "values": [3, 6]},
                       "bottleneck": {"kind": "table", "values": [3, 6]}},
                "c": {"latency": {"kind": "table", "values": [1, 8]},
                       "bottleneck": {"kind": "table", "values": [1, 8]}}
            }
        }"#,
    )
    .unwrap();
    for potential in ["mixed", "square", "sum"] {
        let out = run(&["approx", file.to_str().unwrap(), "--potential", potential]);
        assert_eq!(out.status.code(), Some(0), "{potential}: {out:?}");
        assert!(stdout(&out).contains("pass=true"), "{potential}");
    }
    // Applicability failures are usage errors.
    let thm7 = write_gadget(dir.path(), "thm7");
    let out = run(&["approx", thm7.to_str().unwrap(), "--potential", "mixed"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn gadget_output_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["thm2", "thm4a", "thm4b", "thm5", "thm7"] {
        let a = dir.path().join(format!("{name}-a.json"));
        let b = dir.path().join(format!("{name}-b.json"));
        assert!(run(&["gadget", name, "-o", a.to_str().unwrap()])
            .status
            .success());
        assert!(run(&["gadget", name, "-o", b.to_str().unwrap()])
            .status
            .success());
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

        // parse -> serialize -> parse is the identity on the document.
        let text = std::fs::read_to_string(&a).unwrap();
        let doc = cgmix::document::GameDocument::from_json(&text).unwrap();
        let game = doc.to_game().unwrap();
        let again = cgmix::document::GameDocument::from_game(&game);
        let reparsed = again.to_game().unwrap();
        assert_eq!(game, reparsed, "{name}");
    }
}

#[test]
fn is_reduction_gadget_reads_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("triangle.txt");
    std::fs::write(&graph, "0 1\n1 2\n0 2\n").unwrap();
    let out_path = dir.path().join("reduction.json");
    let out = run(&[
        "gadget",
        "is-reduction",
        "--graph",
        graph.to_str().unwrap(),
        "-k",
        "1",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let text = std::fs::read_to_string(&out_path).unwrap();
    let game = cgmix::document::GameDocument::from_json(&text)
        .unwrap()
        .to_game()
        .unwrap();
    // Vertex players + connection player + the two subgame players.
    assert_eq!(game.n_players(), 3 + 3);

    // Degree-1-only graphs are rejected.
    let line = dir.path().join("line.txt");
    std::fs::write(&line, "0 1\n").unwrap();
    let out = run(&[
        "gadget",
        "is-reduction",
        "--graph",
        line.to_str().unwrap(),
        "-k",
        "1",
        "-o",
        dir.path().join("x.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn usage_errors_exit_64() {
    let out = run(&["solve", "/nonexistent/game.json"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
