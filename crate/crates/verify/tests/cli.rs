use std::process::Command;

fn verify() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_verify"));
    c.env_remove("FRAME_RIGIDITY_TOL");
    c
}

fn report(args: &[&str]) -> serde_json::Value {
    let out = verify().args(args).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn passing_run_exits_zero_and_prints_json() {
    let v = report(&[
        "--suite",
        "refinement",
        "--ambient",
        "3",
        "--trials",
        "20",
        "--seed",
        "7",
    ]);
    assert_eq!(v["suite"], "refinement");
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["summary"]["passed"], true);
}

#[test]
fn config_errors_exit_two() {
    for args in [
        vec!["--suite", "clr", "--ambient", "2"],
        vec!["--suite", "nope"],
        vec!["--suite", "obot", "--ambient", "9"],
        vec!["--suite", "obot", "--field", "quaternion"],
        vec!["--suite", "obot", "--tol", "-1"],
        vec!["--suite", "obot", "--trials", "0"],
    ] {
        let out = verify().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = verify().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flag_beats_environment_for_tolerance() {
    let out = verify()
        .env("FRAME_RIGIDITY_TOL", "1e-8")
        .args(["--suite", "partitions", "--ambient", "3", "--trials", "1"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["tol"], 1e-8);
    let out = verify()
        .env("FRAME_RIGIDITY_TOL", "1e-8")
        .args([
            "--suite",
            "partitions",
            "--ambient",
            "3",
            "--trials",
            "1",
            "--tol",
            "1e-10",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["tol"], 1e-10);
    let out = verify()
        .env("FRAME_RIGIDITY_TOL", "junk")
        .args(["--suite", "partitions", "--ambient", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_file_matches_stdout_modulo_wall_time() {
    let dir = std::env::temp_dir().join(format!("verify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let args = [
        "--suite",
        "obot",
        "--ambient",
        "3",
        "--trials",
        "10",
        "--report",
        path.to_str().unwrap(),
    ];
    let out = verify().args(args).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let mut file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let mut stdout: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    file["summary"]["wall_time_s"] = 0.into();
    stdout["summary"]["wall_time_s"] = 0.into();
    assert_eq!(file, stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lists_every_suite() {
    let out = verify().arg("--list-suites").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "clr",
        "clr-bis",
        "pfr-perp",
        "pfr",
        "eversion-order",
        "obot",
        "refinement",
        "partitions",
        "reconstruction",
        "falsify",
    ] {
        assert!(
            text.lines()
                .any(|l| l.split_whitespace().next() == Some(name)),
            "{name}"
        );
    }
}
