use std::process::{Command, Output};

fn latpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latpath"))
        .args(args)
        .env_remove("LATPATH_ENUM_GUARD")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = latpath(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_rows() {
    assert_eq!(
        stdout(&["count", "--model", "uq", "--l", "3", "--n", "8"]),
        "{\"l\":3,\"N\":8,\"counts\":{\"0\":1,\"2\":28,\"4\":13,\"6\":7,\"8\":1}}\n"
    );
    assert!(
        stdout(&["count", "--model", "auxiliary", "--l", "3", "--n", "8"]).contains("\"2\":27")
    );
    assert_eq!(
        stdout(&["count", "--model", "uq", "--l", "3", "--n", "0"]),
        "{\"l\":3,\"N\":0,\"counts\":{\"0\":1}}\n"
    );
}

#[test]
fn count_is_byte_stable_and_exact() {
    let args = ["count", "--model", "unrestricted", "--l", "5", "--n", "80"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    // C(80, 40) does not fit in 64 bits
    assert!(a.contains("\"0\":107507208733336176461620"));
}

#[test]
fn count_variants() {
    let csv = stdout(&[
        "count",
        "--model",
        "wall",
        "--l",
        "3",
        "--n",
        "2",
        "--all-levels",
        "--format",
        "csv",
    ]);
    assert_eq!(
        csv,
        "l,model,N,M,count\n3,wall,0,0,1\n3,wall,1,1,1\n3,wall,2,0,1\n3,wall,2,2,1\n"
    );
    assert_eq!(
        stdout(&["count", "--l", "3", "--n", "8", "--m", "2"]),
        "{\"l\":3,\"N\":8,\"counts\":{\"2\":28}}\n"
    );
    let filter = stdout(&[
        "count", "--model", "filter", "--l", "3", "--d", "2", "--type", "2", "--n", "5", "--m", "5",
    ]);
    assert!(filter.contains("{\"5\":2}"), "{filter}");
    let pretty = stdout(&["count", "--l", "3", "--n", "2", "--format", "pretty"]);
    assert!(pretty.starts_with("uq l=3 N=2\n"), "{pretty}");
}

#[test]
fn decompose_examples() {
    assert_eq!(
        stdout(&["decompose", "--l", "3", "--n", "6", "--dims"]),
        "{\"mults\":{\"0\":1,\"2\":9,\"4\":4,\"6\":1},\"dim_check\":\"64\",\"pow2\":\"64\"}\n"
    );
    assert_eq!(
        stdout(&["decompose", "--l", "5", "--n", "2"]),
        "{\"mults\":{\"0\":1,\"2\":1}}\n"
    );
    assert_eq!(
        stdout(&["decompose", "--l", "3", "--n", "1"]),
        "{\"mults\":{\"1\":1}}\n"
    );
}

#[test]
fn enumerate_and_guard() {
    let out = stdout(&[
        "enumerate",
        "--model",
        "wall",
        "--l",
        "3",
        "--n",
        "3",
        "--m",
        "1",
    ]);
    assert!(out.contains("\"total\":2"), "{out}");
    let refused = latpath(&["enumerate", "--l", "3", "--n", "22", "--m", "0"]);
    assert_eq!(refused.status.code(), Some(2));
    let lowered = Command::new(env!("CARGO_BIN_EXE_latpath"))
        .args(["enumerate", "--l", "3", "--n", "3", "--m", "1"])
        .env("LATPATH_ENUM_GUARD", "2")
        .output()
        .unwrap();
    assert_eq!(lowered.status.code(), Some(2));
    let flag = latpath(&[
        "enumerate",
        "--l",
        "3",
        "--n",
        "3",
        "--m",
        "1",
        "--seed-guard",
        "3",
    ]);
    assert!(flag.status.success());
}

#[test]
fn verify_suites() {
    let out = stdout(&[
        "verify",
        "--suite",
        "closed-form",
        "--l",
        "3,5,7",
        "--n-max",
        "40",
    ]);
    assert!(out.starts_with("{\"pass\":true,"), "{out}");
    for suite in [
        "identities",
        "oracle",
        "f1",
        "wz",
        "long-step",
        "dims",
        "routes",
        "congruence",
    ] {
        let out = stdout(&["verify", "--suite", suite]);
        assert!(out.contains("\"status\":\"pass\""), "{suite}: {out}");
    }
    let csv = stdout(&[
        "verify",
        "--suite",
        "dims,routes",
        "--n-max",
        "10",
        "--format",
        "csv",
    ]);
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn boundary_of_second_strip() {
    assert_eq!(
        stdout(&["boundary", "--model", "auxiliary", "--l", "3", "--n-max", "6"]),
        "{\"l\":3,\"model\":\"auxiliary\",\"strip\":2,\"N_max\":6,\"boundary\":[[2,2],[2,4],[2,6]]}\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--l", "2", "--n", "3"][..],
        &["count", "--l", "3", "--n", "3", "--m", "0"],
        &["count", "--l", "3"],
        &["verify", "--suite", "nonsense"],
        &["count", "--model", "torus", "--l", "3", "--n", "1"],
        &["boundary", "--l", "3", "--n-max", "4", "--strip", "0"],
    ] {
        let out = latpath(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
