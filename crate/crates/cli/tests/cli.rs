use std::path::PathBuf;
use std::process::{Command, Output};

use descent_core::filtration::SigmaElement;
use descent_core::group_algebra::{b_element, b_product_mackey, b_sum};
use descent_core::{Composition, GroupAlgebraElement, Rational};

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent"))
        .args(args)
        .env_remove("DESCENT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_dir().join(name)).expect("golden file exists")
}

fn golden_path(name: &str) -> String {
    golden_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn golden_text_outputs() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["bexpand", "--n", "3", "--alpha", "2,1"],
            "bexpand_2_1.txt",
        ),
        (&["bexpand", "--n", "3", "--alpha", "3"], "bexpand_3.txt"),
        (&["bexpand", "--alpha", "1,1,1"], "bexpand_1_1_1.txt"),
        (
            &["bprod", "--n", "2", "--alpha", "1,1", "--beta", "1,1"],
            "bprod_11_11.txt",
        ),
        (
            &["bprod", "--n", "2", "--alpha", "2", "--beta", "1,1"],
            "bprod_2_11.txt",
        ),
        (
            &["bprod", "--n", "3", "--alpha", "2,1", "--beta", "1,2"],
            "bprod_21_12.txt",
        ),
        (&["lrm", "123"], "lrm_123.txt"),
        (&["lrm", "321"], "lrm_321.txt"),
        (&["lrm", "231"], "lrm_231.txt"),
        (&["dims", "--n", "1"], "dims_1.txt"),
        (&["dims", "--n", "2"], "dims_2.txt"),
        (&["dims", "--n", "3"], "dims_3.txt"),
        (&["--format", "json", "dims", "--n", "3"], "dims_3.json"),
        (
            &["verify", "--suite", "all", "--n", "3"],
            "verify_all_3.txt",
        ),
    ];
    for (args, file) in cases {
        assert_eq!(stdout_of(args), golden(file), "{args:?}");
    }
}

#[test]
fn golden_eigen_outputs() {
    let sum = golden_path("sum_of_all_3.json");
    assert_eq!(
        stdout_of(&["eigen", "--file", &sum, "--n", "3"]),
        golden("eigen_sum_of_all_3.txt")
    );
    let mixed = golden_path("mixed_3.json");
    assert_eq!(
        stdout_of(&["eigen", "--file", &mixed, "--n", "3"]),
        golden("eigen_mixed_3.txt")
    );
}

#[test]
fn bexpand_examples() {
    assert_eq!(
        stdout_of(&["bexpand", "--n", "4", "--alpha", "3,1"]),
        "1234\n1243\n1342\n2341\n"
    );
    assert_eq!(stdout_of(&["bexpand", "--n", "3", "--alpha", "3"]), "123\n");
}

#[test]
fn lrm_worked_example() {
    assert_eq!(
        stdout_of(&["lrm", "672491853"]),
        "LRM = {1,2,6}\nLRM' = {1,5}\ncLRM' = (1,4,4)\nlrm sequence = 6 2 1\n"
    );
}

#[test]
fn json_round_trips() {
    for alpha in ["2,1", "1,2,1", "3,1", "1,1,1,1"] {
        let c: Composition = alpha.parse().unwrap();
        let out = stdout_of(&["--format", "json", "bexpand", "--alpha", alpha]);
        let back = GroupAlgebraElement::from_json_str(&out, c.weight()).unwrap();
        assert_eq!(back, b_element(&c));
    }

    let out = stdout_of(&[
        "--format", "json", "bprod", "--alpha", "2,2", "--beta", "2,2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let product = GroupAlgebraElement::from_json_str(&v["product"].to_string(), 4).unwrap();
    let (a, b): (Composition, Composition) = ("2,2".parse().unwrap(), "2,2".parse().unwrap());
    assert_eq!(product, b_element(&a).convolve(&b_element(&b)).unwrap());
    assert_eq!(
        product,
        b_sum(4, &b_product_mackey(&a, &b).unwrap()).unwrap()
    );

    let dir = std::env::temp_dir().join(format!("descent-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sigma.json");
    let sigma = SigmaElement::new(
        4,
        [
            ("1,1,1,1".parse().unwrap(), Rational::from(1)),
            ("2,2".parse().unwrap(), "-3/2".parse().unwrap()),
        ],
    )
    .unwrap();
    std::fs::write(&path, sigma.to_json_string()).unwrap();
    let out = stdout_of(&[
        "--format",
        "json",
        "eigen",
        "--file",
        path.to_str().unwrap(),
        "--n",
        "4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["triangular"], true);
    assert_eq!(v["diagonal_matches_prediction"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eigen_sum_of_all_n4() {
    let dir = std::env::temp_dir().join(format!("descent-cli-sum-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sum.json");
    std::fs::write(&path, r#"[{"alpha":"1,1,1,1","num":1,"den":1}]"#).unwrap();
    let out = stdout_of(&["eigen", "--file", path.to_str().unwrap(), "--n", "4"]);
    assert!(out.ends_with("eigenvalues:\n  24 ×1\n  0 ×23\n"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_json_is_structured() {
    let out = stdout_of(&[
        "--format", "json", "verify", "--suite", "mackey", "--n", "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["suite"], "mackey");
    assert_eq!(v[0]["cases"].as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_2() {
    let bad: &[&[&str]] = &[
        &["bexpand", "--alpha", "2,0"],
        &["bexpand", "--n", "4", "--alpha", "2,1"],
        &["bprod", "--alpha", "2", "--beta", "1,2"],
        &["lrm", "1223"],
        &["dims", "--n", "6"],
        &["verify", "--suite", "nonsense", "--n", "3"],
        &["verify", "--suite", "all", "--n", "7", "--extended"],
        &["eigen", "--file", "/nonexistent/file.json", "--n", "3"],
        &["frobnicate"],
    ];
    for args in bad {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn jobs_flag_and_determinism() {
    let a = stdout_of(&["--jobs", "1", "verify", "--suite", "filtration", "--n", "4"]);
    let b = stdout_of(&["--jobs", "2", "verify", "--suite", "filtration", "--n", "4"]);
    assert_eq!(a, b);
    assert!(a.starts_with("PASS filtration n=4"));
    assert_eq!(run(&["--jobs", "0", "lrm", "12"]).status.code(), Some(2));
}
