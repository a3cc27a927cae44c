use std::process::{Command, Output};

fn calogero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_calogero"))
        .args(args)
        .env_remove("CALOGERO_PRECISION")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_json_round_trips() {
    let o = calogero(&["expand", "--family", "B", "--N", "3", "--mu", "1,0,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["label"], serde_json::json!([1, 0, 2]));
    assert_eq!(v["parities"], serde_json::json!([-1, 1, 1]));
    let poly = calogero::exactpoly::Poly::from_json(&stdout(&o)).unwrap();
    assert_eq!(poly.coeff(&[1, 0, 2]), calogero::exactpoly::int(1));
}

#[test]
fn exit_codes() {
    assert_eq!(calogero(&["verify", "--N", "2", "--max-degree", "3"]).status.code(), Some(0));
    assert_eq!(calogero(&["verify", "--a", "0"]).status.code(), Some(1));
    assert_eq!(calogero(&["verify", "--N", "2", "--max-degree", "2", "--perturb-top", "1"]).status.code(), Some(2));
    assert_eq!(calogero(&["norms", "--mu", "2,2", "--sym", "-"]).status.code(), Some(1));
    assert_eq!(calogero(&["expand", "--mu", "1,x"]).status.code(), Some(1));
    assert_eq!(calogero(&["gram", "--a", "1/2"]).status.code(), Some(1));
}

#[test]
fn gram_output_is_symmetric_and_deterministic() {
    let args = ["gram", "--family", "B", "--N", "2", "--a", "1", "--b", "1", "--degree", "3", "--precision", "40", "--format", "json"];
    let a = calogero(&args);
    let b = calogero(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let m = v["matrix"].as_array().unwrap();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(x, &m[j][i]);
        }
    }
}

#[test]
fn precision_from_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_calogero"));
        c.args(["gram", "--a", "1", "--degree", "1", "--format", "json"]).args(extra);
        match env {
            Some(v) => c.env("CALOGERO_PRECISION", v),
            None => c.env_remove("CALOGERO_PRECISION"),
        };
        let v: serde_json::Value = serde_json::from_slice(&c.output().unwrap().stdout).unwrap();
        v["precision_digits"].as_u64().unwrap()
    };
    assert_eq!(run(None, &[]), 40);
    assert_eq!(run(Some("60"), &[]), 60);
    assert_eq!(run(Some("60"), &["--precision", "30"]), 30);
}

#[test]
fn norms_with_absolute_values() {
    let o = calogero(&["norms", "--N", "1", "--a", "1", "--degree", "1", "--absolute", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // <1, 1> = sqrt(2π) at ω = 1/2
    assert!(v[0]["absolute"].as_str().unwrap().starts_with("2.50662827463100050241"));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("calogero-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbit.csv");
    let o = calogero(&["orbit", "--mu", "2,1,0", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}
