use qschubert::cli::{dispatch, Outcome};

fn run(args: &str) -> Outcome {
    dispatch(std::iter::once("qschubert").chain(args.split_whitespace()))
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("qschubert-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn line_count_on_g25() {
    let out = run("gw --type A --k 2 --n 5 --d 1 --lambda 2,2 --mu 2,1 --nu 3,1 --engine both");
    assert_eq!(out.code, 0, "{}", out.output);
    assert!(out.output.contains("value: 1"), "{}", out.output);
    assert!(out.output.contains("F(1,3;5)"), "{}", out.output);
}

#[test]
fn jstring_example() {
    let out = run("jstring --k 4 --n 9 --d 2 --lambda 4,4,3,1");
    assert_eq!((out.code, out.output.as_str()), (0, "101202112\n"));
}

#[test]
fn dimension_failure_is_undefined() {
    let out = run("gw --type C --n 2 --d 1 --lambda 2 --mu 1 --nu 3,1");
    assert_eq!(out.code, 2);
    assert!(out.output.starts_with("undefined (dimension condition)"), "{}", out.output);
    assert!(!out.output.contains("value"));
}

#[test]
fn malformed_input_exits_with_two() {
    for args in ["gw --type A --n 5 --lambda 2,2 --mu 2,1 --nu 3,1", "jstring --k 2 --n 5 --d 1 --lambda 2,x", "frobnicate"] {
        assert_eq!(run(args).code, 2, "{args}");
    }
}

#[test]
fn isotropic_gw_reports_classical_equivalent() {
    let out = run("gw --type D --n 2 --lambda 2 --mu 2 --nu 2,1");
    assert_eq!(out.code, 0, "{}", out.output);
    assert!(out.output.contains("OG(1,6)"), "{}", out.output);
    let out = run("gw --type C --n 3 --d 1 --lambda 3 --mu 3,1 --nu 2,1");
    assert_eq!(out.code, 0, "{}", out.output);
    assert!(out.output.contains("IG(2,6)"), "{}", out.output);
}

#[test]
fn text_and_json_agree() {
    for args in [
        "gw --type A --k 2 --n 5 --lambda 2,2 --mu 2,1 --nu 3,1",
        "gw --type C --n 3 --lambda 3 --mu 3,1 --nu 2,1",
        "gw --type D --n 3 --lambda 3 --mu 3,2,1 --nu 3",
    ] {
        let text = run(args);
        let json = run(&format!("--json {args}"));
        assert_eq!((text.code, json.code), (0, 0), "{args}");
        let record: serde_json::Value = serde_json::from_str(&json.output).unwrap();
        let value = record["value"].as_u64().unwrap();
        assert!(text.output.contains(&format!("value: {value}")), "{args}: {}", text.output);
    }
}

#[test]
fn json_replay_is_byte_identical() {
    for (i, args) in [
        "gw --type A --k 2 --n 5 --lambda 2,2 --mu 2,1 --nu 3,1 --engine both",
        "gw --type C --n 3 --d 1 --lambda 3 --mu 3,1 --nu 2,1",
        "gw --type D --n 2 --lambda 2 --mu 2 --nu 2,1",
    ]
    .iter()
    .enumerate()
    {
        let first = run(&format!("--json {args}"));
        assert_eq!(first.code, 0, "{}", first.output);
        let path = temp_file(&format!("replay{i}.json"), &first.output);
        let again = run(&format!("replay {}", path.display()));
        std::fs::remove_file(&path).ok();
        assert_eq!(again.code, 0);
        assert_eq!(again.output, first.output);
    }
}

#[test]
fn replay_with_wrong_value_exits_with_three() {
    let record = r#"{"family":"A","k":2,"n":5,"d":1,"lambda":"2,2","mu":"2,1","nu":"3,1","value":2}"#;
    let path = temp_file("wrong.json", record);
    let out = run(&format!("replay {}", path.display()));
    std::fs::remove_file(&path).ok();
    assert_eq!(out.code, 3, "{}", out.output);
}

#[test]
fn qmult_table() {
    let out = run("qmult --type A --k 2 --n 4 --lambda 2 --mu 1,1");
    assert_eq!(out.code, 0, "{}", out.output);
    assert!(out.output.lines().any(|l| l == "-\t1\t1"), "{}", out.output);
    let out = run("qmult --type D --n 3 --lambda 3 --mu 3");
    assert!(out.output.lines().any(|l| l == "-\t1\t1"), "{}", out.output);
}

#[test]
fn puzzle_and_dual_commands() {
    assert_eq!(run("puzzle count 12012 10212 10221").output.trim(), "1");
    let show = run("puzzle show 12012 10212 10221");
    assert_eq!(show.code, 0);
    assert!(!show.output.is_empty());
    assert_eq!(run("dual --type A --k 2 --n 5 --lambda 3,1").output, "2\n");
    assert_eq!(run("dual --type C --n 3 --lambda 3,1").output, "2\n");
}

#[test]
fn checks_pass() {
    for args in [
        "check conjecture --max-n 4",
        "check associativity --type C --n 3",
        "check associativity --type A --n 4",
        "check pfaffian --n 4",
        "check lift --n 3",
        "check relations --n 4",
        "--threads 2 check yong --n 5",
    ] {
        let out = run(args);
        assert_eq!(out.code, 0, "{args}: {}", out.output);
        assert!(out.output.contains("ok"), "{args}: {}", out.output);
    }
}
