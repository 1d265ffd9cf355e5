use std::process::{Command, Output};

use qnarayana::polyarith::parse_poly;
use serde_json::Value;

fn qnarayana(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qnarayana"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

#[test]
fn single_case_jsonl_has_expected_quotient() {
    let o = qnarayana(&[
        "--format", "jsonl", "verify", "thm12", "--n", "2", "--r", "1", "--j", "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["record"], "header");
    assert_eq!(lines[1]["record"], "run");
    let case = &lines[2];
    assert_eq!(case["quotient"], "q^6");
    assert_eq!(case["sum_degree"], 8);
    assert_eq!(case["divisible"], true);
    assert_eq!(lines[3]["record"], "summary");
    assert_eq!(lines[3]["pass"], 1);
}

#[test]
fn boundary_failure_exits_with_finding() {
    let o = qnarayana(&[
        "--format", "csv", "verify", "conj32", "--n", "1", "--r", "1", "--j-max", "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    let mut rows = text.lines();
    assert_eq!(
        rows.next(),
        Some("statement,n,r,j,ns,f,shift,divisible,quotient_nonneg,in_theorem_range,sum_degree,quotient")
    );
    let last = rows.last().unwrap();
    assert!(last.starts_with("conj32,1,1,2,"), "{last}");
    assert!(last.contains(",false,false,"), "{last}");
}

#[test]
fn empty_range_gives_zero_case_summary() {
    let o = qnarayana(&["--format", "jsonl", "verify", "thm12", "--n", "3..2"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2]["cases"], 0);
    assert_eq!(lines[2]["max_degree"], -1);
}

#[test]
fn report_polynomials_parse_back() {
    let o = qnarayana(&[
        "--format", "jsonl", "verify", "conj34", "--m", "2", "--ni", "1..2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut seen = 0;
    for line in json_lines(&o) {
        if let Some(q) = line.get("quotient").and_then(Value::as_str) {
            let parsed = parse_poly(q).expect("quotient parses");
            assert_eq!(parsed.to_string(), q);
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn polynomial_commands() {
    assert_eq!(stdout(&qnarayana(&["qbinom", "2", "5"])), "0\n");
    assert_eq!(stdout(&qnarayana(&["qbinom", "3", "-1"])), "0\n");
    assert_eq!(
        stdout(&qnarayana(&["qcatalan", "3"])),
        "q^6 + q^4 + q^3 + q^2 + 1\n"
    );
    assert_eq!(
        stdout(&qnarayana(&["--format", "jsonl", "qbinom", "3", "1"])),
        "{\"coeffs\":[\"1\",\"1\",\"1\"]}\n"
    );
    let o = qnarayana(&[
        "--format", "jsonl", "sum", "cyclic", "--ns", "2,1", "--f", "0,0,0,1",
    ]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["shift"], 5);
}

#[test]
fn proof_replay_reports_all_checks() {
    let o = qnarayana(&[
        "--format", "jsonl", "proof", "--n", "1", "--r", "2", "--j", "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["all_hold"], true);
    assert_eq!(v["bezout_u"], "-q");
    assert_eq!(v["bezout_v"], "1");
    assert!(v["checks"].as_array().unwrap().len() >= 5);
}

#[test]
fn invalid_input_exits_one() {
    let o = qnarayana(&["qcatalan", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = qnarayana(&["sum", "cyclic", "--ns", "1", "--f", "1,x"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("qnarayana-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let args = [
        "--format", "csv", "verify", "conj31", "--n", "1..2", "--r", "1",
    ];
    let direct = stdout(&qnarayana(&args));
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = qnarayana(&with_out);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), direct);
    std::fs::remove_dir_all(&dir).ok();
}
