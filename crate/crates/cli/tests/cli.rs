use std::process::Command;

use phibound::analysis::{make_table, TABLE_ABSCISSAE};
use phibound::{BoundKind, Execution};
use phibound_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, ROW_HEADER};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn phibound(args: &[&str]) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("phibound").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn csv_records(text: &str) -> (Vec<String>, Vec<csv::StringRecord>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(str::to_owned).collect();
    (header, r.records().map(Result::unwrap).collect())
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn eval_polya_at_zero() {
    let o = phibound(&["eval", "--bound", "polya", "--x", "0"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    let (header, rows) = csv_records(&o.out);
    assert_eq!(header, ROW_HEADER);
    assert_eq!(rows.len(), 1);
    assert_eq!(num(&rows[0][1]), 0.5);
    assert_eq!(&rows[0][2], "polya");
    assert_eq!(num(&rows[0][4]), 0.0);
    assert_eq!(&rows[0][5], "false");
}

#[test]
fn eval_keeps_argument_order() {
    let o = phibound(&[
        "eval", "--bound", "eidous", "--bound", "bercu", "--x", "7", "--x", "1",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let (_, rows) = csv_records(&o.out);
    let got: Vec<(f64, String, String)> = rows
        .iter()
        .map(|r| (num(&r[0]), r[2].to_owned(), r[5].to_owned()))
        .collect();
    assert_eq!(
        got,
        [
            (7.0, "eidous".into(), "false".into()),
            (7.0, "bercu".into(), "true".into()),
            (1.0, "eidous".into(), "false".into()),
            (1.0, "bercu".into(), "false".into()),
        ]
    );
}

#[test]
fn verify_eidous_on_a_million_points() {
    let o = phibound(&["verify", "--bound", "eidous", "--points", "1000000"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.out);
    let (header, rows) = csv_records(&o.out);
    assert_eq!(header[4], "passed");
    assert_eq!(&rows[0][4], "true");
    assert_eq!(&rows[0][3], "1000000");
}

#[test]
fn verify_eidous_star_fails() {
    let o = phibound(&["verify", "--bound", "eidous_star", "--points", "100000"]);
    assert_eq!(o.code, EXIT_VERIFICATION_FAILED);
    let (_, rows) = csv_records(&o.out);
    assert_eq!(&rows[0][4], "false");
    assert!(num(&rows[0][5]) < 0.0);
}

#[test]
fn verify_defaults_to_the_validity_interval() {
    let o = phibound(&["verify", "--bound", "bercu", "--points", "11"]);
    let (_, rows) = csv_records(&o.out);
    assert!((num(&rows[0][2]) - 6.248).abs() < 1e-3);
    assert_eq!(&rows[0][8], "0");
}

#[test]
fn maxerr_eidous() {
    let o = phibound(&["maxerr", "--bound", "eidous"]);
    assert_eq!(o.code, EXIT_OK);
    let (header, rows) = csv_records(&o.out);
    assert_eq!(header[..3], ["bound", "location", "value"]);
    assert!((num(&rows[0][1]) - 2.86991).abs() < 1e-4);
    assert!((num(&rows[0][2]) - 5.784e-5).abs() < 1e-8);
    assert_eq!(&rows[0][7], "true");
}

#[test]
fn crossover_and_ratio() {
    let o = phibound(&["crossover"]);
    assert_eq!(o.code, EXIT_OK);
    let (header, rows) = csv_records(&o.out);
    let col = |name: &str| header.iter().position(|h| h == name).unwrap();
    assert!((num(&rows[0][col("exact")]) - 4.737152).abs() < 1e-6);
    assert_eq!(num(&rows[0][col("printed")]), 4.74915);
    assert_eq!(&rows[0][col("printed_consistent")], "false");

    let o = phibound(&["ratio"]);
    let (_, rows) = csv_records(&o.out);
    assert!((num(&rows[0][0]) - 1.826).abs() < 1e-3);
}

#[test]
fn table_csv_round_trips() {
    let o = phibound(&["table", "--paper-abscissae"]);
    assert_eq!(o.code, EXIT_OK);
    let mut columns = BoundKind::TABLE_COLUMNS.to_vec();
    columns.push(BoundKind::EidousStar);
    let table = make_table(&TABLE_ABSCISSAE, &columns, Execution::Sequential).unwrap();
    let (_, rows) = csv_records(&o.out);
    assert_eq!(rows.len(), table.rows().len());
    for (rec, row) in rows.iter().zip(table.rows()) {
        assert_eq!(num(&rec[0]).to_bits(), row.x.to_bits());
        assert_eq!(num(&rec[1]).to_bits(), row.bound_value.to_bits());
        assert_eq!(&rec[2], row.kind.name());
        assert_eq!(num(&rec[3]).to_bits(), row.reference_value.to_bits());
        assert_eq!(num(&rec[4]).to_bits(), row.error.to_bits());
        assert_eq!(rec[5].parse::<bool>().unwrap(), row.out_of_validity);
    }
    assert!(o.out.ends_with('\n') && !o.out.contains('\r'));
}

#[test]
fn jsonlines_match_the_csv_header() {
    let o = phibound(&[
        "table",
        "--format",
        "jsonlines",
        "--bound",
        "eidous",
        "--points",
        "5",
    ]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<_> = o.out.lines().collect();
    assert_eq!(lines.len(), 5);
    let c = phibound(&["table", "--bound", "eidous", "--points", "5"]);
    let (_, rows) = csv_records(&c.out);
    for (line, rec) in lines.iter().zip(&rows) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<_> = obj.keys().map(String::as_str).collect();
        let mut want = ROW_HEADER.to_vec();
        want.sort_unstable();
        let mut keys_sorted = keys.clone();
        keys_sorted.sort_unstable();
        assert_eq!(keys_sorted, want);
        assert_eq!(obj["x"].as_f64().unwrap(), num(&rec[0]));
        assert_eq!(
            obj["error"].as_f64().unwrap().to_bits(),
            num(&rec[4]).to_bits()
        );
        assert_eq!(obj["kind"], "eidous");
        assert_eq!(obj["out_of_validity"], false);
    }
}

#[test]
fn markdown_table_mirrors_the_published_layout() {
    let o = phibound(&["table", "--format", "markdown"]);
    assert_eq!(o.code, EXIT_OK);
    let first = o.out.lines().next().unwrap();
    assert_eq!(
        first,
        "| x | h_KO | h_AL | h_AB | h_NE | h_YA | h_BE | h_PO | h_EI | h_EI* |"
    );
    assert!(o.out.contains("| 2.9 |"));
    assert!(o.out.contains("5.78e-5"));
    assert!(o.out.contains("-2.14e-1*"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table"][..],
        &["maxerr", "--bound", "eidous_star", "--format", "jsonlines"],
        &["verify", "--bound", "yang", "--points", "20001"],
    ] {
        assert_eq!(phibound(args).out, phibound(args).out);
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "--bound", "gauss", "--x", "1"][..],
        &["eval", "--bound", "polya"],
        &["verify", "--bound", "polya"],
        &["table", "--paper-abscissae", "--points", "3"],
        &["table", "--format", "xml"],
        &["frobnicate"],
        &[],
    ] {
        let o = phibound(args);
        assert_eq!(o.code, EXIT_USAGE, "{args:?}");
        assert!(o.err.contains("Usage:"), "{args:?}: {}", o.err);
        assert!(o.out.is_empty());
    }
}

#[test]
fn domain_errors_exit_3() {
    for args in [
        &["eval", "--bound", "polya", "--x", "-1"][..],
        &["eval", "--x", "NaN"],
        &["verify", "--bound", "polya", "--points", "1"],
        &[
            "verify", "--bound", "polya", "--points", "10", "--from", "5", "--to", "2",
        ],
        &[
            "verify", "--bound", "polya", "--points", "10", "--slack", "-1",
        ],
        &["maxerr", "--bound", "eidous", "--tol", "0"],
        &["crossover", "--points", "1"],
    ] {
        let o = phibound(args);
        assert_eq!(o.code, EXIT_DOMAIN, "{args:?}");
        assert!(o.err.starts_with("error:"), "{args:?}: {}", o.err);
    }
}

#[test]
fn help_goes_to_stdout() {
    let o = phibound(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.contains("verify"));
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_phibound");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(
        status(&["eval", "--bound", "eidous", "--x", "2.5"]),
        Some(0)
    );
    assert_eq!(
        status(&["verify", "--bound", "eidous_star", "--points", "1001"]),
        Some(1)
    );
    assert_eq!(status(&["eval", "--bound", "nope", "--x", "1"]), Some(2));
    assert_eq!(status(&["eval", "--x", "-2"]), Some(3));
    let out = Command::new(bin)
        .args(["eval", "--bound", "polya", "--x", "0"])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "x,bound,kind,reference,error,out_of_validity\n\
         0.0000000000000000e0,5.0000000000000000e-1,polya,5.0000000000000000e-1,0.0000000000000000e0,false\n"
    );
}
