use std::process::{Command, Output};

use chain_semiring::strings::StringTypeM;
use chain_semiring::Chain;
use chain_semiring_cli::{
    carrier_from_table_json, closure_report, cmd_table, derivations_report, OutputFormat,
    TableJson, TableOp,
};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chain-semiring"))
        .args(args)
        .env_remove("CHAIN_SEMIRING_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mul_table_follows_bands() {
    let o = bin(&["table", "--n", "4", "--string", "2,3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(2)
        .map(|l| l.split('|').nth(1).unwrap().split_whitespace().collect())
        .collect();
    assert_eq!(rows.len(), 5);
    for (k, row) in rows.iter().enumerate() {
        for (s, cell) in row.iter().enumerate() {
            let want = match s {
                0 => 0,
                1 => k,
                _ => 4,
            };
            assert_eq!(*cell, format!("a_{want}"), "row {k} col {s}");
        }
    }
}

#[test]
fn add_table_csv_is_symmetric_join() {
    let o = bin(&[
        "table", "--n", "2", "--string", "0,1", "--op", "add", "--format", "csv",
    ]);
    assert_eq!(
        stdout(&o),
        "+,a_0,a_1,a_2\na_0,a_0,a_1,a_2\na_1,a_1,a_1,a_2\na_2,a_2,a_2,a_2\n"
    );
}

#[test]
fn full_table_json_entry_and_round_trip() {
    let text = cmd_table(4, "0,1,2,3", TableOp::Mul, OutputFormat::Json).unwrap();
    let t: TableJson = serde_json::from_str(&text).unwrap();
    assert_eq!(t.schema, 1);
    assert_eq!(t.elements.len(), 13);
    let pos = |l: &str| t.elements.iter().position(|e| e.label == l).unwrap();
    let entry = &t.table[pos("a_2_1")][pos("a_2_3")];
    assert_eq!(t.elements[pos(entry)].images, vec![2, 2, 2, 2]);
    let carrier = carrier_from_table_json(&text).unwrap();
    let full = StringTypeM::full(Chain::new(4).unwrap()).unwrap();
    assert_eq!(&carrier, full.carrier());
}

#[test]
fn formats_agree_cell_for_cell() {
    for (n, spec) in [(4, "1,3"), (3, "0,1,2"), (4, "S"), (5, "DS:1,3")] {
        for op in [TableOp::Add, TableOp::Mul] {
            let json: TableJson =
                serde_json::from_str(&cmd_table(n, spec, op, OutputFormat::Json).unwrap()).unwrap();
            let csv_text = cmd_table(n, spec, op, OutputFormat::Csv).unwrap();
            let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
            let header: Vec<String> = rdr
                .headers()
                .unwrap()
                .iter()
                .skip(1)
                .map(String::from)
                .collect();
            let labels: Vec<String> = json.elements.iter().map(|e| e.label.clone()).collect();
            assert_eq!(header, labels);
            let csv_cells: Vec<Vec<String>> = rdr
                .records()
                .map(|r| r.unwrap().iter().skip(1).map(String::from).collect())
                .collect();
            assert_eq!(csv_cells, json.table);
            let ascii = cmd_table(n, spec, op, OutputFormat::Ascii).unwrap();
            let ascii_cells: Vec<Vec<String>> = ascii
                .lines()
                .skip(2)
                .map(|l| {
                    l.split('|')
                        .nth(1)
                        .unwrap()
                        .split_whitespace()
                        .map(String::from)
                        .collect()
                })
                .collect();
            assert_eq!(ascii_cells, json.table);
        }
    }
}

#[test]
fn derivations_identity_and_absorbing() {
    let d = derivations_report(4, "2,3").unwrap();
    assert_eq!(d.identity.as_deref(), Some("delta_a_1"));
    assert_eq!(d.absorbing.as_deref(), Some("delta_a_2"));
    assert_eq!(d.maps.len(), 3);
    assert_eq!(
        derivations_report(5, "0,3").unwrap().identity.as_deref(),
        Some("delta_a_2")
    );
    for n in 3..=8 {
        let spec = format!("{},{}", n - 2, n - 1);
        let d = derivations_report(n, &spec).unwrap();
        let want = [
            ["delta_a_0", "delta_a_0", "delta_a_2"],
            ["delta_a_0", "delta_a_1", "delta_a_2"],
            ["delta_a_2"; 3],
        ];
        assert_eq!(
            d.composition,
            want.map(|r| r.map(String::from).to_vec()).to_vec()
        );
    }
    let o = bin(&["derivations", "--n", "3", "--string", "0,1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn closures() {
    assert_eq!(
        closure_report(5, "1,3", "I:0", "D").unwrap().closure,
        vec![0, 1, 2]
    );
    assert_eq!(
        closure_report(5, "1,3", "{0,n}", "delta:2")
            .unwrap()
            .closure,
        vec![0, 4, 5]
    );
    assert_eq!(
        closure_report(5, "0,3", "{0,n}", "delta:2")
            .unwrap()
            .closure,
        vec![0, 5]
    );
    for s in 2..=5 {
        let c = closure_report(5, "full", "CO", &format!("delta:{s},n-1")).unwrap();
        assert_eq!(c.closure, (0..=20).collect::<Vec<_>>());
    }
    let c = closure_report(4, "1,3", "I:0", "D").unwrap();
    let t = c.traces.iter().find(|t| t.start == "a_1").unwrap();
    assert_eq!(t.orbit, vec!["a_1", "a_0"]);
    assert_eq!(t.entered_at, Some(1));
    let o = bin(&[
        "closure",
        "--n",
        "5",
        "--string",
        "1,3",
        "--ideal",
        "{0,9}",
        "--derivation",
        "D",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin(&[
        "closure",
        "--n",
        "5",
        "--string",
        "1,3",
        "--ideal",
        "CO",
        "--derivation",
        "gamma",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = bin(&["verify", "--claims", "7.4", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x*y=<2,2,2,2>"));
    assert!(text.contains("delta(x)*y=<3,3,3,3>"));
    assert_eq!(bin(&["verify", "--claims", "9.9"]).status.code(), Some(2));
    assert_eq!(
        bin(&["verify", "--claims", "5.6", "--n", "4"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        bin(&["verify", "--claims", "5.6", "--n", "4", "--string", "0,2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(bin(&["verify", "--n", "4..3"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "--n", "x"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "--n", "2..13"]).status.code(), Some(2));
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_chain-semiring"))
        .args(["table", "--n", "6", "--string", "1,2"])
        .env("CHAIN_SEMIRING_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_schema_and_determinism() {
    let args = [
        "verify",
        "--claims",
        "3.1,5.5,7.1",
        "--n",
        "2..5",
        "--format",
        "json",
    ];
    let strip = |o: &Output| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(o)).unwrap();
        for r in v["results"].as_array_mut().unwrap() {
            assert!(r["elapsed_ms"].is_number());
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let (a, b) = (bin(&args), bin(&args));
    let va = strip(&a);
    assert_eq!(va, strip(&b));
    assert_eq!(va["schema"], 1);
    assert_eq!(va["results"].as_array().unwrap().len(), 12);
    assert_eq!(va["results"][0]["claim"], "3.1");
    let ascii = ["verify", "--claims", "all", "--n", "2..4"];
    assert_eq!(stdout(&bin(&ascii)), stdout(&bin(&ascii)));
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("chain-semiring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.dot");
    let o = bin(&[
        "table",
        "--n",
        "3",
        "--string",
        "0,2",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

/// Replays the transcripts in the command-line chapter of the book. A `...`
/// line stands for any number of skipped lines.
#[test]
fn book_transcripts_match() {
    let book = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../book/src/cli.md"
    ))
    .unwrap();
    let mut replayed = 0;
    for block in book.split("```text\n").skip(1) {
        let block = block.split("```").next().unwrap();
        let mut lines = block.lines();
        let first = lines.next().unwrap();
        let expected: Vec<&str> = lines.collect();
        let Some(cmd) = first.strip_prefix("$ chain-semiring ") else {
            continue;
        };
        if expected.is_empty() || expected.iter().any(|l| l.starts_with("$ ")) {
            continue;
        }
        let args: Vec<&str> = cmd.split_whitespace().collect();
        let out = stdout(&bin(&args));
        let mut got = out.lines();
        for want in expected {
            if want == "..." {
                continue;
            }
            assert!(
                got.any(|l| l == want),
                "`{cmd}`: missing line {want:?} in\n{out}"
            );
        }
        replayed += 1;
    }
    assert_eq!(replayed, 3);
}
