//! Acceptance suite for the command-line surface: byte-level determinism of
//! every command, and the measured greedy ratio staying within sqrt(m) on
//! the bench families.

mod common;

use common::{csv_rows, idpp, read_file, write_file, C5_GRAPH, K3_GRAPH};

#[test]
fn c10_reduce_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c5.g");
    write_file(&input, C5_GRAPH);

    let mut snapshots = Vec::new();
    for rerun in 0..2 {
        let out = dir.path().join(format!("c5-{rerun}.inst"));
        let run = idpp(&[
            "reduce",
            "is2idpp",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(run.code, 0);
        snapshots.push((
            run.stdout,
            read_file(&out),
            read_file(&dir.path().join(format!("c5-{rerun}.inst.map"))),
        ));
    }
    assert_eq!(snapshots[0], snapshots[1]);
    println!("[PASS] 10a reduce: identical stdout, instance, and map bytes across reruns");
}

#[test]
fn c10_solve_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.g");
    let inst = dir.path().join("c5.inst");
    write_file(&graph, C5_GRAPH);
    let run = idpp(&[
        "reduce",
        "is2idpp",
        graph.to_str().unwrap(),
        "--out",
        inst.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0);

    let cases: [(&str, &[&str]); 3] = [
        ("exact", &[]),
        ("greedy", &[]),
        ("boosted", &["--epsilon", "0.5", "--budget-nodes", "26"]),
    ];
    for (algo, extra) in cases {
        let mut snapshots = Vec::new();
        for rerun in 0..2 {
            let sol = dir.path().join(format!("{algo}-{rerun}.sol"));
            let mut args = vec!["solve", algo, inst.to_str().unwrap()];
            args.extend_from_slice(extra);
            let sol_str = sol.to_str().unwrap().to_string();
            args.push("--out");
            args.push(&sol_str);
            let run = idpp(&args);
            assert_eq!(run.code, 0, "{algo} failed: {}", run.stderr);
            snapshots.push((run.stdout, read_file(&sol)));
        }
        assert_eq!(snapshots[0], snapshots[1], "{algo} output differed");
    }
    println!("[PASS] 10b solve: identical report and solution bytes across reruns for every algorithm");
}

#[test]
fn c10_verify_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k3.g");
    let inst = dir.path().join("k3.inst");
    write_file(&graph, K3_GRAPH);
    assert_eq!(
        idpp(&[
            "reduce",
            "is2idpp",
            graph.to_str().unwrap(),
            "--out",
            inst.to_str().unwrap(),
        ])
        .code,
        0
    );
    let sol = dir.path().join("bad.sol");
    write_file(&sol, "r 0 3 0 4\nr 1 5 1 6\n");

    let first = idpp(&["verify", inst.to_str().unwrap(), sol.to_str().unwrap()]);
    let second = idpp(&["verify", inst.to_str().unwrap(), sol.to_str().unwrap()]);
    assert_eq!(first.code, 1);
    assert_eq!(second.code, 1);
    assert_eq!(first.stdout, second.stdout);
    println!("[PASS] 10c verify: identical verdict bytes across reruns");
}

#[test]
fn c10_bench_is_byte_deterministic_and_job_independent() {
    let args_common = [
        "bench", "gnp", "--seed", "42", "--trials", "30", "--nodes", "7", "--prob", "0.4",
        "--budget-nodes", "30",
    ];
    let first = idpp(&args_common);
    let second = idpp(&args_common);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, second.stdout);

    let mut with_jobs = args_common.to_vec();
    with_jobs.extend_from_slice(&["--jobs", "4"]);
    let parallel = idpp(&with_jobs);
    assert_eq!(parallel.code, 0);
    assert_eq!(
        first.stdout, parallel.stdout,
        "job count changed the bench table"
    );
    println!("[PASS] 10d bench: identical CSV bytes across reruns and across --jobs 1/4");
}

/// One bench run: every row must have the exact column filled, an exact/greedy
/// ratio of at least 1, and the ratio within sqrt(m).
fn assert_ratio_bound(args: &[&str]) -> usize {
    let run = idpp(args);
    assert_eq!(run.code, 0, "bench failed: {}", run.stderr);
    let (_, rows) = csv_rows(&run.stdout);
    for row in &rows {
        let trial = &row[0];
        assert!(
            !row[4].is_empty(),
            "trial {trial}: exact column missing (budget too small for the family)"
        );
        let exact: f64 = row[4].parse().unwrap();
        let greedy: f64 = row[5].parse().unwrap();
        let ratio: f64 = row[6].parse().unwrap();
        let sqrt_m: f64 = row[7].parse().unwrap();
        assert!(ratio >= 1.0, "trial {trial}: exact fell below greedy");
        assert!((ratio - exact / greedy).abs() < 1e-6);
        assert!(
            ratio <= sqrt_m && row[8] == "1",
            "trial {trial}: measured ratio {ratio} exceeds sqrt(m) = {sqrt_m}"
        );
    }
    rows.len()
}

#[test]
fn c09_bench_ratio_never_exceeds_sqrt_m() {
    let mut rows = 0;
    rows += assert_ratio_bound(&[
        "bench", "gnp", "--seed", "7", "--trials", "100", "--nodes", "6", "--prob", "0.3",
        "--budget-nodes", "30",
    ]);
    rows += assert_ratio_bound(&[
        "bench", "gnp", "--seed", "19", "--trials", "60", "--nodes", "8", "--prob", "0.5",
        "--budget-nodes", "30",
    ]);
    rows += assert_ratio_bound(&[
        "bench", "gnp", "--seed", "23", "--trials", "40", "--nodes", "10", "--prob", "0.2",
        "--budget-nodes", "30", "--jobs", "2",
    ]);
    rows += assert_ratio_bound(&[
        "bench", "gnp", "--seed", "31", "--trials", "60", "--nodes", "7", "--prob", "0.8",
        "--budget-nodes", "30",
    ]);
    rows += assert_ratio_bound(&[
        "bench", "sparse", "--seed", "5", "--trials", "7", "--nodes", "4", "--alpha", "1.2",
        "--budget-nodes", "30",
    ]);
    rows += assert_ratio_bound(&[
        "bench", "sparse", "--seed", "13", "--trials", "6", "--nodes", "5", "--alpha", "1.5",
        "--budget-nodes", "30",
    ]);
    println!("[PASS] 09 bench ratio bound: exact/greedy <= sqrt(m) on all {rows} rows across gnp and sparse families");
}
