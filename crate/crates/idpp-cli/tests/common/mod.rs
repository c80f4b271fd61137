//! Helpers for driving the compiled binary.

#![allow(dead_code)]

use std::path::Path;
use std::process::Command;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the `idpp` binary with the given arguments.
pub fn idpp(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_idpp"))
        .args(args)
        .output()
        .expect("failed to spawn the idpp binary");
    Output {
        code: out.status.code().expect("process was not signal-killed"),
        stdout: String::from_utf8(out.stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is utf-8"),
    }
}

pub fn write_file(path: &Path, contents: &str) {
    std::fs::write(path, contents).expect("failed to write a test input");
}

pub fn read_file(path: &Path) -> String {
    std::fs::read_to_string(path).expect("failed to read a test output")
}

pub const K3_GRAPH: &str = "g 3 3\ne 0 1\ne 0 2\ne 1 2\n";
pub const C5_GRAPH: &str = "g 5 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n";
pub const EDGELESS3_GRAPH: &str = "g 3 0\n";

/// Splits a CSV body into header and data rows.
pub fn csv_rows(text: &str) -> (String, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().expect("CSV has a header").to_string();
    let rows = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    (header, rows)
}
