mod common;

use std::fs;

use common::{code, csv_records, pksums, stderr, stdout, zeros_file};

#[test]
fn sums_ok_and_delta() {
    let dir = tempfile::tempdir().unwrap();
    let out = pksums(dir.path(), &["--no-ledger", "--format", "csv", "sums", "--k", "1", "--x", "10"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rows = csv_records(&stdout(&out));
    assert_eq!(rows[0]["delta"], "-8");
    assert_eq!(rows[0]["pi_power"], "25");

    let out = pksums(dir.path(), &["--no-ledger", "--format", "csv", "sums", "--k", "0", "--x", "10"]);
    assert_eq!(csv_records(&stdout(&out))[0]["delta"], "0");
}

#[test]
fn domain_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let z = zeros_file();
    let z = z.to_str().unwrap();
    for args in [
        vec!["sums", "--k", "-2", "--x", "10"],
        vec!["explicit", "--k", "1", "--x", "1e4", "--zeros", z, "--count", "100", "--include-linear"],
        vec!["littlewood", "--k", "0", "--x", "1e4", "--delta", "0.6", "--zeros", z, "--count", "100"],
        vec!["smoothed-ratio", "--k", "0", "--x", "1e3"],
        vec!["crossover", "--k", "-0.5"],
        vec!["scan", "--k", "0", "--grid", "2:10:5"],
    ] {
        let mut full = vec!["--no-ledger"];
        full.extend(&args);
        let out = pksums(dir.path(), &full);
        assert_eq!(code(&out), 3, "{args:?}: {}", stderr(&out));
    }
    let out = pksums(
        dir.path(),
        &["--no-ledger", "explicit", "--k", "1", "--x", "1e4", "--zeros", z, "--count", "100", "--include-linear"],
    );
    assert!(stderr(&out).contains("singularity"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let z = zeros_file();
    let z = z.to_str().unwrap();
    for args in [
        vec!["explicit", "--k", "0.5", "--x", "1e4", "--zeros", z, "--count", "0"],
        vec!["sums", "--k", "1"],
        vec!["sums", "--k", "one", "--x", "10"],
        vec!["frobnicate"],
        vec!["scan", "--k", "0", "--grid", "10:1e6"],
        vec!["--threads", "0", "sums", "--k", "0", "--x", "10"],
        vec!["--format", "xml", "sums", "--k", "0", "--x", "10"],
        vec!["--config", "/nonexistent/pksums.conf", "sums", "--k", "0", "--x", "10"],
    ] {
        let mut full = vec!["--no-ledger"];
        full.extend(&args);
        let out = pksums(dir.path(), &full);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn resource_errors_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let out = pksums(dir.path(), &["--no-ledger", "sums", "--k", "0", "--x", "1e13"]);
    assert_eq!(code(&out), 4, "{}", stderr(&out));
    let out = pksums(dir.path(), &["--no-ledger", "sums", "--k", "1", "--x", "1e7"]);
    assert_eq!(code(&out), 4, "{}", stderr(&out));
}

#[test]
fn data_errors_exit_5() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "14.134725141734693\nnot-a-number\n").unwrap();
    let unsorted = dir.path().join("unsorted.txt");
    fs::write(&unsorted, "21.022039638771555\n14.134725141734693\n").unwrap();
    let short = dir.path().join("short.txt");
    fs::write(&short, "# two zeros\n14.134725141734693\n21.022039638771555\n").unwrap();
    let missing = dir.path().join("missing.txt");
    for (file, count) in [(&bad, "1"), (&unsorted, "1"), (&short, "3"), (&missing, "1")] {
        let out = pksums(
            dir.path(),
            &["--no-ledger", "zeros-stats", "--zeros", file.to_str().unwrap(), "--count", count],
        );
        assert_eq!(code(&out), 5, "{}: {}", file.display(), stderr(&out));
    }
}

#[test]
fn empty_zeros_file_warns() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "# nothing here\n").unwrap();
    let out = pksums(dir.path(), &["--no-ledger", "zeros-stats", "--zeros", empty.to_str().unwrap(), "--count", "1"]);
    assert_eq!(code(&out), 5);
    assert!(stderr(&out).to_lowercase().contains("warn"), "{}", stderr(&out));
}

#[test]
fn help_and_version_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&pksums(dir.path(), &["--help"])), 0);
    assert_eq!(code(&pksums(dir.path(), &["--version"])), 0);
    assert_eq!(code(&pksums(dir.path(), &["theorem3", "--help"])), 0);
}
