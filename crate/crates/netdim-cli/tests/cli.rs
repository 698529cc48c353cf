//! Black-box tests of the `netdim` binary: exit codes, output layout, and
//! reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn netdim(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netdim"))
        .args(args)
        .current_dir(cwd)
        .output()
        .expect("binary runs")
}

fn write_p3(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("p3.txt");
    fs::write(&path, "a b\nb c\n").unwrap();
    path
}

fn write_ring(dir: &Path, n: u32) -> std::path::PathBuf {
    let path = dir.join("ring.txt");
    let mut text = String::new();
    for i in 0..n {
        text.push_str(&format!("{} {}\n", i, (i + 1) % n));
    }
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn scores_on_p3_ranks_center_first() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_p3(tmp.path());
    let out = netdim(
        &[
            "scores",
            "--graph",
            graph.to_str().unwrap(),
            "--methods",
            "degree",
            "--out",
            "out",
        ],
        tmp.path(),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = fs::read_to_string(tmp.path().join("out/scores_degree.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "node,label,score,rank");
    // center "b" got internal id 1 and degree 2
    assert_eq!(lines[1], "1,b,2,1");
    assert!(tmp.path().join("out/manifest.json").exists());
}

#[test]
fn unknown_method_gg_is_config_error_exit_1() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_p3(tmp.path());
    let out = netdim(
        &[
            "scores",
            "--graph",
            graph.to_str().unwrap(),
            "--methods",
            "GG",
        ],
        tmp.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("out of scope"), "stderr: {stderr}");
}

#[test]
fn missing_dataset_is_io_error_exit_2() {
    let tmp = tempfile::tempdir().unwrap();
    let out = netdim(&["scores", "--graph", "no-such-file.txt"], tmp.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("docs/datasets.md"), "stderr: {stderr}");
}

#[test]
fn invalid_probability_is_exit_1() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_ring(tmp.path(), 6);
    let out = netdim(
        &[
            "topk",
            "--graph",
            graph.to_str().unwrap(),
            "--k",
            "2",
            "--beta",
            "1.5",
        ],
        tmp.path(),
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_required_flag_is_exit_1_and_help_is_exit_0() {
    let tmp = tempfile::tempdir().unwrap();
    let out = netdim(&["scores"], tmp.path());
    assert_eq!(out.status.code(), Some(1));
    let out = netdim(&["--help"], tmp.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("beta-sweep"));
}

#[test]
fn topk_with_zero_beta_stays_flat_at_k() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_ring(tmp.path(), 12);
    let out = netdim(
        &[
            "topk",
            "--graph",
            graph.to_str().unwrap(),
            "--methods",
            "degree",
            "--k",
            "4",
            "--beta",
            "0",
            "--steps",
            "6",
            "--runs",
            "10",
            "--out",
            "out",
        ],
        tmp.path(),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = fs::read_to_string(tmp.path().join("out/topk_curve_degree.csv")).unwrap();
    for line in csv.lines().skip(1) {
        assert!(line.ends_with(",4"), "expected flat curve at 4, got {line}");
    }
}

#[test]
fn beta_sweep_reruns_reproduce_files_byte_for_byte() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_ring(tmp.path(), 10);
    let args = [
        "beta-sweep",
        "--graph",
        "ring.txt",
        "--methods",
        "degree,pr",
        "--beta",
        "0.1,0.3",
        "--steps",
        "5",
        "--runs",
        "20",
        "--seed",
        "77",
        "--out",
        "out",
    ];
    let _ = graph;
    let first = netdim(&args, tmp.path());
    assert!(first.status.success());
    let table_first = fs::read(tmp.path().join("out/beta_sweep.csv")).unwrap();
    let second = netdim(&args, tmp.path());
    assert!(second.status.success());
    let table_second = fs::read(tmp.path().join("out/beta_sweep.csv")).unwrap();
    assert_eq!(table_first, table_second);

    // a different master seed still runs fine (cells may move)
    let mut other_args = args;
    other_args[12] = "78";
    let third = netdim(&other_args, tmp.path());
    assert!(third.status.success());
}

#[test]
fn json_format_emits_json_files() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_ring(tmp.path(), 8);
    let out = netdim(
        &[
            "scores",
            "--graph",
            graph.to_str().unwrap(),
            "--methods",
            "lvid",
            "--format",
            "json",
            "--out",
            "out",
        ],
        tmp.path(),
    );
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("out/scores_lvid.json")).unwrap())
            .unwrap();
    assert_eq!(doc["method"], "lvid");
    assert_eq!(doc["scores"].as_array().unwrap().len(), 8);
}

#[test]
fn negate_slope_flag_flips_reported_scores() {
    let tmp = tempfile::tempdir().unwrap();
    let graph = write_p3(tmp.path());
    for (flag, dir) in [("true", "out_neg"), ("false", "out_plain")] {
        let out = netdim(
            &[
                "scores",
                "--graph",
                graph.to_str().unwrap(),
                "--methods",
                "lvd",
                "--negate-slope",
                flag,
                "--out",
                dir,
            ],
            tmp.path(),
        );
        assert!(out.status.success());
    }
    let read_score = |dir: &str| -> f64 {
        let csv = fs::read_to_string(tmp.path().join(dir).join("scores_lvd.csv")).unwrap();
        // row for node 0 ("a", a path endpoint)
        csv.lines()
            .skip(1)
            .find(|l| l.starts_with("0,"))
            .unwrap()
            .split(',')
            .nth(2)
            .unwrap()
            .parse()
            .unwrap()
    };
    let negated = read_score("out_neg");
    let plain = read_score("out_plain");
    assert_eq!(negated, -plain);
}

#[test]
fn keep_whole_graph_flag_skips_component_extraction() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("two_parts.txt");
    fs::write(&path, "a b\nb c\nx y\n").unwrap();
    for (extra, expected_nodes) in [(None, 3u64), (Some("--keep-whole-graph"), 5u64)] {
        let mut args = vec![
            "scores",
            "--graph",
            path.to_str().unwrap(),
            "--methods",
            "degree",
            "--out",
            "out",
        ];
        if let Some(flag) = extra {
            args.push(flag);
        }
        let out = netdim(&args, tmp.path());
        assert!(out.status.success());
        let manifest: serde_json::Value = serde_json::from_str(
            &fs::read_to_string(tmp.path().join("out/manifest.json")).unwrap(),
        )
        .unwrap();
        assert_eq!(
            manifest["graph"]["analyzed_nodes"].as_u64().unwrap(),
            expected_nodes
        );
    }
}
