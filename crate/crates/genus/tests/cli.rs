use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_genus"))
}

#[test]
fn gen_rejects_odd_degree_sum() {
    let out = bin().args(["gen", "--d", "3", "--n", "5", "--seed", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn genus_k5_exact() {
    let dir = std::env::temp_dir().join("genus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k5.txt");
    let g = genus::graph::complete_graph(5);
    std::fs::write(&path, g.to_text()).unwrap();
    let out = bin()
        .args(["genus", "--graph", path.to_str().unwrap(), "--mode", "exact", "--quiet"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("genus_upper = 1"), "stdout: {stdout}");
}

#[test]
fn trace_reports_toroidal_theta() {
    let dir = std::env::temp_dir().join("genus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("theta.txt");
    std::fs::write(&graph_path, "2 3\n0 1\n0 1\n0 1\n").unwrap();
    let rot_path = dir.join("theta-rot.txt");
    std::fs::write(&rot_path, "0: 0 2 4\n1: 1 3 5\n").unwrap();
    let out = bin()
        .args([
            "trace",
            "--graph",
            graph_path.to_str().unwrap(),
            "--rotation",
            rot_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("F = 1"), "stdout: {stdout}");
    assert!(stdout.contains("genus = 1"), "stdout: {stdout}");
}

#[test]
fn cycles_counts_k4_triangles() {
    let dir = std::env::temp_dir().join("genus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.txt");
    std::fs::write(&path, genus::graph::complete_graph(4).to_text()).unwrap();
    let out = bin()
        .args(["cycles", "--graph", path.to_str().unwrap(), "--m", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("cycles of length 3: 4"), "stdout: {stdout}");
}
