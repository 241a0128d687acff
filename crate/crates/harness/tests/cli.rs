use std::process::Command;

fn updom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_updom")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn invariants_of_k5() {
    let (code, out, _) = updom(&["invariants", "--family", "k:5"]);
    assert_eq!(code, 0);
    assert!(out.contains("γ=1 Γ=1 α=1"), "{out}");
}

#[test]
fn bound_k3_star2() {
    let (code, out, _) = updom(&["bound", "--g", "k:3", "--h", "star:2"]);
    assert_eq!(code, 0);
    assert!(out.contains("Γ(G□H)=3 rhs_min=3"), "{out}");
}

#[test]
fn complete_bipartite_family_passes() {
    let (code, out, _) = updom(&["families", "complete-bipartite", "--l", "2..3", "--m", "2..3", "--n", "2..3"]);
    assert_eq!(code, 0);
    assert!(out.contains("8 reports"), "{out}");
}

#[test]
fn failing_expectation_exits_one() {
    let (code, out, _) = updom(&["invariants", "--family", "cycle:5", "--expect-upper-gamma", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"), "{out}");
    assert_eq!(updom(&["invariants", "--family", "cycle:5", "--expect-upper-gamma", "2"]).0, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(updom(&["bound", "--g", "nope:3", "--h", "k:2"]).0, 2);
    assert_eq!(updom(&["frobnicate"]).0, 2);
    assert_eq!(updom(&["bound", "--g", "k:2"]).0, 2);
    assert_eq!(updom(&["families", "complete-complete", "--m", "5..2"]).0, 2);
    let (code, _, err) = updom(&["bound", "--g", "k:2", "--h", "k:2", "--solver", "magic"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown solver"), "{err}");
    let (code, _, err) = updom(&["witness", "--g", "k:2", "--h", "k:2", "--construction", "magic"]);
    assert_eq!(code, 2);
    assert!(err.contains("row-cover"), "{err}");
    assert_eq!(updom(&["bound", "--g", "k:20", "--h", "k:20"]).0, 2);
    assert_eq!(updom(&["--help"]).0, 0);
}

#[test]
fn exhausted_budget_exits_three() {
    let (code, out, _) = updom(&["product", "--g", "k:6", "--h", "k:6", "--node-limit", "10"]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("inconclusive"));
}

#[test]
fn json_report_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let args = |file: &str, workers: &str| {
        vec!["random-sweep", "--count", "12", "--n", "3..5", "--seed", "7", "--workers", workers, "--json", file]
            .into_iter()
            .map(String::from)
            .collect::<Vec<_>>()
    };
    let (a, b) = (path("a.json"), path("b.json"));
    for (file, workers) in [(&a, "1"), (&b, "4")] {
        let argv = args(file, workers);
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        assert_eq!(updom(&argv).0, 0);
    }
    let read = |p: &str| serde_json::from_str::<serde_json::Value>(&std::fs::read_to_string(p).unwrap()).unwrap();
    let (ja, jb) = (read(&a), read(&b));
    assert_eq!(ja["schema"], 1);
    assert_eq!(ja["reports"].as_array().unwrap().len(), 12);
    assert_eq!(ja["digest"], jb["digest"]);
    assert_eq!(ja["reports"][0]["kind"], "bound");
}

#[test]
fn witness_and_file_inputs() {
    let (code, out, _) = updom(&["witness", "--g", "star:3", "--h", "k:2", "--construction", "star-product"]);
    assert_eq!(code, 0);
    assert!(out.contains("witness=[2, 4, 7]"), "{out}");
    let (code, out, _) = updom(&["witness", "--g", "path:4", "--h", "k:2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("not applicable"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("pool.g6");
    std::fs::write(&g6, ">>graph6<<C~\nBw\n").unwrap();
    let (code, out, _) = updom(&["invariants", "--file", g6.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("2 reports"), "{out}");
    let (code, out, _) = updom(&["sweep", "--file", g6.to_str().unwrap(), "--max-n-g", "4", "--max-n-h", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("4 reports"), "{out}");

    let edges = dir.path().join("g.txt");
    std::fs::write(&edges, "4\n0 1\n1 2\n2 3\n").unwrap();
    let (code, out, _) = updom(&["invariants", "--file", edges.to_str().unwrap(), "--format", "edges"]);
    assert_eq!(code, 0);
    assert!(out.contains("Γ=2"), "{out}");
    assert_eq!(updom(&["invariants", "--file", "/nonexistent/x.g6"]).0, 2);
}

#[test]
fn quiet_prints_summary_only() {
    let (code, out, _) = updom(&["sweep", "--max-n-g", "2", "--max-n-h", "2", "-q"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("9 reports"), "{out}");
}
