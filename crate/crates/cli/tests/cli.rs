use std::path::PathBuf;

use hamwire_cli::{run, EXIT_GUARD, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn scratch_file(name: &str, contents: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn hamwire(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("hamwire").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn missing_and_malformed_graphs_exit_2() {
    let (code, _, err) = hamwire(&["find", "/nonexistent/graph.txt"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("cannot read"));

    let bad = scratch_file("bad_edge.txt", "3 2\n1 2\n2 7\n");
    let (code, _, err) = hamwire(&["find", &bad]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 3"), "{err}");

    let (code, _, _) = hamwire(&["find"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn find_k4_text_output() {
    let (code, out, _) = hamwire(&["find", &data("k4.txt")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("1-2-3-4-1\n1-2-4-3-1\n1-3-2-4-1\n"));
    assert!(out.contains("registers tested: 6\n"));
    assert!(out.contains("flagged: 6\n"));
    assert!(out.contains("distinct cycles: 3\n"));
}

#[test]
fn find_reports_absence() {
    let path = scratch_file("star.txt", "4 3\n1 2\n1 3\n1 4\n");
    let (code, out, _) = hamwire(&["find", &path]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("no Hamiltonian circuit\n"));
    assert!(out.contains("flagged: 0\n"));
}

#[test]
fn find_output_independent_of_workers() {
    for args in [vec!["find", "K"], vec!["find", "K", "--full-codes"], vec!["find", "K", "--format", "csv"]] {
        let k4 = data("k4.txt");
        let args: Vec<&str> = args.iter().map(|a| if *a == "K" { k4.as_str() } else { a }).collect();
        let (_, base, _) = hamwire(&args);
        for w in ["2", "3", "4", "7"] {
            let mut with = args.clone();
            with.extend(["--workers", w]);
            assert_eq!(hamwire(&with).1, base, "{with:?}");
        }
    }
}

#[test]
fn full_codes_conflicting_mode_exits_2() {
    let (code, _, _) = hamwire(&["find", &data("k4.txt"), "--full-codes", "--mode", "cmos-reduced"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, out, _) = hamwire(&["find", &data("k4.txt"), "--full-codes", "--mode", "reversible-full"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("flagged: 24\n"));
}

#[test]
fn full_code_guard_exits_3() {
    // n = 8, k = 3: 24 code bits, over the limit
    let edges: String = (1..=8).map(|v| format!("{} {}\n", v, v % 8 + 1)).collect();
    let path = scratch_file("c8.txt", &format!("8 8\n{edges}"));
    let (code, _, err) = hamwire(&["find", &path, "--full-codes"]);
    assert_eq!(code, EXIT_GUARD);
    assert!(!err.is_empty());
}

#[test]
fn limit_truncates_listing_only() {
    let (code, out, _) = hamwire(&["find", &data("k4.txt"), "--limit", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| l.ends_with("-1")).count(), 2);
    assert!(out.contains("4 more not shown"));
    assert!(out.contains("flagged: 6\n"));
}

#[test]
fn compile_triangle_netlist_headers() {
    let (code, out, _) = hamwire(&["compile", &data("triangle.txt")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| l.starts_with("# segment ")).count(), 4);
    assert!(out.starts_with("# mode cmos-reduced\n"));
    assert!(out.lines().any(|l| l == "# lines 13"));
}

#[test]
fn compile_without_lowering_keeps_mcn() {
    let (code, out, _) = hamwire(&["compile", &data("k4.txt"), "--mode", "reversible-full", "--no-lower"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.starts_with("MCN ")));
    let (_, lowered, _) = hamwire(&["compile", &data("k4.txt"), "--mode", "reversible-full"]);
    assert!(!lowered.lines().any(|l| l.starts_with("MCN ")));
}

#[test]
fn resources_n_range_table() {
    let (code, out, _) = hamwire(&["resources", "--n-range", "2..10"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[8], "10,4,362880,59,14515200");

    let (code, _, _) = hamwire(&["resources", "--n-range", "10..2"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn resources_for_k4() {
    let (code, out, _) = hamwire(&["resources", &data("k4.txt")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("num_registers (n-1)!            = 6\n"));
    for mode in ["[reversible-full]", "[cmos-oneshot]", "[cmos-reduced]"] {
        assert!(out.contains(mode));
    }

    let (code, csv, _) = hamwire(&["resources", &data("k4.txt"), "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.contains("flag-line:+1"));
}

#[test]
fn verify_graph_and_netlist_replay() {
    let (code, out, _) = hamwire(&["verify", &data("b1a.txt")]);
    assert_eq!(code, EXIT_OK, "{out}");

    let (_, netlist, _) = hamwire(&["compile", &data("k4.txt"), "--mode", "reversible-full"]);
    let good = scratch_file("k4_full.net", &netlist);
    let (code, out, _) = hamwire(&["verify", &data("k4.txt"), "--netlist", &good]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("full codes: ok (24 flagged of 256)"));
}

#[test]
fn corrupted_netlist_replay_exits_1() {
    let (_, netlist, _) = hamwire(&["compile", &data("k4.txt")]);
    // drop every gate writing the flag line: nothing is flagged any more
    let flag = netlist
        .lines()
        .find_map(|l| l.strip_prefix("# segment flag "))
        .and_then(|rest| rest.split_whitespace().next())
        .unwrap()
        .to_string();
    let kept: Vec<&str> =
        netlist.lines().filter(|l| l.starts_with('#') || l.split_whitespace().last() != Some(flag.as_str())).collect();
    assert!(kept.len() < netlist.lines().count());
    let corrupted = scratch_file("k4_corrupt.net", &(kept.join("\n") + "\n"));
    let (code, out, _) = hamwire(&["verify", &data("k4.txt"), "--netlist", &corrupted]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("MISMATCH at first rank 0"), "{out}");
    assert!(out.contains("verification FAILED"));
}

#[test]
fn garbled_netlist_exits_2() {
    let path = scratch_file("garbled.net", "# mode cmos-reduced\nFROB 1 2\n");
    let (code, _, _) = hamwire(&["verify", &data("k4.txt"), "--netlist", &path]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn verify_random_graphs() {
    let (code, out, _) = hamwire(&["verify", "--random", "20", "--n", "5", "--edge-prob", "0.5", "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("verified 20 graph(s): all flags match the oracle\n"));

    let (code, _, _) = hamwire(&["verify", "--random", "2", "--n", "4", "--edge-prob", "1.5"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = hamwire(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("find"));
}
