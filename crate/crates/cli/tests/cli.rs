use std::path::PathBuf;

use proptest::prelude::*;
use subiso::format::{parse_tuple, write_tuple};
use subiso::{EXIT_ERROR, EXIT_NO, EXIT_YES};
use subiso_core::harness::generators::random_tuple;
use subiso_core::Field;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut full = vec!["subiso"];
    full.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = subiso::run(full, &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("subiso-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn golden(name: &str) -> String {
    format!("tests/golden/{name}")
}

#[test]
fn exit_codes() {
    let a = golden("random_d6_r2_n3_seed42.tuple");
    let b = golden("rotated_d6_r2_n3.tuple");
    assert_eq!(run(&["compare", &a, &b]).0, EXIT_YES);
    let plus = golden("adversarial_d4_plus.tuple");
    let minus = golden("adversarial_d4_minus.tuple");
    assert_eq!(run(&["compare", &plus, &minus]).0, EXIT_NO);
    for method in ["lines", "projection", "quiver"] {
        assert_eq!(run(&["compare", &plus, &minus, "--method", method]).0, EXIT_NO, "{method}");
    }
    let (status, _, err) = run(&["compare", &a, "does/not/exist.tuple"]);
    assert_eq!(status, EXIT_ERROR);
    assert!(err.contains("does/not/exist.tuple"));
    let bad = scratch("bad.tuple", "tuple v1 field=real d=2 n=1 ranks=1\n1 2\n0\n");
    let (status, _, err) = run(&["compare", bad.to_str().unwrap(), &a]);
    assert_eq!(status, EXIT_ERROR);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run(&["compare", &a]).0, EXIT_ERROR);
    assert_eq!(run(&["frobnicate"]).0, EXIT_ERROR);
    let (status, out, _) = run(&["--help"]);
    assert_eq!(status, EXIT_YES);
    assert!(out.contains("compare"));
    // Different lengths are an error, not a "no".
    let lines = golden("lines_d3_n5.tuple");
    assert_eq!(run(&["compare", &a, &lines]).0, EXIT_ERROR);
}

#[test]
fn planes_method_on_orthogonal_planes_suggests_quiver() {
    let t = "tuple v1 field=real d=4 n=2 ranks=2,2\n\
             1 0\n0 1\n0 0\n0 0\n\
             1 0\n0 0\n0 1\n0 0\n";
    let p = scratch("orth.tuple", t);
    let p = p.to_str().unwrap();
    let (status, _, err) = run(&["compare", p, p, "--method", "planes"]);
    assert_eq!(status, EXIT_ERROR);
    assert!(err.contains("--method quiver"), "{err}");
    let (status, out, _) = run(&["compare", p, p]);
    assert_eq!(status, EXIT_YES);
    assert!(out.contains("method quiver"));
}

#[test]
fn tolerance_profile_and_overrides() {
    let a = golden("random_d6_r2_n3_seed42.tuple");
    let b = golden("rotated_d6_r2_n3.tuple");
    let profile = scratch("profile.toml", "trace_cmp = 1e-6\nlex_quantum = 1e-9\n");
    let profile = profile.to_str().unwrap();
    assert_eq!(run(&["compare", &a, &b, "--tolerance-profile", profile]).0, EXIT_YES);
    assert_eq!(run(&["compare", &a, &b, "--tol", "rank_rel=1e-10"]).0, EXIT_YES);
    let (status, _, err) = run(&["compare", &a, &b, "--tol", "rank_rel=-1"]);
    assert_eq!(status, EXIT_ERROR);
    assert!(err.contains("tolerance"));
    let broken = scratch("broken.toml", "speed = 3\n");
    assert_eq!(run(&["compare", &a, &b, "--tolerance-profile", broken.to_str().unwrap()]).0, EXIT_ERROR);
}

#[test]
fn defaults_reproduce_the_golden_outputs_through_an_explicit_profile() {
    let profile = scratch(
        "defaults.toml",
        "rank_rel = 1e-9\north = 1e-9\nsv_distinct = 1e-7\nlex_quantum = 1e-8\ntrace_cmp = 1e-7\n",
    );
    let p = profile.to_str().unwrap();
    let q = golden("random_complex_d5.tuple");
    let (status, out, _) = run(&["invariant", &q, "--method", "quiver", "--tolerance-profile", p]);
    assert_eq!(status, EXIT_YES);
    assert_eq!(out, std::fs::read_to_string(golden("invariant_quiver_random_complex.txt")).unwrap());
}

#[test]
fn gen_is_deterministic_and_well_shaped() {
    let args = ["gen", "random", "--d", "4", "--ranks", "1,2", "--field", "complex", "--seed", "5"];
    let (s1, o1, _) = run(&args);
    let (s2, o2, _) = run(&args);
    assert_eq!((s1, s2), (EXIT_YES, EXIT_YES));
    assert_eq!(o1, o2);
    assert!(o1.starts_with("tuple v1 field=complex d=4 n=2 ranks=1,2\n"));

    let (status, out, _) = run(&["gen", "graph-gl", "--graph", "tests/data/graphs/c6.graph"]);
    assert_eq!(status, EXIT_YES);
    let t = parse_tuple(&out).unwrap();
    assert_eq!((t.len(), t.dim(), t.ranks()), (6, 6, vec![2; 6]));

    assert_eq!(run(&["gen", "graph-gl", "--graph", "tests/data/graphs/p4.graph"]).0, EXIT_ERROR);
    assert_eq!(run(&["gen", "adversarial", "--d", "2", "--eps", "1"]).0, EXIT_ERROR);
    assert_eq!(run(&["gen", "adversarial", "--d", "4", "--eps", "3"]).0, EXIT_ERROR);
    assert_eq!(run(&["gen", "random", "--d", "4", "--r", "5", "--n", "2"]).0, EXIT_ERROR);
    assert_eq!(run(&["gen", "random", "--d", "4"]).0, EXIT_ERROR);
}

#[test]
fn invariant_headers() {
    let (status, out, _) = run(&["invariant", &golden("adversarial_d4_plus.tuple")]);
    assert_eq!(status, EXIT_YES);
    assert!(out.starts_with("invariant lines\n"));
    assert!(out.contains("product 0.0625"));

    let (_, out, _) = run(&["invariant", &golden("random_complex_d5.tuple"), "--method", "quiver"]);
    let words_line = out.lines().nth(1).unwrap();
    let fields: Vec<&str> = words_line.split_whitespace().collect();
    assert_eq!(fields[0], "words");
    let (m, bound): (usize, usize) = (fields[1].parse().unwrap(), fields[3].parse().unwrap());
    assert!(m <= bound && bound == 25);

    assert_eq!(run(&["invariant", &golden("random_complex_d5.tuple"), "--method", "planes"]).0, EXIT_ERROR);
}

#[test]
fn nstar_reports() {
    let (status, out, _) = run(&["nstar", "--r", "1", "--d", "3", "--trials", "5"]);
    assert_eq!(status, EXIT_YES);
    assert!(out.contains("PASS n*=4"));
    let (status, out, _) = run(&["nstar", "--r", "2", "--d", "5", "--trials", "3", "--n-max", "4"]);
    assert_eq!(status, EXIT_YES);
    assert!(!out.contains("PASS") && !out.contains("FAIL"));
    assert_eq!(run(&["nstar", "--r", "3", "--d", "3"]).0, EXIT_ERROR);
}

#[test]
fn brute_force_from_files() {
    let c6 = golden("graph_gl_c6.tuple");
    let relabeled = run(&["gen", "graph-gl", "--graph", "tests/data/graphs/c6_relabeled.graph"]).1;
    let relabeled = scratch("c6_relabeled.tuple", &relabeled);
    let (status, out, _) =
        run(&["compare", &c6, relabeled.to_str().unwrap(), "--group", "gl", "--permutations", "brute"]);
    assert_eq!(status, EXIT_YES);
    assert!(out.contains("permutation "));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn serialization_round_trip(seed in any::<u64>(), complex in any::<bool>(), d in 1usize..=6, n in 1usize..=4) {
        let field = if complex { Field::Complex } else { Field::Real };
        let ranks: Vec<usize> = (0..n).map(|i| 1 + (i + seed as usize) % d).collect();
        let t = random_tuple(d, &ranks, field, seed).unwrap();
        let text = write_tuple(&t);
        let back = parse_tuple(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(write_tuple(&back), text);
    }
}
