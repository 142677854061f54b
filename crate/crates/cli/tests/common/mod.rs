//! Golden cases shared by the golden test and the acceptance suite.
//!
//! Each case runs one command line in-process; its standard output is
//! compared byte for byte with `tests/golden/<name>`. Set `SUBISO_BLESS=1`
//! to rewrite the files instead. Cases run in order, and later cases may read
//! files written by earlier ones.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "random_d6_r2_n3_seed42.tuple",
        args: &["gen", "random", "--d", "6", "--r", "2", "--n", "3", "--seed", "42"],
        exit: 0,
    },
    GoldenCase {
        name: "rotated_d6_r2_n3.tuple",
        args: &["gen", "isometry", "--input", "tests/golden/random_d6_r2_n3_seed42.tuple", "--seed", "3", "--scramble"],
        exit: 0,
    },
    GoldenCase {
        name: "random_complex_d5.tuple",
        args: &["gen", "random", "--d", "5", "--ranks", "1,2,2", "--field", "complex", "--seed", "7"],
        exit: 0,
    },
    GoldenCase { name: "adversarial_d4_plus.tuple", args: &["gen", "adversarial", "--d", "4", "--eps", "1"], exit: 0 },
    GoldenCase {
        name: "adversarial_d4_minus.tuple",
        args: &["gen", "adversarial", "--d", "4", "--eps", "-1"],
        exit: 0,
    },
    GoldenCase {
        name: "lines_d3_n5.tuple",
        args: &["gen", "random", "--d", "3", "--r", "1", "--n", "5", "--seed", "11"],
        exit: 0,
    },
    GoldenCase {
        name: "lines_d3_n5_gl_shuffled.tuple",
        args: &["gen", "gl", "--input", "tests/golden/lines_d3_n5.tuple", "--seed", "12", "--shuffle"],
        exit: 0,
    },
    GoldenCase {
        name: "graph_gl_c6.tuple",
        args: &["gen", "graph-gl", "--graph", "tests/data/graphs/c6.graph"],
        exit: 0,
    },
    GoldenCase {
        name: "graph_gl_2c3.tuple",
        args: &["gen", "graph-gl", "--graph", "tests/data/graphs/2c3.graph"],
        exit: 0,
    },
    GoldenCase {
        name: "graph_unitary_c4.tuple",
        args: &["gen", "graph-unitary", "--graph", "tests/data/graphs/c4.graph"],
        exit: 0,
    },
    GoldenCase {
        name: "invariant_lines_adversarial_d4_plus.txt",
        args: &["invariant", "tests/golden/adversarial_d4_plus.tuple", "--method", "lines"],
        exit: 0,
    },
    GoldenCase {
        name: "invariant_planes_random.txt",
        args: &["invariant", "tests/golden/random_d6_r2_n3_seed42.tuple", "--method", "planes"],
        exit: 0,
    },
    GoldenCase {
        name: "invariant_planes_rotated.txt",
        args: &["invariant", "tests/golden/rotated_d6_r2_n3.tuple", "--method", "planes"],
        exit: 0,
    },
    GoldenCase {
        name: "invariant_quiver_random_complex.txt",
        args: &["invariant", "tests/golden/random_complex_d5.tuple", "--method", "quiver"],
        exit: 0,
    },
    GoldenCase {
        name: "invariant_projection_graph_unitary_c4.txt",
        args: &["invariant", "tests/golden/graph_unitary_c4.tuple", "--method", "projection"],
        exit: 0,
    },
    GoldenCase {
        name: "invariant_lines_on_planes.txt",
        args: &["invariant", "tests/golden/random_d6_r2_n3_seed42.tuple", "--method", "lines"],
        exit: 2,
    },
    GoldenCase {
        name: "compare_rotated.txt",
        args: &["compare", "tests/golden/random_d6_r2_n3_seed42.tuple", "tests/golden/rotated_d6_r2_n3.tuple"],
        exit: 0,
    },
    GoldenCase {
        name: "compare_rotated_quiver.txt",
        args: &[
            "compare",
            "tests/golden/random_d6_r2_n3_seed42.tuple",
            "tests/golden/rotated_d6_r2_n3.tuple",
            "--method",
            "quiver",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "compare_adversarial.txt",
        args: &["compare", "tests/golden/adversarial_d4_plus.tuple", "tests/golden/adversarial_d4_minus.tuple"],
        exit: 1,
    },
    GoldenCase {
        name: "compare_gl_shuffled_fixed_order.txt",
        args: &[
            "compare",
            "tests/golden/lines_d3_n5.tuple",
            "tests/golden/lines_d3_n5_gl_shuffled.tuple",
            "--group",
            "gl",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "compare_gl_shuffled_brute.txt",
        args: &[
            "compare",
            "tests/golden/lines_d3_n5.tuple",
            "tests/golden/lines_d3_n5_gl_shuffled.tuple",
            "--group",
            "gl",
            "--permutations",
            "brute",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "compare_gl_c6_2c3_brute.txt",
        args: &[
            "compare",
            "tests/golden/graph_gl_c6.tuple",
            "tests/golden/graph_gl_2c3.tuple",
            "--group",
            "gl",
            "--permutations",
            "brute",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "compare_gl_not_stabilized.txt",
        args: &["compare", "tests/golden/graph_gl_c6.tuple", "tests/golden/graph_gl_c6.tuple", "--group", "gl"],
        exit: 2,
    },
    GoldenCase { name: "stabilizer_graph_gl_c6.txt", args: &["stabilizer", "tests/golden/graph_gl_c6.tuple"], exit: 0 },
    GoldenCase { name: "stabilizer_lines_d3_n5.txt", args: &["stabilizer", "tests/golden/lines_d3_n5.tuple"], exit: 0 },
    GoldenCase { name: "nstar_r1_d3.txt", args: &["nstar", "--r", "1", "--d", "3"], exit: 0 },
    GoldenCase { name: "nstar_r2_d4.txt", args: &["nstar", "--r", "2", "--d", "4"], exit: 0 },
    GoldenCase {
        name: "nstar_r2_d5.txt",
        args: &["nstar", "--r", "2", "--d", "5", "--n-max", "5", "--trials", "5"],
        exit: 0,
    },
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn blessing() -> bool {
    std::env::var_os("SUBISO_BLESS").is_some_and(|v| v == "1")
}

/// Runs one case from the package root; returns status and standard output,
/// followed by standard error under a `--- stderr` marker when it is not
/// empty.
pub fn run_case(case: &GoldenCase) -> (i32, Vec<u8>) {
    let mut args = vec!["subiso"];
    args.extend_from_slice(case.args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = subiso::run(args, &mut out, &mut err);
    if !err.is_empty() {
        out.extend_from_slice(b"--- stderr\n");
        out.extend_from_slice(&err);
    }
    (status, out)
}

/// Mismatching case names, or writes every file when blessing.
pub fn check_golden() -> Vec<String> {
    let dir = golden_dir();
    let mut failures = Vec::new();
    for case in GOLDEN_CASES {
        let (status, out) = run_case(case);
        let path = dir.join(case.name);
        if status != case.exit {
            failures.push(format!("{}: exit {status}, expected {}", case.name, case.exit));
        }
        if blessing() {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        match std::fs::read(&path) {
            Ok(expected) if expected == out => {}
            Ok(_) => failures.push(format!("{}: output differs from the golden file", case.name)),
            Err(e) => failures.push(format!("{}: {e}", case.name)),
        }
    }
    failures
}
