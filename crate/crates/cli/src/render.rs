//! Plain-text rendering of invariants and reports.
//!
//! Numbers are printed with 12 significant digits and trailing zeros
//! trimmed; magnitudes below `1e-11` print as `0`.

use std::fmt::Write as _;

use subiso_core::algebra::TraceInvariant;
use subiso_core::lines::LineInvariant;
use subiso_core::planes::CanonicalPlaneGramian;
use subiso_core::{Matrix, C64};

const ZERO_BELOW: f64 = 1e-11;
const SIGNIFICANT: usize = 12;

pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x.abs() < ZERO_BELOW {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT as i32).contains(&exp) {
        let decimals = (SIGNIFICANT as i32 - 1 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn complex(z: C64) -> String {
    let (re, im) = (num(z.re), num(z.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

pub fn matrix(out: &mut String, m: &Matrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| complex(m[(i, j)])).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

fn edge_list(edges: &[(usize, usize)]) -> String {
    if edges.is_empty() {
        return "-".into();
    }
    edges.iter().map(|(i, j)| format!("{}-{}", i + 1, j + 1)).collect::<Vec<_>>().join(" ")
}

pub fn line_invariant(inv: &LineInvariant) -> String {
    let n = inv.frame_graph.n;
    let mut s = String::new();
    let _ = writeln!(s, "invariant lines");
    let _ = writeln!(s, "n {n}");
    let _ = writeln!(s, "frame-graph {}", edge_list(&inv.frame_graph.edges));
    let _ = writeln!(s, "forest {}", edge_list(&inv.forest.forest_edges));
    let _ = writeln!(s, "two-products");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| num(inv.two_product(i, j))).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let _ = writeln!(s, "cycles {}", inv.forest.fundamental_cycles.len());
    for (c, p) in inv.forest.fundamental_cycles.iter().zip(&inv.cycle_products) {
        let path: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(s, "cycle {} edge {}-{} product {}", path.join(" "), c.edge.0 + 1, c.edge.1 + 1, complex(*p));
    }
    s
}

pub fn plane_invariant(c: &CanonicalPlaneGramian) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "invariant planes");
    let _ = writeln!(s, "n {}", c.gramian.len());
    let _ = writeln!(s, "branch {}", c.branch.name());
    if let Some(w) = &c.warning {
        let _ = writeln!(s, "warning {w}");
    }
    let _ = writeln!(s, "gramian");
    matrix(&mut s, &c.gramian.to_matrix());
    s
}

/// `bound` is the dimension of the ambient matrix algebra.
pub fn trace_invariant(inv: &TraceInvariant, bound: usize) -> String {
    let m = inv.m();
    let mut s = String::new();
    let _ = writeln!(s, "invariant {}", inv.kind.name());
    let _ = writeln!(s, "words {m} bound {bound}");
    let _ = writeln!(s, "passes {}", inv.passes);
    let _ = writeln!(
        s,
        "conditioning min-accepted {:.3e} max-rejected {:.3e}",
        inv.conditioning.min_accepted, inv.conditioning.max_rejected
    );
    let _ = writeln!(s, "basis");
    for (w, word) in inv.words.iter().enumerate() {
        match inv.supports.get(w) {
            Some((i, j)) => {
                let _ = writeln!(s, "{} {} block {},{}", w + 1, word, i + 1, j + 1);
            }
            None => {
                let _ = writeln!(s, "{} {}", w + 1, word);
            }
        }
    }
    let _ = writeln!(s, "pair-traces");
    for i in 0..m {
        let row: Vec<String> = (0..m).map(|j| complex(inv.pair(i, j))).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let shown: Vec<_> = inv.triple_traces.iter().filter(|t| complex(t.value) != "0").collect();
    let _ = writeln!(s, "triple-traces {}", shown.len());
    for t in shown {
        let _ = writeln!(s, "{} {} {} {}", t.i + 1, t.j + 1, t.k + 1, complex(t.value));
    }
    let _ = writeln!(s, "generator-traces {}", inv.generator_count);
    for w in 0..m {
        let row: Vec<String> = (0..inv.generator_count).map(|g| complex(inv.generator_trace(w, g))).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    s
}
