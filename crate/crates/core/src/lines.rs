//! Tuples of lines: Bargmann products, the frame graph, a canonical spanning
//! forest with its fundamental cycles, and the normalized Gramian.
//!
//! A tuple of lines is determined up to isometry by its 2-products together
//! with the m-products of the fundamental cycles of any maximal spanning
//! forest of its frame graph. Building the forest greedily from
//! lexicographically ordered edges makes that invariant canonical.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{inner, norm, sgn, Field, Matrix};
use crate::report::Mismatch;
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;
use crate::C64;

/// Lines in `F^d`, one unit representative each.
#[derive(Clone, Debug, PartialEq)]
pub struct LineTuple {
    field: Field,
    dim: usize,
    vectors: Vec<Vec<C64>>,
}

impl LineTuple {
    /// Normalizes each representative.
    pub fn new(field: Field, dim: usize, vectors: Vec<Vec<C64>>) -> Result<Self> {
        let mut out = Vec::with_capacity(vectors.len());
        for mut v in vectors {
            if v.len() != dim {
                return Err(Error::ShapeMismatch { expected: (dim, 1), found: (v.len(), 1) });
            }
            let nv = norm(&v);
            if !(nv > 0.0) {
                return Err(Error::RankDeficient { expected: 1, found: 0 });
            }
            v.iter_mut().for_each(|x| *x /= nv);
            out.push(v);
        }
        Ok(LineTuple { field, dim, vectors: out })
    }

    pub fn from_tuple(t: &SubspaceTuple) -> Result<Self> {
        if t.uniform_rank() != Some(1) {
            return Err(Error::MethodNotApplicable("line methods need every rank to be 1"));
        }
        Self::new(t.field(), t.dim(), t.bases().iter().map(|b| b.column(0)).collect())
    }

    pub fn to_tuple(&self) -> SubspaceTuple {
        let bases = self.vectors.iter().map(|v| Matrix::from_columns(self.dim, core::slice::from_ref(v))).collect();
        SubspaceTuple::new(self.field, self.dim, bases).expect("unit vectors form valid bases")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<C64>] {
        &self.vectors
    }

    fn ip(&self, i: usize, j: usize) -> C64 {
        inner(&self.vectors[i], &self.vectors[j])
    }
}

/// `<v_{i1}, v_{i2}> <v_{i2}, v_{i3}> ... <v_{im}, v_{i1}>`.
pub fn bargmann_product(lines: &LineTuple, cycle: &[usize]) -> Result<C64> {
    if cycle.is_empty() {
        return Err(Error::InvalidArgument("a Bargmann product needs at least one index"));
    }
    if let Some(&bad) = cycle.iter().find(|&&i| i >= lines.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: lines.len() });
    }
    let m = cycle.len();
    Ok((0..m).fold(C64::new(1.0, 0.0), |acc, k| acc * lines.ip(cycle[k], cycle[(k + 1) % m])))
}

/// Graph on line indices with an edge between non-orthogonal lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameGraph {
    pub n: usize,
    /// `(i, j)` with `i < j`, sorted lexicographically.
    pub edges: Vec<(usize, usize)>,
}

pub fn frame_graph(lines: &LineTuple, tol: &Tolerances) -> FrameGraph {
    let n = lines.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if lines.ip(i, j).norm() > tol.orth {
                edges.push((i, j));
            }
        }
    }
    FrameGraph { n, edges }
}

/// A cycle closed by one non-forest edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    /// The non-forest edge `(i, j)`, `i < j`.
    pub edge: (usize, usize),
    /// Forest path from `i` to `j`; the edge `j -> i` closes it.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestWithCycles {
    pub forest_edges: Vec<(usize, usize)>,
    pub fundamental_cycles: Vec<FundamentalCycle>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Greedy spanning forest over lexicographically ordered edges, plus the
/// fundamental cycle of every rejected edge.
pub fn canonical_forest(g: &FrameGraph) -> ForestWithCycles {
    let mut edges = g.edges.clone();
    edges.sort_unstable();
    let mut uf = UnionFind::new(g.n);
    let mut adjacency = vec![Vec::new(); g.n];
    let mut forest_edges = Vec::new();
    let mut rejected = Vec::new();
    for &(i, j) in &edges {
        if uf.union(i, j) {
            forest_edges.push((i, j));
            adjacency[i].push(j);
            adjacency[j].push(i);
        } else {
            rejected.push((i, j));
        }
    }
    let fundamental_cycles = rejected
        .into_iter()
        .map(|(i, j)| FundamentalCycle { edge: (i, j), vertices: forest_path(&adjacency, i, j) })
        .collect();
    ForestWithCycles { forest_edges, fundamental_cycles }
}

fn forest_path(adjacency: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adjacency.len()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in &adjacency[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

#[derive(Clone, Debug, PartialEq)]
pub struct LineInvariant {
    pub frame_graph: FrameGraph,
    pub forest: ForestWithCycles,
    /// `|<v_i, v_j>|^2`, row-major `n x n`.
    pub two_products: Vec<f64>,
    /// One m-product per fundamental cycle, in forest order.
    pub cycle_products: Vec<C64>,
}

impl LineInvariant {
    pub fn n(&self) -> usize {
        self.frame_graph.n
    }

    pub fn two_product(&self, i: usize, j: usize) -> f64 {
        self.two_products[i * self.n() + j]
    }
}

pub fn line_invariant(lines: &LineTuple, tol: &Tolerances) -> LineInvariant {
    let n = lines.len();
    let frame_graph = frame_graph(lines, tol);
    let forest = canonical_forest(&frame_graph);
    let mut two_products = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            two_products[i * n + j] = lines.ip(i, j).norm_sqr();
        }
    }
    let cycle_products = forest
        .fundamental_cycles
        .iter()
        .map(|c| bargmann_product(lines, &c.vertices).expect("forest vertices are in range"))
        .collect();
    LineInvariant { frame_graph, forest, two_products, cycle_products }
}

/// First disagreement between two line invariants, if any.
pub fn compare_line_invariants(a: &LineInvariant, b: &LineInvariant, tol: &Tolerances) -> Option<Mismatch> {
    if a.frame_graph != b.frame_graph {
        return Some(Mismatch::FrameGraph);
    }
    if a.forest != b.forest {
        return Some(Mismatch::Forest);
    }
    let n = a.n();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.two_product(i, j), b.two_product(i, j));
            if !tol.close(C64::new(x, 0.0), C64::new(y, 0.0)) {
                return Some(Mismatch::TwoProduct { i, j, left: x, right: y });
            }
        }
    }
    for (k, (x, y)) in a.cycle_products.iter().zip(&b.cycle_products).enumerate() {
        if !tol.close(*x, *y) {
            return Some(Mismatch::CycleProduct { cycle: k, left: *x, right: *y });
        }
    }
    None
}

/// Isometric isomorphism of two line tuples in fixed order.
pub fn lines_isomorphic(a: &LineTuple, b: &LineTuple, tol: &Tolerances) -> Result<bool> {
    Ok(lines_mismatch(a, b, tol)?.is_none())
}

pub fn lines_mismatch(a: &LineTuple, b: &LineTuple, tol: &Tolerances) -> Result<Option<Mismatch>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.field != b.field {
        return Err(Error::FieldMismatch);
    }
    Ok(compare_line_invariants(&line_invariant(a, tol), &line_invariant(b, tol), tol))
}

/// `D A D^*` with `D = diag(sgn <v_1, v_j>)`: the Gramian with a positive
/// first row and column.
pub fn normalized_gramian(lines: &LineTuple, tol: &Tolerances) -> Result<Matrix> {
    let n = lines.len();
    let mut d = Vec::with_capacity(n);
    for j in 0..n {
        let z = lines.ip(0, j);
        if !(z.norm() > tol.orth) {
            return Err(Error::StarConditionViolated { index: j });
        }
        d.push(sgn(z));
    }
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = d[i] * lines.ip(i, j) * d[j].conj();
        }
    }
    // The first row and column are real by construction; drop rounding residue.
    for j in 0..n {
        g[(0, j)] = C64::new(g[(0, j)].re, 0.0);
        g[(j, 0)] = C64::new(g[(j, 0)].re, 0.0);
    }
    Ok(g)
}

/// Necessary condition for isomorphism up to isometry and permutation: the
/// sorted multisets of off-diagonal 2-products agree.
pub fn two_product_histograms_match(a: &LineTuple, b: &LineTuple, tol: &Tolerances) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let collect = |l: &LineTuple| {
        let mut v = Vec::new();
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                v.push(l.ip(i, j).norm_sqr());
            }
        }
        v.sort_by(f64::total_cmp);
        v
    };
    collect(a).iter().zip(collect(b).iter()).all(|(x, y)| tol.close(C64::new(*x, 0.0), C64::new(*y, 0.0)))
}
