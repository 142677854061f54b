use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Normalizes each edge to `(min, max)`, sorts and rejects loops,
    /// duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b), len: n });
            }
            if a == b {
                return Err(Error::InvalidArgument("loops are not allowed"));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if out.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate edge"));
        }
        Ok(SimpleGraph { n, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// The common degree, if there is one.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.first()?;
        deg.iter().all(|&x| x == first).then_some(first)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: perm.len() });
        }
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        SimpleGraph::new(self.n, &edges)
    }

    /// Disjoint union, vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        SimpleGraph::new(self.n + other.n, &edges).expect("union of simple graphs is simple")
    }

    pub fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::new(n, &edges).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<SimpleGraph> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least 3 vertices"));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::new(n, &edges)
    }

    /// Star with centre `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        SimpleGraph::new(leaves + 1, &edges).expect("star is simple")
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        SimpleGraph::new(n, &edges).expect("complete graph is simple")
    }

    /// Isomorphism by exhaustion over all vertex permutations (n <= 8).
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> Result<bool> {
        if self.n > 8 {
            return Err(Error::TooLarge { n: self.n, max: 8 });
        }
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return Ok(false);
        }
        let mut a = self.degrees();
        let mut b = other.degrees();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(false);
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        loop {
            if self.edges.iter().all(|&(x, y)| other.has_edge(perm[x], perm[y])) {
                return Ok(true);
            }
            if !next_permutation(&mut perm) {
                return Ok(false);
            }
        }
    }
}

/// Advances `p` to the next permutation in lexicographic order; returns
/// `false` after the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
