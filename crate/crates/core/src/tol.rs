/// Numerical thresholds shared by every decision in the crate.
///
/// All rank decisions are relative to the largest singular value (or largest
/// column norm during Gram–Schmidt), so scaling an input never changes an
/// outcome.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative singular-value cutoff for rank, nullspace and independence tests.
    pub rank_rel: f64,
    /// Absolute cutoff below which an inner product counts as orthogonal.
    pub orth: f64,
    /// Relative gap `(s1 - s2) / s1` above which a 2×2 block has distinct singular values.
    pub sv_distinct: f64,
    /// Grid spacing used to quantize entries before lexicographic comparison.
    pub lex_quantum: f64,
    /// Relative tolerance for comparing trace tables and Bargmann products.
    pub trace_cmp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { rank_rel: 1e-9, orth: 1e-9, sv_distinct: 1e-7, lex_quantum: 1e-8, trace_cmp: 1e-7 }
    }
}

impl Tolerances {
    /// True when every field is strictly positive and the lexicographic
    /// quantum sits well above machine precision.
    pub fn is_valid(&self) -> bool {
        let all = [self.rank_rel, self.orth, self.sv_distinct, self.lex_quantum, self.trace_cmp];
        all.iter().all(|t| t.is_finite() && *t > 0.0) && self.lex_quantum >= 100.0 * f64::EPSILON
    }

    /// `|a - b| <= trace_cmp * max(1, |a|, |b|)`.
    pub fn close(&self, a: crate::C64, b: crate::C64) -> bool {
        let scale = 1.0f64.max(a.norm()).max(b.norm());
        (a - b).norm() <= self.trace_cmp * scale
    }
}
