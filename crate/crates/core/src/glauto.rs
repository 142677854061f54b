//! Isomorphism up to invertible linear maps.
//!
//! `X` maps `span(A_i)` onto `span(B_i)` for every `i` exactly when
//! `X A_i = B_i Y_i` for some `Y_i`. The unknowns `(X, Y_1, ..., Y_n)` are
//! stacked into one vector (`X` row-major, then each `Y_i` row-major) and the
//! equations into one matrix whose nullspace is read off an SVD.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::harness::generators::random_tuple;
use crate::harness::rng::SeededSource;
use crate::linalg::{max_principal_angle, svd};
use crate::matrix::{sgn, Field, Matrix};
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;
use crate::C64;

/// Smallest accepted ratio between the smallest kept and the largest
/// discarded singular value.
pub const SPECTRAL_GAP_MIN: f64 = 1e3;

/// Largest principal angle accepted when checking a certificate.
pub const CERTIFICATE_ANGLE_TOL: f64 = 1e-8;

/// Nullspace of the stabilizer system of a tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerReport {
    /// Dimension of the solution space; at least 1 since scalars solve it.
    pub dimension: usize,
    pub trivially_stabilized: bool,
    /// Largest singular value counted as zero.
    pub largest_discarded_sv: f64,
    /// Smallest singular value counted as nonzero, `0` if none is.
    pub smallest_kept_sv: f64,
    /// `smallest_kept_sv / largest_discarded_sv`, infinite when nothing is
    /// discarded or the discarded values are exactly zero.
    pub spectral_gap: f64,
}

impl StabilizerReport {
    /// The nullspace dimension sits on a gap narrower than [`SPECTRAL_GAP_MIN`].
    pub fn is_ambiguous(&self) -> bool {
        self.spectral_gap < SPECTRAL_GAP_MIN
    }
}

impl fmt::Display for StabilizerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dimension {} ({}), gap {:.3e}",
            self.dimension,
            if self.trivially_stabilized { "trivially stabilized" } else { "not trivially stabilized" },
            self.spectral_gap
        )?;
        if self.is_ambiguous() {
            write!(f, " [ambiguous]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GLOutcome {
    /// `X` with `X span(A_i) = span(B_i)`, scaled to `||X||_F = sqrt(d)`.
    Isomorphic(Matrix),
    NotIsomorphic(String),
    PreconditionFailed(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GLCertificate {
    pub outcome: GLOutcome,
    /// Principal angle between `X span(A_i)` and `span(B_i)`, recomputed from
    /// the inputs; empty unless an `X` was found.
    pub residuals: Vec<f64>,
    /// Stabilizer report of the first tuple.
    pub stabilizer: StabilizerReport,
    /// Dimension of the solution space of `X A_i = B_i Y_i`, if it was solved.
    pub solution_dimension: Option<usize>,
}

impl GLCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self.outcome, GLOutcome::Isomorphic(_))
    }

    pub fn map(&self) -> Option<&Matrix> {
        match &self.outcome {
            GLOutcome::Isomorphic(x) => Some(x),
            _ => None,
        }
    }
}

/// Matrix of the map `(X, Y_1, ..., Y_n) -> (X A_i - B_i Y_i)_i`.
fn system(a: &SubspaceTuple, b: &SubspaceTuple) -> Matrix {
    let d = a.dim();
    let ranks = a.ranks();
    let rows: usize = ranks.iter().map(|r| d * r).sum();
    let cols = d * d + ranks.iter().map(|r| r * r).sum::<usize>();
    let mut m = Matrix::zeros(rows, cols);
    let mut row0 = 0;
    let mut y0 = d * d;
    for (ai, bi) in a.bases().iter().zip(b.bases()) {
        let r = ai.cols();
        for p in 0..d {
            for c in 0..r {
                let row = row0 + p * r + c;
                for q in 0..d {
                    m[(row, p * d + q)] = ai[(q, c)];
                }
                for s in 0..r {
                    m[(row, y0 + s * r + c)] = -bi[(p, s)];
                }
            }
        }
        row0 += d * r;
        y0 += r * r;
    }
    m
}

struct Solved {
    report: StabilizerReport,
    null: Vec<Vec<C64>>,
}

fn solve(m: &Matrix, tol: &Tolerances) -> Solved {
    let dec = svd(m);
    let s = &dec.singular_values;
    let smax = s.first().copied().unwrap_or(0.0);
    let kept = s.iter().filter(|&&x| smax > 0.0 && x > tol.rank_rel * smax).count();
    let dimension = s.len() - kept;
    let smallest_kept_sv = if kept > 0 { s[kept - 1] } else { 0.0 };
    let largest_discarded_sv = s.get(kept).copied().unwrap_or(0.0);
    let spectral_gap =
        if largest_discarded_sv == 0.0 { f64::INFINITY } else { smallest_kept_sv / largest_discarded_sv };
    let null = (kept..m.cols()).map(|j| dec.v.column(j)).collect();
    Solved {
        report: StabilizerReport {
            dimension,
            trivially_stabilized: dimension == 1,
            largest_discarded_sv,
            smallest_kept_sv,
            spectral_gap,
        },
        null,
    }
}

/// Dimension of `{(U, V_1, ..., V_n) : U A_i = A_i V_i}`, the Lie algebra of
/// the common stabilizer.
pub fn stabilizer_dimension(a: &SubspaceTuple, tol: &Tolerances) -> Result<StabilizerReport> {
    let q = a.orthonormalized(tol)?;
    Ok(solve(&system(&q, &q), tol).report)
}

fn check_pair(a: &SubspaceTuple, b: &SubspaceTuple) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(())
}

/// Reads `X` off a solution vector and fixes the gauge: `||X||_F = sqrt(d)`
/// and `tr X` real and positive (or, for traceless `X`, the largest entry).
fn extract_map(v: &[C64], d: usize) -> Matrix {
    let x = Matrix::from_vec(d, d, v[..d * d].to_vec());
    let norm = x.frobenius_norm();
    if norm == 0.0 {
        return x;
    }
    let tr = x.trace();
    let pivot = if tr.norm() > 1e-8 * norm {
        tr
    } else {
        x.as_slice().iter().copied().fold(C64::new(0.0, 0.0), |m, z| if z.norm() > m.norm() { z } else { m })
    };
    x.scale(sgn(pivot).conj() * (libm::sqrt(d as f64) / norm))
}

fn invertible(x: &Matrix, tol: &Tolerances) -> bool {
    let s = svd(x).singular_values;
    s[0] > 0.0 && s[s.len() - 1] > tol.rank_rel * s[0]
}

fn residuals(x: &Matrix, a: &SubspaceTuple, b: &SubspaceTuple, tol: &Tolerances) -> Result<Vec<f64>> {
    a.bases().iter().zip(b.bases()).map(|(ai, bi)| max_principal_angle(&x.mul(ai), bi, tol)).collect()
}

fn certify(
    x: Matrix,
    a: &SubspaceTuple,
    b: &SubspaceTuple,
    stabilizer: StabilizerReport,
    solution_dimension: usize,
    tol: &Tolerances,
) -> Result<GLCertificate> {
    let res = residuals(&x, a, b, tol)?;
    let outcome = if res.iter().all(|&t| t < CERTIFICATE_ANGLE_TOL) {
        GLOutcome::Isomorphic(x)
    } else {
        GLOutcome::NotIsomorphic("X fails the principal-angle check".into())
    };
    Ok(GLCertificate { outcome, residuals: res, stabilizer, solution_dimension: Some(solution_dimension) })
}

/// Decides whether some invertible `X` maps `span(A_i)` onto `span(B_i)` for
/// every `i`. Requires `a` to be trivially stabilized; otherwise the outcome
/// is [`GLOutcome::PreconditionFailed`].
pub fn gl_isomorphism(a: &SubspaceTuple, b: &SubspaceTuple, tol: &Tolerances) -> Result<GLCertificate> {
    check_pair(a, b)?;
    let qa = a.orthonormalized(tol)?;
    let stabilizer = solve(&system(&qa, &qa), tol).report;
    let refuse = |why: &str, stabilizer: StabilizerReport| GLCertificate {
        outcome: GLOutcome::PreconditionFailed(why.into()),
        residuals: Vec::new(),
        stabilizer,
        solution_dimension: None,
    };
    if !stabilizer.trivially_stabilized {
        return Ok(refuse("first tuple is not trivially stabilized", stabilizer));
    }
    let not = |why: &str, stabilizer: StabilizerReport, dim: Option<usize>| GLCertificate {
        outcome: GLOutcome::NotIsomorphic(why.into()),
        residuals: Vec::new(),
        stabilizer,
        solution_dimension: dim,
    };
    if a.ranks() != b.ranks() {
        return Ok(not("rank profiles differ", stabilizer, None));
    }
    let qb = b.orthonormalized(tol)?;
    let solved = solve(&system(&qa, &qb), tol);
    let dim = solved.report.dimension;
    if dim != 1 {
        return Ok(not("solution space dimension is not 1", stabilizer, Some(dim)));
    }
    let x = extract_map(&solved.null[0], a.dim());
    if !invertible(&x, tol) {
        return Ok(not("X is singular", stabilizer, Some(dim)));
    }
    certify(x, a, b, stabilizer, dim, tol)
}

/// Randomized decision without the stabilizer hypothesis: `det X` is a
/// polynomial on the solution space, so a random element is invertible
/// whenever any element is. Tries a few seeded random combinations.
///
/// Intended as an oracle for small instances; the answer depends on the
/// numerical conditioning of the combination.
pub fn gl_isomorphism_randomized(
    a: &SubspaceTuple,
    b: &SubspaceTuple,
    seed: u64,
    tol: &Tolerances,
) -> Result<GLCertificate> {
    const ATTEMPTS: usize = 3;
    check_pair(a, b)?;
    let qa = a.orthonormalized(tol)?;
    let stabilizer = solve(&system(&qa, &qa), tol).report;
    if a.ranks() != b.ranks() {
        return Ok(GLCertificate {
            outcome: GLOutcome::NotIsomorphic("rank profiles differ".into()),
            residuals: Vec::new(),
            stabilizer,
            solution_dimension: None,
        });
    }
    let qb = b.orthonormalized(tol)?;
    let solved = solve(&system(&qa, &qb), tol);
    let dim = solved.report.dimension;
    let d = a.dim();
    let mut src = SeededSource::new(seed);
    for _ in 0..ATTEMPTS {
        let mut v = vec![C64::new(0.0, 0.0); d * d];
        for n in &solved.null {
            let c = src.gaussian_scalar(a.field());
            for (acc, z) in v.iter_mut().zip(n) {
                *acc += c * z;
            }
        }
        let x = extract_map(&v, d);
        if x.frobenius_norm() > 0.0 && invertible(&x, tol) {
            return certify(x, a, b, stabilizer, dim, tol);
        }
    }
    Ok(GLCertificate {
        outcome: GLOutcome::NotIsomorphic("no invertible X in the solution space".into()),
        residuals: Vec::new(),
        stabilizer,
        solution_dimension: Some(dim),
    })
}

/// `n*(r, d)` for `r < d` with `r | d`.
pub fn theoretical_nstar(r: usize, d: usize) -> Option<usize> {
    if r == 0 || r >= d || !d.is_multiple_of(r) {
        return None;
    }
    let k = d / r;
    Some(match (r, k) {
        (1, _) => k + 1,
        (_, 2) => k + 3,
        _ => k + 2,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct NStarRow {
    pub n: usize,
    pub trials: usize,
    pub trivially_stabilized: usize,
    /// Smallest spectral gap over the trials.
    pub min_gap: f64,
}

impl NStarRow {
    pub fn fraction(&self) -> f64 {
        self.trivially_stabilized as f64 / self.trials as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NStarTable {
    pub r: usize,
    pub d: usize,
    pub field: Field,
    pub rows: Vec<NStarRow>,
}

impl NStarTable {
    /// Smallest `n` from which every trial is trivially stabilized.
    pub fn empirical_threshold(&self) -> Option<usize> {
        let mut threshold = None;
        for row in self.rows.iter().rev() {
            if row.trivially_stabilized == row.trials {
                threshold = Some(row.n);
            } else {
                break;
            }
        }
        threshold
    }

    pub fn min_gap(&self) -> f64 {
        self.rows.iter().map(|r| r.min_gap).fold(f64::INFINITY, f64::min)
    }
}

impl fmt::Display for NStarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# r={} d={} field={}", self.r, self.d, self.field.name())?;
        writeln!(f, "n trials fraction min_gap")?;
        for row in &self.rows {
            writeln!(f, "{} {} {:.4} {:.3e}", row.n, row.trials, row.fraction(), row.min_gap)?;
        }
        match self.empirical_threshold() {
            Some(n) => writeln!(f, "threshold {n}"),
            None => writeln!(f, "threshold none"),
        }
    }
}

/// Complex Gaussian trials; see [`nstar_experiment_over`].
pub fn nstar_experiment(
    r: usize,
    d: usize,
    n_max: usize,
    trials: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<NStarTable> {
    nstar_experiment_over(Field::Complex, r, d, n_max, trials, seed, tol)
}

/// For `n = 1..=n_max`, the fraction of `trials` Gaussian tuples of `n`
/// subspaces of rank `r` in `F^d` that are trivially stabilized. Trial `t`
/// draws from seed `seed + t`, so the tuples for consecutive `n` are nested.
pub fn nstar_experiment_over(
    field: Field,
    r: usize,
    d: usize,
    n_max: usize,
    trials: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<NStarTable> {
    if r == 0 || r >= d {
        return Err(Error::InvalidArgument("need 1 <= r < d"));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial"));
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = NStarRow { n, trials, trivially_stabilized: 0, min_gap: f64::INFINITY };
        for t in 0..trials {
            let tuple = random_tuple(d, &vec![r; n], field, seed.wrapping_add(t as u64))?;
            let report = stabilizer_dimension(&tuple, tol)?;
            row.trivially_stabilized += report.trivially_stabilized as usize;
            row.min_gap = row.min_gap.min(report.spectral_gap);
        }
        rows.push(row);
    }
    Ok(NStarTable { r, d, field, rows })
}
