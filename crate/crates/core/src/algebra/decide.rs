//! Isometric isomorphism of subspace tuples in fixed order, dispatched to
//! the cheapest applicable invariant.

use crate::algebra::projection::projection_invariant;
use crate::algebra::quiver::quiver_invariant_of_tuple;
use crate::algebra::traces::compare_trace_invariants;
use crate::error::{Error, Result};
use crate::lines::{lines_mismatch, LineTuple};
use crate::matrix::Field;
use crate::planes::{canonical_plane_gramian, check_nowhere_orthogonal, compare_canonical, PlaneGramian, PlaneWarning};
use crate::report::Mismatch;
use crate::tol::Tolerances;
use crate::tuple::SubspaceTuple;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Lines for rank 1, planes for real nowhere orthogonal rank 2, quiver
    /// otherwise.
    Auto,
    Projection,
    Quiver,
    Lines,
    Planes,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Projection => "projection",
            Method::Quiver => "quiver",
            Method::Lines => "lines",
            Method::Planes => "planes",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        [Method::Auto, Method::Projection, Method::Quiver, Method::Lines, Method::Planes]
            .into_iter()
            .find(|m| m.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryDecision {
    pub isomorphic: bool,
    /// The method that decided, never `Auto`.
    pub method: Method,
    pub mismatch: Option<Mismatch>,
    pub warning: Option<PlaneWarning>,
}

fn resolve(a: &SubspaceTuple, b: &SubspaceTuple, tol: &Tolerances) -> Result<Method> {
    match a.uniform_rank() {
        Some(1) => Ok(Method::Lines),
        Some(2) if a.field() == Field::Real => {
            let ga = PlaneGramian::from_tuple(a, tol)?;
            let gb = PlaneGramian::from_tuple(b, tol)?;
            if check_nowhere_orthogonal(&ga, tol) && check_nowhere_orthogonal(&gb, tol) {
                Ok(Method::Planes)
            } else {
                Ok(Method::Quiver)
            }
        }
        _ => Ok(Method::Quiver),
    }
}

/// Whether some isometry maps the `i`-th subspace of `a` onto the `i`-th
/// subspace of `b` for every `i`.
///
/// Projection needs a common ambient dimension; the Gramian-based methods
/// compare the configurations themselves and accept any.
pub fn subspaces_unitary_isomorphic(
    a: &SubspaceTuple,
    b: &SubspaceTuple,
    method: Method,
    tol: &Tolerances,
) -> Result<UnitaryDecision> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let method = if method == Method::Auto { resolve(a, b, tol)? } else { method };
    let decided = |mismatch: Option<Mismatch>, warning| UnitaryDecision {
        isomorphic: mismatch.is_none(),
        method,
        mismatch,
        warning,
    };
    if a.ranks() != b.ranks() {
        return Ok(decided(Some(Mismatch::RankProfile), None));
    }
    match method {
        Method::Auto => unreachable!("resolved above"),
        Method::Lines => {
            let (la, lb) = (LineTuple::from_tuple(a)?, LineTuple::from_tuple(b)?);
            Ok(decided(lines_mismatch(&la, &lb, tol)?, None))
        }
        Method::Planes => {
            let ca = canonical_plane_gramian(&PlaneGramian::from_tuple(a, tol)?, tol)?;
            let cb = canonical_plane_gramian(&PlaneGramian::from_tuple(b, tol)?, tol)?;
            Ok(decided(compare_canonical(&ca, &cb, tol), ca.warning.or(cb.warning)))
        }
        Method::Projection => {
            if a.dim() != b.dim() {
                return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
            }
            let (ia, ib) = (projection_invariant(a, tol)?, projection_invariant(b, tol)?);
            Ok(decided(compare_trace_invariants(&ia, &ib, tol), None))
        }
        Method::Quiver => {
            let (ia, ib) = (quiver_invariant_of_tuple(a, tol)?, quiver_invariant_of_tuple(b, tol)?);
            Ok(decided(compare_trace_invariants(&ia, &ib, tol), None))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generators::{adversarial_line_family, apply_isometry, random_isoclinic_planes, random_tuple};
    use alloc::vec;

    const ALL: [Method; 5] = [Method::Auto, Method::Projection, Method::Quiver, Method::Lines, Method::Planes];

    fn applicable(m: Method, t: &SubspaceTuple) -> bool {
        match m {
            Method::Lines => t.uniform_rank() == Some(1),
            Method::Planes => t.uniform_rank() == Some(2) && t.field() == Field::Real,
            _ => true,
        }
    }

    #[test]
    fn dispatch() {
        let tol = Tolerances::default();
        let lines = random_tuple(4, &[1, 1, 1], Field::Complex, 1).unwrap();
        let planes = random_tuple(6, &[2, 2, 2], Field::Real, 2).unwrap();
        let complex_planes = random_tuple(6, &[2, 2, 2], Field::Complex, 3).unwrap();
        let mixed = random_tuple(6, &[1, 2, 3], Field::Real, 4).unwrap();
        for (t, expect) in [
            (&lines, Method::Lines),
            (&planes, Method::Planes),
            (&complex_planes, Method::Quiver),
            (&mixed, Method::Quiver),
        ] {
            assert_eq!(subspaces_unitary_isomorphic(t, t, Method::Auto, &tol).unwrap().method, expect);
        }
    }

    #[test]
    fn methods_agree() {
        let tol = Tolerances::default();
        for seed in 0..12u64 {
            let field = if seed % 2 == 0 { Field::Real } else { Field::Complex };
            let ranks = match seed % 3 {
                0 => vec![1; 4],
                1 => vec![2; 3],
                _ => vec![1, 2, 2],
            };
            let a = random_tuple(5, &ranks, field, seed).unwrap();
            let (moved, _) = apply_isometry(&a, 100 + seed, true);
            let other = random_tuple(5, &ranks, field, 200 + seed).unwrap();
            for m in ALL.into_iter().filter(|m| applicable(*m, &a)) {
                let same = subspaces_unitary_isomorphic(&a, &moved, m, &tol).unwrap();
                assert!(same.isomorphic, "seed {seed} method {}", m.name());
                let diff = subspaces_unitary_isomorphic(&a, &other, m, &tol).unwrap();
                assert!(!diff.isomorphic, "seed {seed} method {}", m.name());
            }
        }
    }

    #[test]
    fn isoclinic_planes_agree_across_methods() {
        let tol = Tolerances::default();
        let a = random_isoclinic_planes(3, 5).unwrap();
        let (moved, _) = apply_isometry(&a, 6, true);
        for m in [Method::Planes, Method::Quiver, Method::Projection] {
            assert!(subspaces_unitary_isomorphic(&a, &moved, m, &tol).unwrap().isomorphic);
        }
    }

    #[test]
    fn adversarial_lines_are_separated_by_every_method() {
        let tol = Tolerances::default();
        for d in 3..=6 {
            let p = adversarial_line_family(d, 1).unwrap().to_tuple();
            let m = adversarial_line_family(d, -1).unwrap().to_tuple();
            for method in [Method::Lines, Method::Quiver, Method::Projection] {
                assert!(!subspaces_unitary_isomorphic(&p, &m, method, &tol).unwrap().isomorphic);
            }
        }
    }

    #[test]
    fn precondition_errors() {
        let tol = Tolerances::default();
        let a = random_tuple(4, &[1, 1], Field::Real, 1).unwrap();
        let b = random_tuple(4, &[1, 1, 1], Field::Real, 1).unwrap();
        assert_eq!(
            subspaces_unitary_isomorphic(&a, &b, Method::Auto, &tol).unwrap_err(),
            Error::LengthMismatch { left: 2, right: 3 }
        );
        let c = random_tuple(4, &[1, 1], Field::Complex, 1).unwrap();
        assert_eq!(subspaces_unitary_isomorphic(&a, &c, Method::Auto, &tol).unwrap_err(), Error::FieldMismatch);
        let e = random_tuple(5, &[1, 1], Field::Real, 1).unwrap();
        assert!(matches!(
            subspaces_unitary_isomorphic(&a, &e, Method::Projection, &tol),
            Err(Error::DimensionMismatch { .. })
        ));
        let r = random_tuple(4, &[1, 2], Field::Real, 1).unwrap();
        let s = random_tuple(4, &[2, 1], Field::Real, 1).unwrap();
        let d = subspaces_unitary_isomorphic(&r, &s, Method::Quiver, &tol).unwrap();
        assert_eq!(d.mismatch, Some(Mismatch::RankProfile));
        let orth = SubspaceTuple::new(
            Field::Real,
            4,
            vec![
                crate::matrix::Matrix::from_rows(&[[1.0, 0.0], [0.0, 1.0], [0.0, 0.0], [0.0, 0.0]]),
                crate::matrix::Matrix::from_rows(&[[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [0.0, 0.0]]),
            ],
        )
        .unwrap();
        assert!(matches!(
            subspaces_unitary_isomorphic(&orth, &orth, Method::Planes, &tol),
            Err(Error::NotNowhereOrthogonal { .. })
        ));
        assert_eq!(subspaces_unitary_isomorphic(&orth, &orth, Method::Auto, &tol).unwrap().method, Method::Quiver);
    }
}
