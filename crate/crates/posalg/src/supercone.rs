//! The super commutant of a positive matrix as a polyhedral cone, and the
//! exact computation of its linear span.
//!
//! For a positive `A`, the super left-commutant is the cone of positive
//! `B` with `[A, B] >= 0`. It is cut out by `2 n^2` homogeneous
//! functionals on the n^2-dimensional matrix space: one per entry of `B`
//! and one per entry of the commutator. Each functional is classified as
//! an implicit equality by one exact LP (maximize it over the cone capped
//! at 1; by homogeneity the answer is 0 or 1), the span is the common
//! kernel of the implicit equalities, and the sum of the LP maximizers is
//! a relative-interior point.

use num_traits::{Signed, Zero};

use crate::charpoly::has_distinct_eigenvalues;
use crate::report::Report;
use crate::simplex::lp_max_homogeneous;
use crate::span::{nullspace, SpanBuilder};
use crate::spanalg::is_triangularizable;
use crate::{rat, Error, Mat, Rat};

/// Which commutator sign defines the cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Positive `B` with `[A, B] >= 0`.
    Left,
    /// Positive `B` with `[A, B] <= 0`.
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// The homogeneous inequality system defining a super-commutant cone.
///
/// Constraints are indexed `0..2n^2`: first the `n^2` entry-nonnegativity
/// functionals in row-major order, then the `n^2` commutator-entry
/// functionals in row-major order. Every functional is `>= 0` on the
/// cone.
pub struct ConeSpec {
    pub n: usize,
    pub side: Side,
    /// Coefficient rows over the vectorized matrix space.
    pub constraints: Vec<Vec<Rat>>,
}

impl ConeSpec {
    pub fn entry_constraint_count(&self) -> usize {
        self.n * self.n
    }

    pub fn evaluate(&self, index: usize, b: &Mat) -> Rat {
        let v = b.vectorize();
        self.constraints[index]
            .iter()
            .zip(v.iter())
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Membership test: every functional nonnegative at `b`.
    pub fn contains(&self, b: &Mat) -> Result<bool, Error> {
        if b.shape() != (self.n, self.n) {
            return Err(Error::shape(
                "membership test needs a matching square matrix",
            ));
        }
        Ok((0..self.constraints.len()).all(|i| !self.evaluate(i, b).is_negative()))
    }
}

/// Coefficients of `B -> [A, B][i][j]` over the vectorized `B`.
fn commutator_functional(a: &Mat, i: usize, j: usize) -> Vec<Rat> {
    let n = a.rows();
    let mut coeffs = vec![Rat::zero(); n * n];
    // (AB)[i][j] contributes A[i][p] to B[p][j]; (BA)[i][j] contributes
    // A[q][j] to B[i][q].
    for p in 0..n {
        coeffs[p * n + j] = &coeffs[p * n + j] + a.at(i, p);
    }
    for q in 0..n {
        coeffs[i * n + q] = &coeffs[i * n + q] - a.at(q, j);
    }
    coeffs
}

/// Transforms a functional on vectorized `B` into one on vectorized `B^T`.
fn transpose_functional(coeffs: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = coeffs[i * n + j].clone();
        }
    }
    out
}

/// Builds the constraint system of the super left- or right-commutant of
/// a nonnegative square matrix. The right cone is derived from the left
/// cone of `A^T` through the transpose identity: `B` is in the right cone
/// of `A` iff `B^T` is in the left cone of `A^T`.
pub fn supercomm_spec(a: &Mat, side: Side) -> Result<ConeSpec, Error> {
    a.require_square("super commutant")?;
    if let Some((r, c)) = a.first_negative_entry() {
        return Err(Error::domain(format!(
            "the super commutant needs a nonnegative matrix; entry ({}, {}) is {}",
            r + 1,
            c + 1,
            a.at(r, c)
        )));
    }
    let n = a.rows();
    let mut constraints = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let mut coeffs = vec![Rat::zero(); n * n];
            coeffs[i * n + j] = rat(1);
            constraints.push(coeffs);
        }
    }
    match side {
        Side::Left => {
            for i in 0..n {
                for j in 0..n {
                    constraints.push(commutator_functional(a, i, j));
                }
            }
        }
        Side::Right => {
            let at = a.transpose();
            // Functional f on B^T in the left cone of A^T becomes the
            // transposed functional on B; constraint (i, j) of the left
            // spec lands at transposed position (j, i), so push in the
            // order that keeps row-major indexing over [A, B].
            let mut transposed = vec![Vec::new(); n * n];
            for i in 0..n {
                for j in 0..n {
                    let f = commutator_functional(&at, i, j);
                    transposed[j * n + i] = transpose_functional(&f, n);
                }
            }
            constraints.extend(transposed);
        }
    }
    Ok(ConeSpec {
        n,
        side,
        constraints,
    })
}

/// Exact maximum of a linear functional over the capped cone; by
/// homogeneity this is `0` or `cap`.
pub fn lp_max(objective: &[Rat], spec: &ConeSpec, cap: &Rat) -> Result<Rat, Error> {
    Ok(lp_max_solution(objective, spec, cap)?.value)
}

fn lp_max_solution(
    objective: &[Rat],
    spec: &ConeSpec,
    cap: &Rat,
) -> Result<crate::simplex::LpSolution, Error> {
    let n2 = spec.n * spec.n;
    // Entry nonnegativity is the variable bound x >= 0; only the
    // commutator rows enter as general constraints.
    let rows: Vec<Vec<Rat>> = spec.constraints[n2..].to_vec();
    let sol = lp_max_homogeneous(n2, &rows, objective, cap)?;
    if !sol.value.is_zero() && sol.value != *cap {
        return Err(Error::internal(
            "homogeneous LP value is neither 0 nor the cap",
        ));
    }
    Ok(sol)
}

/// The linear span of a super-commutant cone, with certificates.
pub struct ConeSpan {
    pub n: usize,
    /// Indices of constraints that vanish identically on the cone.
    pub implicit_equalities: Vec<usize>,
    /// Basis of the common kernel of the implicit equalities.
    pub span_basis: Vec<Mat>,
    pub dim: usize,
    /// A cone point satisfying every non-implicit constraint strictly,
    /// scaled to integer entries.
    pub interior_point: Mat,
}

/// Classifies every constraint by one LP, assembles the span as the
/// common kernel of the implicit equalities, and sums the maximizers into
/// a relative-interior point.
pub fn cone_span(spec: &ConeSpec) -> Result<ConeSpan, Error> {
    let n = spec.n;
    let n2 = n * n;
    let cap = rat(1);
    let mut implicit = Vec::new();
    let mut point_sum = vec![Rat::zero(); n2];
    for (idx, functional) in spec.constraints.iter().enumerate() {
        let sol = lp_max_solution(functional, spec, &cap)?;
        if sol.value.is_zero() {
            implicit.push(idx);
        }
        for (acc, x) in point_sum.iter_mut().zip(sol.point.iter()) {
            *acc = &*acc + x;
        }
    }

    let implicit_rows: Vec<Vec<Rat>> = implicit
        .iter()
        .map(|&i| spec.constraints[i].clone())
        .collect();
    let kernel = nullspace(&implicit_rows, n2);
    let mut rank_check = SpanBuilder::new(n2);
    for row in &implicit_rows {
        rank_check.insert(row);
    }
    let dim = n2 - rank_check.rank();
    if kernel.len() != dim {
        return Err(Error::internal(
            "kernel dimension disagrees with implicit rank",
        ));
    }
    let span_basis = kernel
        .into_iter()
        .map(|v| Mat::from_vec(n, n, v).expect("kernel vector length"))
        .collect();

    // Clear denominators for a tidy integer interior point.
    let denom_lcm = point_sum
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, x| {
            num_integer::lcm(acc, x.denom().clone())
        });
    let scale = Rat::from_integer(denom_lcm);
    let interior: Vec<Rat> = point_sum.iter().map(|x| x * &scale).collect();
    let interior_point = Mat::from_vec(n, n, interior)?;

    Ok(ConeSpan {
        n,
        implicit_equalities: implicit,
        span_basis,
        dim,
        interior_point,
    })
}

/// Verifies multiplicative closedness of a computed span: every product
/// of span-basis elements must lie back in the span.
pub fn verify_lin_eq_alg(span: &ConeSpan) -> Result<Report, Error> {
    let mut builder = SpanBuilder::new(span.n * span.n);
    for b in &span.span_basis {
        builder.insert(&b.vectorize());
    }
    let mut report = Report::new("lin_eq_alg");
    report.dim = Some(span.dim);
    'outer: for (i, a) in span.span_basis.iter().enumerate() {
        for (j, b) in span.span_basis.iter().enumerate() {
            let p = a.checked_mul(b)?;
            if !builder.contains(&p.vectorize()) {
                report.fail(format!(
                    "product of basis elements {i} and {j} leaves the span"
                ));
                break 'outer;
            }
        }
    }
    Ok(report)
}

/// Bundles the span dimension of the super left-commutant with the
/// distinct-eigenvalue hypothesis, the triangularizability verdict on the
/// span basis, and the `n(n+1)/2` bound comparison.
pub fn supercomm_dimension_table(a: &Mat) -> Result<Report, Error> {
    let spec = supercomm_spec(a, Side::Left)?;
    let span = cone_span(&spec)?;
    let n = spec.n;
    let distinct = has_distinct_eigenvalues(a)?;
    let tri = is_triangularizable(n, &span.span_basis)?;
    let bound = n * (n + 1) / 2;

    let mut report = Report::new("supercomm_dimension_table");
    report.dim = Some(span.dim);
    report.set("n", n);
    report.set("bound", bound);
    report.set("distinct_eigenvalues", distinct);
    report.set("triangularizable", tri.pass);
    if distinct {
        report.assert_that("dim <= n(n+1)/2", span.dim <= bound);
        report.assert_that("span algebra triangularizable", tri.pass);
    } else {
        report.set("bound_check", "hypothesis not met");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::span::Inserted;

    fn all_ones(n: usize) -> Mat {
        Mat::from_fn(n, n, |_, _| rat(1))
    }

    #[test]
    fn spec_for_identity_reduces_to_entry_constraints() {
        let spec = supercomm_spec(&Mat::identity(3), Side::Left).unwrap();
        // Commutator functionals are identically zero.
        for f in &spec.constraints[9..] {
            assert!(f.iter().all(|c| c.is_zero()));
        }
        let b = Mat::from_int_rows(&[vec![1, 2, 0], vec![0, 0, 3], vec![4, 0, 0]]);
        assert!(spec.contains(&b).unwrap());
    }

    #[test]
    fn spec_rejects_negative_defining_matrix() {
        let a = Mat::from_int_rows(&[vec![1, -1], vec![0, 1]]);
        assert!(matches!(
            supercomm_spec(&a, Side::Left),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn membership_agrees_with_direct_evaluation() {
        let a = Mat::diagonal(&[rat(3), rat(2), rat(1)]);
        let spec = supercomm_spec(&a, Side::Left).unwrap();
        let mut rng = crate::rng::SplitMix64::new(5);
        for _ in 0..40 {
            let b = Mat::from_fn(3, 3, |_, _| rat(rng.below(4) as i64 - 1));
            let direct = b.is_nonnegative() && a.commutator(&b).unwrap().is_nonnegative();
            assert_eq!(spec.contains(&b).unwrap(), direct);
        }
    }

    #[test]
    fn right_side_matches_direct_negated_construction() {
        let a = Mat::from_int_rows(&[vec![1, 2], vec![0, 3]]);
        let spec = supercomm_spec(&a, Side::Right).unwrap();
        let mut rng = crate::rng::SplitMix64::new(6);
        for _ in 0..40 {
            let b = Mat::from_fn(2, 2, |_, _| rat(rng.below(4) as i64 - 1));
            let direct = b.is_nonnegative() && (-&a.commutator(&b).unwrap()).is_nonnegative();
            assert_eq!(spec.contains(&b).unwrap(), direct, "B =\n{b}");
        }
    }

    #[test]
    fn doubly_stochastic_multiple_is_in_the_cone_of_all_ones() {
        let a = all_ones(3);
        let spec = supercomm_spec(&a, Side::Left).unwrap();
        let third = crate::ratio(1, 3);
        let b = Mat::from_fn(3, 3, |_, _| third.clone());
        assert!(spec.contains(&b).unwrap());
        // A non-doubly-stochastic positive matrix is outside.
        let c = Mat::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(!spec.contains(&c).unwrap());
    }

    #[test]
    fn lp_examples_from_the_contract() {
        // Objective B_11 over the cone of the identity: reaches the cap.
        let spec = supercomm_spec(&Mat::identity(2), Side::Left).unwrap();
        let mut obj = vec![rat(0); 4];
        obj[0] = rat(1);
        assert_eq!(lp_max(&obj, &spec, &rat(1)).unwrap(), rat(1));
        // Objective B_21 over the cone of diag(2,1): forced zero.
        let spec = supercomm_spec(&Mat::diagonal(&[rat(2), rat(1)]), Side::Left).unwrap();
        let mut obj = vec![rat(0); 4];
        obj[2] = rat(1);
        assert_eq!(lp_max(&obj, &spec, &rat(1)).unwrap(), rat(0));
        // Zero objective.
        assert_eq!(lp_max(&vec![rat(0); 4], &spec, &rat(1)).unwrap(), rat(0));
    }

    #[test]
    fn span_of_decreasing_diagonal_is_upper_triangular() {
        let a = Mat::diagonal(&[rat(3), rat(2), rat(1)]);
        let spec = supercomm_spec(&a, Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        assert_eq!(span.dim, 6);
        // The span basis consists of upper triangular matrices and spans
        // all of them.
        let mut builder = SpanBuilder::new(9);
        for b in &span.span_basis {
            for r in 0..3 {
                for c in 0..r {
                    assert!(b.at(r, c).is_zero(), "lower entry in span basis");
                }
            }
            builder.insert(&b.vectorize());
        }
        for i in 0..3 {
            for j in i..3 {
                assert!(builder.contains(&Mat::unit(3, i, j).vectorize()));
            }
        }
        // Interior point: strictly positive on the upper triangle, zero
        // below, strictly positive commutator entries where applicable.
        for r in 0..3 {
            for c in 0..3 {
                if r <= c {
                    assert!(span.interior_point.at(r, c).is_positive());
                } else {
                    assert!(span.interior_point.at(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn span_of_identity_cone_is_everything() {
        let spec = supercomm_spec(&Mat::identity(3), Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        assert_eq!(span.dim, 9);
        assert!(Mat::from_fn(3, 3, |r, c| span.interior_point.at(r, c).clone()).is_nonnegative());
        for r in 0..3 {
            for c in 0..3 {
                assert!(span.interior_point.at(r, c).is_positive());
            }
        }
    }

    #[test]
    fn span_of_all_ones_is_the_doubly_stochastic_span() {
        let spec = supercomm_spec(&all_ones(3), Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        assert_eq!(span.dim, 5);
        // Implicit equalities are exactly the commutator functionals.
        assert_eq!(span.implicit_equalities, (9..18).collect::<Vec<_>>());
        // The interior point has equal row and column sums.
        let p = &span.interior_point;
        let row_sum = |r: usize| (0..3).map(|c| p.at(r, c).clone()).sum::<Rat>();
        let col_sum = |c: usize| (0..3).map(|r| p.at(r, c).clone()).sum::<Rat>();
        for k in 1..3 {
            assert_eq!(row_sum(k), row_sum(0));
            assert_eq!(col_sum(k), row_sum(0));
        }
    }

    #[test]
    fn interior_point_certificates() {
        for a in [
            Mat::diagonal(&[rat(1), rat(4), rat(2)]),
            all_ones(3),
            Mat::identity(2),
        ] {
            let spec = supercomm_spec(&a, Side::Left).unwrap();
            let span = cone_span(&spec).unwrap();
            for (idx, f) in spec.constraints.iter().enumerate() {
                let v: Rat = f
                    .iter()
                    .zip(span.interior_point.vectorize().iter())
                    .map(|(c, x)| c * x)
                    .sum();
                if span.implicit_equalities.contains(&idx) {
                    assert!(v.is_zero(), "implicit equality must bind");
                } else {
                    assert!(v.is_positive(), "non-implicit constraint must be strict");
                }
            }
        }
    }

    #[test]
    fn lin_equals_alg_for_cone_spans() {
        for a in [
            Mat::diagonal(&[rat(3), rat(2), rat(1)]),
            all_ones(3),
            all_ones(2),
        ] {
            let spec = supercomm_spec(&a, Side::Left).unwrap();
            let span = cone_span(&spec).unwrap();
            let report = verify_lin_eq_alg(&span).unwrap();
            assert!(
                report.pass,
                "span of a multiplicative cone must be an algebra"
            );
        }
    }

    #[test]
    fn adversarial_non_multiplicative_span_fails_with_witness() {
        // span{E_12 + E_21, E_11} is not closed under multiplication.
        let fake = ConeSpan {
            n: 2,
            implicit_equalities: vec![],
            span_basis: vec![
                Mat::from_int_rows(&[vec![0, 1], vec![1, 0]]),
                Mat::unit(2, 0, 0),
            ],
            dim: 2,
            interior_point: Mat::zeros(2, 2),
        };
        let report = verify_lin_eq_alg(&fake).unwrap();
        assert!(!report.pass);
        assert!(report.witness.is_some());
    }

    #[test]
    fn dimension_table_for_permuted_distinct_diagonal() {
        let a = Mat::diagonal(&[rat(2), rat(4), rat(1)]);
        let report = supercomm_dimension_table(&a).unwrap();
        assert!(report.pass);
        assert_eq!(report.dim, Some(6));
        assert_eq!(
            report.details["distinct_eigenvalues"],
            serde_json::json!(true)
        );
        assert_eq!(report.details["triangularizable"], serde_json::json!(true));
    }

    #[test]
    fn dimension_table_for_all_ones_reports_hypothesis_not_met() {
        let report = supercomm_dimension_table(&all_ones(3)).unwrap();
        assert!(report.pass, "no hypothesis, no assertion");
        assert_eq!(report.dim, Some(5));
        assert_eq!(
            report.details["distinct_eigenvalues"],
            serde_json::json!(false)
        );
        assert_eq!(report.details["triangularizable"], serde_json::json!(false));
        assert_eq!(
            report.details["bound_check"],
            serde_json::json!("hypothesis not met")
        );
    }

    /// Independent oracle at n = 2: the span dimension of the cone via
    /// brute-force extreme-ray enumeration. Every extreme ray of a
    /// pointed polyhedral cone has an active set of rank 3 (ambient 4),
    /// so scanning all 3-subsets of the 8 functionals finds them all; the
    /// cone's span is the span of its rays.
    fn span_dim_by_double_description(spec: &ConeSpec) -> usize {
        let n2 = 4;
        let cons = &spec.constraints;
        let mut rays: Vec<Vec<Rat>> = Vec::new();
        let k = cons.len();
        for a in 0..k {
            for b in (a + 1)..k {
                for c in (b + 1)..k {
                    let rows = vec![cons[a].clone(), cons[b].clone(), cons[c].clone()];
                    let kernel = nullspace(&rows, n2);
                    if kernel.len() != 1 {
                        continue;
                    }
                    for candidate in [
                        kernel[0].clone(),
                        kernel[0].iter().map(|x| -x.clone()).collect(),
                    ] {
                        let feasible = cons.iter().all(|f| {
                            let v: Rat = f.iter().zip(candidate.iter()).map(|(c, x)| c * x).sum();
                            !v.is_negative()
                        });
                        if feasible {
                            rays.push(candidate);
                            break;
                        }
                    }
                }
            }
        }
        let mut builder = SpanBuilder::new(n2);
        for ray in &rays {
            if let Inserted::Added { .. } = builder.insert(ray) {}
        }
        builder.rank()
    }

    #[test]
    fn cone_span_matches_extreme_ray_enumeration_at_n2() {
        let mut rng = crate::rng::SplitMix64::new(2024);
        for trial in 0..20 {
            let a = Mat::from_fn(2, 2, |_, _| rat(rng.below(4) as i64));
            let spec = supercomm_spec(&a, Side::Left).unwrap();
            let span = cone_span(&spec).unwrap();
            let oracle = span_dim_by_double_description(&spec);
            assert_eq!(span.dim, oracle, "trial {trial}, A =\n{a}");
        }
    }

    #[test]
    fn doubly_stochastic_span_dimension_formula() {
        for n in 2..=4usize {
            let spec = supercomm_spec(&all_ones(n), Side::Left).unwrap();
            let span = cone_span(&spec).unwrap();
            assert_eq!(span.dim, (n - 1) * (n - 1) + 1, "n = {n}");
        }
    }
}


#[cfg(test)]
mod diagonal_commutant {
    use super::*;
    use crate::charpoly::poly_eval_mat;
    use crate::spanalg::algebra_closure;
    use crate::Poly;

    #[test]
    fn algebra_of_diag_and_jordan_block_is_the_full_upper_triangulars() {
        // For a positive diagonal with strictly decreasing entries, the
        // span of the super left-commutant coincides with the algebra
        // generated by the diagonal and the nilpotent Jordan block.
        let n = 3;
        let a = Mat::diagonal(&[rat(3), rat(2), rat(1)]);
        let alg = algebra_closure(n, &[a.clone(), Mat::jordan_nilpotent(n)], true).unwrap();
        assert_eq!(alg.dim(), 6);
        let spec = supercomm_spec(&a, Side::Left).unwrap();
        let span = cone_span(&spec).unwrap();
        assert_eq!(span.dim, alg.dim());
        // Lagrange interpolation picks out each diagonal unit from A:
        // p(3) = 1, p(2) = p(1) = 0 gives p(A) = E_11.
        let p = Poly::from_ints(&[2, -3, 1]).scale(&crate::ratio(1, 2));
        assert_eq!(poly_eval_mat(&p, &a).unwrap(), Mat::unit(n, 0, 0));
        // The Jordan block is itself a member of the cone.
        assert!(spec.contains(&Mat::jordan_nilpotent(n)).unwrap());
    }
}
