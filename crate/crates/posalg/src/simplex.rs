//! Exact primal simplex over the rationals for homogeneous cones.
//!
//! The one problem shape the crate needs: maximize a linear functional
//! over `{x >= 0 : Gx >= 0}` intersected with the cap `c.x <= cap`. The
//! origin is always feasible, so no phase-one is needed: with surplus
//! variables `s = Gx` and the cap slack `t` the starting basis is
//! `(s, t) = (0, cap)`. Entering and leaving variables follow Bland's
//! smallest-index rule, which rules out cycling in exact arithmetic; by
//! homogeneity the optimum is always `0` or `cap`.

use num_traits::{One, Signed, Zero};

use crate::{Error, Rat};

/// An optimum value together with a point attaining it.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub value: Rat,
    pub point: Vec<Rat>,
}

/// Maximizes `objective . x` over `{x >= 0 : row . x >= 0 for all rows}`
/// cut by `objective . x <= cap`, with `cap > 0`.
pub fn lp_max_homogeneous(
    n_vars: usize,
    rows: &[Vec<Rat>],
    objective: &[Rat],
    cap: &Rat,
) -> Result<LpSolution, Error> {
    if objective.len() != n_vars {
        return Err(Error::shape("objective arity mismatch"));
    }
    if rows.iter().any(|r| r.len() != n_vars) {
        return Err(Error::shape("constraint arity mismatch"));
    }
    if !cap.is_positive() {
        return Err(Error::domain("the cap must be positive"));
    }

    let m = rows.len() + 1;
    let total = n_vars + m;
    // Row i < rows.len():  -row_i . x + s_i = 0
    // Last row:            objective . x + t = cap
    let mut tableau: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = vec![Rat::zero(); m];
    for (i, row) in rows.iter().enumerate() {
        let mut t = vec![Rat::zero(); total];
        for (j, v) in row.iter().enumerate() {
            t[j] = -v.clone();
        }
        t[n_vars + i] = Rat::one();
        tableau.push(t);
    }
    let mut last = vec![Rat::zero(); total];
    for (j, v) in objective.iter().enumerate() {
        last[j] = v.clone();
    }
    last[total - 1] = Rat::one();
    tableau.push(last);
    rhs[m - 1] = cap.clone();

    let mut basis: Vec<usize> = (n_vars..total).collect();
    // Reduced costs; the initial basic variables all have zero cost.
    let mut reduced: Vec<Rat> = (0..total)
        .map(|j| {
            if j < n_vars {
                objective[j].clone()
            } else {
                Rat::zero()
            }
        })
        .collect();

    // Bland entering rule: smallest index with positive reduced cost.
    while let Some(entering) = (0..total).find(|&j| reduced[j].is_positive()) {
        // Ratio test; ties broken by the smallest basic variable index.
        let mut leaving: Option<(usize, Rat)> = None;
        for i in 0..m {
            if !tableau[i][entering].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &tableau[i][entering];
            match &leaving {
                None => leaving = Some((i, ratio)),
                Some((best_i, best)) => {
                    if ratio < *best || (ratio == *best && basis[i] < basis[*best_i]) {
                        leaving = Some((i, ratio));
                    }
                }
            }
        }
        let Some((pivot_row, _)) = leaving else {
            // The cap row bounds every improving direction, so this
            // cannot happen on well-formed input.
            return Err(Error::internal("unbounded homogeneous LP despite cap"));
        };

        // Pivot.
        let pivot = tableau[pivot_row][entering].clone();
        for v in tableau[pivot_row].iter_mut() {
            *v = &*v / &pivot;
        }
        rhs[pivot_row] = &rhs[pivot_row] / &pivot;
        for i in 0..m {
            if i == pivot_row || tableau[i][entering].is_zero() {
                continue;
            }
            let factor = tableau[i][entering].clone();
            for j in 0..total {
                let delta = &factor * &tableau[pivot_row][j];
                tableau[i][j] = &tableau[i][j] - &delta;
            }
            let delta = &factor * &rhs[pivot_row];
            rhs[i] = &rhs[i] - &delta;
        }
        let factor = reduced[entering].clone();
        for j in 0..total {
            let delta = &factor * &tableau[pivot_row][j];
            reduced[j] = &reduced[j] - &delta;
        }
        basis[pivot_row] = entering;
    }

    let mut point = vec![Rat::zero(); n_vars];
    for (i, &b) in basis.iter().enumerate() {
        if b < n_vars {
            point[b] = rhs[i].clone();
        }
    }
    let value: Rat = objective.iter().zip(point.iter()).map(|(c, x)| c * x).sum();
    Ok(LpSolution { value, point })
}
