//! Structured random instance generation for the property-check harness.
//!
//! Uniform sampling of positive-commutator pairs or of the idempotent
//! variety is hopeless; instead each theorem gets a few structured
//! families that provably (or with high hit rate) satisfy its hypotheses,
//! plus exact rejection filters. Everything is driven by the pinned
//! splitmix64 stream, so instance sequences are reproducible.

use num_traits::Zero;

use crate::idempot::{classify_order, rank_one_idempotent, IdempotentPair};
use crate::lattice::null_ideal;
use crate::rng::SplitMix64;
use crate::supercone::{cone_span, supercomm_spec, Side};
use crate::{rat, Mat, Rat};

/// Dense nonnegative matrix with entries in `0..=max`.
pub fn nonneg_matrix(rng: &mut SplitMix64, n: usize, max: u64) -> Mat {
    Mat::from_fn(n, n, |_, _| rat(rng.below(max + 1) as i64))
}

/// Sparse nonnegative matrix: each entry is zero with the complementary
/// probability, else uniform in `1..=max`.
pub fn sparse_nonneg_matrix(rng: &mut SplitMix64, n: usize, max: u64, num: u64, den: u64) -> Mat {
    Mat::from_fn(n, n, |_, _| {
        if rng.chance(num, den) {
            rat(1 + rng.below(max) as i64)
        } else {
            rat(0)
        }
    })
}

/// Fisher-Yates shuffle of `0..n`.
pub fn random_permutation(rng: &mut SplitMix64, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        order.swap(i, j);
    }
    order
}

/// A positive pair with exactly nonnegative commutator: either a
/// permutation-conjugated strictly decreasing diagonal against a
/// conjugated upper triangular, or a nonnegative polynomial in a random
/// positive matrix (which commutes outright).
pub fn positive_commutator_pair(rng: &mut SplitMix64, n: usize) -> (Mat, Mat) {
    if rng.chance(1, 4) {
        let a = nonneg_matrix(rng, n, 3);
        let mut b = Mat::identity(n).scale(&rat(rng.below(3) as i64));
        let mut power = Mat::identity(n);
        for _ in 0..2 {
            power = power.checked_mul(&a).expect("square");
            b = b
                .checked_add(&power.scale(&rat(rng.below(3) as i64)))
                .expect("same shape");
        }
        debug_assert!(a.commutator(&b).expect("square").is_zero());
        return (a, b);
    }
    let order = random_permutation(rng, n);
    let base = 3u64;
    let diag: Vec<Rat> = (0..n)
        .map(|i| rat(((n - i) as u64 * base + rng.below(base)) as i64))
        .collect();
    let a = Mat::diagonal(&diag)
        .permute_symmetric(&order)
        .expect("square");
    let upper = Mat::from_fn(n, n, |r, c| {
        if r <= c && rng.chance(2, 3) {
            rat(rng.below(4) as i64)
        } else {
            rat(0)
        }
    });
    let b = upper.permute_symmetric(&order).expect("square");
    debug_assert!(a.commutator(&b).expect("square").is_nonnegative());
    (a, b)
}

/// Nonnegative integer matrix with distinct eigenvalues: a strictly
/// decreasing diagonal plus a sparse strictly upper triangular part,
/// conjugated by a random permutation, then filtered by the exact
/// squarefreeness test (which the triangular construction always passes).
pub fn distinct_eigenvalue_matrix(rng: &mut SplitMix64, n: usize, budget: usize) -> Option<Mat> {
    for _ in 0..budget {
        let order = random_permutation(rng, n);
        let m = Mat::from_fn(n, n, |r, c| {
            if r == c {
                rat((4 * (n - r) + 1) as i64)
            } else if r < c && rng.chance(1, 2) {
                rat(rng.below(3) as i64)
            } else {
                rat(0)
            }
        });
        let a = m.permute_symmetric(&order).expect("square");
        if crate::charpoly::has_distinct_eigenvalues(&a).expect("square") {
            return Some(a);
        }
    }
    None
}

/// Members of the super left-commutant of `a`, built as nonnegative
/// integer recombinations of known cone members: the identity, `a`
/// itself, and the relative-interior point of the cone (the cone is
/// closed under sums and products, so these stay inside).
pub fn supercone_members(rng: &mut SplitMix64, a: &Mat, count: usize) -> Vec<Mat> {
    let n = a.rows();
    let spec = supercomm_spec(a, Side::Left).expect("nonnegative square");
    let span = cone_span(&spec).expect("cone span");
    let interior = span.interior_point.clone();
    let mut pool = vec![Mat::identity(n), a.clone(), interior.clone()];
    if let Ok(p) = interior.checked_mul(a) {
        pool.push(p);
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut b = Mat::zeros(n, n);
        for m in &pool {
            let coeff = rat(rng.below(3) as i64);
            if !coeff.is_zero() {
                b = b.checked_add(&m.scale(&coeff)).expect("same shape");
            }
        }
        debug_assert!(spec.contains(&b).expect("shape"));
        out.push(b);
    }
    out
}

/// One random positive idempotent from the three structured families:
/// rank-one `u v^T / (v^T u)`, a 0/1 coordinate retraction, or a
/// permutation-conjugated block idempotent.
pub fn random_idempotent(rng: &mut SplitMix64, n: usize) -> Mat {
    match rng.below(3) {
        0 => {
            // Rank one with a forced common support index.
            let k = rng.below(n as u64) as usize;
            let mut u: Vec<Rat> = (0..n)
                .map(|_| {
                    if rng.chance(1, 2) {
                        rat(rng.below(3) as i64)
                    } else {
                        rat(0)
                    }
                })
                .collect();
            let mut v: Vec<Rat> = (0..n)
                .map(|_| {
                    if rng.chance(1, 2) {
                        rat(rng.below(3) as i64)
                    } else {
                        rat(0)
                    }
                })
                .collect();
            u[k] = rat(1 + rng.below(2) as i64);
            v[k] = rat(1 + rng.below(2) as i64);
            rank_one_idempotent(&u, &v).expect("pairing positive by construction")
        }
        1 => {
            // Retraction onto a nonempty fixed set.
            let mut fixed: Vec<usize> = (0..n).filter(|_| rng.chance(1, 2)).collect();
            if fixed.is_empty() {
                fixed.push(rng.below(n as u64) as usize);
            }
            let mut image = vec![0usize; n];
            for (j, target) in image.iter_mut().enumerate() {
                *target = if fixed.contains(&j) {
                    j
                } else {
                    fixed[rng.below(fixed.len() as u64) as usize]
                };
            }
            Mat::from_fn(n, n, |r, c| if r == image[c] { rat(1) } else { rat(0) })
        }
        _ => {
            // Block idempotent [[I, M], [0, 0]] or its column-form
            // transpose orientation, conjugated by a permutation.
            let r = 1 + rng.below(n as u64 - 1) as usize;
            let row_form = rng.chance(1, 2);
            let m = Mat::from_fn(n, n, |i, j| {
                let in_strip = if row_form {
                    i < r && j >= r
                } else {
                    i >= r && j < r
                };
                if i < r && j < r {
                    if i == j {
                        rat(1)
                    } else {
                        rat(0)
                    }
                } else if in_strip {
                    rat(rng.below(3) as i64)
                } else {
                    rat(0)
                }
            });
            let order = random_permutation(rng, n);
            m.permute_symmetric(&order).expect("square")
        }
    }
}

/// A comparable positive idempotent pair (EF >= FE or EF <= FE), found by
/// structured construction plus exact rejection. Besides plain rejection
/// over the idempotent families, two constructions always land: `F = E`,
/// and a retraction into the null ideal of `E`, which gives `EF = 0`.
pub fn comparable_idempotent_pair(
    rng: &mut SplitMix64,
    n: usize,
    budget: usize,
) -> Option<IdempotentPair> {
    for attempt in 0..budget {
        let e = random_idempotent(rng, n);
        let f = match attempt % 4 {
            0 | 1 => random_idempotent(rng, n),
            2 => e.clone(),
            _ => {
                // Retraction into N(E): rows of F live on zero columns of
                // E, so EF = 0 <= FE.
                let null = null_ideal(&e).expect("nonnegative").zero_based();
                if null.is_empty() {
                    e.clone()
                } else {
                    let mut image = vec![0usize; n];
                    for (j, target) in image.iter_mut().enumerate() {
                        *target = if null.contains(&j) {
                            j
                        } else {
                            null[rng.below(null.len() as u64) as usize]
                        };
                    }
                    Mat::from_fn(n, n, |r, c| if r == image[c] { rat(1) } else { rat(0) })
                }
            }
        };
        let order = classify_order(&e, &f).expect("same shape");
        if order.is_comparable() {
            return Some(IdempotentPair { e, f, order });
        }
    }
    None
}

/// An instance of the squared-commutator identity hypotheses: a positive
/// idempotent `E` and a positive `A` with `AE` and `EA` comparable.
pub fn key_identity_instance(rng: &mut SplitMix64, n: usize, budget: usize) -> Option<(Mat, Mat)> {
    for attempt in 0..budget {
        let e = random_idempotent(rng, n);
        let a = match attempt % 3 {
            0 => {
                // Nonnegative polynomial in E commutes with it.
                let mut a = Mat::identity(n).scale(&rat(rng.below(3) as i64));
                a = a
                    .checked_add(&e.scale(&rat(rng.below(4) as i64)))
                    .expect("same shape");
                a
            }
            1 => {
                // E plus noise supported on the zero columns of E.
                let null = null_ideal(&e).expect("nonnegative").zero_based();
                let mut a = e.clone();
                for _ in 0..(n.max(2)) {
                    if null.is_empty() {
                        break;
                    }
                    let r = rng.below(n as u64) as usize;
                    let c = null[rng.below(null.len() as u64) as usize];
                    let bump = &a.at(r, c).clone() + &rat(1 + rng.below(2) as i64);
                    a.set(r, c, bump);
                }
                a
            }
            _ => sparse_nonneg_matrix(rng, n, 3, 1, 2),
        };
        let ae = a.checked_mul(&e).expect("square");
        let ea = e.checked_mul(&a).expect("square");
        let ge = ae.entrywise_ge(&ea).expect("same shape");
        let le = ea.entrywise_ge(&ae).expect("same shape");
        if ge || le {
            return Some((e, a));
        }
    }
    None
}

/// Nonnegative matrix with no zero row (full range ideal).
pub fn no_zero_row_matrix(rng: &mut SplitMix64, n: usize) -> Mat {
    let mut a = sparse_nonneg_matrix(rng, n, 3, 1, 2);
    for r in 0..n {
        if (0..n).all(|c| a.at(r, c).is_zero()) {
            let c = rng.below(n as u64) as usize;
            a.set(r, c, rat(1 + rng.below(3) as i64));
        }
    }
    a
}

/// Conjugates a pair by one random permutation, preserving positivity,
/// idempotency and the commutator order.
pub fn conjugate_pair(rng: &mut SplitMix64, pair: &IdempotentPair) -> IdempotentPair {
    let n = pair.e.rows();
    let order = random_permutation(rng, n);
    let e = pair.e.permute_symmetric(&order).expect("square");
    let f = pair.f.permute_symmetric(&order).expect("square");
    IdempotentPair {
        e,
        f,
        order: pair.order,
    }
}
