//! Incremental exact row reduction with coordinate certificates.
//!
//! [`SpanBuilder`] maintains a reduced echelon basis for the span of the
//! vectors inserted so far, together with bookkeeping that expresses each
//! echelon row as an exact combination of the *accepted* input vectors.
//! That is what lets every membership answer come with coordinates in the
//! caller's own basis (word-certified algebra elements, cone generators),
//! not just a yes/no.
//!
//! Pivots are always the leftmost nonzero position, ties resolved by
//! insertion order, so ranks, bases and coordinates are deterministic.

use crate::mat::Matrix;
use crate::{Error, Scalar};

struct EchelonRow<T> {
    vec: Vec<T>,
    /// Coefficients over the accepted input vectors: `vec = sum combo[k] * input_k`.
    combo: Vec<T>,
    pivot: usize,
}

/// Exact span of a growing family of vectors in a fixed ambient space.
pub struct SpanBuilder<T> {
    ambient: usize,
    rows: Vec<EchelonRow<T>>, // sorted by pivot column
    accepted: usize,
}

/// Result of [`SpanBuilder::insert`].
pub enum Inserted<T> {
    /// The vector enlarged the span and became accepted input number `index`.
    Added { index: usize },
    /// The vector was already in the span; `coords` expresses it over the
    /// accepted inputs.
    InSpan { coords: Vec<T> },
}

impl<T: Scalar> SpanBuilder<T> {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reduces `v` against the current echelon rows. Returns the residual
    /// and the coefficients of the reduction over accepted inputs.
    fn reduce(&self, v: &[T]) -> (Vec<T>, Vec<T>) {
        let mut residual = v.to_vec();
        let mut coords = vec![T::zero(); self.accepted];
        for row in &self.rows {
            let factor = residual[row.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, e) in residual.iter_mut().zip(row.vec.iter()) {
                *r = r.clone() - factor.clone() * e.clone();
            }
            for (c, k) in coords.iter_mut().zip(row.combo.iter()) {
                *c = c.clone() + factor.clone() * k.clone();
            }
        }
        (residual, coords)
    }

    /// Inserts a vector, enlarging the span when independent.
    pub fn insert(&mut self, v: &[T]) -> Inserted<T> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let (residual, mut coords) = self.reduce(v);
        let pivot = match residual.iter().position(|x| !x.is_zero()) {
            None => return Inserted::InSpan { coords },
            Some(p) => p,
        };

        // v = residual + sum coords[k] * input_k, so as an accepted input
        // the new echelon row is (v - sum coords[k] input_k) / residual[pivot].
        let index = self.accepted;
        self.accepted += 1;
        let inv = T::one() / residual[pivot].clone();
        let vec: Vec<T> = residual.iter().map(|x| x.clone() * inv.clone()).collect();
        let mut combo: Vec<T> = coords.drain(..).map(|c| -c * inv.clone()).collect();
        combo.push(inv);
        for row in &mut self.rows {
            row.combo.push(T::zero());
        }

        // Keep the basis fully reduced: clear the new pivot column above
        // and below.
        let new_row = EchelonRow { vec, combo, pivot };
        for row in &mut self.rows {
            let factor = row.vec[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, e) in row.vec.iter_mut().zip(new_row.vec.iter()) {
                *r = r.clone() - factor.clone() * e.clone();
            }
            for (c, k) in row.combo.iter_mut().zip(new_row.combo.iter()) {
                *c = c.clone() - factor.clone() * k.clone();
            }
        }
        let pos = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(pos, new_row);
        Inserted::Added { index }
    }

    /// Exact coordinates of `v` over the accepted inputs, or `None` if
    /// `v` is outside the span. Does not modify the span.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let (residual, coords) = self.reduce(v);
        residual.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    /// The reduced echelon basis vectors, ordered by pivot column.
    pub fn echelon_basis(&self) -> Vec<Vec<T>> {
        self.rows.iter().map(|r| r.vec.clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot).collect()
    }
}

/// Output of [`rref_matrices`]: echelon basis of the span of a family of
/// equal-shaped matrices, its rank, and the coordinates of every input in
/// that echelon basis.
pub struct MatrixSpan<T> {
    pub basis: Vec<Matrix<T>>,
    pub rank: usize,
    pub coords: Vec<Vec<T>>,
}

/// Row-reduces a family of equal-shaped matrices (vectorized row-major).
pub fn rref_matrices<T: Scalar>(mats: &[Matrix<T>]) -> Result<MatrixSpan<T>, Error> {
    let Some(first) = mats.first() else {
        return Ok(MatrixSpan {
            basis: Vec::new(),
            rank: 0,
            coords: Vec::new(),
        });
    };
    let (rows, cols) = first.shape();
    let mut builder = SpanBuilder::new(rows * cols);
    for m in mats {
        if m.shape() != (rows, cols) {
            return Err(Error::shape("all matrices in a span must have equal shape"));
        }
        builder.insert(&m.vectorize());
    }
    let basis = builder
        .echelon_basis()
        .into_iter()
        .map(|v| Matrix::from_vec(rows, cols, v).expect("echelon vector has ambient length"))
        .collect();
    let rank = builder.rank();
    let coords = mats
        .iter()
        .map(|m| in_echelon_coords(&builder, &m.vectorize()))
        .collect();
    Ok(MatrixSpan {
        basis,
        rank,
        coords,
    })
}

/// Coordinates of an in-span vector over the echelon basis itself (not the
/// accepted inputs): just the entries at the pivot columns.
fn in_echelon_coords<T: Scalar>(builder: &SpanBuilder<T>, v: &[T]) -> Vec<T> {
    builder.pivots().iter().map(|&p| v[p].clone()).collect()
}

/// Basis of the common kernel of a set of linear functionals on an
/// `ambient`-dimensional space. Functionals are given as coefficient rows;
/// the basis is the canonical free-column one, deterministic for fixed
/// input order.
pub fn nullspace<T: Scalar>(functionals: &[Vec<T>], ambient: usize) -> Vec<Vec<T>> {
    let mut builder = SpanBuilder::new(ambient);
    for f in functionals {
        assert_eq!(f.len(), ambient, "functional arity mismatch");
        builder.insert(f);
    }
    let pivots = builder.pivots();
    let rows = builder.echelon_basis();
    let mut basis = Vec::new();
    for j in 0..ambient {
        if pivots.contains(&j) {
            continue;
        }
        let mut v = vec![T::zero(); ambient];
        v[j] = T::one();
        for (row, &p) in rows.iter().zip(pivots.iter()) {
            v[p] = -row[j].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Mat, Rat};

    #[test]
    fn zero_matrix_spans_nothing() {
        let span = rref_matrices(&[Mat::zeros(2, 2)]).unwrap();
        assert_eq!(span.rank, 0);
        assert!(span.basis.is_empty());
    }

    #[test]
    fn even_example_n2_words_span_all_of_m2() {
        let e = Mat::from_int_rows(&[vec![1, 1], vec![0, 0]]);
        let f = Mat::from_int_rows(&[vec![1, 0], vec![1, 0]]);
        let ef = e.checked_mul(&f).unwrap();
        let span = rref_matrices(&[Mat::identity(2), e, f, ef]).unwrap();
        assert_eq!(span.rank, 4);
    }

    #[test]
    fn duplicates_are_discarded() {
        let e11 = Mat::unit(2, 0, 0);
        let e12 = Mat::unit(2, 0, 1);
        let span = rref_matrices(&[e11.clone(), e11, e12]).unwrap();
        assert_eq!(span.rank, 2);
    }

    #[test]
    fn reducing_a_computed_basis_is_idempotent() {
        let mats = vec![
            Mat::from_int_rows(&[vec![1, 2], vec![3, 4]]),
            Mat::from_int_rows(&[vec![1, 0], vec![0, 1]]),
            Mat::from_int_rows(&[vec![2, 2], vec![3, 5]]),
            Mat::from_int_rows(&[vec![0, 1], vec![1, 0]]),
        ];
        let first = rref_matrices(&mats).unwrap();
        let again = rref_matrices(&first.basis).unwrap();
        assert_eq!(first.rank, again.rank);
        for (a, b) in first.basis.iter().zip(again.basis.iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn insert_reports_exact_coordinates() {
        let mut b: SpanBuilder<Rat> = SpanBuilder::new(3);
        let v1 = vec![rat(1), rat(2), rat(0)];
        let v2 = vec![rat(0), rat(1), rat(1)];
        assert!(matches!(b.insert(&v1), Inserted::Added { index: 0 }));
        assert!(matches!(b.insert(&v2), Inserted::Added { index: 1 }));
        // 2*v1 - 3*v2
        let w = vec![rat(2), rat(1), rat(-3)];
        match b.insert(&w) {
            Inserted::InSpan { coords } => assert_eq!(coords, vec![rat(2), rat(-3)]),
            _ => panic!("w should be in the span"),
        }
        assert!(b.coordinates(&[rat(0), rat(0), rat(1)]).is_none());
    }

    #[test]
    fn rref_coords_reconstruct_every_input() {
        let mats = vec![
            Mat::from_int_rows(&[vec![1, 2], vec![3, 4]]),
            Mat::from_int_rows(&[vec![0, 1], vec![1, 0]]),
            Mat::from_int_rows(&[vec![1, 3], vec![4, 4]]),
            Mat::from_int_rows(&[vec![2, 4], vec![6, 8]]),
        ];
        let span = rref_matrices(&mats).unwrap();
        assert_eq!(span.coords.len(), mats.len());
        for (input, coords) in mats.iter().zip(span.coords.iter()) {
            assert_eq!(coords.len(), span.rank);
            let mut rebuilt = Mat::zeros(2, 2);
            for (c, b) in coords.iter().zip(span.basis.iter()) {
                rebuilt = rebuilt.checked_add(&b.scale(c)).unwrap();
            }
            assert_eq!(&rebuilt, input);
        }
    }

    #[test]
    fn nullspace_vectors_annihilate_functionals() {
        // x1 + x2 = 0 and x3 = 0 in dimension 4
        let f1 = vec![rat(1), rat(1), rat(0), rat(0)];
        let f2 = vec![rat(0), rat(0), rat(1), rat(0)];
        let ns = nullspace(&[f1.clone(), f2.clone()], 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for f in [&f1, &f2] {
                let dot: Rat = f.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
                assert!(dot == rat(0));
            }
        }
    }
}
