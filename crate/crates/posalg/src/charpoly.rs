//! Characteristic and minimal polynomials, computed exactly.
//!
//! The characteristic polynomial uses the Faddeev-LeVerrier recurrence,
//! which only ever divides by the integers `1..n` and is therefore exact
//! over any field of characteristic zero. The minimal polynomial comes
//! from the first linear dependence among `I, A, A^2, ...`, and the
//! distinct-eigenvalue test is squarefreeness of the characteristic
//! polynomial via a gcd with its derivative: no eigenvalue is ever
//! extracted.

use crate::mat::Matrix;
use crate::poly::Polynomial;
use crate::span::{Inserted, SpanBuilder};
use crate::{Error, Scalar};

/// Exact characteristic polynomial `det(xI - A)`, monic of degree `n`.
pub fn char_poly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>, Error> {
    a.require_square("characteristic polynomial")?;
    let n = a.rows();
    let identity = Matrix::identity(n);
    let mut aux = identity.clone(); // M_1 = I
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut c = T::zero();
    for k in 1..=n {
        if k > 1 {
            aux = a.checked_mul(&aux)?.checked_add(&identity.scale(&c))?;
        }
        let t = a.checked_mul(&aux)?.trace()?;
        c = -t / T::from_int(k as i64);
        coeffs[n - k] = c.clone();
    }
    Ok(Polynomial::new(coeffs))
}

/// Monic minimal polynomial: the first linear dependence among the powers
/// `I, A, A^2, ...` of a square matrix.
pub fn minimal_poly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>, Error> {
    a.require_square("minimal polynomial")?;
    let n = a.rows();
    let mut span: SpanBuilder<T> = SpanBuilder::new(n * n);
    let mut power = Matrix::identity(n);
    for d in 0..=(n) {
        match span.insert(&power.vectorize()) {
            Inserted::Added { .. } => {}
            Inserted::InSpan { coords } => {
                // A^d = sum coords[j] A^j, so the minimal polynomial is
                // x^d - sum coords[j] x^j.
                let mut coeffs = vec![T::zero(); d + 1];
                coeffs[d] = T::one();
                for (j, c) in coords.into_iter().enumerate() {
                    coeffs[j] = -c;
                }
                return Ok(Polynomial::new(coeffs));
            }
        }
        power = power.checked_mul(a)?;
    }
    Err(Error::internal(
        "powers of an n x n matrix must become dependent by degree n",
    ))
}

/// True iff the characteristic polynomial is squarefree, i.e.
/// `gcd(p, p')` is constant. Over an exact scalar this decides whether
/// the eigenvalues (over the algebraic closure) are pairwise distinct.
pub fn has_distinct_eigenvalues<T: Scalar>(a: &Matrix<T>) -> Result<bool, Error> {
    let p = char_poly(a)?;
    Ok(p.gcd(&p.derivative()).is_constant())
}

/// Evaluates a polynomial at a square matrix.
pub fn poly_eval_mat<T: Scalar>(p: &Polynomial<T>, a: &Matrix<T>) -> Result<Matrix<T>, Error> {
    a.require_square("polynomial evaluation")?;
    let n = a.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc
            .checked_mul(a)?
            .checked_add(&Matrix::identity(n).scale(c))?;
    }
    Ok(acc)
}
