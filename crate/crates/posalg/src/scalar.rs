use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

/// Field-like scalars the dense kernels are generic over.
///
/// The crate instantiates this with the exact rational type [`crate::Rat`];
/// `f32`/`f64` also satisfy the bound for quick floating-point experiments,
/// though every exactness guarantee documented in this crate assumes an
/// exact scalar.
pub trait Scalar: Num + Signed + PartialOrd + FromPrimitive + Clone + Debug + Display {
    /// Embeds a small integer into the scalar field.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer embeds into scalar field")
    }
}

impl<T> Scalar for T where T: Num + Signed + PartialOrd + FromPrimitive + Clone + Debug + Display {}
