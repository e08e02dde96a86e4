use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

/// Coefficient field for the polynomial, fraction and series types.
///
/// Satisfied by `num::BigRational` (the exact instantiation used everywhere
/// in the symbolic pipeline) and by `f64` (used when evaluating symbolic
/// results against the floating-point quadrature oracle).
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> + Div<Output = T>
{
}
