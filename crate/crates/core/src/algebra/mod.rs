//! Exact univariate polynomial, rational-fraction and truncated-series
//! arithmetic. Everything here is generic over the coefficient field.

pub mod fraction;
pub mod poly;
pub mod scalar;
pub mod series;
