use super::poly::Polynomial;
use super::scalar::Scalar;

/// Power series in t truncated at a fixed order: coefficients for t^0..t^D.
///
/// Binary operations truncate to the minimum of the two orders.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C: Scalar> {
    coeffs: Vec<C>,
}

impl<C: Scalar> TruncatedSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn from_poly(p: &Polynomial<C>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if e <= order {
                s.coeffs[e] = c.clone();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> C {
        self.coeffs.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, c: C) {
        if d < self.coeffs.len() {
            self.coeffs[d] = c;
        }
    }

    /// Truncate down to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for d in 0..=order {
            out.coeffs[d] = self.coeffs[d].clone() + other.coeffs[d].clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                let cur = out.coeffs[i + j].clone();
                out.coeffs[i + j] = cur + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    /// Multiply by t^k, dropping coefficients pushed past the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for d in 0..=order {
            if d >= k {
                out.coeffs[d] = self.coeffs[d - k].clone();
            }
        }
        out
    }

    /// True iff the two series agree on all coefficients up to the smaller
    /// of the two orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let order = self.order().min(other.order());
        (0..=order).all(|d| self.coeffs[d] == other.coeffs[d])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, Series};

    #[test]
    fn truncated_multiplication() {
        let a = Series::from_poly(&Polynomial::from_terms([(0, int(1)), (1, int(1))]), 3);
        let sq = a.mul(&a);
        for (d, c) in [1, 2, 1, 0].iter().enumerate() {
            assert_eq!(sq.coeff(d), int(*c));
        }
    }

    #[test]
    fn binary_operations_truncate_to_smaller_order() {
        let a = Series::zero(8);
        let b = Series::zero(3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn shift_drops_overflow() {
        let mut s = Series::zero(3);
        s.set_coeff(2, int(7));
        let t = s.shift_up(2);
        assert_eq!(t.coeff(2), int(0));
        assert!(t.coeffs().iter().all(|c| c == &int(0)));
    }

    #[test]
    fn agreement_on_common_prefix() {
        let mut a = Series::zero(5);
        let mut b = Series::zero(3);
        a.set_coeff(2, int(1));
        b.set_coeff(2, int(1));
        a.set_coeff(5, int(9));
        assert!(a.agrees_with(&b));
        b.set_coeff(3, int(1));
        assert!(!a.agrees_with(&b));
    }
}
