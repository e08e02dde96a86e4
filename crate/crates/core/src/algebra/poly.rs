use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::error::MolienError;

/// Sparse univariate polynomial: exponent -> nonzero coefficient.
///
/// The zero polynomial is the empty map; its degree is `None` (the "minus
/// infinity" sentinel).
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<C: Scalar> {
    coeffs: BTreeMap<usize, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn monomial(exp: usize, coeff: C) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Polynomial { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// 1 - t
    pub fn one_minus_t() -> Self {
        Self::from_terms([(0, C::one()), (1, -C::one())])
    }

    /// 1 - t^2
    pub fn one_minus_t_sq() -> Self {
        Self::from_terms([(0, C::one()), (2, -C::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exp: usize) -> C {
        self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &C)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, exp: usize, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, coeff);
            }
            Some(existing) => {
                let sum = existing + coeff;
                if !sum.is_zero() {
                    self.coeffs.insert(exp, sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (*e, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by t^k.
    pub fn shift_up(&self, k: usize) -> Self {
        Polynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (e + k, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &C) -> C {
        // Sparse Horner over exponent gaps.
        let mut acc = C::zero();
        let mut prev_exp = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(p) = prev_exp {
                let gap = p - e;
                for _ in 0..gap {
                    acc = acc * x.clone();
                }
            }
            acc = acc + c.clone();
            prev_exp = Some(*e);
        }
        if let Some(p) = prev_exp {
            for _ in 0..p {
                acc = acc * x.clone();
            }
        }
        acc
    }

    pub fn map_coeffs<D: Scalar, F: Fn(&C) -> D>(&self, f: F) -> Polynomial<D> {
        Polynomial::from_terms(self.coeffs.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Exact division: returns the quotient iff `self = q * divisor` with zero
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let d_deg = divisor.degree()?; // division by zero is never exact
        let d_lead = divisor.coeff(d_deg);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                return None;
            }
            let factor = rem.coeff(r_deg) / d_lead.clone();
            let q_term = Self::monomial(r_deg - d_deg, factor);
            rem = &rem - &(&q_term * divisor);
            quot = &quot + &q_term;
        }
        Some(quot)
    }

    /// Euclidean division: `self = quotient * divisor + remainder` with
    /// deg(remainder) < deg(divisor). Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.coeff(d_deg);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.coeff(r_deg) / d_lead.clone();
            let q_term = Self::monomial(r_deg - d_deg, factor);
            rem = &rem - &(&q_term * divisor);
            quot = &quot + &q_term;
        }
        (quot, rem)
    }

    /// One leading-term cancellation step of the long division of `self` by
    /// (1 - t^2). Writes `self = (1-t^2) * q_term + rest` where `q_term`
    /// cancels the current highest-degree term. Returns `None` when the
    /// leading term has degree < 2 and no further step is possible.
    fn div_one_minus_t_sq_step(&self) -> Option<(Self, Self)> {
        let deg = self.degree()?;
        if deg < 2 {
            return None;
        }
        let lead = self.coeff(deg);
        // lead(1 - t^2) = -t^2, so the quotient term is -lead * t^(deg-2).
        let q_term = Self::monomial(deg - 2, -lead.clone());
        let mut rest = self.clone();
        rest.add_term(deg, -lead.clone());
        rest.add_term(deg - 2, lead);
        Some((q_term, rest))
    }

    /// Long division of `self` by (1 - t^2), cancelling one leading term at a
    /// time until `stop(rest)` holds. The stopping rule is owned by the
    /// caller. Returns `(quotient, rest, steps)` with the exact identity
    /// `self = (1-t^2) * quotient + rest` and `steps` counting cancelled
    /// leading terms.
    pub fn div_one_minus_t_sq_until<F>(&self, stop: F) -> Result<(Self, Self, usize), MolienError>
    where
        F: Fn(&Self) -> bool,
    {
        let budget = self.degree().map_or(0, |d| d + 1);
        let mut quot = Self::zero();
        let mut rest = self.clone();
        let mut steps = 0usize;
        while !stop(&rest) {
            if steps > budget {
                return Err(MolienError::DivisionStalled { steps });
            }
            match rest.div_one_minus_t_sq_step() {
                Some((q_term, new_rest)) => {
                    quot = &quot + &q_term;
                    rest = new_rest;
                    steps += 1;
                }
                None => return Err(MolienError::DivisionStalled { steps }),
            }
        }
        Ok((quot, rest, steps))
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (ea, ca) in self.coeffs.iter() {
            for (eb, cb) in rhs.coeffs.iter() {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<C: Scalar> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Scalar> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial<crate::Rat> {
    /// All coefficients >= 0.
    pub fn is_nonnegative(&self) -> bool {
        use num_traits::Signed;
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Sum of all coefficients, i.e. the value at t = 1.
    pub fn coeff_sum(&self) -> crate::Rat {
        let mut acc = crate::Rat::zero();
        for c in self.coeffs.values() {
            acc += c.clone();
        }
        acc
    }

    pub fn to_f64_poly(&self) -> Polynomial<f64> {
        use num_traits::ToPrimitive;
        self.map_coeffs(|c| c.to_f64().unwrap())
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.degree() {
            None => a,
            Some(d) => {
                let lead = a.coeff(d);
                a.scale(&(crate::Rat::one() / lead))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::{int, rat, Poly};

    fn p(terms: &[(usize, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn degree_and_min_exp() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p(&[(0, 1), (3, -2)]).degree(), Some(3));
        assert_eq!(p(&[(2, 1), (5, 1)]).min_exp(), Some(2));
    }

    #[test]
    fn cancelling_terms_vanish() {
        let mut q = p(&[(2, 3)]);
        q.add_term(2, int(-3));
        assert!(q.is_zero());
    }

    #[test]
    fn multiplication() {
        let a = Poly::one_minus_t();
        let b = Poly::from_terms([(0, int(1)), (1, int(1))]);
        assert_eq!(&a * &b, Poly::one_minus_t_sq());
    }

    #[test]
    fn exact_division() {
        let prod = &Poly::one_minus_t_sq() * &p(&[(0, 2), (3, 1)]);
        assert_eq!(
            prod.exact_div(&Poly::one_minus_t_sq()),
            Some(p(&[(0, 2), (3, 1)]))
        );
        assert_eq!(p(&[(0, 1), (1, 1)]).exact_div(&Poly::one_minus_t()), None);
    }

    #[test]
    fn div_rem_identity() {
        let a = p(&[(0, 3), (2, -1), (5, 4)]);
        let b = p(&[(0, 1), (2, 2)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &Poly::one_minus_t() * &p(&[(0, 1), (1, 1)]);
        let b = &Poly::one_minus_t() * &p(&[(0, 2), (2, 1)]);
        let g = a.gcd(&b);
        // Monic form of 1 - t is t - 1.
        assert_eq!(g, Poly::from_terms([(0, int(-1)), (1, int(1))]));
    }

    #[test]
    fn leading_term_division_identity() {
        // Each cancellation step preserves p = (1-t^2) q + r.
        let start = p(&[(2, 6), (3, 8), (5, -3), (6, -1)]);
        let (q, r, steps) = start
            .div_one_minus_t_sq_until(Poly::is_nonnegative)
            .unwrap();
        assert_eq!(&(&Poly::one_minus_t_sq() * &q) + &r, start);
        assert!(r.is_nonnegative());
        assert!(steps >= 1);
    }

    #[test]
    fn division_stalls_when_nonnegativity_is_unreachable() {
        // -t^4 divides down to a bare negative constant and can never
        // produce a nonnegative rest.
        let start = p(&[(4, -1)]);
        assert!(matches!(
            start.div_one_minus_t_sq_until(Poly::is_nonnegative),
            Err(crate::MolienError::DivisionStalled { .. })
        ));
    }

    #[test]
    fn single_division_step_quotient_sign() {
        // -t^4 = (1-t^2)(t^2) + (-t^2): the first quotient term is +t^2.
        let start = p(&[(4, -1)]);
        let stop = |rest: &Poly| rest.degree() == Some(2);
        let (q, r, steps) = start.div_one_minus_t_sq_until(stop).unwrap();
        assert_eq!(q, p(&[(2, 1)]));
        assert_eq!(r, p(&[(2, -1)]));
        assert_eq!(steps, 1);
    }

    #[test]
    fn eval_and_coeff_sum() {
        let q = p(&[(0, 1), (2, 3)]);
        assert_eq!(q.eval(&rat(1, 2)), rat(7, 4));
        assert_eq!(q.coeff_sum(), int(4));
    }

    #[test]
    fn nonnegativity_and_integrality() {
        assert!(p(&[(0, 1), (4, 2)]).is_nonnegative());
        assert!(!p(&[(0, 1), (4, -2)]).is_nonnegative());
        assert!(p(&[(1, 5)]).is_integral());
        assert!(!Poly::monomial(1, rat(1, 2)).is_integral());
    }
}
