use super::poly::Polynomial;
use super::scalar::Scalar;
use super::series::TruncatedSeries;
use crate::error::MolienError;

/// Rational fraction with the canonical denominator `(1-t)^a (1-t^2)^b`.
///
/// General denominators are rejected by construction: the two factors above
/// are the only ones the Molien computations ever need.
#[derive(Clone, Debug)]
pub struct RationalFraction<C: Scalar> {
    numerator: Polynomial<C>,
    exp_linear: u32,
    exp_quadratic: u32,
}

impl<C: Scalar> RationalFraction<C> {
    /// Canonicalizing constructor: divides out every common factor of
    /// (1-t) and (1-t^2) shared by numerator and denominator.
    pub fn new(numerator: Polynomial<C>, exp_linear: u32, exp_quadratic: u32) -> Self {
        let mut f = Self::new_unreduced(numerator, exp_linear, exp_quadratic);
        f.canonicalize();
        f
    }

    /// Constructor that keeps the given presentation as-is.
    pub fn new_unreduced(numerator: Polynomial<C>, exp_linear: u32, exp_quadratic: u32) -> Self {
        RationalFraction {
            numerator,
            exp_linear,
            exp_quadratic,
        }
    }

    pub fn zero() -> Self {
        Self::new_unreduced(Polynomial::zero(), 0, 0)
    }

    pub fn numerator(&self) -> &Polynomial<C> {
        &self.numerator
    }

    pub fn exp_linear(&self) -> u32 {
        self.exp_linear
    }

    pub fn exp_quadratic(&self) -> u32 {
        self.exp_quadratic
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.exp_linear = 0;
            self.exp_quadratic = 0;
            return;
        }
        let quad = Polynomial::one_minus_t_sq();
        while self.exp_quadratic > 0 {
            match self.numerator.exact_div(&quad) {
                Some(q) => {
                    self.numerator = q;
                    self.exp_quadratic -= 1;
                }
                None => break,
            }
        }
        let lin = Polynomial::one_minus_t();
        while self.exp_linear > 0 {
            match self.numerator.exact_div(&lin) {
                Some(q) => {
                    self.numerator = q;
                    self.exp_linear -= 1;
                }
                None => break,
            }
        }
    }

    /// Exact sum over the least common denominator, then canonicalized.
    pub fn add(&self, other: &Self) -> Self {
        let a = self.exp_linear.max(other.exp_linear);
        let b = self.exp_quadratic.max(other.exp_quadratic);
        let lift = |f: &Self| -> Polynomial<C> {
            let lin = Polynomial::one_minus_t().pow(a - f.exp_linear);
            let quad = Polynomial::one_minus_t_sq().pow(b - f.exp_quadratic);
            &(&f.numerator * &lin) * &quad
        };
        let num = &lift(self) + &lift(other);
        Self::new(num, a, b)
    }

    /// Divide by (1-t)^k (exactly, at the denominator level).
    pub fn div_linear_pow(&self, k: u32) -> Self {
        Self::new(
            self.numerator.clone(),
            self.exp_linear + k,
            self.exp_quadratic,
        )
    }

    /// Equality as rational functions, decided by cross-multiplication.
    pub fn equivalent(&self, other: &Self) -> bool {
        let a = self.exp_linear.max(other.exp_linear);
        let b = self.exp_quadratic.max(other.exp_quadratic);
        let lift = |f: &Self| -> Polynomial<C> {
            let lin = Polynomial::one_minus_t().pow(a - f.exp_linear);
            let quad = Polynomial::one_minus_t_sq().pow(b - f.exp_quadratic);
            &(&f.numerator * &lin) * &quad
        };
        lift(self) == lift(other)
    }

    /// Expansion as a truncated power series: long division of the numerator
    /// by the denominator expanded as geometric series.
    pub fn series(&self, order: usize) -> TruncatedSeries<C> {
        let mut s = TruncatedSeries::from_poly(&self.numerator, order);
        if self.exp_linear > 0 {
            let geo = TruncatedSeries::from_poly(
                &Polynomial::from_terms((0..=order).map(|d| (d, C::one()))),
                order,
            );
            for _ in 0..self.exp_linear {
                s = s.mul(&geo);
            }
        }
        if self.exp_quadratic > 0 {
            let geo2 = TruncatedSeries::from_poly(
                &Polynomial::from_terms((0..=order / 2).map(|j| (2 * j, C::one()))),
                order,
            );
            for _ in 0..self.exp_quadratic {
                s = s.mul(&geo2);
            }
        }
        s
    }

    /// Re-expand over the denominator `(1-t^2)^e`, converting every (1-t)
    /// factor through (1-t^2) = (1-t)(1+t). Used to match the unreduced
    /// presentations printed in the reference tables.
    pub fn present_over_quadratic(&self, e: u32) -> Result<Polynomial<C>, MolienError> {
        let one_plus_t = Polynomial::from_terms([(0, C::one()), (1, C::one())]);
        let num = &self.numerator * &one_plus_t.pow(self.exp_linear);
        let b = self.exp_quadratic + self.exp_linear;
        if e < b {
            return Err(MolienError::NotPresentable {
                requested: e,
                reason: format!("canonical denominator already has exponent {b}"),
            });
        }
        Ok(&num * &Polynomial::one_minus_t_sq().pow(e - b))
    }

    /// Evaluate at a scalar value of t.
    pub fn eval(&self, t: &C) -> C {
        let one = C::one();
        let lin = one.clone() - t.clone();
        let quad = one - t.clone() * t.clone();
        let mut den = C::one();
        for _ in 0..self.exp_linear {
            den = den * lin.clone();
        }
        for _ in 0..self.exp_quadratic {
            den = den * quad.clone();
        }
        self.numerator.eval(t) / den
    }
}

impl<C: Scalar> PartialEq for RationalFraction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl RationalFraction<crate::Rat> {
    pub fn eval_f64(&self, t: f64) -> f64 {
        let f: RationalFraction<f64> = RationalFraction {
            numerator: self.numerator.to_f64_poly(),
            exp_linear: self.exp_linear,
            exp_quadratic: self.exp_quadratic,
        };
        f.eval(&t)
    }
}
