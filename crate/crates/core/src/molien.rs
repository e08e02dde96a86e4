//! Closed-form SO(2) and SO(3) Molien functions for N spatial vectors,
//! together with the published L-parametrized numerator families used as
//! independent fixtures.

use num::integer::binomial;

use crate::{Fraction, Int, Poly, Rat};

pub mod families;

/// Arguments of the SO(3) Molien function: number of vectors and target
/// angular momentum of the covariant representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MolienQuery {
    pub n_vectors: u32,
    pub target_l: u32,
}

impl MolienQuery {
    pub fn new(n_vectors: u32, target_l: u32) -> Self {
        assert!(n_vectors >= 1, "need at least one vector");
        MolienQuery {
            n_vectors,
            target_l,
        }
    }
}

/// (1/pi) * Integral_0^pi cos(n x) / (1 - 2 a cos x + a^2)^m dx as an exact
/// rational function of a, on the |a| < 1 branch:
///
///   a^(2m+n-2) / (1-a^2)^(2m-1) * sum_{k=0}^{m-1} C(m+n-1, k) C(2m-k-2, m-1)
///                                              * ((1-a^2)/a^2)^k
pub fn gr_integral(n: u32, m: u32) -> Fraction {
    assert!(m >= 1, "gr_integral needs m >= 1");
    let mut numerator = Poly::zero();
    let quad = Poly::one_minus_t_sq();
    for k in 0..m {
        let c1 = binomial(Int::from(m + n - 1), Int::from(k));
        let c2 = binomial(Int::from(2 * m - k - 2), Int::from(m - 1));
        let coeff = Rat::from_integer(c1 * c2);
        let exp = (2 * m + n - 2 - 2 * k) as usize;
        let term = Poly::monomial(exp, coeff);
        numerator = &numerator + &(&term * &quad.pow(k));
    }
    Fraction::new(numerator, 0, 2 * m - 1)
}

/// SO(2)-type Molien integral (1/pi) Int_0^pi cos(L w) / (1-2 t cos w + t^2)^N dw.
pub fn molien_so2(l: u32, n_vectors: u32) -> Fraction {
    gr_integral(l, n_vectors)
}

/// SO(3) Molien function for the (L)-covariants of N vectors:
///
///   g(N, L) = (1-t)^-N * [ g_SO2(L) - g_SO2(L+1) ]
///
/// Expanding the result as a series gives, at each degree d, the number of
/// linearly independent degree-d (L)-covariant multiplets.
pub fn molien_so3(q: MolienQuery) -> Fraction {
    let n = q.n_vectors;
    let a = molien_so2(q.target_l, n);
    let b = molien_so2(q.target_l + 1, n);
    let neg_b = Fraction::new_unreduced(-b.numerator(), b.exp_linear(), b.exp_quadratic());
    let diff = a.add(&neg_b);
    diff.div_linear_pow(n)
}

/// Character of the rotation through angle `omega` in the irrep (L):
/// sin((L + 1/2) w) / sin(w/2), with the limit 2L+1 at w = 0.
pub fn character(l: u32, omega: f64) -> f64 {
    if omega == 0.0 {
        return (2 * l + 1) as f64;
    }
    (((l as f64) + 0.5) * omega).sin() / (omega / 2.0).sin()
}

/// Denominator exponent of the presentation the decomposition algorithm
/// starts from: (1-t^2)^(3N-3) for N >= 2, (1-t^2)^1 for N = 1.
pub fn presentation_exponent(n_vectors: u32) -> u32 {
    if n_vectors == 1 {
        1
    } else {
        3 * n_vectors - 3
    }
}

/// Result of the (2L+1)-weighted sum-rule check.
#[derive(Clone, Debug)]
pub struct SumRuleReport {
    pub n_vectors: u32,
    pub order: usize,
    pub ok: bool,
    /// First degree where the weighted sum disagrees with 1/(1-t)^(3N).
    pub first_failing_degree: Option<usize>,
}

/// Checks Sum_{L=0}^{D} (2L+1) g(N, L) == 1/(1-t)^(3N) coefficient-wise up
/// to order D. Terms with L > D cannot contribute below degree D+1 because
/// the lowest series term of g(N, L) has degree >= L.
pub fn sum_rule_check(n_vectors: u32, order: usize) -> SumRuleReport {
    let mut lhs = crate::Series::zero(order);
    for l in 0..=order as u32 {
        let g = molien_so3(MolienQuery::new(n_vectors, l));
        let weight = crate::int(2 * l as i64 + 1);
        lhs = lhs.add(&g.series(order).scale(&weight));
    }
    let rhs = Fraction::new_unreduced(Poly::one(), 3 * n_vectors, 0).series(order);
    let first_failing_degree = (0..=order).find(|&d| lhs.coeff(d) != rhs.coeff(d));
    SumRuleReport {
        n_vectors,
        order,
        ok: first_failing_degree.is_none(),
        first_failing_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn frac(terms: &[(usize, i64)], lin: u32, quad: u32) -> Fraction {
        Fraction::new_unreduced(
            Poly::from_terms(terms.iter().map(|&(e, c)| (e, int(c)))),
            lin,
            quad,
        )
    }

    #[test]
    fn gr_integral_base_cases() {
        assert_eq!(gr_integral(0, 1), frac(&[(0, 1)], 0, 1));
        assert_eq!(gr_integral(1, 1), frac(&[(1, 1)], 0, 1));
        assert_eq!(gr_integral(0, 2), frac(&[(0, 1), (2, 1)], 0, 3));
    }

    #[test]
    fn one_vector_molien() {
        for l in 0..8u32 {
            let g = molien_so3(MolienQuery::new(1, l));
            assert_eq!(g, frac(&[(l as usize, 1)], 0, 1));
        }
    }

    #[test]
    fn two_vector_covariants() {
        assert_eq!(
            molien_so3(MolienQuery::new(2, 1)),
            frac(&[(1, 2), (2, 1)], 0, 3)
        );
        assert_eq!(
            molien_so3(MolienQuery::new(2, 2)),
            frac(&[(2, 3), (3, 2)], 0, 3)
        );
        assert_eq!(molien_so3(MolienQuery::new(2, 0)), frac(&[(0, 1)], 0, 3));
    }

    #[test]
    fn three_vector_invariants() {
        let g = molien_so3(MolienQuery::new(3, 0));
        assert_eq!(g, frac(&[(0, 1), (3, 1)], 0, 6));
    }

    #[test]
    fn character_values() {
        assert_eq!(character(2, 0.0), 5.0);
        let w = 1.3;
        assert!((character(1, w) - (1.0 + 2.0 * w.cos())).abs() < 1e-14);
    }

    #[test]
    fn presentation_exponents() {
        assert_eq!(presentation_exponent(1), 1);
        assert_eq!(presentation_exponent(2), 3);
        assert_eq!(presentation_exponent(5), 12);
    }

    #[test]
    fn sum_rule_small_orders() {
        for n in 1..=3 {
            let report = sum_rule_check(n, 8);
            assert!(report.ok, "sum rule fails for N={n}: {report:?}");
        }
    }
}
