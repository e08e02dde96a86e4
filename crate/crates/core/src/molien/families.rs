//! The published L-parametrized numerator families for N = 2..5, recorded as
//! data: every coefficient is an exact polynomial in L, so integrality after
//! substituting a concrete L is an assertion, not an assumption.

use num_traits::{Signed, Zero};

use crate::error::MolienError;
use crate::{int, rat, Poly, Rat};

/// Exact polynomial in the angular momentum label L, ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LPoly(Vec<Rat>);

impl LPoly {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        LPoly(coeffs)
    }

    /// Constant polynomial.
    fn con(c: Rat) -> Self {
        LPoly(vec![c])
    }

    /// a + b L
    fn lin(a: i64, b: i64) -> Self {
        LPoly(vec![int(a), int(b)])
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LPoly(out)
    }

    fn scale(&self, c: Rat) -> Self {
        LPoly(self.0.iter().map(|v| v * &c).collect())
    }

    pub fn eval(&self, l: u32) -> Rat {
        let x = int(l as i64);
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

/// Product of linear factors (a + bL) times a rational scale.
fn prod(factors: &[(i64, i64)], num: i64, den: i64) -> LPoly {
    let mut p = LPoly::con(rat(num, den));
    for &(a, b) in factors {
        p = p.mul(&LPoly::lin(a, b));
    }
    p
}

/// One of the paper's g_i expressions: a sum of fractions, each a list of
/// (lambda-exponent offset from L, coefficient polynomial in L) over
/// (1-t^2)^denom_exp.
#[derive(Clone, Debug)]
pub struct ClosedFormFamily {
    pub n_vectors: u32,
    pub variant: u32,
    /// Inclusive L range over which this variant is the published form.
    pub min_l: u32,
    pub max_l: Option<u32>,
    fractions: Vec<(u32, Vec<(u32, LPoly)>)>,
}

impl ClosedFormFamily {
    pub fn contains(&self, l: u32) -> bool {
        l >= self.min_l && self.max_l.is_none_or(|m| l <= m)
    }

    /// Substitute a concrete L, returning the list of (denominator exponent,
    /// numerator) pairs with zero fractions dropped. Errors outside the
    /// recorded validity range, which prevents silently using a form with
    /// negative coefficients.
    pub fn evaluate(&self, l: u32) -> Result<Vec<(u32, Poly)>, MolienError> {
        if !self.contains(l) {
            return Err(MolienError::FamilyOutOfRange {
                n: self.n_vectors,
                variant: self.variant,
                l,
                min: self.min_l,
                max: self.max_l.unwrap_or(u32::MAX),
            });
        }
        let mut out = Vec::new();
        for (denom_exp, terms) in &self.fractions {
            let mut numerator = Poly::zero();
            for (offset, coeff) in terms {
                let value = coeff.eval(l);
                assert!(
                    value.is_integer(),
                    "family coefficient must be integral at L={l}"
                );
                assert!(
                    !value.is_negative(),
                    "family coefficient must be nonnegative inside the validity range (L={l})"
                );
                numerator.add_term((l + offset) as usize, value);
            }
            if !numerator.is_zero() {
                out.push((*denom_exp, numerator));
            }
        }
        Ok(out)
    }
}

/// All published variants for a given number of vectors (2..=5).
pub fn families_for(n_vectors: u32) -> Vec<ClosedFormFamily> {
    match n_vectors {
        2 => families_two(),
        3 => families_three(),
        4 => families_four(),
        5 => families_five(),
        _ => Vec::new(),
    }
}

pub fn family(n_vectors: u32, variant: u32) -> Option<ClosedFormFamily> {
    families_for(n_vectors)
        .into_iter()
        .find(|f| f.variant == variant)
}

/// The variant whose validity range contains the given L.
pub fn family_covering(n_vectors: u32, l: u32) -> Option<ClosedFormFamily> {
    families_for(n_vectors).into_iter().find(|f| f.contains(l))
}

fn families_two() -> Vec<ClosedFormFamily> {
    vec![ClosedFormFamily {
        n_vectors: 2,
        variant: 1,
        min_l: 0,
        max_l: None,
        fractions: vec![(3, vec![(0, LPoly::lin(1, 1)), (1, LPoly::lin(0, 1))])],
    }]
}

fn families_three() -> Vec<ClosedFormFamily> {
    let g1 = ClosedFormFamily {
        n_vectors: 3,
        variant: 1,
        min_l: 0,
        max_l: Some(1),
        fractions: vec![(
            6,
            vec![
                (0, prod(&[(2, 1), (1, 1)], 1, 2)),
                (1, prod(&[(2, 1), (0, 1)], 1, 1)),
                (3, prod(&[(1, 1), (-1, 1)], -1, 1)),
                (4, prod(&[(0, 1), (-1, 1)], -1, 2)),
            ],
        )],
    };
    let g2 = ClosedFormFamily {
        n_vectors: 3,
        variant: 2,
        min_l: 1,
        max_l: None,
        fractions: vec![
            (6, vec![(0, LPoly::lin(1, 2)), (1, LPoly::lin(1, 2))]),
            (
                5,
                vec![
                    (0, prod(&[(0, 1), (-1, 1)], 1, 2)),
                    (1, prod(&[(1, 1), (-1, 1)], 1, 1)),
                    (2, prod(&[(0, 1), (-1, 1)], 1, 2)),
                ],
            ),
        ],
    };
    vec![g1, g2]
}

fn families_four() -> Vec<ClosedFormFamily> {
    // Shared building blocks of the N=4 variants.
    // (L^3 + 6L^2 - 37L - 18) / 6
    let cubic_a = LPoly::from_coeffs(vec![int(-18), int(-37), int(6), int(1)]).scale(rat(1, 6));
    let tail7 = vec![
        (1, prod(&[(0, 1), (-1, 1), (-2, 1)], 1, 2)),
        (2, prod(&[(1, 1), (-1, 1), (-2, 1)], 1, 2)),
        (3, prod(&[(0, 1), (-1, 1), (-2, 1)], 1, 6)),
    ];
    // (L-2)(L^2-16L-9)/6
    let lm2_quad = prod(&[(-2, 1)], 1, 6).mul(&LPoly::from_coeffs(vec![int(-9), int(-16), int(1)]));

    let g1 = ClosedFormFamily {
        n_vectors: 4,
        variant: 1,
        min_l: 0,
        max_l: Some(2),
        fractions: vec![(
            9,
            vec![
                (0, prod(&[(3, 1), (2, 1), (1, 1)], 1, 6)),
                (1, prod(&[(3, 1), (2, 1), (0, 1)], 1, 2)),
                (2, prod(&[(3, 1), (2, 1), (1, 1)], 1, 6)),
                (3, prod(&[(3, 1), (-2, 1), (4, 5)], -1, 6)),
                (4, prod(&[(3, 1), (-2, 1), (1, 5)], -1, 6)),
                (5, prod(&[(0, 1), (-1, 1), (-2, 1)], 1, 6)),
                (6, prod(&[(1, 1), (-1, 1), (-2, 1)], 1, 2)),
                (7, prod(&[(0, 1), (-1, 1), (-2, 1)], 1, 6)),
            ],
        )],
    };
    let g2 = ClosedFormFamily {
        n_vectors: 4,
        variant: 2,
        min_l: 2,
        max_l: Some(4),
        fractions: vec![
            (
                9,
                vec![
                    (0, prod(&[(3, 1), (2, 1), (1, 1)], 1, 6)),
                    (1, prod(&[(1, 2)], 4, 1)),
                    (2, cubic_a.scale(int(-1))),
                ],
            ),
            (
                8,
                vec![
                    (1, prod(&[(-2, 1), (1, 2)], 2, 1)),
                    (2, lm2_quad.scale(int(-1))),
                ],
            ),
            (7, tail7.clone()),
        ],
    };
    let g3 = ClosedFormFamily {
        n_vectors: 4,
        variant: 3,
        min_l: 5,
        max_l: Some(16),
        fractions: vec![
            (
                9,
                vec![(0, prod(&[(1, 2)], 4, 1)), (1, prod(&[(1, 2)], 4, 1))],
            ),
            (
                8,
                vec![
                    (0, cubic_a.clone()),
                    (1, prod(&[(-2, 1), (1, 2)], 2, 1)),
                    (2, lm2_quad.scale(int(-1))),
                ],
            ),
            (7, tail7.clone()),
        ],
    };
    let g4 = ClosedFormFamily {
        n_vectors: 4,
        variant: 4,
        min_l: 17,
        max_l: None,
        fractions: vec![
            (
                9,
                vec![(0, prod(&[(1, 2)], 4, 1)), (1, prod(&[(1, 2)], 4, 1))],
            ),
            (
                8,
                vec![
                    (0, prod(&[(-3, 1), (1, 2)], 2, 1)),
                    (1, prod(&[(-2, 1), (1, 2)], 2, 1)),
                ],
            ),
            (
                7,
                vec![
                    (0, lm2_quad.clone()),
                    (1, prod(&[(0, 1), (-1, 1), (-2, 1)], 1, 2)),
                    (2, prod(&[(1, 1), (-1, 1), (-2, 1)], 1, 2)),
                    (3, prod(&[(0, 1), (-1, 1), (-2, 1)], 1, 6)),
                ],
            ),
        ],
    };
    vec![g1, g2, g3, g4]
}

fn families_five() -> Vec<ClosedFormFamily> {
    // Shared building blocks of the N=5 variants.
    // L^4/24 + 5L^3/12 + 35L^2/24 - 455L/12 - 19
    let quartic_a = LPoly::from_coeffs(vec![
        int(-19),
        rat(-455, 12),
        rat(35, 24),
        rat(5, 12),
        rat(1, 24),
    ]);
    // (L-3)(L^3+13L^2-406L-208)/24
    let lm3_cubic_a = prod(&[(-3, 1)], 1, 24).mul(&LPoly::from_coeffs(vec![
        int(-208),
        int(-406),
        int(13),
        int(1),
    ]));
    // (L-3)(L^3+12L^2-58L-30)/6
    let lm3_cubic_b = prod(&[(-3, 1)], 1, 6).mul(&LPoly::from_coeffs(vec![
        int(-30),
        int(-58),
        int(12),
        int(1),
    ]));
    // (L-2)(L-3)(L^2-81L-40)/24
    let lm23_quad_a =
        prod(&[(-2, 1), (-3, 1)], 1, 24).mul(&LPoly::from_coeffs(vec![int(-40), int(-81), int(1)]));
    // (L-2)(L-3)(L^2-10L-6)/6
    let lm23_quad_b =
        prod(&[(-2, 1), (-3, 1)], 1, 6).mul(&LPoly::from_coeffs(vec![int(-6), int(-10), int(1)]));
    let quartic_tail = vec![
        (2, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 4)),
        (3, prod(&[(1, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 6)),
        (4, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 24)),
    ];
    let top_pair = vec![(0, prod(&[(1, 2)], 20, 1)), (1, prod(&[(1, 2)], 20, 1))];
    let head12 = vec![
        (0, prod(&[(4, 1), (3, 1), (2, 1), (1, 1)], 1, 24)),
        (1, prod(&[(1, 2)], 20, 1)),
        (2, quartic_a.scale(int(-1))),
    ];
    // tail of g5/g6: exponent 9 with offsets 1..4
    let tail9_long = vec![
        (1, lm23_quad_b.clone()),
        (2, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 4)),
        (3, prod(&[(1, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 6)),
        (4, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 24)),
    ];

    let g1 = ClosedFormFamily {
        n_vectors: 5,
        variant: 1,
        min_l: 0,
        max_l: Some(3),
        fractions: vec![(
            12,
            vec![
                (0, prod(&[(4, 1), (3, 1), (2, 1), (1, 1)], 1, 24)),
                (1, prod(&[(4, 1), (3, 1), (2, 1), (0, 1)], 1, 6)),
                (2, prod(&[(4, 1), (3, 1), (2, 1), (1, 1)], 1, 8)),
                (
                    3,
                    prod(&[(4, 1), (3, 1)], -1, 3).mul(&LPoly::from_coeffs(vec![
                        rat(-5, 2),
                        int(-3),
                        int(1),
                    ])),
                ),
                (4, prod(&[(4, 1), (3, 1), (-3, 1), (2, 7)], -1, 12)),
                (5, prod(&[(4, 1), (-3, 1), (1, 2)], -1, 2)),
                (6, prod(&[(4, 1), (-2, 1), (-3, 1), (5, 7)], 1, 12)),
                (
                    7,
                    prod(&[(-2, 1), (-3, 1)], 1, 3).mul(&LPoly::from_coeffs(vec![
                        rat(3, 2),
                        int(5),
                        int(1),
                    ])),
                ),
                (8, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], -1, 8)),
                (9, prod(&[(1, 1), (-1, 1), (-2, 1), (-3, 1)], -1, 6)),
                (10, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], -1, 24)),
            ],
        )],
    };
    let g2 = ClosedFormFamily {
        n_vectors: 5,
        variant: 2,
        min_l: 4,
        max_l: Some(4),
        fractions: vec![
            (12, head12.clone()),
            (
                11,
                vec![
                    (
                        1,
                        LPoly::from_coeffs(vec![
                            int(-20),
                            int(-36),
                            rat(13, 3),
                            rat(3, 2),
                            rat(1, 6),
                        ]),
                    ),
                    (2, lm3_cubic_a.scale(int(-1))),
                    (3, lm3_cubic_b.scale(int(-1))),
                ],
            ),
            (
                10,
                vec![
                    (2, lm23_quad_a.scale(int(-1))),
                    (3, lm23_quad_b.scale(int(-1))),
                ],
            ),
            (9, quartic_tail.clone()),
        ],
    };
    let g3 = ClosedFormFamily {
        n_vectors: 5,
        variant: 3,
        min_l: 5,
        max_l: Some(6),
        fractions: vec![
            (12, head12.clone()),
            (
                11,
                vec![
                    (1, prod(&[(1, 2), (-7, 2)], 5, 1)),
                    (2, lm3_cubic_a.scale(int(-1))),
                ],
            ),
            (
                10,
                vec![
                    (1, lm3_cubic_b.clone()),
                    (2, lm23_quad_a.scale(int(-1))),
                    (3, lm23_quad_b.scale(int(-1))),
                ],
            ),
            (9, quartic_tail.clone()),
        ],
    };
    let g4 = ClosedFormFamily {
        n_vectors: 5,
        variant: 4,
        min_l: 7,
        max_l: Some(10),
        fractions: vec![
            (12, top_pair.clone()),
            (
                11,
                vec![
                    (0, quartic_a.clone()),
                    (1, prod(&[(1, 2), (-7, 2)], 5, 1)),
                    (2, lm3_cubic_a.scale(int(-1))),
                ],
            ),
            (
                10,
                vec![
                    (1, lm3_cubic_b.clone()),
                    (2, lm23_quad_a.scale(int(-1))),
                    (3, lm23_quad_b.scale(int(-1))),
                ],
            ),
            (9, quartic_tail.clone()),
        ],
    };
    let g5 = ClosedFormFamily {
        n_vectors: 5,
        variant: 5,
        min_l: 11,
        max_l: Some(14),
        fractions: vec![
            (12, top_pair.clone()),
            (
                11,
                vec![
                    (0, quartic_a.clone()),
                    (1, prod(&[(1, 2), (-7, 2)], 5, 1)),
                    (2, lm3_cubic_a.scale(int(-1))),
                ],
            ),
            (
                10,
                vec![
                    (1, prod(&[(-3, 1), (-7, 2), (1, 2)], 1, 1)),
                    (2, lm23_quad_a.scale(int(-1))),
                ],
            ),
            (9, tail9_long.clone()),
        ],
    };
    let g6 = ClosedFormFamily {
        n_vectors: 5,
        variant: 6,
        min_l: 15,
        max_l: Some(81),
        fractions: vec![
            (12, top_pair.clone()),
            (
                11,
                vec![
                    (0, prod(&[(1, 2), (-9, 2)], 5, 1)),
                    (1, prod(&[(1, 2), (-7, 2)], 5, 1)),
                ],
            ),
            (
                10,
                vec![
                    (0, lm3_cubic_a.clone()),
                    (1, prod(&[(-3, 1), (1, 2), (-7, 2)], 1, 1)),
                    (2, lm23_quad_a.scale(int(-1))),
                ],
            ),
            (9, tail9_long.clone()),
        ],
    };
    let g7 = ClosedFormFamily {
        n_vectors: 5,
        variant: 7,
        min_l: 82,
        max_l: None,
        fractions: vec![
            (12, top_pair.clone()),
            (
                11,
                vec![
                    (0, prod(&[(1, 2), (-9, 2)], 5, 1)),
                    (1, prod(&[(1, 2), (-7, 2)], 5, 1)),
                ],
            ),
            (
                10,
                vec![
                    (0, prod(&[(-3, 1), (-6, 1), (1, 2)], 2, 1)),
                    (1, prod(&[(-3, 1), (1, 2), (-7, 2)], 1, 1)),
                ],
            ),
            (
                9,
                vec![
                    (0, lm23_quad_a.clone()),
                    (1, lm23_quad_b.clone()),
                    (2, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 4)),
                    (3, prod(&[(1, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 6)),
                    (4, prod(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], 1, 24)),
                ],
            ),
        ],
    };
    vec![g1, g2, g3, g4, g5, g6, g7]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::decompose;
    use crate::int;

    #[test]
    fn two_vector_family_matches_direct_computation() {
        for l in [0u32, 1, 2, 7] {
            let family = family(2, 1).unwrap();
            let fractions = family.evaluate(l).unwrap();
            let d = decompose(2, l).unwrap();
            assert_eq!(fractions, d.fractions);
        }
    }

    #[test]
    fn variant_ranges() {
        assert!(family(4, 1).unwrap().contains(2));
        assert!(!family(4, 1).unwrap().contains(3));
        assert!(family(4, 4).unwrap().contains(1000));
        assert!(matches!(
            family(4, 4).unwrap().evaluate(3),
            Err(MolienError::FamilyOutOfRange { .. })
        ));
    }

    #[test]
    fn overlapping_variants_agree_where_both_apply() {
        // g1 and g2 for three vectors are both valid at L=1.
        let a = family(3, 1).unwrap().evaluate(1).unwrap();
        let b = family(3, 2).unwrap().evaluate(1).unwrap();
        let sum = |fr: &[(u32, crate::Poly)]| {
            fr.iter().fold(crate::Fraction::zero(), |acc, (e, num)| {
                acc.add(&crate::Fraction::new_unreduced(num.clone(), 0, *e))
            })
        };
        assert!(sum(&a).equivalent(&sum(&b)));
    }

    #[test]
    fn lpoly_evaluation() {
        // (L+1)(L+2)/2 at L=4.
        let p = LPoly::from_coeffs(vec![int(1), rat(3, 2), rat(1, 2)]);
        assert_eq!(p.eval(4), int(15));
    }

    #[test]
    fn covering_variant_selection() {
        assert_eq!(family_covering(5, 0).unwrap().variant, 1);
        assert_eq!(family_covering(5, 12).unwrap().variant, 5);
        assert_eq!(family_covering(5, 500).unwrap().variant, 7);
        assert!(family_covering(6, 0).is_none());
    }
}
