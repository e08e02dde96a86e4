//! Independent computation of the N-vector Molien series by Clebsch-Gordan
//! coupling: the N-vector representation splits as one vector plus N-1
//! vectors, and SO(3) tensor products are multiplicity free, so
//!
//!   g_N(L) = Sum_{L_A} Sum_{L_B triangle-compatible with (L, L_A)}
//!            g_1(L_A) g_{N-1}(L_B).
//!
//! Everything is done at truncated-series level. The infinite L_A sum is
//! cut at the truncation order D, which is exact: g(L) has no series term
//! below degree L, so larger L_A cannot contribute at or below degree D.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::{Polynomial, Series};

/// Multiplicity of the irrep (l) in (l_a) x (l_b): 1 iff the triangle
/// inequality |l_a - l_b| <= l <= l_a + l_b holds, else 0.
pub fn triangle_allows(l_a: u32, l_b: u32, l: u32) -> bool {
    l_a.abs_diff(l_b) <= l && l <= l_a + l_b
}

/// Series of the one-vector generating function t^l / (1 - t^2).
fn one_vector_series(l: u32, order: usize) -> Series {
    let p = Polynomial::from_terms(
        (0..)
            .map(|j| (l as usize + 2 * j, crate::int(1)))
            .take_while(|(e, _)| *e <= order),
    );
    Series::from_poly(&p, order)
}

/// Series of g(N, L) for every L in 0..=max_l, computed by the coupling
/// recursion with memoization across the whole table. Negative `max_l`
/// yields an empty map.
pub fn memoized_series_table(n_vectors: u32, max_l: i64, order: usize) -> BTreeMap<u32, Series> {
    assert!(n_vectors >= 1, "need at least one vector");
    if max_l < 0 {
        return BTreeMap::new();
    }
    let max_l = max_l as u32;
    // The recursion needs the previous level up to L_B = order.
    let inner_max = (max_l as usize).max(order) as u32;
    let mut level: Vec<Series> = (0..=inner_max)
        .map(|l| one_vector_series(l, order))
        .collect();
    for _ in 2..=n_vectors {
        level = couple_level(&level, order);
    }
    (0..=max_l)
        .map(|l| (l, level[l as usize].clone()))
        .collect()
}

/// One recursion step: given the full table of g_{N-1}(L_B) series for
/// L_B = 0..=D, produce the table of g_N(L).
fn couple_level(prev: &[Series], order: usize) -> Vec<Series> {
    // g_1(L_A) * prev[L_B] = t^L_A * (prev[L_B] / (1 - t^2)); the second
    // factor is shared across all L_A, so build it once per L_B.
    let even_geo = one_vector_series(0, order);
    let dressed: Vec<Series> = prev.iter().map(|s| s.mul(&even_geo)).collect();
    let top = prev.len() - 1;
    (0..prev.len())
        .map(|l| {
            let mut acc = vec![crate::Rat::zero(); order + 1];
            for l_a in 0..=order as u32 {
                let lo = l_a.abs_diff(l as u32);
                let hi = (l_a + l as u32).min(top as u32);
                for l_b in lo..=hi {
                    debug_assert!(triangle_allows(l_a, l_b, l as u32));
                    let term = &dressed[l_b as usize];
                    for (offset, slot) in acc[l_a as usize..].iter_mut().enumerate() {
                        *slot += term.coeff(offset);
                    }
                }
            }
            let mut s = Series::zero(order);
            for (d, c) in acc.into_iter().enumerate() {
                s.set_coeff(d, c);
            }
            s
        })
        .collect()
}

/// Series of g(N, L) to order D through the coupling recursion only; no
/// closed forms are consulted, which makes this an independent oracle for
/// the symbolic path.
pub fn couple_series(n_vectors: u32, target_l: u32, order: usize) -> Series {
    memoized_series_table(n_vectors, target_l as i64, order)
        .remove(&target_l)
        .expect("table covers target_l")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::molien::{molien_so3, MolienQuery};

    #[test]
    fn triangle_rule() {
        assert!(triangle_allows(1, 1, 0));
        assert!(triangle_allows(1, 1, 2));
        assert!(!triangle_allows(1, 1, 3));
        assert!(!triangle_allows(0, 2, 1));
        // Symmetric under permutations.
        for (a, b, c) in [(2u32, 3u32, 4u32), (5, 1, 4)] {
            let r = triangle_allows(a, b, c);
            assert_eq!(r, triangle_allows(b, c, a));
            assert_eq!(r, triangle_allows(c, a, b));
        }
    }

    #[test]
    fn two_vector_invariant_series() {
        let s = couple_series(2, 0, 6);
        for (d, c) in [1, 0, 3, 0, 6, 0, 10].iter().enumerate() {
            assert_eq!(s.coeff(d), int(*c), "degree {d}");
        }
    }

    #[test]
    fn two_vector_l1_series() {
        let s = couple_series(2, 1, 4);
        for (d, c) in [0, 2, 1, 6, 3].iter().enumerate() {
            assert_eq!(s.coeff(d), int(*c), "degree {d}");
        }
    }

    #[test]
    fn three_vector_invariant_series_matches_closed_form() {
        let s = couple_series(3, 0, 3);
        let closed = molien_so3(MolienQuery::new(3, 0)).series(3);
        assert_eq!(s, closed);
        assert_eq!(s.coeff(2), int(6));
        assert_eq!(s.coeff(3), int(1));
    }

    #[test]
    fn one_vector_table_is_the_base_case() {
        let table = memoized_series_table(1, 3, 8);
        for (l, s) in &table {
            let expected = molien_so3(MolienQuery::new(1, *l)).series(8);
            assert_eq!(s, &expected);
        }
    }

    #[test]
    fn empty_range_gives_empty_map() {
        assert!(memoized_series_table(3, -1, 8).is_empty());
    }

    #[test]
    fn truncation_is_monotone() {
        let long = couple_series(3, 2, 16);
        let short = couple_series(3, 2, 9);
        assert!(long.agrees_with(&short));
    }
}
