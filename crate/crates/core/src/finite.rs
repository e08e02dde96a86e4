//! Molien functions for finite group actions by direct averaging:
//!
//!   g(irrep) = (1/|G|) Sum_g chi_irrep(g) / det(I - t D(g))
//!
//! with every determinant expanded as an exact polynomial.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::MolienError;
use crate::{Fraction, Poly, Rat};

/// Finite group acting by exact orthogonal matrices, with a real character
/// table. Matrices act on one copy of the representation space; use
/// [`FiniteGroupRep::expand`] for the action on N copies.
#[derive(Clone, Debug)]
pub struct FiniteGroupRep {
    pub name: String,
    elements: Vec<Vec<Vec<Rat>>>,
    characters: BTreeMap<String, Vec<Rat>>,
}

impl FiniteGroupRep {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn irrep_labels(&self) -> Vec<&str> {
        self.characters.keys().map(String::as_str).collect()
    }

    pub fn characters(&self, irrep: &str) -> Option<&[Rat]> {
        self.characters.get(irrep).map(Vec::as_slice)
    }

    /// Inversion group acting on one spatial vector: identity and the
    /// central inversion, with the even (A1) and odd (A2) irreps.
    pub fn c_i() -> Self {
        let id: Vec<Vec<Rat>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        let inv: Vec<Vec<Rat>> = id
            .iter()
            .map(|row| row.iter().map(|c| -c.clone()).collect())
            .collect();
        let mut characters = BTreeMap::new();
        characters.insert("A1".to_string(), vec![Rat::one(), Rat::one()]);
        characters.insert("A2".to_string(), vec![Rat::one(), -Rat::one()]);
        FiniteGroupRep {
            name: "C_i".to_string(),
            elements: vec![id, inv],
            characters,
        }
    }

    /// One-element group on one spatial vector.
    pub fn trivial() -> Self {
        let id: Vec<Vec<Rat>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        let mut characters = BTreeMap::new();
        characters.insert("A".to_string(), vec![Rat::one()]);
        FiniteGroupRep {
            name: "trivial".to_string(),
            elements: vec![id],
            characters,
        }
    }

    /// Same group acting block-diagonally on `n_copies` copies of the
    /// original space; characters scale accordingly for the matrix part
    /// but the irrep labels keep their meaning.
    pub fn expand(&self, n_copies: u32) -> Self {
        let elements = self
            .elements
            .iter()
            .map(|m| block_diagonal(m, n_copies))
            .collect();
        FiniteGroupRep {
            name: self.name.clone(),
            elements,
            characters: self.characters.clone(),
        }
    }
}

fn block_diagonal(m: &[Vec<Rat>], copies: u32) -> Vec<Vec<Rat>> {
    let d = m.len();
    let dim = d * copies as usize;
    let mut out = vec![vec![Rat::zero(); dim]; dim];
    for b in 0..copies as usize {
        for i in 0..d {
            for j in 0..d {
                out[b * d + i][b * d + j] = m[i][j].clone();
            }
        }
    }
    out
}

/// Exact determinant of a square polynomial matrix by cofactor expansion
/// along the first row. The matrices here are tiny, so clarity wins.
fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry * &det_poly(&minor);
        if j % 2 == 0 {
            det = &det + &cofactor;
        } else {
            det = &det - &cofactor;
        }
    }
    det
}

/// det(I - t D) for an exact matrix D.
pub fn char_matrix_det(d: &[Vec<Rat>]) -> Poly {
    let n = d.len();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = Poly::monomial(1, -d[i][j].clone());
                    if i == j {
                        p.add_term(0, Rat::one());
                    }
                    p
                })
                .collect()
        })
        .collect();
    det_poly(&m)
}

/// Group-averaged Molien function for one irrep. Fails if the average does
/// not reduce to the canonical (1-t)^a (1-t^2)^b denominator.
pub fn molien_finite(rep: &FiniteGroupRep, irrep: &str) -> Result<Fraction, MolienError> {
    let chi = rep
        .characters
        .get(irrep)
        .ok_or_else(|| MolienError::UnknownIrrep(irrep.to_string()))?;
    if chi.len() != rep.order() {
        return Err(MolienError::GroupFile(format!(
            "irrep {irrep}: {} characters for {} elements",
            chi.len(),
            rep.order()
        )));
    }
    // Running sum as a (numerator, denominator) polynomial pair.
    let mut num = Poly::zero();
    let mut den = Poly::one();
    for (matrix, chi_g) in rep.elements.iter().zip(chi) {
        let det = char_matrix_det(matrix);
        // num/den + chi_g/det
        num = &(&num * &det) + &den.scale(chi_g);
        den = &den * &det;
        let g = num.gcd(&den);
        if g.degree().unwrap_or(0) > 0 {
            num = num.exact_div(&g).expect("gcd divides");
            den = den.exact_div(&g).expect("gcd divides");
        }
    }
    let order_inv = Rat::one() / Rat::from_integer(crate::Int::from(rep.order() as i64));
    num = num.scale(&order_inv);

    let mut exp_quadratic = 0;
    while let Some(q) = den.exact_div(&Poly::one_minus_t_sq()) {
        den = q;
        exp_quadratic += 1;
    }
    let mut exp_linear = 0;
    while let Some(q) = den.exact_div(&Poly::one_minus_t()) {
        den = q;
        exp_linear += 1;
    }
    match den.degree() {
        Some(0) | None if !den.is_zero() => {
            let c = den.coeff(0);
            Ok(Fraction::new(
                num.scale(&(Rat::one() / c)),
                exp_linear,
                exp_quadratic,
            ))
        }
        _ => Err(MolienError::NonCanonicalGroupAverage(format!(
            "residual denominator factor {den}"
        ))),
    }
}

/// Checks the dimension sum rule: the dimension-weighted sum of the irrep
/// series equals the series of 1/(1-t)^dim, where dim is the size of the
/// matrices the group acts by. Returns the first failing degree, if any.
pub fn dimension_sum_check(
    rep: &FiniteGroupRep,
    order: usize,
) -> Result<Option<usize>, MolienError> {
    let dim = rep.elements[0].len() as u32;
    let mut lhs = crate::Series::zero(order);
    for label in rep.irrep_labels() {
        let chi = rep.characters(label).unwrap();
        let dimension = chi[0].clone();
        let g = molien_finite(rep, label)?;
        lhs = lhs.add(&g.series(order).scale(&dimension));
    }
    let rhs = Fraction::new_unreduced(Poly::one(), dim, 0).series(order);
    Ok((0..=order).find(|&d| lhs.coeff(d) != rhs.coeff(d)))
}

/// Schema tag expected at the top of a group definition file.
pub const GROUP_FILE_SCHEMA: &str = "group-file/1";

#[derive(Deserialize)]
struct GroupFile {
    schema: String,
    name: String,
    order: usize,
    element: Vec<GroupFileElement>,
    irrep: Vec<GroupFileIrrep>,
}

#[derive(Deserialize)]
struct GroupFileElement {
    #[allow(dead_code)]
    name: Option<String>,
    matrix: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct GroupFileIrrep {
    name: String,
    characters: Vec<String>,
}

fn parse_rat(s: &str) -> Result<Rat, MolienError> {
    Rat::from_str(s.trim()).map_err(|e| MolienError::GroupFile(format!("bad rational {s:?}: {e}")))
}

/// Parses a TOML group definition. Matrices are listed row by row and all
/// numeric entries are exact rational strings such as "1", "-1" or "1/2".
pub fn parse_group_file(text: &str) -> Result<FiniteGroupRep, MolienError> {
    let file: GroupFile =
        toml::from_str(text).map_err(|e| MolienError::GroupFile(e.to_string()))?;
    if file.schema != GROUP_FILE_SCHEMA {
        return Err(MolienError::GroupFile(format!(
            "unsupported schema {:?}, expected {GROUP_FILE_SCHEMA:?}",
            file.schema
        )));
    }
    if file.element.len() != file.order {
        return Err(MolienError::GroupFile(format!(
            "order is {} but {} elements are listed",
            file.order,
            file.element.len()
        )));
    }
    let mut elements = Vec::new();
    let mut dim = None;
    for el in &file.element {
        let d = el.matrix.len();
        if *dim.get_or_insert(d) != d || el.matrix.iter().any(|row| row.len() != d) {
            return Err(MolienError::GroupFile(
                "all matrices must be square and of equal size".to_string(),
            ));
        }
        let mut m = Vec::new();
        for row in &el.matrix {
            m.push(
                row.iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        elements.push(m);
    }
    let mut characters = BTreeMap::new();
    for ir in &file.irrep {
        if ir.characters.len() != file.order {
            return Err(MolienError::GroupFile(format!(
                "irrep {}: {} characters for order {}",
                ir.name,
                ir.characters.len(),
                file.order
            )));
        }
        let chi = ir
            .characters
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>, _>>()?;
        if characters.insert(ir.name.clone(), chi).is_some() {
            return Err(MolienError::GroupFile(format!(
                "duplicate irrep {}",
                ir.name
            )));
        }
    }
    if characters.is_empty() {
        return Err(MolienError::GroupFile("no irreps listed".to_string()));
    }
    Ok(FiniteGroupRep {
        name: file.name,
        elements,
        characters,
    })
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
    fn inversion_group_invariants() {
        let rep = FiniteGroupRep::c_i();
        assert_eq!(rep.order(), 2);
        let even = molien_finite(&rep, "A1").unwrap();
        assert_eq!(even, frac(&[(0, 1), (2, 3)], 0, 3));
        let odd = molien_finite(&rep, "A2").unwrap();
        assert_eq!(odd, frac(&[(1, 3), (3, 1)], 0, 3));
    }

    #[test]
    fn trivial_group_full_ring() {
        let rep = FiniteGroupRep::trivial();
        let g = molien_finite(&rep, "A").unwrap();
        assert_eq!(g, Fraction::new_unreduced(Poly::one(), 3, 0));
    }

    #[test]
    fn unknown_irrep_is_reported() {
        let rep = FiniteGroupRep::c_i();
        assert!(matches!(
            molien_finite(&rep, "E"),
            Err(MolienError::UnknownIrrep(_))
        ));
    }

    #[test]
    fn expanded_action_block_size() {
        let rep = FiniteGroupRep::c_i().expand(2);
        assert_eq!(rep.order(), 2);
        let even = molien_finite(&rep, "A1").unwrap();
        // Two inverted vectors: 21 independent quadratic invariants.
        assert_eq!(even.series(2).coeff(2), int(21));
    }

    #[test]
    fn characteristic_matrix_determinant() {
        let minus_id: Vec<Vec<Rat>> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| if i == j { -Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        // det(I + t I) over two dimensions = (1+t)^2.
        let det = char_matrix_det(&minus_id);
        assert_eq!(
            det,
            Poly::from_terms([(0, int(1)), (1, int(2)), (2, int(1))])
        );
    }

    #[test]
    fn dimension_sum_rule_holds() {
        for rep in [FiniteGroupRep::trivial(), FiniteGroupRep::c_i()] {
            assert_eq!(dimension_sum_check(&rep, 12).unwrap(), None);
        }
    }

    #[test]
    fn group_file_round_trip() {
        let text = r#"
schema = "group-file/1"
name = "inversion"
order = 2

[[element]]
name = "e"
matrix = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]

[[element]]
name = "i"
matrix = [["-1", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]]

[[irrep]]
name = "A1"
characters = ["1", "1"]

[[irrep]]
name = "A2"
characters = ["1", "-1"]
"#;
        let rep = parse_group_file(text).unwrap();
        assert_eq!(rep.name, "inversion");
        assert_eq!(rep.order(), 2);
        let builtin = FiniteGroupRep::c_i();
        for label in ["A1", "A2"] {
            assert_eq!(
                molien_finite(&rep, label).unwrap(),
                molien_finite(&builtin, label).unwrap()
            );
        }
    }

    #[test]
    fn group_file_rejects_bad_input() {
        let bad_schema = r#"
schema = "group-file/2"
name = "x"
order = 1
[[element]]
matrix = [["1"]]
[[irrep]]
name = "A"
characters = ["1"]
"#;
        assert!(matches!(
            parse_group_file(bad_schema),
            Err(MolienError::GroupFile(_))
        ));
        let wrong_count = r#"
schema = "group-file/1"
name = "x"
order = 2
[[element]]
matrix = [["1"]]
[[irrep]]
name = "A"
characters = ["1", "1"]
"#;
        assert!(matches!(
            parse_group_file(wrong_count),
            Err(MolienError::GroupFile(_))
        ));
        let bad_rational = r#"
schema = "group-file/1"
name = "x"
order = 1
[[element]]
matrix = [["one"]]
[[irrep]]
name = "A"
characters = ["1"]
"#;
        assert!(matches!(
            parse_group_file(bad_rational),
            Err(MolienError::GroupFile(_))
        ));
    }
}
