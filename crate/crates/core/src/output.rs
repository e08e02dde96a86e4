//! Text and JSON rendering of Molien functions and decompositions.
//!
//! Text output defaults to the Greek lambda for the counting variable;
//! ASCII mode substitutes `t` and is the form stored in the golden table
//! files. JSON payloads carry every coefficient as an exact decimal
//! string, never as a float.

use serde::{Deserialize, Serialize};

use crate::decompose::Decomposition;
use crate::{Fraction, Poly};

pub const JSON_SCHEMA: &str = "molien-output/1";

pub fn symbol(ascii: bool) -> &'static str {
    if ascii {
        "t"
    } else {
        "\u{3bb}"
    }
}

/// Ascending-exponent rendering: `1+3t^2+10t^3`, with unit coefficients
/// omitted in front of the variable.
pub fn poly_string(p: &Poly, sym: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (e, c) in p.terms() {
        let coeff = c.to_string();
        let part = match e {
            0 => coeff,
            _ => {
                let var = if e == 1 {
                    sym.to_string()
                } else {
                    format!("{sym}^{e}")
                };
                if coeff == "1" {
                    var
                } else {
                    format!("{coeff}{var}")
                }
            }
        };
        parts.push(part);
    }
    parts.join("+")
}

fn power_string(base: &str, exp: u32) -> String {
    match exp {
        1 => base.to_string(),
        _ => format!("{base}^{exp}"),
    }
}

/// `(numerator)/(denominator factors)`, with parentheses dropped around a
/// single-term numerator and the whole denominator absent when trivial.
pub fn fraction_string(f: &Fraction, sym: &str) -> String {
    let num = poly_string(f.numerator(), sym);
    let num = if f.numerator().num_terms() > 1 {
        format!("({num})")
    } else {
        num
    };
    let mut den = String::new();
    if f.exp_linear() > 0 {
        den.push_str(&power_string(&format!("(1-{sym})"), f.exp_linear()));
    }
    if f.exp_quadratic() > 0 {
        den.push_str(&power_string(&format!("(1-{sym}^2)"), f.exp_quadratic()));
    }
    if den.is_empty() {
        num
    } else {
        format!("{num}/{den}")
    }
}

/// One decomposition fraction over `(1-t^2)^e`. The numerator keeps its
/// parentheses even with one term so table rows line up with the
/// published layout.
pub fn presented_fraction_string(exp: u32, num: &Poly, sym: &str) -> String {
    if num.num_terms() > 1 {
        format!(
            "({})/{}",
            poly_string(num, sym),
            power_string(&format!("(1-{sym}^2)"), exp)
        )
    } else {
        format!(
            "{}/{}",
            poly_string(num, sym),
            power_string(&format!("(1-{sym}^2)"), exp)
        )
    }
}

pub fn decomposition_string(d: &Decomposition, sym: &str) -> String {
    d.fractions
        .iter()
        .map(|(e, num)| presented_fraction_string(*e, num, sym))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Golden-file table row: `N L <decomposition>` in ASCII.
pub fn table_row(d: &Decomposition) -> String {
    format!(
        "{} {} {}",
        d.n_vectors,
        d.target_l,
        decomposition_string(d, "t")
    )
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermDoc {
    pub exponent: usize,
    pub coefficient: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FractionDoc {
    pub exp_linear: u32,
    pub exp_quadratic: u32,
    pub terms: Vec<TermDoc>,
}

impl FractionDoc {
    pub fn from_fraction(f: &Fraction) -> Self {
        FractionDoc {
            exp_linear: f.exp_linear(),
            exp_quadratic: f.exp_quadratic(),
            terms: terms_doc(f.numerator()),
        }
    }

    pub fn from_presented(exp: u32, num: &Poly) -> Self {
        FractionDoc {
            exp_linear: 0,
            exp_quadratic: exp,
            terms: terms_doc(num),
        }
    }
}

fn terms_doc(p: &Poly) -> Vec<TermDoc> {
    p.terms()
        .map(|(e, c)| TermDoc {
            exponent: e,
            coefficient: c.to_string(),
        })
        .collect()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ThresholdDoc {
    pub stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_stable_l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stable_k: Option<usize>,
    pub scan_ceiling: u32,
    pub stability_window: u32,
}

/// Machine-readable result envelope shared by every CLI command.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct OutputDocument {
    pub schema: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_vectors: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub options: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fractions: Option<Vec<FractionDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold: Option<ThresholdDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckDoc>>,
}

impl OutputDocument {
    pub fn new(command: &str) -> Self {
        OutputDocument {
            schema: JSON_SCHEMA.to_string(),
            command: command.to_string(),
            n_vectors: None,
            target_l: None,
            options: None,
            fractions: None,
            rows: None,
            threshold: None,
            checks: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}
