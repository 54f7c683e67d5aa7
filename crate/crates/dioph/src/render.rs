//! Deterministic serialization of polynomials and equations.
//!
//! Monomials print in the canonical order (total degree descending, then
//! exponent vector lexicographically descending), factors in variable-index
//! order with explicit `*`, coefficient 1 suppressed, no spaces, and
//! equations end in `=0`. The canonical style names variables `x1..xn`;
//! the display style uses `x y z t s` when five or fewer variables are in
//! play. Canonical strings are what class representatives minimize
//! byte-lexicographically, so this module defines the total order on
//! equivalence class members.

use crate::poly::{Monomial, Polynomial};
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    /// `x y z t s` for up to five variables, `x1..xn` beyond.
    #[default]
    Display,
    /// Always `x1..xn`.
    Canonical,
}

const DISPLAY_NAMES: [&str; 5] = ["x", "y", "z", "t", "s"];

fn var_name(index: usize, nvars: usize, style: Style) -> String {
    match style {
        Style::Display if nvars <= DISPLAY_NAMES.len() => DISPLAY_NAMES[index].to_string(),
        _ => format!("x{}", index + 1),
    }
}

fn monomial_body(m: &Monomial, nvars: usize, style: Style) -> String {
    let coeff = m.coeff().magnitude();
    if m.is_constant() {
        return coeff.to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    if !coeff.is_one() {
        parts.push(coeff.to_string());
    }
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(var_name(i, nvars, style)),
            _ => parts.push(format!("{}^{}", var_name(i, nvars, style), e)),
        }
    }
    parts.join("*")
}

/// The polynomial alone, e.g. `x^3+y^3+z^3-3`.
pub fn polynomial_string(p: &Polynomial, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, m) in p.monomials().iter().enumerate() {
        let negative = m.coeff().sign() == num_bigint::Sign::Minus;
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        out.push_str(&monomial_body(m, p.nvars(), style));
    }
    out
}

/// The equation form: polynomial followed by `=0`.
pub fn equation_string(p: &Polynomial, style: Style) -> String {
    let mut s = polynomial_string(p, style);
    s.push_str("=0");
    s
}
