//! Structural categories and special equation shapes.
//!
//! Categories are syntactic properties of one polynomial as written:
//! homogeneous (all monomials share a degree), symmetric (invariant under
//! every variable transposition), cyclic (invariant under the rotation
//! `x1 -> x2 -> ... -> xn -> x1`), and independent monomials (no variable
//! appears in two monomials). Symmetric implies cyclic.
//!
//! Symmetry and cyclicity are not preserved by canonicalization: a class
//! can contain a symmetric member whose serialization-minimal member is
//! asymmetric (negating one variable of `x^3-x^2*y-x*y^2+y^3` gives the
//! smaller-printing but asymmetric `x^3+x^2*y-x*y^2-y^3`). [`class_flags`]
//! therefore reports symmetric/cyclic existentially over the whole class,
//! while [`classify`] reads the polynomial literally.

use crate::equivalence::{any_image, EquivalenceError, DEFAULT_VAR_LIMIT};
use crate::poly::{Monomial, Polynomial};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// Category flags plus the shape numbers they are judged against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryFlags {
    pub homogeneous: bool,
    pub symmetric: bool,
    pub cyclic: bool,
    pub independent_monomials: bool,
    pub nvars: usize,
    pub degree: u32,
    pub num_monomials: usize,
}

fn swapped(p: &Polynomial, i: usize, j: usize) -> Polynomial {
    let monomials = p
        .monomials()
        .iter()
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e.swap(i, j);
            Monomial::new(m.coeff().clone(), e)
        })
        .collect();
    Polynomial::new(p.nvars(), monomials)
}

fn rotated(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    let monomials = p
        .monomials()
        .iter()
        .map(|m| {
            let mut e = vec![0u32; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[(i + 1) % n] = x;
            }
            Monomial::new(m.coeff().clone(), e)
        })
        .collect();
    Polynomial::new(n, monomials)
}

fn is_symmetric(p: &Polynomial) -> bool {
    // Adjacent transpositions generate the symmetric group.
    (1..p.nvars()).all(|i| swapped(p, i - 1, i) == *p)
}

fn is_cyclic(p: &Polynomial) -> bool {
    p.nvars() < 2 || rotated(p) == *p
}

fn independent_monomials(p: &Polynomial) -> bool {
    let mut seen = vec![false; p.nvars()];
    for m in p.monomials() {
        for v in m.support() {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

/// Reads the categories of the polynomial exactly as written.
pub fn classify(p: &Polynomial) -> CategoryFlags {
    let degree = p.degree();
    CategoryFlags {
        homogeneous: p.monomials().iter().all(|m| m.degree() == degree),
        symmetric: is_symmetric(p),
        cyclic: is_symmetric(p) || is_cyclic(p),
        independent_monomials: independent_monomials(p),
        nvars: p.nvars(),
        degree,
        num_monomials: p.num_monomials(),
    }
}

/// Class-level categories: homogeneity, independence, and the shape numbers
/// are class invariants and read off directly; symmetric and cyclic hold
/// when any member of the class has them.
pub fn class_flags(p: &Polynomial) -> Result<CategoryFlags, EquivalenceError> {
    class_flags_with_limit(p, DEFAULT_VAR_LIMIT)
}

pub fn class_flags_with_limit(
    p: &Polynomial,
    limit: usize,
) -> Result<CategoryFlags, EquivalenceError> {
    let (compressed, _) = p.compress_vars();
    if compressed.nvars() > limit {
        return Err(EquivalenceError::TooManyVariables { nvars: compressed.nvars(), limit });
    }
    let mut flags = classify(&compressed);
    if !flags.symmetric {
        flags.symmetric = any_image(&compressed, is_symmetric);
    }
    if !flags.cyclic {
        flags.cyclic = flags.symmetric || any_image(&compressed, is_cyclic);
    }
    Ok(flags)
}

/// The special shapes singled out for three-variable and diagonal equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialFormKind {
    /// `a*x^p + b*y^q + c*z^r = 0`, mixed exponents.
    GeneralizedFermat,
    /// `a*x^d + b*y^d + c*z^d = 0`.
    ThreeTermDiagonal,
    /// `a_1*x_1^d + ... + a_n*x_n^d = 0`, `n != 3`.
    Diagonal,
}

/// A detected special shape. Exponents sort descending; coefficients follow
/// their exponents, ties broken by smaller magnitude first, then positive
/// sign first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialForm {
    pub kind: SpecialFormKind,
    pub exponents: Vec<u32>,
    pub coefficients: Vec<BigInt>,
    /// For three-term shapes: `1/p + 1/q + 1/r < 1`, compared exactly.
    pub hyperbolic: bool,
}

/// Recognizes sums of single-variable powers with no constant term, each
/// variable in exactly one monomial: three variables with mixed exponents
/// are generalized Fermat, equal exponents are (three-term) diagonal.
pub fn detect_special_form(p: &Polynomial) -> Option<SpecialForm> {
    let n = p.nvars();
    if n < 2 || p.num_monomials() != n {
        return None;
    }
    let mut seen = vec![false; n];
    let mut pairs: Vec<(u32, BigInt)> = Vec::with_capacity(n);
    for m in p.monomials() {
        let support: Vec<usize> = m.support().collect();
        if support.len() != 1 {
            return None;
        }
        let v = support[0];
        if seen[v] {
            return None;
        }
        seen[v] = true;
        pairs.push((m.exponents()[v], m.coeff().clone()));
    }
    // Every variable occurs (monomial count equals nvars and no repeats).
    pairs.sort_by(|(ea, ca), (eb, cb)| {
        eb.cmp(ea)
            .then_with(|| ca.abs().cmp(&cb.abs()))
            .then_with(|| cb.is_positive().cmp(&ca.is_positive()))
    });
    let exponents: Vec<u32> = pairs.iter().map(|(e, _)| *e).collect();
    let coefficients: Vec<BigInt> = pairs.iter().map(|(_, c)| c.clone()).collect();
    let equal_exponents = exponents.windows(2).all(|w| w[0] == w[1]);
    let (kind, hyperbolic) = if equal_exponents {
        let d = exponents[0];
        if n == 3 {
            (SpecialFormKind::ThreeTermDiagonal, d > 3)
        } else {
            (SpecialFormKind::Diagonal, false)
        }
    } else if n == 3 {
        let (p_, q, r) = (
            u128::from(exponents[0]),
            u128::from(exponents[1]),
            u128::from(exponents[2]),
        );
        // 1/p + 1/q + 1/r < 1, cleared of denominators.
        (SpecialFormKind::GeneralizedFermat, q * r + p_ * r + p_ * q < p_ * q * r)
    } else {
        return None;
    };
    Some(SpecialForm { kind, exponents, coefficients, hyperbolic })
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::parse::parse_equation;

    fn flags(text: &str) -> CategoryFlags {
        classify(&parse_equation(text).unwrap())
    }

    #[test]
    fn homogeneous_examples() {
        assert!(flags("x^3 + y^3 + z^3 + t^3 + s^3").homogeneous);
        assert!(flags("x^2*y + y^2*z + z^2*x").homogeneous);
        assert!(!flags("x^3 + y^3 + z^3 - 2").homogeneous);
        assert!(flags("x*y - z^2").homogeneous);
    }

    #[test]
    fn symmetric_implies_cyclic() {
        let f = flags("x^3 + y^3 + z^3 - 2");
        assert!(f.symmetric && f.cyclic);
        let f = flags("x + y + z + x*y*z");
        assert!(f.symmetric && f.cyclic);
    }

    #[test]
    fn cyclic_but_not_symmetric() {
        let f = flags("x^2*y + y^2*z + z^2*x - 1");
        assert!(f.cyclic && !f.symmetric);
        let f = flags("x^2*y + y^2*z + z^2*t + t^2*s + s^2*x");
        assert!(f.cyclic && !f.symmetric);
    }

    #[test]
    fn neither_cyclic_nor_symmetric() {
        let f = flags("x^2*y + y^2*z - 5");
        assert!(!f.cyclic && !f.symmetric);
    }

    #[test]
    fn independent_monomials_examples() {
        assert!(flags("x^3 + y^3 + z^3 - 2").independent_monomials);
        assert!(flags("x^2 + y*z - 7").independent_monomials);
        assert!(!flags("x^2*y + y^2*z").independent_monomials);
        assert!(!flags("x^2 + x - 1").independent_monomials);
    }

    #[test]
    fn class_flags_sees_hidden_symmetry() {
        // Negating y turns this into the symmetric x^3 - x^2*y - x*y^2 + y^3.
        let p = parse_equation("x^3 + x^2*y - x*y^2 - y^3").unwrap();
        assert!(!classify(&p).symmetric);
        let f = class_flags(&p).unwrap();
        assert!(f.symmetric && f.cyclic);
        // Shape numbers agree with the literal reading.
        assert_eq!(f.nvars, 2);
        assert_eq!(f.degree, 3);
    }

    #[test]
    fn class_flags_on_plainly_asymmetric_classes() {
        let f = class_flags(&parse_equation("x^2*y + y^2*z - 5").unwrap()).unwrap();
        assert!(!f.symmetric && !f.cyclic);
    }

    #[test]
    fn generalized_fermat_detection() {
        let sf = detect_special_form(&parse_equation("x^4 + 2y^3 + z^3").unwrap()).unwrap();
        assert_eq!(sf.kind, SpecialFormKind::GeneralizedFermat);
        assert_eq!(sf.exponents, vec![4, 3, 3]);
        assert_eq!(
            sf.coefficients,
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)]
        );
        // 1/4 + 1/3 + 1/3 = 11/12 < 1: hyperbolic.
        assert!(sf.hyperbolic);
        let sf = detect_special_form(&parse_equation("x^2 + 2y^3 - 3z^4").unwrap()).unwrap();
        // 1/2 + 1/3 + 1/4 = 13/12 >= 1: not hyperbolic.
        assert!(!sf.hyperbolic);
    }

    #[test]
    fn diagonal_detection() {
        let sf = detect_special_form(&parse_equation("4x^5 + 4y^5 + 11z^5").unwrap()).unwrap();
        assert_eq!(sf.kind, SpecialFormKind::ThreeTermDiagonal);
        assert_eq!(sf.exponents, vec![5, 5, 5]);
        assert!(sf.hyperbolic);
        let sf = detect_special_form(&parse_equation("x^3 + y^3 + z^3 + t^3 + s^3").unwrap())
            .unwrap();
        assert_eq!(sf.kind, SpecialFormKind::Diagonal);
        assert!(!sf.hyperbolic);
        let sf = detect_special_form(&parse_equation("x^4 - 2y^4").unwrap()).unwrap();
        assert_eq!(sf.kind, SpecialFormKind::Diagonal);
        assert_eq!(sf.exponents, vec![4, 4]);
    }

    #[test]
    fn near_misses_are_not_special() {
        // Constant term.
        assert!(detect_special_form(&parse_equation("x^3 + y^3 + z^3 - 2").unwrap()).is_none());
        // Mixed monomial.
        assert!(detect_special_form(&parse_equation("x^2*y + z^3 + t^3").unwrap()).is_none());
        // A variable in two monomials.
        assert!(detect_special_form(&parse_equation("x^3 + x^2 + y^3").unwrap()).is_none());
        // Mixed exponents over two variables: not a Fermat triple.
        assert!(detect_special_form(&parse_equation("x^4 + y^3").unwrap()).is_none());
        // Mixed exponents over four variables.
        assert!(detect_special_form(&parse_equation("x^4 + y^3 + z^3 + t^2").unwrap()).is_none());
    }

    #[test]
    fn coefficient_tie_breaks() {
        let sf = detect_special_form(&parse_equation("-x^3 + y^3 + 2z^3").unwrap()).unwrap();
        // Equal exponents: magnitudes ascending, positive before negative.
        assert_eq!(
            sf.coefficients,
            vec![BigInt::from(1), BigInt::from(-1), BigInt::from(2)]
        );
    }
}
