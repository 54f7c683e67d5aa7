//! Parametric solution families, verified symbolically.
//!
//! A family for an equation `P(x_1..x_n) = 0` is a tuple of polynomials
//! `(F_1..F_n)` in parameters `u_1..u_k` such that substituting `x_i = F_i`
//! makes `P` vanish identically: every integer parameter assignment yields
//! a solution. Verification is exact expansion to the zero polynomial,
//! never sampling; whether a family (or a finite union of them) covers the
//! whole solution set is a different and much harder question, so coverage
//! of a single witness is only checked exhaustively inside a parameter box.

use crate::parse::{parse_component, ParseError};
use crate::poly::{ArityMismatch, Polynomial};
use crate::render::{polynomial_string, Style};
use crate::search::SolutionTuple;
use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A candidate parametrization: one component polynomial per equation
/// variable, all over the same `k` parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParametricFamily {
    k: usize,
    components: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("component {index}: {source}")]
    Component {
        index: usize,
        #[source]
        source: ParseError,
    },
    #[error("coverage scan needs {needed} member evaluations, over the {budget} allowance; shrink the parameter box")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error(transparent)]
    Arity(#[from] ArityMismatch),
}

/// Member evaluations allowed in one [`covers_witness`] call.
pub const COVERAGE_BUDGET: u128 = 100_000_000;

/// Serialization shape of a family: parameter count plus component
/// expressions in `u v w / u<k>` names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub k: usize,
    pub components: Vec<String>,
}

impl ParametricFamily {
    pub fn new(k: usize, components: Vec<Polynomial>) -> Result<Self, ArityMismatch> {
        for c in &components {
            if c.nvars() > k {
                return Err(ArityMismatch { expected: k, found: c.nvars() });
            }
        }
        let components = components.into_iter().map(|c| c.pad_vars(k)).collect();
        Ok(ParametricFamily { k, components })
    }

    /// Parses component strings such as `["1-6*u^3", "-6*u^2", "1+6*u^3"]`.
    pub fn from_strings(k: usize, components: &[String]) -> Result<Self, FamilyError> {
        let polys = components
            .iter()
            .enumerate()
            .map(|(index, text)| {
                parse_component(text, k).map_err(|source| FamilyError::Component { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ParametricFamily { k, components: polys })
    }

    pub fn from_spec(spec: &FamilySpec) -> Result<Self, FamilyError> {
        Self::from_strings(spec.k, &spec.components)
    }

    pub fn to_spec(&self) -> FamilySpec {
        FamilySpec {
            k: self.k,
            components: self
                .components
                .iter()
                .map(|c| polynomial_string(c, Style::Canonical).replace('x', "u"))
                .collect(),
        }
    }

    pub fn param_count(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// The same family with components permuted.
    fn permuted(&self, order: &[usize]) -> ParametricFamily {
        ParametricFamily {
            k: self.k,
            components: order.iter().map(|&i| self.components[i].clone()).collect(),
        }
    }
}

/// True iff substituting the family into `P` expands to the zero
/// polynomial, making every parameter assignment a solution.
pub fn verify_family(p: &Polynomial, family: &ParametricFamily) -> Result<bool, ArityMismatch> {
    if family.components.len() != p.nvars() {
        return Err(ArityMismatch { expected: p.nvars(), found: family.components.len() });
    }
    Ok(p.substitute(&family.components)?.is_zero())
}

/// Evaluates each component at a parameter tuple.
pub fn family_member(
    family: &ParametricFamily,
    params: &[BigInt],
) -> Result<SolutionTuple, ArityMismatch> {
    if params.len() != family.k {
        return Err(ArityMismatch { expected: family.k, found: params.len() });
    }
    let values = family
        .components
        .iter()
        .map(|c| c.evaluate(params))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SolutionTuple::new(values))
}

/// Exhaustively checks whether any family attains the witness at some
/// parameter tuple in `[-u_box, u_box]^k`. With `adjoin_permutations`, a
/// permutation of the witness counts as attained (useful for symmetric
/// equations, where families are usually quoted up to coordinate order).
/// `false` only means "not covered within the box."
pub fn covers_witness(
    families: &[ParametricFamily],
    witness: &SolutionTuple,
    u_box: u64,
    adjoin_permutations: bool,
) -> Result<bool, FamilyError> {
    let mut needed: u128 = 0;
    for family in families {
        let points = (2 * u_box as u128 + 1)
            .checked_pow(family.k as u32)
            .unwrap_or(u128::MAX);
        let variants: u128 = if adjoin_permutations {
            (1..=family.components.len() as u128).try_fold(1u128, u128::checked_mul).unwrap_or(u128::MAX)
        } else {
            1
        };
        needed = needed.saturating_add(points.saturating_mul(variants));
    }
    if needed > COVERAGE_BUDGET {
        return Err(FamilyError::BudgetExceeded { needed, budget: COVERAGE_BUDGET });
    }
    for family in families {
        if family.components.len() != witness.values.len() {
            return Err(FamilyError::Arity(ArityMismatch {
                expected: witness.values.len(),
                found: family.components.len(),
            }));
        }
        let variants: Vec<ParametricFamily> = if adjoin_permutations {
            (0..family.components.len())
                .permutations(family.components.len())
                .map(|order| family.permuted(&order))
                .collect()
        } else {
            vec![family.clone()]
        };
        let mut params = vec![BigInt::from(-(u_box as i64)); family.k];
        loop {
            for variant in &variants {
                let member = family_member(variant, &params)?;
                if member == *witness {
                    return Ok(true);
                }
            }
            // Odometer increment over the parameter box.
            let mut carry = true;
            for slot in params.iter_mut() {
                *slot += 1;
                if *slot > BigInt::from(u_box) {
                    *slot = BigInt::from(-(u_box as i64));
                } else {
                    carry = false;
                    break;
                }
            }
            if carry {
                break;
            }
        }
    }
    Ok(false)
}
