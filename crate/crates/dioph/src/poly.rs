//! Multivariate integer polynomials in reduced form, plus the size and
//! length measures.
//!
//! A [`Polynomial`] is a sum of [`Monomial`]s over variables indexed
//! `0..nvars`. The reduced form merges monomials with equal exponent
//! vectors, drops zero coefficients, and keeps monomials sorted in the
//! canonical order: total degree descending, then exponent vector
//! lexicographically descending. Every constructor and arithmetic operation
//! returns reduced polynomials, so equality of values is equality of
//! representation.
//!
//! Measures substitute 2 for every variable and drop coefficient signs:
//! size adds the resulting monomial weights, length multiplies them. Both
//! are exact `BigInt` computations; the logarithmic length is reported in
//! exact tenths (see [`Measures::l_times_10`]).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use thiserror::Error;

/// Number of variables exceeds what a value tuple or substitution provides.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("arity mismatch: polynomial has {expected} variables, got {found} values")]
pub struct ArityMismatch {
    pub expected: usize,
    pub found: usize,
}

/// One term: a nonzero coefficient times a product of variable powers.
///
/// The exponent vector always has length `nvars` of the owning polynomial;
/// `Polynomial` constructors pad short vectors with zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    coeff: BigInt,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(coeff: BigInt, exponents: Vec<u32>) -> Self {
        Monomial { coeff, exponents }
    }

    pub fn constant(coeff: BigInt, nvars: usize) -> Self {
        Monomial { coeff, exponents: vec![0; nvars] }
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Total degree: sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    fn padded(mut self, nvars: usize) -> Self {
        debug_assert!(self.exponents.len() <= nvars);
        self.exponents.resize(nvars, 0);
        self
    }

    /// Weight under the measures: `|coeff| * 2^degree`.
    fn weight(&self) -> BigInt {
        self.coeff.abs() << self.degree()
    }
}

/// Canonical monomial order: total degree descending, then exponent vector
/// lexicographically descending. Returns `Less` when `a` comes first.
pub(crate) fn cmp_canonical(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// A reduced multivariate polynomial over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    monomials: Vec<Monomial>,
}

impl Polynomial {
    /// Builds the reduced form: pads exponent vectors to `nvars`, merges
    /// equal exponent vectors, drops zero coefficients, sorts canonically.
    ///
    /// Panics if a monomial mentions a variable index `>= nvars`.
    pub fn new(nvars: usize, monomials: Vec<Monomial>) -> Self {
        let mut padded: Vec<Monomial> = monomials
            .into_iter()
            .map(|m| {
                assert!(
                    m.exponents.len() <= nvars,
                    "monomial over {} variables in a polynomial declared with {}",
                    m.exponents.len(),
                    nvars
                );
                m.padded(nvars)
            })
            .collect();
        padded.sort_by(|a, b| cmp_canonical(&a.exponents, &b.exponents));
        let mut reduced: Vec<Monomial> = Vec::with_capacity(padded.len());
        for m in padded {
            match reduced.last_mut() {
                Some(last) if last.exponents == m.exponents => last.coeff += m.coeff,
                _ => reduced.push(m),
            }
        }
        reduced.retain(|m| !m.coeff.is_zero());
        Polynomial { nvars, monomials: reduced }
    }

    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, monomials: Vec::new() }
    }

    pub fn constant(value: BigInt, nvars: usize) -> Self {
        if value.is_zero() {
            Self::zero(nvars)
        } else {
            Polynomial { nvars, monomials: vec![Monomial::constant(value, nvars)] }
        }
    }

    /// The single variable `x_index` as a polynomial over `nvars` variables.
    pub fn variable(index: usize, nvars: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Polynomial { nvars, monomials: vec![Monomial::new(BigInt::one(), exponents)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn num_monomials(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.monomials.iter().all(Monomial::is_constant)
    }

    /// Total degree; 0 for constants and the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.monomials.first().map_or(0, Monomial::degree)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.monomials
            .iter()
            .map(|m| m.exponents.get(var).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Gcd of the absolute coefficient values; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for m in &self.monomials {
            g = g.gcd(&m.coeff);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Same polynomial viewed over `nvars >= self.nvars()` variables.
    pub fn pad_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Polynomial {
            nvars,
            monomials: self.monomials.iter().map(|m| m.clone().padded(nvars)).collect(),
        }
    }

    /// Drops unused variable indices, preserving the relative order of the
    /// used ones. Returns the compressed polynomial and the original index
    /// of each kept variable.
    pub fn compress_vars(&self) -> (Polynomial, Vec<usize>) {
        let mut used = vec![false; self.nvars];
        for m in &self.monomials {
            for (i, &e) in m.exponents.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        let kept: Vec<usize> = (0..self.nvars).filter(|&i| used[i]).collect();
        let monomials = self
            .monomials
            .iter()
            .map(|m| {
                Monomial::new(m.coeff.clone(), kept.iter().map(|&i| m.exponents[i]).collect())
            })
            .collect();
        (Polynomial { nvars: kept.len(), monomials }, kept)
    }

    /// True when every variable index below `nvars` actually occurs.
    pub fn all_vars_used(&self) -> bool {
        let mut used = vec![false; self.nvars];
        for m in &self.monomials {
            for (i, &e) in m.exponents.iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.into_iter().all(|u| u)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let nvars = self.nvars.max(other.nvars);
        let mut monomials = Vec::with_capacity(self.monomials.len() + other.monomials.len());
        monomials.extend(self.monomials.iter().cloned());
        monomials.extend(other.monomials.iter().cloned());
        Polynomial::new(nvars, monomials)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            monomials: self
                .monomials
                .iter()
                .map(|m| Monomial::new(-&m.coeff, m.exponents.clone()))
                .collect(),
        }
    }

    /// Multiplies all coefficients by a constant.
    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            monomials: self
                .monomials
                .iter()
                .map(|m| Monomial::new(k * &m.coeff, m.exponents.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let nvars = self.nvars.max(other.nvars);
        let mut monomials = Vec::with_capacity(self.monomials.len() * other.monomials.len());
        for a in &self.monomials {
            for b in &other.monomials {
                let mut exponents = vec![0u32; nvars];
                for (i, &e) in a.exponents.iter().enumerate() {
                    exponents[i] += e;
                }
                for (i, &e) in b.exponents.iter().enumerate() {
                    exponents[i] += e;
                }
                monomials.push(Monomial::new(&a.coeff * &b.coeff, exponents));
            }
        }
        Polynomial::new(nvars, monomials)
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut acc = Polynomial::constant(BigInt::one(), self.nvars);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Evaluates at an integer point. `values` must supply one value per
    /// variable, in index order.
    pub fn evaluate(&self, values: &[BigInt]) -> Result<BigInt, ArityMismatch> {
        if values.len() != self.nvars {
            return Err(ArityMismatch { expected: self.nvars, found: values.len() });
        }
        // Power tables per variable avoid re-exponentiating shared factors.
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(self.nvars);
        for (i, v) in values.iter().enumerate() {
            let max_e = self.degree_in(i) as usize;
            let mut table = Vec::with_capacity(max_e + 1);
            table.push(BigInt::one());
            for _ in 0..max_e {
                table.push(table.last().unwrap() * v);
            }
            powers.push(table);
        }
        let mut total = BigInt::zero();
        for m in &self.monomials {
            let mut term = m.coeff.clone();
            for (i, &e) in m.exponents.iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes a polynomial for each variable. All images must share a
    /// variable count; the result lives over the images' variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, ArityMismatch> {
        if images.len() != self.nvars {
            return Err(ArityMismatch { expected: self.nvars, found: images.len() });
        }
        let out_vars = images.iter().map(Polynomial::nvars).max().unwrap_or(0);
        let images: Vec<Polynomial> = images.iter().map(|p| p.pad_vars(out_vars)).collect();
        // Incremental power tables per image, grown on demand.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(BigInt::one(), out_vars), p.clone()])
            .collect();
        let mut total = Polynomial::zero(out_vars);
        for m in &self.monomials {
            let mut term = Polynomial::constant(m.coeff.clone(), out_vars);
            for (i, &e) in m.exponents.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&powers[i][e as usize]);
                }
            }
            total = total.add(&term);
        }
        Ok(total)
    }

    /// Size: sum of `|coeff| * 2^degree` over all monomials.
    pub fn size_h(&self) -> BigInt {
        self.monomials.iter().map(Monomial::weight).sum()
    }

    /// Length: product of `|coeff| * 2^degree` over all monomials; 1 for
    /// the zero polynomial so the logarithm stays defined.
    pub fn length_l(&self) -> BigInt {
        self.monomials
            .iter()
            .map(Monomial::weight)
            .fold(BigInt::one(), |acc, w| acc * w)
    }

    pub fn measures(&self) -> Measures {
        let length = self.length_l();
        Measures {
            size_h: self.size_h(),
            length_big_l: length.clone(),
            l_times_10: log2_tenths(&length),
            degree: self.degree(),
            num_monomials: self.num_monomials(),
            nvars: self.nvars,
        }
    }
}

/// The measures of one polynomial, computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measures {
    /// `H(P)`: substitute 2 for each variable, coefficients by absolute value, sum.
    pub size_h: BigInt,
    /// `L(P)`: same weights, multiplied.
    pub length_big_l: BigInt,
    /// `l(P) = log2 L(P)` rounded half-up to one decimal, times 10. Exact:
    /// computed by integer comparison of `L^20` against powers of two.
    pub l_times_10: u64,
    pub degree: u32,
    pub num_monomials: usize,
    pub nvars: usize,
}

/// Rounds `10 * log2(value)` to the nearest integer, halves up. `value >= 1`.
///
/// `t` is the unique integer with `2^(2t-1) <= value^20 < 2^(2t+1)`: the
/// condition says `t - 1/2 <= 10*log2(value) < t + 1/2`.
pub fn log2_tenths(value: &BigInt) -> u64 {
    let v: BigUint = value.to_biguint().expect("length is positive");
    assert!(!v.is_zero(), "log of zero");
    let v20 = v.pow(20);
    let bits = v20.bits(); // 2^(bits-1) <= v20 < 2^bits
    let one = BigUint::one();
    // Candidates near bits/2; the window [2^(2t-1), 2^(2t+1)) has width two
    // binary orders, so one of these fits.
    let base = bits / 2;
    for t in base.saturating_sub(1)..=base + 1 {
        let below_upper = v20 < (&one << (2 * t + 1));
        let above_lower = t == 0 || v20 >= (&one << (2 * t - 1));
        if above_lower && below_upper {
            return t;
        }
    }
    unreachable!("window search covers all cases");
}
