//! Equivalence of equations and canonical class representatives.
//!
//! Two equations are equivalent when one becomes the other by a sequence of:
//! multiplying the polynomial by a nonzero integer constant, replacing a
//! variable `x_i` by `-x_i`, and permuting (renaming) variables. Each class
//! has a canonical representative: divide out the content, then among all
//! `n! * 2^n` signed renamings (with the sign of the whole polynomial chosen
//! so the leading coefficient is positive) take the member whose canonical
//! serialization is byte-lexicographically smallest.
//!
//! The search tries all `n!` renamings, but for each renaming the best sign
//! choice is found by linear algebra over GF(2) rather than trying all `2^n`
//! masks: once the variable order is fixed, so are the monomial order and the
//! coefficient magnitudes, and a sign flip toggles exactly the monomials where
//! the flipped variable appears with odd exponent. Minimizing the serialized
//! string then means minimizing a bit vector over an affine space, which an
//! echelon basis does directly. The factorial part still grows fast, so the
//! search refuses polynomials in more than [`DEFAULT_VAR_LIMIT`] variables
//! unless a caller raises the limit explicitly.

use crate::poly::{cmp_canonical, Monomial, Polynomial};
use crate::render::{equation_string, Style};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

/// Variable-count ceiling for the brute-force canonical search.
pub const DEFAULT_VAR_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("canonicalization over {nvars} variables exceeds the limit of {limit} (the search is factorial in the variable count)")]
    TooManyVariables { nvars: usize, limit: usize },
}

/// The witness mapping an input polynomial to its class representative.
///
/// Applied in order: divide every coefficient by `content`, negate the
/// variables marked in `var_negations`, rename variable `i` to
/// `permutation[i]`, and finally negate the whole polynomial if `negate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    pub content: BigInt,
    pub negate: bool,
    pub var_negations: Vec<bool>,
    pub permutation: Vec<usize>,
}

impl Transform {
    pub fn identity(nvars: usize) -> Self {
        Transform {
            content: BigInt::one(),
            negate: false,
            var_negations: vec![false; nvars],
            permutation: (0..nvars).collect(),
        }
    }

    /// Applies the transform; `p` must have the arity the transform was
    /// built for and content divisible by `self.content`.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.permutation.len(), "transform arity mismatch");
        let monomials = p
            .monomials()
            .iter()
            .map(|m| {
                let mut coeff = m.coeff() / &self.content;
                let mut flips = 0u32;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if self.var_negations[i] && e % 2 == 1 {
                        flips += 1;
                    }
                }
                if flips % 2 == 1 {
                    coeff = -coeff;
                }
                if self.negate {
                    coeff = -coeff;
                }
                let mut exps = vec![0u32; p.nvars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[self.permutation[i]] = e;
                }
                Monomial::new(coeff, exps)
            })
            .collect();
        Polynomial::new(p.nvars(), monomials)
    }
}

/// A class representative plus the transform that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub rep: Polynomial,
    pub transform: Transform,
}

impl CanonicalForm {
    /// The canonical serialization of the representative, `x1..xn` names.
    pub fn serialization(&self) -> String {
        equation_string(&self.rep, Style::Canonical)
    }
}

/// Divides out the content and flips the global sign so the leading
/// coefficient is positive. The zero polynomial is returned unchanged.
pub fn normalize_content(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let content = p.content();
    let mut q = if content.is_one() {
        p.clone()
    } else {
        Polynomial::new(
            p.nvars(),
            p.monomials()
                .iter()
                .map(|m| Monomial::new(m.coeff() / &content, m.exponents().to_vec()))
                .collect(),
        )
    };
    if q.monomials()[0].coeff().is_negative() {
        q = q.neg();
    }
    q
}

/// Canonicalizes with the default variable limit.
pub fn canonicalize(p: &Polynomial) -> Result<CanonicalForm, EquivalenceError> {
    canonicalize_with_limit(p, DEFAULT_VAR_LIMIT)
}

/// Bit vector over the monomials of one ordered candidate, index 0 most
/// significant, so comparing word slices compares sign patterns in the same
/// order the serialized strings would compare.
#[derive(Clone, PartialEq, Eq)]
struct SignVec {
    words: Vec<u64>,
}

impl SignVec {
    fn zero(len: usize) -> Self {
        SignVec { words: vec![0; len.div_ceil(64)] }
    }

    fn set(&mut self, j: usize) {
        self.words[j / 64] |= 1u64 << (63 - (j % 64));
    }

    fn get(&self, j: usize) -> bool {
        self.words[j / 64] & (1u64 << (63 - (j % 64))) != 0
    }

    fn xor_assign(&mut self, other: &SignVec) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Index of the most significant set bit.
    fn leading_one(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * 64 + self.words[i].leading_zeros() as usize)
    }
}

/// Sign choice for one fixed variable order: minimizes the monomial sign
/// pattern over the affine space reachable by variable negations and a global
/// flip. Returns the minimal pattern plus a witness (negation mask, global
/// flip) reaching it.
///
/// `signs` holds the current pattern; `columns[j]` is the odd-exponent mask of
/// the `j`-th ordered monomial (bit `i` set when negating variable `i` flips
/// that monomial). The reachable patterns form `signs + span{col_i, all-ones}`
/// over GF(2); the lexicographic minimum of a coset is the unique element that
/// is zero at every pivot of an echelon basis of the span.
fn minimize_signs(mut signs: SignVec, columns: &[u32], n: usize) -> (SignVec, u32, bool) {
    let k = columns.len();
    let mut generators: Vec<(SignVec, u32, bool)> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut col = SignVec::zero(k);
        for (j, odd) in columns.iter().enumerate() {
            if odd & (1 << i) != 0 {
                col.set(j);
            }
        }
        generators.push((col, 1u32 << i, false));
    }
    let mut ones = SignVec::zero(k);
    for j in 0..k {
        ones.set(j);
    }
    generators.push((ones, 0, true));

    // Echelon basis keyed by pivot position.
    let mut pivots: Vec<Option<(SignVec, u32, bool)>> = vec![None; k];
    for (mut v, mut mask, mut flip) in generators {
        while let Some(lead) = v.leading_one() {
            match &pivots[lead] {
                Some((bv, bm, bf)) => {
                    v.xor_assign(bv);
                    mask ^= bm;
                    flip ^= bf;
                }
                None => {
                    pivots[lead] = Some((v, mask, flip));
                    break;
                }
            }
        }
    }

    // Clear every pivot position in significance order; basis vectors only
    // touch positions at or after their own pivot, so cleared bits stay 0.
    let mut mask = 0u32;
    let mut flip = false;
    for j in 0..k {
        if signs.get(j) {
            if let Some((bv, bm, bf)) = &pivots[j] {
                signs.xor_assign(bv);
                mask ^= bm;
                flip ^= bf;
            }
        }
    }
    (signs, mask, flip)
}

/// Finds the class representative: for each of the `n!` renamings of the
/// content-free form, picks the optimal signs by [`minimize_signs`] and keeps
/// the serialization-minimal candidate overall.
///
/// Unused variable indices are compressed away first; the transform refers
/// to the compressed polynomial (for equations parsed by this crate the two
/// coincide, since parsing compresses).
pub fn canonicalize_with_limit(
    p: &Polynomial,
    limit: usize,
) -> Result<CanonicalForm, EquivalenceError> {
    let (compressed, _) = p.compress_vars();
    let n = compressed.nvars();
    if n > limit {
        return Err(EquivalenceError::TooManyVariables { nvars: n, limit });
    }
    if compressed.is_zero() {
        return Ok(CanonicalForm { rep: compressed, transform: Transform::identity(n) });
    }

    let content = compressed.content();
    let base: Vec<(BigInt, Vec<u32>, u32)> = compressed
        .monomials()
        .iter()
        .map(|m| {
            let coeff = m.coeff() / &content;
            // Bit i set when exponent of variable i is odd: negating
            // variable i flips this monomial's sign.
            let odd: u32 = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e % 2 == 1)
                .map(|(i, _)| 1u32 << i)
                .sum();
            (coeff, m.exponents().to_vec(), odd)
        })
        .collect();
    let k = base.len();

    let mut best: Option<(String, Polynomial, Vec<usize>, u32, bool)> = None;
    for perm in (0..n).permutations(n) {
        let permuted: Vec<Vec<u32>> = base
            .iter()
            .map(|(_, exps, _)| {
                let mut e = vec![0u32; n];
                for (i, &x) in exps.iter().enumerate() {
                    e[perm[i]] = x;
                }
                e
            })
            .collect();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| cmp_canonical(&permuted[a], &permuted[b]));

        let mut signs = SignVec::zero(k);
        for (j, &idx) in order.iter().enumerate() {
            if base[idx].0.is_negative() {
                signs.set(j);
            }
        }
        let columns: Vec<u32> = order.iter().map(|&idx| base[idx].2).collect();
        let (min_signs, mask, negate) = minimize_signs(signs, &columns, n);

        let monomials: Vec<Monomial> = order
            .iter()
            .enumerate()
            .map(|(j, &idx)| {
                let magnitude = base[idx].0.abs();
                let c = if min_signs.get(j) { -magnitude } else { magnitude };
                Monomial::new(c, permuted[idx].clone())
            })
            .collect();
        let cand = Polynomial::new(n, monomials);
        let s = equation_string(&cand, Style::Canonical);
        let better = match &best {
            None => true,
            Some((bs, ..)) => s < *bs,
        };
        if better {
            best = Some((s, cand, perm, mask, negate));
        }
    }

    let (_, rep, permutation, mask, negate) = best.expect("nonzero polynomial has candidates");
    let transform = Transform {
        content,
        negate,
        var_negations: (0..n).map(|i| mask & (1 << i) != 0).collect(),
        permutation,
    };
    Ok(CanonicalForm { rep, transform })
}

/// Class-membership test. Cheap invariants (arity, monomial count, degree
/// multiset, content-free coefficient magnitudes, size) filter first; only
/// survivors pay for two canonicalizations.
pub fn are_equivalent(p: &Polynomial, q: &Polynomial) -> Result<bool, EquivalenceError> {
    let (a, _) = p.compress_vars();
    let (b, _) = q.compress_vars();
    if a.nvars() != b.nvars() || a.num_monomials() != b.num_monomials() {
        return Ok(false);
    }
    let na = normalize_content(&a);
    let nb = normalize_content(&b);
    if na.size_h() != nb.size_h() {
        return Ok(false);
    }
    let mut da: Vec<u32> = na.monomials().iter().map(Monomial::degree).collect();
    let mut db: Vec<u32> = nb.monomials().iter().map(Monomial::degree).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let mut ca: Vec<BigInt> = na.monomials().iter().map(|m| m.coeff().abs()).collect();
    let mut cb: Vec<BigInt> = nb.monomials().iter().map(|m| m.coeff().abs()).collect();
    ca.sort();
    cb.sort();
    if ca != cb {
        return Ok(false);
    }
    Ok(canonicalize(&na)?.rep == canonicalize(&nb)?.rep)
}

/// Runs `f` over every signed-permutation image of `p` (content untouched),
/// stopping early when `f` returns true. Used for class-level category
/// checks.
pub(crate) fn any_image<F>(p: &Polynomial, mut f: F) -> bool
where
    F: FnMut(&Polynomial) -> bool,
{
    let n = p.nvars();
    let base: Vec<(BigInt, Vec<u32>, u32)> = p
        .monomials()
        .iter()
        .map(|m| {
            let odd: u32 = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e % 2 == 1)
                .map(|(i, _)| 1u32 << i)
                .sum();
            (m.coeff().clone(), m.exponents().to_vec(), odd)
        })
        .collect();
    for perm in (0..n).permutations(n) {
        for mask in 0u32..(1u32 << n) {
            let monomials: Vec<Monomial> = base
                .iter()
                .map(|(coeff, exps, odd)| {
                    let mut c = coeff.clone();
                    if (mask & odd).count_ones() % 2 == 1 {
                        c = -c;
                    }
                    let mut e = vec![0u32; n];
                    for (i, &x) in exps.iter().enumerate() {
                        e[perm[i]] = x;
                    }
                    Monomial::new(c, e)
                })
                .collect();
            let image = Polynomial::new(n, monomials);
            if f(&image) {
                return true;
            }
        }
    }
    false
}
