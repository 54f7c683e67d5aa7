//! Exhaustive enumeration of equivalence classes with size `H` up to a bound.
//!
//! `H(P)` sums `|a| * 2^deg` over monomials, so a bound `h_max` caps
//! everything at once: a polynomial in `n` variables needs every variable to
//! occur, costing at least 2 per variable, hence `n <= h_max / 2`; a
//! monomial of degree `d` costs at least `2^d`, hence `d <= log2(h_max)`.
//!
//! Strategy: for each variable count, enumerate shapes (sets of distinct
//! exponent vectors covering all variables) within budget, discard shapes
//! that a variable permutation would map to a smaller shape (coefficients
//! are enumerated over all monomials, so a permuted shape generates the
//! same classes), assign coefficient magnitudes summing within budget with
//! overall content 1, assign signs up to a global flip, and canonicalize.
//! Distinct inputs often collapse; a map keyed by canonical serialization
//! deduplicates. Output order is `(H, serialization)`, deterministic down
//! to the byte.

use crate::classify::{class_flags_with_limit, classify, CategoryFlags};
use crate::equivalence::{canonicalize_with_limit, EquivalenceError, DEFAULT_VAR_LIMIT};
use crate::poly::{cmp_canonical, Monomial, Polynomial};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("h_max must be at least 2; the smallest equation, x = 0, has size 2")]
    HMaxTooSmall { h_max: u64 },
    #[error("enumeration to H = {h_max} can reach {needed} variables, beyond the canonical-search limit {limit}; restrict the variable range")]
    VarLimitExceeded { h_max: u64, needed: usize, limit: usize },
    #[error(transparent)]
    Equivalence(#[from] EquivalenceError),
}

/// Optional restrictions applied to the canonical representative of each
/// class. Symmetric and cyclic are judged class-wide.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassFilter {
    pub min_nvars: Option<usize>,
    pub max_nvars: Option<usize>,
    pub min_degree: Option<u32>,
    pub max_degree: Option<u32>,
    pub min_monomials: Option<usize>,
    pub max_monomials: Option<usize>,
    pub homogeneous: Option<bool>,
    pub symmetric: Option<bool>,
    pub cyclic: Option<bool>,
    pub independent_monomials: Option<bool>,
}

impl ClassFilter {
    fn admits_shape(&self, flags: &CategoryFlags) -> bool {
        self.min_nvars.is_none_or(|v| flags.nvars >= v)
            && self.max_nvars.is_none_or(|v| flags.nvars <= v)
            && self.min_degree.is_none_or(|v| flags.degree >= v)
            && self.max_degree.is_none_or(|v| flags.degree <= v)
            && self.min_monomials.is_none_or(|v| flags.num_monomials >= v)
            && self.max_monomials.is_none_or(|v| flags.num_monomials <= v)
            && self.homogeneous.is_none_or(|v| flags.homogeneous == v)
            && self.independent_monomials.is_none_or(|v| flags.independent_monomials == v)
    }

    fn needs_class_symmetry(&self) -> bool {
        self.symmetric.is_some() || self.cyclic.is_some()
    }

    /// Full check against already-computed class flags, symmetry included.
    pub fn admits(&self, flags: &CategoryFlags) -> bool {
        self.admits_shape(flags)
            && self.symmetric.is_none_or(|v| flags.symmetric == v)
            && self.cyclic.is_none_or(|v| flags.cyclic == v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub h_max: u64,
    pub filter: ClassFilter,
    /// Ceiling for the canonical search; raising it beyond
    /// [`DEFAULT_VAR_LIMIT`] makes large-variable queries possible but slow.
    pub var_limit: usize,
}

impl EnumerationQuery {
    pub fn new(h_max: u64) -> Self {
        EnumerationQuery { h_max, filter: ClassFilter::default(), var_limit: DEFAULT_VAR_LIMIT }
    }
}

/// One enumerated class: the representative, its serialization, its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedClass {
    pub h: u64,
    pub serialization: String,
    pub rep: Polynomial,
}

fn log2_floor(v: u64) -> u32 {
    63 - v.leading_zeros()
}

/// All exponent vectors over `n` variables with `2^degree <= h_max`,
/// constant vector included, in canonical order.
fn vector_pool(n: usize, h_max: u64) -> Vec<Vec<u32>> {
    let max_deg = log2_floor(h_max);
    let mut pool = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(pool: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, left: u32) {
        if var == current.len() {
            pool.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[var] = e;
            rec(pool, current, var + 1, left - e);
        }
        current[var] = 0;
    }
    rec(&mut pool, &mut current, 0, max_deg);
    pool.sort_by(|a, b| cmp_canonical(a, b));
    pool
}

/// True when no variable permutation maps the shape to a strictly smaller
/// one (shapes compared as canonically sorted vector lists).
fn shape_is_perm_minimal(shape: &[Vec<u32>], n: usize) -> bool {
    use itertools::Itertools;
    let mut buf: Vec<Vec<u32>> = shape.to_vec();
    for perm in (0..n).permutations(n) {
        if perm.iter().enumerate().all(|(i, &p)| i == p) {
            continue;
        }
        buf.clear();
        for v in shape {
            let mut img = vec![0u32; n];
            for (i, &e) in v.iter().enumerate() {
                img[perm[i]] = e;
            }
            buf.push(img);
        }
        buf.sort_by(|a, b| cmp_canonical(a, b));
        let mut smaller = false;
        for (a, b) in buf.iter().zip(shape.iter()) {
            match cmp_canonical(a, b) {
                std::cmp::Ordering::Less => {
                    smaller = true;
                    break;
                }
                std::cmp::Ordering::Greater => break,
                std::cmp::Ordering::Equal => {}
            }
        }
        if smaller {
            return false;
        }
    }
    true
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Enumerates every class with `H <= h_max` passing the filter.
pub fn enumerate_classes(
    query: &EnumerationQuery,
) -> Result<Vec<EnumeratedClass>, EnumerateError> {
    let h_max = query.h_max;
    if h_max < 2 {
        return Err(EnumerateError::HMaxTooSmall { h_max });
    }
    let n_floor = query.filter.min_nvars.unwrap_or(1).max(1);
    let n_reach = (h_max / 2) as usize;
    let n_ceil = query.filter.max_nvars.unwrap_or(n_reach).min(n_reach);
    if n_ceil > query.var_limit {
        return Err(EnumerateError::VarLimitExceeded {
            h_max,
            needed: n_ceil,
            limit: query.var_limit,
        });
    }

    let mut classes: BTreeMap<String, EnumeratedClass> = BTreeMap::new();
    for n in n_floor..=n_ceil {
        let pool = vector_pool(n, h_max);
        let mut shape: Vec<usize> = Vec::new();
        enumerate_shapes(&pool, n, h_max, 0, 0, 0, &mut shape, &mut |shape_idx| {
            let vectors: Vec<Vec<u32>> = shape_idx.iter().map(|&i| pool[i].clone()).collect();
            if !shape_is_perm_minimal(&vectors, n) {
                return Ok(());
            }
            assign_coefficients(&vectors, n, h_max, query, &mut classes)
        })?;
    }

    let mut out: Vec<EnumeratedClass> = classes.into_values().collect();
    out.sort_by(|a, b| a.h.cmp(&b.h).then_with(|| a.serialization.cmp(&b.serialization)));
    Ok(out)
}

/// DFS over subsets of the vector pool. `cost` counts each chosen vector at
/// coefficient 1; a budget shortfall of `2 * uncovered` prunes, since
/// covering a variable costs at least 2.
fn enumerate_shapes<F>(
    pool: &[Vec<u32>],
    n: usize,
    h_max: u64,
    index: usize,
    cost: u64,
    covered: u32,
    shape: &mut Vec<usize>,
    emit: &mut F,
) -> Result<(), EnumerateError>
where
    F: FnMut(&[usize]) -> Result<(), EnumerateError>,
{
    let uncovered = n as u32 - covered.count_ones();
    if cost + 2 * u64::from(uncovered) > h_max {
        return Ok(());
    }
    if index == pool.len() {
        if uncovered == 0 && !shape.is_empty() {
            emit(shape)?;
        }
        return Ok(());
    }
    // Include pool[index].
    let vec_cost = 1u64 << pool[index].iter().sum::<u32>();
    if cost + vec_cost <= h_max {
        let mut newly = covered;
        for (i, &e) in pool[index].iter().enumerate() {
            if e > 0 {
                newly |= 1 << i;
            }
        }
        shape.push(index);
        enumerate_shapes(pool, n, h_max, index + 1, cost + vec_cost, newly, shape, emit)?;
        shape.pop();
    }
    // Skip pool[index].
    enumerate_shapes(pool, n, h_max, index + 1, cost, covered, shape, emit)
}

/// Assigns coefficient magnitudes (content 1) and signs (leading monomial
/// positive), canonicalizes, and records new classes.
fn assign_coefficients(
    vectors: &[Vec<u32>],
    n: usize,
    h_max: u64,
    query: &EnumerationQuery,
    classes: &mut BTreeMap<String, EnumeratedClass>,
) -> Result<(), EnumerateError> {
    let k = vectors.len();
    let weights: Vec<u64> = vectors.iter().map(|v| 1u64 << v.iter().sum::<u32>()).collect();
    let base_cost: u64 = weights.iter().sum();
    let mut magnitudes = vec![1u64; k];

    fn rec(
        j: usize,
        cost: u64,
        gcd: u64,
        magnitudes: &mut Vec<u64>,
        weights: &[u64],
        base_cost_rest: u64,
        h_max: u64,
        leaves: &mut Vec<Vec<u64>>,
    ) {
        if j == magnitudes.len() {
            if gcd == 1 {
                leaves.push(magnitudes.clone());
            }
            return;
        }
        // Later monomials each cost at least their weight at magnitude 1.
        let rest: u64 = base_cost_rest - weights[j];
        let mut a = 1u64;
        while cost + a * weights[j] + rest <= h_max {
            magnitudes[j] = a;
            rec(
                j + 1,
                cost + a * weights[j],
                gcd_u64(gcd, a),
                magnitudes,
                weights,
                rest,
                h_max,
                leaves,
            );
            a += 1;
        }
        magnitudes[j] = 1;
    }

    let mut leaves: Vec<Vec<u64>> = Vec::new();
    rec(0, 0, 0, &mut magnitudes, &weights, base_cost, h_max, &mut leaves);

    for mags in leaves {
        // Sign patterns over monomials 1..k; the leading monomial stays
        // positive because a global flip normalizes it anyway.
        for signs in 0u32..(1u32 << (k - 1)) {
            let monomials: Vec<Monomial> = (0..k)
                .map(|j| {
                    let mut c = BigInt::from(mags[j]);
                    if j > 0 && signs & (1 << (j - 1)) != 0 {
                        c = -c;
                    }
                    Monomial::new(c, vectors[j].clone())
                })
                .collect();
            let p = Polynomial::new(n, monomials);
            let form = canonicalize_with_limit(&p, query.var_limit)?;
            let serialization = form.serialization();
            if classes.contains_key(&serialization) {
                continue;
            }
            let flags = classify(&form.rep);
            if !query.filter.admits_shape(&flags) {
                continue;
            }
            if query.filter.needs_class_symmetry() {
                let cf = class_flags_with_limit(&form.rep, query.var_limit)?;
                if !(query.filter.symmetric.is_none_or(|v| cf.symmetric == v)
                    && query.filter.cyclic.is_none_or(|v| cf.cyclic == v))
                {
                    continue;
                }
            }
            let h = form.rep.size_h().to_u64().expect("H bounded by h_max");
            debug_assert!(h <= h_max);
            classes.insert(
                serialization.clone(),
                EnumeratedClass { h, serialization, rep: form.rep },
            );
        }
    }
    Ok(())
}

/// Class counts by size, `h = 2 ..= h_max`, zero-count sizes included.
pub fn count_classes(h_max: u64) -> Result<Vec<(u64, u64)>, EnumerateError> {
    let classes = enumerate_classes(&EnumerationQuery::new(h_max))?;
    let mut counts: BTreeMap<u64, u64> = (2..=h_max).map(|h| (h, 0)).collect();
    for c in &classes {
        *counts.get_mut(&c.h).expect("h within range") += 1;
    }
    Ok(counts.into_iter().collect())
}
