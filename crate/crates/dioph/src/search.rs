//! Bounded solution searches, exact one-variable solves, and modular
//! obstructions.
//!
//! [`box_search`] exhausts the box `[-B, B]^n` intersected with a mode
//! constraint (positivity, nonzero coordinates, minimum magnitude,
//! primitivity). Iteration is lexicographic with the most-constrained
//! variable innermost: the variable of highest degree, which, when its
//! degree is at most 2, is not iterated at all but solved exactly via
//! [`solve_for_last_variable`]. A limit caps the number of collected
//! solutions and a budget caps candidate evaluations; both stop the search
//! early and mark the outcome incomplete. An exhausted box is never
//! evidence of nonexistence, and the outcome type says so.
//!
//! [`modular_obstruction`] scans residues exhaustively for each modulus in
//! turn and reports the first modulus with no residue solution: a
//! certificate that the equation has no integer solutions at all.

use crate::poly::{ArityMismatch, Polynomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Default evaluation allowance for obstruction scans: enough for a clean
/// two-variable sweep of all default moduli, fast to exhaust otherwise.
pub const DEFAULT_OBSTRUCTION_BUDGET: u64 = 50_000_000;

/// One candidate or verified solution, coordinates in variable order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SolutionTuple {
    pub values: Vec<BigInt>,
}

impl SolutionTuple {
    pub fn new(values: Vec<BigInt>) -> Self {
        SolutionTuple { values }
    }

    /// All coordinates at least 1.
    pub fn is_positive(&self) -> bool {
        self.values.iter().all(|v| v.is_positive())
    }

    /// No zero coordinate.
    pub fn is_nonzero(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    /// Smallest coordinate magnitude.
    pub fn min_abs(&self) -> BigInt {
        self.values.iter().map(BigInt::abs).min().unwrap_or_else(BigInt::zero)
    }

    /// Gcd over all coordinates equals 1.
    pub fn is_primitive(&self) -> bool {
        let mut g = BigInt::zero();
        for v in &self.values {
            g = g.gcd(v);
            if g == BigInt::from(1) {
                return true;
            }
        }
        false
    }
}

impl std::fmt::Display for SolutionTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Which solutions count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    All,
    /// All coordinates `>= 1`.
    Positive,
    /// All coordinate magnitudes `>= min`.
    MinAbs { min: u64 },
    /// Gcd of coordinates is 1.
    Primitive,
    /// No zero coordinate.
    NonZero,
}

impl SearchMode {
    /// Per-coordinate constraint, checkable before the full tuple exists.
    fn admits_value(&self, v: &BigInt) -> bool {
        match self {
            SearchMode::All | SearchMode::Primitive => true,
            SearchMode::Positive => v.is_positive(),
            SearchMode::MinAbs { min } => v.abs() >= BigInt::from(*min),
            SearchMode::NonZero => !v.is_zero(),
        }
    }

    /// Whole-tuple constraint; only primitivity is not per-coordinate.
    fn admits_tuple(&self, s: &SolutionTuple) -> bool {
        match self {
            SearchMode::Primitive => s.is_primitive(),
            _ => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    /// Box half-width: coordinates range over `[-bound, bound]`.
    pub bound: u64,
    pub mode: SearchMode,
    /// Stop after collecting this many solutions.
    pub limit: Option<usize>,
    /// Stop after this many candidate evaluations (full-tuple evaluations,
    /// or one-variable solves when the solver is active). Setting a budget
    /// forces a sequential scan so the cut-off point is deterministic.
    pub budget: Option<u64>,
}

impl SearchSpec {
    pub fn new(bound: u64) -> Self {
        SearchSpec { bound, mode: SearchMode::All, limit: None, budget: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    LimitReached,
    BudgetExhausted,
}

/// Results of one box search. `complete` means the whole constrained box
/// was covered; it never claims anything outside the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Lexicographically sorted.
    pub solutions: Vec<SolutionTuple>,
    pub complete: bool,
    pub stopped: Option<StopReason>,
}

/// Exact check that a tuple solves `P = 0`.
pub fn verify_solution(p: &Polynomial, s: &SolutionTuple) -> Result<bool, ArityMismatch> {
    Ok(p.evaluate(&s.values)?.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("degree {degree} in the solved variable exceeds 2 after substitution")]
    DegreeTooHigh { degree: u32 },
    #[error("the substituted equation is identically zero; every integer is a root")]
    IdenticallyZero,
    #[error(transparent)]
    Arity(#[from] ArityMismatch),
}

/// Solves `P = 0` for variable `var` with every other variable fixed (the
/// values in `others` follow variable order, skipping `var`). Exact integer
/// roots via divisibility and discriminant reasoning; fails above degree 2.
pub fn solve_for_last_variable(
    p: &Polynomial,
    var: usize,
    others: &[BigInt],
) -> Result<Vec<BigInt>, SolveError> {
    let n = p.nvars();
    if var >= n || others.len() != n - 1 {
        return Err(SolveError::Arity(ArityMismatch { expected: n - 1, found: others.len() }));
    }
    // Collect the univariate coefficients c[e] of var^e.
    let top = p.degree_in(var) as usize;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for m in p.monomials() {
        let mut term = m.coeff().clone();
        for (i, &e) in m.exponents().iter().enumerate() {
            if i == var || e == 0 {
                continue;
            }
            let j = if i < var { i } else { i - 1 };
            term *= others[j].pow(e);
        }
        coeffs[m.exponents()[var] as usize] += term;
    }
    if let Some(bad) = (3..=top).rev().find(|&e| !coeffs[e].is_zero()) {
        return Err(SolveError::DegreeTooHigh { degree: bad as u32 });
    }
    let c0 = coeffs.first().cloned().unwrap_or_else(BigInt::zero);
    let c1 = coeffs.get(1).cloned().unwrap_or_else(BigInt::zero);
    let c2 = coeffs.get(2).cloned().unwrap_or_else(BigInt::zero);

    let mut roots = Vec::new();
    if !c2.is_zero() {
        let disc = &c1 * &c1 - BigInt::from(4) * &c2 * &c0;
        if disc.is_negative() {
            return Ok(roots);
        }
        let s = disc.sqrt();
        if &s * &s != disc {
            return Ok(roots);
        }
        let two_c2 = BigInt::from(2) * &c2;
        for numer in [-&c1 + &s, -&c1 - &s] {
            let (q, r) = numer.div_rem(&two_c2);
            if r.is_zero() && !roots.contains(&q) {
                roots.push(q);
            }
        }
    } else if !c1.is_zero() {
        let (q, r) = (-&c0).div_rem(&c1);
        if r.is_zero() {
            roots.push(q);
        }
    } else if c0.is_zero() {
        return Err(SolveError::IdenticallyZero);
    }
    roots.sort();
    Ok(roots)
}

/// Ascending values of one coordinate axis under the mode constraint.
#[derive(Debug, Clone)]
struct Axis {
    next: Option<i64>,
    hi: i64,
    min_abs: i64,
    skip_zero: bool,
}

impl Axis {
    fn new(bound: u64, mode: &SearchMode) -> Self {
        let hi = bound.min(i64::MAX as u64 / 4) as i64;
        let (lo, min_abs, skip_zero) = match mode {
            SearchMode::All | SearchMode::Primitive => (-hi, 0, false),
            SearchMode::Positive => (1, 0, false),
            SearchMode::NonZero => (-hi, 0, true),
            SearchMode::MinAbs { min } => {
                let k = (*min).min(i64::MAX as u64 / 4) as i64;
                (-hi, k, k > 0)
            }
        };
        let mut axis = Axis { next: Some(lo), hi, min_abs, skip_zero };
        axis.next = axis.first_valid(lo);
        axis
    }

    fn first_valid(&self, from: i64) -> Option<i64> {
        let mut v = from;
        loop {
            if v > self.hi {
                return None;
            }
            if (self.skip_zero && v == 0) || v.abs() < self.min_abs {
                // Jump over the excluded middle in one step.
                v = if self.min_abs > 0 && v < self.min_abs { self.min_abs } else { v + 1 };
                continue;
            }
            return Some(v);
        }
    }
}

impl Iterator for Axis {
    type Item = i64;

    fn next(&mut self) -> Option<i64> {
        let v = self.next?;
        self.next = self.first_valid(v + 1);
        Some(v)
    }
}

struct Scan<'a> {
    p: &'a Polynomial,
    /// Variable solved exactly instead of iterated, when degree permits.
    pivot: Option<usize>,
    /// Iterated variables in index order.
    outer: Vec<usize>,
    spec: &'a SearchSpec,
    bound_big: BigInt,
}

struct RunState {
    collected: Vec<SolutionTuple>,
    budget_left: Option<u64>,
    limit: Option<usize>,
    stopped: Option<StopReason>,
}

impl RunState {
    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.collected.len() >= l)
    }
}

impl Scan<'_> {
    /// Processes one complete outer assignment. Returns false to abort.
    fn leaf(&self, assignment: &mut Vec<BigInt>, state: &mut RunState) -> bool {
        if let Some(b) = state.budget_left.as_mut() {
            if *b == 0 {
                state.stopped = Some(StopReason::BudgetExhausted);
                return false;
            }
            *b -= 1;
        }
        match self.pivot {
            Some(pv) => {
                let roots = match solve_for_last_variable(self.p, pv, assignment) {
                    Ok(r) => r,
                    Err(SolveError::IdenticallyZero) => {
                        // Every value in the axis solves it.
                        Axis::new(self.spec.bound, &self.spec.mode).map(BigInt::from).collect()
                    }
                    Err(_) => unreachable!("pivot degree checked before scanning"),
                };
                for root in roots {
                    if root.abs() > self.bound_big || !self.spec.mode.admits_value(&root) {
                        continue;
                    }
                    let mut values = Vec::with_capacity(self.p.nvars());
                    let mut j = 0;
                    for i in 0..self.p.nvars() {
                        if i == pv {
                            values.push(root.clone());
                        } else {
                            values.push(assignment[j].clone());
                            j += 1;
                        }
                    }
                    let tuple = SolutionTuple::new(values);
                    if !self.spec.mode.admits_tuple(&tuple) {
                        continue;
                    }
                    state.collected.push(tuple);
                    if state.full() {
                        state.stopped = Some(StopReason::LimitReached);
                        return false;
                    }
                }
                true
            }
            None => {
                let value = self.p.evaluate(assignment).expect("assignment arity");
                if value.is_zero() {
                    let tuple = SolutionTuple::new(assignment.clone());
                    if self.spec.mode.admits_tuple(&tuple) {
                        state.collected.push(tuple);
                        if state.full() {
                            state.stopped = Some(StopReason::LimitReached);
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    fn recurse(&self, depth: usize, assignment: &mut Vec<BigInt>, state: &mut RunState) -> bool {
        if depth == self.outer.len() {
            return self.leaf(assignment, state);
        }
        for v in Axis::new(self.spec.bound, &self.spec.mode) {
            assignment.push(BigInt::from(v));
            let keep_going = self.recurse(depth + 1, assignment, state);
            assignment.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Exhausts the constrained box, returning all solutions found, sorted
/// lexicographically. See the module docs for iteration order, the solver
/// shortcut, and limit/budget semantics.
pub fn box_search(p: &Polynomial, spec: &SearchSpec) -> SearchOutcome {
    let n = p.nvars();
    let pivot = (0..n)
        .max_by_key(|&v| p.degree_in(v))
        .filter(|&v| n >= 1 && p.degree_in(v) <= 2 && p.degree_in(v) >= 1);
    let outer: Vec<usize> = (0..n).filter(|&v| Some(v) != pivot).collect();
    let scan = Scan { p, pivot, outer, spec, bound_big: BigInt::from(spec.bound) };

    // Parallel only without a budget: a shared budget would make the stop
    // point depend on scheduling.
    let first_axis: Vec<i64> = if spec.budget.is_none() && !scan.outer.is_empty() {
        Axis::new(spec.bound, &spec.mode).collect()
    } else {
        Vec::new()
    };
    let mut state = if first_axis.len() > 1 {
        let parts: Vec<RunState> = first_axis
            .par_iter()
            .map(|&v| {
                let mut st = RunState {
                    collected: Vec::new(),
                    budget_left: None,
                    limit: spec.limit,
                    stopped: None,
                };
                let mut assignment = vec![BigInt::from(v)];
                scan.recurse(1, &mut assignment, &mut st);
                st
            })
            .collect();
        let mut merged = RunState {
            collected: Vec::new(),
            budget_left: None,
            limit: spec.limit,
            stopped: None,
        };
        // Partitions arrive in axis order, so concatenating their prefixes
        // reproduces the sequential collection order exactly.
        for part in parts {
            let room = match spec.limit {
                Some(l) => l - merged.collected.len(),
                None => usize::MAX,
            };
            let part_len = part.collected.len();
            merged.collected.extend(part.collected.into_iter().take(room));
            if part.stopped.is_some() {
                merged.stopped = part.stopped;
                break;
            }
            if part_len > room || merged.full() {
                merged.stopped = Some(StopReason::LimitReached);
                break;
            }
        }
        merged
    } else {
        let mut st = RunState {
            collected: Vec::new(),
            budget_left: spec.budget,
            limit: spec.limit,
            stopped: None,
        };
        let mut assignment = Vec::new();
        scan.recurse(0, &mut assignment, &mut st);
        st
    };

    state.collected.sort();
    SearchOutcome {
        complete: state.stopped.is_none(),
        stopped: state.stopped,
        solutions: state.collected,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("evaluation budget exhausted while scanning modulus {modulus}")]
    BudgetExhausted { modulus: u64 },
}

/// All prime powers `p^e <= 729`, ascending. Composite moduli add nothing:
/// solvability modulo `m` follows from solvability modulo its prime-power
/// factors.
pub fn default_moduli() -> Vec<u64> {
    prime_power_moduli(729)
}

/// All prime powers up to `cap`, ascending.
pub fn prime_power_moduli(cap: u64) -> Vec<u64> {
    if cap < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; (cap + 1) as usize];
    let mut out = Vec::new();
    for p in 2..=cap {
        if !sieve[p as usize] {
            continue;
        }
        let mut q = p * p;
        while q <= cap {
            sieve[q as usize] = false;
            q += p;
        }
        let mut power = p;
        while power <= cap {
            out.push(power);
            match power.checked_mul(p) {
                Some(next) => power = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// True when `P ≡ 0 (mod m)` has a residue solution. Scans all `m^n`
/// residue tuples, charging each against the budget, stopping at the first
/// solution.
fn modulus_solvable(
    p: &Polynomial,
    m: u64,
    budget: &mut Option<u64>,
) -> Result<bool, ObstructionError> {
    let n = p.nvars();
    let k = p.num_monomials();
    let coeffs: Vec<u64> = p
        .monomials()
        .iter()
        .map(|mo| {
            let r = mo.coeff().mod_floor(&BigInt::from(m));
            r.to_u64().expect("residue fits")
        })
        .collect();
    // powtab[j][i][x] = x^(exponent of var i in monomial j) mod m.
    let powtab: Vec<Vec<Vec<u64>>> = p
        .monomials()
        .iter()
        .map(|mo| {
            (0..n)
                .map(|i| {
                    let e = mo.exponents()[i];
                    (0..m).map(|x| pow_mod(x, e, m)).collect()
                })
                .collect()
        })
        .collect();

    // Odometer over residue tuples with per-depth partial products.
    let mut partial: Vec<Vec<u64>> = vec![vec![1u64; k]; n + 1];
    partial[0] = coeffs.clone();
    let mut stack = vec![0u64; n];
    let mut depth = 0usize;
    loop {
        if depth == n {
            if let Some(b) = budget.as_mut() {
                if *b == 0 {
                    return Err(ObstructionError::BudgetExhausted { modulus: m });
                }
                *b -= 1;
            }
            if partial[n].iter().sum::<u64>() % m == 0 {
                return Ok(true);
            }
            // Backtrack to the deepest level that can still advance.
            loop {
                if depth == 0 {
                    return Ok(false);
                }
                depth -= 1;
                stack[depth] += 1;
                if stack[depth] < m {
                    break;
                }
                stack[depth] = 0;
            }
        }
        let x = stack[depth] as usize;
        let (lower, upper) = partial.split_at_mut(depth + 1);
        for j in 0..k {
            upper[0][j] = (lower[depth][j] * powtab[j][depth][x]) % m;
        }
        depth += 1;
    }
}

fn pow_mod(mut base: u64, mut exp: u32, m: u64) -> u64 {
    base %= m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Returns the first modulus in the list with no residue solution, or
/// `None` when every modulus is solvable. `budget` caps the total number
/// of residue evaluations across all moduli.
pub fn modular_obstruction(
    p: &Polynomial,
    moduli: &[u64],
    budget: Option<u64>,
) -> Result<Option<u64>, ObstructionError> {
    let mut budget = budget;
    for &m in moduli {
        assert!(m > 0, "moduli must be positive");
        if m == 1 {
            continue;
        }
        if !modulus_solvable(p, m, &mut budget)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
