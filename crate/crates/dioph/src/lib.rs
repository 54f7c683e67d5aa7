//! Census toolkit for polynomial Diophantine equations.
//!
//! The library works with multivariate polynomials over the integers and
//! treats `P = 0` as an equation to be studied up to a coarse equivalence:
//! multiplying by a nonzero constant, flipping the signs of individual
//! variables, and renaming variables all preserve the solution set up to
//! trivial transformations.
//!
//! Core capabilities, one module each:
//!
//! * [`poly`]: polynomial arithmetic, evaluation, substitution, and the two
//!   measures used to rank equations by simplicity. The size `H(P)`
//!   substitutes 2 for every variable and takes absolute values of the
//!   coefficients; the length `L(P)` multiplies instead of adding.
//! * [`parse`] / [`render`]: a small equation grammar and a deterministic
//!   serialization. The canonical serialization is what class
//!   representatives minimize, byte-lexicographically.
//! * [`equivalence`]: canonical forms under the equivalence above, plus the
//!   transform that maps an input to its representative.
//! * [`classify`]: structural categories (homogeneous, symmetric, cyclic,
//!   independent monomials) and special shapes such as generalized Fermat
//!   equations and diagonal forms.
//! * [`enumerate`]: exhaustive enumeration of equivalence classes with size
//!   `H` up to a bound.
//! * [`search`]: bounded solution searches over integer boxes, exact solves
//!   in a final variable of degree at most 2, and modular obstruction scans.
//! * [`families`]: one-parameter and multi-parameter polynomial families of
//!   solutions, verified symbolically.
//! * [`catalog`]: a JSONL catalog of equations annotated with measures,
//!   category flags, problem statuses, witnesses, and families, plus
//!   verification and diffing between catalog versions.
//!
//! The `dioph` binary exposes the same operations as subcommands; the
//! `examples/` directory demonstrates each capability as a library client.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod equivalence;
pub mod families;
pub mod parse;
pub mod poly;
pub mod render;
pub mod search;

pub use catalog::{
    apply_diff, diff_catalogs, load_catalog, load_catalog_dir, save_catalog, smallest_open,
    verify_catalog, CatalogDiff, CatalogError, CatalogRecord, Link, Mismatch, OpenQuery,
    ProblemId, RecordRef, SpecialFormRecord, Status, StatusChange, VerifyReport, SCHEMA_VERSION,
};
pub use classify::{
    class_flags, class_flags_with_limit, classify, detect_special_form, CategoryFlags,
    SpecialForm, SpecialFormKind,
};
pub use enumerate::{
    count_classes, enumerate_classes, ClassFilter, EnumerateError, EnumeratedClass,
    EnumerationQuery,
};
pub use equivalence::{
    are_equivalent, canonicalize, canonicalize_with_limit, normalize_content, CanonicalForm,
    EquivalenceError, Transform, DEFAULT_VAR_LIMIT,
};
pub use families::{
    covers_witness, family_member, verify_family, FamilyError, FamilySpec, ParametricFamily,
    COVERAGE_BUDGET,
};
pub use parse::{parse_equation, parse_polynomial, parse_tuple, ParseError, VarStyle};
pub use poly::{log2_tenths, ArityMismatch, Measures, Monomial, Polynomial};
pub use render::{equation_string, polynomial_string, Style};
pub use search::{
    box_search, default_moduli, modular_obstruction, prime_power_moduli, solve_for_last_variable,
    verify_solution, ObstructionError, SearchMode, SearchOutcome, SearchSpec, SolutionTuple,
    SolveError, StopReason, DEFAULT_OBSTRUCTION_BUDGET,
};
