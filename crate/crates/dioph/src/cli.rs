//! Command-line front end: one subcommand per library operation, text by
//! default, `--json` for machine-readable output. Exit codes: 0 success or
//! positive answer, 1 negative answer, 2 usage or input error, 3 resource
//! limit hit.

use std::collections::BTreeMap;
use std::env;
use std::ffi::OsString;
use std::fmt::Display;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::catalog::{
    apply_diff, diff_catalogs, load_catalog, load_catalog_dir, smallest_open, verify_catalog,
    CatalogError, CatalogRecord, OpenQuery, ProblemId, DATA_DIR_ENV,
};
use crate::classify::{class_flags, detect_special_form};
use crate::enumerate::{enumerate_classes, ClassFilter, EnumerateError, EnumerationQuery};
use crate::equivalence::{are_equivalent, canonicalize, EquivalenceError};
use crate::families::{
    covers_witness, family_member, verify_family, FamilyError, ParametricFamily,
};
use crate::parse::{parse_equation, parse_tuple};
use crate::poly::Polynomial;
use crate::search::{
    box_search, modular_obstruction, prime_power_moduli, verify_solution, ObstructionError,
    SearchMode, SearchSpec, SolutionTuple, StopReason, DEFAULT_OBSTRUCTION_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(threads) = cli.threads {
        // Ignore the error when a pool already exists (repeated in-process
        // runs); the first configuration wins.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

#[derive(Parser)]
#[command(
    name = "dioph",
    version,
    about = "Census tooling for polynomial Diophantine equations: measures, canonical forms, \
             enumeration, solution search, and catalog maintenance."
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap the worker threads used for parallel scans.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Size H: sum of |coefficient| * 2^degree over the monomials.
    Size(EquationsArg),
    /// Length l: log2 of the product of |coefficient| * 2^degree.
    Length(EquationsArg),
    /// Canonical form of each equation's equivalence class.
    Canon(EquationsArg),
    /// Decide whether two equations are equivalent (exit 0) or not (exit 1).
    Equiv {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Category flags and special form of each equation's class.
    Classify(EquationsArg),
    /// All equivalence classes up to a size bound.
    Enumerate(EnumerateArgs),
    /// Exhaustive solution search over a coordinate box.
    Search(SearchArgs),
    /// Check explicit solution tuples against an equation.
    Verify(VerifyArgs),
    /// Check a polynomial parametrization against an equation.
    Family(FamilyArgs),
    /// Scan prime-power moduli for a solvability obstruction.
    Obstruct(ObstructArgs),
    /// Recompute and check every stored field of catalog records.
    CatalogVerify(CatalogVerifyArgs),
    /// Report the smallest open equations, per problem.
    CatalogReport(CatalogReportArgs),
    /// Compare two catalog versions (exit 1 when they differ).
    CatalogDiff(CatalogDiffArgs),
}

#[derive(Args)]
struct EquationsArg {
    /// Equations like "x^2+y^2+z*t+1=0"; "-" reads one per line from stdin.
    #[arg(required = true, value_name = "EQUATION", allow_hyphen_values = true)]
    equations: Vec<String>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest size H to enumerate (smallest possible class has H=2).
    #[arg(long, value_name = "H")]
    h_max: u64,
    /// Print per-size class counts instead of the classes themselves.
    #[arg(long)]
    counts: bool,
    /// Exact variable count (shorthand for equal min and max).
    #[arg(long, value_name = "N")]
    nvars: Option<usize>,
    #[arg(long, value_name = "N")]
    min_nvars: Option<usize>,
    #[arg(long, value_name = "N")]
    max_nvars: Option<usize>,
    /// Exact degree (shorthand for equal min and max).
    #[arg(long, value_name = "D")]
    degree: Option<u32>,
    #[arg(long, value_name = "D")]
    min_degree: Option<u32>,
    #[arg(long, value_name = "D")]
    max_degree: Option<u32>,
    /// Exact monomial count (shorthand for equal min and max).
    #[arg(long, value_name = "K")]
    monomials: Option<usize>,
    #[arg(long, value_name = "K")]
    min_monomials: Option<usize>,
    #[arg(long, value_name = "K")]
    max_monomials: Option<usize>,
    #[arg(long, value_name = "BOOL")]
    homogeneous: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    symmetric: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    cyclic: Option<bool>,
    #[arg(long, value_name = "BOOL")]
    independent_monomials: Option<bool>,
    /// Refuse classes with more variables than this (canonicalization cost
    /// grows as n! * 2^n).
    #[arg(long, value_name = "N")]
    var_limit: Option<usize>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(allow_hyphen_values = true)]
    equation: String,
    /// Box half-width B: every coordinate ranges over [-B, B].
    #[arg(long, value_name = "B")]
    bound: u64,
    /// all, positive, nonzero, primitive, or min-abs:<k>.
    #[arg(long, default_value = "all", value_name = "MODE")]
    mode: String,
    /// Stop after this many solutions.
    #[arg(long, value_name = "N")]
    limit: Option<usize>,
    /// Stop after this many candidate evaluations (forces a sequential scan).
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(allow_hyphen_values = true)]
    equation: String,
    /// Tuples like "1,1,1" in variable order; "-" reads one per line from stdin.
    #[arg(required = true, value_name = "TUPLE", allow_hyphen_values = true)]
    tuples: Vec<String>,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(allow_hyphen_values = true)]
    equation: String,
    /// Component polynomial in parameters u, v, w (or u1..uk), one flag per
    /// equation variable, in variable order.
    #[arg(
        long = "component",
        required = true,
        value_name = "POLY",
        allow_hyphen_values = true
    )]
    components: Vec<String>,
    /// Parameter count (default: inferred from the components).
    #[arg(long, value_name = "K")]
    params: Option<usize>,
    /// Also evaluate the family at this parameter tuple.
    #[arg(long, value_name = "TUPLE", allow_hyphen_values = true)]
    member: Option<String>,
    /// Also check whether the family reaches this solution somewhere in the
    /// parameter box.
    #[arg(long, value_name = "TUPLE", allow_hyphen_values = true)]
    covers: Option<String>,
    /// Parameter box half-width for --covers.
    #[arg(long, default_value_t = 10, value_name = "B")]
    u_box: u64,
    /// Count coordinate permutations of the --covers tuple as reached.
    #[arg(long)]
    adjoin_permutations: bool,
}

#[derive(Args)]
struct ObstructArgs {
    #[arg(allow_hyphen_values = true)]
    equation: String,
    /// Scan prime powers up to this bound, ascending.
    #[arg(long, default_value_t = 729, value_name = "M")]
    max_modulus: u64,
    /// Total residue-evaluation allowance.
    #[arg(long, default_value_t = DEFAULT_OBSTRUCTION_BUDGET, value_name = "N")]
    budget: u64,
}

#[derive(Args)]
struct CatalogVerifyArgs {
    /// Record files or directories (default: the tables under the data root).
    #[arg(value_name = "PATH")]
    paths: Vec<PathBuf>,
    /// Data root holding tables/ and versions/ (or set DIOPH_DATA_DIR).
    #[arg(long, value_name = "DIR")]
    data: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogReportArgs {
    /// Problem id such as P6 or P6_existence (default: report every problem).
    #[arg(long, value_name = "ID")]
    problem: Option<String>,
    /// Comma-separated restrictions, e.g. "nvars=2,homogeneous=true".
    /// Keys: nvars, degree, monomials (each also with min-/max- prefix),
    /// homogeneous, symmetric, cyclic, independent-monomials.
    #[arg(long, value_name = "SPEC")]
    filter: Option<String>,
    /// Count hedged "debatable" judgements as open.
    #[arg(long)]
    include_debatable: bool,
    /// Order by exact length instead of size.
    #[arg(long)]
    by_length: bool,
    /// Data root holding tables/ and versions/ (or set DIOPH_DATA_DIR).
    #[arg(long, value_name = "DIR")]
    data: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogDiffArgs {
    /// Older version: a .jsonl file or a directory of them.
    old: PathBuf,
    /// Newer version: a .jsonl file or a directory of them.
    new: PathBuf,
    /// Replay the diff onto the older version and re-compare as a self-check.
    #[arg(long)]
    check_apply: bool,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn resource(message: impl Display) -> Failure {
    Failure {
        code: EXIT_RESOURCE,
        message: message.to_string(),
    }
}

fn equivalence_failure(e: EquivalenceError) -> Failure {
    match e {
        EquivalenceError::TooManyVariables { .. } => resource(e),
    }
}

fn dispatch(cli: &Cli) -> Result<i32, Failure> {
    match &cli.command {
        Command::Size(args) => cmd_size(args, cli.json),
        Command::Length(args) => cmd_length(args, cli.json),
        Command::Canon(args) => cmd_canon(args, cli.json),
        Command::Equiv { first, second } => cmd_equiv(first, second, cli.json),
        Command::Classify(args) => cmd_classify(args, cli.json),
        Command::Enumerate(args) => cmd_enumerate(args, cli.json),
        Command::Search(args) => cmd_search(args, cli.json),
        Command::Verify(args) => cmd_verify(args, cli.json),
        Command::Family(args) => cmd_family(args, cli.json),
        Command::Obstruct(args) => cmd_obstruct(args, cli.json),
        Command::CatalogVerify(args) => cmd_catalog_verify(args, cli.json),
        Command::CatalogReport(args) => cmd_catalog_report(args, cli.json),
        Command::CatalogDiff(args) => cmd_catalog_diff(args, cli.json),
    }
}

impl EquationsArg {
    /// Expands "-" into stdin lines; blank lines are skipped.
    fn collect(&self) -> Result<Vec<String>, Failure> {
        let mut out = Vec::new();
        let mut stdin_used = false;
        for arg in &self.equations {
            if arg == "-" {
                if stdin_used {
                    return Err(usage("\"-\" may appear only once"));
                }
                stdin_used = true;
                out.extend(read_stdin_lines()?);
            } else {
                out.push(arg.clone());
            }
        }
        if out.is_empty() {
            return Err(usage("no equations given"));
        }
        Ok(out)
    }
}

fn read_stdin_lines() -> Result<Vec<String>, Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("reading stdin: {e}")))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn parse_equation_arg(text: &str) -> Result<Polynomial, Failure> {
    parse_equation(text).map_err(|e| usage(format!("{text:?}: {e}")))
}

fn parse_tuple_arg(text: &str, arity: usize) -> Result<Vec<BigInt>, Failure> {
    let values = parse_tuple(text).map_err(|e| usage(format!("{text:?}: {e}")))?;
    if values.len() != arity {
        return Err(usage(format!(
            "{text:?}: expected {arity} coordinates, found {}",
            values.len()
        )));
    }
    Ok(values)
}

/// "106" -> "10.6", "60" -> "6".
fn format_tenths(t: u64) -> String {
    if t % 10 == 0 {
        (t / 10).to_string()
    } else {
        format!("{}.{}", t / 10, t % 10)
    }
}

fn emit(json_mode: bool, value: &Value, text: impl FnOnce()) {
    if json_mode {
        println!("{value}");
    } else {
        text();
    }
}

fn cmd_size(args: &EquationsArg, json_mode: bool) -> Result<i32, Failure> {
    let inputs = args.collect()?;
    let mut results = Vec::new();
    for input in &inputs {
        let poly = parse_equation_arg(input)?;
        results.push((input.clone(), poly.size_h().to_string()));
    }
    emit(
        json_mode,
        &json!({
            "results": results
                .iter()
                .map(|(input, h)| json!({"input": input, "h": h}))
                .collect::<Vec<_>>()
        }),
        || {
            for (_, h) in &results {
                println!("{h}");
            }
        },
    );
    Ok(EXIT_OK)
}

fn cmd_length(args: &EquationsArg, json_mode: bool) -> Result<i32, Failure> {
    let inputs = args.collect()?;
    let mut results = Vec::new();
    for input in &inputs {
        let poly = parse_equation_arg(input)?;
        let m = poly.measures();
        results.push(json!({
            "input": input,
            "l": format_tenths(m.l_times_10),
            "l_times_10": m.l_times_10,
            "big_l": m.length_big_l.to_string(),
        }));
    }
    emit(json_mode, &json!({ "results": results }), || {
        for r in &results {
            println!("{}", r["l"].as_str().unwrap());
        }
    });
    Ok(EXIT_OK)
}

fn cmd_canon(args: &EquationsArg, json_mode: bool) -> Result<i32, Failure> {
    let inputs = args.collect()?;
    let mut results = Vec::new();
    for input in &inputs {
        let poly = parse_equation_arg(input)?;
        let canon = canonicalize(&poly).map_err(equivalence_failure)?;
        results.push((input.clone(), canon.serialization()));
    }
    emit(
        json_mode,
        &json!({
            "results": results
                .iter()
                .map(|(input, canonical)| json!({"input": input, "canonical": canonical}))
                .collect::<Vec<_>>()
        }),
        || {
            for (_, canonical) in &results {
                println!("{canonical}");
            }
        },
    );
    Ok(EXIT_OK)
}

fn cmd_equiv(first: &str, second: &str, json_mode: bool) -> Result<i32, Failure> {
    let a = parse_equation_arg(first)?;
    let b = parse_equation_arg(second)?;
    let equivalent = are_equivalent(&a, &b).map_err(equivalence_failure)?;
    emit(json_mode, &json!({ "equivalent": equivalent }), || {
        println!("{}", if equivalent { "equivalent" } else { "inequivalent" });
    });
    Ok(if equivalent { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_classify(args: &EquationsArg, json_mode: bool) -> Result<i32, Failure> {
    let inputs = args.collect()?;
    let mut results = Vec::new();
    for input in &inputs {
        let poly = parse_equation_arg(input)?;
        let flags = class_flags(&poly).map_err(equivalence_failure)?;
        let special = detect_special_form(&poly);
        results.push((input.clone(), flags, special));
    }
    emit(
        json_mode,
        &json!({
            "results": results
                .iter()
                .map(|(input, flags, special)| {
                    json!({
                        "input": input,
                        "flags": flags,
                        "special": special.as_ref().map(crate::catalog::SpecialFormRecord::from),
                    })
                })
                .collect::<Vec<_>>()
        }),
        || {
            for (input, flags, special) in &results {
                let mut names = Vec::new();
                if flags.homogeneous {
                    names.push("homogeneous");
                }
                if flags.symmetric {
                    names.push("symmetric");
                }
                if flags.cyclic {
                    names.push("cyclic");
                }
                if flags.independent_monomials {
                    names.push("independent-monomials");
                }
                let category = if names.is_empty() { "none".to_string() } else { names.join(",") };
                let special_text = match special {
                    None => String::new(),
                    Some(form) => format!(
                        " special={:?}{}",
                        form.kind,
                        if form.hyperbolic { "(hyperbolic)" } else { "" }
                    ),
                };
                println!(
                    "{input}: nvars={} degree={} monomials={} flags={category}{special_text}",
                    flags.nvars, flags.degree, flags.num_monomials
                );
            }
        },
    );
    Ok(EXIT_OK)
}

fn build_filter(args: &EnumerateArgs) -> ClassFilter {
    ClassFilter {
        min_nvars: args.min_nvars.or(args.nvars),
        max_nvars: args.max_nvars.or(args.nvars),
        min_degree: args.min_degree.or(args.degree),
        max_degree: args.max_degree.or(args.degree),
        min_monomials: args.min_monomials.or(args.monomials),
        max_monomials: args.max_monomials.or(args.monomials),
        homogeneous: args.homogeneous,
        symmetric: args.symmetric,
        cyclic: args.cyclic,
        independent_monomials: args.independent_monomials,
    }
}

fn cmd_enumerate(args: &EnumerateArgs, json_mode: bool) -> Result<i32, Failure> {
    let mut query = EnumerationQuery::new(args.h_max);
    query.filter = build_filter(args);
    if let Some(limit) = args.var_limit {
        query.var_limit = limit;
    }
    let classes = enumerate_classes(&query).map_err(|e| match e {
        EnumerateError::HMaxTooSmall { .. } => usage(e),
        EnumerateError::VarLimitExceeded { .. } => resource(e),
        EnumerateError::Equivalence(inner) => equivalence_failure(inner),
    })?;
    if args.counts {
        let mut counts: BTreeMap<u64, u64> = (2..=args.h_max).map(|h| (h, 0)).collect();
        for class in &classes {
            *counts.entry(class.h).or_insert(0) += 1;
        }
        emit(
            json_mode,
            &json!({
                "h_max": args.h_max,
                "counts": counts.iter().map(|(h, n)| json!([h, n])).collect::<Vec<_>>(),
            }),
            || {
                for (h, n) in &counts {
                    println!("{h}\t{n}");
                }
            },
        );
    } else {
        emit(
            json_mode,
            &json!({
                "h_max": args.h_max,
                "classes": classes
                    .iter()
                    .map(|c| json!({"h": c.h, "canonical": c.serialization}))
                    .collect::<Vec<_>>(),
            }),
            || {
                for class in &classes {
                    println!("{}\t{}", class.h, class.serialization);
                }
            },
        );
    }
    Ok(EXIT_OK)
}

fn parse_mode(text: &str) -> Result<SearchMode, Failure> {
    match text {
        "all" => Ok(SearchMode::All),
        "positive" => Ok(SearchMode::Positive),
        "nonzero" => Ok(SearchMode::NonZero),
        "primitive" => Ok(SearchMode::Primitive),
        _ => {
            if let Some(k) = text.strip_prefix("min-abs:") {
                let min = k
                    .parse::<u64>()
                    .map_err(|_| usage(format!("bad min-abs bound {k:?}")))?;
                Ok(SearchMode::MinAbs { min })
            } else {
                Err(usage(format!(
                    "unknown mode {text:?}; expected all, positive, nonzero, primitive, or min-abs:<k>"
                )))
            }
        }
    }
}

fn stop_reason_json(stopped: Option<StopReason>) -> Value {
    match stopped {
        None => Value::Null,
        Some(StopReason::LimitReached) => Value::String("limit".to_string()),
        Some(StopReason::BudgetExhausted) => Value::String("budget".to_string()),
    }
}

fn cmd_search(args: &SearchArgs, json_mode: bool) -> Result<i32, Failure> {
    let poly = parse_equation_arg(&args.equation)?;
    let spec = SearchSpec {
        bound: args.bound,
        mode: parse_mode(&args.mode)?,
        limit: args.limit,
        budget: args.budget,
    };
    let outcome = box_search(&poly, &spec);
    emit(
        json_mode,
        &json!({
            "solutions": outcome
                .solutions
                .iter()
                .map(|s| s.values.iter().map(BigInt::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "complete": outcome.complete,
            "stopped": stop_reason_json(outcome.stopped),
        }),
        || {
            for solution in &outcome.solutions {
                println!("{solution}");
            }
            match outcome.stopped {
                None => println!("complete"),
                Some(StopReason::LimitReached) => println!("incomplete: solution limit reached"),
                Some(StopReason::BudgetExhausted) => println!("incomplete: budget exhausted"),
            }
        },
    );
    if !outcome.solutions.is_empty() {
        Ok(EXIT_OK)
    } else if outcome.complete {
        Ok(EXIT_NEGATIVE)
    } else {
        // Nothing found and the box was not finished: no answer either way.
        Ok(EXIT_RESOURCE)
    }
}

fn cmd_verify(args: &VerifyArgs, json_mode: bool) -> Result<i32, Failure> {
    let poly = parse_equation_arg(&args.equation)?;
    let mut tuple_texts = Vec::new();
    let mut stdin_used = false;
    for arg in &args.tuples {
        if arg == "-" {
            if stdin_used {
                return Err(usage("\"-\" may appear only once"));
            }
            stdin_used = true;
            tuple_texts.extend(read_stdin_lines()?);
        } else {
            tuple_texts.push(arg.clone());
        }
    }
    if tuple_texts.is_empty() {
        return Err(usage("no tuples given"));
    }
    let mut results = Vec::new();
    let mut all_valid = true;
    for text in &tuple_texts {
        let values = parse_tuple_arg(text, poly.nvars())?;
        let tuple = SolutionTuple::new(values);
        let valid = verify_solution(&poly, &tuple)
            .map_err(|e| usage(format!("{text:?}: {e}")))?;
        all_valid &= valid;
        results.push((tuple, valid));
    }
    emit(
        json_mode,
        &json!({
            "results": results
                .iter()
                .map(|(tuple, valid)| {
                    json!({
                        "tuple": tuple.values.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "valid": valid,
                    })
                })
                .collect::<Vec<_>>()
        }),
        || {
            for (tuple, valid) in &results {
                println!("{} {tuple}", if *valid { "valid" } else { "invalid" });
            }
        },
    );
    Ok(if all_valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn family_failure(e: FamilyError) -> Failure {
    match e {
        FamilyError::BudgetExceeded { .. } => resource(e),
        other => usage(other),
    }
}

fn cmd_family(args: &FamilyArgs, json_mode: bool) -> Result<i32, Failure> {
    let poly = parse_equation_arg(&args.equation)?;
    // Infer the parameter count from the components unless given.
    let mut inferred = 0usize;
    let mut parsed = Vec::new();
    for text in &args.components {
        let component = crate::parse::parse_polynomial(text, crate::parse::VarStyle::Parameter)
            .map_err(|e| usage(format!("{text:?}: {e}")))?;
        inferred = inferred.max(component.nvars());
        parsed.push(component);
    }
    let k = args.params.unwrap_or(inferred);
    if k < inferred {
        return Err(usage(format!(
            "--params {k} is below the {inferred} parameters the components use"
        )));
    }
    let family = ParametricFamily::new(
        k,
        parsed.into_iter().map(|c| c.pad_vars(k)).collect(),
    )
    .map_err(|e| usage(e))?;
    let valid = verify_family(&poly, &family).map_err(|e| usage(e))?;

    let mut member_value: Option<SolutionTuple> = None;
    if let Some(text) = &args.member {
        let params = parse_tuple_arg(text, k)?;
        member_value = Some(family_member(&family, &params).map_err(|e| usage(e))?);
    }
    let mut covers_value: Option<bool> = None;
    if valid {
        if let Some(text) = &args.covers {
            let witness = SolutionTuple::new(parse_tuple_arg(text, poly.nvars())?);
            let covered = covers_witness(
                std::slice::from_ref(&family),
                &witness,
                args.u_box,
                args.adjoin_permutations,
            )
            .map_err(family_failure)?;
            covers_value = Some(covered);
        }
    }

    emit(
        json_mode,
        &json!({
            "valid": valid,
            "member": member_value
                .as_ref()
                .map(|t| t.values.iter().map(BigInt::to_string).collect::<Vec<_>>()),
            "covers": covers_value,
        }),
        || {
            println!("{}", if valid { "valid family" } else { "not a family for this equation" });
            if let Some(member) = &member_value {
                println!("member {member}");
            }
            match covers_value {
                Some(true) => println!("witness covered within the box"),
                Some(false) => println!("witness not covered within the box"),
                None => {}
            }
        },
    );
    let negative = !valid || covers_value == Some(false);
    Ok(if negative { EXIT_NEGATIVE } else { EXIT_OK })
}

fn cmd_obstruct(args: &ObstructArgs, json_mode: bool) -> Result<i32, Failure> {
    let poly = parse_equation_arg(&args.equation)?;
    let moduli = prime_power_moduli(args.max_modulus);
    let found = modular_obstruction(&poly, &moduli, Some(args.budget)).map_err(|e| match e {
        ObstructionError::BudgetExhausted { .. } => resource(e),
    })?;
    emit(
        json_mode,
        &json!({
            "obstruction": found,
            "max_modulus": args.max_modulus,
        }),
        || match found {
            Some(m) => println!("{m}"),
            None => println!("none"),
        },
    );
    Ok(if found.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}

/// Data root: --data flag, then the environment, then ./data.
fn resolve_data_dir(flag: &Option<PathBuf>) -> PathBuf {
    flag.clone()
        .or_else(|| env::var_os(DATA_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("data"))
}

fn catalog_failure(e: CatalogError) -> Failure {
    usage(e)
}

fn load_path(path: &Path) -> Result<Vec<CatalogRecord>, Failure> {
    let records = if path.is_dir() {
        load_catalog_dir(path).map_err(catalog_failure)?
    } else {
        load_catalog(path).map_err(catalog_failure)?
    };
    Ok(records)
}

fn cmd_catalog_verify(args: &CatalogVerifyArgs, json_mode: bool) -> Result<i32, Failure> {
    let records = if args.paths.is_empty() {
        let tables = resolve_data_dir(&args.data).join("tables");
        load_catalog_dir(&tables).map_err(catalog_failure)?
    } else {
        let mut all = Vec::new();
        for path in &args.paths {
            all.extend(load_path(path)?);
        }
        all
    };
    let report = verify_catalog(&records);
    emit(
        json_mode,
        &serde_json::to_value(&report).expect("report serializes"),
        || {
            if report.passed() {
                println!("checked {} records: ok", report.checked);
            } else {
                for m in &report.mismatches {
                    println!("{}\t{}\t{}", m.id, m.field, m.detail);
                }
                println!(
                    "checked {} records: {} mismatches",
                    report.checked,
                    report.mismatches.len()
                );
            }
        },
    );
    Ok(if report.passed() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn parse_filter_spec(spec: &str) -> Result<ClassFilter, Failure> {
    let mut filter = ClassFilter::default();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((key, value)) = part.split_once('=') else {
            return Err(usage(format!("filter {part:?} is not key=value")));
        };
        let key = key.trim().replace('-', "_");
        let value = value.trim();
        let as_usize = || {
            value
                .parse::<usize>()
                .map_err(|_| usage(format!("filter {key}: bad count {value:?}")))
        };
        let as_u32 = || {
            value
                .parse::<u32>()
                .map_err(|_| usage(format!("filter {key}: bad degree {value:?}")))
        };
        let as_bool = || {
            value
                .parse::<bool>()
                .map_err(|_| usage(format!("filter {key}: bad boolean {value:?}")))
        };
        match key.as_str() {
            "nvars" => {
                filter.min_nvars = Some(as_usize()?);
                filter.max_nvars = filter.min_nvars;
            }
            "min_nvars" => filter.min_nvars = Some(as_usize()?),
            "max_nvars" => filter.max_nvars = Some(as_usize()?),
            "degree" => {
                filter.min_degree = Some(as_u32()?);
                filter.max_degree = filter.min_degree;
            }
            "min_degree" => filter.min_degree = Some(as_u32()?),
            "max_degree" => filter.max_degree = Some(as_u32()?),
            "monomials" => {
                filter.min_monomials = Some(as_usize()?);
                filter.max_monomials = filter.min_monomials;
            }
            "min_monomials" => filter.min_monomials = Some(as_usize()?),
            "max_monomials" => filter.max_monomials = Some(as_usize()?),
            "homogeneous" => filter.homogeneous = Some(as_bool()?),
            "symmetric" => filter.symmetric = Some(as_bool()?),
            "cyclic" => filter.cyclic = Some(as_bool()?),
            "independent_monomials" => filter.independent_monomials = Some(as_bool()?),
            other => return Err(usage(format!("unknown filter key {other:?}"))),
        }
    }
    Ok(filter)
}

fn report_record_json(record: &CatalogRecord) -> Value {
    serde_json::to_value(record).expect("record serializes")
}

fn cmd_catalog_report(args: &CatalogReportArgs, json_mode: bool) -> Result<i32, Failure> {
    let tables = resolve_data_dir(&args.data).join("tables");
    let records = load_catalog_dir(&tables).map_err(catalog_failure)?;
    let filter = match &args.filter {
        Some(spec) => parse_filter_spec(spec)?,
        None => ClassFilter::default(),
    };
    let problems: Vec<ProblemId> = match &args.problem {
        Some(text) => vec![text.parse::<ProblemId>().map_err(|e| usage(e))?],
        None => ProblemId::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for problem in problems {
        let query = OpenQuery {
            problem,
            filter: filter.clone(),
            include_debatable: args.include_debatable,
            by_length: args.by_length,
        };
        let rows = smallest_open(&records, &query);
        reports.push((problem, rows));
    }
    emit(
        json_mode,
        &json!({
            "reports": reports
                .iter()
                .map(|(problem, rows)| {
                    json!({
                        "problem": problem.as_str(),
                        "records": rows.iter().map(report_record_json).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>()
        }),
        || {
            for (problem, rows) in &reports {
                if rows.is_empty() {
                    println!("{problem}: none");
                    continue;
                }
                println!("{problem}: {} smallest open", rows.len());
                for row in rows {
                    println!(
                        "  {}\tH={}\tl={}\t{}",
                        row.id,
                        row.h,
                        format_tenths(row.l_times_10),
                        row.display
                    );
                }
            }
        },
    );
    Ok(EXIT_OK)
}

fn cmd_catalog_diff(args: &CatalogDiffArgs, json_mode: bool) -> Result<i32, Failure> {
    let old = load_path(&args.old)?;
    let new = load_path(&args.new)?;
    let diff = diff_catalogs(&old, &new);
    if args.check_apply {
        let replayed = apply_diff(&old, &diff).map_err(|e| usage(e))?;
        let residue = diff_catalogs(&replayed, &new);
        if !residue.is_empty() {
            return Err(Failure {
                code: EXIT_USAGE,
                message: "replaying the diff does not reproduce the newer version".to_string(),
            });
        }
    }
    emit(
        json_mode,
        &serde_json::to_value(&diff).expect("diff serializes"),
        || {
            for record in &diff.added {
                println!("+ H={}\t{}", record.h, record.canonical);
            }
            for gone in &diff.removed {
                println!("- H={}\t{}", gone.h, gone.canonical);
            }
            for change in &diff.status_changed {
                let show = |s: Option<crate::catalog::Status>| match s {
                    Some(s) => s.as_str().to_string(),
                    None => "unset".to_string(),
                };
                println!(
                    "~ {}\t{}: {} -> {}",
                    change.canonical,
                    change.problem,
                    show(change.old),
                    show(change.new)
                );
            }
            if diff.is_empty() {
                println!("identical");
            }
        },
    );
    Ok(if diff.is_empty() { EXIT_OK } else { EXIT_NEGATIVE })
}
