//! The machine-readable census: equation records with measures, category
//! flags, per-problem status, witnesses, families, and provenance; plus
//! loading, consistency verification, smallest-open reports, and diffs
//! between dataset versions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{class_flags, CategoryFlags, SpecialForm, SpecialFormKind};
use crate::enumerate::ClassFilter;
use crate::equivalence::canonicalize;
use crate::families::{FamilySpec, ParametricFamily};
use crate::parse::parse_equation;
use crate::poly::Polynomial;
use crate::search::{verify_solution, SolutionTuple};

/// Version stamp written into every record line.
pub const SCHEMA_VERSION: u32 = 1;

/// The questions a record can track. Serialized names are stable data
/// format identifiers; `FromStr` also accepts the short `P1`..`P7` aliases.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum ProblemId {
    /// Is the integer solution set a finite union of polynomial families?
    #[serde(rename = "P1_parametrization")]
    Parametrization,
    /// Can all integer solutions be described in some reasonable way?
    #[serde(rename = "P_describe_integer")]
    DescribeInteger,
    /// Can all rational solutions be described in some reasonable way?
    #[serde(rename = "P_describe_rational")]
    DescribeRational,
    /// Are there solutions with all coordinates arbitrarily large?
    #[serde(rename = "P2_large")]
    Large,
    /// Homogeneous: is there a solution with every coordinate nonzero?
    #[serde(rename = "P3_nonzero_hom")]
    NonzeroHom,
    /// Either list all integer solutions or prove there are infinitely many.
    #[serde(rename = "P4_finiteness")]
    Finiteness,
    /// Homogeneous: is there a solution other than the zero tuple?
    #[serde(rename = "P5_nontrivial_hom")]
    NontrivialHom,
    /// Does an integer solution exist at all?
    #[serde(rename = "P6_existence")]
    Existence,
    /// Does a solution in positive integers exist?
    #[serde(rename = "P7_positive")]
    Positive,
}

impl ProblemId {
    pub const ALL: [ProblemId; 9] = [
        ProblemId::Parametrization,
        ProblemId::DescribeInteger,
        ProblemId::DescribeRational,
        ProblemId::Large,
        ProblemId::NonzeroHom,
        ProblemId::Finiteness,
        ProblemId::NontrivialHom,
        ProblemId::Existence,
        ProblemId::Positive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProblemId::Parametrization => "P1_parametrization",
            ProblemId::DescribeInteger => "P_describe_integer",
            ProblemId::DescribeRational => "P_describe_rational",
            ProblemId::Large => "P2_large",
            ProblemId::NonzeroHom => "P3_nonzero_hom",
            ProblemId::Finiteness => "P4_finiteness",
            ProblemId::NontrivialHom => "P5_nontrivial_hom",
            ProblemId::Existence => "P6_existence",
            ProblemId::Positive => "P7_positive",
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown problem id {0:?}")]
pub struct UnknownProblem(pub String);

impl FromStr for ProblemId {
    type Err = UnknownProblem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let found = match s {
            "P1" | "P1_parametrization" => ProblemId::Parametrization,
            "P_describe_integer" => ProblemId::DescribeInteger,
            "P_describe_rational" => ProblemId::DescribeRational,
            "P2" | "P2_large" => ProblemId::Large,
            "P3" | "P3_nonzero_hom" => ProblemId::NonzeroHom,
            "P4" | "P4_finiteness" => ProblemId::Finiteness,
            "P5" | "P5_nontrivial_hom" => ProblemId::NontrivialHom,
            "P6" | "P6_existence" => ProblemId::Existence,
            "P7" | "P7_positive" => ProblemId::Positive,
            _ => return Err(UnknownProblem(s.to_string())),
        };
        Ok(found)
    }
}

/// Whether a question is settled for a record. Curated input, not a
/// computation: verification checks everything recomputable and stores
/// the judgement with provenance.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Open,
    Solved,
    /// A partial description exists and opinions may differ on whether it
    /// settles the question.
    Debatable,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Open => "open",
            Status::Solved => "solved",
            Status::Debatable => "debatable",
            Status::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Serialized shape of a detected special form: coefficients travel as
/// decimal strings so record files stay plain JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFormRecord {
    pub kind: SpecialFormKind,
    pub exponents: Vec<u32>,
    pub coefficients: Vec<String>,
    pub hyperbolic: bool,
}

impl From<&SpecialForm> for SpecialFormRecord {
    fn from(form: &SpecialForm) -> Self {
        SpecialFormRecord {
            kind: form.kind,
            exponents: form.exponents.clone(),
            coefficients: form.coefficients.iter().map(BigInt::to_string).collect(),
            hyperbolic: form.hyperbolic,
        }
    }
}

/// A cross-reference to another record, for pairs the source text calls
/// equivalent in an informal sense that the formal relation does not cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub id: String,
    pub note: String,
}

/// One equivalence class of equations with everything the census tracks
/// about it. `canonical` is the class key; `display` is the human-facing
/// spelling the witnesses and families refer to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub schema_version: u32,
    pub id: String,
    pub display: String,
    pub canonical: String,
    pub h: u64,
    pub l_times_10: u64,
    pub flags: CategoryFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub special: Option<SpecialFormRecord>,
    pub status: BTreeMap<ProblemId, Status>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<String>,
    /// Verified solutions, decimal strings in display variable order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub families: Vec<FamilySpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub links: Vec<Link>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Record {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}:{line}: schema version {found}, this build reads {expected}")]
    SchemaVersion {
        path: PathBuf,
        line: usize,
        found: u32,
        expected: u32,
    },
    #[error("{path}:{line}: row is equivalent to the row at line {first_line} ({canonical})")]
    DuplicateClass {
        path: PathBuf,
        line: usize,
        first_line: usize,
        canonical: String,
    },
    #[error("records for {canonical} disagree: {message}")]
    MergeConflict { canonical: String, message: String },
    #[error("diff does not apply: {message}")]
    DiffMismatch { message: String },
}

impl CatalogRecord {
    /// Builds the computable part of a record from a display equation:
    /// canonical form, measures, class flags, special form. Status and the
    /// curated annexes are taken as given; witnesses, families, and links
    /// start empty.
    pub fn from_display(
        id: &str,
        display: &str,
        status: BTreeMap<ProblemId, Status>,
        provenance: Vec<String>,
    ) -> Result<CatalogRecord, CatalogError> {
        let fail = |message: String| CatalogError::Record {
            path: PathBuf::from("<builder>"),
            line: 0,
            message,
        };
        let poly = parse_equation(display).map_err(|e| fail(format!("{display:?}: {e}")))?;
        let canon = canonicalize(&poly).map_err(|e| fail(format!("{display:?}: {e}")))?;
        let rep = canon.rep.clone();
        let measures = rep.measures();
        let h = u64::try_from(&measures.size_h)
            .map_err(|_| fail(format!("{display:?}: size exceeds u64")))?;
        let flags = class_flags(&rep).map_err(|e| fail(format!("{display:?}: {e}")))?;
        let special = crate::classify::detect_special_form(&rep)
            .as_ref()
            .map(SpecialFormRecord::from);
        Ok(CatalogRecord {
            schema_version: SCHEMA_VERSION,
            id: id.to_string(),
            display: display.to_string(),
            canonical: canon.serialization(),
            h,
            l_times_10: measures.l_times_10,
            flags,
            special,
            status,
            provenance,
            witnesses: Vec::new(),
            families: Vec::new(),
            links: Vec::new(),
        })
    }

    /// Parses the display equation.
    pub fn display_poly(&self) -> Result<Polynomial, crate::parse::ParseError> {
        parse_equation(&self.display)
    }

    /// Parses the canonical equation.
    pub fn canonical_poly(&self) -> Result<Polynomial, crate::parse::ParseError> {
        parse_equation(&self.canonical)
    }

    /// Witness tuples as integers, in display variable order.
    pub fn witness_tuples(&self) -> Result<Vec<SolutionTuple>, String> {
        self.witnesses
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let values = w
                    .iter()
                    .map(|s| {
                        s.parse::<BigInt>()
                            .map_err(|e| format!("witness {i}: bad integer {s:?}: {e}"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(SolutionTuple::new(values))
            })
            .collect()
    }
}

/// Dedup key for one record: the recomputed canonical form when the stored
/// equation parses, the raw string otherwise (verification reports the
/// breakage separately; loading only has to group classes consistently).
fn class_key(record: &CatalogRecord) -> String {
    parse_equation(&record.canonical)
        .ok()
        .and_then(|p| canonicalize(&p).ok())
        .map(|c| c.serialization())
        .unwrap_or_else(|| record.canonical.clone())
}

/// Reads one JSONL file. Blank lines are allowed; every other line must be
/// a record with the supported schema version. Two rows describing the
/// same equivalence class are an error.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogRecord>, CatalogError> {
    let text = fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut records = Vec::new();
    let mut seen_classes: BTreeMap<String, usize> = BTreeMap::new();
    let mut seen_ids: BTreeMap<String, usize> = BTreeMap::new();
    for (index, line) in text.lines().enumerate() {
        let line_no = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: CatalogRecord =
            serde_json::from_str(line).map_err(|e| CatalogError::Record {
                path: path.to_path_buf(),
                line: line_no,
                message: e.to_string(),
            })?;
        if record.schema_version != SCHEMA_VERSION {
            return Err(CatalogError::SchemaVersion {
                path: path.to_path_buf(),
                line: line_no,
                found: record.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
        let key = class_key(&record);
        if let Some(&first_line) = seen_classes.get(&key) {
            return Err(CatalogError::DuplicateClass {
                path: path.to_path_buf(),
                line: line_no,
                first_line,
                canonical: key,
            });
        }
        seen_classes.insert(key, line_no);
        if let Some(&first_line) = seen_ids.get(&record.id) {
            return Err(CatalogError::Record {
                path: path.to_path_buf(),
                line: line_no,
                message: format!("id {:?} already used at line {first_line}", record.id),
            });
        }
        seen_ids.insert(record.id.clone(), line_no);
        records.push(record);
    }
    Ok(records)
}

/// Writes records as JSONL, one record per line, in the given order.
pub fn save_catalog(path: &Path, records: &[CatalogRecord]) -> Result<(), CatalogError> {
    let mut out = String::new();
    for record in records {
        let line = serde_json::to_string(record).map_err(|e| CatalogError::Record {
            path: path.to_path_buf(),
            line: 0,
            message: e.to_string(),
        })?;
        out.push_str(&line);
        out.push('\n');
    }
    fs::write(path, out).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn merge_lists<T: PartialEq + Clone>(into: &mut Vec<T>, from: &[T]) {
    for item in from {
        if !into.contains(item) {
            into.push(item.clone());
        }
    }
}

/// Loads every `*.jsonl` under a directory (sorted by file name) and merges
/// rows describing the same class: one census entry can appear in several
/// source tables. Merged rows must agree on identity and measures; their
/// status maps must not contradict each other; provenance, witnesses,
/// families, and links are unioned. Output is sorted by (h, canonical).
pub fn load_catalog_dir(dir: &Path) -> Result<Vec<CatalogRecord>, CatalogError> {
    let entries = fs::read_dir(dir).map_err(|source| CatalogError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "jsonl"))
        .collect();
    files.sort();
    let mut merged: BTreeMap<String, CatalogRecord> = BTreeMap::new();
    for file in files {
        for record in load_catalog(&file)? {
            let key = class_key(&record);
            match merged.get_mut(&key) {
                None => {
                    merged.insert(key, record);
                }
                Some(existing) => merge_records(existing, &record)?,
            }
        }
    }
    let mut records: Vec<CatalogRecord> = merged.into_values().collect();
    records.sort_by(|a, b| a.h.cmp(&b.h).then_with(|| a.canonical.cmp(&b.canonical)));
    Ok(records)
}

fn merge_records(into: &mut CatalogRecord, from: &CatalogRecord) -> Result<(), CatalogError> {
    let conflict = |message: String| CatalogError::MergeConflict {
        canonical: into.canonical.clone(),
        message,
    };
    if into.id != from.id {
        return Err(conflict(format!("ids {:?} and {:?}", into.id, from.id)));
    }
    if into.canonical != from.canonical {
        return Err(conflict(format!(
            "canonical spellings {:?} and {:?}",
            into.canonical, from.canonical
        )));
    }
    if (into.h, into.l_times_10) != (from.h, from.l_times_10) {
        return Err(conflict("measures differ".to_string()));
    }
    if into.flags != from.flags {
        return Err(conflict("category flags differ".to_string()));
    }
    if into.special != from.special {
        return Err(conflict("special forms differ".to_string()));
    }
    for (problem, status) in &from.status {
        match into.status.get(problem) {
            None => {
                into.status.insert(*problem, *status);
            }
            Some(existing) if existing == status => {}
            Some(existing) => {
                return Err(conflict(format!(
                    "{problem} is {existing} in one file and {status} in another"
                )));
            }
        }
    }
    merge_lists(&mut into.provenance, &from.provenance);
    merge_lists(&mut into.witnesses, &from.witnesses);
    merge_lists(&mut into.families, &from.families);
    merge_lists(&mut into.links, &from.links);
    Ok(())
}

/// One failed recomputation or reference check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub id: String,
    pub field: String,
    pub detail: String,
}

/// The outcome of [`verify_catalog`]: how many records were checked and
/// every divergence between stored and recomputed data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn verify_record(record: &CatalogRecord, ids: &BTreeSet<String>) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mut push = |field: &str, detail: String| {
        out.push(Mismatch {
            id: record.id.clone(),
            field: field.to_string(),
            detail,
        })
    };

    let canon_poly = match record.canonical_poly() {
        Ok(p) => p,
        Err(e) => {
            push("canonical", format!("does not parse: {e}"));
            return out;
        }
    };
    match canonicalize(&canon_poly) {
        Ok(c) if c.serialization() == record.canonical => {}
        Ok(c) => push(
            "canonical",
            format!("not a fixed point: canonicalizes to {}", c.serialization()),
        ),
        Err(e) => push("canonical", e.to_string()),
    }

    let display_poly = match record.display_poly() {
        Ok(p) => p,
        Err(e) => {
            push("display", format!("does not parse: {e}"));
            return out;
        }
    };
    match crate::equivalence::are_equivalent(&display_poly, &canon_poly) {
        Ok(true) => {}
        Ok(false) => push("display", "not equivalent to canonical".to_string()),
        Err(e) => push("display", e.to_string()),
    }

    let measures = canon_poly.measures();
    if measures.size_h != BigInt::from(record.h) {
        push("h", format!("stored {}, recomputed {}", record.h, measures.size_h));
    }
    if display_poly.size_h() != BigInt::from(record.h) {
        push("h", format!("display size {} differs", display_poly.size_h()));
    }
    if measures.l_times_10 != record.l_times_10 {
        push(
            "l_times_10",
            format!("stored {}, recomputed {}", record.l_times_10, measures.l_times_10),
        );
    }

    match class_flags(&canon_poly) {
        Ok(flags) if flags == record.flags => {}
        Ok(flags) => push("flags", format!("stored {:?}, recomputed {flags:?}", record.flags)),
        Err(e) => push("flags", e.to_string()),
    }

    let special = crate::classify::detect_special_form(&canon_poly)
        .as_ref()
        .map(SpecialFormRecord::from);
    if special != record.special {
        push("special", format!("stored {:?}, recomputed {special:?}", record.special));
    }

    match record.witness_tuples() {
        Ok(tuples) => {
            for (i, tuple) in tuples.iter().enumerate() {
                match verify_solution(&display_poly, tuple) {
                    Ok(true) => {}
                    Ok(false) => push("witnesses", format!("witness {i} does not solve the equation")),
                    Err(e) => push("witnesses", format!("witness {i}: {e}")),
                }
            }
        }
        Err(detail) => push("witnesses", detail),
    }

    for (i, spec) in record.families.iter().enumerate() {
        match ParametricFamily::from_spec(spec) {
            Ok(family) => match crate::families::verify_family(&display_poly, &family) {
                Ok(true) => {}
                Ok(false) => push("families", format!("family {i} does not satisfy the equation")),
                Err(e) => push("families", format!("family {i}: {e}")),
            },
            Err(e) => push("families", format!("family {i}: {e}")),
        }
    }

    for link in &record.links {
        if link.id == record.id {
            push("links", "links to itself".to_string());
        } else if !ids.contains(&link.id) {
            push("links", format!("link target {:?} not in the record set", link.id));
        }
    }

    out
}

/// Recomputes everything computable about every record and reports all
/// divergences: canonical fixed point, display/canonical equivalence,
/// measures, flags, special form, witnesses, families, link resolution,
/// id and class uniqueness. Curated status values are not checked; they
/// are data. Never fails; problems come back as report entries.
pub fn verify_catalog(records: &[CatalogRecord]) -> VerifyReport {
    let ids: BTreeSet<String> = records.iter().map(|r| r.id.clone()).collect();
    let mut mismatches: Vec<Mismatch> = records
        .par_iter()
        .map(|record| verify_record(record, &ids))
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });

    let mut seen_ids: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, record) in records.iter().enumerate() {
        if let Some(&first) = seen_ids.get(record.id.as_str()) {
            mismatches.push(Mismatch {
                id: record.id.clone(),
                field: "id".to_string(),
                detail: format!("also used by record {first}"),
            });
        }
        seen_ids.insert(&record.id, i);
    }
    let mut seen_classes: BTreeMap<String, String> = BTreeMap::new();
    for record in records {
        let key = class_key(record);
        if let Some(first_id) = seen_classes.get(&key) {
            mismatches.push(Mismatch {
                id: record.id.clone(),
                field: "canonical".to_string(),
                detail: format!("same class as record {first_id:?}"),
            });
        } else {
            seen_classes.insert(key, record.id.clone());
        }
    }

    VerifyReport {
        checked: records.len(),
        mismatches,
    }
}

/// A smallest-open query: which problem, which slice of the census, and
/// whether hedged judgements count as open. `by_length` switches the
/// ordering from size to exact length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenQuery {
    pub problem: ProblemId,
    pub filter: ClassFilter,
    pub include_debatable: bool,
    pub by_length: bool,
}

impl OpenQuery {
    pub fn new(problem: ProblemId) -> Self {
        OpenQuery {
            problem,
            filter: ClassFilter::default(),
            include_debatable: false,
            by_length: false,
        }
    }
}

/// All minimal records whose status for the queried problem is open (or
/// debatable when included), restricted to the filtered slice. Length
/// ordering compares exact lengths, never the rounded decimal. Ties are
/// all returned, sorted by canonical spelling.
pub fn smallest_open(records: &[CatalogRecord], query: &OpenQuery) -> Vec<CatalogRecord> {
    let admitted = |record: &&CatalogRecord| -> bool {
        let status = record.status.get(&query.problem);
        let open = matches!(status, Some(Status::Open))
            || (query.include_debatable && matches!(status, Some(Status::Debatable)));
        open && query.filter.admits(&record.flags)
    };
    let length_key = |record: &CatalogRecord| -> BigInt {
        record
            .canonical_poly()
            .map(|p| p.length_l())
            .unwrap_or_else(|_| BigInt::from(u64::MAX))
    };

    let candidates: Vec<&CatalogRecord> = records.iter().filter(admitted).collect();
    let best: Option<BigInt> = if query.by_length {
        candidates.iter().map(|r| length_key(r)).min()
    } else {
        candidates.iter().map(|r| BigInt::from(r.h)).min()
    };
    let Some(best) = best else {
        return Vec::new();
    };
    let mut winners: Vec<CatalogRecord> = candidates
        .into_iter()
        .filter(|r| {
            if query.by_length {
                length_key(r) == best
            } else {
                BigInt::from(r.h) == best
            }
        })
        .cloned()
        .collect();
    winners.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    winners
}

/// Identity of a record that left the census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordRef {
    pub id: String,
    pub canonical: String,
    pub h: u64,
}

/// One status flip between two versions, with the newer file's provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatusChange {
    pub id: String,
    pub canonical: String,
    pub problem: ProblemId,
    pub old: Option<Status>,
    pub new: Option<Status>,
    pub provenance: Vec<String>,
}

/// Differences between two catalog versions. `added` carries full records
/// so a diff can be replayed onto the older version.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogDiff {
    pub added: Vec<CatalogRecord>,
    pub removed: Vec<RecordRef>,
    pub status_changed: Vec<StatusChange>,
}

impl CatalogDiff {
    pub fn is_empty(&self) -> bool {
        self.added.is_empty() && self.removed.is_empty() && self.status_changed.is_empty()
    }
}

/// Classifies every divergence between two versions, keyed by equivalence
/// class. Surviving records are compared by status; other curated annexes
/// (witnesses, provenance) are version-local detail and not diffed.
pub fn diff_catalogs(old: &[CatalogRecord], new: &[CatalogRecord]) -> CatalogDiff {
    let old_by_class: BTreeMap<String, &CatalogRecord> =
        old.iter().map(|r| (class_key(r), r)).collect();
    let new_by_class: BTreeMap<String, &CatalogRecord> =
        new.iter().map(|r| (class_key(r), r)).collect();

    let mut added: Vec<CatalogRecord> = new_by_class
        .iter()
        .filter(|(key, _)| !old_by_class.contains_key(*key))
        .map(|(_, r)| (*r).clone())
        .collect();
    added.sort_by(|a, b| a.h.cmp(&b.h).then_with(|| a.canonical.cmp(&b.canonical)));

    let mut removed: Vec<RecordRef> = old_by_class
        .iter()
        .filter(|(key, _)| !new_by_class.contains_key(*key))
        .map(|(_, r)| RecordRef {
            id: r.id.clone(),
            canonical: r.canonical.clone(),
            h: r.h,
        })
        .collect();
    removed.sort_by(|a, b| a.h.cmp(&b.h).then_with(|| a.canonical.cmp(&b.canonical)));

    let mut status_changed: Vec<StatusChange> = Vec::new();
    for (key, new_record) in &new_by_class {
        let Some(old_record) = old_by_class.get(key) else {
            continue;
        };
        let problems: BTreeSet<ProblemId> = old_record
            .status
            .keys()
            .chain(new_record.status.keys())
            .copied()
            .collect();
        for problem in problems {
            let old_status = old_record.status.get(&problem).copied();
            let new_status = new_record.status.get(&problem).copied();
            if old_status != new_status {
                status_changed.push(StatusChange {
                    id: new_record.id.clone(),
                    canonical: new_record.canonical.clone(),
                    problem,
                    old: old_status,
                    new: new_status,
                    provenance: new_record.provenance.clone(),
                });
            }
        }
    }
    status_changed.sort_by(|a, b| {
        a.canonical
            .cmp(&b.canonical)
            .then_with(|| a.problem.cmp(&b.problem))
    });

    CatalogDiff {
        added,
        removed,
        status_changed,
    }
}

/// Replays a diff onto a base version. Applying `diff_catalogs(a, b)` to
/// `a` yields a catalog whose diff against `b` is empty.
pub fn apply_diff(
    base: &[CatalogRecord],
    diff: &CatalogDiff,
) -> Result<Vec<CatalogRecord>, CatalogError> {
    let mut by_class: BTreeMap<String, CatalogRecord> = base
        .iter()
        .map(|r| (class_key(r), r.clone()))
        .collect();
    for gone in &diff.removed {
        let key = parse_equation(&gone.canonical)
            .ok()
            .and_then(|p| canonicalize(&p).ok())
            .map(|c| c.serialization())
            .unwrap_or_else(|| gone.canonical.clone());
        if by_class.remove(&key).is_none() {
            return Err(CatalogError::DiffMismatch {
                message: format!("removed record {} is not in the base", gone.canonical),
            });
        }
    }
    for change in &diff.status_changed {
        let key = parse_equation(&change.canonical)
            .ok()
            .and_then(|p| canonicalize(&p).ok())
            .map(|c| c.serialization())
            .unwrap_or_else(|| change.canonical.clone());
        let Some(record) = by_class.get_mut(&key) else {
            return Err(CatalogError::DiffMismatch {
                message: format!("status change for {} misses the base", change.canonical),
            });
        };
        if record.status.get(&change.problem).copied() != change.old {
            return Err(CatalogError::DiffMismatch {
                message: format!(
                    "status change for {}: base disagrees on the old value",
                    change.canonical
                ),
            });
        }
        match change.new {
            Some(status) => {
                record.status.insert(change.problem, status);
            }
            None => {
                record.status.remove(&change.problem);
            }
        }
    }
    for record in &diff.added {
        let key = class_key(record);
        if by_class.contains_key(&key) {
            return Err(CatalogError::DiffMismatch {
                message: format!("added record {} is already in the base", record.canonical),
            });
        }
        by_class.insert(key, record.clone());
    }
    let mut records: Vec<CatalogRecord> = by_class.into_values().collect();
    records.sort_by(|a, b| a.h.cmp(&b.h).then_with(|| a.canonical.cmp(&b.canonical)));
    Ok(records)
}

/// Catalog root override from the environment, read by the command-line
/// front end: `DIOPH_DATA_DIR` names the directory holding `tables/` and
/// `versions/`.
pub const DATA_DIR_ENV: &str = "DIOPH_DATA_DIR";
