//! Loads the shipped census, verifies every recomputable field, and
//! prints the smallest open equations for each catalogued problem.

use std::path::Path;

use dioph::catalog::{load_catalog_dir, smallest_open, verify_catalog, OpenQuery, ProblemId};
use dioph::enumerate::ClassFilter;

fn tenths(t: u64) -> String {
    if t % 10 == 0 { format!("{}", t / 10) } else { format!("{}.{}", t / 10, t % 10) }
}

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let records = load_catalog_dir(&data.join("tables")).expect("data/tables loads");
    let report = verify_catalog(&records);
    assert!(report.passed(), "census mismatches: {:?}", report.mismatches);
    println!("{} classes, every stored field recomputed and confirmed\n", report.checked);

    println!("smallest open equation per problem:");
    for problem in ProblemId::ALL {
        let rows = smallest_open(&records, &OpenQuery::new(problem));
        match rows.first() {
            None => println!("  {problem:<22} (none)"),
            Some(first) => println!(
                "  {problem:<22} H={:<4} l={:<5} {} ({} tied)",
                first.h,
                tenths(first.l_times_10),
                first.display,
                rows.len()
            ),
        }
    }

    // Restricting to two variables: the four size-32 equations where even
    // the existence of an integer solution is unknown.
    let mut query = OpenQuery::new(ProblemId::Existence);
    query.filter = ClassFilter { min_nvars: Some(2), max_nvars: Some(2), ..ClassFilter::default() };
    println!("\nsmallest open two-variable existence problems:");
    for row in smallest_open(&records, &query) {
        println!("  {}  H={}  {}", row.id, row.h, row.display);
    }

    // Ordering by length instead of size surfaces different equations.
    let mut query = OpenQuery::new(ProblemId::Existence);
    query.by_length = true;
    println!("\nshortest open existence problems by length:");
    for row in smallest_open(&records, &query) {
        println!("  {}  l={}  {}", row.id, tenths(row.l_times_10), row.display);
    }
}
