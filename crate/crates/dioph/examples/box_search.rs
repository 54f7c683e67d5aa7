//! Exhaustive solution search over coordinate boxes [-B, B]^n, in the
//! modes the census uses: all solutions, positive-only, primitive, and
//! capped runs that report why they stopped.

use dioph::parse::parse_equation;
use dioph::search::{box_search, SearchMode, SearchSpec};

fn main() {
    // Sums of three cubes. At B = 5 the box already contains the two
    // famous representations of 3.
    let p = parse_equation("x^3+y^3+z^3=3").unwrap();
    let outcome = box_search(&p, &SearchSpec::new(5));
    println!("x^3+y^3+z^3=3, B=5:");
    for s in &outcome.solutions {
        println!("  {s}");
    }

    // 1 has small solutions beyond the trivial one; B = 12 reaches
    // (9, 10, -12).
    let p = parse_equation("x^3+y^3+z^3=1").unwrap();
    let outcome = box_search(&p, &SearchSpec::new(12));
    println!("x^3+y^3+z^3=1, B=12: {} solutions, among them:", outcome.solutions.len());
    for s in outcome.solutions.iter().filter(|s| s.min_abs() >= 9.into()) {
        println!("  {s}");
    }

    // Primitive solutions only (gcd of the coordinates is 1, not all zero).
    let p = parse_equation("x^4+2*y^3+z^3=0").unwrap();
    let mut spec = SearchSpec::new(2);
    spec.mode = SearchMode::Primitive;
    let outcome = box_search(&p, &spec);
    println!("x^4+2*y^3+z^3=0, B=2, primitive:");
    for s in &outcome.solutions {
        println!("  {s}");
    }

    // Positive solutions, and an evaluation budget that cuts the scan off.
    let p = parse_equation("x^2*y^2+x=z^3").unwrap();
    let mut spec = SearchSpec::new(50);
    spec.mode = SearchMode::Positive;
    spec.budget = Some(20_000);
    let outcome = box_search(&p, &spec);
    println!(
        "x^2*y^2+x=z^3, B=50, positive, budget 20000: {} found, complete: {}, stopped: {:?}",
        outcome.solutions.len(),
        outcome.complete,
        outcome.stopped
    );
}
