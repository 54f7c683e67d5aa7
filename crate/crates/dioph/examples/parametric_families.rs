//! Parametric families: polynomial tuples in parameters u1..uk that solve
//! an equation identically. Verification is exact symbolic substitution,
//! so a family certifies infinitely many solutions at once.

use num_bigint::BigInt;
use dioph::families::{covers_witness, family_member, verify_family, ParametricFamily};
use dioph::parse::parse_equation;
use dioph::search::SolutionTuple;

fn main() {
    // The classic one-parameter family for a sum of three cubes equal to 2:
    // (1 - 6u^3)^3 + (-6u^2)^3 + (1 + 6u^3)^3 = 2 for every integer u.
    let p = parse_equation("x^3+y^3+z^3=2").unwrap();
    let family = ParametricFamily::from_strings(
        1,
        &["1-6*u^3".to_string(), "-6*u^2".to_string(), "1+6*u^3".to_string()],
    )
    .expect("components parse");
    println!("family solves x^3+y^3+z^3=2: {}", verify_family(&p, &family).unwrap());

    for u in -2i64..=2 {
        let member = family_member(&family, &[BigInt::from(u)]).unwrap();
        println!("  u = {u:>2}: {member}");
    }

    // Coverage: which known solutions does the family reach? (1, 0, 1) is
    // the member at u = 0; (1, 1, 0) solves the equation but lies outside
    // the family.
    for witness in [vec![1, 0, 1], vec![1, 1, 0]] {
        let tuple = SolutionTuple::new(witness.iter().map(|&v| BigInt::from(v)).collect());
        let covered =
            covers_witness(std::slice::from_ref(&family), &tuple, 10, false).unwrap();
        println!("covers {tuple}: {covered}");
    }

    // A wrong family is rejected by the same symbolic check.
    let wrong = ParametricFamily::from_strings(
        1,
        &["1-6*u^3".to_string(), "6*u^2".to_string(), "1+6*u^3".to_string()],
    )
    .unwrap();
    println!("sign-flipped family accepted: {}", verify_family(&p, &wrong).unwrap());
}
