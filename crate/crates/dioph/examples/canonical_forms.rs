//! Canonicalization under the admissible operations: multiplying by a
//! nonzero constant, negating individual variables, and renaming
//! variables. Every member of a class maps to the same canonical
//! serialization, and the reported transform replays the reduction.

use dioph::equivalence::{are_equivalent, canonicalize};
use dioph::parse::parse_equation;

fn main() {
    // Five spellings of one class.
    let spellings = [
        "x^3 + y*z + 1 = 0",
        "-x^3 - y*z - 1 = 0",
        "3*x^3 + 3*y*z + 3 = 0",
        "y^3 + x*z + 1 = 0",
        "z^3 - x*y + 1 = 0",
    ];
    println!("one class, five spellings:");
    let mut canonical = None;
    for text in spellings {
        let p = parse_equation(text).expect("parses");
        let form = canonicalize(&p).expect("within the variable limit");
        println!("  {text:<24} -> {}", form.serialization());
        // The transform is a certificate: replaying it on the input (with
        // unused variables compressed away) lands exactly on the class
        // representative.
        assert_eq!(form.transform.apply(&p.compress_vars().0), form.rep);
        if let Some(previous) = &canonical {
            assert_eq!(previous, &form.serialization());
        }
        canonical = Some(form.serialization());
    }

    // Sign patterns matter: these two quadrics differ only in one sign and
    // are genuinely different classes.
    let a = parse_equation("x^2+y^2+z*t+1=0").unwrap();
    let b = parse_equation("x^2+y^2+z*t-1=0").unwrap();
    println!("\nx^2+y^2+z*t+1=0  ~  x^2+y^2+z*t-1=0 ?");
    println!("  equivalent: {}", are_equivalent(&a, &b).unwrap());

    // But negating z*t is absorbed by negating one of z, t.
    let c = parse_equation("x^2+y^2-z*t+1=0").unwrap();
    println!("x^2+y^2+z*t+1=0  ~  x^2+y^2-z*t+1=0 ?");
    println!("  equivalent: {}", are_equivalent(&a, &c).unwrap());
}
