//! Category flags: number of variables, degree, monomial count,
//! homogeneity, symmetry, cyclicity, independent monomials, and the
//! special three-term forms with their hyperbolic test.

use dioph::classify::{class_flags, classify, detect_special_form};
use dioph::parse::parse_equation;

fn show(text: &str) {
    let p = parse_equation(text).expect("parses");
    let flags = class_flags(&p).expect("within the variable limit");
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
    let special = match detect_special_form(&p) {
        None => String::new(),
        Some(form) => format!(
            "  [{:?}{}]",
            form.kind,
            if form.hyperbolic { ", hyperbolic" } else { "" }
        ),
    };
    println!(
        "{text:<40} n={} deg={} mono={}  {}{special}",
        flags.nvars,
        flags.degree,
        flags.num_monomials,
        if names.is_empty() { "-".to_string() } else { names.join(",") },
    );
}

fn main() {
    show("x^3+y^3+z^3=3");
    show("x^2*y+y^2*z+z^2*x=1");
    show("x^3+x+y^3+y+z^3+z=x*y*z+1");
    show("x^2+y^2+z*t+1=0");
    show("x^4+2*y^3+z^3=0");
    show("x^3+y^3+z^3=0");
    show("7*x^4-7*y^4=25*z^4");
    show("x^4+x*y^3+z^4+t^4=0");

    // Flags are judged class-wide, not on the literal spelling: this
    // polynomial is not symmetric as written, but negating y turns it
    // into the symmetric x^3 + x^2*y + x*y^2 + y^3.
    let p = parse_equation("x^3-x^2*y+x*y^2-y^3=0").unwrap();
    println!(
        "\nliteral symmetric: {:>5}   class symmetric: {}",
        classify(&p).symmetric,
        class_flags(&p).unwrap().symmetric
    );
}
