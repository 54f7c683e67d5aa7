//! Computes the two census measures for a handful of flagship equations:
//! the size H (sum of |coefficient| * 2^degree over the monomials) and the
//! length l = log2 of the corresponding product. The two orderings
//! disagree, which is the point: a census sorted by H and one sorted by l
//! surface different equations first.

use dioph::parse::parse_equation;

fn tenths(t: u64) -> String {
    if t % 10 == 0 { format!("{}", t / 10) } else { format!("{}.{}", t / 10, t % 10) }
}

fn main() {
    let equations = [
        "x^2+y^2+z*t+1=0",
        "x^3+y*z+1=0",
        "y^2+z^2=x^3+1",
        "x^3+y^3+z^3=3",
        "y*(x^3-z^2)=z",
        "x^3*y^2=z^3+6",
        "y^2*z+y*z^2=x^3+x^2+3*x-1",
        "x^6+3*x^3*y^3+y^6+x+y+1=0",
        "4*x^5+4*y^5+11*z^5=0",
    ];

    println!("{:<30} {:>6} {:>6}  {}", "equation", "H", "l", "L exact");
    let mut rows = Vec::new();
    for text in equations {
        let p = parse_equation(text).expect("parses");
        let m = p.measures();
        println!(
            "{text:<30} {:>6} {:>6}  {}",
            m.size_h,
            tenths(m.l_times_10),
            m.length_big_l
        );
        rows.push((text, m));
    }

    // Sorting by H and by L gives different orders: the cubic below is
    // size 35 (small) but length 13.6 (large), while the symmetric sextic
    // is size 325 yet shorter in l than the cubic.
    let mut by_h = rows.iter().map(|(t, m)| (m.size_h.clone(), *t)).collect::<Vec<_>>();
    let mut by_l = rows.iter().map(|(t, m)| (m.l_times_10, *t)).collect::<Vec<_>>();
    by_h.sort();
    by_l.sort();
    println!("\nby size H : {}", by_h.iter().map(|(_, t)| *t).collect::<Vec<_>>().join("  "));
    println!("by length l: {}", by_l.iter().map(|(_, t)| *t).collect::<Vec<_>>().join("  "));
}
