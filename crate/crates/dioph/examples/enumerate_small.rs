//! Enumerates every equivalence class up to size 13 and prints the census:
//! per-size class counts, then the size-13 classes restricted to four or
//! more variables (the size where the parametrization question first gets
//! interesting).

use std::time::Instant;

use dioph::enumerate::{count_classes, enumerate_classes, ClassFilter, EnumerationQuery};

fn main() {
    let start = Instant::now();
    let counts = count_classes(13).expect("enumerate to 13");
    println!("classes by size (H = 2 ..= 13):");
    println!("  H  classes");
    for (h, n) in &counts {
        println!("{h:>3}  {n}");
    }
    let total: u64 = counts.iter().map(|(_, n)| n).sum();
    println!("total {total} classes in {:.2?}", start.elapsed());

    // The same enumeration, filtered: size-13 classes in >= 4 variables.
    let mut query = EnumerationQuery::new(13);
    query.filter = ClassFilter { min_nvars: Some(4), ..ClassFilter::default() };
    let classes = enumerate_classes(&query).expect("filtered enumeration");
    println!("\nsize-13 classes with at least four variables:");
    for class in classes.iter().filter(|c| c.h == 13) {
        println!("  {}", class.serialization);
    }
}
