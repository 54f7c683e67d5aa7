//! Replays every witness and every parametric family stored in the data
//! files against its equation. This is the cheap half of catalog
//! verification: exact arithmetic, no search.

use std::path::Path;

use dioph::catalog::load_catalog_dir;
use dioph::families::{verify_family, ParametricFamily};
use dioph::search::verify_solution;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let records = load_catalog_dir(&data.join("tables")).expect("data/tables loads");

    let mut witnesses = 0usize;
    let mut families = 0usize;
    for record in &records {
        let poly = record.display_poly().expect("display parses");
        for tuple in record.witness_tuples().expect("witnesses parse") {
            assert!(
                verify_solution(&poly, &tuple).expect("arity matches"),
                "{}: {tuple} does not solve {}",
                record.id,
                record.display
            );
            witnesses += 1;
        }
        for spec in &record.families {
            let family = ParametricFamily::from_spec(spec).expect("family parses");
            assert!(
                verify_family(&poly, &family).expect("arity matches"),
                "{}: family does not solve {}",
                record.id,
                record.display
            );
            families += 1;
        }
    }
    println!(
        "replayed {witnesses} witnesses and {families} families over {} records: all exact",
        records.len()
    );

    // The big existence settlements are worth seeing in full.
    for record in &records {
        if record.provenance.iter().any(|p| p == "changelog:v5->v6") && !record.witnesses.is_empty()
        {
            println!("\n{}", record.display);
            for tuple in record.witness_tuples().unwrap() {
                println!("  {tuple}");
            }
        }
    }
}
