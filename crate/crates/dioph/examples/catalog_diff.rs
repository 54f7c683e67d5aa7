//! Diffs consecutive census versions: classes added, classes removed
//! (questions settled), and in-place status flips. A diff can be replayed
//! onto the older version to reproduce the newer one exactly.

use std::path::Path;

use dioph::catalog::{apply_diff, diff_catalogs, load_catalog, Status};

fn main() {
    let versions = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/versions");
    let load = |name: &str| load_catalog(&versions.join(name)).expect("version loads");
    let snapshots = [
        ("v3", load("v3.jsonl")),
        ("v4", load("v4.jsonl")),
        ("v5", load("v5.jsonl")),
        ("v6", load("v6.jsonl")),
    ];

    for pair in snapshots.windows(2) {
        let (old_name, old) = &pair[0];
        let (new_name, new) = &pair[1];
        let diff = diff_catalogs(old, new);
        println!("{old_name} -> {new_name}:");
        for record in &diff.added {
            println!("  + H={:<4} {}", record.h, record.display);
        }
        for gone in &diff.removed {
            println!("  - H={:<4} {}", gone.h, gone.canonical);
        }
        for change in &diff.status_changed {
            let show = |s: Option<Status>| s.map_or("unset", |s| s.as_str()).to_string();
            println!(
                "  ~ {}  {}: {} -> {}",
                change.canonical,
                change.problem,
                show(change.old),
                show(change.new)
            );
        }

        // Replaying the diff onto the older version reproduces the newer
        // one, so a diff is a faithful changelog entry.
        let replayed = apply_diff(old, &diff).expect("diff applies");
        assert!(diff_catalogs(&replayed, new).is_empty());
        println!("  replay onto {old_name} reproduces {new_name}\n");
    }
}
