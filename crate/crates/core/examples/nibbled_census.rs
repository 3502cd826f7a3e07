//! Exploratory census of nibbled staircase polygons by measured size and
//! nibble lengths, from two independent generators.

use umbral_ferrers::oracle::{count_nibbled, count_nibbled_by_columns};

fn main() {
    let max = 12;
    let by_paths = count_nibbled(max);
    assert_eq!(by_paths, count_nibbled_by_columns(max));
    let plain: Vec<String> = (4..=max)
        .step_by(2)
        .map(|h| format!("{h}:{}", by_paths.count(h, 0, 0)))
        .collect();
    println!("no nibbles: {}", plain.join(" "));
    for h in 4..=max {
        println!(
            "size {h:2}: {} polygons over all nibbles",
            by_paths.total(h)
        );
    }
}
