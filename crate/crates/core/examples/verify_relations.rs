//! Substitutes the computed series into each known quadratic relation and
//! reports the lowest surviving residual degree.

use umbral_ferrers::analysis::{default_points, verify_known, KnownRelation};

fn main() -> umbral_ferrers::Result<()> {
    for rel in KnownRelation::ALL {
        let order = if rel.arity() == 3 { 16 } else { 24 };
        for report in verify_known(rel, order, &default_points(rel))? {
            println!("{}", report.to_json());
        }
    }
    Ok(())
}
