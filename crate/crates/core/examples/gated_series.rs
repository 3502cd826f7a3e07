//! Gated diagrams with the three gate widths kept as catalytic variables:
//! `x1` the left post, `x2` the gap, `x3` the right post of the top row.

use umbral_ferrers::umbral::{pipeline, Target};

fn main() -> umbral_ferrers::Result<()> {
    let phi = pipeline(Target::Gated, 8)?;
    for k in 6..=8 {
        println!("t^{k}: {}", phi.coeff(k));
    }
    let counts = phi.specialize_to_one();
    let listed: Vec<String> = (6..=8)
        .map(|k| counts.scalar_coeff(k).to_string())
        .collect();
    println!("counts at half-perimeter 6..8: {}", listed.join(", "));
    println!("JSON: {}", pipeline(Target::Gated, 6)?.to_json());
    Ok(())
}
