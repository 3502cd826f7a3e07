//! Expands both roots of the wicketed relation and picks the counting
//! series by its first two coefficients.

use umbral_ferrers::analysis::{
    quadratic_branches, solve_quadratic_series, KnownRelation, RootSelector,
};

fn main() -> umbral_ferrers::Result<()> {
    let rel = KnownRelation::Wicketed.relation();
    println!("relation: {rel}");
    println!("discriminant: {}", rel.discriminant());
    let [plus, minus] = quadratic_branches(&rel, 14)?;
    println!("+ root: {}", plus.expect("power series"));
    println!("- root: {}", minus.expect("power series"));
    let psi = solve_quadratic_series(&rel, 20, &RootSelector::prefix(8, &[1, 8]))?;
    println!("selected: {psi}");
    Ok(())
}
