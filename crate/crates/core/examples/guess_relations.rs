//! Rediscovers the quadratic relations from 41 coefficients by exact
//! linear algebra.

use num_rational::BigRational;
use num_traits::One;
use umbral_ferrers::analysis::{guess_quadratic, AnsatzSpec, KnownRelation};
use umbral_ferrers::umbral::{gated_with_fixed_x1, wicketed_specialized};

fn main() -> umbral_ferrers::Result<()> {
    let order = 40;
    let phi = gated_with_fixed_x1(order, &BigRational::one())?.specialize_to_one();
    let psi = wicketed_specialized(order)?;
    for (name, series, known) in [
        ("gated", phi, KnownRelation::Gated),
        ("wicketed", psi, KnownRelation::Wicketed),
    ] {
        match guess_quadratic(&series, &AnsatzSpec::default())? {
            Some(g) => {
                println!("{name}: {}", g.relation);
                println!(
                    "  bounds {:?}, nullity {}, same as {known}: {}",
                    g.bounds,
                    g.nullity,
                    g.relation == known.relation().canonical()?
                );
            }
            None => println!("{name}: no relation"),
        }
    }
    Ok(())
}
