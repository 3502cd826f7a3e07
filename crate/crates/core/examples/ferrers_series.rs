//! Plain Ferrers diagrams: the series in `t` and top width `x`, and its
//! specialization `t^2/(1-2t)`.

use umbral_ferrers::umbral::{pipeline, Target};

fn main() -> umbral_ferrers::Result<()> {
    let order = 12;
    let f = pipeline(Target::Ferrers, order)?;
    println!("F(x, t) through t^6:");
    for k in 0..=6 {
        if !f.coeff(k).is_zero() {
            println!("  t^{k}: {}", f.coeff(k));
        }
    }
    let ones = f.specialize_to_one();
    println!("F(1, t) = {ones}");
    for n in 2..=order {
        assert_eq!(
            ones.scalar_coeff(n),
            umbral_ferrers::algebra::rat(1 << (n - 2))
        );
    }
    Ok(())
}
