//! The wicketed series as a Catalan series times four copies of the plain
//! Ferrers series, compared with the row-by-row computation.

use umbral_ferrers::analysis::{catalan_factor, closed_form_psi};
use umbral_ferrers::umbral::wicketed_specialized;

fn main() -> umbral_ferrers::Result<()> {
    let order = 40;
    println!("catalan: {}", catalan_factor(12)?);
    let closed = closed_form_psi(order)?;
    let evolved = wicketed_specialized(order)?;
    assert_eq!(closed, evolved);
    println!("[t^{order}] = {}", closed.scalar_coeff(order));
    println!("closed form and evolution agree through t^{order}");
    Ok(())
}
