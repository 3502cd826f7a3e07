//! The four row operators applied to single monomials, next to their
//! closed forms evaluated at a point.

use umbral_ferrers::algebra::{rat, TruncSeries};
use umbral_ferrers::umbral::closed_form::{
    add_row_at, close_wicket_at, extend_gate_at, open_gate_at,
};
use umbral_ferrers::umbral::{SeriesOperator, UmbralOperator};

fn main() -> umbral_ferrers::Result<()> {
    let order = 7;
    let x3 = TruncSeries::monomial(rat(1), 1, &[3], order)?;
    let gate = TruncSeries::monomial(rat(1), 1, &[1, 2, 1], order)?;
    for (op, input) in [
        (UmbralOperator::AddRow, &x3),
        (UmbralOperator::OpenGate, &x3),
        (UmbralOperator::ExtendGate, &gate),
        (UmbralOperator::CloseWicket, &gate),
    ] {
        println!("{op:?}({input}) = {}", op.apply(input)?);
    }
    let (x, p) = (rat(2), [rat(2), rat(3), rat(5)]);
    println!("at x = 2: {}", add_row_at(&x3, &x)?);
    println!("at (2, 3, 5): {}", open_gate_at(&x3, &p)?);
    println!("at (2, 3, 5): {}", extend_gate_at(&gate, &p)?);
    println!("at x = 2: {}", close_wicket_at(&gate, &x)?);
    Ok(())
}
