use num_rational::BigRational;

use crate::algebra::{rat, ratio, TPoly, TruncSeries};
use crate::error::Result;

/// `(1 - sqrt(1 - 4t^2)) / (2t^2)`, the staircase-polygon series
/// `1 + t^2 + 2t^4 + 5t^6 + ...`.
pub fn catalan_factor(order: usize) -> Result<TruncSeries> {
    let radicand = TPoly::from_ints(&[1, 0, -4]).to_series(order + 2);
    let numerator = (&TruncSeries::one(0, order + 2) - &radicand.sqrt()?).shift_down(2)?;
    Ok(numerator.scale(&ratio(1, 2)))
}

/// `t^2 / (1 - 2t)`, the plain diagrams counted by half-perimeter.
pub fn ferrers_factor(order: usize) -> Result<TruncSeries> {
    let inv = TPoly::from_ints(&[1, -2]).to_series(order).invert()?;
    Ok(inv.shift_up(2))
}

/// `t / (1 - 2t)`: one end of a path lengthened by horizontal and vertical
/// steps.
pub fn outer_path_factor(order: usize) -> Result<TruncSeries> {
    let inv = TPoly::from_ints(&[1, -2]).to_series(order).invert()?;
    Ok(inv.shift_up(1))
}

/// Catalan factor times the fourth power of the plain-diagram series.
pub fn closed_form_psi(order: usize) -> Result<TruncSeries> {
    catalan_factor(order)?.try_mul(&ferrers_factor(order)?.pow(4))
}

/// The same series assembled as `t^4 * catalan * (t/(1-2t))^2 * (t/(1-2t))^2`,
/// one squared factor per bounding path.
pub fn psi_by_path_factors(order: usize) -> Result<TruncSeries> {
    let pair = outer_path_factor(order)?.pow(2);
    Ok(catalan_factor(order)?
        .try_mul(&pair)?
        .try_mul(&pair)?
        .shift_up(4))
}

/// Catalan numbers `C_0..C_n` from their product formula.
pub fn catalan_numbers(n: usize) -> Vec<BigRational> {
    let mut out = vec![rat(1)];
    for k in 0..n {
        let next = &out[k] * ratio(2 * (2 * k as i64 + 1), k as i64 + 2);
        out.push(next);
    }
    out
}
