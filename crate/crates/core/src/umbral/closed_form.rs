//! Rational closed forms of the row operators, evaluated at numeric points.
//!
//! The gate operators divide by `(x1 - x2)(x1 - x3)(x2 - x3)`, so they cannot
//! be expanded symbolically as polynomials; at distinct rational points they
//! become plain series in `t`. They serve as an independent check on the
//! summation implementation in [`super::operators`].

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Image, Substitution, TruncSeries};
use crate::error::{Error, Result};

fn require_arity(p: &TruncSeries, arity: usize) -> Result<()> {
    if p.arity() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: p.arity(),
        });
    }
    Ok(())
}

/// `1 / (1 - v t)` as a plain series.
fn geometric(v: &BigRational, order: usize) -> TruncSeries {
    TruncSeries::geom(v.clone(), 1, &[], order).expect("t-degree 1")
}

/// `t p(x) / (1 - x t)`.
pub fn add_row_at(p: &TruncSeries, x: &BigRational) -> Result<TruncSeries> {
    require_arity(p, 1)?;
    let px = p.eval_at(std::slice::from_ref(x))?;
    Ok((&px * &geometric(x, p.order())).shift_up(1))
}

/// `x2 x3 t^2 p(x1) / ((x1-x2)(x1-x3)(1-x3 t))
///  + x1 t^2 [p(x3) x2 (x1-x2) - p(x2) x3 (x1-x3)] / ((x1-x2)(x1-x3)(x2-x3)(1-x3 t))`
///
/// Matches the summation only on series without `x^0` terms: the constant
/// monomial maps to `t^2/(1 - x3 t)` here but has an empty sum.
pub fn open_gate_at(p: &TruncSeries, point: &[BigRational; 3]) -> Result<TruncSeries> {
    require_arity(p, 1)?;
    let [x1, x2, x3] = point;
    let d12 = x1 - x2;
    let d13 = x1 - x3;
    let d23 = x2 - x3;
    if d12.is_zero() || d13.is_zero() || d23.is_zero() {
        return Err(Error::Usage(
            "gate-opening closed form needs distinct x1, x2, x3".into(),
        ));
    }
    let p1 = p.eval_at(std::slice::from_ref(x1))?;
    let p2 = p.eval_at(std::slice::from_ref(x2))?;
    let p3 = p.eval_at(std::slice::from_ref(x3))?;

    let first = p1.scale(&(x2 * x3 / (&d12 * &d13)));
    let bracket = &p3.scale(&(x2 * &d12)) - &p2.scale(&(x3 * &d13));
    let second = bracket.scale(&(x1 / (&d12 * &d13 * &d23)));
    let sum = &first + &second;
    Ok((&sum * &geometric(x3, p.order())).shift_up(2))
}

/// `x3 t^2 / ((1 - x3 t)(x2 - x3)) * [p(x1, x2, x2) - p(x1, x2, x3)]`
pub fn extend_gate_at(p: &TruncSeries, point: &[BigRational; 3]) -> Result<TruncSeries> {
    require_arity(p, 3)?;
    let [x1, x2, x3] = point;
    let d23 = x2 - x3;
    if d23.is_zero() {
        return Err(Error::Usage(
            "gate-extension closed form needs x2 != x3".into(),
        ));
    }
    let diagonal = p.eval_at(&[x1.clone(), x2.clone(), x2.clone()])?;
    let plain = p.eval_at(point)?;
    let diff = (&diagonal - &plain).scale(&(x3 / d23));
    Ok((&diff * &geometric(x3, p.order())).shift_up(2))
}

/// `t / (1 - t x) * p(x, t x, x)`
pub fn close_wicket_at(p: &TruncSeries, x: &BigRational) -> Result<TruncSeries> {
    require_arity(p, 3)?;
    let sub = Substitution::new(
        0,
        vec![
            Image::Scalar(x.clone()),
            Image::Monomial {
                coeff: x.clone(),
                t_degree: 1,
                var: None,
                power: 0,
            },
            Image::Scalar(x.clone()),
        ],
    )?;
    let inner = p.substitute(&sub)?;
    Ok((&inner * &geometric(x, p.order())).shift_up(1))
}

/// `t^2 x / (1 - t - x t)`, the plain Ferrers series in closed form, at `x`.
pub fn ferrers_at(x: &BigRational, order: usize) -> TruncSeries {
    let mut denom = TruncSeries::one(0, order);
    denom.add_term(1, [0; 3], -(BigRational::one() + x));
    denom
        .invert()
        .expect("constant term 1")
        .scale(x)
        .shift_up(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::umbral::{add_row, close_wicket, extend_gate, open_gate};

    fn pt(a: i64, b: i64, c: i64) -> [BigRational; 3] {
        [rat(a), rat(b), rat(c)]
    }

    #[test]
    fn open_gate_matches_summation_on_small_inputs() {
        for (a, d) in [(3u32, 4usize), (4, 5)] {
            let p = TruncSeries::monomial(rat(1), d, &[a], 10).unwrap();
            let point = pt(2, 3, 5);
            assert_eq!(
                open_gate(&p).unwrap().eval_at(&point).unwrap(),
                open_gate_at(&p, &point).unwrap()
            );
        }
    }

    #[test]
    fn extend_gate_matches_summation() {
        let p = TruncSeries::monomial(rat(1), 6, &[1, 2, 1], 10).unwrap();
        let point = pt(2, 3, 5);
        assert_eq!(
            extend_gate(&p).unwrap().eval_at(&point).unwrap(),
            extend_gate_at(&p, &point).unwrap()
        );
    }

    #[test]
    fn add_row_and_close_match_summation() {
        let p = TruncSeries::monomial(rat(1), 3, &[2], 9).unwrap();
        assert_eq!(
            add_row(&p).unwrap().eval_at_integers(&[4]).unwrap(),
            add_row_at(&p, &rat(4)).unwrap()
        );
        let q = TruncSeries::monomial(rat(1), 6, &[1, 2, 1], 12).unwrap();
        assert_eq!(
            close_wicket(&q).unwrap().eval_at_integers(&[3]).unwrap(),
            close_wicket_at(&q, &rat(3)).unwrap()
        );
    }

    #[test]
    fn coincident_points_rejected() {
        let p = TruncSeries::monomial(rat(1), 4, &[3], 8).unwrap();
        assert!(open_gate_at(&p, &pt(2, 2, 5)).is_err());
    }
}
