use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Exponents, Image, Substitution, TruncSeries};
use crate::error::{Error, Result};

/// A coefficient-linear map between truncated series.
pub trait SeriesOperator {
    fn input_arity(&self) -> usize;
    fn output_arity(&self) -> usize;
    /// Minimal increase of the least `t`-degree per application.
    fn t_gain(&self) -> usize;
    fn apply(&self, p: &TruncSeries) -> Result<TruncSeries>;
}

/// The four row operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UmbralOperator {
    /// Adds a full row at least as wide as the top row: `x^a -> sum_{b>=a} x^b t^(b-a+1)`.
    AddRow,
    /// Adds the first row of a gate above a plain diagram (arity 1 to 3).
    OpenGate,
    /// Adds another gate row; the left width is fixed.
    ExtendGate,
    /// Seals the gate with a full row, leaving a wicket (arity 3 to 1).
    CloseWicket,
}

impl UmbralOperator {
    pub const ALL: [UmbralOperator; 4] = [
        UmbralOperator::AddRow,
        UmbralOperator::OpenGate,
        UmbralOperator::ExtendGate,
        UmbralOperator::CloseWicket,
    ];

    /// Image of the single term `c * t^t_degree * x^exps`, accumulated into `out`.
    pub fn apply_monomial(
        &self,
        exps: &Exponents,
        t_degree: usize,
        c: &BigRational,
        out: &mut TruncSeries,
    ) {
        let order = out.order();
        match self {
            UmbralOperator::AddRow => {
                let a = exps[0];
                let mut k = t_degree + 1;
                let mut b = a;
                while k <= order {
                    out.add_term(k, [b, 0, 0], c.clone());
                    k += 1;
                    b += 1;
                }
            }
            UmbralOperator::OpenGate => {
                let a = exps[0] as usize;
                // b1 + b2 <= a - 1, b3 >= a - b1 - b2,
                // t-degree = d + 2 + (b1 + b2 + b3 - a)
                for b1 in 1..a.saturating_sub(1) {
                    for b2 in 1..a - b1 {
                        let b3_min = a - b1 - b2;
                        for b3 in b3_min.. {
                            let k = t_degree + 2 + b1 + b2 + b3 - a;
                            if k > order {
                                break;
                            }
                            out.add_term(k, [b1 as u32, b2 as u32, b3 as u32], c.clone());
                        }
                    }
                }
            }
            UmbralOperator::ExtendGate => {
                let [c1, b2, b3] = *exps;
                let (b2, b3) = (b2 as usize, b3 as usize);
                let inner = b2 + b3;
                for c2 in b2..inner {
                    for c3 in inner - c2.. {
                        let k = t_degree + 2 + c2 + c3 - inner;
                        if k > order {
                            break;
                        }
                        out.add_term(k, [c1, c2 as u32, c3 as u32], c.clone());
                    }
                }
            }
            UmbralOperator::CloseWicket => {
                let [b1, b2, b3] = *exps;
                let total = b1 + b2 + b3;
                // a >= b1 + b2 + b3, t-degree = d + 1 + a - b1 - b3
                let mut k = t_degree + 1 + b2 as usize;
                let mut a = total;
                while k <= order {
                    out.add_term(k, [a, 0, 0], c.clone());
                    k += 1;
                    a += 1;
                }
            }
        }
    }
}

impl SeriesOperator for UmbralOperator {
    fn input_arity(&self) -> usize {
        match self {
            UmbralOperator::AddRow | UmbralOperator::OpenGate => 1,
            UmbralOperator::ExtendGate | UmbralOperator::CloseWicket => 3,
        }
    }

    fn output_arity(&self) -> usize {
        match self {
            UmbralOperator::AddRow | UmbralOperator::CloseWicket => 1,
            UmbralOperator::OpenGate | UmbralOperator::ExtendGate => 3,
        }
    }

    fn t_gain(&self) -> usize {
        match self {
            UmbralOperator::AddRow | UmbralOperator::CloseWicket => 1,
            UmbralOperator::OpenGate | UmbralOperator::ExtendGate => 2,
        }
    }

    fn apply(&self, p: &TruncSeries) -> Result<TruncSeries> {
        if p.arity() != self.input_arity() {
            return Err(Error::ArityMismatch {
                expected: self.input_arity(),
                found: p.arity(),
            });
        }
        let mut out = TruncSeries::zero(self.output_arity(), p.order());
        for (k, e, c) in p.terms() {
            if k + self.t_gain() > p.order() {
                break;
            }
            self.apply_monomial(e, k, c, &mut out);
        }
        Ok(out)
    }
}

pub fn add_row(p: &TruncSeries) -> Result<TruncSeries> {
    UmbralOperator::AddRow.apply(p)
}

pub fn open_gate(p: &TruncSeries) -> Result<TruncSeries> {
    UmbralOperator::OpenGate.apply(p)
}

pub fn extend_gate(p: &TruncSeries) -> Result<TruncSeries> {
    UmbralOperator::ExtendGate.apply(p)
}

pub fn close_wicket(p: &TruncSeries) -> Result<TruncSeries> {
    UmbralOperator::CloseWicket.apply(p)
}

/// Gate opening with `x1` evaluated at `x1`: the left width is folded into the
/// coefficient and the `x1` exponent is left at zero. Gate extension never
/// touches `x1`, so the gated series can be carried at a fixed `x1` all the way.
pub fn open_gate_fixed_x1(p: &TruncSeries, x1: &BigRational) -> Result<TruncSeries> {
    let symbolic = open_gate(p)?;
    let mut out = TruncSeries::zero(3, p.order());
    for (k, e, c) in symbolic.terms() {
        let weight = num_traits::pow(x1.clone(), e[0] as usize);
        out.add_term(k, [0, e[1], e[2]], c * weight);
    }
    Ok(out)
}

/// Wicket closing through the substitution form `t/(1 - t x) * p(x, t x, x)`.
pub fn close_wicket_by_substitution(p: &TruncSeries) -> Result<TruncSeries> {
    if p.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: p.arity(),
        });
    }
    let sub = Substitution::new(1, vec![Image::var(0), Image::t_times_var(0), Image::var(0)])?;
    let inner = p.substitute(&sub)?;
    let geom = TruncSeries::geom(BigRational::one(), 1, &[1], p.order())?;
    Ok(inner.try_mul(&geom)?.shift_up(1))
}

/// Growth of a plain diagram with `x` already set to 1: `t^d -> sum_{j>=0} t^(d+1+j)`.
pub(crate) struct AddRowAtOne;

impl SeriesOperator for AddRowAtOne {
    fn input_arity(&self) -> usize {
        0
    }
    fn output_arity(&self) -> usize {
        0
    }
    fn t_gain(&self) -> usize {
        1
    }
    fn apply(&self, p: &TruncSeries) -> Result<TruncSeries> {
        let order = p.order();
        let mut out = TruncSeries::zero(0, order);
        let mut running = BigRational::zero();
        // out_k = sum_{d < k} p_d
        for k in 1..=order {
            running += p.scalar_coeff(k - 1);
            out.add_term(k, [0; 3], running.clone());
        }
        Ok(out)
    }
}

/// Wicket closing followed by `x = 1`: `x1^b1 x2^b2 x3^b3 t^d -> sum_{j>=0} t^(d+1+b2+j)`.
pub(crate) fn close_wicket_at_one(p: &TruncSeries) -> Result<TruncSeries> {
    if p.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: p.arity(),
        });
    }
    let order = p.order();
    let mut lead = vec![BigRational::zero(); order + 1];
    for (k, e, c) in p.terms() {
        let start = k + 1 + e[1] as usize;
        if start <= order {
            lead[start] += c;
        }
    }
    let mut out = TruncSeries::zero(0, order);
    let mut running = BigRational::zero();
    for (k, v) in lead.into_iter().enumerate() {
        running += v;
        out.add_term(k, [0; 3], running.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, CatalyticPoly};

    fn mono(t: usize, e: &[u32], order: usize) -> TruncSeries {
        TruncSeries::monomial(rat(1), t, e, order).unwrap()
    }

    #[test]
    fn add_row_on_single_cell() {
        let out = add_row(&mono(2, &[1], 4)).unwrap();
        let mut expected = TruncSeries::zero(1, 4);
        expected.add_term(3, [1, 0, 0], rat(1));
        expected.add_term(4, [2, 0, 0], rat(1));
        assert_eq!(out, expected);
        assert!(add_row(&TruncSeries::zero(1, 4)).unwrap().is_zero());
    }

    #[test]
    fn open_gate_needs_width_three() {
        for h in 0..8 {
            assert!(open_gate(&mono(h, &[2], 12)).unwrap().is_zero());
        }
    }

    #[test]
    fn open_gate_smallest_gate() {
        let out = open_gate(&mono(4, &[3], 6)).unwrap();
        assert_eq!(out, mono(6, &[1, 1, 1], 6));
    }

    #[test]
    fn extend_gate_smallest_extension() {
        let out = extend_gate(&mono(6, &[1, 1, 1], 8)).unwrap();
        assert_eq!(out, mono(8, &[1, 1, 1], 8));
    }

    #[test]
    fn extend_gate_without_gap_content() {
        assert!(extend_gate(&mono(3, &[5, 0, 0], 10)).unwrap().is_zero());
    }

    #[test]
    fn close_smallest_wicket() {
        let out = close_wicket(&mono(6, &[1, 1, 1], 8)).unwrap();
        assert_eq!(out, mono(8, &[3], 8));
        assert!(close_wicket(&TruncSeries::zero(3, 8)).unwrap().is_zero());
    }

    #[test]
    fn close_wicket_forms_agree_on_monomials() {
        for e in [[1, 1, 1], [2, 3, 1], [0, 2, 4], [3, 0, 0]] {
            for d in 0..5 {
                let p = mono(d, &e, 11);
                assert_eq!(
                    close_wicket(&p).unwrap(),
                    close_wicket_by_substitution(&p).unwrap()
                );
            }
        }
    }

    #[test]
    fn arity_is_checked() {
        assert!(matches!(
            open_gate(&mono(3, &[1, 1, 1], 5)),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(close_wicket(&mono(3, &[1], 5)).is_err());
    }

    #[test]
    fn fixed_x1_folds_left_width() {
        let p = mono(5, &[4], 9);
        let sym = open_gate(&p).unwrap();
        let fixed = open_gate_fixed_x1(&p, &rat(2)).unwrap();
        assert_eq!(
            sym.eval_at_integers(&[2, 3, 5]).unwrap(),
            fixed.eval_at_integers(&[7, 3, 5]).unwrap()
        );
        assert!(fixed.terms().all(|(_, e, _)| e[0] == 0));
    }

    #[test]
    fn width_bound_after_operators() {
        let p = mono(4, &[3], 12);
        let g = open_gate(&p).unwrap();
        g.check_width_bound().unwrap();
        extend_gate(&g).unwrap().check_width_bound().unwrap();
        close_wicket(&g).unwrap().check_width_bound().unwrap();
        let _ = CatalyticPoly::zero(1);
    }
}
