use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::relation::QuadraticRelation;
use crate::algebra::{rat, CatalyticPoly, TruncSeries};
use crate::error::{Error, Result};

/// Chooses between the two roots of a quadratic: a root must agree with
/// every listed coefficient and, optionally, have only nonnegative integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSelector {
    terms: Vec<(usize, BigRational)>,
    nonnegative_integers: bool,
}

impl RootSelector {
    /// Coefficients of `t^first, t^(first+1), ...` plus the counting-series
    /// requirement.
    pub fn prefix(first: usize, coeffs: &[i64]) -> Self {
        RootSelector {
            terms: coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (first + i, rat(c)))
                .collect(),
            nonnegative_integers: true,
        }
    }

    /// Only the counting-series requirement.
    pub fn nonnegative_integers() -> Self {
        RootSelector {
            terms: Vec::new(),
            nonnegative_integers: true,
        }
    }

    /// Drops the nonnegative-integer requirement.
    pub fn allow_any_coefficients(mut self) -> Self {
        self.nonnegative_integers = false;
        self
    }

    pub fn accepts(&self, s: &TruncSeries) -> bool {
        let listed = self
            .terms
            .iter()
            .filter(|(k, _)| *k <= s.order())
            .all(|(k, c)| &s.scalar_coeff(*k) == c);
        let counting = !self.nonnegative_integers
            || s.scalar_coeffs()
                .iter()
                .all(|c| c.is_integer() && !c.is_negative());
        listed && counting
    }
}

fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(root(c.numer())?, root(c.denom())?))
}

/// Both roots `(-B +- sqrt(B^2 - 4AC)) / (2A)` as series through `t^order`,
/// `+` first. A branch whose numerator is not divisible by the power of `t`
/// dividing `A` has no power series expansion and is reported as `None`.
pub fn quadratic_branches(
    rel: &QuadraticRelation,
    order: usize,
) -> Result<[Option<TruncSeries>; 2]> {
    if rel.arity() != 0 {
        return Err(Error::Usage(
            "fix the catalytic variables before solving".into(),
        ));
    }
    if rel.is_effectively_linear() {
        return Err(Error::DegenerateRelation);
    }
    let v = rel.a().valuation().expect("nonzero");
    let work = order + v;
    let disc = rel.discriminant();
    let root_disc = match disc.valuation() {
        None => TruncSeries::zero(0, work),
        Some(d2) => {
            if d2 % 2 == 1 {
                return Err(Error::UnsupportedBranch(format!(
                    "discriminant has odd valuation {d2}"
                )));
            }
            let m = d2 / 2;
            let lead = disc.scalar_coeff(d2);
            let sqrt_lead = rational_sqrt(&lead).ok_or_else(|| {
                Error::UnsupportedBranch(format!(
                    "leading discriminant coefficient {lead} is not a rational square"
                ))
            })?;
            if work < m {
                TruncSeries::zero(0, work)
            } else {
                let unit = disc.shift_down(d2)?.scale(&lead.recip());
                let s = unit.to_series(work - m).sqrt()?.scale(&sqrt_lead);
                let mut coeffs = vec![CatalyticPoly::zero(0); m];
                coeffs.extend(s.coeffs().iter().cloned());
                TruncSeries::from_coeffs(0, work, coeffs)?
            }
        }
    };
    let minus_b = (-rel.b()).to_series(work);
    let inv_a = rel.a().shift_down(v)?.to_series(order).invert()?;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let branch = |num: TruncSeries| -> Result<Option<TruncSeries>> {
        match num.shift_down(v) {
            Ok(n) => Ok(Some(n.try_mul(&inv_a)?.scale(&half))),
            Err(_) => Ok(None),
        }
    };
    Ok([
        branch(minus_b.try_add(&root_disc)?)?,
        branch(minus_b.try_sub(&root_disc)?)?,
    ])
}

/// The root of a quadratic relation picked out by `selector`.
pub fn solve_quadratic_series(
    rel: &QuadraticRelation,
    order: usize,
    selector: &RootSelector,
) -> Result<TruncSeries> {
    let [plus, minus] = quadratic_branches(rel, order)?;
    let mut matching = [plus, minus]
        .into_iter()
        .flatten()
        .filter(|s| selector.accepts(s));
    let first = matching.next().ok_or(Error::NoMatchingRoot)?;
    match matching.next() {
        Some(second) if second != first => Err(Error::AmbiguousRoot),
        _ => Ok(first),
    }
}

/// `G = -C / B` for a relation without quadratic term.
pub fn solve_linear_series(rel: &QuadraticRelation, order: usize) -> Result<TruncSeries> {
    if !rel.is_effectively_linear() || rel.arity() != 0 {
        return Err(Error::Usage(
            "expected a univariate relation without quadratic term".into(),
        ));
    }
    let v = rel.b().valuation().expect("nonzero");
    let num = (-rel.c())
        .to_series(order + v)
        .shift_down(v)
        .map_err(|_| Error::UnsupportedBranch("solution is not a power series".into()))?;
    num.try_mul(&rel.b().shift_down(v)?.to_series(order).invert()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TPoly;
    use crate::analysis::KnownRelation;

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.scalar_coeffs()
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn gated_root_from_prefix() {
        let rel = KnownRelation::Gated.relation();
        let s = solve_quadratic_series(&rel, 9, &RootSelector::prefix(6, &[1, 7])).unwrap();
        assert_eq!(ints(&s), vec![0, 0, 0, 0, 0, 0, 1, 7, 32, 121]);
    }

    #[test]
    fn wicketed_root_from_prefix() {
        let rel = KnownRelation::Wicketed.relation();
        let s = solve_quadratic_series(&rel, 10, &RootSelector::prefix(8, &[1, 8])).unwrap();
        assert_eq!(&ints(&s)[8..], &[1, 8, 41]);
    }

    #[test]
    fn wrong_prefix_has_no_root() {
        let rel = KnownRelation::Wicketed.relation();
        assert_eq!(
            solve_quadratic_series(&rel, 10, &RootSelector::prefix(8, &[1, 9])),
            Err(Error::NoMatchingRoot)
        );
    }

    #[test]
    fn zero_branch_rejected_by_prefix() {
        // (1 - 2t) G^2 - t^2 G = 0: roots 0 and t^2 / (1 - 2t)
        let rel = QuadraticRelation::new(
            TPoly::from_ints(&[1, -2]),
            TPoly::from_ints(&[0, 0, -1]),
            TPoly::zero(0),
        )
        .unwrap();
        let s = solve_quadratic_series(&rel, 6, &RootSelector::prefix(2, &[1])).unwrap();
        assert_eq!(ints(&s), vec![0, 0, 1, 2, 4, 8, 16]);
        assert_eq!(
            solve_quadratic_series(&rel, 6, &RootSelector::nonnegative_integers()),
            Err(Error::AmbiguousRoot)
        );
    }

    #[test]
    fn non_square_discriminant_unsupported() {
        // G^2 - 2 = 0
        let rel =
            QuadraticRelation::new(TPoly::one(0), TPoly::zero(0), TPoly::from_ints(&[-2])).unwrap();
        assert!(matches!(
            quadratic_branches(&rel, 4),
            Err(Error::UnsupportedBranch(_))
        ));
        // G^2 - t = 0
        let rel = QuadraticRelation::new(TPoly::one(0), TPoly::zero(0), TPoly::from_ints(&[0, -1]))
            .unwrap();
        assert!(matches!(
            quadratic_branches(&rel, 4),
            Err(Error::UnsupportedBranch(_))
        ));
    }

    #[test]
    fn linear_relation_solved() {
        let rel =
            QuadraticRelation::linear(TPoly::from_ints(&[1, -2]), TPoly::from_ints(&[0, 0, -1]))
                .unwrap();
        assert_eq!(
            ints(&solve_linear_series(&rel, 5).unwrap()),
            vec![0, 0, 1, 2, 4, 8]
        );
        assert_eq!(
            quadratic_branches(&rel, 5).unwrap_err(),
            Error::DegenerateRelation
        );
    }
}
