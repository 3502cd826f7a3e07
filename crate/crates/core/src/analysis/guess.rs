use num_rational::BigRational;
use num_traits::Zero;

use super::linalg::nullspace;
use super::relation::QuadraticRelation;
use crate::algebra::{TPoly, TruncSeries};
use crate::error::{Error, Result};

/// Degree bounds for fitting `A*G^2 + B*G + C = 0` to a univariate series.
///
/// The search scans the profile `(deg_a, deg_b, deg_c)` shifted uniformly by
/// `k`, from the smallest shift at which some coefficient may be nonzero up
/// to `escalation`. A negative bound forces that coefficient to vanish, so
/// small shifts also cover linear relations. The first shift with a
/// nontrivial solution gives the minimal relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnsatzSpec {
    pub deg_a: usize,
    pub deg_b: usize,
    pub deg_c: usize,
    /// Equations required beyond the number of unknowns.
    pub margin: usize,
    /// Largest shift tried above the given profile.
    pub escalation: usize,
}

impl AnsatzSpec {
    pub fn new(deg_a: usize, deg_b: usize, deg_c: usize) -> Self {
        AnsatzSpec {
            deg_a,
            deg_b,
            deg_c,
            margin: 5,
            escalation: 2,
        }
    }

    fn shifted(&self, k: i64) -> [i64; 3] {
        [self.deg_a, self.deg_b, self.deg_c].map(|d| d as i64 + k)
    }

    /// Unknown coefficients at shift `k`.
    pub fn unknowns(&self, k: i64) -> usize {
        self.shifted(k)
            .iter()
            .map(|&d| (d + 1).max(0) as usize)
            .sum()
    }
}

impl Default for AnsatzSpec {
    fn default() -> Self {
        AnsatzSpec::new(8, 10, 14)
    }
}

/// A fitted relation in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Guess {
    pub relation: QuadraticRelation,
    /// Degree bounds at which it was found; `-1` means absent.
    pub bounds: [i64; 3],
    /// Dimension of the solution space at those bounds; above 1 the data
    /// did not pin the relation down.
    pub nullity: usize,
    pub terms_used: usize,
}

impl Guess {
    pub fn is_effectively_linear(&self) -> bool {
        self.relation.is_effectively_linear()
    }

    pub fn has_multiplicity_warning(&self) -> bool {
        self.nullity > 1
    }
}

/// Fits a quadratic relation to the `order + 1` coefficients of `g`.
/// `Ok(None)` when no shift within the term budget admits a relation.
pub fn guess_quadratic(g: &TruncSeries, spec: &AnsatzSpec) -> Result<Option<Guess>> {
    if g.arity() != 0 {
        return Err(Error::Usage("guessing needs a univariate series".into()));
    }
    let terms = g.order() + 1;
    let g1 = g.scalar_coeffs();
    let g2 = g.try_mul(g)?.scalar_coeffs();
    let top = spec.deg_a.max(spec.deg_b).max(spec.deg_c) as i64;
    let mut tried = false;
    for k in -top..=spec.escalation as i64 {
        let bounds = spec.shifted(k);
        let unknowns = spec.unknowns(k);
        if unknowns + spec.margin > terms {
            if tried {
                return Ok(None);
            }
            return Err(Error::InsufficientTerms {
                unknowns,
                available: terms,
                required: unknowns + spec.margin,
            });
        }
        tried = true;
        // column layout: a_0..a_da, b_0..b_db, c_0..c_dc
        let zero = BigRational::zero();
        let rows: Vec<Vec<BigRational>> = (0..terms)
            .map(|n| {
                let mut row = Vec::with_capacity(unknowns);
                for (block, &d) in bounds.iter().enumerate() {
                    for i in 0..=d.max(-1) {
                        let i = i as usize;
                        let entry = match block {
                            0 if i <= n => g2[n - i].clone(),
                            1 if i <= n => g1[n - i].clone(),
                            2 if i == n => BigRational::from_integer(1.into()),
                            _ => zero.clone(),
                        };
                        row.push(entry);
                    }
                }
                row
            })
            .collect();
        let basis = nullspace(rows, unknowns);
        if basis.is_empty() {
            continue;
        }
        let v = &basis[0];
        let mut at = 0;
        let mut take = |d: i64| {
            let n = (d + 1).max(0) as usize;
            let p = TPoly::from_rationals(v[at..at + n].to_vec());
            at += n;
            p
        };
        let (a, b, c) = (take(bounds[0]), take(bounds[1]), take(bounds[2]));
        let relation = QuadraticRelation::new(a, b, c)?.canonical()?;
        if !relation.residual(g)?.is_zero() {
            continue;
        }
        return Ok(Some(Guess {
            relation,
            bounds: bounds.map(|d| d.max(-1)),
            nullity: basis.len(),
            terms_used: terms,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rational_series_gives_linear_relation() {
        let g = TruncSeries::from_scalars(
            19,
            (0..20).map(|n| if n < 2 { rat(0) } else { rat(1 << (n - 2)) }),
        );
        let guess = guess_quadratic(&g, &AnsatzSpec::default())
            .unwrap()
            .unwrap();
        assert!(guess.is_effectively_linear());
        assert_eq!(guess.relation.b(), &TPoly::from_ints(&[1, -2]));
        assert_eq!(guess.relation.c(), &TPoly::from_ints(&[0, 0, -1]));
        assert_eq!(guess.nullity, 1);
    }

    #[test]
    fn too_few_terms_reported() {
        let g = TruncSeries::from_scalars(3, (0..4).map(rat));
        assert!(matches!(
            guess_quadratic(&g, &AnsatzSpec::new(8, 8, 8)),
            Err(Error::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn generic_series_has_no_small_relation() {
        // coefficients n! grow too fast for an algebraic series
        let mut f = rat(1);
        let g = TruncSeries::from_scalars(
            24,
            (0..25).map(|n| {
                if n > 0 {
                    f *= rat(n);
                }
                f.clone()
            }),
        );
        assert_eq!(
            guess_quadratic(&g, &AnsatzSpec::new(3, 3, 3)).unwrap(),
            None
        );
    }
}
