//! Oracle counts against umbral coefficients.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::TruncSeries;
use crate::error::Result;
use crate::oracle::{count_ferrers, count_gated, count_wicketed};
use crate::umbral::{Pipeline, Target};

/// One compared value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub kind: String,
    pub hp: usize,
    pub expected: BigInt,
    pub got: BigInt,
}

impl Row {
    pub fn ok(&self) -> bool {
        self.expected == self.got
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} h={} expected={} got={}",
            self.kind, self.hp, self.expected, self.got
        )
    }
}

/// Per-half-perimeter totals plus refined spot checks. `expected` comes from
/// the umbral series, `got` from the oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossCheck {
    pub totals: Vec<Row>,
    pub refined: Vec<Row>,
}

impl CrossCheck {
    pub fn first_mismatch(&self) -> Option<&Row> {
        self.totals.iter().chain(&self.refined).find(|r| !r.ok())
    }

    pub fn pass(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Oracle data for one family: totals by half-perimeter and refined counts
/// keyed by catalytic exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleData {
    pub totals: Vec<u64>,
    pub refined: Vec<(usize, [u32; 3], u64)>,
}

/// Runs the oracle for one family.
pub fn oracle_data(target: Target, max_hp: usize) -> OracleData {
    match target {
        Target::Ferrers => {
            let c = count_ferrers(max_hp);
            OracleData {
                totals: c.counts().to_vec(),
                refined: c
                    .refined()
                    .iter()
                    .map(|(&(h, a), &n)| (h, [a, 0, 0], n))
                    .collect(),
            }
        }
        Target::Gated => {
            let c = count_gated(max_hp);
            OracleData {
                totals: c.counts().to_vec(),
                refined: c
                    .refined()
                    .iter()
                    .map(|(&(h, g), &n)| (h, [g.left, g.gap, g.right], n))
                    .collect(),
            }
        }
        Target::Wicketed => {
            let c = count_wicketed(max_hp);
            OracleData {
                totals: c.counts().to_vec(),
                refined: c
                    .refined()
                    .iter()
                    .map(|(&(h, a), &n)| (h, [a, 0, 0], n))
                    .collect(),
            }
        }
    }
}

fn compare(kind: &str, series: &TruncSeries, data: &OracleData, out: &mut CrossCheck) {
    let ones = series.specialize_to_one();
    for hp in 0..data.totals.len().min(series.order() + 1) {
        out.totals.push(Row {
            kind: kind.to_string(),
            hp,
            expected: ones.scalar_coeff(hp).to_integer(),
            got: BigInt::from(data.totals[hp]),
        });
    }
    // every oracle key must match its coefficient, and every coefficient
    // must be covered by some oracle key
    let mut covered = 0usize;
    for &(hp, exps, n) in &data.refined {
        let exps = &exps[..series.arity()];
        covered += 1;
        out.refined.push(Row {
            kind: format!("{kind}{exps:?}"),
            hp,
            expected: series.coeff(hp).coeff(exps).to_integer(),
            got: BigInt::from(n),
        });
    }
    let limit = data.totals.len().saturating_sub(1).min(series.order());
    let monomials: usize = (0..=limit).map(|k| series.coeff(k).len()).sum();
    if monomials != covered {
        out.refined.push(Row {
            kind: format!("{kind} monomials"),
            hp: limit,
            expected: BigInt::from(monomials),
            got: BigInt::from(covered),
        });
    }
}

/// Compares all three families through `max_hp` using the supplied oracle.
pub fn crosscheck_with(
    max_hp: usize,
    oracle: impl Fn(Target, usize) -> OracleData,
) -> Result<CrossCheck> {
    let mut out = CrossCheck::default();
    if max_hp < 2 {
        return Ok(out);
    }
    let p = Pipeline::new(max_hp);
    for target in Target::ALL {
        compare(
            target.name(),
            p.series(target)?,
            &oracle(target, max_hp),
            &mut out,
        );
    }
    Ok(out)
}

pub fn crosscheck(max_hp: usize) -> Result<CrossCheck> {
    crosscheck_with(max_hp, oracle_data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_at_small_sizes() {
        let c = crosscheck(11).unwrap();
        assert!(c.pass(), "{:?}", c.first_mismatch());
        assert_eq!(c.totals.len(), 36);
        assert!(!c.refined.is_empty());
    }

    #[test]
    fn trivially_empty() {
        assert_eq!(crosscheck(1).unwrap(), CrossCheck::default());
    }

    #[test]
    fn injected_error_is_named() {
        let c = crosscheck_with(9, |t, h| {
            let mut d = oracle_data(t, h);
            if t == Target::Gated {
                d.totals[7] += 1;
            }
            d
        })
        .unwrap();
        let m = c.first_mismatch().unwrap();
        assert_eq!(m.to_string(), "gated h=7 expected=7 got=8");
    }
}
