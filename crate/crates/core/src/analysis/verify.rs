use serde::Serialize;

use super::relation::{KnownRelation, QuadraticRelation};
use crate::algebra::TruncSeries;
use crate::error::{Error, Result};
use crate::umbral::{pipeline, Pipeline};

/// Outcome of substituting a truncated series into a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub order: usize,
    /// Least t-degree with a nonzero residual coefficient, if any up to `order`.
    pub residual_min_degree: Option<usize>,
    /// The truncation is too short for a vanishing residual to mean anything.
    pub inconclusive: bool,
}

impl Verdict {
    pub fn pass(&self) -> bool {
        !self.inconclusive && self.residual_min_degree.is_none()
    }

    /// `">N"` when the residual vanishes through `t^N`, else the degree.
    pub fn residual_label(&self) -> String {
        match self.residual_min_degree {
            Some(d) => d.to_string(),
            None => format!(">{}", self.order),
        }
    }
}

/// Computes `A*G^2 + B*G + C` exactly, optionally after fixing the
/// catalytic variables of both the relation and `g` at an integer point.
pub fn verify_quadratic(
    g: &TruncSeries,
    rel: &QuadraticRelation,
    sample: Option<&[i64]>,
) -> Result<Verdict> {
    let (g, rel) = match sample {
        Some(point) => (g.eval_at_integers(point)?, rel.eval_at_integers(point)?),
        None => (g.clone(), rel.clone()),
    };
    let residual = rel.residual(&g)?;
    let order = g.order();
    let vg = g.min_degree();
    let first_contribution = [
        rel.a().valuation().zip(vg).map(|(a, v)| a + 2 * v),
        rel.b().valuation().zip(vg).map(|(b, v)| b + v),
        rel.c().valuation(),
    ]
    .into_iter()
    .flatten()
    .min();
    Ok(Verdict {
        order,
        residual_min_degree: residual.min_degree(),
        inconclusive: first_contribution.is_none_or(|d| order < d),
    })
}

/// Machine-readable verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub relation: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<i64>>,
    pub residual_min_degree: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub inconclusive: bool,
}

impl VerifyReport {
    pub fn new(relation: &str, point: Option<&[i64]>, v: &Verdict) -> Self {
        VerifyReport {
            relation: relation.to_string(),
            order: v.order,
            point: point.map(<[i64]>::to_vec),
            residual_min_degree: v.residual_label(),
            pass: v.pass(),
            inconclusive: v.inconclusive,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// Sample points for the three-variable gated relation.
pub const GATED_POINTS: [[i64; 3]; 5] = [[2, 3, 5], [3, 7, 11], [-1, 4, 9], [5, 2, 13], [4, 6, -3]];

/// Sample points for the one-variable relations.
pub const WICKETED_POINTS: [[i64; 1]; 5] = [[2], [3], [-1], [5], [7]];

/// Default sample points for a known relation (empty for univariate ones).
pub fn default_points(rel: KnownRelation) -> Vec<Vec<i64>> {
    match rel.arity() {
        0 => Vec::new(),
        3 => GATED_POINTS.iter().map(|p| p.to_vec()).collect(),
        _ => WICKETED_POINTS.iter().map(|p| p.to_vec()).collect(),
    }
}

/// The series a known relation describes: all catalytic variables set to 1
/// for the plain relations, the full catalytic series for refined ones.
pub fn series_for(rel: KnownRelation, order: usize) -> Result<TruncSeries> {
    let full = pipeline(rel.target(), order)?;
    Ok(if rel.arity() == 0 {
        full.specialize_to_one()
    } else {
        full
    })
}

/// Verifies a known relation against the pipeline series at each point
/// (or once for a univariate relation).
pub fn verify_known(
    rel: KnownRelation,
    order: usize,
    points: &[Vec<i64>],
) -> Result<Vec<VerifyReport>> {
    if rel.arity() == 0 && !points.is_empty() {
        return Err(Error::Usage(format!("{rel} takes no sample points")));
    }
    let g = series_for(rel, order)?;
    let relation = rel.relation();
    if rel.arity() == 0 {
        let v = verify_quadratic(&g, &relation, None)?;
        return Ok(vec![VerifyReport::new(rel.name(), None, &v)]);
    }
    points
        .iter()
        .map(|p| {
            let v = verify_quadratic(&g, &relation, Some(p))?;
            Ok(VerifyReport::new(rel.name(), Some(p), &v))
        })
        .collect()
}

/// Specialization checks: the plain relations at all-ones and the refined
/// relations at the default sample points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub checks: Vec<VerifyReport>,
}

impl SpecializationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn specialization_check(order: usize) -> Result<SpecializationReport> {
    let p = Pipeline::new(order);
    let gated = p.gated()?;
    let wicketed = p.wicketed()?;
    let mut checks = Vec::new();
    for (rel, series) in [
        (KnownRelation::Gated, gated),
        (KnownRelation::Wicketed, wicketed),
    ] {
        let ones = vec![1; series.arity()];
        let v = verify_quadratic(&series.eval_at_integers(&ones)?, &rel.relation(), None)?;
        checks.push(VerifyReport::new(rel.name(), Some(&ones), &v));
    }
    for (rel, series) in [
        (KnownRelation::GatedRefined, gated),
        (KnownRelation::WicketedRefined, wicketed),
    ] {
        for point in default_points(rel) {
            let v = verify_quadratic(series, &rel.relation(), Some(&point))?;
            checks.push(VerifyReport::new(rel.name(), Some(&point), &v));
        }
    }
    Ok(SpecializationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_relations_hold() {
        for rel in [KnownRelation::Gated, KnownRelation::Wicketed] {
            let r = verify_known(rel, 20, &[]).unwrap();
            assert!(r[0].pass, "{r:?}");
            assert_eq!(r[0].residual_min_degree, ">20");
        }
    }

    #[test]
    fn report_json_layout() {
        let r = verify_known(KnownRelation::Wicketed, 20, &[]).unwrap();
        assert_eq!(
            r[0].to_json(),
            r#"{"relation":"fdfpeq","order":20,"residual_min_degree":">20","pass":true}"#
        );
    }

    #[test]
    fn short_order_is_inconclusive() {
        let r = verify_known(KnownRelation::Wicketed, 3, &[]).unwrap();
        assert!(r[0].inconclusive && !r[0].pass);
    }

    #[test]
    fn wrong_series_fails_early() {
        let f = pipeline(crate::umbral::Target::Ferrers, 20)
            .unwrap()
            .specialize_to_one();
        let v = verify_quadratic(&f, &KnownRelation::Wicketed.relation(), None).unwrap();
        assert!(!v.pass());
        assert_eq!(v.residual_min_degree, Some(4));
    }

    #[test]
    fn refined_relations_at_points() {
        let report = specialization_check(16).unwrap();
        for c in &report.checks {
            assert!(c.pass, "{c:?}");
        }
        assert_eq!(report.checks.len(), 12);
    }

    #[test]
    fn ferrers_rational_at_points() {
        for r in verify_known(
            KnownRelation::FerrersRational,
            15,
            &default_points(KnownRelation::FerrersRational),
        )
        .unwrap()
        {
            assert!(r.pass, "{r:?}");
        }
    }
}
