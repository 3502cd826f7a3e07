use crate::algebra::TruncSeries;
use crate::error::{Error, Result};

use super::operators::SeriesOperator;

/// The evolution equation `G = initial + step(G)`.
pub struct EvolutionSystem<'a> {
    initial: TruncSeries,
    step: &'a dyn SeriesOperator,
}

impl<'a> EvolutionSystem<'a> {
    /// Refuses steps that do not raise the `t`-degree, since the iteration
    /// would never settle.
    pub fn new(initial: TruncSeries, step: &'a dyn SeriesOperator) -> Result<Self> {
        if step.t_gain() == 0 {
            return Err(Error::Divergent);
        }
        for arity in [step.input_arity(), step.output_arity()] {
            if arity != initial.arity() {
                return Err(Error::ArityMismatch {
                    expected: initial.arity(),
                    found: arity,
                });
            }
        }
        Ok(EvolutionSystem { initial, step })
    }

    pub fn initial(&self) -> &TruncSeries {
        &self.initial
    }

    /// One round `G -> initial + step(G)`.
    pub fn iterate(&self, g: &TruncSeries) -> Result<TruncSeries> {
        self.initial.try_add(&self.step.apply(g)?)
    }

    /// The unique solution through `t^order`.
    ///
    /// Iterating from `G = 0` gives `initial + step(initial) + step^2(initial) + ...`
    /// after each round, so only the newest layer is pushed through `step`.
    /// Every layer sits at least `t_gain` higher than the one before, so at
    /// most `order + 1` layers are nonzero.
    pub fn solve(&self, order: usize) -> Result<TruncSeries> {
        let mut layer = self.initial.truncate(order);
        let mut g = layer.clone();
        for _ in 0..=order + 1 {
            layer = self.step.apply(&layer)?;
            if layer.is_zero() {
                return Ok(g);
            }
            g = g.try_add(&layer)?;
        }
        Err(Error::Divergent)
    }
}

pub fn solve_fixed_point(sys: &EvolutionSystem<'_>, order: usize) -> Result<TruncSeries> {
    sys.solve(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::umbral::{initial_rows, UmbralOperator};

    struct Identity;

    impl SeriesOperator for Identity {
        fn input_arity(&self) -> usize {
            1
        }
        fn output_arity(&self) -> usize {
            1
        }
        fn t_gain(&self) -> usize {
            0
        }
        fn apply(&self, p: &TruncSeries) -> Result<TruncSeries> {
            Ok(p.clone())
        }
    }

    #[test]
    fn non_gaining_step_is_refused() {
        let sys = EvolutionSystem::new(initial_rows(6), &Identity);
        assert!(matches!(sys, Err(Error::Divergent)));
    }

    #[test]
    fn arity_mismatch_is_refused() {
        let sys = EvolutionSystem::new(initial_rows(6), &UmbralOperator::ExtendGate);
        assert!(matches!(sys, Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn plain_ferrers_counts_are_powers_of_two() {
        let sys = EvolutionSystem::new(initial_rows(12), &UmbralOperator::AddRow).unwrap();
        let f = sys.solve(12).unwrap().specialize_to_one();
        for n in 2..=12 {
            assert_eq!(f.scalar_coeff(n), rat(1 << (n - 2)));
        }
        assert_eq!(f.scalar_coeff(0), rat(0));
        assert_eq!(f.scalar_coeff(1), rat(0));
    }

    #[test]
    fn solution_is_a_fixed_point() {
        let sys = EvolutionSystem::new(initial_rows(10), &UmbralOperator::AddRow).unwrap();
        let g = sys.solve(10).unwrap();
        assert_eq!(sys.iterate(&g).unwrap(), g);
    }
}
