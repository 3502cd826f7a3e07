use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::One;

use crate::algebra::TruncSeries;
use crate::error::{Error, Result};

use super::fixed_point::EvolutionSystem;
use super::operators::{
    close_wicket, close_wicket_at_one, open_gate, open_gate_fixed_x1, AddRowAtOne, UmbralOperator,
};

/// Which generating function to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Plain Ferrers diagrams, `F(x, t)`.
    Ferrers,
    /// Gated Ferrers diagrams, a series in `x1, x2, x3, t`.
    Gated,
    /// Wicketed Ferrers diagrams, a series in `x, t`.
    Wicketed,
}

impl Target {
    pub const ALL: [Target; 3] = [Target::Ferrers, Target::Gated, Target::Wicketed];

    pub fn name(self) -> &'static str {
        match self {
            Target::Ferrers => "ferrers",
            Target::Gated => "gated",
            Target::Wicketed => "wicketed",
        }
    }

    /// Half-perimeter of the smallest object of this kind.
    pub fn min_half_perimeter(self) -> usize {
        match self {
            Target::Ferrers => 2,
            Target::Gated => 6,
            Target::Wicketed => 8,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ferrers" => Ok(Target::Ferrers),
            "gated" => Ok(Target::Gated),
            "wicketed" => Ok(Target::Wicketed),
            other => Err(Error::Usage(format!(
                "unknown object kind {other:?} (expected ferrers, gated or wicketed)"
            ))),
        }
    }
}

/// Single-row diagrams: `sum_{a>=1} x^a t^(a+1)`.
pub fn initial_rows(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(1, order);
    for a in 1..order {
        s.add_term(a + 1, [a as u32, 0, 0], BigRational::one());
    }
    s
}

/// Lazily computed generating functions at one truncation order. Each
/// series is built at most once and reused by the later stages.
#[derive(Debug)]
pub struct Pipeline {
    order: usize,
    ferrers: OnceLock<TruncSeries>,
    gated: OnceLock<TruncSeries>,
    wicketed: OnceLock<TruncSeries>,
}

fn cached(
    cell: &OnceLock<TruncSeries>,
    build: impl FnOnce() -> Result<TruncSeries>,
) -> Result<&TruncSeries> {
    if let Some(s) = cell.get() {
        return Ok(s);
    }
    let s = build()?;
    s.check_width_bound()?;
    Ok(cell.get_or_init(|| s))
}

impl Pipeline {
    pub fn new(order: usize) -> Self {
        Pipeline {
            order,
            ferrers: OnceLock::new(),
            gated: OnceLock::new(),
            wicketed: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `F = I + AddRow(F)`.
    pub fn ferrers(&self) -> Result<&TruncSeries> {
        cached(&self.ferrers, || {
            EvolutionSystem::new(initial_rows(self.order), &UmbralOperator::AddRow)?
                .solve(self.order)
        })
    }

    /// `phi = OpenGate(F) + ExtendGate(phi)`.
    pub fn gated(&self) -> Result<&TruncSeries> {
        cached(&self.gated, || {
            let opened = open_gate(self.ferrers()?)?;
            EvolutionSystem::new(opened, &UmbralOperator::ExtendGate)?.solve(self.order)
        })
    }

    /// `psi = CloseWicket(phi) + AddRow(psi)`.
    pub fn wicketed(&self) -> Result<&TruncSeries> {
        cached(&self.wicketed, || {
            let closed = close_wicket(self.gated()?)?;
            EvolutionSystem::new(closed, &UmbralOperator::AddRow)?.solve(self.order)
        })
    }

    pub fn series(&self, target: Target) -> Result<&TruncSeries> {
        match target {
            Target::Ferrers => self.ferrers(),
            Target::Gated => self.gated(),
            Target::Wicketed => self.wicketed(),
        }
    }
}

/// One-shot symbolic generating function for `target` through `t^order`.
pub fn pipeline(target: Target, order: usize) -> Result<TruncSeries> {
    Pipeline::new(order).series(target).cloned()
}

/// The gated series with `x1` fixed to a number from the start. The result
/// has arity 3 with every `x1` exponent zero; evaluating it at
/// `(anything, x2, x3)` equals the symbolic series at `(x1, x2, x3)`.
///
/// `x2` and `x3` cannot be fixed early: gate extension compares the gap and
/// right widths, which a numeric value no longer records.
pub fn gated_with_fixed_x1(order: usize, x1: &BigRational) -> Result<TruncSeries> {
    let ferrers = Pipeline::new(order).ferrers()?.clone();
    let opened = open_gate_fixed_x1(&ferrers, x1)?;
    EvolutionSystem::new(opened, &UmbralOperator::ExtendGate)?.solve(order)
}

/// The wicketed series at `x = 1`, computed with `x1 = 1` carried through
/// the gate stage. Closing and regrowth at `x = 1` depend only on the gap
/// width, so no width information is lost.
pub fn wicketed_specialized(order: usize) -> Result<TruncSeries> {
    let gated = gated_with_fixed_x1(order, &BigRational::one())?;
    let closed = close_wicket_at_one(&gated)?;
    EvolutionSystem::new(closed, &AddRowAtOne)?.solve(order)
}
