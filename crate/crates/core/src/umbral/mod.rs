//! Umbral row operators and the evolution equations they generate.
//!
//! A diagram is grown one row at a time. Its state is recorded by catalytic
//! variables: `x` for the width of the top row of a plain Ferrers diagram, or
//! `x1, x2, x3` for the widths left of, inside, and right of an open gate.
//! Each operator maps the monomial of a state to the sum over all legal next
//! rows, weighted by the half-perimeter they add.

pub mod closed_form;
mod fixed_point;
mod operators;
mod pipeline;

pub use fixed_point::{solve_fixed_point, EvolutionSystem};
pub use operators::{
    add_row, close_wicket, close_wicket_by_substitution, extend_gate, open_gate,
    open_gate_fixed_x1, SeriesOperator, UmbralOperator,
};
pub use pipeline::{
    gated_with_fixed_x1, initial_rows, pipeline, wicketed_specialized, Pipeline, Target,
};
