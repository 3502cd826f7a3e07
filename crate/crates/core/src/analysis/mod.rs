//! Algebraic relations satisfied by the generating functions: exact
//! verification, series solutions, fitting from data, and the closed form
//! of the wicketed series.

pub mod closed_form;
mod guess;
mod linalg;
mod relation;
mod solve;
mod verify;

pub use closed_form::{catalan_factor, closed_form_psi, ferrers_factor, outer_path_factor};
pub use guess::{guess_quadratic, AnsatzSpec, Guess};
pub use linalg::nullspace;
pub use relation::{KnownRelation, QuadraticRelation};
pub use solve::{quadratic_branches, solve_linear_series, solve_quadratic_series, RootSelector};
pub use verify::{
    default_points, series_for, specialization_check, verify_known, verify_quadratic,
    SpecializationReport, Verdict, VerifyReport, GATED_POINTS, WICKETED_POINTS,
};
