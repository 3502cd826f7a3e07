//! Brute-force geometric enumeration.
//!
//! Shapes are generated explicitly, laid out on a cell grid, and measured by
//! counting boundary edges. Nothing here consults a generating function, so
//! agreement with [`crate::umbral`] is a genuine cross-check.

mod census;
mod enumerate;
mod nibbled;
mod ranges;
mod shapes;

pub use census::{bfile, Census, CensusJson, CountJson};
pub use enumerate::{
    count_ferrers, count_gated, count_wicketed, for_each_ferrers, for_each_gated,
    for_each_wicketed, Parts,
};
pub use nibbled::{
    count_nibbled, count_nibbled_by_columns, for_each_nibbled, NibbledCensus, NibbledPolygon,
};
pub use ranges::count_by_ranges;
pub use shapes::{
    render_ascii, Cell, CellGrid, FerrersShape, GateRow, GatedShape, Shape, WicketedShape,
};

/// Default enumeration limits: the oracle counts grow roughly like `4^h`.
pub const DEFAULT_FERRERS_LIMIT: usize = 24;
pub const DEFAULT_GATED_LIMIT: usize = 16;
pub const DEFAULT_WICKETED_LIMIT: usize = 16;
pub const DEFAULT_NIBBLED_LIMIT: usize = 12;

/// Hard ceilings accepted by the command-line front end.
pub const FERRERS_CEILING: usize = 40;
pub const GATED_CEILING: usize = 20;
pub const WICKETED_CEILING: usize = 20;
pub const NIBBLED_CEILING: usize = 16;
