use std::fmt;

use crate::error::{Error, Result};

/// A left-aligned stack of rows, widths weakly increasing from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersShape {
    rows: Vec<u32>,
}

impl FerrersShape {
    /// `rows` lists widths bottom to top.
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Usage(
                "a Ferrers diagram needs at least one row".into(),
            ));
        }
        if rows[0] == 0 {
            return Err(Error::Usage("row widths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Usage(format!(
                "row widths must weakly increase upwards: {rows:?}"
            )));
        }
        Ok(FerrersShape { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn top_width(&self) -> u32 {
        *self.rows.last().expect("nonempty")
    }

    /// Height plus top width.
    pub fn half_perimeter(&self) -> usize {
        self.height() + self.top_width() as usize
    }

    /// The diagram with its top row removed, if any row remains.
    pub fn without_top_row(&self) -> Option<FerrersShape> {
        (self.rows.len() > 1).then(|| FerrersShape {
            rows: self.rows[..self.rows.len() - 1].to_vec(),
        })
    }
}

/// One row inside a gate or wicket: `left` cells, a `gap`, then `right` cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GateRow {
    pub left: u32,
    pub gap: u32,
    pub right: u32,
}

impl GateRow {
    pub fn new(left: u32, gap: u32, right: u32) -> Self {
        GateRow { left, gap, right }
    }

    pub fn width(&self) -> u32 {
        self.left + self.gap + self.right
    }
}

impl fmt::Display for GateRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.left, self.gap, self.right)
    }
}

/// Checks the row grammar of a gate sitting on a base of top width `base_top`.
pub(crate) fn validate_gate_rows(base_top: u32, rows: &[GateRow]) -> Result<()> {
    let first = rows
        .first()
        .ok_or_else(|| Error::Usage("a gate needs at least one row".into()))?;
    let bad = |msg: String| Err(Error::Usage(msg));
    if first.left < 1 || first.gap < 1 || first.left + first.gap > base_top.saturating_sub(1) {
        return bad(format!(
            "first gate row {first} does not fit strictly inside width {base_top}"
        ));
    }
    if first.width() < base_top {
        return bad(format!(
            "first gate row {first} is narrower than the row below"
        ));
    }
    for w in rows.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi.left != lo.left {
            return bad(format!(
                "gate left width changes from {} to {}",
                lo.left, hi.left
            ));
        }
        if hi.gap < lo.gap || hi.gap + 1 > lo.gap + lo.right {
            return bad(format!("gate row {hi} cannot sit on {lo}"));
        }
        if hi.gap + hi.right < lo.gap + lo.right {
            return bad(format!("gate row {hi} is narrower than {lo}"));
        }
    }
    Ok(())
}

/// A Ferrers diagram with a Ferrers-shaped slit open at the top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GatedShape {
    base: FerrersShape,
    gate_rows: Vec<GateRow>,
}

impl GatedShape {
    pub fn new(base: FerrersShape, gate_rows: Vec<GateRow>) -> Result<Self> {
        validate_gate_rows(base.top_width(), &gate_rows)?;
        Ok(GatedShape { base, gate_rows })
    }

    pub fn base(&self) -> &FerrersShape {
        &self.base
    }

    pub fn gate_rows(&self) -> &[GateRow] {
        &self.gate_rows
    }

    pub fn top_gate_row(&self) -> GateRow {
        *self.gate_rows.last().expect("nonempty")
    }
}

/// A Ferrers diagram with a Ferrers-shaped hole strictly inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WicketedShape {
    outer: FerrersShape,
    hole: FerrersShape,
    /// 1-based (row, column) of the hole's bottom-left cell.
    hole_anchor: (usize, u32),
}

impl WicketedShape {
    pub fn new(outer: FerrersShape, hole: FerrersShape, hole_anchor: (usize, u32)) -> Result<Self> {
        let (row, col) = hole_anchor;
        if row < 2 || col < 2 {
            return Err(Error::Usage(format!(
                "hole anchor {hole_anchor:?} must leave a row below and a column to the left"
            )));
        }
        let first = row - 1;
        let end = first + hole.height();
        if end >= outer.height() {
            return Err(Error::Usage(
                "the hole must be closed by a row above it".into(),
            ));
        }
        let left = col - 1;
        let gate: Vec<GateRow> = hole
            .rows()
            .iter()
            .zip(&outer.rows()[first..end])
            .map(|(&gap, &width)| {
                let right = width.saturating_sub(left + gap);
                GateRow::new(left, gap, right)
            })
            .collect();
        if gate.iter().any(|g| g.right == 0) {
            return Err(Error::Usage(
                "the hole must leave a column to its right".into(),
            ));
        }
        validate_gate_rows(outer.rows()[first - 1], &gate)?;
        Ok(WicketedShape {
            outer,
            hole,
            hole_anchor,
        })
    }

    /// Assembles a wicketed shape from the base below the hole, the rows
    /// through the hole, and the rows above it (at least one).
    pub fn from_parts(base: &[u32], gate: &[GateRow], above: &[u32]) -> Result<Self> {
        let mut outer: Vec<u32> = base.to_vec();
        outer.extend(gate.iter().map(GateRow::width));
        outer.extend_from_slice(above);
        let hole = FerrersShape::new(gate.iter().map(|g| g.gap).collect())?;
        let left = gate.first().map_or(0, |g| g.left);
        Self::new(FerrersShape::new(outer)?, hole, (base.len() + 1, left + 1))
    }

    pub fn outer(&self) -> &FerrersShape {
        &self.outer
    }

    pub fn hole(&self) -> &FerrersShape {
        &self.hole
    }

    pub fn hole_anchor(&self) -> (usize, u32) {
        self.hole_anchor
    }

    /// Outer height + outer top width + hole height + hole top width; must
    /// agree with the edge count.
    pub fn derived_half_perimeter(&self) -> usize {
        self.outer.half_perimeter() + self.hole.half_perimeter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cell {
    Filled,
    Hole,
}

/// Rows of cells, bottom row first. Positions past the end of a row are
/// outside the shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGrid {
    rows: Vec<Vec<Cell>>,
}

impl CellGrid {
    pub fn new(rows: Vec<Vec<Cell>>) -> Self {
        CellGrid { rows }
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    fn filled(&self, row: isize, col: isize) -> bool {
        if row < 0 || col < 0 {
            return false;
        }
        self.rows
            .get(row as usize)
            .and_then(|r| r.get(col as usize))
            .is_some_and(|c| *c == Cell::Filled)
    }

    /// Unit edges separating a filled cell from anything that is not filled.
    pub fn boundary_edges(&self) -> usize {
        let mut edges = 0;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                if *cell != Cell::Filled {
                    continue;
                }
                let (r, c) = (r as isize, c as isize);
                for (dr, dc) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    if !self.filled(r + dr, c + dc) {
                        edges += 1;
                    }
                }
            }
        }
        edges
    }

    pub fn half_perimeter(&self) -> usize {
        self.boundary_edges() / 2
    }

    /// `#` for cells, `.` for holes, top row first, no trailing padding.
    pub fn render(&self) -> String {
        self.rows
            .iter()
            .rev()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Filled => '#',
                        Cell::Hole => '.',
                    })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub(crate) fn full_row(width: u32) -> Vec<Cell> {
    vec![Cell::Filled; width as usize]
}

pub(crate) fn gate_row_cells(g: &GateRow) -> Vec<Cell> {
    let mut row = vec![Cell::Filled; g.left as usize];
    row.extend(std::iter::repeat_n(Cell::Hole, g.gap as usize));
    row.extend(std::iter::repeat_n(Cell::Filled, g.right as usize));
    row
}

/// Anything that can be laid out on a cell grid.
pub trait Shape {
    fn grid(&self) -> CellGrid;

    /// Half the number of boundary edges.
    fn half_perimeter(&self) -> usize {
        self.grid().half_perimeter()
    }
}

impl Shape for FerrersShape {
    fn grid(&self) -> CellGrid {
        CellGrid::new(self.rows.iter().map(|&w| full_row(w)).collect())
    }
}

impl Shape for GatedShape {
    fn grid(&self) -> CellGrid {
        let mut rows: Vec<Vec<Cell>> = self.base.rows.iter().map(|&w| full_row(w)).collect();
        rows.extend(self.gate_rows.iter().map(gate_row_cells));
        CellGrid::new(rows)
    }
}

impl Shape for WicketedShape {
    fn grid(&self) -> CellGrid {
        let mut rows: Vec<Vec<Cell>> = self.outer.rows.iter().map(|&w| full_row(w)).collect();
        let (row, col) = self.hole_anchor;
        for (i, &gap) in self.hole.rows.iter().enumerate() {
            let r = &mut rows[row - 1 + i];
            for c in 0..gap as usize {
                r[col as usize - 1 + c] = Cell::Hole;
            }
        }
        CellGrid::new(rows)
    }
}

pub fn render_ascii(shape: &dyn Shape) -> String {
    shape.grid().render()
}
