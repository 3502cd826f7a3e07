use super::census::Census;
use super::shapes::{full_row, gate_row_cells, CellGrid, GateRow};

/// A shape under construction: full rows below the hole, rows through the
/// gate or hole, and full rows above it. Borrowed from the enumerator's
/// working buffers, so visitors must copy anything they keep.
#[derive(Clone, Copy, Debug)]
pub struct Parts<'a> {
    pub base: &'a [u32],
    pub gate: &'a [GateRow],
    pub above: &'a [u32],
}

impl Parts<'_> {
    pub fn grid(&self) -> CellGrid {
        let mut rows: Vec<_> = self.base.iter().map(|&w| full_row(w)).collect();
        rows.extend(self.gate.iter().map(gate_row_cells));
        rows.extend(self.above.iter().map(|&w| full_row(w)));
        CellGrid::new(rows)
    }

    /// Outer height + outer top width + hole height + hole top width.
    pub fn derived_half_perimeter(&self) -> usize {
        let height = self.base.len() + self.gate.len() + self.above.len();
        let top = self.above.last().copied().unwrap_or(0) as usize;
        let hole_top = self.gate.last().map_or(0, |g| g.gap) as usize;
        height + top + self.gate.len() + hole_top
    }
}

/// Plain Ferrers diagrams counted by half-perimeter with memoized recursion
/// over (height, top width). Refined by top width.
pub fn count_ferrers(max_hp: usize) -> Census<u32> {
    let mut census = Census::new(max_hp);
    // ways[w] = diagrams of the current height with top width w
    let mut ways = vec![0u64; max_hp + 1];
    for w in ways.iter_mut().take(max_hp).skip(1) {
        *w = 1;
    }
    for height in 1..max_hp {
        for (w, &n) in ways.iter().enumerate().skip(1) {
            let hp = height + w;
            if n > 0 && hp <= max_hp {
                census.record(hp, w as u32, n);
            }
        }
        let mut next = vec![0u64; max_hp + 1];
        let mut prefix = 0u64;
        for w in 1..=max_hp {
            prefix += ways[w];
            next[w] = prefix;
        }
        ways = next;
    }
    census
}

/// Visits every plain Ferrers diagram with half-perimeter at most `max_hp`
/// together with its edge-counted half-perimeter.
pub fn for_each_ferrers(max_hp: usize, mut visit: impl FnMut(&[u32], usize)) {
    fn grow(rows: &mut Vec<u32>, max_hp: usize, visit: &mut dyn FnMut(&[u32], usize)) {
        let hp = Parts {
            base: rows,
            gate: &[],
            above: &[],
        }
        .grid()
        .half_perimeter();
        visit(rows, hp);
        let top = *rows.last().unwrap();
        let mut w = top;
        while rows.len() + 1 + w as usize <= max_hp {
            rows.push(w);
            grow(rows, max_hp, visit);
            rows.pop();
            w += 1;
        }
    }
    let mut rows = Vec::new();
    for w in 1..max_hp as u32 {
        if 1 + w as usize > max_hp {
            break;
        }
        rows.push(w);
        grow(&mut rows, max_hp, &mut visit);
        rows.pop();
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Gated,
    Wicketed,
}

/// Shared depth-first generator. Pruning uses a geometric lower bound: the
/// half-perimeter of any cell set equals the number of maximal horizontal
/// runs over all rows plus the number of maximal vertical runs over all
/// columns. Placed rows keep their runs, and every column up to the current
/// top width has at least one vertical run (two under a sealed hole).
struct Generator<'f> {
    max_hp: usize,
    goal: Goal,
    base: Vec<u32>,
    gate: Vec<GateRow>,
    above: Vec<u32>,
    row_runs: usize,
    visit: &'f mut dyn FnMut(&Parts<'_>, usize),
}

impl Generator<'_> {
    fn emit(&mut self) {
        let parts = Parts {
            base: &self.base,
            gate: &self.gate,
            above: &self.above,
        };
        let hp = parts.grid().half_perimeter();
        if hp <= self.max_hp {
            (self.visit)(&parts, hp);
        }
    }

    fn run(&mut self) {
        for w in 1.. {
            if 1 + w as usize > self.max_hp {
                break;
            }
            self.base.push(w);
            self.row_runs += 1;
            self.base_phase();
            self.row_runs -= 1;
            self.base.pop();
        }
    }

    fn base_phase(&mut self) {
        let a = *self.base.last().unwrap();
        // another full row
        let mut w = a;
        while self.row_runs + 1 + w as usize <= self.max_hp {
            self.base.push(w);
            self.row_runs += 1;
            self.base_phase();
            self.row_runs -= 1;
            self.base.pop();
            w += 1;
        }
        // first gate row: both posts and the gap start on the row below
        for left in 1..a {
            for gap in 1..a - left {
                let mut right = a - left - gap;
                loop {
                    let row = GateRow::new(left, gap, right);
                    if self.row_runs + 2 + row.width() as usize > self.max_hp {
                        break;
                    }
                    self.push_gate(row);
                    right += 1;
                }
            }
        }
    }

    fn push_gate(&mut self, row: GateRow) {
        self.gate.push(row);
        self.row_runs += 2;
        self.gate_phase();
        self.row_runs -= 2;
        self.gate.pop();
    }

    fn gate_phase(&mut self) {
        let top = *self.gate.last().unwrap();
        if self.goal == Goal::Gated {
            self.emit();
        }
        let span = top.gap + top.right;
        for gap in top.gap..span {
            let mut right = span - gap;
            loop {
                let row = GateRow::new(top.left, gap, right);
                if self.row_runs + 2 + row.width() as usize > self.max_hp {
                    break;
                }
                self.push_gate(row);
                right += 1;
            }
        }
        if self.goal == Goal::Wicketed {
            let mut a = top.width();
            while self.row_runs + 1 + a as usize + top.gap as usize <= self.max_hp {
                self.push_above(a, top.gap);
                a += 1;
            }
        }
    }

    fn push_above(&mut self, w: u32, hole_top: u32) {
        self.above.push(w);
        self.row_runs += 1;
        self.emit();
        let mut next = w;
        while self.row_runs + 1 + next as usize + hole_top as usize <= self.max_hp {
            self.push_above(next, hole_top);
            next += 1;
        }
        self.row_runs -= 1;
        self.above.pop();
    }
}

/// Visits every gated diagram with half-perimeter at most `max_hp`.
pub fn for_each_gated(max_hp: usize, mut visit: impl FnMut(&Parts<'_>, usize)) {
    Generator {
        max_hp,
        goal: Goal::Gated,
        base: Vec::new(),
        gate: Vec::new(),
        above: Vec::new(),
        row_runs: 0,
        visit: &mut visit,
    }
    .run();
}

/// Visits every wicketed diagram with half-perimeter at most `max_hp`.
pub fn for_each_wicketed(max_hp: usize, mut visit: impl FnMut(&Parts<'_>, usize)) {
    Generator {
        max_hp,
        goal: Goal::Wicketed,
        base: Vec::new(),
        gate: Vec::new(),
        above: Vec::new(),
        row_runs: 0,
        visit: &mut visit,
    }
    .run();
}

/// Gated diagrams by edge-counted half-perimeter, refined by the top gate row.
pub fn count_gated(max_hp: usize) -> Census<GateRow> {
    let mut census = Census::new(max_hp);
    for_each_gated(max_hp, |parts, hp| {
        census.record(hp, *parts.gate.last().unwrap(), 1);
    });
    census
}

/// Wicketed diagrams by edge-counted half-perimeter, refined by top width.
/// Panics if a shape's edge count disagrees with its height-and-width formula.
pub fn count_wicketed(max_hp: usize) -> Census<u32> {
    let mut census = Census::new(max_hp);
    for_each_wicketed(max_hp, |parts, hp| {
        assert_eq!(
            hp,
            parts.derived_half_perimeter(),
            "half-perimeter identity fails for {parts:?}"
        );
        census.record(hp, *parts.above.last().unwrap(), 1);
    });
    census
}
