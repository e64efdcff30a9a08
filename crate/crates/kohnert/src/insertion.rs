use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::diagram::{is_generic, min_deficiency, Cell, Diagram};
use crate::error::{invalid, not_member, Result};
use crate::matching::thread_decomposition;
use crate::space::target_membership;
use crate::stratify::added_column;

/// The moves made while rectifying, and the final diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectificationTrace {
    pub steps: Vec<(Cell, Cell)>,
    pub result: Diagram,
}

impl RectificationTrace {
    /// Destination of the last move, if any cell moved.
    pub fn last_moved(&self) -> Option<Cell> {
        self.steps.last().map(|&(_, to)| to)
    }
}

/// Removable cells of a diagram and, for weak non-generic diagrams, their column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RemovableReport {
    pub removable_cells: Vec<Cell>,
    pub removable_column: Option<u32>,
    pub highest: Option<Cell>,
    pub lowest: Option<Cell>,
}

/// Add a cell in row 1 at the leftmost empty column.
pub fn bottom_insert(t: &Diagram) -> Diagram {
    let c = (1..).find(|&c| !t.contains(Cell::new(c, 1))).expect("finite diagram");
    t.with(Cell::new(c, 1))
}

/// Undo bottom insertion: remove the row-1 cell of the added column.
pub fn bottom_remove(u: &Diagram, a: &WeakComposition) -> Result<Diagram> {
    if !target_membership(u, a, 1, 1)? {
        return Err(not_member("diagram is not in the bottom target space"));
    }
    let c = added_column(u, a)?;
    let x = Cell::new(c, 1);
    if !u.contains(x) {
        return Err(not_member("added column has no cell in row 1"));
    }
    Ok(u.without(x))
}

/// One rectification step: push the offending cell of the leftmost deficient column one
/// column left. Returns the moved cell's new position, or `None` for generic diagrams.
pub fn rho_step(t: &Diagram) -> (Diagram, Option<Cell>) {
    for c in 2..=t.max_col() {
        let (m, r) = min_deficiency(t, c);
        if m < 0 {
            let from = Cell::new(c, r);
            let to = Cell::new(c - 1, r);
            let mut d = t.clone();
            d.relocate(from, to);
            return (d, Some(to));
        }
    }
    (t.clone(), None)
}

/// Iterate `rho_step` to a fixed point.
pub fn rectify(t: &Diagram) -> RectificationTrace {
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let (next, moved) = rho_step(&cur);
        match moved {
            Some(to) => {
                steps.push((Cell::new(to.col + 1, to.row), to));
                cur = next;
            }
            None => return RectificationTrace { steps, result: cur },
        }
    }
}

/// Append a cell in row `j` just right of the last occupied column, then rectify.
pub fn top_insert(t: &Diagram, j: u32) -> Result<Diagram> {
    Ok(top_insert_trace(t, j)?.result)
}

pub fn top_insert_trace(t: &Diagram, j: u32) -> Result<RectificationTrace> {
    if j == 0 {
        return Err(invalid("row index must be positive"));
    }
    Ok(rectify(&t.with(Cell::new(t.max_col() + 1, j))))
}

/// Cells whose removal leaves a generic diagram, with the removable column data.
pub fn removable_analysis(t: &Diagram) -> RemovableReport {
    let removable_cells: Vec<Cell> =
        t.cells().iter().copied().filter(|&x| is_generic(&t.without(x))).collect();
    if removable_cells.is_empty() || is_generic(t) {
        return RemovableReport { removable_cells, ..Default::default() };
    }
    let column = (2..=t.max_col()).find(|&c| min_deficiency(t, c).0 < 0);
    let lowest = rho_step(t).1.map(|to| Cell::new(to.col + 1, to.row));
    let threads = thread_decomposition(t);
    let highest = threads.unanchored.first().copied();
    RemovableReport { removable_cells, removable_column: column, highest, lowest }
}

/// Brute-force highest and lowest removable cells in the removable column.
pub fn removable_extremes(t: &Diagram) -> Option<(Cell, Cell)> {
    let report = removable_analysis(t);
    let c = report.removable_column?;
    let in_col: Vec<Cell> = report.removable_cells.iter().copied().filter(|x| x.col == c).collect();
    Some((*in_col.last()?, *in_col.first()?))
}

/// Cell of column `c` that moved last when `v` was produced by rectification:
/// the highest cell of that column that ends its thread.
pub fn final_moved_cell(v: &Diagram, c: u32) -> Option<Cell> {
    let threads = thread_decomposition(v);
    let has_source: Vec<Cell> = threads.matching.edges().map(|(_, y)| y).collect();
    v.column(c).iter().rev().copied().find(|y| !has_source.contains(y))
}

/// Reverse rectification: starting from the tracked cell `y`, push the highest removable
/// cell of its column one step right until the tracked cell reaches `target_column`.
pub fn un_rectify(u: &Diagram, y: Cell, target_column: u32) -> Result<Diagram> {
    if !u.contains(y) {
        return Err(not_member("tracked cell is not in the diagram"));
    }
    if y.col > target_column {
        return Err(not_member("tracked cell is right of the target column"));
    }
    let mut cur = u.clone();
    let mut col = y.col;
    while col < target_column {
        let pick = cur
            .column(col)
            .iter()
            .rev()
            .copied()
            .find(|&x| is_generic(&cur.without(x)))
            .ok_or_else(|| not_member("no removable cell in the tracked column"))?;
        let dest = Cell::new(col + 1, pick.row);
        if cur.contains(dest) {
            return Err(not_member("reverse move blocked"));
        }
        cur.relocate(pick, dest);
        col += 1;
    }
    Ok(cur)
}

/// Whether iterated insertion is bottom (row 1) or top (rectifying).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripMode {
    Bottom,
    Top,
}

/// Insert a horizontal strip one cell at a time; top mode needs weakly decreasing rows.
pub fn insert_strip(t: &Diagram, rows: &[u32], mode: StripMode) -> Result<Diagram> {
    let mut cur = t.clone();
    match mode {
        StripMode::Bottom => {
            for _ in rows {
                cur = bottom_insert(&cur);
            }
        }
        StripMode::Top => {
            if rows.windows(2).any(|w| w[0] < w[1]) {
                return Err(invalid("top insertion rows must weakly decrease"));
            }
            for &j in rows {
                cur = top_insert(&cur, j)?;
            }
        }
    }
    Ok(cur)
}
