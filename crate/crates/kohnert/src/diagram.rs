use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::WeakComposition;
use crate::error::{invalid, Result};

/// A unit cell at `(col, row)`, both 1-indexed, rows counted from the bottom.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

impl Cell {
    pub const fn new(col: u32, row: u32) -> Self {
        Cell { col, row }
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// A finite set of cells, kept sorted by `(col, row)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    cells: Vec<Cell>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.cells.iter()).finish()
    }
}

impl Diagram {
    pub fn new() -> Self {
        Diagram { cells: Vec::new() }
    }

    /// Build from arbitrary cells; duplicates collapse. Cells must have positive coordinates.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let mut v: Vec<Cell> = cells.into_iter().collect();
        if v.iter().any(|c| c.col == 0 || c.row == 0) {
            return Err(invalid("cell coordinates must be positive"));
        }
        v.sort_unstable();
        v.dedup();
        Ok(Diagram { cells: v })
    }

    /// Build from `(col, row)` pairs, panicking on zero coordinates. Meant for literals.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        Self::from_cells(pairs.iter().map(|&(c, r)| Cell::new(c, r))).expect("positive coordinates")
    }

    /// Build from rows given as lists of occupied columns, bottom row first.
    pub fn from_rows(rows: &[&[u32]]) -> Self {
        let cells = rows
            .iter()
            .enumerate()
            .flat_map(|(i, cols)| cols.iter().map(move |&c| Cell::new(c, i as u32 + 1)));
        Self::from_cells(cells).expect("positive coordinates")
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        assert!(cell.col > 0 && cell.row > 0, "cell coordinates must be positive");
        match self.cells.binary_search(&cell) {
            Ok(_) => false,
            Err(i) => {
                self.cells.insert(i, cell);
                true
            }
        }
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        match self.cells.binary_search(&cell) {
            Ok(i) => {
                self.cells.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, cell: Cell) -> Self {
        let mut d = self.clone();
        d.insert(cell);
        d
    }

    pub fn without(&self, cell: Cell) -> Self {
        let mut d = self.clone();
        d.remove(cell);
        d
    }

    /// Move `from` to `to`; the caller guarantees `from` is present and `to` is empty.
    pub(crate) fn relocate(&mut self, from: Cell, to: Cell) {
        debug_assert!(self.contains(from) && !self.contains(to));
        self.remove(from);
        self.insert(to);
    }

    pub fn union(&self, other: &Diagram) -> Diagram {
        Self::from_cells(self.cells.iter().chain(other.cells.iter()).copied()).unwrap()
    }

    pub fn is_disjoint(&self, other: &Diagram) -> bool {
        self.cells.iter().all(|&c| !other.contains(c))
    }

    pub fn max_col(&self) -> u32 {
        self.cells.last().map_or(0, |c| c.col)
    }

    pub fn max_row(&self) -> u32 {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    /// Cells of column `c`, ordered bottom to top.
    pub fn column(&self, c: u32) -> &[Cell] {
        let lo = self.cells.partition_point(|x| x.col < c);
        let hi = self.cells.partition_point(|x| x.col <= c);
        &self.cells[lo..hi]
    }

    /// Cells of row `r`, ordered left to right.
    pub fn row(&self, r: u32) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.cells.iter().copied().filter(|c| c.row == r).collect();
        v.sort_unstable();
        v
    }

    /// Number of cells in column `c` weakly above row `r`.
    pub fn droppable_count(&self, c: u32, r: u32) -> u32 {
        self.column(c).iter().filter(|x| x.row >= r).count() as u32
    }
}

/// The left-justified diagram with `a_i` cells in row `i`.
pub fn key_diagram(a: &WeakComposition) -> Diagram {
    let mut cells = Vec::with_capacity(a.size() as usize);
    for (i, &p) in a.parts().iter().enumerate() {
        for c in 1..=p {
            cells.push(Cell::new(c, i as u32 + 1));
        }
    }
    cells.sort_unstable();
    Diagram { cells }
}

/// Row weight of length `n`; fails if a cell sits above row `n`.
pub fn row_weight(t: &Diagram, n: usize) -> Result<WeakComposition> {
    if t.max_row() as usize > n {
        return Err(invalid("row bound smaller than the highest occupied row"));
    }
    let mut parts = alloc::vec![0u32; n];
    for c in t.cells() {
        parts[c.row as usize - 1] += 1;
    }
    Ok(WeakComposition::new(parts))
}

/// Row weight with length equal to the highest occupied row.
pub fn weight(t: &Diagram) -> WeakComposition {
    row_weight(t, t.max_row() as usize).expect("bound covers every row")
}

pub fn column_weight(t: &Diagram) -> WeakComposition {
    let mut parts = alloc::vec![0u32; t.max_col() as usize];
    for c in t.cells() {
        parts[c.col as usize - 1] += 1;
    }
    WeakComposition::new(parts)
}

/// All diagrams reachable by one Kohnert move, in canonical order.
pub fn kohnert_successors(t: &Diagram) -> Vec<Diagram> {
    let mut out = BTreeSet::new();
    let mut rows: Vec<u32> = t.cells().iter().map(|c| c.row).collect();
    rows.sort_unstable();
    rows.dedup();
    for r in rows {
        let Some(top) = t.cells().iter().filter(|c| c.row == r).max_by_key(|c| c.col).copied()
        else {
            continue;
        };
        let target = (1..r).rev().find(|&s| !t.contains(Cell::new(top.col, s)));
        if let Some(s) = target {
            let mut d = t.clone();
            d.relocate(top, Cell::new(top.col, s));
            out.insert(d);
        }
    }
    out.into_iter().collect()
}

/// `#{(c-1,s) in T : s >= r} - #{(c,s) in T : s >= r}` for `c > 1`.
pub fn deficiency(t: &Diagram, c: u32, r: u32) -> i64 {
    assert!(c > 1, "deficiency is defined for columns past the first");
    t.droppable_count(c - 1, r) as i64 - t.droppable_count(c, r) as i64
}

/// Minimum deficiency over all rows of column `c`, with the highest row attaining it.
pub(crate) fn min_deficiency(t: &Diagram, c: u32) -> (i64, u32) {
    let left = t.column(c - 1);
    let right = t.column(c);
    let top = left.iter().chain(right.iter()).map(|x| x.row).max().unwrap_or(0);
    let mut best = (0i64, top + 1);
    let mut m = 0i64;
    for r in (1..=top).rev() {
        if left.binary_search(&Cell::new(c - 1, r)).is_ok() {
            m += 1;
        }
        if right.binary_search(&Cell::new(c, r)).is_ok() {
            m -= 1;
        }
        if m < best.0 {
            best = (m, r);
        }
    }
    best
}

/// Whether every deficiency is nonnegative, i.e. `T` is a Kohnert diagram of some composition.
pub fn is_generic(t: &Diagram) -> bool {
    (2..=t.max_col()).all(|c| min_deficiency(t, c).0 >= 0)
}
