use alloc::vec::Vec;

use crate::diagram::{is_generic, Cell, Diagram};
use crate::error::{invalid, Error, Result};
use crate::polynomial::Polynomial;

/// Semistandard Young tableau in English notation: `rows[0]` is the top row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates shape, weak row increase and strict column increase.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for w in rows.windows(2) {
            if w[1].len() > w[0].len() {
                return Err(invalid("row lengths must weakly decrease"));
            }
            if w[1].iter().zip(&w[0]).any(|(lo, hi)| lo <= hi) {
                return Err(invalid("columns must strictly increase downward"));
            }
        }
        for r in &rows {
            if r.contains(&0) {
                return Err(invalid("entries must be positive"));
            }
            if r.windows(2).any(|w| w[0] > w[1]) {
                return Err(invalid("rows must weakly increase"));
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Content weight in `n` variables.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut w = alloc::vec![0u32; n];
        for &x in self.rows.iter().flatten() {
            w[x as usize - 1] += 1;
        }
        w
    }
}

/// All semistandard tableaux of shape `shape` with entries at most `n`.
pub fn enumerate_ssyt(shape: &[u32], n: u32) -> Vec<Tableau> {
    let shape: Vec<u32> = shape.iter().copied().filter(|&p| p > 0).collect();
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Vec::new();
    }
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| alloc::vec![0; l as usize]).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &l)| (0..l as usize).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    fill(&cells, 0, n, &mut rows, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], idx: usize, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
    if idx == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (i, j) = cells[idx];
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=n {
        rows[i][j] = v;
        fill(cells, idx + 1, n, rows, out);
    }
    rows[i][j] = 0;
}

/// Generating polynomial of content weights over all tableaux of the shape.
pub fn schur_polynomial(shape: &[u32], n: u32) -> Result<Polynomial> {
    let mut p = Polynomial::zero(n as usize);
    for t in enumerate_ssyt(shape, n) {
        p.add_monomial(t.weight(n as usize), 1)?;
    }
    Ok(p)
}

/// Classical row insertion of `j`.
pub fn rsk_insert(t: &Tableau, j: u32) -> Result<Tableau> {
    if j == 0 {
        return Err(invalid("entries must be positive"));
    }
    let mut rows = t.rows.clone();
    let mut x = j;
    for row in rows.iter_mut() {
        match row.iter().position(|&y| y > x) {
            Some(p) => x = core::mem::replace(&mut row[p], x),
            None => {
                row.push(x);
                return Ok(Tableau { rows });
            }
        }
    }
    rows.push(alloc::vec![x]);
    Ok(Tableau { rows })
}

/// Place entry `r` of column `c` at `(c, n + 1 - r)`.
pub fn diagram_of_tableau(t: &Tableau, n: u32) -> Result<Diagram> {
    if t.max_entry() > n {
        return Err(invalid("tableau entries exceed the number of variables"));
    }
    let cells = t
        .rows
        .iter()
        .flat_map(|row| row.iter().enumerate().map(|(j, &r)| Cell::new(j as u32 + 1, n + 1 - r)));
    Diagram::from_cells(cells)
}

/// Give each cell of row `i` the entry `n - i + 1` and sort every column.
pub fn tableau_of_diagram(d: &Diagram, n: u32) -> Result<Tableau> {
    if !is_generic(d) {
        return Err(Error::NotGenericDiagram);
    }
    if d.max_row() > n {
        return Err(invalid("diagram occupies rows above n"));
    }
    let mut cols: Vec<Vec<u32>> = Vec::new();
    for c in 1..=d.max_col() {
        let mut col: Vec<u32> = d.column(c).iter().map(|x| n + 1 - x.row).collect();
        col.sort_unstable();
        cols.push(col);
    }
    let height = cols.first().map_or(0, |c| c.len());
    let rows = (0..height)
        .map(|i| cols.iter().filter_map(|c| c.get(i).copied()).collect())
        .collect();
    Tableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ssyt_count_32() {
        assert_eq!(enumerate_ssyt(&[3, 2], 3).len(), 15);
        assert_eq!(schur_polynomial(&[4], 1).unwrap().to_text(), "x1^4");
        assert_eq!(schur_polynomial(&[1], 3).unwrap().to_text(), "x1 + x2 + x3");
    }

    #[test]
    fn rsk_example() {
        let t = Tableau::new(vec![vec![1, 1, 2, 3, 4], vec![3, 3, 4, 4], vec![4, 5, 5, 5], vec![5]]).unwrap();
        let want = Tableau::new(vec![vec![1, 1, 2, 2, 4], vec![3, 3, 3, 4], vec![4, 4, 5, 5], vec![5, 5]]).unwrap();
        assert_eq!(rsk_insert(&t, 2).unwrap(), want);
    }

    #[test]
    fn single_cell() {
        let t = Tableau::new(vec![vec![2]]).unwrap();
        let d = diagram_of_tableau(&t, 4).unwrap();
        assert_eq!(d, Diagram::from_pairs(&[(1, 3)]));
        assert_eq!(tableau_of_diagram(&d, 4).unwrap(), t);
    }
}
