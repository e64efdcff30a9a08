use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::diagram::{Cell, Diagram};
use crate::error::{not_member, Result};
use crate::space::kd_membership;

/// Edges from a cell in column `i+1` to a cell in column `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatchingSequence {
    edges: BTreeMap<Cell, Cell>,
}

impl MatchingSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges<I: IntoIterator<Item = (Cell, Cell)>>(edges: I) -> Self {
        MatchingSequence { edges: edges.into_iter().collect() }
    }

    pub fn edges(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.edges.iter().map(|(&x, &y)| (x, y))
    }

    pub fn target(&self, x: Cell) -> Option<Cell> {
        self.edges.get(&x).copied()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn sources_of(&self) -> BTreeMap<Cell, Cell> {
        self.edges.iter().map(|(&x, &y)| (y, x)).collect()
    }
}

/// Result of threading a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreadDecomposition {
    pub matching: MatchingSequence,
    /// Thread weight: part `i` is the length of the thread ending at `(1,i)`.
    pub weight: WeakComposition,
    /// Last cell of every thread that stopped before reaching column 1.
    pub unanchored: Vec<Cell>,
}

impl ThreadDecomposition {
    pub fn is_anchored(&self) -> bool {
        self.unanchored.is_empty()
    }
}

/// Greedy threading: start each thread at the lowest free cell of the rightmost column
/// with free cells, then repeatedly take the lowest free cell weakly above in the next
/// column to the left.
pub fn thread_decomposition(t: &Diagram) -> ThreadDecomposition {
    let mut free: BTreeSet<Cell> = t.cells().iter().copied().collect();
    let mut edges = BTreeMap::new();
    let mut weight = WeakComposition::zeros(t.max_row() as usize);
    let mut unanchored = Vec::new();
    while let Some(&last) = free.iter().next_back() {
        let col = last.col;
        let start = *free.range(Cell::new(col, 0)..).next().expect("column has a free cell");
        free.remove(&start);
        let mut cur = start;
        let mut len = 1;
        while cur.col > 1 {
            let next = free
                .range(Cell::new(cur.col - 1, cur.row)..Cell::new(cur.col, 0))
                .next()
                .copied();
            match next {
                Some(y) => {
                    free.remove(&y);
                    edges.insert(cur, y);
                    cur = y;
                    len += 1;
                }
                None => break,
            }
        }
        if cur.col == 1 {
            weight.set(cur.row as usize, len);
        } else {
            unanchored.push(cur);
        }
    }
    unanchored.sort_unstable();
    ThreadDecomposition { matching: MatchingSequence { edges }, weight, unanchored }
}

/// Thread weight of a diagram.
pub fn thread_weight(t: &Diagram) -> WeakComposition {
    thread_decomposition(t).weight
}

/// Kohnert labeling of `T` with respect to `a`, as a map from cells to labels.
pub type Labeling = BTreeMap<Cell, u32>;

/// Labels computed column by column, right to left; fails if some cell has no admissible label.
pub(crate) fn labeling_unchecked(t: &Diagram, a: &WeakComposition) -> Result<Labeling> {
    let mut labels: Labeling = BTreeMap::new();
    let maxc = t.max_col().max(a.max_part());
    // row of the cell carrying label i in the column to the right
    let mut right: BTreeMap<u32, u32> = BTreeMap::new();
    for j in (1..=maxc).rev() {
        let mut avail: BTreeSet<u32> = (1..=a.len() as u32).filter(|&i| a.get(i as usize) >= j).collect();
        let column = t.column(j);
        if column.len() != avail.len() {
            return Err(not_member("column sizes disagree with the composition"));
        }
        let mut here = BTreeMap::new();
        for &x in column {
            let pick = avail
                .iter()
                .copied()
                .find(|i| right.get(i).is_none_or(|&r| r <= x.row))
                .ok_or_else(|| not_member("no admissible label"))?;
            avail.remove(&pick);
            labels.insert(x, pick);
            here.insert(pick, x.row);
        }
        right = here;
    }
    Ok(labels)
}

/// Matching induced by a labeling: equal labels in adjacent columns are joined.
pub fn matching_of_labeling(labels: &Labeling) -> MatchingSequence {
    let mut by_col_label: BTreeMap<(u32, u32), Cell> = BTreeMap::new();
    for (&x, &l) in labels {
        by_col_label.insert((x.col, l), x);
    }
    let edges = labels.iter().filter(|(x, _)| x.col > 1).filter_map(|(&x, &l)| {
        by_col_label.get(&(x.col - 1, l)).map(|&y| (x, y))
    });
    MatchingSequence::from_edges(edges)
}

/// Kohnert labeling and its matching; `T` must be a Kohnert diagram of `a`.
pub fn kohnert_labeling(t: &Diagram, a: &WeakComposition) -> Result<(Labeling, MatchingSequence)> {
    if !kd_membership(t, a) {
        return Err(not_member("diagram is not a Kohnert diagram of the composition"));
    }
    let labels = labeling_unchecked(t, a)?;
    let m = matching_of_labeling(&labels);
    Ok((labels, m))
}

/// Anchor weight: part `i` counts cells on the path ending at `(1,i)`.
pub fn anchor_weight(t: &Diagram, m: &MatchingSequence) -> WeakComposition {
    let mut w = WeakComposition::zeros(t.max_row() as usize);
    for &x in t.column(1) {
        w.set(x.row as usize, path_length(m, x) as u32);
    }
    w
}

/// Number of cells in the connected component of `x`.
pub fn path_length(m: &MatchingSequence, x: Cell) -> usize {
    let sources = m.sources_of();
    component_size(m, &sources, x)
}

fn component_size(m: &MatchingSequence, sources: &BTreeMap<Cell, Cell>, x: Cell) -> usize {
    let mut n = 1;
    let mut cur = x;
    while let Some(y) = m.target(cur) {
        n += 1;
        cur = y;
    }
    cur = x;
    while let Some(&s) = sources.get(&cur) {
        n += 1;
        cur = s;
    }
    n
}

/// Component sizes for every cell of `t`.
pub fn path_lengths(t: &Diagram, m: &MatchingSequence) -> BTreeMap<Cell, usize> {
    let sources = m.sources_of();
    t.cells().iter().map(|&x| (x, component_size(m, &sources, x))).collect()
}

/// Checks that `m` is a total matching sequence on `t`.
pub fn validate_matching(t: &Diagram, m: &MatchingSequence) -> bool {
    let mut targets = BTreeSet::new();
    for (x, y) in m.edges() {
        if !t.contains(x) || !t.contains(y) {
            return false;
        }
        if x.col != y.col + 1 || y.row < x.row {
            return false;
        }
        if !targets.insert(y) {
            return false;
        }
    }
    t.cells().iter().filter(|x| x.col > 1).all(|&x| m.target(x).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::key_diagram;

    fn fig_thread() -> Diagram {
        // by column: 1:{1,2,3,5} 2:{1,3,5} 3:{1,2,4} 4:{1,2,3} 5:{2}
        Diagram::from_pairs(&[
            (1, 1), (1, 2), (1, 3), (1, 5),
            (2, 1), (2, 3), (2, 5),
            (3, 1), (3, 2), (3, 4),
            (4, 1), (4, 2), (4, 3),
            (5, 2),
        ])
    }

    #[test]
    fn thread_weight_of_example() {
        let d = thread_decomposition(&fig_thread());
        assert!(d.is_anchored());
        assert_eq!(d.weight, WeakComposition::from([4, 1, 5, 0, 4]));
        assert!(validate_matching(&fig_thread(), &d.matching));
    }

    #[test]
    fn thread_weight_of_key_and_singleton() {
        let b = WeakComposition::from([2, 0, 3, 1]);
        assert_eq!(thread_weight(&key_diagram(&b)), b);
        assert_eq!(thread_weight(&Diagram::from_pairs(&[(1, 1)])), WeakComposition::from([1]));
    }

    #[test]
    fn unanchored_thread_flagged() {
        let d = thread_decomposition(&Diagram::from_pairs(&[(1, 1), (2, 2)]));
        assert_eq!(d.unanchored, alloc::vec![Cell::new(2, 2)]);
    }

    #[test]
    fn labeling_of_key() {
        let a = WeakComposition::from([2, 0, 3]);
        let (labels, m) = kohnert_labeling(&key_diagram(&a), &a).unwrap();
        assert!(labels.iter().all(|(x, &l)| x.row == l));
        assert_eq!(anchor_weight(&key_diagram(&a), &m), a);
    }

    #[test]
    fn bad_edge_rejected() {
        let t = Diagram::from_pairs(&[(1, 1), (2, 3)]);
        let m = MatchingSequence::from_edges([(Cell::new(2, 3), Cell::new(1, 1))]);
        assert!(!validate_matching(&t, &m));
    }
}
