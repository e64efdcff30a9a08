use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::diagram::{column_weight, key_diagram, Cell, Diagram};
use crate::error::{invalid, not_member, Result};
use crate::insertion::rectify;
use crate::matching::{labeling_unchecked, matching_of_labeling, path_lengths, thread_decomposition, thread_weight};
use crate::space::{kd_membership, stratum_membership};

/// The pieces of a stratum element used by the stratum map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumSplit {
    pub u_plus: Diagram,
    pub u_minus: Diagram,
    /// Cells labeled `k`, left to right; the first sits at `(1,k)`.
    pub u_eq_k: Vec<Cell>,
    pub u_plus_star: Diagram,
    /// Cells moved while rectifying `u_plus_star`, at their final positions.
    pub rect_path: Vec<Cell>,
}

/// A Kohnert diagram of `a` plus a horizontal strip of added cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DropDecomposition {
    pub base: Diagram,
    pub added: Vec<Cell>,
}

/// Columns `c` where `cwt(U)` exceeds `cwt(a)`; fails unless the excess is a 0/1 vector.
pub fn added_column_set(u: &Diagram, a: &WeakComposition, m: usize) -> Result<Vec<u32>> {
    let cu = column_weight(u);
    let ca = a.column_weight();
    let n = cu.len().max(ca.len());
    let mut cols = Vec::new();
    for c in 1..=n {
        match cu.get(c) as i64 - ca.get(c) as i64 {
            0 => {}
            1 => cols.push(c as u32),
            _ => return Err(not_member("column weights do not differ by distinct unit vectors")),
        }
    }
    if cols.len() != m {
        return Err(not_member("wrong number of added columns"));
    }
    Ok(cols)
}

/// The unique column gaining a cell relative to `a`.
pub fn added_column(u: &Diagram, a: &WeakComposition) -> Result<u32> {
    Ok(added_column_set(u, a, 1)?[0])
}

/// `theta(key_{theta(U)} minus (c,k))`, or an error if that cell is absent.
fn excise(theta: &WeakComposition, c: u32, k: usize) -> Result<WeakComposition> {
    if theta.get(k) < c {
        return Err(not_member("key diagram of the thread weight lacks the excised cell"));
    }
    let key = key_diagram(theta).without(Cell::new(c, k as u32));
    Ok(thread_weight(&key).padded(theta.len()))
}

fn check_row(a: &WeakComposition, k: usize) -> Result<()> {
    if k == 0 || k > a.len() {
        return Err(invalid("row bound k must satisfy 1 <= k <= n"));
    }
    Ok(())
}

/// Excised weight of a stratum element.
pub fn excised_weight(u: &Diagram, a: &WeakComposition, k: usize) -> Result<WeakComposition> {
    check_row(a, k)?;
    if !stratum_membership(u, a, k, 1)? {
        return Err(not_member("diagram is not in the stratum"));
    }
    let c = added_column(u, a)?;
    let theta = thread_weight(u).padded(a.len().max(u.max_row() as usize));
    excise(&theta, c, k)
}

fn split_with(u: &Diagram, b: &WeakComposition, k: usize, c: u32) -> Result<StratumSplit> {
    let labels = labeling_unchecked(u, &b.plus_unit(k))?;
    let matching = matching_of_labeling(&labels);
    let lengths = path_lengths(u, &matching);
    let (plus, minus): (Vec<Cell>, Vec<Cell>) =
        u.cells().iter().copied().partition(|x| lengths[x] >= c as usize);
    let u_eq_k: Vec<Cell> =
        labels.iter().filter(|&(_, &l)| l as usize == k).map(|(&x, _)| x).collect();
    let w1 = Cell::new(1, k as u32);
    if u_eq_k.first() != Some(&w1) {
        return Err(not_member("first cell labeled k is not at (1,k)"));
    }
    let u_plus = Diagram::from_cells(plus)?;
    Ok(StratumSplit {
        u_plus_star: u_plus.without(w1),
        u_plus,
        u_minus: Diagram::from_cells(minus)?,
        u_eq_k,
        rect_path: Vec::new(),
    })
}

/// Split a stratum element into the parts used by the stratum map.
pub fn stratum_split(u: &Diagram, a: &WeakComposition, k: usize) -> Result<StratumSplit> {
    let b = excised_weight(u, a, k)?;
    let c = added_column(u, a)?;
    split_with(u, &b, k, c)
}

/// Stratum map together with its split, the rectification path filled in.
pub fn stratum_map_split(u: &Diagram, a: &WeakComposition, k: usize) -> Result<(Diagram, StratumSplit)> {
    let b = excised_weight(u, a, k)?;
    let c = added_column(u, a)?;
    let mut split = split_with(u, &b, k, c)?;
    let trace = rectify(&split.u_plus_star);
    if !trace.result.is_disjoint(&split.u_minus) {
        return Err(not_member("rectified part meets the short components"));
    }
    split.rect_path = trace.steps.iter().map(|&(_, to)| to).collect();
    Ok((trace.result.union(&split.u_minus), split))
}

/// Stratum map: rectify the long components without `(1,k)` and put back the rest.
pub fn stratum_map(u: &Diagram, a: &WeakComposition, k: usize) -> Result<Diagram> {
    Ok(stratum_map_split(u, a, k)?.0)
}

/// Recover a stratum element from its image and added column.
pub fn stratum_inverse(v: &Diagram, a: &WeakComposition, k: usize, c: u32) -> Result<Diagram> {
    check_row(a, k)?;
    if c == 0 {
        return Err(invalid("column index must be positive"));
    }
    let threads = thread_decomposition(v);
    if !threads.is_anchored() {
        return Err(not_member("image is not generic"));
    }
    let lengths = path_lengths(v, &threads.matching);
    let mut path: Vec<Cell> = Vec::new();
    let mut ceiling = k as u32;
    for i in 1..c {
        let y = v
            .column(i)
            .iter()
            .rev()
            .copied()
            .find(|x| x.row <= ceiling && lengths[x] < c as usize)
            .ok_or_else(|| not_member("rectification path cannot be recovered"))?;
        ceiling = y.row;
        path.push(y);
    }
    let mut u = v.clone();
    for y in path.iter().rev() {
        let back = Cell::new(y.col + 1, y.row);
        if u.contains(back) {
            return Err(not_member("reverse move blocked"));
        }
        u.relocate(*y, back);
    }
    let w1 = Cell::new(1, k as u32);
    if !u.insert(w1) {
        return Err(not_member("position (1,k) already occupied"));
    }
    match stratum_map(&u, a, k) {
        Ok(img) if img == *v => Ok(u),
        _ => Err(not_member("reconstruction does not map back to the image")),
    }
}

/// `#{x in T : col(x) = c, row(x) >= r}`.
pub fn droppable_count(t: &Diagram, c: u32, r: u32) -> u32 {
    t.droppable_count(c, r)
}

/// `#{j >= r : a_j >= c}`.
pub fn droppable_count_composition(a: &WeakComposition, c: u32, r: usize) -> u32 {
    a.droppable_count(c, r)
}

/// A split of `U` into a Kohnert diagram of `a` and a horizontal strip weakly below row `k`.
///
/// Any such split places its strip in the added columns, so the search ranges over one
/// cell per added column.
pub fn find_drop_decomposition(
    u: &Diagram,
    a: &WeakComposition,
    k: usize,
    m: usize,
) -> Option<DropDecomposition> {
    let cols = added_column_set(u, a, m).ok()?;
    let options: Vec<Vec<Cell>> = cols
        .iter()
        .map(|&c| u.column(c).iter().copied().filter(|x| x.row as usize <= k).collect())
        .collect();
    let mut pick = Vec::with_capacity(m);
    search_drop(u, a, &options, &mut pick)
}

fn search_drop(
    u: &Diagram,
    a: &WeakComposition,
    options: &[Vec<Cell>],
    pick: &mut Vec<Cell>,
) -> Option<DropDecomposition> {
    if pick.len() == options.len() {
        let mut base = u.clone();
        for &x in pick.iter() {
            base.remove(x);
        }
        return kd_membership(&base, a).then(|| DropDecomposition { base, added: pick.clone() });
    }
    for &x in &options[pick.len()] {
        pick.push(x);
        if let Some(d) = search_drop(u, a, options, pick) {
            return Some(d);
        }
        pick.pop();
    }
    None
}

/// Degree-(m-1) excised weight and the excised column of a degree-`m` stratum element.
pub fn degree_m_excised_weight(
    u: &Diagram,
    a: &WeakComposition,
    k: usize,
    m: usize,
) -> Result<(WeakComposition, u32)> {
    check_row(a, k)?;
    if !stratum_membership(u, a, k, m)? {
        return Err(not_member("diagram is not in the degree-m stratum"));
    }
    let cols = added_column_set(u, a, m)?;
    let theta = thread_weight(u).padded(a.len().max(u.max_row() as usize));
    let c = cols
        .iter()
        .rev()
        .copied()
        .find(|&c| theta.droppable_count(c, k) > a.droppable_count(c, k))
        .ok_or_else(|| not_member("no added column drops below row k"))?;
    Ok((excise(&theta, c, k)?, c))
}

/// Degree-`m` stratum map: the ordinary stratum map for the degree-(m-1) excised weight.
pub fn stratum_map_m(u: &Diagram, a: &WeakComposition, k: usize, m: usize) -> Result<Diagram> {
    let (b, _) = degree_m_excised_weight(u, a, k, m)?;
    stratum_map(u, &b, k)
}

/// Whether every added column satisfies the no-drop criterion, which places `U` in the
/// target space for row bound `k - 1`.
pub fn below_row_criterion(u: &Diagram, a: &WeakComposition, k: usize, m: usize) -> Result<bool> {
    let cols = added_column_set(u, a, m)?;
    let theta = thread_weight(u);
    Ok(cols.iter().all(|&c| theta.droppable_count(c, k) <= a.droppable_count(c, k)))
}

/// Distinct values check used by sweeps.
pub fn all_distinct<T: Ord + Clone>(items: &[T]) -> bool {
    let set: BTreeSet<T> = items.iter().cloned().collect();
    set.len() == items.len()
}
