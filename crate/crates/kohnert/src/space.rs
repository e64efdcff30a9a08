use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::diagram::{is_generic, key_diagram, kohnert_successors, weight, Diagram};
use crate::error::{invalid, Error, Result};
use crate::matching::thread_weight;
use crate::pieri::{k_addable_cells, supp_composition};
use crate::polynomial::Polynomial;

/// Default bound on the number of diagrams an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

/// The Kohnert diagrams of a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KohnertSpace {
    pub source: WeakComposition,
    pub diagrams: Vec<Diagram>,
}

/// The union of Kohnert spaces reachable by adding a horizontal strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetSpace {
    pub base: WeakComposition,
    pub k: usize,
    pub m: usize,
    pub diagrams: Vec<Diagram>,
}

/// Closure of the key diagram under Kohnert moves, breadth first.
pub fn enumerate_kd(a: &WeakComposition, cap: usize) -> Result<KohnertSpace> {
    let mut seen = BTreeSet::new();
    collect_kd(a, cap, &mut seen)?;
    Ok(KohnertSpace { source: a.clone(), diagrams: seen.into_iter().collect() })
}

fn collect_kd(a: &WeakComposition, cap: usize, seen: &mut BTreeSet<Diagram>) -> Result<()> {
    let start = key_diagram(a);
    if seen.contains(&start) {
        // every diagram of KD(a) is already present: KD is closed under moves
        return Ok(());
    }
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        for s in kohnert_successors(&t) {
            if !seen.contains(&s) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(s.clone());
                queue.push_back(s);
            }
        }
    }
    Ok(())
}

/// Generating polynomial of row weights over KD(a), in `a.len()` variables.
pub fn key_polynomial(a: &WeakComposition) -> Result<Polynomial> {
    key_polynomial_capped(a, DEFAULT_CAP)
}

pub fn key_polynomial_capped(a: &WeakComposition, cap: usize) -> Result<Polynomial> {
    let space = enumerate_kd(a, cap)?;
    let n = a.len();
    let mut p = Polynomial::zero(n);
    for t in &space.diagrams {
        p.add_monomial(weight(t).padded(n).into_parts(), 1)?;
    }
    Ok(p)
}

/// Membership in KD(a): generic with thread weight below `a` in left swap order.
pub fn kd_membership(t: &Diagram, a: &WeakComposition) -> bool {
    is_generic(t) && lswap_leq(&thread_weight(t), a)
}

/// Left swaps of `a`: exchange `a_i < a_j` with `i < j`.
fn left_swaps(a: &WeakComposition) -> impl Iterator<Item = WeakComposition> + '_ {
    let n = a.len();
    (1..=n).flat_map(move |i| {
        (i + 1..=n).filter(move |&j| a.get(i) < a.get(j)).map(move |j| a.swapped(i, j))
    })
}

/// Whether `b` is reachable from `a` by left swaps (reflexive).
pub fn lswap_leq(b: &WeakComposition, a: &WeakComposition) -> bool {
    let n = a.len().max(b.len());
    let (a, b) = (a.padded(n), b.padded(n));
    if a.sorted() != b.sorted() {
        return false;
    }
    if a == b {
        return true;
    }
    if !dominated(&b, &a) {
        return false;
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a);
    while let Some(c) = queue.pop_front() {
        for d in left_swaps(&c) {
            if d == b {
                return true;
            }
            if dominated(&b, &d) && seen.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    false
}

/// Necessary condition for `b` below `a`: every droppable count of `b` is at most that of `a`.
/// Left swaps never increase these counts, so the search prunes anything failing it.
fn dominated(b: &WeakComposition, a: &WeakComposition) -> bool {
    let n = a.len().max(b.len());
    (1..=a.max_part().max(b.max_part()))
        .all(|c| (1..=n).all(|r| b.droppable_count(c, r) <= a.droppable_count(c, r)))
}

/// All compositions below `a` in left swap order, in canonical order.
pub fn lswap_down_set(a: &WeakComposition) -> Vec<WeakComposition> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(c) = queue.pop_front() {
        for d in left_swaps(&c) {
            if seen.insert(d.clone()) {
                queue.push_back(d);
            }
        }
    }
    seen.into_iter().collect()
}

/// Maximal indices whose Kohnert spaces cover the target space of degree `m`.
///
/// Every element `b` of a degree-`m` chain lies below one of the returned compositions,
/// and each returned composition has column weight `cwt(a)` plus `m` distinct unit vectors.
pub fn target_generators(a: &WeakComposition, k: usize, m: usize) -> Result<Vec<WeakComposition>> {
    if k == 0 || k > a.len() {
        return Err(invalid("row bound k must satisfy 1 <= k <= n"));
    }
    let base_cwt = a.column_weight();
    let mut gens: BTreeSet<WeakComposition> = BTreeSet::new();
    gens.insert(a.clone());
    for _ in 0..m {
        let mut next = BTreeSet::new();
        for g in &gens {
            let used = added_columns(&g.column_weight(), &base_cwt);
            for cell in k_addable_cells(g, k) {
                if used.contains(&cell.col) {
                    continue;
                }
                next.insert(supp_composition(g, cell.col, cell.row)?.plus_unit(cell.row));
            }
        }
        gens = prune_dominated(next);
    }
    Ok(gens.into_iter().collect())
}

fn added_columns(cwt: &WeakComposition, base: &WeakComposition) -> BTreeSet<u32> {
    (1..=cwt.len()).filter(|&c| cwt.get(c) > base.get(c)).map(|c| c as u32).collect()
}

fn prune_dominated(set: BTreeSet<WeakComposition>) -> BTreeSet<WeakComposition> {
    let v: Vec<WeakComposition> = set.into_iter().collect();
    v.iter()
        .enumerate()
        .filter(|(i, b)| !v.iter().enumerate().any(|(j, c)| j != *i && c != *b && lswap_leq(b, c)))
        .map(|(_, b)| b.clone())
        .collect()
}

/// Membership test for the degree-`m` target space.
pub fn target_membership(u: &Diagram, a: &WeakComposition, k: usize, m: usize) -> Result<bool> {
    if !is_generic(u) {
        return Ok(false);
    }
    let gens = target_generators(a, k, m)?;
    let theta = thread_weight(u);
    Ok(gens.iter().any(|g| lswap_leq(&theta, g)))
}

/// Membership in the stratum: in the degree-`m` space for `k` but not for `k - 1`.
pub fn stratum_membership(u: &Diagram, a: &WeakComposition, k: usize, m: usize) -> Result<bool> {
    if !target_membership(u, a, k, m)? {
        return Ok(false);
    }
    if k == 1 {
        return Ok(true);
    }
    Ok(!target_membership(u, a, k - 1, m)?)
}

/// Enumerate the degree-`m` target space of `a` for row bound `k`.
pub fn enumerate_target_space(
    a: &WeakComposition,
    k: usize,
    m: usize,
    cap: usize,
) -> Result<TargetSpace> {
    let gens = target_generators(a, k, m)?;
    let mut seen = BTreeSet::new();
    for g in &gens {
        collect_kd(g, cap, &mut seen)?;
    }
    Ok(TargetSpace { base: a.clone(), k, m, diagrams: seen.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn kd_032_has_nine() {
        let s = enumerate_kd(&WeakComposition::from([0, 3, 2]), DEFAULT_CAP).unwrap();
        assert_eq!(s.diagrams.len(), 9);
        assert_eq!(enumerate_kd(&WeakComposition::from([3, 0, 0]), 10).unwrap().diagrams.len(), 1);
        assert_eq!(enumerate_kd(&WeakComposition::from([0, 1]), 10).unwrap().diagrams.len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let r = enumerate_kd(&WeakComposition::from([0, 3, 2]), 4);
        assert_eq!(r, Err(Error::CapExceeded { cap: 4 }));
    }

    #[test]
    fn down_set_of_032() {
        let got = lswap_down_set(&WeakComposition::from([0, 3, 2]));
        let want: Vec<WeakComposition> = vec![
            WeakComposition::from([0, 3, 2]),
            WeakComposition::from([2, 3, 0]),
            WeakComposition::from([3, 0, 2]),
            WeakComposition::from([3, 2, 0]),
        ];
        assert_eq!(got, want);
        assert!(!lswap_leq(&WeakComposition::from([1, 4, 5, 0, 4]), &WeakComposition::from([4, 1, 5, 0, 4])));
    }

    #[test]
    fn membership_examples() {
        let a = WeakComposition::from([0, 3, 2]);
        assert!(!kd_membership(&key_diagram(&WeakComposition::from([0, 2, 3])), &a));
        assert!(kd_membership(&key_diagram(&WeakComposition::from([3, 0, 2])), &a));
    }

    #[test]
    fn bottom_target_space() {
        let a = WeakComposition::from([0, 3, 2]);
        let sp = enumerate_target_space(&a, 1, 1, DEFAULT_CAP).unwrap();
        let mut want = BTreeSet::new();
        for b in [[1, 3, 2], [3, 3, 0], [4, 0, 2]] {
            want.extend(enumerate_kd(&WeakComposition::from(b), DEFAULT_CAP).unwrap().diagrams);
        }
        assert_eq!(sp.diagrams.len(), 9);
        assert_eq!(sp.diagrams, want.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn top_target_space() {
        let a = WeakComposition::from([0, 2, 1]);
        let sp = enumerate_target_space(&a, 3, 1, DEFAULT_CAP).unwrap();
        assert_eq!(sp.diagrams.len(), 15);
        let zero = enumerate_target_space(&a, 2, 0, DEFAULT_CAP).unwrap();
        assert_eq!(zero.diagrams, enumerate_kd(&a, DEFAULT_CAP).unwrap().diagrams);
    }
}
