use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::error::{invalid, not_member, Error, Result};
use crate::expand::{key_expand_with, KeyCache, SignedKeyExpansion};
use crate::polynomial::Polynomial;
use crate::space::key_polynomial;

/// A cell `(col, row)` that can be added to a composition, with its support composition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AddableCell {
    pub col: u32,
    pub row: usize,
    pub support: WeakComposition,
}

fn is_addable(a: &WeakComposition, c: u32, r: usize) -> bool {
    a.get(r) < c && (r..=a.len()).any(|s| a.get(s) + 1 == c)
}

/// Candidate columns for additions: one past each part.
fn candidate_columns(a: &WeakComposition) -> BTreeSet<u32> {
    a.parts().iter().map(|&p| p + 1).collect()
}

/// All addable cells, ordered by column then row.
pub fn addable_cells(a: &WeakComposition) -> Vec<AddableCell> {
    let mut out = Vec::new();
    for c in candidate_columns(a) {
        for r in 1..=a.len() {
            if is_addable(a, c, r) {
                let support = supp_composition(a, c, r).expect("addable");
                out.push(AddableCell { col: c, row: r, support });
            }
        }
    }
    out
}

fn is_k_addable(a: &WeakComposition, k: usize, c: u32, r: usize) -> bool {
    let ar = a.get(r);
    if r > k || ar >= c {
        return false;
    }
    if ar + 1 < c && !(k + 1..=a.len()).any(|l| a.get(l) + 1 == c) {
        return false;
    }
    (r + 1..=k).all(|i| a.get(i) < ar || a.get(i) >= c)
}

/// Addable cells weakly below row `k` satisfying the k-addable conditions.
pub fn k_addable_cells(a: &WeakComposition, k: usize) -> Vec<AddableCell> {
    let mut out = Vec::new();
    for c in candidate_columns(a) {
        for r in 1..=k.min(a.len()) {
            if is_k_addable(a, k, c, r) {
                let support = supp_composition(a, c, r).expect("k-addable cells are addable");
                out.push(AddableCell { col: c, row: r, support });
            }
        }
    }
    out
}

/// Rows of the k-addable cells in column `c`, increasing.
pub fn row_set(a: &WeakComposition, k: usize, c: u32) -> Vec<usize> {
    (1..=k.min(a.len())).filter(|&r| is_k_addable(a, k, c, r)).collect()
}

/// Chain `r = r_0 < r_1 < ... < r_q` of rows whose parts climb to `c - 1`.
fn support_chain(a: &WeakComposition, c: u32, r: usize) -> Vec<usize> {
    let mut chain = alloc::vec![r];
    let mut cur = r;
    while a.get(cur) + 1 != c {
        let lo = a.get(cur);
        let next = (cur + 1..=a.len())
            .find(|&s| a.get(s) > lo && a.get(s) < c)
            .expect("addable cells have a supporting row");
        chain.push(next);
        cur = next;
    }
    chain
}

/// Maximal support composition for an addable cell: row `r` receives `c - 1` and each
/// row of the climbing chain receives the part of its predecessor.
pub fn supp_composition(a: &WeakComposition, c: u32, r: usize) -> Result<WeakComposition> {
    if r == 0 || r > a.len() || !is_addable(a, c, r) {
        return Err(not_member("cell is not addable"));
    }
    let chain = support_chain(a, c, r);
    let mut b = a.clone();
    for w in chain.windows(2).rev() {
        b = b.swapped(w[0], w[1]);
    }
    Ok(b)
}

/// Maximal drop composition for column `c` and the row set `rows`.
pub fn drop_composition(a: &WeakComposition, c: u32, rows: &[usize]) -> Result<WeakComposition> {
    let mut rs: Vec<usize> = rows.to_vec();
    rs.sort_unstable();
    rs.dedup();
    let Some(&top) = rs.last() else {
        return Err(invalid("row set must be nonempty"));
    };
    if rs.iter().any(|&r| !is_addable(a, c, r)) {
        return Err(not_member("row set contains a row that is not addable in this column"));
    }
    let mut b = supp_composition(a, c, top)?;
    for w in rs.windows(2).rev() {
        b = b.swapped(w[0], w[1]);
    }
    Ok(b)
}

/// Signed key expansion of `kappa_a * (x_1 + ... + x_k)` by inclusion-exclusion over row sets.
pub fn pieri_signed_expansion(a: &WeakComposition, k: usize) -> Result<SignedKeyExpansion> {
    if k == 0 || k > a.len() {
        return Err(invalid("row bound k must satisfy 1 <= k <= n"));
    }
    let mut out = SignedKeyExpansion::new();
    for c in candidate_columns(a) {
        out.add_all(&column_expansion(a, k, c)?)?;
    }
    Ok(out)
}

/// The terms of the signed expansion contributed by the k-addable cells of column `c`.
pub fn column_expansion(a: &WeakComposition, k: usize, c: u32) -> Result<SignedKeyExpansion> {
    let rows = row_set(a, k, c);
    let mut out = SignedKeyExpansion::new();
    let q = rows.len();
    if q >= usize::BITS as usize {
        return Err(Error::UnsupportedCase(format!("row set of size {q} is too large")));
    }
    for mask in 1u64..(1u64 << q) {
        let subset: Vec<usize> =
            (0..q).filter(|i| mask >> i & 1 == 1).map(|i| rows[i]).collect();
        let low = subset[0];
        let index = drop_composition(a, c, &subset)?.plus_unit(low);
        let sign = if subset.len() % 2 == 1 { 1 } else { -1 };
        out.add_term(index, sign)?;
    }
    Ok(out)
}

/// Key expansion of `kappa_a * h_m(x_1, ..., x_k)` computed from the exact product.
pub fn horizontal_strip_expansion(
    a: &WeakComposition,
    k: usize,
    m: usize,
) -> Result<SignedKeyExpansion> {
    let mut cache = KeyCache::new();
    horizontal_strip_expansion_with(a, k, m, &mut cache)
}

pub fn horizontal_strip_expansion_with(
    a: &WeakComposition,
    k: usize,
    m: usize,
    cache: &mut KeyCache,
) -> Result<SignedKeyExpansion> {
    if k == 0 || k > a.len() {
        return Err(invalid("row bound k must satisfy 1 <= k <= n"));
    }
    let product = cache.key_polynomial(a)?.mul(&Polynomial::complete_homogeneous(m as u32, k, a.len()))?;
    key_expand_with(&product, cache)
}

/// Condition (1) of vexillarity: descents are not followed by too many smaller parts.
pub fn satisfies_vex1(a: &WeakComposition) -> bool {
    let p = a.parts();
    let n = p.len();
    for i in 0..n {
        for k in i + 1..n {
            if p[i] > p[k] {
                let small = (i + 1..k).filter(|&j| p[j] < p[k]).count() as u32;
                if small > p[i] - p[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// Condition (2) of vexillarity: between `a_i <= a_k` no part dips below `a_i`.
pub fn satisfies_vex2(a: &WeakComposition) -> bool {
    let p = a.parts();
    let n = p.len();
    for i in 0..n {
        for k in i + 1..n {
            if p[i] <= p[k] && (i + 1..k).any(|j| p[j] < p[i]) {
                return false;
            }
        }
    }
    true
}

pub fn is_vexillary(a: &WeakComposition) -> bool {
    satisfies_vex1(a) && satisfies_vex2(a)
}

/// Lehmer code of a permutation in one-line notation on `1..=N`.
pub fn lehmer_code(w: &[u32]) -> Result<WeakComposition> {
    let n = w.len();
    let mut seen = alloc::vec![false; n];
    for &x in w {
        if x == 0 || x as usize > n || seen[x as usize - 1] {
            return Err(invalid("not a permutation of 1..N"));
        }
        seen[x as usize - 1] = true;
    }
    let parts = (0..n).map(|i| (i + 1..n).filter(|&j| w[i] > w[j]).count() as u32).collect();
    Ok(WeakComposition::new(parts))
}

/// Positive expansion of `kappa_a * h_m(x_1, ..., x_k)` in the cases where one exists
/// in closed form: `k = 1`, `k >= l(a)`, or `a` avoiding the second vexillary pattern.
pub fn nonneg_pieri(a: &WeakComposition, k: usize, m: usize) -> Result<SignedKeyExpansion> {
    if k == 0 || k > a.len() {
        return Err(invalid("row bound k must satisfy 1 <= k <= n"));
    }
    if !(k == 1 || k >= a.length() || satisfies_vex2(a)) {
        return Err(Error::UnsupportedCase(format!(
            "no nonnegative closed form for {a} with k = {k}"
        )));
    }
    let parts: BTreeSet<u32> = a.parts().iter().copied().collect();
    let floor = (1..=k).map(|i| a.get(i)).min().unwrap_or(0);
    let mut out = SignedKeyExpansion::new();
    let mut seq = Vec::with_capacity(m);
    extend_strip(a, k, m, &parts, floor, &mut seq, &mut out)?;
    Ok(out)
}

fn extend_strip(
    cur: &WeakComposition,
    k: usize,
    m: usize,
    parts: &BTreeSet<u32>,
    floor: u32,
    seq: &mut Vec<u32>,
    out: &mut SignedKeyExpansion,
) -> Result<()> {
    if seq.len() == m {
        return out.add_term(cur.clone(), 1);
    }
    let prev = seq.last().copied();
    let mut cands: BTreeSet<u32> = parts.iter().map(|&p| p + 1).collect();
    if let Some(p) = prev {
        cands.insert(p + 1);
    }
    for c in cands {
        let lower = prev.unwrap_or(floor);
        if c <= lower {
            continue;
        }
        let r = (1..=k)
            .rev()
            .find(|&r| cur.get(r) + 1 == c)
            .or_else(|| (1..=k).rev().find(|&r| cur.get(r) + 1 < c));
        let Some(r) = r else { continue };
        let next = supp_composition(cur, c, r)?.plus_unit(r);
        seq.push(c);
        extend_strip(&next, k, m, parts, floor, seq, out)?;
        seq.pop();
    }
    Ok(())
}

/// Check `kappa_a * (x_1 + ... + x_k)` against a signed expansion by exact arithmetic.
pub fn verify_expansion(product: &Polynomial, expansion: &SignedKeyExpansion) -> Result<bool> {
    let mut sum = Polynomial::zero(product.nvars());
    for (coeff, index) in expansion.terms() {
        sum = sum.add(&key_polynomial(index)?.scale(coeff)?)?;
    }
    Ok(sum == *product)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc<const N: usize>(p: [u32; N]) -> WeakComposition {
        WeakComposition::from(p)
    }

    #[test]
    fn three_addable_cells() {
        let a = wc([4, 1, 5, 0, 4]);
        let got: BTreeSet<(u32, usize)> = k_addable_cells(&a, 3).iter().map(|x| (x.col, x.row)).collect();
        let want: BTreeSet<(u32, usize)> = [(5, 1), (2, 2), (6, 3), (5, 2)].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn row_set_example() {
        assert_eq!(row_set(&wc([4, 6, 4, 3, 0, 1, 1, 2, 5, 4]), 6, 5), alloc::vec![3, 4, 6]);
    }

    #[test]
    fn supports() {
        assert_eq!(supp_composition(&wc([4, 1, 5, 0, 4]), 5, 2).unwrap(), wc([4, 4, 5, 0, 1]));
        assert_eq!(
            supp_composition(&wc([4, 6, 4, 3, 0, 1, 1, 2, 5, 4]), 5, 5).unwrap(),
            wc([4, 6, 4, 3, 4, 0, 1, 1, 5, 2])
        );
        assert_eq!(supp_composition(&wc([4, 1, 5, 0, 4]), 5, 1).unwrap(), wc([4, 1, 5, 0, 4]));
        assert!(supp_composition(&wc([4, 1, 5, 0, 4]), 3, 1).is_err());
    }

    #[test]
    fn drops() {
        let a = wc([4, 6, 4, 3, 0, 1, 1, 2, 5, 4]);
        assert_eq!(drop_composition(&a, 5, &[4, 6]).unwrap().plus_unit(4), wc([4, 6, 4, 5, 0, 3, 1, 1, 5, 2]));
        assert_eq!(drop_composition(&a, 5, &[3, 4, 6]).unwrap().plus_unit(3), wc([4, 6, 5, 4, 0, 3, 1, 1, 5, 2]));
        assert_eq!(drop_composition(&a, 5, &[6]).unwrap(), supp_composition(&a, 5, 6).unwrap());
    }

    #[test]
    fn vexillary_examples() {
        assert!(!satisfies_vex2(&wc([1, 4, 0, 3])));
        assert!(is_vexillary(&wc([0, 1, 4, 3])));
        assert_eq!(lehmer_code(&[1, 3, 7, 6, 2, 4, 5]).unwrap(), wc([0, 1, 4, 3, 0, 0, 0]));
        assert_eq!(lehmer_code(&[1, 2, 3]).unwrap(), wc([0, 0, 0]));
        assert!(lehmer_code(&[1, 1]).is_err());
    }
}
