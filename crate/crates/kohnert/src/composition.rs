use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

/// A weak composition with an explicit length.
///
/// Equality, ordering and hashing ignore trailing zeros, so `(2,3,4)` and
/// `(2,3,4,0)` compare equal while still remembering their own lengths.
#[derive(Clone, Default)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition { parts }
    }

    pub fn zeros(n: usize) -> Self {
        WeakComposition { parts: alloc::vec![0; n] }
    }

    /// The unit composition with a single 1 in row `k` (1-indexed), of length `n`.
    pub fn unit(k: usize, n: usize) -> Self {
        let mut c = Self::zeros(n.max(k));
        c.parts[k - 1] = 1;
        c
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Ambient length n.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part in row `i` (1-indexed); rows past the end read as 0.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub(crate) fn set(&mut self, i: usize, v: u32) {
        if self.parts.len() < i {
            self.parts.resize(i, 0);
        }
        self.parts[i - 1] = v;
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Largest row index with a positive part, 0 for the zero composition.
    pub fn length(&self) -> usize {
        self.trimmed().len()
    }

    pub fn max_part(&self) -> u32 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    fn trimmed(&self) -> &[u32] {
        let end = self.parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        &self.parts[..end]
    }

    /// Copy padded with zeros (or truncated of trailing zeros) to length `n`.
    ///
    /// Panics if a nonzero part would be dropped.
    pub fn padded(&self, n: usize) -> Self {
        assert!(self.length() <= n, "padding would drop a nonzero part");
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        WeakComposition { parts }
    }

    /// `self + e_k`, growing the length if needed.
    pub fn plus_unit(&self, k: usize) -> Self {
        let mut c = self.clone();
        c.set(k, c.get(k) + 1);
        c
    }

    /// Exchange rows `i` and `j` (the transposition `t_{i,j}`).
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut c = self.clone();
        let (x, y) = (c.get(i), c.get(j));
        c.set(i, y);
        c.set(j, x);
        c
    }

    /// Weakly decreasing rearrangement of the parts.
    pub fn sorted(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        WeakComposition { parts }
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        WeakComposition { parts }
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Column weight: the i-th entry counts rows with part at least i.
    pub fn column_weight(&self) -> Self {
        let m = self.max_part() as usize;
        let mut parts = alloc::vec![0u32; m];
        for &p in &self.parts {
            for slot in parts.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        WeakComposition { parts }
    }

    /// Number of rows `j >= r` with `a_j >= c`.
    pub fn droppable_count(&self, c: u32, r: usize) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(j, &p)| j + 1 >= r && p >= c)
            .count() as u32
    }

    /// Co-inversions: pairs `i < j` with `a_i < a_j`.
    pub fn coinversions(&self) -> usize {
        let p = &self.parts;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] < p[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl From<Vec<u32>> for WeakComposition {
    fn from(parts: Vec<u32>) -> Self {
        WeakComposition::new(parts)
    }
}

impl From<&[u32]> for WeakComposition {
    fn from(parts: &[u32]) -> Self {
        WeakComposition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for WeakComposition {
    fn from(parts: [u32; N]) -> Self {
        WeakComposition::new(parts.to_vec())
    }
}

impl PartialEq for WeakComposition {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for WeakComposition {}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl Hash for WeakComposition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}

/// All weak compositions of length `n` with parts in `0..=max_part` and size at most `max_size`.
pub fn compositions_bounded(n: usize, max_part: u32, max_size: u64) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u32; n];
    fn rec(
        i: usize,
        left: u64,
        max_part: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<WeakComposition>,
    ) {
        if i == cur.len() {
            out.push(WeakComposition::new(cur.clone()));
            return;
        }
        let top = (max_part as u64).min(left) as u32;
        for p in 0..=top {
            cur[i] = p;
            rec(i + 1, left - p as u64, max_part, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_size, max_part, &mut cur, &mut out);
    out
}
