use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::WeakComposition;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::space::{key_polynomial_capped, DEFAULT_CAP};

/// A signed combination of key polynomials, indexed by compositions in canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedKeyExpansion {
    terms: BTreeMap<WeakComposition, i64>,
}

impl SignedKeyExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, WeakComposition)>>(terms: I) -> Result<Self> {
        let mut e = Self::new();
        for (c, b) in terms {
            e.add_term(b, c)?;
        }
        Ok(e)
    }

    pub fn add_term(&mut self, index: WeakComposition, coeff: i64) -> Result<()> {
        let slot = self.terms.entry(index.clone()).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&index);
        }
        Ok(())
    }

    pub fn add_all(&mut self, other: &SignedKeyExpansion) -> Result<()> {
        for (c, b) in other.terms() {
            self.add_term(b.clone(), c)?;
        }
        Ok(())
    }

    /// `(coefficient, index)` pairs in canonical index order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &WeakComposition)> + '_ {
        self.terms.iter().map(|(b, &c)| (c, b))
    }

    pub fn coeff(&self, index: &WeakComposition) -> i64 {
        self.terms.get(index).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Sum of `coeff * kappa_index` in `n` variables.
    pub fn recombine(&self, n: usize, cache: &mut KeyCache) -> Result<Polynomial> {
        let mut p = Polynomial::zero(n);
        for (c, b) in self.terms() {
            p = p.add(&cache.key_polynomial(b)?.scale(c)?)?;
        }
        Ok(p)
    }

    /// Render as `k[a1,a2,...]` terms.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, (c, b)) in self.terms().enumerate() {
            let parts: Vec<String> = b.parts().iter().map(|p| alloc::format!("{p}")).collect();
            let key = alloc::format!("k[{}]", parts.join(","));
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            if mag == 1 {
                s.push_str(&key);
            } else {
                s.push_str(&alloc::format!("{mag}*{key}"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Display for SignedKeyExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Memo table of key polynomials, keyed by the exact part vector.
#[derive(Clone, Debug)]
pub struct KeyCache {
    cap: usize,
    table: BTreeMap<Vec<u32>, Polynomial>,
}

impl Default for KeyCache {
    fn default() -> Self {
        Self::new()
    }
}

impl KeyCache {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        KeyCache { cap, table: BTreeMap::new() }
    }

    pub fn key_polynomial(&mut self, a: &WeakComposition) -> Result<Polynomial> {
        if let Some(p) = self.table.get(a.parts()) {
            return Ok(p.clone());
        }
        let p = key_polynomial_capped(a, self.cap)?;
        self.table.insert(a.parts().to_vec(), p.clone());
        Ok(p)
    }
}

/// Leading-term statistic: `sum_i i * b_i`.
fn rank(e: &[u32]) -> u64 {
    e.iter().enumerate().map(|(i, &x)| (i as u64 + 1) * x as u64).sum()
}

/// Expand a polynomial in the key basis by repeatedly peeling off the leading term.
pub fn key_expand(p: &Polynomial) -> Result<SignedKeyExpansion> {
    key_expand_with(p, &mut KeyCache::new())
}

pub fn key_expand_with(p: &Polynomial, cache: &mut KeyCache) -> Result<SignedKeyExpansion> {
    let n = p.nvars();
    let mut rest = p.clone();
    let mut out = SignedKeyExpansion::new();
    while let Some((lead, c)) = leading_term(&rest) {
        let b = WeakComposition::new(lead);
        let kb = cache.key_polynomial(&b)?.widened(n);
        rest = rest.sub(&kb.scale(c)?)?;
        out.add_term(b, c)?;
    }
    Ok(out)
}

fn leading_term(p: &Polynomial) -> Option<(Vec<u32>, i64)> {
    p.terms()
        .max_by(|(e1, _), (e2, _)| rank(e1).cmp(&rank(e2)).then_with(|| e1.cmp(e2)))
        .map(|(e, c)| (e.to_vec(), c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::key_polynomial;

    #[test]
    fn self_expansion() {
        let a = WeakComposition::from([0, 3, 2]);
        let e = key_expand(&key_polynomial(&a).unwrap()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&a), 1);
    }

    #[test]
    fn text_form() {
        let e = SignedKeyExpansion::from_terms([(1, WeakComposition::from([1, 0])), (-2, WeakComposition::from([0, 1]))]).unwrap();
        assert_eq!(e.to_text(), "-2*k[0,1] + k[1,0]");
    }
}
