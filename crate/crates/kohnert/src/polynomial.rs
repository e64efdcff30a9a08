use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Sparse polynomial in `x_1..x_n` with checked `i64` coefficients.
///
/// Exponent vectors all have length `n`; zero coefficients are never stored.
#[derive(Clone, Debug, Default)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(alloc::vec![0; nvars], 1)
    }

    pub fn monomial(exp: Vec<u32>, coeff: i64) -> Self {
        let mut p = Self::zero(exp.len());
        if coeff != 0 {
            p.terms.insert(exp, coeff);
        }
        p
    }

    /// `x_i` in `nvars` variables.
    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    /// Complete homogeneous symmetric polynomial `h_m(x_1..x_k)`, embedded in `nvars` variables.
    pub fn complete_homogeneous(m: u32, k: usize, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        let mut e = alloc::vec![0u32; nvars];
        fn rec(i: usize, left: u32, k: usize, e: &mut Vec<u32>, p: &mut Polynomial) {
            if i + 1 == k {
                e[i] = left;
                p.terms.insert(e.clone(), 1);
                e[i] = 0;
                return;
            }
            for t in 0..=left {
                e[i] = t;
                rec(i + 1, left - t, k, e, p);
            }
            e[i] = 0;
        }
        if k == 0 {
            return if m == 0 { Self::one(nvars) } else { p };
        }
        rec(0, m, k, &mut e, &mut p);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> i64 {
        let mut e = exp.to_vec();
        e.resize(self.nvars.max(e.len()), 0);
        if e.len() > self.nvars && e[self.nvars..].iter().any(|&x| x > 0) {
            return 0;
        }
        e.truncate(self.nvars);
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Copy of `self` in `n >= nvars` variables.
    pub fn widened(&self, n: usize) -> Self {
        assert!(n >= self.nvars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e = e.clone();
                e.resize(n, 0);
                (e, c)
            })
            .collect();
        Polynomial { nvars: n, terms }
    }

    pub fn add_monomial(&mut self, mut exp: Vec<u32>, coeff: i64) -> Result<()> {
        if exp.len() > self.nvars {
            *self = self.widened(exp.len());
        }
        exp.resize(self.nvars, 0);
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        let n = self.nvars.max(other.nvars);
        let mut out = self.widened(n);
        for (e, &c) in &other.terms {
            out.add_monomial(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Polynomial> {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg()?)
    }

    pub fn scale(&self, k: i64) -> Result<Polynomial> {
        let mut out = Self::zero(self.nvars);
        if k == 0 {
            return Ok(out);
        }
        for (e, &c) in &self.terms {
            out.terms.insert(e.clone(), c.checked_mul(k).ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let n = self.nvars.max(other.nvars);
        let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let mut e = alloc::vec![0u32; n];
                for (i, x) in e.iter_mut().enumerate() {
                    let a = e1.get(i).copied().unwrap_or(0);
                    let b = e2.get(i).copied().unwrap_or(0);
                    *x = a.checked_add(b).ok_or(Error::Overflow)?;
                }
                let prod = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                let slot = acc.entry(e).or_insert(0);
                *slot = slot.checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(Polynomial { nvars: n, terms: acc })
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u64).sum()).max()
    }

    /// Render with variables `x1, x2, ...`, terms in descending lexicographic exponent order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, (e, &c)) in self.terms.iter().rev().enumerate() {
            let mono = monomial_text(e);
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            match (mag, mono.is_empty()) {
                (1, false) => s.push_str(&mono),
                (_, true) => s.push_str(&alloc::format!("{mag}")),
                (_, false) => s.push_str(&alloc::format!("{mag}*{mono}")),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

fn monomial_text(e: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        match x {
            0 => {}
            1 => parts.push(alloc::format!("x{}", i + 1)),
            _ => parts.push(alloc::format!("x{}^{}", i + 1, x)),
        }
    }
    parts.join("*")
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        let n = self.nvars.max(other.nvars);
        if self.nvars == other.nvars {
            return self.terms == other.terms;
        }
        self.widened(n).terms == other.widened(n).terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.add(q)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.mul(q)
}

pub fn poly_eq(p: &Polynomial, q: &Polynomial) -> bool {
    p == q
}
