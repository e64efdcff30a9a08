//! Exhaustive verification sweeps over small compositions.

use std::collections::{BTreeMap, BTreeSet};

use kohnert::{
    bottom_insert, bottom_remove, compositions_bounded, diagram_of_tableau, enumerate_kd,
    enumerate_ssyt, enumerate_target_space, final_moved_cell, horizontal_strip_expansion_with,
    kd_membership, key_diagram, key_expand_with, lswap_down_set, lswap_leq, nonneg_pieri,
    pieri_signed_expansion, rectify, rsk_insert, satisfies_vex2, stratum_inverse,
    stratum_map_m, stratum_map_split, stratum_membership, target_membership, top_insert,
    un_rectify, weight, Cell, Diagram, KeyCache, Polynomial, WeakComposition,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::CliError;

/// Names accepted by `verify --suite`.
pub const SUITES: [&str; 7] = [
    "bijection-count",
    "stratum-roundtrip",
    "insertion",
    "monkey-identity",
    "rsk-rect",
    "vexillary-sharpness",
    "lswap-consistency",
];

/// Ranges of a sweep. `size_max` bounds `|a|` except where a suite says otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepParams {
    pub n_max: usize,
    pub size_max: u32,
    pub k_max: usize,
    pub m_max: usize,
    pub seed: u64,
    pub cap: usize,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams { n_max: 3, size_max: 5, k_max: 3, m_max: 2, seed: 0, cap: kohnert::DEFAULT_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "instances": self.instances,
            "pass": self.passed(),
            "failures": self.failures.iter().map(|f| json!({
                "input": f.input, "expected": f.expected, "actual": f.actual,
            })).collect::<Vec<_>>(),
        })
    }
}

type Outcome = Result<Vec<Failure>, CliError>;

fn fail(input: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Failure {
    Failure { input: input.into(), expected: expected.into(), actual: actual.into() }
}

fn check(cond: bool, out: &mut Vec<Failure>, input: &str, expected: &str, actual: impl FnOnce() -> String) {
    if !cond {
        out.push(fail(input, expected, actual()));
    }
}

/// Run `f` over `instances` in parallel with one key cache per worker; failures come back sorted.
fn run<T, F>(suite: &str, p: &SweepParams, instances: Vec<T>, f: F) -> Result<VerificationReport, CliError>
where
    T: Send + Sync,
    F: Fn(&T, &mut KeyCache) -> Outcome + Sync,
{
    let results: Vec<Outcome> = instances
        .par_iter()
        .map_init(|| KeyCache::with_cap(p.cap), |cache, inst| f(inst, cache))
        .collect();
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    failures.sort();
    Ok(VerificationReport { suite: suite.to_string(), seed: p.seed, instances: instances.len(), failures })
}

pub fn run_suite(name: &str, p: &SweepParams) -> Result<VerificationReport, CliError> {
    match name {
        "bijection-count" => bijection_count(p),
        "stratum-roundtrip" => stratum_roundtrip(p),
        "insertion" => insertion(p),
        "monkey-identity" => monkey_identity(p),
        "rsk-rect" => rsk_rect(p),
        "vexillary-sharpness" => vexillary_sharpness(p),
        "lswap-consistency" => lswap_consistency(p),
        other => Err(CliError::BadInput(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Compositions of every length `1..=n_max` with `|a| <= size_max`.
pub fn sweep(p: &SweepParams) -> Vec<WeakComposition> {
    (1..=p.n_max).flat_map(|n| compositions_bounded(n, p.size_max, p.size_max as u64)).collect()
}

fn triples(p: &SweepParams, k_min: usize) -> Vec<(WeakComposition, usize, usize)> {
    let mut out = Vec::new();
    for a in sweep(p) {
        for k in k_min..=p.k_max.min(a.len()) {
            for m in 1..=p.m_max {
                out.push((a.clone(), k, m));
            }
        }
    }
    out
}

fn label(a: &WeakComposition, k: usize, m: usize) -> String {
    format!("a={a} k={k} m={m}")
}

fn weight_counts(ds: &[Diagram], n: usize) -> Result<Polynomial, CliError> {
    let mut p = Polynomial::zero(n);
    for d in ds {
        p.add_monomial(weight(d).padded(n).into_parts(), 1)?;
    }
    Ok(p)
}

/// Per-weight counts of the target space against `kappa_a * h_m(x_1..x_k)`.
fn bijection_count(p: &SweepParams) -> Result<VerificationReport, CliError> {
    run("bijection-count", p, triples(p, 1), |(a, k, m), cache| {
        let n = a.len();
        let product = cache.key_polynomial(a)?.mul(&Polynomial::complete_homogeneous(*m as u32, *k, n))?;
        let space = enumerate_target_space(a, *k, *m, p.cap)?;
        let counts = weight_counts(&space.diagrams, n)?;
        let mut out = Vec::new();
        check(counts == product, &mut out, &label(a, *k, *m), &product.to_text(), || counts.to_text());
        Ok(out)
    })
}

/// Stratum maps: image, injectivity and the inverse for degree 1; image and injectivity above.
fn stratum_roundtrip(p: &SweepParams) -> Result<VerificationReport, CliError> {
    run("stratum-roundtrip", p, triples(p, 2), |(a, k, m), _| {
        let (a, k, m) = (a, *k, *m);
        let input = label(a, k, m);
        let mut out = Vec::new();
        let space = enumerate_target_space(a, k, m, p.cap)?;
        let mut images: BTreeMap<Diagram, Diagram> = BTreeMap::new();
        for u in &space.diagrams {
            if !stratum_membership(u, a, k, m)? {
                continue;
            }
            let at = format!("{input} U={}", u.cells().len());
            let v = if m == 1 {
                match stratum_map_split(u, a, k) {
                    Ok((v, _)) => v,
                    Err(e) => {
                        out.push(fail(format!("{at} {u:?}"), "stratum map defined", e.to_string()));
                        continue;
                    }
                }
            } else {
                match stratum_map_m(u, a, k, m) {
                    Ok(v) => v,
                    Err(e) => {
                        out.push(fail(format!("{at} {u:?}"), "degree-m stratum map defined", e.to_string()));
                        continue;
                    }
                }
            };
            let landed = if m == 1 { kd_membership(&v, a) } else { target_membership(&v, a, k, m - 1)? };
            check(landed, &mut out, &format!("{input} U={u:?}"), "image in lower space", || format!("{v:?}"));
            if m == 1 {
                let c = kohnert::added_column(u, a)?;
                let back = stratum_inverse(&v, a, k, c);
                check(back.as_ref() == Ok(u), &mut out, &format!("{input} V={v:?}"), &format!("{u:?}"), || {
                    format!("{back:?}")
                });
            }
            if let Some(prev) = images.insert(v.clone(), u.clone()) {
                out.push(fail(format!("{input} V={v:?}"), "injective", format!("preimages {prev:?} and {u:?}")));
            }
        }
        Ok(out)
    })
}

/// Bottom insertion onto the k = 1 space and top insertion for every k >= l(a).
fn insertion(p: &SweepParams) -> Result<VerificationReport, CliError> {
    run("insertion", p, sweep(p), |a, _| {
        let mut out = Vec::new();
        let kd = enumerate_kd(a, p.cap)?.diagrams;
        let d1: BTreeSet<Diagram> = enumerate_target_space(a, 1, 1, p.cap)?.diagrams.into_iter().collect();
        let bottom: BTreeSet<Diagram> = kd.iter().map(bottom_insert).collect();
        check(bottom == d1, &mut out, &format!("a={a} bottom"), &format!("{} diagrams", d1.len()), || {
            format!("{} distinct images, equal sets: false", bottom.len())
        });
        for t in &kd {
            let back = bottom_remove(&bottom_insert(t), a);
            check(back.as_ref() == Ok(t), &mut out, &format!("a={a} remove"), &format!("{t:?}"), || {
                format!("{back:?}")
            });
        }
        let new_col = a.max_part() + 1;
        for k in a.length().max(1)..=p.k_max.min(a.len()) {
            let dk: BTreeSet<Diagram> = enumerate_target_space(a, k, 1, p.cap)?.diagrams.into_iter().collect();
            let mut images = BTreeSet::new();
            for t in &kd {
                for j in 1..=k as u32 {
                    let v = top_insert(t, j)?;
                    let input = format!("a={a} k={k} T={t:?} j={j}");
                    let c = kohnert::added_column(&v, a);
                    let back = c
                        .ok()
                        .and_then(|c| final_moved_cell(&v, c))
                        .and_then(|y| un_rectify(&v, y, new_col).ok());
                    let want = t.with(Cell::new(new_col, j));
                    check(back.as_ref() == Some(&want), &mut out, &input, &format!("{want:?}"), || {
                        format!("{back:?}")
                    });
                    images.insert(v);
                }
            }
            check(images.len() == kd.len() * k, &mut out, &format!("a={a} k={k} top"), "injective", || {
                format!("{} distinct images of {}", images.len(), kd.len() * k)
            });
            check(images == dk, &mut out, &format!("a={a} k={k} top"), "onto the target space", || {
                format!("{} images, {} targets", images.len(), dk.len())
            });
        }
        Ok(out)
    })
}

/// Signed formula against the exact product and against the expansion oracle.
fn monkey_identity(p: &SweepParams) -> Result<VerificationReport, CliError> {
    let pairs: Vec<(WeakComposition, usize)> =
        triples(p, 1).into_iter().filter(|t| t.2 == 1).map(|(a, k, _)| (a, k)).collect();
    run("monkey-identity", p, pairs, |(a, k), cache| {
        let input = format!("a={a} k={k}");
        let mut out = Vec::new();
        let formula = pieri_signed_expansion(a, *k)?;
        let product = cache.key_polynomial(a)?.mul(&Polynomial::complete_homogeneous(1, *k, a.len()))?;
        let sum = formula.recombine(a.len(), cache)?;
        check(sum == product, &mut out, &input, &product.to_text(), || sum.to_text());
        let oracle = key_expand_with(&product, cache)?;
        check(oracle == formula, &mut out, &input, &oracle.to_text(), || formula.to_text());
        Ok(out)
    })
}

fn partitions_in_box(rows: usize, cols: u32) -> Vec<Vec<u32>> {
    fn rec(left: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Row insertion against rectification, for shapes inside a `size_max` square.
fn rsk_rect(p: &SweepParams) -> Result<VerificationReport, CliError> {
    let mut cases = Vec::new();
    for n in 1..=p.n_max as u32 {
        for shape in partitions_in_box((n as usize).min(p.size_max as usize), p.size_max) {
            cases.push((shape, n));
        }
    }
    run("rsk-rect", p, cases, |(shape, n), _| {
        let mut out = Vec::new();
        let n = *n;
        let width = shape.first().copied().unwrap_or(0);
        for t in enumerate_ssyt(shape, n) {
            let d = diagram_of_tableau(&t, n)?;
            for j in 1..=n {
                let want = diagram_of_tableau(&rsk_insert(&t, j)?, n)?;
                let got = rectify(&d.with(Cell::new(width + 1, n + 1 - j))).result;
                check(got == want, &mut out, &format!("n={n} T={:?} j={j}", t.rows()), &format!("{want:?}"), || {
                    format!("{got:?}")
                });
            }
        }
        Ok(out)
    })
}

/// Nonnegativity for all k against the second vexillary condition, for each m.
/// Here `size_max` bounds each part rather than the size.
fn vexillary_sharpness(p: &SweepParams) -> Result<VerificationReport, CliError> {
    let mut cases = Vec::new();
    for n in 1..=p.n_max {
        for a in compositions_bounded(n, p.size_max, n as u64 * p.size_max as u64) {
            for m in 1..=p.m_max {
                cases.push((a.clone(), m));
            }
        }
    }
    run("vexillary-sharpness", p, cases, |(a, m), cache| {
        let mut out = Vec::new();
        let vex = satisfies_vex2(a);
        let mut nonneg = true;
        for k in 1..=a.len() {
            let e = horizontal_strip_expansion_with(a, k, *m, cache)?;
            nonneg &= e.is_nonnegative();
            if vex || k == 1 || k >= a.length() {
                let closed = nonneg_pieri(a, k, *m)?;
                check(closed == e, &mut out, &format!("a={a} k={k} m={m} closed form"), &e.to_text(), || {
                    closed.to_text()
                });
            }
        }
        check(nonneg == vex, &mut out, &format!("a={a} m={m}"), &format!("nonnegative for all k: {vex}"), || {
            format!("nonnegative for all k: {nonneg}")
        });
        Ok(out)
    })
}

/// Left-swap order against key-diagram membership, over all rearrangements.
fn lswap_consistency(p: &SweepParams) -> Result<VerificationReport, CliError> {
    run("lswap-consistency", p, sweep(p), |a, _| {
        let mut out = Vec::new();
        let kd: BTreeSet<Diagram> = enumerate_kd(a, p.cap)?.diagrams.into_iter().collect();
        let down: BTreeSet<WeakComposition> = lswap_down_set(a).into_iter().collect();
        for b in rearrangements(a) {
            let by_kd = kd.contains(&key_diagram(&b));
            let input = format!("a={a} b={b}");
            check(lswap_leq(&b, a) == by_kd, &mut out, &input, &format!("{by_kd}"), || format!("{}", !by_kd));
            check(down.contains(&b) == by_kd, &mut out, &input, "down set agrees", || format!("{}", !by_kd));
        }
        Ok(out)
    })
}

fn rearrangements(a: &WeakComposition) -> Vec<WeakComposition> {
    let mut parts = a.parts().to_vec();
    parts.sort_unstable();
    let mut out = vec![WeakComposition::new(parts.clone())];
    while next_permutation(&mut parts) {
        out.push(WeakComposition::new(parts.clone()));
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a larger successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
