//! Jantzen-Seitz partitions: the chain criterion, the crystal ε-profile
//! criterion, the graded sets `JS(n, μ, d)` and their generating series.

use serde::Serialize;

use crate::cores::{core_and_weight, is_core, is_rectangle_le_n};
use crate::crystal::epsilon_vector;
use crate::error::{check_rank, Error};
use crate::par;
use crate::partition::{enumerate_partitions, Partition, PartitionFilter};
use crate::paths::{branching, satisfies_chain, Method};

/// The chain criterion: `λ` is n-regular and either has at most one
/// distinct part or every consecutive pair satisfies
/// `a_i + λ_i − λ_{i+1} + a_{i+1} ≡ 0 (mod n)`.
pub fn is_js(lambda: &Partition, n: usize) -> bool {
    lambda.is_regular(n) && satisfies_chain(lambda, n)
}

/// The ε-profile criterion: at most one `ε_i` is nonzero, and it is 1.
pub fn is_js_by_crystal(lambda: &Partition, n: usize) -> bool {
    if !lambda.is_regular(n) {
        return false;
    }
    let eps = epsilon_vector(lambda, n);
    eps.iter().all(|&e| e <= 1) && eps.iter().filter(|&&e| e > 0).count() <= 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JsRecord {
    pub partition: Partition,
    /// `(λ_1 − a_1) mod n`.
    pub j: usize,
    /// Canonical `k` of the branching function the partition counts toward.
    pub k: usize,
    pub core: Partition,
    pub weight: usize,
    pub energy: usize,
}

impl JsRecord {
    /// `E(λ) − d`, which equals `min(k, l)` for the core `(k^l)`.
    pub fn energy_shift(&self) -> usize {
        self.energy - self.weight
    }
}

pub fn js_record(lambda: &Partition, n: usize) -> Option<JsRecord> {
    if !is_js(lambda, n) {
        return None;
    }
    let j = crate::paths::fow_index(lambda, n)?;
    let k = crate::paths::fow_k(lambda, n)?;
    let (core, weight) = core_and_weight(lambda, n);
    Some(JsRecord { partition: lambda.clone(), j, k, core, weight, energy: lambda.energy(n) })
}

fn require_core(mu: &Partition, n: usize) -> Result<(), Error> {
    check_rank(n)?;
    if !is_core(mu, n) {
        return Err(Error::NotACore { core: mu.to_string(), n });
    }
    Ok(())
}

/// `JS(n, μ, d)` in lexicographically decreasing order.
pub fn js_set(n: usize, mu: &Partition, d: usize) -> Result<Vec<Partition>, Error> {
    require_core(mu, n)?;
    let candidates = enumerate_partitions(mu.size() + n * d, PartitionFilter::Regular(n));
    Ok(par::filter_slice(&candidates, |lam| {
        is_js(lam, n) && core_and_weight(lam, n).0 == *mu
    })
    .into_iter()
    .cloned()
    .collect())
}

/// `#JS(n, μ, d)` for `d = 0..=order`.
pub fn chi_direct(n: usize, mu: &Partition, order: usize) -> Result<Vec<u64>, Error> {
    require_core(mu, n)?;
    let sizes = par::map_range(0..order + 1, |d| js_set(n, mu, d).map(|s| s.len() as u64));
    sizes.into_iter().collect()
}

/// `χ_{n,μ}` assembled from branching functions. For `μ = (k^l)` with
/// `k, l ≥ 1` this is `b^{Λ_k+Λ_{−l}}_{Λ_{k−l},Λ_0}` divided by `q^{min(k,l)}`;
/// for `μ = ∅` it is `Σ_k b^{Λ_k+Λ_0}_{Λ_k,Λ_0} − (n − 1)`.
pub fn chi_by_branching(n: usize, mu: &Partition, order: usize, method: Method) -> Result<Vec<u64>, Error> {
    check_rank(n)?;
    let (k, l) = is_rectangle_le_n(mu, n)
        .ok_or_else(|| Error::NonRectangularCore { core: mu.to_string(), n })?;
    if k == 0 {
        let mut total = vec![0u64; order + 1];
        for j in 0..n {
            let b = branching(n, j, 0, order, method)?;
            for (acc, c) in total.iter_mut().zip(b.coeffs) {
                *acc += c;
            }
        }
        // ∅ is counted once per j
        total[0] -= (n - 1) as u64;
        return Ok(total);
    }
    let shift = k.min(l);
    let j = (k + n - l) % n;
    let b = branching(n, j, k, order + shift, method)?;
    if let Some(&c) = b.coeffs[..shift].iter().find(|&&c| c != 0) {
        return Err(Error::NonzeroShiftedTerm { shift, coefficient: c.to_string() });
    }
    Ok(b.coeffs[shift..].to_vec())
}

/// A JS partition whose core is not a small rectangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreViolation {
    pub partition: Partition,
    pub core: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectangleReport {
    pub n: usize,
    pub max_size: usize,
    pub js_partitions: usize,
    pub violations: Vec<CoreViolation>,
}

/// Checks that every JS partition of size at most `max_size` has an n-core
/// `(k^l)` with `k + l ≤ n`.
pub fn verify_rectangle_cores(n: usize, max_size: usize) -> Result<RectangleReport, Error> {
    check_rank(n)?;
    let by_size = crate::partition::enumerate_up_to(max_size, PartitionFilter::Regular(n));
    let per_size = par::map_slice(&by_size, |shard| {
        let mut count = 0;
        let mut bad = Vec::new();
        for lam in shard.iter().filter(|lam| is_js(lam, n)) {
            count += 1;
            let core = core_and_weight(lam, n).0;
            if is_rectangle_le_n(&core, n).is_none() {
                bad.push(CoreViolation { partition: lam.clone(), core });
            }
        }
        (count, bad)
    });
    let mut js_partitions = 0;
    let mut violations = Vec::new();
    for (count, bad) in per_size {
        js_partitions += count;
        violations.extend(bad);
    }
    Ok(RectangleReport { n, max_size, js_partitions, violations })
}

/// The admissible cores `(k^l)`, `k + l ≤ n`, including `∅`, ordered by size.
pub fn rectangular_cores(n: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    for size in 1..n {
        for l in 1..=size {
            if size % l == 0 {
                let k = size / l;
                if k + l <= n {
                    out.push(Partition::from_sorted_unchecked(vec![k; l]));
                }
            }
        }
    }
    out
}
