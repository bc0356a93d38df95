//! Paths of partitions, the FOW chain condition, and the branching functions
//! `b^{Λ_k+Λ_{j−k}}_{Λ_j,Λ_0}(q)` computed four independent ways.
//!
//! For a target class `Λ_k + Λ_{j−k} − Λ_j (mod δ)` and energy `d`, the
//! residue counts `m_i` of a contributing partition are pinned down (the
//! class fixes `m` up to a constant vector, `m_0 = d` fixes the constant), so
//! each coefficient is a finite count over partitions of a single size.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::Serialize;

use crate::crystal::epsilon_vector;
use crate::error::{check_residue, Error};
use crate::par;
use crate::partition::{enumerate_partitions, Partition, PartitionFilter};
use crate::qseries::fermionic_series;
use crate::weight::{epsilon_step, inverse_cartan, residue, weight_of, AffineWeight};

/// Level-2 weights `p_0, …, p_{λ_1}` of the path of `λ` relative to `Λ_j`.
/// Only the `Λ` coordinates are tracked; every `δ` coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCoordinates {
    pub n: usize,
    pub j: usize,
    pub coords: Vec<AffineWeight>,
}

impl PathCoordinates {
    pub fn all_dominant(&self) -> bool {
        self.coords.iter().all(AffineWeight::is_dominant)
    }
}

pub fn path_of(lambda: &Partition, n: usize, j: usize) -> Result<PathCoordinates, Error> {
    check_residue(j, n)?;
    let width = lambda.first_part();
    let columns = lambda.conjugate();
    let mut coords = vec![AffineWeight::zero(n); width + 1];
    coords[width] = AffineWeight::fundamental(n, j as i64) + AffineWeight::fundamental(n, width as i64);
    for k in (1..=width).rev() {
        let step = epsilon_step(n, k as i64 - 1 - columns.part(k) as i64);
        coords[k - 1] = coords[k].clone() - step;
    }
    Ok(PathCoordinates { n, j, coords })
}

/// Membership of `λ` in `Y(Λ_j, Λ_0)`: `λ` is n-regular and its whole path
/// is dominant.
pub fn in_path_set(lambda: &Partition, n: usize, j: usize) -> Result<bool, Error> {
    if !lambda.is_regular(n) {
        check_residue(j, n)?;
        return Ok(false);
    }
    Ok(path_of(lambda, n, j)?.all_dominant())
}

/// Whether consecutive distinct parts satisfy
/// `a_i + λ_i − λ_{i+1} + a_{i+1} ≡ 0 (mod n)`.
pub fn satisfies_chain(lambda: &Partition, n: usize) -> bool {
    lambda
        .exponent_form()
        .windows(2)
        .all(|w| (w[0].1 + w[0].0 - w[1].0 + w[1].1) % n == 0)
}

/// The residue `j` with `λ ∈ FOW(n, j)`, i.e. `(λ_1 − a_1) mod n` when the
/// chain condition holds. The empty partition reports `0`, although it lies
/// in every `FOW(n, j)` (see [`in_fow`]).
pub fn fow_index(lambda: &Partition, n: usize) -> Option<usize> {
    if !satisfies_chain(lambda, n) {
        return None;
    }
    match lambda.exponent_form().first() {
        None => Some(0),
        Some(&(part, mult)) => Some(residue(part as i64 - mult as i64, n)),
    }
}

/// Membership in `FOW(n, j)`. Requires n-regularity.
pub fn in_fow(lambda: &Partition, n: usize, j: usize) -> bool {
    if !lambda.is_regular(n) {
        return false;
    }
    if lambda.is_empty() {
        return true;
    }
    fow_index(lambda, n) == Some(j)
}

/// `Λ_k + Λ_{j−k} − Λ_j`, with no `δ` part.
pub fn target_class(n: usize, j: usize, k: usize) -> AffineWeight {
    AffineWeight::fundamental(n, k as i64) + AffineWeight::fundamental(n, j as i64 - k as i64)
        - AffineWeight::fundamental(n, j as i64)
}

/// `min(k, (j − k) mod n)`: both label the same branching function.
pub fn canonical_k(n: usize, j: usize, k: usize) -> usize {
    k.min(residue(j as i64 - k as i64, n))
}

/// The canonical `k` with `wt(λ) ≡ Λ_k + Λ_{j−k} − Λ_j (mod δ)` where
/// `j = fow_index(λ)`.
pub fn fow_k(lambda: &Partition, n: usize) -> Option<usize> {
    let j = fow_index(lambda, n)?;
    let wt = weight_of(lambda, n);
    (0..n).find(|&k| wt.lambda_coeffs() == target_class(n, j, k).lambda_coeffs())
}

/// The partition size forced by a weight class and an energy, if any.
///
/// Writing `m_i = d + x_i`, the class `Λ_0 − Σ m_i α_i ≡ w` gives
/// `C x = −(w_1, …, w_{n−1})` for the finite Cartan matrix `C`.
pub fn class_size(class: &AffineWeight, energy: usize) -> Option<usize> {
    let n = class.n();
    if class.level() != 1 {
        return None;
    }
    let inv = inverse_cartan(n).expect("class has rank >= 2");
    let w = &class.lambda_coeffs()[1..];
    let mut total = Ratio::from_integer((n * energy) as i64);
    for row in &inv {
        let x: Ratio<i64> = -row.iter().zip(w).map(|(c, &wj)| c * wj).sum::<Ratio<i64>>();
        if !x.is_integer() || x.to_integer() + (energy as i64) < 0 {
            return None;
        }
        total += x;
    }
    let total = total.to_integer();
    usize::try_from(total).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Paths,
    Fow,
    Crystal,
    Fermionic,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Paths, Method::Fow, Method::Crystal, Method::Fermionic];

    pub fn name(self) -> &'static str {
        match self {
            Method::Paths => "paths",
            Method::Fow => "fow",
            Method::Crystal => "crystal",
            Method::Fermionic => "fermionic",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Coefficients `c_0, …, c_D` of `b^{Λ_k+Λ_{j−k}}_{Λ_j,Λ_0}(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingSeries {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub method: Method,
    pub coeffs: Vec<u64>,
}

pub fn branching(n: usize, j: usize, k: usize, order: usize, method: Method) -> Result<BranchingSeries, Error> {
    check_residue(j, n)?;
    check_residue(k, n)?;
    let coeffs = match method {
        Method::Paths => count_by_energy(n, j, k, order, |lam| {
            in_path_set(lam, n, j).expect("checked residue")
        }),
        Method::Fow => count_by_energy(n, j, k, order, |lam| in_fow(lam, n, j)),
        Method::Crystal => count_by_energy(n, j, k, order, |lam| {
            epsilon_vector(lam, n)
                .iter()
                .enumerate()
                .all(|(i, &e)| if i == j { e <= 1 } else { e == 0 })
        }),
        Method::Fermionic => {
            let a = k;
            let b = residue(j as i64 - k as i64, n);
            let (s, t) = (a.min(b), a.max(b));
            let sum = fermionic_series(n, s, t, order)?;
            sum.series.to_u64_vec().expect("branching coefficients are nonnegative counts")
        }
    };
    Ok(BranchingSeries { n, j, k, method, coeffs })
}

pub fn branching_by_paths(n: usize, j: usize, k: usize, order: usize) -> Result<BranchingSeries, Error> {
    branching(n, j, k, order, Method::Paths)
}

pub fn branching_by_fow(n: usize, j: usize, k: usize, order: usize) -> Result<BranchingSeries, Error> {
    branching(n, j, k, order, Method::Fow)
}

pub fn branching_by_crystal(n: usize, j: usize, k: usize, order: usize) -> Result<BranchingSeries, Error> {
    branching(n, j, k, order, Method::Crystal)
}

pub fn branching_by_fermionic(n: usize, j: usize, k: usize, order: usize) -> Result<BranchingSeries, Error> {
    branching(n, j, k, order, Method::Fermionic)
}

/// Counts n-regular partitions in the target class that pass `member`,
/// grouped by energy. Each energy is an independent shard.
fn count_by_energy<F>(n: usize, j: usize, k: usize, order: usize, member: F) -> Vec<u64>
where
    F: Fn(&Partition) -> bool + Sync + Send,
{
    let class = target_class(n, j, k);
    par::map_range(0..order + 1, |d| {
        let Some(size) = class_size(&class, d) else {
            return 0;
        };
        let candidates = enumerate_partitions(size, PartitionFilter::Regular(n));
        par::count_slice(&candidates, |lam| {
            lam.energy(n) == d
                && weight_of(lam, n).lambda_coeffs() == class.lambda_coeffs()
                && member(lam)
        }) as u64
    })
}

/// A failure of `Y(Λ_j, Λ_0) = FOW(n, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FowCounterexample {
    pub partition: Partition,
    pub j: usize,
    pub in_path_set: bool,
    pub in_fow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FowReport {
    pub n: usize,
    pub max_size: usize,
    pub partitions_checked: usize,
    pub counterexamples: Vec<FowCounterexample>,
}

/// Checks path dominance against the FOW condition for every n-regular
/// partition of size at most `max_size` and every `j`.
pub fn verify_fow_theorem(n: usize, max_size: usize) -> Result<FowReport, Error> {
    crate::error::check_rank(n)?;
    let by_size = crate::partition::enumerate_up_to(max_size, PartitionFilter::Regular(n));
    let per_size = par::map_slice(&by_size, |shard| {
        let mut bad = Vec::new();
        for lam in shard {
            for j in 0..n {
                let paths = in_path_set(lam, n, j).expect("valid residue");
                let fow = in_fow(lam, n, j);
                if paths != fow {
                    bad.push(FowCounterexample { partition: lam.clone(), j, in_path_set: paths, in_fow: fow });
                }
            }
        }
        bad
    });
    Ok(FowReport {
        n,
        max_size,
        partitions_checked: by_size.iter().map(Vec::len).sum(),
        counterexamples: per_size.into_iter().flatten().collect(),
    })
}
