//! Cross-checking suites bundled for the command line.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::cores::{block_dimension, core_and_weight, is_core, AbacusDisplay};
use crate::crystal::{build_component, e_tilde, eps_phi, f_tilde};
use crate::error::{check_rank, Error};
use crate::js::{chi_by_branching, chi_direct, is_js, is_js_by_crystal, js_record, rectangular_cores, verify_rectangle_cores};
use crate::par;
use crate::partition::{enumerate_partitions, enumerate_up_to, PartitionFilter};
use crate::paths::{branching, canonical_k, fow_index, verify_fow_theorem, Method};
use crate::weight::{weight_of, AffineWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fow,
    Methods,
    Js,
    Cores,
    Crystal,
    All,
}

impl Suite {
    const EACH: [Suite; 5] = [Suite::Fow, Suite::Methods, Suite::Js, Suite::Cores, Suite::Crystal];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fow => "fow",
            Suite::Methods => "methods",
            Suite::Js => "js",
            Suite::Cores => "cores",
            Suite::Crystal => "crystal",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub n: usize,
    /// Largest partition size for the enumeration-based checks.
    pub max_size: usize,
    /// Series order for the method and χ comparisons.
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn check<T: PartialEq + fmt::Debug>(&mut self, case: impl FnOnce() -> String, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// Runs one suite, or every suite for [`Suite::All`]. Reports come back in
/// declaration order.
pub fn verify(suite: Suite, params: VerifyParams) -> Result<Vec<VerificationReport>, Error> {
    check_rank(params.n)?;
    if suite == Suite::All {
        let reports = par::map_slice(&Suite::EACH, |&s| run_one(s, params));
        return reports.into_iter().collect();
    }
    Ok(vec![run_one(suite, params)?])
}

fn run_one(suite: Suite, params: VerifyParams) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let tally = match suite {
        Suite::Fow => fow_suite(params)?,
        Suite::Methods => methods_suite(params)?,
        Suite::Js => js_suite(params)?,
        Suite::Cores => cores_suite(params)?,
        Suite::Crystal => crystal_suite(params)?,
        Suite::All => unreachable!("expanded by verify"),
    };
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        cases: tally.cases,
        failures: tally.failures,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn fow_suite(p: VerifyParams) -> Result<Tally, Error> {
    let report = verify_fow_theorem(p.n, p.max_size)?;
    let mut tally = Tally { cases: report.partitions_checked * p.n, failures: Vec::new() };
    for c in report.counterexamples {
        tally.failures.push(Failure {
            case: format!("n={} λ={} j={}", p.n, c.partition, c.j),
            expected: format!("path dominant = {}", c.in_fow),
            actual: format!("path dominant = {}", c.in_path_set),
        });
    }
    Ok(tally)
}

/// Every branching function `(j, canonical k)` by all four methods.
fn methods_suite(p: VerifyParams) -> Result<Tally, Error> {
    let n = p.n;
    let labels: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..n).filter(move |&k| canonical_k(n, j, k) == k).map(move |k| (j, k)))
        .collect();
    let results = par::map_slice(&labels, |&(j, k)| {
        let reference = branching(n, j, k, p.order, Method::Fow)?;
        let mut tally = Tally::default();
        for method in [Method::Paths, Method::Crystal, Method::Fermionic] {
            let other = branching(n, j, k, p.order, method)?;
            tally.check(
                || format!("n={n} j={j} k={k} fow vs {method}"),
                &reference.coeffs,
                &other.coeffs,
            );
        }
        Ok(tally)
    });
    let mut tally = Tally::default();
    for r in results {
        tally.absorb(r?);
    }
    Ok(tally)
}

fn js_suite(p: VerifyParams) -> Result<Tally, Error> {
    let n = p.n;
    let mut tally = Tally::default();
    let partitions: Vec<_> = enumerate_up_to(p.max_size, PartitionFilter::Regular(n))
        .into_iter()
        .flatten()
        .collect();
    let checks = par::map_slice(&partitions, |lam| {
        let mut t = Tally::default();
        let js = is_js(lam, n);
        t.check(|| format!("n={n} λ={lam} chain vs ε-profile"), js, is_js_by_crystal(lam, n));
        t.check(|| format!("n={n} λ={lam} chain vs FOW index"), js, fow_index(lam, n).is_some());
        if let Some(rec) = js_record(lam, n) {
            let (k, l) = crate::cores::is_rectangle_le_n(&rec.core, n).unwrap_or((usize::MAX, 0));
            t.check(|| format!("n={n} λ={lam} E − weight"), k.min(l), rec.energy_shift());
        }
        t
    });
    for t in checks {
        tally.absorb(t);
    }
    let rect = verify_rectangle_cores(n, p.max_size)?;
    tally.cases += rect.js_partitions;
    for v in rect.violations {
        tally.failures.push(Failure {
            case: format!("n={n} λ={} core", v.partition),
            expected: "rectangle (k^l) with k + l <= n".to_string(),
            actual: v.core.to_string(),
        });
    }
    for core in rectangular_cores(n) {
        let direct = chi_direct(n, &core, p.order)?;
        let via_branching = chi_by_branching(n, &core, p.order, Method::Fow)?;
        tally.check(|| format!("n={n} χ core={core} direct vs branching"), &direct, &via_branching);
        tally.check(|| format!("n={n} χ core={core} constant term"), 1, direct[0]);
    }
    Ok(tally)
}

fn cores_suite(p: VerifyParams) -> Result<Tally, Error> {
    let n = p.n;
    let mut tally = Tally::default();
    let partitions: Vec<_> = enumerate_up_to(p.max_size, PartitionFilter::All).into_iter().flatten().collect();
    let checks = par::map_slice(&partitions, |lam| {
        let mut t = Tally::default();
        let (core, weight) = core_and_weight(lam, n);
        t.check(|| format!("n={n} λ={lam} size balance"), lam.size(), core.size() + n * weight);
        t.check(|| format!("n={n} λ={lam} idempotent"), core.clone(), core_and_weight(&core, n).0);
        for beads in [lam.len(), lam.len() + 1, lam.len() + n] {
            let other = AbacusDisplay::with_beads(lam, n, beads).slide_up().0.to_partition();
            t.check(|| format!("n={n} λ={lam} beads={beads}"), core.clone(), other);
        }
        t
    });
    for t in checks {
        tally.absorb(t);
    }
    for m in 0..=p.max_size {
        let cores: Vec<_> = (0..=m)
            .flat_map(|s| enumerate_partitions(s, PartitionFilter::All))
            .filter(|mu| is_core(mu, n))
            .collect();
        let mut total = 0;
        for mu in &cores {
            total += block_dimension(n, m, mu)?;
        }
        let regular = enumerate_partitions(m, PartitionFilter::Regular(n)).len();
        tally.check(|| format!("n={n} m={m} Σ block dimensions"), regular, total);
    }
    Ok(tally)
}

fn crystal_suite(p: VerifyParams) -> Result<Tally, Error> {
    let n = p.n;
    let mut tally = Tally::default();
    let partitions: Vec<_> = enumerate_up_to(p.max_size, PartitionFilter::All).into_iter().flatten().collect();
    let checks = par::map_slice(&partitions, |lam| {
        let mut t = Tally::default();
        let wt = weight_of(lam, n);
        for i in 0..n {
            let (eps, phi) = eps_phi(lam, n, i);
            t.check(
                || format!("n={n} λ={lam} i={i} φ − ε"),
                wt.lambda_coeffs()[i],
                phi as i64 - eps as i64,
            );
            if let Some(up) = f_tilde(lam, n, i) {
                t.check(|| format!("n={n} λ={lam} i={i} ẽf̃"), Some(lam.clone()), e_tilde(&up, n, i));
                t.check(|| format!("n={n} λ={lam} i={i} ε(f̃λ)"), (eps + 1, phi - 1), eps_phi(&up, n, i));
                t.check(
                    || format!("n={n} λ={lam} i={i} wt(f̃λ)"),
                    wt.clone() - AffineWeight::simple_root(n, i),
                    weight_of(&up, n),
                );
            }
            if let Some(down) = e_tilde(lam, n, i) {
                t.check(|| format!("n={n} λ={lam} i={i} f̃ẽ"), Some(lam.clone()), f_tilde(&down, n, i));
            }
        }
        t
    });
    for t in checks {
        tally.absorb(t);
    }
    let graph = build_component(n, p.max_size)?;
    let expected: Vec<usize> = (0..=p.max_size)
        .map(|m| enumerate_partitions(m, PartitionFilter::Regular(n)).len())
        .collect();
    tally.check(|| format!("n={n} component sizes"), expected, graph.size_profile());
    for v in graph.vertices() {
        tally.check(|| format!("n={n} vertex {} regular", v.partition), true, v.partition.is_regular(n));
        tally.check(|| format!("n={n} vertex {} JS flag", v.partition), is_js(&v.partition, n), v.js);
    }
    for e in graph.edges() {
        let (from, to) = (&graph.vertices()[e.from], &graph.vertices()[e.to]);
        tally.check(
            || format!("n={n} edge {} -{}-> {}", from.partition, e.i, to.partition),
            from.weight.clone() - AffineWeight::simple_root(n, e.i),
            to.weight.clone(),
        );
    }
    Ok(tally)
}
