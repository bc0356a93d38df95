//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use jsbranch::crystal::{build_component, e_tilde, eps_phi, f_tilde};
use jsbranch::js::{chi_by_branching, chi_direct, is_js, is_js_by_crystal, js_set, verify_rectangle_cores};
use jsbranch::partition::{enumerate_partitions, enumerate_up_to};
use jsbranch::paths::{branching, branching_by_fow, verify_fow_theorem};
use jsbranch::qseries::fermionic_series;
use jsbranch::weight::weight_of;
use jsbranch::{AffineWeight, Method, Partition, PartitionFilter};

type Outcome = Result<(), String>;

/// Label, check, time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(text: &str) -> Partition {
    text.parse().expect("valid partition literal")
}

fn branching_tables() -> Outcome {
    // (j, k, expected): the six level-1 ⊗ level-1 functions for n = 3
    let table: [(usize, usize, &[u64]); 6] = [
        (0, 0, &[1, 0, 1]),
        (0, 1, &[0, 1, 2, 2]),
        (1, 1, &[1, 1, 2]),
        (1, 2, &[0, 1, 1, 2]),
        (2, 2, &[1, 1, 2]),
        (2, 1, &[0, 1, 1, 2]),
    ];
    for (j, k, want) in table {
        for method in Method::ALL {
            let got = branching(3, j, k, want.len() - 1, method).map_err(|e| e.to_string())?;
            ensure!(got.coeffs == want, "j={j} k={k} {method}: {:?} != {want:?}", got.coeffs);
        }
    }
    Ok(())
}

fn chi_tables() -> Outcome {
    let table = [("-", [1, 2, 5]), ("1", [1, 2, 2]), ("2", [1, 1, 2]), ("1^2", [1, 1, 2])];
    for (mu, want) in table {
        let mu = p(mu);
        let direct = chi_direct(3, &mu, 2).map_err(|e| e.to_string())?;
        ensure!(direct == want, "direct χ(3,{mu}) = {direct:?}");
        let via = chi_by_branching(3, &mu, 2, Method::Fow).map_err(|e| e.to_string())?;
        ensure!(via == want, "branching χ(3,{mu}) = {via:?}");
    }
    Ok(())
}

fn js_sets() -> Outcome {
    let table: [(&str, usize, &[&str]); 12] = [
        ("-", 0, &["-"]),
        ("-", 1, &["3", "2,1"]),
        ("-", 2, &["6", "5,1", "3^2", "4,1^2", "3,2,1"]),
        ("1", 0, &["1"]),
        ("1", 1, &["4", "2^2"]),
        ("1", 2, &["7", "4,3"]),
        ("2", 0, &["2"]),
        ("2", 1, &["5"]),
        ("2", 2, &["8", "3^2,1^2"]),
        ("1^2", 0, &["1^2"]),
        ("1^2", 1, &["3,2"]),
        ("1^2", 2, &["6,2", "4^2"]),
    ];
    for (mu, d, want) in table {
        let mut got = js_set(3, &p(mu), d).map_err(|e| e.to_string())?;
        let mut want: Vec<Partition> = want.iter().map(|s| p(s)).collect();
        got.sort();
        want.sort();
        ensure!(got == want, "JS(3,{mu},{d}) = {got:?}");
    }
    Ok(())
}

fn paths_equal_fow() -> Outcome {
    for n in 2..=5 {
        let report = verify_fow_theorem(n, 12).map_err(|e| e.to_string())?;
        ensure!(
            report.counterexamples.is_empty(),
            "n={n}: {} counterexamples, first {:?}",
            report.counterexamples.len(),
            report.counterexamples[0]
        );
    }
    Ok(())
}

fn fermionic_identity() -> Outcome {
    for n in 2..=4 {
        for t in 0..n {
            for s in 0..=t {
                // integrality is enforced inside fermionic_series
                let sum = fermionic_series(n, s, t, 8).map_err(|e| e.to_string())?;
                let fow = branching_by_fow(n, (s + t) % n, s, 8).map_err(|e| e.to_string())?;
                let got = sum.series.to_u64_vec();
                ensure!(got.as_ref() == Some(&fow.coeffs), "n={n} s={s} t={t}: {got:?} != {:?}", fow.coeffs);
                ensure!(sum.admissible_points > 0, "n={n} s={s} t={t}: no admissible points");
            }
        }
    }
    Ok(())
}

fn js_by_crystal() -> Outcome {
    for n in 2..=4 {
        for lam in enumerate_up_to(14, PartitionFilter::Regular(n)).iter().flatten() {
            ensure!(is_js(lam, n) == is_js_by_crystal(lam, n), "n={n} λ={lam}");
        }
    }
    Ok(())
}

fn rectangular_cores() -> Outcome {
    for n in 2..=5 {
        let report = verify_rectangle_cores(n, 14).map_err(|e| e.to_string())?;
        ensure!(report.violations.is_empty(), "n={n}: {:?}", report.violations);
    }
    Ok(())
}

fn crystal_axioms() -> Outcome {
    for n in 2..=3 {
        let g = build_component(n, 10).map_err(|e| e.to_string())?;
        let want: Vec<usize> =
            (0..=10).map(|m| enumerate_partitions(m, PartitionFilter::Regular(n)).len()).collect();
        ensure!(g.size_profile() == want, "n={n}: profile {:?} != {want:?}", g.size_profile());
        for v in g.vertices() {
            let lam = &v.partition;
            let wt = weight_of(lam, n);
            for i in 0..n {
                let (eps, phi) = eps_phi(lam, n, i);
                ensure!(phi as i64 - eps as i64 == wt.lambda_coeffs()[i], "φ−ε at {lam} i={i}");
                if let Some(mu) = f_tilde(lam, n, i) {
                    ensure!(e_tilde(&mu, n, i).as_ref() == Some(lam), "ẽf̃ at {lam} i={i}");
                    ensure!(eps_phi(&mu, n, i) == (eps + 1, phi - 1), "ε/φ shift at {lam} i={i}");
                    ensure!(
                        weight_of(&mu, n) == wt.clone() - AffineWeight::simple_root(n, i),
                        "weight at {lam} i={i}"
                    );
                }
                if let Some(mu) = e_tilde(lam, n, i) {
                    ensure!(f_tilde(&mu, n, i).as_ref() == Some(lam), "f̃ẽ at {lam} i={i}");
                }
            }
        }
    }
    let g = build_component(3, 8).map_err(|e| e.to_string())?;
    let dot = g.to_dot();
    let mut labelled = 0;
    for line in dot.lines().filter(|l| l.contains("[label=\"") && !l.contains("->")) {
        let label = line.split('"').nth(1).ok_or("malformed vertex line")?;
        let (text, starred) = match label.strip_suffix('*') {
            Some(t) => (t, true),
            None => (label, false),
        };
        let lam: Partition = text.parse().map_err(|e| format!("{e}"))?;
        ensure!(starred == is_js(&lam, 3), "DOT marking wrong at {lam}");
        labelled += 1;
    }
    ensure!(labelled == g.vertices().len(), "DOT lists {labelled} of {} vertices", g.vertices().len());
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 branching tables, four methods", branching_tables, 5),
        ("2 chi tables, direct and via branching", chi_tables, 5),
        ("3 twelve JS sets", js_sets, 5),
        ("4 Y = FOW, size <= 12, n = 2..5", paths_equal_fow, 60),
        ("5 fermionic = FOW to order 8, n = 2..4", fermionic_identity, 60),
        ("6 chain <=> epsilon profile, size <= 14", js_by_crystal, 60),
        ("7 rectangular cores, size <= 14, n = 2..5", rectangular_cores, 30),
        ("8 crystal axioms, counts and DOT marks", crystal_axioms, 30),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("exceeded {limit} s"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({} ms)", elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({} ms): {why}", elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
