mod common;

use common::all_up_to;
use jsbranch::paths::{
    branching, canonical_k, fow_index, in_fow, in_path_set, path_of, target_class, verify_fow_theorem,
};
use jsbranch::qseries::{fermionic_series, fermionic_series_with_bounds, QuadraticFormData};
use jsbranch::weight::weight_of;
use jsbranch::{AffineWeight, Method, PartitionFilter};

#[test]
fn all_methods_agree_small_ranks() {
    for n in 2..=4 {
        for j in 0..n {
            for k in 0..n {
                let reference = branching(n, j, k, 8, Method::Fow).unwrap().coeffs;
                for method in [Method::Paths, Method::Crystal, Method::Fermionic] {
                    let got = branching(n, j, k, 8, method).unwrap().coeffs;
                    assert_eq!(got, reference, "n={n} j={j} k={k} {method}");
                }
            }
        }
    }
}

#[test]
fn fermionic_agrees_at_larger_ranks() {
    for (n, order) in [(5, 6), (6, 4)] {
        for j in 0..n {
            for k in 0..n {
                if canonical_k(n, j, k) != k {
                    continue;
                }
                let fow = branching(n, j, k, order, Method::Fow).unwrap().coeffs;
                let ferm = branching(n, j, k, order, Method::Fermionic).unwrap().coeffs;
                assert_eq!(ferm, fow, "n={n} j={j} k={k}");
            }
        }
    }
}

#[test]
fn both_labels_give_the_same_function() {
    for n in 2..=4 {
        for j in 0..n {
            for k in 0..n {
                let other = (j + n - k) % n;
                assert_eq!(target_class(n, j, k), target_class(n, j, other));
                assert_eq!(
                    branching(n, j, k, 6, Method::Fow).unwrap().coeffs,
                    branching(n, j, other, 6, Method::Fow).unwrap().coeffs
                );
            }
        }
    }
}

#[test]
fn fermionic_stable_under_larger_bounds() {
    for n in 2..=4 {
        for t in 0..n {
            for s in 0..=t {
                let form = QuadraticFormData::new(n, s, t).unwrap();
                let order = 8;
                let base = fermionic_series(n, s, t, order).unwrap();
                let wide = fermionic_series_with_bounds(
                    &form,
                    order,
                    form.coordinate_bound(order) + n,
                    form.shell_bound(order) + n,
                )
                .unwrap();
                assert_eq!(base.series, wide.series, "n={n} s={s} t={t}");
                assert!(wide.points_visited >= base.points_visited);
                assert!(base.series.has_nonnegative_coeffs());
            }
        }
    }
}

#[test]
fn fermionic_prefixes_are_consistent() {
    for (n, s, t) in [(3, 0, 0), (3, 1, 2), (4, 1, 3), (4, 2, 2)] {
        let long = fermionic_series(n, s, t, 10).unwrap().series;
        for order in 0..10 {
            assert_eq!(fermionic_series(n, s, t, order).unwrap().series, long.truncate(order));
        }
    }
}

#[test]
fn path_set_equals_fow() {
    for n in 2..=5 {
        let report = verify_fow_theorem(n, 12).unwrap();
        assert!(report.counterexamples.is_empty(), "{:?}", report.counterexamples);
    }
}

#[test]
fn path_members_are_regular_with_level_two_steps() {
    for n in 2..=4 {
        for lam in all_up_to(12, PartitionFilter::All) {
            for j in 0..n {
                if in_path_set(&lam, n, j).unwrap() {
                    assert!(lam.is_regular(n), "{lam}");
                }
                let path = path_of(&lam, n, j).unwrap();
                assert_eq!(path.coords.len(), lam.first_part() + 1);
                assert!(path.coords.iter().all(|c| c.level() == 2 && c.delta_coeff() == 0));
            }
        }
    }
}

#[test]
fn path_start_tracks_the_weight() {
    // p_0 = Λ_j + wt(λ) modulo δ
    for n in 2..=4 {
        for lam in all_up_to(12, PartitionFilter::Regular(n)) {
            for j in 0..n {
                let start = path_of(&lam, n, j).unwrap().coords[0].clone();
                let expected = AffineWeight::fundamental(n, j as i64) + weight_of(&lam, n);
                assert!(start.equal_mod_delta(&expected).unwrap(), "{lam} j={j}");
            }
        }
    }
}

#[test]
fn fow_index_is_unique() {
    for n in 2..=4 {
        for lam in all_up_to(12, PartitionFilter::Regular(n)) {
            if lam.is_empty() {
                assert!((0..n).all(|j| in_fow(&lam, n, j)));
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&j| in_fow(&lam, n, j)).collect();
            match fow_index(&lam, n) {
                Some(j) => assert_eq!(members, vec![j], "{lam}"),
                None => assert!(members.is_empty(), "{lam}"),
            }
        }
    }
}

#[test]
fn weights_are_level_one_with_energy_delta() {
    for n in 2..=5 {
        for lam in all_up_to(14, PartitionFilter::All) {
            let wt = weight_of(&lam, n);
            assert_eq!(wt.level(), 1);
            assert_eq!(wt.delta_coeff(), -(lam.energy(n) as i64));
        }
    }
}
