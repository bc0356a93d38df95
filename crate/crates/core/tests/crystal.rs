mod common;

use common::{all_up_to, arb_partition};
use jsbranch::crystal::{build_component, e_tilde, eps_phi, f_tilde};
use jsbranch::partition::enumerate_partitions;
use jsbranch::weight::weight_of;
use jsbranch::{AffineWeight, Partition, PartitionFilter};
use proptest::prelude::*;

fn check_axioms(lam: &Partition, n: usize) {
    let wt = weight_of(lam, n);
    for i in 0..n {
        let (eps, phi) = eps_phi(lam, n, i);
        assert_eq!(phi as i64 - eps as i64, wt.lambda_coeffs()[i], "{lam} i={i}");
        assert_eq!(e_tilde(lam, n, i).is_none(), eps == 0);
        assert_eq!(f_tilde(lam, n, i).is_none(), phi == 0);
        if let Some(mu) = f_tilde(lam, n, i) {
            assert_eq!(mu.size(), lam.size() + 1);
            assert_eq!(e_tilde(&mu, n, i).as_ref(), Some(lam));
            assert_eq!(eps_phi(&mu, n, i), (eps + 1, phi - 1));
            assert_eq!(weight_of(&mu, n), wt.clone() - AffineWeight::simple_root(n, i));
        }
        if let Some(mu) = e_tilde(lam, n, i) {
            assert_eq!(f_tilde(&mu, n, i).as_ref(), Some(lam));
            assert_eq!(eps_phi(&mu, n, i), (eps - 1, phi + 1));
        }
    }
}

#[test]
fn axioms_on_all_small_partitions() {
    for n in 2..=4 {
        for lam in all_up_to(14, PartitionFilter::All) {
            check_axioms(&lam, n);
        }
    }
}

#[test]
fn component_is_the_regular_partitions() {
    for (n, max) in [(2, 12), (3, 12), (4, 10), (5, 9)] {
        let g = build_component(n, max).unwrap();
        let want: Vec<usize> =
            (0..=max).map(|m| enumerate_partitions(m, PartitionFilter::Regular(n)).len()).collect();
        assert_eq!(g.size_profile(), want, "n={n}");
        assert!(g.vertices().iter().all(|v| v.partition.is_regular(n)));
    }
}

#[test]
fn edges_are_kashiwara_arrows() {
    let g = build_component(3, 9).unwrap();
    for e in g.edges() {
        let from = &g.vertices()[e.from].partition;
        let to = &g.vertices()[e.to].partition;
        assert_eq!(f_tilde(from, 3, e.i).as_ref(), Some(to));
        assert_eq!(
            g.vertices()[e.to].weight,
            g.vertices()[e.from].weight.clone() - AffineWeight::simple_root(3, e.i)
        );
    }
    // every vertex except ∅ has exactly one incoming arrow per colour it can lower
    for (k, v) in g.vertices().iter().enumerate() {
        let incoming = g.edges().iter().filter(|e| e.to == k).count();
        assert_eq!(incoming, v.eps.iter().filter(|&&e| e > 0).count(), "{}", v.partition);
    }
}

proptest! {
    #[test]
    fn axioms_on_random_partitions(lam in arb_partition(12, 16), n in 2usize..7) {
        check_axioms(&lam, n);
    }
}
