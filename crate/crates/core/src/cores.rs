//! n-cores, n-weights and block sizes through beta-numbers on an n-runner
//! abacus.

use crate::error::{check_rank, Error};
use crate::par;
use crate::partition::{enumerate_partitions, Partition, PartitionFilter};

/// Beta-numbers of a partition with a fixed bead count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusDisplay {
    n: usize,
    beta: Vec<usize>,
}

impl AbacusDisplay {
    /// Default bead count: the number of parts rounded up to a positive
    /// multiple of `n`.
    pub fn new(lambda: &Partition, n: usize) -> Self {
        let beads = lambda.len().max(1).div_ceil(n) * n;
        Self::with_beads(lambda, n, beads)
    }

    /// Panics if `beads` is smaller than the number of parts.
    pub fn with_beads(lambda: &Partition, n: usize, beads: usize) -> Self {
        assert!(beads >= lambda.len(), "need at least one bead per part");
        let beta = (1..=beads).map(|i| lambda.part(i) + beads - i).collect();
        AbacusDisplay { n, beta }
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn to_partition(&self) -> Partition {
        let beads = self.beta.len();
        let parts = self
            .beta
            .iter()
            .enumerate()
            .map(|(i, b)| b - (beads - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Slides every bead as far up its runner as it goes. Returns the new
    /// display and the number of single-step moves made.
    pub fn slide_up(&self) -> (AbacusDisplay, usize) {
        let n = self.n;
        let mut per_runner = vec![0usize; n];
        let mut moves = 0;
        // beta is decreasing, so walk it from the smallest bead up
        for &b in self.beta.iter().rev() {
            let runner = b % n;
            let level = b / n;
            moves += level - per_runner[runner];
            per_runner[runner] += 1;
        }
        let mut beta: Vec<usize> = per_runner
            .iter()
            .enumerate()
            .flat_map(|(runner, &count)| (0..count).map(move |lvl| lvl * n + runner))
            .collect();
        beta.sort_unstable_by(|a, b| b.cmp(a));
        (AbacusDisplay { n, beta }, moves)
    }
}

/// The n-core and n-weight of `λ`.
pub fn core_and_weight(lambda: &Partition, n: usize) -> (Partition, usize) {
    let (slid, moves) = AbacusDisplay::new(lambda, n).slide_up();
    (slid.to_partition(), moves)
}

pub fn n_core(lambda: &Partition, n: usize) -> Partition {
    core_and_weight(lambda, n).0
}

pub fn n_weight(lambda: &Partition, n: usize) -> usize {
    core_and_weight(lambda, n).1
}

pub fn is_core(lambda: &Partition, n: usize) -> bool {
    n_weight(lambda, n) == 0
}

/// Number of n-regular partitions of `m` with n-core `core`.
pub fn block_dimension(n: usize, m: usize, core: &Partition) -> Result<usize, Error> {
    check_rank(n)?;
    if !is_core(core, n) {
        return Err(Error::NotACore { core: core.to_string(), n });
    }
    if m < core.size() || !(m - core.size()).is_multiple_of(n) {
        return Ok(0);
    }
    let candidates = enumerate_partitions(m, PartitionFilter::Regular(n));
    Ok(par::count_slice(&candidates, |lam| n_core(lam, n) == *core))
}

/// `Some((k, l))` when `μ = (k^l)` with `k + l <= n`; the empty partition
/// gives `(0, 0)`.
pub fn is_rectangle_le_n(mu: &Partition, n: usize) -> Option<(usize, usize)> {
    if mu.is_empty() {
        return Some((0, 0));
    }
    let k = mu.first_part();
    let l = mu.len();
    if mu.parts().iter().all(|&p| p == k) && k + l <= n {
        Some((k, l))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn core_examples() {
        assert_eq!(n_core(&p(&[3]), 3), Partition::empty());
        assert_eq!(n_core(&p(&[8]), 3), p(&[2]));
        assert_eq!(n_core(&p(&[1]), 3), p(&[1]));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(n_weight(&p(&[6, 2]), 3), 2);
        assert_eq!(n_weight(&p(&[2, 1]), 3), 1);
        assert_eq!(n_weight(&Partition::empty(), 2), 0);
    }

    #[test]
    fn block_dimension_examples() {
        assert_eq!(block_dimension(3, 3, &Partition::empty()), Ok(2));
        assert_eq!(block_dimension(3, 1, &p(&[1])), Ok(1));
        assert_eq!(block_dimension(3, 2, &Partition::empty()), Ok(0));
        assert!(matches!(block_dimension(3, 3, &p(&[3])), Err(Error::NotACore { .. })));
    }

    #[test]
    fn rectangle_examples() {
        assert_eq!(is_rectangle_le_n(&p(&[2]), 3), Some((2, 1)));
        assert_eq!(is_rectangle_le_n(&p(&[1, 1]), 3), Some((1, 2)));
        assert_eq!(is_rectangle_le_n(&p(&[2, 1]), 3), None);
        assert_eq!(is_rectangle_le_n(&Partition::empty(), 3), Some((0, 0)));
        assert_eq!(is_rectangle_le_n(&p(&[2, 2]), 3), None);
    }

    #[test]
    fn beta_round_trip() {
        let lam = p(&[5, 5, 4, 1, 1]);
        for beads in [5, 6, 9, 12] {
            let ab = AbacusDisplay::with_beads(&lam, 3, beads);
            assert!(ab.beta().windows(2).all(|w| w[0] > w[1]));
            assert_eq!(ab.to_partition(), lam);
        }
    }
}
