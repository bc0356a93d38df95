#![allow(dead_code)]

use jsbranch::{Partition, PartitionFilter};
use proptest::prelude::*;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn all_up_to(max: usize, filter: PartitionFilter) -> Vec<Partition> {
    (0..=max)
        .flat_map(|m| jsbranch::partition::enumerate_partitions(m, filter))
        .collect()
}

pub fn arb_partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}
