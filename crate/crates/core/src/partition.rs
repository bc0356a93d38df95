//! Integer partitions, coloured Young diagrams and enumeration.
//!
//! Nodes use 1-based `(row, col)` coordinates. The residue (colour) of a
//! node is `(col - row) mod n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from `(part, multiplicity)` pairs with strictly
    /// decreasing parts.
    pub fn from_exponent_form(pairs: &[(usize, usize)]) -> Result<Self, Error> {
        if pairs.windows(2).any(|w| w[0].0 <= w[1].0) {
            return Err(Error::InvalidPartition(format!(
                "exponent form {pairs:?} needs strictly decreasing parts"
            )));
        }
        let mut parts = Vec::new();
        for &(part, mult) in pairs {
            if mult == 0 {
                return Err(Error::InvalidPartition(format!(
                    "exponent form {pairs:?} has a zero multiplicity"
                )));
            }
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last part. `λ_0` reads as
    /// unbounded so row 1 always has an addable node.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The transposed diagram: part `j` is the length of column `j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|col| self.parts.iter().take_while(|&&p| p >= col).count())
            .collect();
        Partition { parts }
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn exponent_form(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, mult)) if *q == p => *mult += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// No part is repeated `n` or more times.
    pub fn is_regular(&self, n: usize) -> bool {
        self.exponent_form().iter().all(|&(_, mult)| mult < n)
    }

    pub fn nodes(&self, n: usize) -> impl Iterator<Item = Node> + '_ {
        self.parts.iter().enumerate().flat_map(move |(r, &len)| {
            (1..=len).map(move |c| Node::new(r + 1, c, n))
        })
    }

    pub fn residue_counts(&self, n: usize) -> ResidueCounts {
        let mut counts = vec![0; n];
        for node in self.nodes(n) {
            counts[node.residue] += 1;
        }
        ResidueCounts { counts }
    }

    /// Number of residue-0 nodes.
    pub fn energy(&self, n: usize) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                // columns c in 1..=len with c ≡ r+1 (mod n)
                let first = (r % n) + 1;
                if len < first {
                    0
                } else {
                    (len - first) / n + 1
                }
            })
            .sum()
    }

    /// Addable and removable nodes of residue `i`, in increasing row order.
    pub fn boundary_nodes(&self, n: usize, i: usize) -> Vec<BoundaryNode> {
        let mut out = Vec::new();
        for row in 1..=self.len() + 1 {
            let len = self.part(row);
            if len > 0 && len > self.part(row + 1) {
                let node = Node::new(row, len, n);
                if node.residue == i {
                    out.push(BoundaryNode { node, kind: NodeKind::Removable });
                }
            }
            if self.part(row - 1) > len {
                let node = Node::new(row, len + 1, n);
                if node.residue == i {
                    out.push(BoundaryNode { node, kind: NodeKind::Addable });
                }
            }
        }
        out
    }

    /// Adds a node. The caller guarantees the node is addable.
    pub fn with_node_added(&self, node: Node) -> Partition {
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            debug_assert_eq!(node.row, parts.len() + 1);
            debug_assert_eq!(node.col, 1);
            parts.push(1);
        } else {
            debug_assert_eq!(parts[node.row - 1] + 1, node.col);
            parts[node.row - 1] += 1;
        }
        Partition::from_sorted_unchecked(parts)
    }

    /// Removes a node. The caller guarantees the node is removable.
    pub fn with_node_removed(&self, node: Node) -> Partition {
        let mut parts = self.parts.clone();
        debug_assert_eq!(parts[node.row - 1], node.col);
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Partition::from_sorted_unchecked(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"5,5,4,1,1"`, the exponent form `"5^2,4,1^2"`, or `"-"` for
    /// the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::InvalidPartition(format!("cannot parse {s:?}"));
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, mult) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let base = base.parse::<usize>().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, mult));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// A box of a Young diagram together with its residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub residue: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, n: usize) -> Self {
        let residue = (col + n * row - row) % n;
        Node { row, col, residue }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Addable,
    Removable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryNode {
    pub node: Node,
    pub kind: NodeKind,
}

/// `(m_0, …, m_{n-1})`: node counts per residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCounts {
    pub counts: Vec<usize>,
}

impl ResidueCounts {
    pub fn energy(&self) -> usize {
        self.counts[0]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionFilter {
    All,
    /// Keep only `n`-regular partitions.
    Regular(usize),
}

/// Every partition of `m` once, in lexicographically decreasing order.
pub fn enumerate_partitions(m: usize, filter: PartitionFilter) -> Vec<Partition> {
    let max_mult = match filter {
        PartitionFilter::All => usize::MAX,
        PartitionFilter::Regular(n) => n - 1,
    };
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(m, m, max_mult, &mut current, &mut out);
    out
}

fn extend_partitions(
    remaining: usize,
    max_part: usize,
    max_mult: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        // choose the multiplicity of `part` now, so the rest uses smaller parts
        let most = (remaining / part).min(max_mult);
        for mult in (1..=most).rev() {
            let before = current.len();
            current.extend(std::iter::repeat_n(part, mult));
            extend_partitions(remaining - part * mult, part - 1, max_mult, current, out);
            current.truncate(before);
        }
    }
}

/// All partitions of size `0..=max_size` passing the filter, grouped by size.
pub fn enumerate_up_to(max_size: usize, filter: PartitionFilter) -> Vec<Vec<Partition>> {
    crate::par::map_range(0..max_size + 1, |m| enumerate_partitions(m, filter))
}
