//! Kashiwara operators on partitions (the Fock-space crystal at `q = 0`)
//! and the crystal graph of the component containing the empty partition.
//!
//! Good nodes come from the `i`-signature: addable (`+`) and removable (`-`)
//! `i`-nodes read in increasing row order, with adjacent `+-` pairs
//! cancelled until the word has the form `-…-+…+`. `ẽ_i` removes the
//! bottom-most surviving `-`; `f̃_i` adds the top-most surviving `+`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{check_rank, check_residue, Error};
use crate::js::is_js;
use crate::partition::{Node, NodeKind, Partition};
use crate::weight::{weight_of, AffineWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureWord {
    entries: Vec<(Node, Sign)>,
}

impl SignatureWord {
    pub fn entries(&self) -> &[(Node, Sign)] {
        &self.entries
    }

    /// The word after cancelling `+-` pairs. Always `-^a +^b`.
    pub fn reduced(&self) -> SignatureWord {
        let mut stack: Vec<(Node, Sign)> = Vec::with_capacity(self.entries.len());
        for &(node, sign) in &self.entries {
            match (stack.last(), sign) {
                (Some((_, Sign::Plus)), Sign::Minus) => {
                    stack.pop();
                }
                _ => stack.push((node, sign)),
            }
        }
        SignatureWord { entries: stack }
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.entries.iter().filter(|(_, s)| *s == sign).count()
    }

    /// Renders the signs, e.g. `"-+"`.
    pub fn signs(&self) -> String {
        self.entries
            .iter()
            .map(|(_, s)| match s {
                Sign::Plus => '+',
                Sign::Minus => '-',
            })
            .collect()
    }
}

/// The raw `i`-signature of `λ`.
pub fn i_signature(lambda: &Partition, n: usize, i: usize) -> SignatureWord {
    let entries = lambda
        .boundary_nodes(n, i)
        .into_iter()
        .map(|b| {
            let sign = match b.kind {
                NodeKind::Addable => Sign::Plus,
                NodeKind::Removable => Sign::Minus,
            };
            (b.node, sign)
        })
        .collect();
    SignatureWord { entries }
}

/// `(ε_i(λ), φ_i(λ))`.
pub fn eps_phi(lambda: &Partition, n: usize, i: usize) -> (usize, usize) {
    let reduced = i_signature(lambda, n, i).reduced();
    (reduced.count(Sign::Minus), reduced.count(Sign::Plus))
}

/// `(ε_0(λ), …, ε_{n-1}(λ))`.
pub fn epsilon_vector(lambda: &Partition, n: usize) -> Vec<usize> {
    (0..n).map(|i| eps_phi(lambda, n, i).0).collect()
}

pub fn e_tilde(lambda: &Partition, n: usize, i: usize) -> Option<Partition> {
    let reduced = i_signature(lambda, n, i).reduced();
    reduced
        .entries
        .iter()
        .rev()
        .find(|(_, s)| *s == Sign::Minus)
        .map(|&(node, _)| lambda.with_node_removed(node))
}

pub fn f_tilde(lambda: &Partition, n: usize, i: usize) -> Option<Partition> {
    let reduced = i_signature(lambda, n, i).reduced();
    reduced
        .entries
        .iter()
        .find(|(_, s)| *s == Sign::Plus)
        .map(|&(node, _)| lambda.with_node_added(node))
}

/// Checked variant of [`e_tilde`] for untrusted residues.
pub fn try_e_tilde(lambda: &Partition, n: usize, i: usize) -> Result<Option<Partition>, Error> {
    check_residue(i, n)?;
    Ok(e_tilde(lambda, n, i))
}

/// Checked variant of [`f_tilde`] for untrusted residues.
pub fn try_f_tilde(lambda: &Partition, n: usize, i: usize) -> Result<Option<Partition>, Error> {
    check_residue(i, n)?;
    Ok(f_tilde(lambda, n, i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub partition: Partition,
    pub eps: Vec<usize>,
    #[serde(skip)]
    pub weight: AffineWeight,
    pub js: bool,
}

/// `f̃_i(from) = to`, by vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub i: usize,
    pub to: usize,
}

#[derive(Clone, Debug)]
pub struct CrystalGraph {
    n: usize,
    max_size: usize,
    vertices: Vec<Vertex>,
    index: BTreeMap<Partition, usize>,
    edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_size(&self) -> usize {
        self.max_size
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.index.contains_key(lambda)
    }

    /// Vertex counts per partition size.
    pub fn size_profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_size + 1];
        for v in &self.vertices {
            counts[v.partition.size()] += 1;
        }
        counts
    }

    /// Graphviz rendering. Jantzen-Seitz vertices get a `*` suffix.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph crystal_sl{}_{} {{", self.n, self.max_size);
        let _ = writeln!(out, "  rankdir=TB;");
        for (k, v) in self.vertices.iter().enumerate() {
            let star = if v.js { "*" } else { "" };
            let _ = writeln!(out, "  v{k} [label=\"{}{star}\"];", v.partition);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.i);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "from": self.vertices[e.from].partition,
                    "i": e.i,
                    "to": self.vertices[e.to].partition,
                })
            })
            .collect();
        serde_json::json!({ "vertices": self.vertices, "edges": edges })
    }
}

/// Breadth-first closure of `{∅}` under every `f̃_i`, keeping partitions of
/// size at most `max_size`.
pub fn build_component(n: usize, max_size: usize) -> Result<CrystalGraph, Error> {
    check_rank(n)?;
    let mut graph = CrystalGraph {
        n,
        max_size,
        vertices: Vec::new(),
        index: BTreeMap::new(),
        edges: Vec::new(),
    };
    let root = Partition::empty();
    add_vertex(&mut graph, root);
    let mut layer: VecDeque<usize> = VecDeque::from([0]);
    // each f̃ adds exactly one node, so BFS layers are partition sizes
    for _ in 0..max_size {
        let mut next = VecDeque::new();
        for i in 0..n {
            for &from in &layer {
                let Some(target) = f_tilde(&graph.vertices[from].partition, n, i) else {
                    continue;
                };
                let to = match graph.index.get(&target) {
                    Some(&to) => to,
                    None => {
                        let to = add_vertex(&mut graph, target);
                        next.push_back(to);
                        to
                    }
                };
                graph.edges.push(Edge { from, i, to });
            }
        }
        layer = next;
    }
    Ok(graph)
}

fn add_vertex(graph: &mut CrystalGraph, partition: Partition) -> usize {
    let n = graph.n;
    let k = graph.vertices.len();
    graph.index.insert(partition.clone(), k);
    graph.vertices.push(Vertex {
        eps: epsilon_vector(&partition, n),
        weight: weight_of(&partition, n),
        js: is_js(&partition, n),
        partition,
    });
    k
}
