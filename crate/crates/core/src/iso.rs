//! Isomorphism of small weighted multigraphs by exhaustive relabelling.
//!
//! Vertices are first sorted by a cheap invariant (exceptional flag, weight,
//! valency, loop count); only permutations inside blocks of equal invariant
//! are tried. The lexicographically smallest relabelled encoding is the
//! canonical form.

use sha2::{Digest, Sha256};

use crate::graph::WeightedGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub weights: Vec<u32>,
    pub exceptional: Vec<bool>,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> WeightedGraph {
        let exc = self
            .exceptional
            .iter()
            .enumerate()
            .filter(|(_, &x)| x)
            .map(|(v, _)| v);
        WeightedGraph::with_exceptional(self.weights.clone(), self.edges.clone(), exc)
            .expect("canonical form encodes a valid graph")
    }

    /// Short stable identifier: first 16 hex digits of a SHA-256 digest.
    pub fn id(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{:?}|{:?}|{:?}", self.weights, self.exceptional, self.edges));
        h.finalize()
            .iter()
            .take(8)
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

fn invariant(g: &WeightedGraph, v: usize) -> (bool, u32, usize, usize) {
    (g.is_exceptional(v), g.weight(v), g.valency(v), g.loop_count(v))
}

fn encode(g: &WeightedGraph, perm: &[usize]) -> CanonicalForm {
    let h = g.relabel(perm);
    let mut edges = h.edges().to_vec();
    edges.sort_unstable();
    CanonicalForm {
        weights: h.weights().to_vec(),
        exceptional: (0..h.num_vertices()).map(|v| h.is_exceptional(v)).collect(),
        edges,
    }
}

pub fn canonical_form(g: &WeightedGraph) -> CanonicalForm {
    let n = g.num_vertices();
    let invariants: Vec<_> = (0..n).map(|v| invariant(g, v)).collect();
    let mut slots = invariants.clone();
    slots.sort_unstable();

    struct Search<'a> {
        g: &'a WeightedGraph,
        invariants: Vec<(bool, u32, usize, usize)>,
        slots: Vec<(bool, u32, usize, usize)>,
        perm: Vec<usize>,
        used: Vec<bool>,
        best: Option<CanonicalForm>,
    }

    impl Search<'_> {
        // Position `pos` may only receive a vertex whose invariant matches
        // the sorted invariant list at `pos`.
        fn run(&mut self, pos: usize) {
            if pos == self.perm.len() {
                let form = encode(self.g, &self.perm);
                if self.best.as_ref().is_none_or(|b| form < *b) {
                    self.best = Some(form);
                }
                return;
            }
            for v in 0..self.perm.len() {
                if !self.used[v] && self.invariants[v] == self.slots[pos] {
                    self.used[v] = true;
                    self.perm[v] = pos;
                    self.run(pos + 1);
                    self.used[v] = false;
                }
            }
        }
    }

    let mut search = Search {
        g,
        invariants,
        slots,
        perm: vec![0; n],
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    search.best.expect("at least one relabelling")
}

pub fn is_isomorphic(a: &WeightedGraph, b: &WeightedGraph) -> bool {
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return false;
    }
    let mut ia: Vec<_> = (0..a.num_vertices()).map(|v| invariant(a, v)).collect();
    let mut ib: Vec<_> = (0..b.num_vertices()).map(|v| invariant(b, v)).collect();
    ia.sort_unstable();
    ib.sort_unstable();
    ia == ib && canonical_form(a) == canonical_form(b)
}
