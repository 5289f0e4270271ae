//! Separating edges, bridge contraction and blow-ups.

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, VertexSet, WeightedGraph};

/// Bridge edge instances. Loops and edges with a parallel partner are never
/// bridges.
pub fn separating_edges(g: &WeightedGraph) -> EdgeSubset {
    let all = g.all_vertices();
    let base = g.components_within(all, None);
    g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, &(a, b))| a != b && g.components_within(all, Some(i)) > base)
        .map(|(i, _)| i)
        .collect()
}

/// True iff every non-loop edge is a bridge.
pub fn is_tree_like(g: &WeightedGraph) -> bool {
    let bridges = separating_edges(g);
    g.edges()
        .iter()
        .enumerate()
        .all(|(i, &(a, b))| a == b || bridges.contains(i))
}

/// The graph obtained by contracting every bridge, together with the vertex
/// surjection onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: WeightedGraph,
    /// `vertex_map[v]` is the image of `v`.
    pub vertex_map: Vec<usize>,
}

impl Contraction {
    /// Pushes a per-vertex integer vector forward by summing over fibres.
    pub fn push_forward(&self, values: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.graph.num_vertices()];
        for (v, &x) in values.iter().enumerate() {
            out[self.vertex_map[v]] += x;
        }
        out
    }

    /// Preimage of a vertex set of the contracted graph.
    pub fn preimage(&self, set: VertexSet) -> VertexSet {
        VertexSet::from_vertices(
            (0..self.vertex_map.len()).filter(|&v| set.contains(self.vertex_map[v])),
        )
    }
}

/// Contracts every separating edge. Merged vertices carry the sum of the
/// weights; contracted vertices are numbered by their smallest preimage.
pub fn contract_separating(g: &WeightedGraph) -> Result<Contraction> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bridges = separating_edges(g);
    let n = g.num_vertices();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for e in bridges.iter() {
        let (a, b) = g.edge(e);
        let (ra, rb) = (find(&mut root, a), find(&mut root, b));
        if ra != rb {
            root[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut index_of_root = vec![usize::MAX; n];
    let mut vertex_map = vec![0; n];
    let mut next = 0;
    for v in 0..n {
        let r = find(&mut root, v);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = next;
            next += 1;
        }
        vertex_map[v] = index_of_root[r];
    }
    let mut weights = vec![0u32; next];
    for v in 0..n {
        weights[vertex_map[v]] += g.weight(v);
    }
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !bridges.contains(*i))
        .map(|(_, &(a, b))| (vertex_map[a], vertex_map[b]))
        .collect();
    Ok(Contraction {
        graph: WeightedGraph::new(weights, edges)?,
        vertex_map,
    })
}

/// A quasistable graph obtained by inserting an exceptional vertex on each
/// edge of a chosen set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUp {
    pub graph: WeightedGraph,
    /// Number of vertices of the original graph; they keep their indices.
    pub original_vertices: usize,
    /// `blown_edges[k]` is the original edge replaced by exceptional vertex
    /// `original_vertices + k`.
    pub blown_edges: Vec<usize>,
}

impl BlowUp {
    pub fn exceptional_vertex(&self, k: usize) -> usize {
        self.original_vertices + k
    }

    /// Endpoints in the original graph of the edge behind exceptional vertex `k`.
    pub fn endpoints(&self, original: &WeightedGraph, k: usize) -> (usize, usize) {
        original.edge(self.blown_edges[k])
    }

    /// Pushes a multidegree of the blow-up down to the original graph, adding
    /// the degree of exceptional vertex `k` to `sides[k]`.
    pub fn push_down(&self, values: &[i64], sides: &[usize]) -> Vec<i64> {
        let mut out = values[..self.original_vertices].to_vec();
        for (k, &side) in sides.iter().enumerate() {
            out[side] += values[self.exceptional_vertex(k)];
        }
        out
    }

    /// Contracts every exceptional vertex back onto its edge.
    pub fn contract(&self, original: &WeightedGraph) -> WeightedGraph {
        let n = self.original_vertices;
        let weights = self.graph.weights()[..n].to_vec();
        let mut edges: Vec<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| a < n && b < n)
            .collect();
        for k in 0..self.blown_edges.len() {
            edges.push(self.endpoints(original, k));
        }
        WeightedGraph::new(weights, edges).expect("contracted blow-up is well formed")
    }
}

/// Replaces each edge in `s` by a path of length two through a fresh
/// weight-0 exceptional vertex. A loop becomes a pair of parallel edges.
pub fn blow_up(g: &WeightedGraph, s: &EdgeSubset) -> Result<BlowUp> {
    if let Some(bad) = s.iter().find(|&e| e >= g.num_edges()) {
        return Err(Error::NoSuchEdge(bad));
    }
    if !g.exceptional().is_empty() {
        return Err(Error::InvalidArgument(
            "blow-ups are only taken of graphs without exceptional vertices".into(),
        ));
    }
    let n = g.num_vertices();
    let blown_edges: Vec<usize> = s.iter().collect();
    let mut weights = g.weights().to_vec();
    weights.extend(std::iter::repeat_n(0, blown_edges.len()));
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !s.contains(*i))
        .map(|(_, &e)| e)
        .collect();
    for (k, &e) in blown_edges.iter().enumerate() {
        let (a, b) = g.edge(e);
        edges.push((a, n + k));
        edges.push((b, n + k));
    }
    let graph = WeightedGraph::with_exceptional(weights, edges, n..n + blown_edges.len())?;
    Ok(BlowUp {
        graph,
        original_vertices: n,
        blown_edges,
    })
}
