//! Weighted multigraphs modelling dual graphs of nodal curves.
//!
//! Vertices are irreducible components (weight = geometric genus), edges are
//! nodes. Edges are stored as instances, so two parallel edges are distinct
//! members and either can be selected on its own. A loop at `v` is stored as
//! `(v, v)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest number of vertices a graph may have; vertex subsets are bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    /// Complement inside the vertex set of an `n`-vertex graph.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of edge instances, identified by their index in
/// [`WeightedGraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset(pub BTreeSet<usize>);

impl EdgeSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSubset(iter.into_iter().collect())
    }
}

/// A finite multigraph with loops, non-negative vertex weights and an
/// optional set of vertices flagged as exceptional components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    weights: Vec<u32>,
    edges: Vec<(usize, usize)>,
    exceptional: VertexSet,
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedGraph {{ weights: {:?}, edges: {:?}", self.weights, self.edges)?;
        if !self.exceptional.is_empty() {
            write!(f, ", exceptional: {:?}", self.exceptional)?;
        }
        write!(f, " }}")
    }
}

/// Result of [`WeightedGraph::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    pub genus: i64,
    pub connected: bool,
    pub stable: bool,
    pub quasistable: bool,
}

/// Statistics of the subcurve supported on a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subcurve {
    pub vertices: VertexSet,
    /// Arithmetic genus: sum of weights plus internal edges minus vertices plus one.
    pub genus: i64,
    /// Number of edges joining the set to its complement.
    pub delta: i64,
    /// Degree of the dualizing sheaf on the subcurve, `2 genus - 2 + delta`.
    pub canonical_degree: i64,
}

impl WeightedGraph {
    /// Builds a graph with no exceptional vertices.
    pub fn new(weights: Vec<u32>, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_exceptional(weights, edges, std::iter::empty())
    }

    pub fn with_exceptional<I: IntoIterator<Item = usize>>(
        weights: Vec<u32>,
        edges: Vec<(usize, usize)>,
        exceptional: I,
    ) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "graph has {n} vertices, at most {MAX_VERTICES} are supported"
            )));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} = ({a}, {b}) references a missing vertex"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        let mut exc = VertexSet::EMPTY;
        for v in exceptional {
            if v >= n {
                return Err(Error::NoSuchVertex(v));
            }
            exc.insert(v);
        }
        Ok(WeightedGraph {
            weights,
            edges: normalized,
            exceptional: exc,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.weights.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v]
    }

    /// Edge instances as `(low, high)` endpoint pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn exceptional(&self) -> VertexSet {
        self.exceptional
    }

    pub fn is_exceptional(&self, v: usize) -> bool {
        self.exceptional.contains(v)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.num_vertices())
    }

    /// Valency with loops counted twice.
    pub fn valency(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v && b == v).count()
    }

    fn non_loop_endpoints(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a != b && (a == v || b == v))
            .count()
    }

    /// Number of connected components of the subgraph induced on `set`,
    /// ignoring the edges in `skip`.
    pub(crate) fn components_within(&self, set: VertexSet, skip: Option<usize>) -> usize {
        let mut parent: Vec<usize> = (0..self.num_vertices()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        let mut comps = set.len();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if Some(i) == skip || !set.contains(a) || !set.contains(b) {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    /// Connected components of the induced subgraph on `set`, each as a
    /// vertex set, ordered by smallest member.
    pub fn component_sets(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    let other = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if set.contains(other) && !comp.contains(other) {
                        comp.insert(other);
                        stack.push(other);
                    }
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.all_vertices(), None) == 1
    }

    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        !set.is_empty() && self.components_within(set, None) == 1
    }

    /// First Betti number `#E - #V + #components`.
    pub fn first_betti(&self) -> i64 {
        self.num_edges() as i64 - self.num_vertices() as i64
            + self.components_within(self.all_vertices(), None) as i64
    }

    /// Genus `sum of weights + b1`.
    pub fn genus(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum::<i64>() + self.first_betti()
    }

    pub fn validate(&self) -> Diagnostics {
        let genus = self.genus();
        let connected = self.is_connected();
        let base = connected && genus >= 2;
        let n = self.num_vertices();

        let stable = base
            && self.exceptional.is_empty()
            && (0..n).all(|v| self.weights[v] > 0 || self.valency(v) >= 3);

        let exceptional_ok = self.exceptional.iter().all(|v| {
            self.weights[v] == 0 && self.loop_count(v) == 0 && self.non_loop_endpoints(v) == 2
        });
        let exceptional_apart = self.edges.iter().all(|&(a, b)| {
            a == b || !(self.exceptional.contains(a) && self.exceptional.contains(b))
        });
        let quasistable = base
            && exceptional_ok
            && exceptional_apart
            && (0..n).all(|v| self.weights[v] > 0 || self.valency(v) >= 2);

        Diagnostics {
            genus,
            connected,
            stable,
            quasistable,
        }
    }

    /// Checks the standing assumptions for a stable curve of genus at least 2.
    pub fn require_stable(&self) -> Result<()> {
        self.require_genus()?;
        let diag = self.validate();
        if !diag.stable {
            return Err(Error::NotStable(self.instability_reason()));
        }
        Ok(())
    }

    /// Stable, or a quasistable blow-up carrying exceptional marks.
    pub fn require_quasistable(&self) -> Result<()> {
        self.require_genus()?;
        let diag = self.validate();
        if !diag.quasistable {
            return Err(Error::NotStable(self.instability_reason()));
        }
        Ok(())
    }

    pub(crate) fn require_genus(&self) -> Result<()> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let g = self.genus();
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(())
    }

    fn instability_reason(&self) -> String {
        for v in 0..self.num_vertices() {
            if self.is_exceptional(v) {
                if self.weights[v] != 0 || self.non_loop_endpoints(v) != 2 || self.loop_count(v) > 0
                {
                    return format!("exceptional vertex {v} must have weight 0 and two non-loop edges");
                }
                continue;
            }
            let min = if self.exceptional.is_empty() { 3 } else { 2 };
            if self.weights[v] == 0 && self.valency(v) < min {
                return format!(
                    "vertex {v} has weight 0 and valency {} < {min}",
                    self.valency(v)
                );
            }
        }
        for &(a, b) in &self.edges {
            if a != b && self.is_exceptional(a) && self.is_exceptional(b) {
                return format!("exceptional vertices {a} and {b} are adjacent");
            }
        }
        "stability conditions violated".into()
    }

    /// Statistics `(g_Z, delta_Z, w_Z)` of the subcurve on `set`.
    pub fn subcurve(&self, set: VertexSet) -> Result<Subcurve> {
        if set.is_empty() {
            return Err(Error::EmptySubcurve);
        }
        if let Some(bad) = set.iter().find(|&v| v >= self.num_vertices()) {
            return Err(Error::NoSuchVertex(bad));
        }
        Ok(self.subcurve_unchecked(set))
    }

    pub(crate) fn subcurve_unchecked(&self, set: VertexSet) -> Subcurve {
        let mut internal = 0i64;
        let mut delta = 0i64;
        for &(a, b) in &self.edges {
            match (set.contains(a), set.contains(b)) {
                (true, true) => internal += 1,
                (true, false) | (false, true) => delta += 1,
                _ => {}
            }
        }
        let weight: i64 = set.iter().map(|v| self.weights[v] as i64).sum();
        let genus = weight + internal - set.len() as i64 + 1;
        Subcurve {
            vertices: set,
            genus,
            delta,
            canonical_degree: 2 * genus - 2 + delta,
        }
    }

    /// Edge instances joining `set` to its complement (loops never appear).
    pub fn boundary(&self, set: VertexSet) -> EdgeSubset {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(_, &(a, b))| set.contains(a) != set.contains(b))
            .map(|(i, _)| i)
            .collect()
    }

    /// Every nonempty vertex set inducing a connected subgraph, in
    /// lexicographic order of sorted vertex lists. With `proper`, the full
    /// vertex set is left out.
    pub fn connected_subcurves(&self, proper: bool) -> Vec<Subcurve> {
        let full = self.all_vertices();
        let mut sets: Vec<VertexSet> = (1..=full.0)
            .map(VertexSet)
            .filter(|s| !(proper && *s == full) && self.is_connected_set(*s))
            .collect();
        sets.sort_by_key(|s| s.to_vec());
        sets.into_iter().map(|s| self.subcurve_unchecked(s)).collect()
    }

    /// Graph with vertices relabelled by `perm` (old vertex `v` becomes
    /// `perm[v]`); edges keep their order.
    pub fn relabel(&self, perm: &[usize]) -> WeightedGraph {
        let n = self.num_vertices();
        let mut weights = vec![0; n];
        for v in 0..n {
            weights[perm[v]] = self.weights[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        let exceptional = VertexSet::from_vertices(self.exceptional.iter().map(|v| perm[v]));
        WeightedGraph {
            weights,
            edges,
            exceptional,
        }
    }
}
