//! Exhaustive generation of stable weighted graphs up to isomorphism.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::iso::{canonical_form, CanonicalForm};

/// Hard ceiling on the number of vertices a census may request.
pub const MAX_CENSUS_VERTICES: usize = 6;

/// Non-increasing weight vectors of length `k` with sum at most `budget`.
fn weight_vectors(k: usize, budget: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, cap: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for w in (0..=cap.min(budget)).rev() {
            cur.push(w);
            rec(k, w, budget - w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, budget, budget, &mut Vec::new(), &mut out);
    out
}

/// All multisets of size `size` drawn from `0..n`, as sorted index lists.
fn multisets(n: usize, size: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            visit(cur);
            return;
        }
        for i in from..n {
            cur.push(i);
            rec(n, size, i, cur, visit);
            cur.pop();
        }
    }
    rec(n, size, 0, &mut Vec::with_capacity(size), visit);
}

fn graphs_with_weights(genus: u32, weights: &[u32]) -> BTreeSet<CanonicalForm> {
    let k = weights.len();
    let b1 = genus - weights.iter().sum::<u32>();
    let num_edges = b1 as usize + k - 1;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();

    let mut found = BTreeSet::new();
    let mut valency = vec![0usize; k];
    multisets(pairs.len(), num_edges, &mut |chosen| {
        valency.iter_mut().for_each(|x| *x = 0);
        for &p in chosen {
            let (a, b) = pairs[p];
            valency[a] += 1;
            valency[b] += 1;
        }
        if (0..k).any(|v| weights[v] == 0 && valency[v] < 3) {
            return;
        }
        let edges = chosen.iter().map(|&p| pairs[p]).collect();
        let g = WeightedGraph::new(weights.to_vec(), edges).expect("pairs are in range");
        if g.is_connected() {
            found.insert(canonical_form(&g));
        }
    });
    found
}

/// Every connected stable weighted graph of the given genus with at most
/// `max_vertices` vertices, one per isomorphism class, ordered by vertex
/// count and then by canonical form.
pub fn census(genus: i64, max_vertices: usize) -> Result<Vec<WeightedGraph>> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    if !(1..=MAX_CENSUS_VERTICES).contains(&max_vertices) {
        return Err(Error::InvalidArgument(format!(
            "max_vertices must lie in 1..={MAX_CENSUS_VERTICES}, got {max_vertices}"
        )));
    }
    let genus = u32::try_from(genus).map_err(|_| Error::Overflow)?;
    let jobs: Vec<Vec<u32>> = (1..=max_vertices)
        .flat_map(|k| weight_vectors(k, genus))
        .collect();
    let forms: BTreeSet<(usize, CanonicalForm)> = jobs
        .par_iter()
        .map(|w| graphs_with_weights(genus, w))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .map(|f| (f.weights.len(), f))
        .collect();
    Ok(forms.into_iter().map(|(_, f)| f.to_graph()).collect())
}
