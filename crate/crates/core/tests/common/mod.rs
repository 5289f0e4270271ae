//! Independent oracles. Nothing here calls the code paths it is used to check.

#![allow(dead_code)]

use neron_core::{Multidegree, WeightedGraph};

/// Spanning trees of the loop-free multigraph by deletion-contraction.
pub fn spanning_trees(n: usize, edges: &[(usize, usize)]) -> u64 {
    let edges: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| a != b).collect();
    if n == 1 {
        return 1;
    }
    let Some(&(a, b)) = edges.first() else {
        return 0;
    };
    let rest = &edges[1..];
    let deleted = spanning_trees(n, rest);
    // Contract b onto a, renumbering the last vertex into b's slot.
    let relabel = |v: usize| {
        let v = if v == b { a } else { v };
        if v == n - 1 {
            b
        } else {
            v
        }
    };
    let contracted: Vec<(usize, usize)> = rest.iter().map(|&(x, y)| (relabel(x), relabel(y))).collect();
    deleted + spanning_trees(n - 1, &contracted)
}

pub fn tree_count(g: &WeightedGraph) -> u64 {
    spanning_trees(g.num_vertices(), g.edges())
}

/// Exact fraction with `i128` parts, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Q(pub i128, pub i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Q {
    pub fn new(n: i128, d: i128) -> Q {
        let s = if d < 0 { -1 } else { 1 };
        let g = gcd(n, d).max(1);
        Q(s * n / g, s * d / g)
    }
    pub fn sub(self, o: Q) -> Q {
        Q::new(self.0 * o.1 - o.0 * self.1, self.1 * o.1)
    }
    pub fn mul(self, o: Q) -> Q {
        Q::new(self.0 * o.0, self.1 * o.1)
    }
    pub fn div(self, o: Q) -> Q {
        Q::new(self.0 * o.1, self.1 * o.0)
    }
    pub fn is_int(self) -> bool {
        self.1 == 1
    }
}

/// Whether `d1 - d2` lies in the integer span of the Laplacian columns:
/// solve the reduced Laplacian system over the rationals and test that the
/// solution is integral.
pub fn in_twist_lattice(g: &WeightedGraph, d1: &[i64], d2: &[i64]) -> bool {
    let n = g.num_vertices();
    let diff: Vec<i64> = d1.iter().zip(d2).map(|(a, b)| a - b).collect();
    if diff.iter().sum::<i64>() != 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let mut lap = vec![vec![0i64; n]; n];
    for &(a, b) in g.edges() {
        if a != b {
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
    }
    let m = n - 1;
    let mut aug: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row: Vec<Q> = (0..m).map(|j| Q::new(lap[i][j] as i128, 1)).collect();
            row.push(Q::new(diff[i] as i128, 1));
            row
        })
        .collect();
    for c in 0..m {
        let p = (c..m).find(|&r| aug[r][c].0 != 0).expect("reduced Laplacian is nonsingular");
        aug.swap(c, p);
        for r in 0..m {
            if r != c && aug[r][c].0 != 0 {
                let f = aug[r][c].div(aug[c][c]);
                for k in c..=m {
                    aug[r][k] = aug[r][k].sub(f.mul(aug[c][k]));
                }
            }
        }
    }
    (0..m).all(|i| aug[i][m].div(aug[i][i]).is_int())
}

/// Arithmetic genus and boundary count of an arbitrary vertex subset.
fn stats(g: &WeightedGraph, set: u64) -> (i64, i64) {
    let inside = |v: usize| set >> v & 1 == 1;
    let mut internal = 0;
    let mut delta = 0;
    for &(a, b) in g.edges() {
        match (inside(a), inside(b)) {
            (true, true) => internal += 1,
            (true, false) | (false, true) => delta += 1,
            _ => {}
        }
    }
    let verts = (0..g.num_vertices()).filter(|&v| inside(v)).count() as i64;
    let weight: i64 = (0..g.num_vertices()).filter(|&v| inside(v)).map(|v| g.weight(v) as i64).sum();
    (weight + internal - verts + 1, delta)
}

/// Balancing against every proper subset, connected or not, with the
/// comparison `d_Z >= d w_Z / (2g-2) - delta_Z / 2` done in `i128`.
/// Returns (balanced, strictly balanced).
pub fn brute_balanced(g: &WeightedGraph, md: &[i64]) -> (bool, bool) {
    let n = g.num_vertices();
    let genus = g.genus() as i128;
    let d: i64 = md.iter().sum();
    if g.exceptional().iter().any(|v| md[v] != 1) {
        return (false, false);
    }
    let mut strict = true;
    for set in 1..(1u64 << n) - 1 {
        let (gz, dz) = stats(g, set);
        let wz = (2 * gz - 2 + dz) as i128;
        let degz: i128 = (0..n).filter(|&v| set >> v & 1 == 1).map(|v| md[v] as i128).sum();
        // Compare 2(2g-2) d_Z with 2 d w_Z - (2g-2) delta_Z.
        let lhs = 2 * (2 * genus - 2) * degz;
        let rhs = 2 * d as i128 * wz - (2 * genus - 2) * dz as i128;
        if lhs < rhs {
            return (false, false);
        }
        if lhs == rhs {
            let boundary_exc = g.edges().iter().all(|&(a, b)| {
                let crosses = (set >> a & 1) != (set >> b & 1);
                !crosses || g.is_exceptional(a) || g.is_exceptional(b)
            });
            if !boundary_exc {
                strict = false;
            }
        }
    }
    (true, strict)
}

/// Brute-force balanced set over the box `[lo, hi]^n` with total `d`.
pub fn brute_balanced_set(g: &WeightedGraph, d: i64, lo: i64, hi: i64) -> (Vec<Multidegree>, usize) {
    let n = g.num_vertices();
    let mut out = Vec::new();
    let mut strict = 0;
    let mut cur = vec![lo; n];
    loop {
        if cur.iter().sum::<i64>() == d {
            let (b, s) = brute_balanced(g, &cur);
            if b {
                out.push(Multidegree(cur.clone()));
                strict += usize::from(s);
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                return (out, strict);
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] <= hi {
                break;
            }
            cur[i] = lo;
        }
    }
}
