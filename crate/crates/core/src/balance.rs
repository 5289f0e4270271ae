//! Balanced and strictly balanced multidegrees.
//!
//! A multidegree `d` of total degree `d` on a (quasi)stable graph of genus
//! `g` is balanced when every connected proper subcurve `Z` satisfies
//!
//! ```text
//! d_Z >= m_Z(d) = d * w_Z / (2g - 2) - delta_Z / 2
//! ```
//!
//! and every exceptional vertex has degree exactly 1. All comparisons are
//! carried out on exact fractions over the common denominator `2(2g - 2)`.

use std::cmp::Ordering;
use std::fmt;

use crate::class_group::Multidegree;
use crate::error::{Error, Result};
use crate::graph::{Subcurve, VertexSet, WeightedGraph};
use crate::surgery::contract_separating;

/// The exact rational `m_Z(d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BalanceBound {
    pub numerator: i64,
    /// Always `2(2g - 2)`; the fraction is not reduced.
    pub denominator: i64,
}

impl BalanceBound {
    pub fn new(genus: i64, canonical_degree: i64, delta: i64, d: i64) -> Self {
        let two_g_minus_two = 2 * genus - 2;
        BalanceBound {
            numerator: 2 * d * canonical_degree - delta * two_g_minus_two,
            denominator: 2 * two_g_minus_two,
        }
    }

    /// Sign of `x - m`.
    pub fn cmp_int(&self, x: i64) -> Ordering {
        (x * self.denominator).cmp(&self.numerator)
    }

    pub fn ceil(&self) -> i64 {
        -(-self.numerator).div_euclid(self.denominator)
    }

    pub fn is_integer(&self) -> bool {
        self.numerator % self.denominator == 0
    }

    /// Exact sum of two bounds with the same denominator.
    pub fn add(&self, other: &BalanceBound) -> BalanceBound {
        debug_assert_eq!(self.denominator, other.denominator);
        BalanceBound {
            numerator: self.numerator + other.numerator,
            denominator: self.denominator,
        }
    }

    pub fn equals_int(&self, x: i64) -> bool {
        self.cmp_int(x) == Ordering::Equal
    }
}

impl fmt::Display for BalanceBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(self.numerator, self.denominator).max(1);
        let (n, d) = (self.numerator / g, self.denominator / g);
        if d == 1 {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

pub fn m_lower_bound(g: &WeightedGraph, z: &Subcurve, d: i64) -> Result<BalanceBound> {
    let genus = g.genus();
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus));
    }
    if z.vertices.is_empty() {
        return Err(Error::EmptySubcurve);
    }
    Ok(BalanceBound::new(genus, z.canonical_degree, z.delta, d))
}

/// One inequality of the balancing system.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub subcurve: Subcurve,
    /// Every boundary edge has an exceptional endpoint.
    pub boundary_on_exceptional: bool,
}

/// Sum of the degrees on a vertex set, bounded below and/or above.
type RangeCheck = (VertexSet, Option<i64>, Option<i64>);

/// The inequalities of a fixed graph, one per connected proper subcurve.
#[derive(Clone, Debug)]
pub struct BalanceSystem {
    genus: i64,
    vertices: usize,
    exceptional: VertexSet,
    constraints: Vec<Constraint>,
}

impl BalanceSystem {
    /// Accepts stable graphs and quasistable graphs with exceptional marks.
    pub fn new(g: &WeightedGraph) -> Result<Self> {
        g.require_quasistable()?;
        let exc = g.exceptional();
        let constraints = g
            .connected_subcurves(true)
            .into_iter()
            .map(|z| {
                let boundary_on_exceptional = g.boundary(z.vertices).iter().all(|e| {
                    let (a, b) = g.edge(e);
                    exc.contains(a) || exc.contains(b)
                });
                Constraint {
                    subcurve: z,
                    boundary_on_exceptional,
                }
            })
            .collect();
        Ok(BalanceSystem {
            genus: g.genus(),
            vertices: g.num_vertices(),
            exceptional: exc,
            constraints,
        })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn bound(&self, z: &Subcurve, d: i64) -> BalanceBound {
        BalanceBound::new(self.genus, z.canonical_degree, z.delta, d)
    }

    fn check_len(&self, md: &Multidegree) -> Result<()> {
        if md.len() != self.vertices {
            return Err(Error::LengthMismatch {
                expected: self.vertices,
                got: md.len(),
            });
        }
        Ok(())
    }

    pub fn is_balanced(&self, md: &Multidegree) -> Result<bool> {
        self.check_len(md)?;
        let d = md.total();
        if self.exceptional.iter().any(|v| md.0[v] != 1) {
            return Ok(false);
        }
        Ok(self
            .constraints
            .iter()
            .all(|c| self.bound(&c.subcurve, d).cmp_int(md.on(c.subcurve.vertices)) != Ordering::Less))
    }

    pub fn is_strictly_balanced(&self, md: &Multidegree) -> Result<bool> {
        Ok(self.is_balanced(md)? && self.strict_given_balanced(md))
    }

    fn strict_given_balanced(&self, md: &Multidegree) -> bool {
        let d = md.total();
        self.constraints.iter().all(|c| {
            c.boundary_on_exceptional
                || self.bound(&c.subcurve, d).cmp_int(md.on(c.subcurve.vertices)) == Ordering::Greater
        })
    }

    /// Connected proper subcurves on which a balanced `md` attains its bound.
    pub fn tight_subcurves<'a>(&'a self, md: &'a Multidegree) -> impl Iterator<Item = &'a Subcurve> {
        let d = md.total();
        self.constraints
            .iter()
            .map(|c| &c.subcurve)
            .filter(move |z| self.bound(z, d).equals_int(md.on(z.vertices)))
    }

    /// Per-vertex interval from the singleton bound and the bounds on the
    /// connected components of the complement.
    pub fn vertex_box(&self, g: &WeightedGraph, d: i64) -> Vec<(i64, i64)> {
        let n = self.vertices;
        if n == 1 {
            return vec![(d, d)];
        }
        (0..n)
            .map(|v| {
                if self.exceptional.contains(v) {
                    return (1, 1);
                }
                let single = g.subcurve_unchecked(VertexSet::singleton(v));
                let lo = self.bound(&single, d).ceil();
                let rest = VertexSet::singleton(v).complement(n);
                let hi = d - g
                    .component_sets(rest)
                    .into_iter()
                    .map(|c| self.bound(&g.subcurve_unchecked(c), d).ceil())
                    .sum::<i64>();
                (lo, hi)
            })
            .collect()
    }

    /// Every balanced multidegree of total degree `d`, in lexicographic order.
    pub fn enumerate(&self, g: &WeightedGraph, d: i64) -> BalancedSet {
        let n = self.vertices;
        let bounds = self.vertex_box(g, d);
        let last = n - 1;
        // Each inequality is checked as soon as the side not containing the
        // last vertex is fully assigned.
        let mut checks: Vec<Vec<RangeCheck>> = vec![Vec::new(); n];
        for c in &self.constraints {
            let z = c.subcurve.vertices;
            let lower = self.bound(&c.subcurve, d).ceil();
            if z.contains(last) {
                let comp = z.complement(n);
                checks[comp.max().unwrap()].push((comp, None, Some(d - lower)));
            } else {
                checks[z.max().unwrap()].push((z, Some(lower), None));
            }
        }

        let mut members = Vec::new();
        let mut cur = vec![0i64; n];
        fn dfs(
            k: usize,
            partial: i64,
            d: i64,
            bounds: &[(i64, i64)],
            checks: &[Vec<RangeCheck>],
            cur: &mut Vec<i64>,
            out: &mut Vec<Multidegree>,
        ) {
            let n = cur.len();
            if k == n - 1 {
                let x = d - partial;
                if x >= bounds[k].0 && x <= bounds[k].1 {
                    cur[k] = x;
                    out.push(Multidegree(cur.clone()));
                }
                return;
            }
            for x in bounds[k].0..=bounds[k].1 {
                cur[k] = x;
                let ok = checks[k].iter().all(|&(set, lo, hi)| {
                    let s: i64 = set.iter().map(|v| cur[v]).sum();
                    lo.is_none_or(|l| s >= l) && hi.is_none_or(|h| s <= h)
                });
                if ok {
                    dfs(k + 1, partial + x, d, bounds, checks, cur, out);
                }
            }
        }
        dfs(0, 0, d, &bounds, &checks, &mut cur, &mut members);

        let strict = members.iter().map(|m| self.strict_given_balanced(m)).collect();
        BalancedSet {
            degree: d,
            members,
            strict,
        }
    }
}

/// The balanced multidegrees of one total degree, flagged by strictness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedSet {
    pub degree: i64,
    pub members: Vec<Multidegree>,
    /// `strict[i]` tells whether `members[i]` is strictly balanced.
    pub strict: Vec<bool>,
}

impl BalancedSet {
    pub fn strict_members(&self) -> Vec<Multidegree> {
        self.members
            .iter()
            .zip(&self.strict)
            .filter(|(_, &s)| s)
            .map(|(m, _)| m.clone())
            .collect()
    }

    pub fn num_balanced(&self) -> usize {
        self.members.len()
    }

    pub fn num_strict(&self) -> usize {
        self.strict.iter().filter(|&&s| s).count()
    }
}

pub fn is_balanced(g: &WeightedGraph, md: &Multidegree) -> Result<bool> {
    BalanceSystem::new(g)?.is_balanced(md)
}

pub fn is_strictly_balanced(g: &WeightedGraph, md: &Multidegree) -> Result<bool> {
    BalanceSystem::new(g)?.is_strictly_balanced(md)
}

pub fn enumerate_balanced(g: &WeightedGraph, d: i64) -> Result<BalancedSet> {
    Ok(BalanceSystem::new(g)?.enumerate(g, d))
}

/// `B_d = B̄_d`: every balanced multidegree of degree `d` is strict.
pub fn is_d_general(g: &WeightedGraph, d: i64) -> Result<bool> {
    g.require_stable()?;
    let set = enumerate_balanced(g, d)?;
    Ok(set.num_strict() == set.num_balanced())
}

/// d-generality of the graph with every bridge contracted.
pub fn is_weakly_d_general(g: &WeightedGraph, d: i64) -> Result<bool> {
    g.require_stable()?;
    is_d_general(&contract_separating(g)?.graph, d)
}

/// Pushes a balanced multidegree forward to the bridge-contracted graph.
pub fn alpha(g: &WeightedGraph, md: &Multidegree) -> Result<Multidegree> {
    g.require_stable()?;
    if !is_balanced(g, md)? {
        return Err(Error::Unbalanced(md.0.clone()));
    }
    Ok(Multidegree(contract_separating(g)?.push_forward(&md.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surgery::blow_up;

    fn theta() -> WeightedGraph {
        WeightedGraph::new(vec![0, 0], vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn md(v: &[i64]) -> Multidegree {
        Multidegree(v.to_vec())
    }

    #[test]
    fn bound_examples() {
        let t = theta();
        let z = t.subcurve(VertexSet::singleton(0)).unwrap();
        let m = m_lower_bound(&t, &z, 1).unwrap();
        assert!(m.equals_int(-1));
        assert_eq!(m.to_string(), "-1");
        let m = m_lower_bound(&t, &z, 2).unwrap();
        assert_eq!(m.to_string(), "-1/2");
        assert_eq!(m.ceil(), 0);
        assert_eq!(m.denominator, 4);
        let full = t.subcurve(t.all_vertices()).unwrap();
        for d in -5..6 {
            assert!(m_lower_bound(&t, &full, d).unwrap().equals_int(d));
        }
    }

    #[test]
    fn balanced_examples() {
        let t = theta();
        assert!(is_balanced(&t, &md(&[-1, 2])).unwrap());
        assert!(!is_balanced(&t, &md(&[-2, 3])).unwrap());
        let single = WeightedGraph::new(vec![2], vec![]).unwrap();
        for d in -4..5 {
            assert!(is_strictly_balanced(&single, &md(&[d])).unwrap());
        }
        let bridge = WeightedGraph::new(vec![1, 1], vec![(0, 1)]).unwrap();
        let b = blow_up(&bridge, &[0].into_iter().collect()).unwrap();
        assert!(!is_balanced(&b.graph, &md(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn strict_examples() {
        let t = theta();
        assert!(is_strictly_balanced(&t, &md(&[0, 1])).unwrap());
        assert!(!is_strictly_balanced(&t, &md(&[-1, 2])).unwrap());
        assert!(is_strictly_balanced(&t, &md(&[1, 1])).unwrap());

        let bridge = WeightedGraph::new(vec![1, 1], vec![(0, 1)]).unwrap();
        let b = blow_up(&bridge, &[0].into_iter().collect()).unwrap();
        assert!(is_strictly_balanced(&b.graph, &md(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let t = theta();
        let s = enumerate_balanced(&t, 1).unwrap();
        assert_eq!(s.members, vec![md(&[-1, 2]), md(&[0, 1]), md(&[1, 0]), md(&[2, -1])]);
        assert_eq!(s.strict_members(), vec![md(&[0, 1]), md(&[1, 0])]);

        let s = enumerate_balanced(&t, 2).unwrap();
        assert_eq!(s.members, vec![md(&[0, 2]), md(&[1, 1]), md(&[2, 0])]);
        assert_eq!(s.num_strict(), 3);

        let single = WeightedGraph::new(vec![1], vec![(0, 0)]).unwrap();
        let s = enumerate_balanced(&single, 7).unwrap();
        assert_eq!((s.members.clone(), s.num_strict()), (vec![md(&[7])], 1));
    }

    #[test]
    fn generality_examples() {
        let t = theta();
        assert!(!is_d_general(&t, 1).unwrap());
        assert!(is_d_general(&t, 2).unwrap());
        let single = WeightedGraph::new(vec![0], vec![(0, 0), (0, 0)]).unwrap();
        assert!((-4..8).all(|d| is_d_general(&single, d).unwrap()));

        let tree = WeightedGraph::new(vec![1, 0, 1], vec![(0, 1), (1, 2), (1, 1)]).unwrap();
        assert!((-4..8).all(|d| is_weakly_d_general(&tree, d).unwrap()));
        for d in -4..8 {
            assert_eq!(is_weakly_d_general(&t, d).unwrap(), is_d_general(&t, d).unwrap());
        }

        let pendant =
            WeightedGraph::new(vec![0, 0, 1], vec![(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        let contracted = WeightedGraph::new(vec![0, 1], vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(
            is_weakly_d_general(&pendant, 3).unwrap(),
            is_d_general(&contracted, 3).unwrap()
        );
    }

    #[test]
    fn alpha_examples() {
        let t = theta();
        assert_eq!(alpha(&t, &md(&[-1, 2])).unwrap(), md(&[-1, 2]));

        // Pendant weight-1 vertex 2 hangs off vertex 1; genus 3.
        let pendant =
            WeightedGraph::new(vec![0, 0, 1], vec![(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        assert!(is_balanced(&pendant, &md(&[0, 1, 1])).unwrap());
        assert_eq!(alpha(&pendant, &md(&[0, 1, 1])).unwrap(), md(&[0, 2]));
        assert!(matches!(alpha(&pendant, &md(&[9, -9, 0])), Err(Error::Unbalanced(_))));
    }

    #[test]
    fn rejects_low_genus() {
        let g = WeightedGraph::new(vec![1], vec![]).unwrap();
        assert_eq!(enumerate_balanced(&g, 0), Err(Error::GenusTooSmall(1)));
    }
}
