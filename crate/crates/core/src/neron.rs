//! Irreducible components of the compactified Jacobian and the Néron-type
//! test.
//!
//! Components are indexed by pairs `(S, d)` with `S` a set of bridges and
//! `d` strictly balanced on the blow-up at `S`. The compactified Jacobian is
//! of Néron type when there are as many such pairs as multidegree classes.
//! Three independent decision procedures are provided and must agree:
//! counting components, the tight-subcurve criterion on balanced
//! multidegrees, and weak d-generality of the bridge-contracted graph.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::balance::{is_weakly_d_general, BalanceSystem, BalancedSet};
use crate::class_group::{class_group, ClassGroup, Multidegree};
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, WeightedGraph};
use crate::surgery::{blow_up, is_tree_like, separating_edges, BlowUp};

/// An index of an irreducible component: a set of bridges and a strictly
/// balanced multidegree on the corresponding blow-up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Stratum {
    pub edges: EdgeSubset,
    pub multidegree: Multidegree,
}

/// The blow-up locus and strictly balanced multidegree attached to the class
/// of a balanced multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalPair {
    pub class_rep: Multidegree,
    pub s_mu: EdgeSubset,
    pub d_mu: Multidegree,
}

impl ExtremalPair {
    pub fn as_stratum(&self) -> Stratum {
        Stratum {
            edges: self.s_mu.clone(),
            multidegree: self.d_mu.clone(),
        }
    }
}

/// Which decision procedure [`is_neron_type`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Count,
    Criterion,
    WeaklyGeneral,
    All,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(Route::Count),
            "criterion" => Ok(Route::Criterion),
            "weakly-general" | "weakly_general" => Ok(Route::WeaklyGeneral),
            "all" => Ok(Route::All),
            other => Err(Error::InvalidArgument(format!(
                "unknown route {other:?}; expected count, criterion, weakly-general or all"
            ))),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Count => "count",
            Route::Criterion => "criterion",
            Route::WeaklyGeneral => "weakly-general",
            Route::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RouteVerdicts {
    pub count: Option<bool>,
    pub criterion: Option<bool>,
    pub weakly_general: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeronVerdict {
    pub verdict: bool,
    pub component_count: usize,
    pub class_group_order: i64,
    pub routes: RouteVerdicts,
}

/// Per-graph state shared by the component computations: the balancing
/// system of the graph, its class group, its bridges and a cache of blow-ups.
pub struct CurveAnalysis<'a> {
    graph: &'a WeightedGraph,
    system: BalanceSystem,
    class_group: ClassGroup,
    bridges: EdgeSubset,
    blowups: HashMap<EdgeSubset, (BlowUp, BalanceSystem)>,
}

impl<'a> CurveAnalysis<'a> {
    pub fn new(graph: &'a WeightedGraph) -> Result<Self> {
        graph.require_stable()?;
        Ok(CurveAnalysis {
            graph,
            system: BalanceSystem::new(graph)?,
            class_group: class_group(graph)?,
            bridges: separating_edges(graph),
            blowups: HashMap::new(),
        })
    }

    pub fn graph(&self) -> &WeightedGraph {
        self.graph
    }

    pub fn system(&self) -> &BalanceSystem {
        &self.system
    }

    pub fn class_group(&self) -> &ClassGroup {
        &self.class_group
    }

    pub fn bridges(&self) -> &EdgeSubset {
        &self.bridges
    }

    pub fn balanced(&self, d: i64) -> BalancedSet {
        self.system.enumerate(self.graph, d)
    }

    fn blow_up_cached(&mut self, s: &EdgeSubset) -> Result<&(BlowUp, BalanceSystem)> {
        if !self.blowups.contains_key(s) {
            let b = blow_up(self.graph, s)?;
            let sys = BalanceSystem::new(&b.graph)?;
            self.blowups.insert(s.clone(), (b, sys));
        }
        Ok(&self.blowups[s])
    }

    fn require_balanced(&self, md: &Multidegree) -> Result<()> {
        if !self.system.is_balanced(md)? {
            return Err(Error::Unbalanced(md.0.clone()));
        }
        Ok(())
    }

    /// Union of the boundaries of the connected proper subcurves on which
    /// `md` is tight.
    pub fn s_of_mu(&self, md: &Multidegree) -> Result<EdgeSubset> {
        self.require_balanced(md)?;
        let mut s = BTreeSet::new();
        for z in self.system.tight_subcurves(md) {
            s.extend(self.graph.boundary(z.vertices).iter());
        }
        Ok(EdgeSubset(s))
    }

    /// Finds the strictly balanced multidegree on the blow-up at `S(mu)`
    /// that restricts to `md` once each exceptional degree is returned to
    /// one of its two endpoints. Exactly one such multidegree must exist.
    pub fn extremal_pair(&mut self, md: &Multidegree) -> Result<ExtremalPair> {
        let s_mu = self.s_of_mu(md)?;
        let graph = self.graph;
        let (blown, system) = self.blow_up_cached(&s_mu)?;
        let n = graph.num_vertices();
        let k = blown.blown_edges.len();

        let mut candidates = BTreeSet::new();
        for mask in 0u64..(1u64 << k) {
            let mut values = md.0.clone();
            values.extend(std::iter::repeat_n(1, k));
            for j in 0..k {
                let (a, b) = blown.endpoints(graph, j);
                let side = if mask >> j & 1 == 0 { a } else { b };
                values[side] -= 1;
            }
            debug_assert_eq!(values.len(), n + k);
            candidates.insert(Multidegree(values));
        }
        let matches: Vec<Multidegree> = candidates
            .into_iter()
            .filter(|c| system.is_strictly_balanced(c).unwrap_or(false))
            .collect();

        match matches.as_slice() {
            [d_mu] => Ok(ExtremalPair {
                class_rep: md.clone(),
                s_mu,
                d_mu: d_mu.clone(),
            }),
            _ => Err(Error::TheoremViolation(format!(
                "extremal pair is not unique: graph {:?}, degree {}, class of {:?}, \
                 S(mu) = {:?}, candidates {:?}",
                graph,
                md.total(),
                md,
                s_mu.0,
                matches
            ))),
        }
    }

    /// Pairs `(S, d)` with `S` a set of bridges and `d` strictly balanced on
    /// the blow-up at `S`; ordered by `|S|`, then `S`, then `d`.
    pub fn strata_index(&mut self, d: i64) -> Result<Vec<Stratum>> {
        let bridges: Vec<usize> = self.bridges.iter().collect();
        let mut subsets: Vec<EdgeSubset> = (0u64..(1u64 << bridges.len()))
            .map(|mask| {
                bridges
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        subsets.sort_by(|a: &EdgeSubset, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));

        let mut out = Vec::new();
        for s in subsets {
            let (blown, system) = self.blow_up_cached(&s)?;
            for m in system.enumerate(&blown.graph, d).strict_members() {
                out.push(Stratum {
                    edges: s.clone(),
                    multidegree: m,
                });
            }
        }
        Ok(out)
    }

    pub fn component_count(&mut self, d: i64) -> Result<usize> {
        Ok(self.strata_index(d)?.len())
    }

    /// Every tight connected proper subcurve of every balanced multidegree
    /// has only bridges on its boundary.
    pub fn criterion(&self, d: i64) -> bool {
        self.balanced(d).members.iter().all(|md| {
            self.system
                .tight_subcurves(md)
                .all(|z| self.graph.boundary(z.vertices).is_subset(&self.bridges))
        })
    }

    pub fn is_neron_type(&mut self, d: i64, route: Route) -> Result<NeronVerdict> {
        let component_count = self.component_count(d)?;
        let order = self.class_group.order;
        let mut routes = RouteVerdicts::default();
        if matches!(route, Route::Count | Route::All) {
            routes.count = Some(component_count as i64 == order);
        }
        if matches!(route, Route::Criterion | Route::All) {
            routes.criterion = Some(self.criterion(d));
        }
        if matches!(route, Route::WeaklyGeneral | Route::All) {
            routes.weakly_general = Some(is_weakly_d_general(self.graph, d)?);
        }
        let given: Vec<bool> = [routes.count, routes.criterion, routes.weakly_general]
            .into_iter()
            .flatten()
            .collect();
        if given.iter().any(|&v| v != given[0]) {
            return Err(Error::TheoremViolation(format!(
                "Neron-type routes disagree on {:?} at degree {d}: count {:?}, criterion {:?}, \
                 weakly-general {:?}",
                self.graph, routes.count, routes.criterion, routes.weakly_general
            )));
        }
        Ok(NeronVerdict {
            verdict: given[0],
            component_count,
            class_group_order: order,
            routes,
        })
    }
}

pub fn s_of_mu(g: &WeightedGraph, md: &Multidegree) -> Result<EdgeSubset> {
    CurveAnalysis::new(g)?.s_of_mu(md)
}

pub fn extremal_pair(g: &WeightedGraph, md: &Multidegree) -> Result<ExtremalPair> {
    CurveAnalysis::new(g)?.extremal_pair(md)
}

pub fn strata_index(g: &WeightedGraph, d: i64) -> Result<Vec<Stratum>> {
    CurveAnalysis::new(g)?.strata_index(d)
}

pub fn component_count(g: &WeightedGraph, d: i64) -> Result<usize> {
    CurveAnalysis::new(g)?.component_count(d)
}

pub fn is_neron_type(g: &WeightedGraph, d: i64, route: Route) -> Result<NeronVerdict> {
    CurveAnalysis::new(g)?.is_neron_type(d, route)
}

/// Both sides of the degree `g - 1` characterisation: whether the graph is
/// of Néron type at `g - 1`, and whether it is tree-like.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GMinusOneCheck {
    pub neron_at_g_minus_1: bool,
    pub tree_like: bool,
}

pub fn check_g_minus_1(g: &WeightedGraph) -> Result<GMinusOneCheck> {
    let verdict = is_neron_type(g, g.genus() - 1, Route::All)?;
    Ok(GMinusOneCheck {
        neron_at_g_minus_1: verdict.verdict,
        tree_like: is_tree_like(g),
    })
}
