mod common;

use std::sync::OnceLock;

use neron_core::{
    blow_up, canonical_form, census, class_group, contract_separating, enumerate_balanced,
    is_balanced, is_isomorphic, is_strictly_balanced, m_lower_bound, same_class,
    separating_edges, strata_index, EdgeSubset, Multidegree, VertexSet, WeightedGraph,
};
use proptest::prelude::*;

fn graphs() -> &'static [WeightedGraph] {
    static GRAPHS: OnceLock<Vec<WeightedGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        let mut all = census(2, 3).unwrap();
        all.extend(census(3, 3).unwrap());
        all
    })
}

/// A census graph, relabelled by a random permutation.
fn any_graph() -> impl Strategy<Value = WeightedGraph> {
    (0..graphs().len(), any::<u64>()).prop_map(|(i, seed)| {
        let g = &graphs()[i];
        let n = g.num_vertices();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            perm.swap(k, (s % (k as u64 + 1)) as usize);
            s /= k as u64 + 1;
        }
        g.relabel(&perm)
    })
}

fn with_multidegree() -> impl Strategy<Value = (WeightedGraph, Vec<i64>)> {
    any_graph().prop_flat_map(|g| {
        let n = g.num_vertices();
        (Just(g), prop::collection::vec(-3i64..5, n))
    })
}

fn with_two_multidegrees() -> impl Strategy<Value = (WeightedGraph, Vec<i64>, Vec<i64>)> {
    any_graph().prop_flat_map(|g| {
        let n = g.num_vertices();
        (Just(g), prop::collection::vec(-4i64..5, n), prop::collection::vec(-4i64..5, n))
    })
}

fn theta() -> WeightedGraph {
    WeightedGraph::new(vec![0, 0], vec![(0, 1), (0, 1), (0, 1)]).unwrap()
}

proptest! {
    #[test]
    fn balancing_matches_all_subset_oracle((g, md) in with_multidegree()) {
        let (b, s) = common::brute_balanced(&g, &md);
        let md = Multidegree(md);
        prop_assert_eq!(is_balanced(&g, &md).unwrap(), b);
        prop_assert_eq!(is_strictly_balanced(&g, &md).unwrap(), s);
    }

    #[test]
    fn same_class_matches_twist_lattice((g, a, mut b) in with_two_multidegrees()) {
        let shift = a.iter().sum::<i64>() - b.iter().sum::<i64>();
        b[0] += shift;
        let expected = common::in_twist_lattice(&g, &a, &b);
        prop_assert_eq!(same_class(&g, &Multidegree(a), &Multidegree(b)).unwrap(), expected);
    }

    #[test]
    fn each_multidegree_has_exactly_one_representative((g, md) in with_multidegree()) {
        let d: i64 = md.iter().sum();
        let reps = class_group(&g).unwrap().representatives(d);
        let hits = reps.iter().filter(|r| common::in_twist_lattice(&g, &md, &r.0)).count();
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn complementary_bounds_sum((g, mask, d) in (any_graph(), any::<u64>(), -6i64..10)) {
        let n = g.num_vertices();
        prop_assume!(n >= 2);
        let set = VertexSet(mask % ((1 << n) - 2) + 1);
        let z = g.subcurve(set).unwrap();
        let zc = g.subcurve(set.complement(n)).unwrap();
        prop_assert_eq!(z.delta, zc.delta);
        prop_assert_eq!(z.canonical_degree + zc.canonical_degree, 2 * g.genus() - 2);
        let sum = m_lower_bound(&g, &z, d).unwrap().add(&m_lower_bound(&g, &zc, d).unwrap());
        prop_assert!(sum.equals_int(d - z.delta));
    }

    #[test]
    fn canonical_form_ignores_labels(g in any_graph()) {
        let i = graphs().iter().position(|h| is_isomorphic(h, &g)).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&graphs()[i]));
    }

    #[test]
    fn contraction_is_idempotent_and_keeps_genus(g in any_graph()) {
        let c = contract_separating(&g).unwrap();
        prop_assert!(separating_edges(&c.graph).is_empty());
        prop_assert_eq!(c.graph.genus(), g.genus());
        prop_assert_eq!(c.graph.first_betti(), g.first_betti());
        let again = contract_separating(&c.graph).unwrap();
        prop_assert!(is_isomorphic(&again.graph, &c.graph));
    }

    #[test]
    fn blow_up_and_contract((g, mask) in (any_graph(), any::<u64>())) {
        let s: EdgeSubset = (0..g.num_edges())
            .filter(|&e| mask >> e & 1 == 1 && g.edge(e).0 != g.edge(e).1)
            .collect();
        let b = blow_up(&g, &s).unwrap();
        prop_assert_eq!(b.graph.genus(), g.genus());
        prop_assert_eq!(b.graph.exceptional().len(), s.len());
        prop_assert_eq!(b.graph.num_vertices(), g.num_vertices() + s.len());
        prop_assert!(b.graph.validate().quasistable);
        prop_assert!(is_isomorphic(&b.contract(&g), &g));
    }
}

#[test]
fn enumeration_matches_box_scan() {
    for g in graphs().iter().filter(|g| g.num_vertices() <= 3) {
        for d in -2..=4 {
            let (brute, strict) = common::brute_balanced_set(g, d, -6, 8);
            let set = enumerate_balanced(g, d).unwrap();
            assert_eq!(set.members, brute, "{g:?} d={d}");
            assert_eq!(set.num_strict(), strict, "{g:?} d={d}");
        }
    }
}

#[test]
fn class_group_order_is_tree_count() {
    for g in graphs() {
        assert_eq!(class_group(g).unwrap().order as u64, common::tree_count(g), "{g:?}");
    }
}

#[test]
fn representatives_are_pairwise_inequivalent() {
    for g in graphs() {
        let reps = class_group(g).unwrap().representatives(1);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!common::in_twist_lattice(g, &a.0, &b.0), "{g:?}: {a:?} ~ {b:?}");
            }
        }
    }
}

/// On a blow-up at bridges, returning each exceptional degree to either
/// endpoint gives balanced multidegrees of one class.
#[test]
fn bridge_strata_push_down_either_side() {
    let mut checked = 0;
    for g in graphs() {
        for d in -1..=4 {
            for stratum in strata_index(g, d).unwrap() {
                let k = stratum.edges.len();
                if k == 0 {
                    continue;
                }
                let b = blow_up(g, &stratum.edges).unwrap();
                let pushed: Vec<Vec<i64>> = (0u64..1 << k)
                    .map(|mask| {
                        let sides: Vec<usize> = (0..k)
                            .map(|j| {
                                let (a, c) = b.endpoints(g, j);
                                if mask >> j & 1 == 0 { a } else { c }
                            })
                            .collect();
                        b.push_down(&stratum.multidegree.0, &sides)
                    })
                    .collect();
                for p in &pushed {
                    assert!(common::brute_balanced(g, p).0, "{g:?} {stratum:?} -> {p:?}");
                    assert!(common::in_twist_lattice(g, p, &pushed[0]), "{g:?} {stratum:?}");
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn theta_blow_up_is_quasistable() {
    let g = theta();
    let b = blow_up(&g, &[0].into_iter().collect()).unwrap();
    assert_eq!(b.graph.num_vertices(), 3);
    assert!(b.graph.validate().quasistable);
    assert!(!b.graph.validate().stable);
}
