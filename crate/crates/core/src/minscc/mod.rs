//! Counting and extracting the minimal strongly connected components of a
//! directed hypergraph.
//!
//! [`min_scc_count`] runs in `O(size(H) · α(|N|))`. It does not compute the
//! full SCC partition: non-minimal components are reported node by node
//! and may remain split (see the `u`, `x` pair of
//! [`crate::instances::fixtures::unmerged_scc`]).

mod digraph;
mod hyper;
mod union_find;

pub use union_find::UnionFind;

use crate::error::Result;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSccResult {
    /// Number of minimal SCCs.
    pub nb: usize,
    /// Representative of every node's class.
    pub find_label: Vec<usize>,
    /// Minimality flag, meaningful at representatives.
    pub ismin: Vec<bool>,
}

impl MinSccResult {
    /// Minimal classes, members ascending, classes sorted by smallest member.
    pub fn minimal_classes(&self) -> Vec<Vec<usize>> {
        let n = self.find_label.len();
        let mut slot = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find_label[v];
            if !self.ismin[r] {
                continue;
            }
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[r]].push(v);
        }
        classes
    }

    /// The least SCC, present iff exactly one class is minimal.
    pub fn least_class(&self) -> Option<Vec<usize>> {
        if self.nb != 1 {
            return None;
        }
        self.minimal_classes().pop()
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        self.ismin[self.find_label[v]]
    }
}

/// Minimal SCCs of an arbitrary directed hypergraph.
pub fn min_scc_count(h: &Hypergraph) -> MinSccResult {
    hyper::run(h)
}

/// Minimal SCCs of a digraph, given as a hypergraph whose tails are all
/// singletons. Heads may hold several nodes.
pub fn min_scc_count_digraph(g: &Hypergraph) -> Result<MinSccResult> {
    digraph::run(g)
}

/// Free-function form of [`MinSccResult::minimal_classes`].
pub fn minimal_classes(r: &MinSccResult) -> Vec<Vec<usize>> {
    r.minimal_classes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::hypergraph::scc_oracle;
    use crate::instances::fixtures;
    use proptest::prelude::*;

    fn names(fx: &fixtures::LabeledHypergraph, classes: &[Vec<usize>]) -> Vec<String> {
        classes.iter().map(|c| fx.names(c)).collect()
    }

    #[test]
    fn three_sinks_are_the_minimal_sccs() {
        let fx = fixtures::three_sinks();
        let r = min_scc_count(&fx.graph);
        assert_eq!(r.nb, 3);
        assert_eq!(names(&fx, &r.minimal_classes()), vec!["x", "y", "t"]);
        // u, v, w end up merged even though their class is not minimal
        let (u, v, w) = (fx.node("u"), fx.node("v"), fx.node("w"));
        assert_eq!(r.find_label[u], r.find_label[v]);
        assert_eq!(r.find_label[u], r.find_label[w]);
    }

    #[test]
    fn unmerged_scc_has_least_scc_t() {
        let fx = fixtures::unmerged_scc();
        let r = min_scc_count(&fx.graph);
        assert_eq!(r.nb, 1);
        assert_eq!(names(&fx, &r.minimal_classes()), vec!["t"]);
        assert_eq!(r.least_class().map(|c| fx.names(&c)), Some("t".to_string()));
        // {u, x} is an SCC of the hypergraph, yet the algorithm leaves it split
        assert_ne!(r.find_label[fx.node("u")], r.find_label[fx.node("x")]);
    }

    #[test]
    fn isolated_nodes_are_all_minimal() {
        for k in 0..5 {
            let r = min_scc_count(&Hypergraph::new(k));
            assert_eq!(r.nb, k);
            assert_eq!(r.minimal_classes(), (0..k).map(|v| vec![v]).collect::<Vec<_>>());
            assert_eq!(min_scc_count_digraph(&Hypergraph::new(k)).unwrap(), r);
        }
    }

    #[test]
    fn digraph_examples() {
        let triangle = Hypergraph::from_edges(3, [([0], [1]), ([1], [2]), ([2], [0])]).unwrap();
        let r = min_scc_count_digraph(&triangle).unwrap();
        assert_eq!((r.nb, r.minimal_classes()), (1, vec![vec![0, 1, 2]]));

        let path = Hypergraph::from_edges(3, [([0], [1]), ([1], [2])]).unwrap();
        let r = min_scc_count_digraph(&path).unwrap();
        assert_eq!((r.nb, r.minimal_classes()), (1, vec![vec![2]]));

        let two = Hypergraph::from_edges(4, [([0], [1]), ([1], [0]), ([2], [3]), ([3], [2])]).unwrap();
        let r = min_scc_count_digraph(&two).unwrap();
        assert_eq!((r.nb, r.minimal_classes()), (2, vec![vec![0, 1], vec![2, 3]]));

        let hyper = Hypergraph::from_edges(3, [(vec![0, 1], vec![2])]).unwrap();
        assert!(matches!(min_scc_count_digraph(&hyper), Err(Error::NotADigraph { edge: 0, tail_len: 2 })));
    }

    #[test]
    fn non_minimal_members_are_not_flagged() {
        // a ↔ b leads to the sink c; b is popped inside a non-minimal SCC
        let g = Hypergraph::from_edges(3, [([0], [1]), ([1], [0]), ([0], [2])]).unwrap();
        for r in [min_scc_count(&g), min_scc_count_digraph(&g).unwrap()] {
            assert_eq!(r.nb, 1);
            assert_eq!(r.minimal_classes(), vec![vec![2]]);
            assert!(!r.is_minimal(0) && !r.is_minimal(1));
        }
    }

    #[test]
    fn merged_class_completes_hyperedge() {
        // u ↔ v merge, then ({u, v}, {w}) fires and w ↔ u closes one SCC
        let g = Hypergraph::from_edges(3, [(vec![0], vec![1]), (vec![1], vec![0]), (vec![0, 1], vec![2]), (vec![2], vec![0])])
            .unwrap();
        let r = min_scc_count(&g);
        assert_eq!((r.nb, r.minimal_classes()), (1, vec![vec![0, 1, 2]]));
    }

    #[test]
    fn deep_chain_does_not_overflow() {
        let n = 200_000;
        let edges = (0..n - 1).map(|i| ([i], [i + 1]));
        let g = Hypergraph::from_edges(n, edges).unwrap();
        assert_eq!(min_scc_count(&g).minimal_classes(), vec![vec![n - 1]]);
        assert_eq!(min_scc_count_digraph(&g).unwrap().nb, 1);
        let cycle = Hypergraph::from_edges(n, (0..n).map(|i| ([i], [(i + 1) % n]))).unwrap();
        assert_eq!(min_scc_count(&cycle).nb, 1);
    }

    fn hypergraph(max_nodes: usize, max_edges: usize, max_tail: usize) -> impl Strategy<Value = Hypergraph> {
        (1..=max_nodes).prop_flat_map(move |n| {
            let edge = (
                proptest::collection::vec(0..n, 1..=max_tail.min(n)),
                proptest::collection::vec(0..n, 1..=n.min(3)),
            );
            proptest::collection::vec(edge, 0..=max_edges)
                .prop_map(move |edges| Hypergraph::from_edges(n, edges).unwrap())
        })
    }

    fn shuffled(h: &Hypergraph, seed: u64) -> (Hypergraph, Vec<usize>) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..h.node_count()).collect();
        perm.shuffle(&mut rng);
        let mut order: Vec<usize> = (0..h.edge_count()).collect();
        order.shuffle(&mut rng);
        (h.relabel(&perm, &order), perm)
    }

    proptest! {
        #[test]
        fn agrees_with_oracle(h in hypergraph(8, 12, 3)) {
            let r = min_scc_count(&h);
            let oracle = scc_oracle(&h);
            prop_assert_eq!(r.nb, oracle.minimal_count());
            prop_assert_eq!(r.minimal_classes(), oracle.minimal_classes());
        }

        #[test]
        fn result_invariants(h in hypergraph(10, 16, 4)) {
            let r = min_scc_count(&h);
            for v in 0..h.node_count() {
                let l = r.find_label[v];
                prop_assert_eq!(r.find_label[l], l);
            }
            let mut reps: Vec<usize> = r.find_label.clone();
            reps.sort_unstable();
            reps.dedup();
            prop_assert_eq!(r.nb, reps.iter().filter(|&&u| r.ismin[u]).count());
        }

        #[test]
        fn digraph_variant_agrees(h in hypergraph(8, 12, 1)) {
            let a = min_scc_count(&h);
            let b = min_scc_count_digraph(&h).unwrap();
            prop_assert_eq!(a.nb, b.nb);
            prop_assert_eq!(a.minimal_classes(), b.minimal_classes());
            prop_assert_eq!(b.minimal_classes(), scc_oracle(&h).minimal_classes());
        }

        #[test]
        fn order_independent(h in hypergraph(8, 12, 3), seed in any::<u64>()) {
            let (g, perm) = shuffled(&h, seed);
            let mut expected: Vec<Vec<usize>> = min_scc_count(&h)
                .minimal_classes()
                .into_iter()
                .map(|c| {
                    let mut c: Vec<usize> = c.into_iter().map(|u| perm[u]).collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            expected.sort();
            prop_assert_eq!(min_scc_count(&g).minimal_classes(), expected);
        }
    }
}
