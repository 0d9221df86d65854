//! Directed hypergraphs and the brute-force reachability oracle.
//!
//! A hyperedge `(T, H)` fires once every node of its tail `T` is reached, and
//! then reaches every node of its head `H`. The oracle here computes the
//! reachable set of each node independently, which costs `O(|N| · size(H))`;
//! it is the ground truth the almost-linear [`crate::minscc`] algorithm is
//! tested against.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A hyperedge `(T, H)`, borrowed from its hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hyperedge<'a> {
    tail: &'a [usize],
    head: &'a [usize],
}

impl<'a> Hyperedge<'a> {
    pub fn tail(&self) -> &'a [usize] {
        self.tail
    }

    pub fn head(&self) -> &'a [usize] {
        self.head
    }

    /// A hyperedge with a singleton tail.
    pub fn is_simple(&self) -> bool {
        self.tail.len() == 1
    }
}

/// Edges are stored back to back in one array: edge `e` has tail
/// `members[offsets[2e]..offsets[2e + 1]]` and head
/// `members[offsets[2e + 1]..offsets[2e + 2]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    node_count: usize,
    offsets: Vec<usize>,
    members: Vec<usize>,
}

impl Default for Hypergraph {
    fn default() -> Self {
        Hypergraph::new(0)
    }
}

impl Hypergraph {
    pub fn new(node_count: usize) -> Self {
        Hypergraph { node_count, offsets: vec![0], members: Vec::new() }
    }

    pub fn from_edges<T, H>(node_count: usize, edges: impl IntoIterator<Item = (T, H)>) -> Result<Self>
    where
        T: AsRef<[usize]>,
        H: AsRef<[usize]>,
    {
        let mut g = Hypergraph::new(node_count);
        for (tail, head) in edges {
            g.add_edge(tail.as_ref(), head.as_ref())?;
        }
        Ok(g)
    }

    /// Adds a hyperedge. Repeated members collapse (first occurrence kept);
    /// empty tails or heads are rejected. Duplicate hyperedges are allowed.
    pub fn add_edge(&mut self, tail: &[usize], head: &[usize]) -> Result<usize> {
        let id = self.edge_count();
        if tail.is_empty() || head.is_empty() {
            return Err(Error::EmptyHyperedge { edge: id });
        }
        for &u in tail.iter().chain(head) {
            if u >= self.node_count {
                return Err(Error::NodeOutOfRange { node: u, node_count: self.node_count });
            }
        }
        self.push_set(tail);
        self.push_set(head);
        Ok(id)
    }

    fn push_set(&mut self, nodes: &[usize]) {
        let start = *self.offsets.last().expect("offsets start with 0");
        if nodes.len() <= 16 {
            for &u in nodes {
                if !self.members[start..].contains(&u) {
                    self.members.push(u);
                }
            }
        } else {
            let mut seen = std::collections::HashSet::with_capacity(nodes.len());
            self.members.extend(nodes.iter().filter(|&&u| seen.insert(u)));
        }
        self.offsets.push(self.members.len());
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        (self.offsets.len() - 1) / 2
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Hyperedge<'_>> + Clone + '_ {
        (0..self.edge_count()).map(|e| self.edge(e))
    }

    pub fn edge(&self, e: usize) -> Hyperedge<'_> {
        let o = &self.offsets[2 * e..2 * e + 3];
        Hyperedge { tail: &self.members[o[0]..o[1]], head: &self.members[o[1]..o[2]] }
    }

    /// `|N| + Σ (|T(e)| + |H(e)|)`.
    pub fn size(&self) -> usize {
        self.node_count + self.members.len()
    }

    pub fn is_digraph(&self) -> bool {
        self.edges().all(|e| e.is_simple())
    }

    /// The digraph generated by the simple hyperedges: one edge `t → h` per
    /// simple hyperedge `({t}, H)` and `h ∈ H`.
    pub fn sub_digraph(&self) -> Hypergraph {
        let mut g = Hypergraph::new(self.node_count);
        for e in self.edges().filter(|e| e.is_simple()) {
            for &h in e.head() {
                g.add_edge(e.tail(), &[h]).expect("nodes in range");
            }
        }
        g
    }

    /// The same hypergraph with nodes renamed by `perm` (`u ↦ perm[u]`) and
    /// edges listed in `edge_order`.
    pub fn relabel(&self, perm: &[usize], edge_order: &[usize]) -> Hypergraph {
        let mut g = Hypergraph::new(self.node_count);
        for &e in edge_order {
            let e = self.edge(e);
            g.members.extend(e.tail().iter().map(|&u| perm[u]));
            g.offsets.push(g.members.len());
            g.members.extend(e.head().iter().map(|&u| perm[u]));
            g.offsets.push(g.members.len());
        }
        g
    }

    /// Least fixpoint of hyperedge firing from `u`, as a membership mask.
    pub fn reachable_mask(&self, u: usize) -> Result<Vec<bool>> {
        if u >= self.node_count {
            return Err(Error::NodeOutOfRange { node: u, node_count: self.node_count });
        }
        let mut by_tail: Vec<Vec<usize>> = vec![Vec::new(); self.node_count];
        for (id, e) in self.edges().enumerate() {
            for &t in e.tail() {
                by_tail[t].push(id);
            }
        }
        let mut missing: Vec<usize> = self.edges().map(|e| e.tail().len()).collect();
        let mut reached = vec![false; self.node_count];
        let mut queue = VecDeque::from([u]);
        reached[u] = true;
        while let Some(x) = queue.pop_front() {
            for &id in &by_tail[x] {
                missing[id] -= 1;
                if missing[id] == 0 {
                    for &h in self.edge(id).head() {
                        if !reached[h] {
                            reached[h] = true;
                            queue.push_back(h);
                        }
                    }
                }
            }
        }
        Ok(reached)
    }

    /// Nodes reachable from `u`, ascending.
    pub fn reachable_set(&self, u: usize) -> Result<Vec<usize>> {
        Ok(mask_to_set(&self.reachable_mask(u)?))
    }
}

/// A hypergraph with symbolic node names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledHypergraph {
    pub graph: Hypergraph,
    pub labels: Vec<String>,
}

impl LabeledHypergraph {
    /// Builds the hypergraph from named edges. Panics on labels not listed
    /// in `labels`.
    pub fn from_labeled_edges(labels: &[&str], edges: &[(&[&str], &[&str])]) -> Self {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let id = |name: &str| labels.iter().position(|l| l == name).expect("known label");
        let mut graph = Hypergraph::new(labels.len());
        for (tail, head) in edges {
            let tail: Vec<usize> = tail.iter().map(|u| id(u)).collect();
            let head: Vec<usize> = head.iter().map(|u| id(u)).collect();
            graph.add_edge(&tail, &head).expect("well-formed fixture");
        }
        LabeledHypergraph { graph, labels }
    }

    /// Index of the node called `name`. Panics on unknown names.
    pub fn node(&self, name: &str) -> usize {
        self.find(name).unwrap_or_else(|| panic!("no node {name}"))
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// Space-separated labels of `nodes`.
    pub fn names(&self, nodes: &[usize]) -> String {
        nodes.iter().map(|&u| self.labels[u].as_str()).collect::<Vec<_>>().join(" ")
    }
}

pub(crate) fn mask_to_set(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// Strongly connected components with their minimality flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccAnalysis {
    /// Classes sorted by smallest member; members ascending.
    pub classes: Vec<Vec<usize>>,
    /// `minimal[i]`: no node outside `classes[i]` is reachable from it.
    pub minimal: Vec<bool>,
    /// Class index of every node.
    pub class_of: Vec<usize>,
}

impl SccAnalysis {
    pub fn minimal_classes(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| m)
            .map(|(c, _)| c.clone())
            .collect()
    }

    pub fn minimal_count(&self) -> usize {
        self.minimal.iter().filter(|&&m| m).count()
    }

    /// The least SCC, which exists iff exactly one class is minimal.
    pub fn least_class(&self) -> Option<&[usize]> {
        let mut minimal = self.classes.iter().zip(&self.minimal).filter(|(_, &m)| m);
        match (minimal.next(), minimal.next()) {
            (Some((c, _)), None) => Some(c),
            _ => None,
        }
    }
}

/// SCCs by mutual reachability, computed from every node's reachable set.
pub fn scc_oracle(h: &Hypergraph) -> SccAnalysis {
    let n = h.node_count();
    let reach: Vec<Vec<bool>> = (0..n).map(|u| h.reachable_mask(u).expect("in range")).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if class_of[u] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = (u..n).filter(|&v| reach[u][v] && reach[v][u]).collect();
        for &v in &members {
            class_of[v] = id;
        }
        classes.push(members);
    }
    let minimal = classes
        .iter()
        .map(|c| reach[c[0]].iter().enumerate().all(|(v, &r)| !r || class_of[v] == class_of[c[0]]))
        .collect();
    SccAnalysis { classes, minimal, class_of }
}
