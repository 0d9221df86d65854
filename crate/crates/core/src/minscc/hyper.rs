//! Minimal SCCs of a directed hypergraph in `O(size(H) · α(|N|))`.
//!
//! The visit is Tarjan's algorithm run on the digraph generated by the simple
//! hyperedges of the current hypergraph, where nodes are classes of a
//! union-find forest. When a minimal SCC of that digraph is found its nodes
//! are merged into one; non-simple hyperedges whose whole tail became part of
//! the merged node then behave as simple edges leaving it, and the visit
//! resumes from the merged node. A non-simple hyperedge is detected as such
//! without rescanning: its counter tracks how many tail nodes are left to
//! visit while its root (first visited tail node) is on the stack, and once
//! it reaches zero the edge is parked on its root's pending list.
//!
//! All per-node and per-edge data lives in flat arrays; random hypergraphs
//! have no locality, so the visit is bound by memory traffic.

use super::union_find::UnionFind;
use super::MinSccResult;
use crate::hypergraph::Hypergraph;

/// Indices are stored as `u32` to halve the working set.
type Ix = u32;
const NONE: Ix = Ix::MAX;

fn ix(i: usize) -> Ix {
    Ix::try_from(i).ok().filter(|&i| i != NONE).expect("fewer than 2^32 - 1 nodes, hyperedges and incidences")
}

const ISMIN: u8 = 1;
const ON_STACK: u8 = 2;
const FINISHED: u8 = 4;

#[derive(Clone, Copy)]
struct Node {
    /// Visit index, `NONE` before the visit.
    index: Ix,
    low: Ix,
    /// First hyperedge parked on this node, linked through `Edge::next`.
    parked: Ix,
    flags: u8,
}

impl Node {
    fn ismin(&self) -> bool {
        self.flags & ISMIN != 0
    }

    fn on_stack(&self) -> bool {
        self.flags & ON_STACK != 0
    }

    fn finished(&self) -> bool {
        self.flags & FINISHED != 0
    }

    fn set(&mut self, flag: u8, on: bool) {
        if on {
            self.flags |= flag;
        } else {
            self.flags &= !flag;
        }
    }
}

#[derive(Clone, Copy)]
struct Edge {
    /// Tail nodes still to be counted. Starts at the tail size.
    remaining: Ix,
    /// First visited tail node. Stays `NONE` for simple hyperedges, so a
    /// hyperedge is simple iff `root == NONE && remaining == 1`.
    root: Ix,
    /// Next hyperedge in the parked list holding this one.
    next: Ix,
}

/// Adjacency in compressed form: the items of `i` are
/// `items[start[i]..start[i + 1]]`.
struct Csr {
    start: Vec<Ix>,
    items: Vec<Ix>,
}

impl Csr {
    fn of(&self, i: usize) -> &[Ix] {
        &self.items[self.start[i] as usize..self.start[i + 1] as usize]
    }
}

struct Frame {
    /// Original node this visit was started from.
    node: usize,
    /// Current representative of `node`'s class.
    root: usize,
    /// The frame's hyperedges still to explore are `pending[base..]`.
    base: usize,
    /// Hyperedge under exploration and the next head position.
    cursor: Option<(usize, usize)>,
}

enum RootCheck {
    /// The merged node has new leaving edges; keep exploring.
    Resume,
    Done,
}

struct Visit {
    heads: Csr,
    incident: Csr,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    uf: UnionFind,
    stack: Vec<Ix>,
    /// Hyperedges standing for digraph edges leaving the classes of the
    /// frames, stacked frame by frame.
    pending: Vec<Ix>,
    next_index: Ix,
    nb: usize,
    #[cfg(debug_assertions)]
    parked_once: Vec<bool>,
}

pub(super) fn run(graph: &Hypergraph) -> MinSccResult {
    let n = graph.node_count();
    let m = graph.edge_count();
    ix(n);
    ix(m);
    let mut start = vec![0; n + 1];
    for e in graph.edges() {
        for &t in e.tail() {
            start[t + 1] += 1;
        }
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut items = vec![0; start[n]];
    for (id, e) in graph.edges().enumerate() {
        for &t in e.tail() {
            items[fill[t]] = id as Ix;
            fill[t] += 1;
        }
    }
    let incident = Csr { start: start.into_iter().map(ix).collect(), items };
    let mut start = Vec::with_capacity(m + 1);
    let mut items = Vec::new();
    start.push(0);
    for e in graph.edges() {
        items.extend(e.head().iter().map(|&h| h as Ix));
        start.push(ix(items.len()));
    }
    let heads = Csr { start, items };

    let mut visit = Visit {
        heads,
        incident,
        nodes: vec![Node { index: NONE, low: 0, parked: NONE, flags: 0 }; n],
        edges: graph
            .edges()
            .map(|e| Edge { remaining: e.tail().len() as Ix, root: NONE, next: NONE })
            .collect(),
        uf: UnionFind::new(n),
        stack: Vec::new(),
        pending: Vec::new(),
        next_index: 0,
        nb: 0,
        #[cfg(debug_assertions)]
        parked_once: vec![false; m],
    };
    for u in 0..n {
        if visit.nodes[u].index == NONE {
            visit.visit(u);
        }
    }
    visit.into_result()
}

impl Visit {
    fn visit(&mut self, start: usize) {
        let mut frames = vec![self.enter(start)];
        while let Some(frame) = frames.last_mut() {
            if let Some((e, pos)) = frame.cursor {
                let head = self.heads.of(e);
                if pos == head.len() {
                    frame.cursor = None;
                    continue;
                }
                let w = head[pos] as usize;
                let w_root = self.uf.find(w);
                if self.nodes[w_root].index == NONE {
                    // resumed at the same cursor once the child returns
                    let child = self.enter(w);
                    frames.push(child);
                    continue;
                }
                let root = frame.root;
                frame.cursor = Some((e, pos + 1));
                self.relax(root, w_root);
                continue;
            }
            if self.pending.len() > frame.base {
                let e = self.pending.pop().expect("nonempty");
                frame.cursor = Some((e as usize, 0));
                continue;
            }
            if let RootCheck::Resume = self.root_check(frame) {
                continue;
            }
            frames.pop();
            if let Some(parent) = frames.last_mut() {
                let (e, pos) = parent.cursor.expect("a parent waits on a hyperedge");
                // the child may have merged w into a larger node
                let w_root = self.uf.find(self.heads.of(e)[pos] as usize);
                parent.cursor = Some((e, pos + 1));
                let root = parent.root;
                self.relax(root, w_root);
            }
        }
    }

    /// Starts the visit of `u`: assigns its index, pushes its class on the
    /// stack, collects its simple hyperedges and updates the counters of the
    /// non-simple ones.
    fn enter(&mut self, u: usize) -> Frame {
        let root = self.uf.find(u);
        debug_assert_eq!(root, u, "an unvisited node is never merged");
        let node = &mut self.nodes[root];
        debug_assert!(!node.on_stack() && !node.finished());
        node.index = self.next_index;
        node.low = self.next_index;
        node.set(ISMIN, true);
        self.next_index += 1;
        self.push(root);

        let base = self.pending.len();
        for i in self.incident.start[u] as usize..self.incident.start[u + 1] as usize {
            let e = self.incident.items[i];
            let edge = &mut self.edges[e as usize];
            if edge.root == NONE {
                if edge.remaining == 1 {
                    self.pending.push(e);
                    continue;
                }
                edge.root = u as Ix;
            }
            let edge_root = self.uf.find(edge.root as usize);
            if self.nodes[edge_root].on_stack() {
                let edge = &mut self.edges[e as usize];
                debug_assert!(edge.remaining > 0);
                edge.remaining -= 1;
                if edge.remaining == 0 {
                    #[cfg(debug_assertions)]
                    {
                        assert!(!self.parked_once[e as usize], "hyperedge {e} parked twice");
                        self.parked_once[e as usize] = true;
                    }
                    edge.next = self.nodes[edge_root].parked;
                    self.nodes[edge_root].parked = e;
                }
            }
        }
        Frame { node: u, root, base, cursor: None }
    }

    /// Accounts for the digraph edge `root → target`.
    fn relax(&mut self, root: usize, target: usize) {
        let t = self.nodes[target];
        let r = &mut self.nodes[root];
        if t.finished() {
            r.set(ISMIN, false);
        } else {
            debug_assert!(t.on_stack(), "visited unfinished classes sit on the stack");
            r.low = r.low.min(t.low);
            if !t.ismin() {
                r.set(ISMIN, false);
            }
        }
    }

    /// Moves the hyperedges parked on `v` to the pending stack.
    fn unpark(&mut self, v: usize) {
        let mut e = std::mem::replace(&mut self.nodes[v].parked, NONE);
        while e != NONE {
            self.pending.push(e);
            e = self.edges[e as usize].next;
        }
    }

    /// Called once the frame has no edge left to explore.
    fn root_check(&mut self, frame: &mut Frame) -> RootCheck {
        let root = frame.root;
        let root_index = self.nodes[root].index;
        if self.nodes[root].low != root_index {
            return RootCheck::Done;
        }
        let minimal = self.nodes[root].ismin();
        let mut root = root;
        if minimal {
            self.unpark(root);
            let mut v = self.pop();
            while self.nodes[v].index > root_index {
                self.unpark(v);
                root = self.uf.merge(root, v);
                v = self.pop();
            }
            debug_assert_eq!(self.nodes[v].index, root_index);
            let node = &mut self.nodes[root];
            node.index = root_index;
            node.low = root_index;
            node.set(ISMIN, true);
            self.push(root);
            frame.root = root;
            debug_assert_eq!(self.uf.find(frame.node), root);
            if self.pending.len() > frame.base {
                return RootCheck::Resume;
            }
            self.nb += 1;
        }
        loop {
            let v = self.pop();
            let node = &mut self.nodes[v];
            node.set(FINISHED, true);
            node.set(ISMIN, minimal);
            if node.index == root_index {
                break;
            }
        }
        RootCheck::Done
    }

    fn push(&mut self, v: usize) {
        self.stack.push(v as Ix);
        self.nodes[v].set(ON_STACK, true);
    }

    fn pop(&mut self) -> usize {
        let v = self.stack.pop().expect("stack underflow") as usize;
        self.nodes[v].set(ON_STACK, false);
        v
    }

    fn into_result(mut self) -> MinSccResult {
        debug_assert!(self.stack.is_empty());
        let n = self.nodes.len();
        let find_label: Vec<usize> = (0..n).map(|v| self.uf.find(v)).collect();
        let mut ismin = vec![false; n];
        for &r in &find_label {
            debug_assert!(self.nodes[r].finished());
            ismin[r] = self.nodes[r].ismin();
        }
        let result = MinSccResult { nb: self.nb, find_label, ismin };
        debug_assert_eq!(result.nb, result.ismin.iter().filter(|&&m| m).count());
        result
    }
}
