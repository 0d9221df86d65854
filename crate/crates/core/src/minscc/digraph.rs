//! Tarjan's algorithm instrumented with a minimality flag per root.

use super::MinSccResult;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

struct Visit {
    succ: Vec<Vec<usize>>,
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    ismin: Vec<bool>,
    finished: Vec<bool>,
    label: Vec<usize>,
    stack: Vec<usize>,
    next_index: usize,
    nb: usize,
}

pub(super) fn run(graph: &Hypergraph) -> Result<MinSccResult> {
    let n = graph.node_count();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (id, e) in graph.edges().enumerate() {
        if !e.is_simple() {
            return Err(Error::NotADigraph { edge: id, tail_len: e.tail().len() });
        }
        succ[e.tail()[0]].extend_from_slice(e.head());
    }
    let mut visit = Visit {
        succ,
        index: vec![None; n],
        low: vec![0; n],
        ismin: vec![false; n],
        finished: vec![false; n],
        label: (0..n).collect(),
        stack: Vec::new(),
        next_index: 0,
        nb: 0,
    };
    for u in 0..n {
        if visit.index[u].is_none() {
            visit.visit(u);
        }
    }
    let mut ismin = vec![false; n];
    for v in 0..n {
        ismin[visit.label[v]] = visit.ismin[v];
    }
    Ok(MinSccResult { nb: visit.nb, find_label: visit.label, ismin })
}

impl Visit {
    fn visit(&mut self, start: usize) {
        // (node, next position in succ[node])
        let mut frames = vec![self.enter(start)];
        while let Some(&(u, pos)) = frames.last() {
            if pos < self.succ[u].len() {
                let w = self.succ[u][pos];
                if self.index[w].is_none() {
                    frames.push(self.enter(w));
                    continue;
                }
                frames.last_mut().expect("nonempty").1 += 1;
                self.relax(u, w);
                continue;
            }
            frames.pop();
            self.root_check(u);
            if let Some(parent) = frames.last_mut() {
                parent.1 += 1;
                let p = parent.0;
                self.relax(p, u);
            }
        }
    }

    fn enter(&mut self, u: usize) -> (usize, usize) {
        self.index[u] = Some(self.next_index);
        self.low[u] = self.next_index;
        self.next_index += 1;
        self.ismin[u] = true;
        self.stack.push(u);
        (u, 0)
    }

    fn relax(&mut self, u: usize, w: usize) {
        if self.finished[w] {
            self.ismin[u] = false;
        } else {
            self.low[u] = self.low[u].min(self.low[w]);
            self.ismin[u] &= self.ismin[w];
        }
    }

    fn root_check(&mut self, u: usize) {
        if Some(self.low[u]) != self.index[u] {
            return;
        }
        let minimal = self.ismin[u];
        if minimal {
            self.nb += 1;
        }
        loop {
            let v = self.stack.pop().expect("stack underflow");
            self.finished[v] = true;
            self.ismin[v] = minimal;
            self.label[v] = u;
            if v == u {
                break;
            }
        }
    }
}
