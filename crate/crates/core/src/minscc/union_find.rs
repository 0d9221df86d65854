/// Disjoint-set forest with union by rank and path compression, for at
/// most `u32::MAX` elements.
#[derive(Clone, Debug, Default)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    /// `len` singleton classes `{0}, …, {len - 1}`.
    pub fn new(len: usize) -> Self {
        let last = u32::try_from(len).expect("at most u32::MAX elements");
        UnionFind { parent: (0..last).collect(), rank: vec![0; len] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Adds a new singleton class and returns its element.
    pub fn make_set(&mut self) -> usize {
        let u = self.parent.len();
        self.parent.push(u32::try_from(u).expect("at most u32::MAX elements"));
        self.rank.push(0);
        u
    }

    /// Representative of `u`'s class. Panics if `u` is out of range.
    pub fn find(&mut self, u: usize) -> usize {
        let mut root = u;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut x = u;
        while self.parent[x] as usize != root {
            let next = self.parent[x] as usize;
            self.parent[x] = root as u32;
            x = next;
        }
        root
    }

    /// Representative without compressing paths.
    pub fn find_readonly(&self, u: usize) -> usize {
        let mut root = u;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        root
    }

    /// Unites the classes of `a` and `b`; returns the new representative.
    pub fn merge(&mut self, a: usize, b: usize) -> usize {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        let (hi, lo) = if self.rank[a] >= self.rank[b] { (a, b) } else { (b, a) };
        self.parent[lo] = hi as u32;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fresh_elements_are_their_own_root() {
        let mut uf = UnionFind::new(3);
        assert_eq!(uf.find(2), 2);
        let u = uf.make_set();
        assert_eq!(u, 3);
        assert_eq!(uf.find(u), u);
    }

    #[test]
    fn merge_joins_classes() {
        let mut uf = UnionFind::new(4);
        let r = uf.merge(0, 1);
        assert_eq!(uf.find(0), uf.find(1));
        assert_eq!(uf.find(0), r);
        assert_ne!(uf.find(0), uf.find(2));
        uf.merge(2, 3);
        let r = uf.merge(1, 3);
        for u in 0..4 {
            assert_eq!(uf.find(u), r);
        }
    }

    proptest! {
        #[test]
        fn matches_naive_labels(n in 1usize..30, ops in proptest::collection::vec((0usize..30, 0usize..30), 0..60)) {
            let mut uf = UnionFind::new(n);
            let mut label: Vec<usize> = (0..n).collect();
            for (a, b) in ops {
                let (a, b) = (a % n, b % n);
                uf.merge(a, b);
                let (la, lb) = (label[a], label[b]);
                for l in label.iter_mut() {
                    if *l == lb {
                        *l = la;
                    }
                }
            }
            for u in 0..n {
                let r = uf.find(u);
                prop_assert_eq!(uf.find(r), r);
                for v in 0..n {
                    prop_assert_eq!(label[u] == label[v], r == uf.find(v));
                }
            }
        }
    }
}
