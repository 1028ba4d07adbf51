/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect(), size: vec![1; len] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    /// Component id per element, numbered by first occurrence.
    pub fn components(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut root_id = vec![usize::MAX; n];
        let mut next = 0;
        let ids = (0..n)
            .map(|x| {
                let r = self.find(x);
                if root_id[r] == usize::MAX {
                    root_id[r] = next;
                    next += 1;
                }
                root_id[r]
            })
            .collect();
        (next, ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unions_merge_components() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(uf.union(3, 4));
        assert!(!uf.union(0, 4));
        let (n, ids) = uf.components();
        assert_eq!(n, 3);
        assert_eq!(ids, vec![0, 1, 2, 0, 0]);
    }
}
