//! Exact maximum clique by branch and bound with a greedy-colouring bound.

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

struct Search {
    neighbours: Vec<Bits>,
    best: Vec<usize>,
}

impl Search {
    /// Greedy colouring of `cands` in vertex order; returns vertices with
    /// their colour numbers, colours nondecreasing.
    fn colour(&self, cands: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut uncoloured = cands.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.clear(v);
                available = available.and_not(&self.neighbours[v]);
                uncoloured.clear(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut cands: Bits) {
        let order = self.colour(&cands);
        for &(v, colour) in order.iter().rev() {
            if clique.len() + colour <= self.best.len() {
                return;
            }
            clique.push(v);
            let next = cands.and(&self.neighbours[v]);
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            cands.clear(v);
        }
    }
}

/// Returns the vertices of one maximum clique of the graph given by a
/// symmetric adjacency matrix, sorted ascending. Deterministic.
pub(crate) fn max_clique(adjacency: &[Vec<bool>]) -> Vec<usize> {
    let n = adjacency.len();
    if n == 0 {
        return Vec::new();
    }
    // relabel by descending degree so the colouring bound is tight early
    let mut perm: Vec<usize> = (0..n).collect();
    let degree = |v: usize| adjacency[v].iter().filter(|&&e| e).count();
    perm.sort_by_key(|&v| (std::cmp::Reverse(degree(v)), v));
    let mut neighbours = vec![Bits::empty(n); n];
    for (i, &a) in perm.iter().enumerate() {
        for (j, &b) in perm.iter().enumerate() {
            if i != j && adjacency[a][b] {
                neighbours[i].set(j);
            }
        }
    }
    let mut all = Bits::empty(n);
    (0..n).for_each(|i| all.set(i));
    let mut search = Search { neighbours, best: vec![0] };
    search.expand(&mut Vec::new(), all);
    let mut out: Vec<usize> = search.best.iter().map(|&i| perm[i]).collect();
    out.sort_unstable();
    debug_assert!(out.iter().all(|&a| out.iter().all(|&b| a == b || adjacency[a][b])));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(adj: &[Vec<bool>]) -> usize {
        let n = adj.len();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|a| (0..n).all(|b| a == b || mask >> a & 1 == 0 || mask >> b & 1 == 0 || adj[a][b]))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_graphs() {
        assert_eq!(max_clique(&[]), Vec::<usize>::new());
        assert_eq!(max_clique(&[vec![false]]), vec![0]);
        let k4: Vec<Vec<bool>> = (0..4).map(|i| (0..4).map(|j| i != j).collect()).collect();
        assert_eq!(max_clique(&k4), vec![0, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn matches_exhaustive_search(n in 1usize..12, edges in proptest::collection::vec(any::<bool>(), 144)) {
            let mut adj = vec![vec![false; n]; n];
            for a in 0..n {
                for b in a + 1..n {
                    let e = edges[a * 12 + b];
                    adj[a][b] = e;
                    adj[b][a] = e;
                }
            }
            let c = max_clique(&adj);
            prop_assert_eq!(c.len(), brute(&adj));
            for &a in &c {
                for &b in &c {
                    prop_assert!(a == b || adj[a][b]);
                }
            }
        }
    }
}
