//! Exact maximum clique by bit-parallel branch and bound with greedy
//! colouring bounds.

/// Fixed-width bitset over vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    fn first_from(&self, start_word: usize) -> Option<(usize, usize)> {
        self.words[start_word..]
            .iter()
            .position(|&w| w != 0)
            .map(|k| {
                let wi = start_word + k;
                (wi, wi * 64 + self.words[wi].trailing_zeros() as usize)
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    wi * 64 + b
                })
            })
        })
    }

    fn intersect_into(&self, other: &Bitset, out: &mut Bitset) {
        for ((o, a), b) in out.words.iter_mut().zip(&self.words).zip(&other.words) {
            *o = a & b;
        }
    }
}

/// Undirected simple graph stored as adjacency bitsets.
#[derive(Debug, Clone)]
pub struct Graph {
    adj: Vec<Bitset>,
}

impl Graph {
    pub fn new(order: usize) -> Self {
        Self {
            adj: vec![Bitset::new(order); order],
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a].insert(b);
            self.adj[b].insert(a);
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adj[v]
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    fn relabel(&self, order: &[usize]) -> Graph {
        let mut position = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut g = Graph::new(order.len());
        for (new, &old) in order.iter().enumerate() {
            for nb in self.adj[old].iter() {
                g.adj[new].insert(position[nb]);
            }
        }
        g
    }
}

/// Search statistics, mostly useful for tuning.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliqueStats {
    pub nodes: u64,
    /// False when the node budget ran out before optimality was proven.
    pub complete: bool,
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    stats: CliqueStats,
    budget: u64,
}

impl Search<'_> {
    fn expand(&mut self, mut candidates: Bitset) {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            self.stats.complete = false;
            return;
        }
        let order = self.g.order();
        let min_color = (self.best.len() + 1).saturating_sub(self.current.len());

        // Greedy sequential colouring; only vertices whose colour could beat
        // the incumbent are branched on.
        let mut branch: Vec<(usize, usize)> = Vec::new();
        let mut uncolored = candidates.clone();
        let mut class = Bitset::new(order);
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            class.words.copy_from_slice(&uncolored.words);
            let mut from = 0;
            while let Some((wi, v)) = class.first_from(from) {
                from = wi;
                uncolored.remove(v);
                class.remove(v);
                for (c, a) in class.words[wi..].iter_mut().zip(&self.g.adj[v].words[wi..]) {
                    *c &= !a;
                }
                if color >= min_color {
                    branch.push((v, color));
                }
            }
        }

        let mut next = Bitset::new(order);
        while let Some((v, color)) = branch.pop() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            candidates.intersect_into(&self.g.adj[v], &mut next);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next.clone());
                if !self.stats.complete {
                    return;
                }
            }
            self.current.pop();
            candidates.remove(v);
        }
    }
}

/// Vertex order for the search: repeatedly remove a vertex of minimum degree
/// in the remaining graph (ties to the smallest index) and list the removed
/// vertices last-first.
fn smallest_last_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        for u in g.adj[v].iter() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
        order.push(v);
    }
    order.reverse();
    order
}

/// A maximum clique of `g`, as sorted vertex indices. `incumbent`, if given,
/// must be a clique; it seeds the search and is returned if nothing larger
/// exists.
pub fn max_clique(g: &Graph, incumbent: Option<&[usize]>) -> (Vec<usize>, CliqueStats) {
    max_clique_budgeted(g, incumbent, u64::MAX)
}

/// As [`max_clique`], but gives up after visiting `node_budget` search nodes.
/// The returned clique is then the best found so far and
/// `stats.complete` is false.
pub fn max_clique_budgeted(
    g: &Graph,
    incumbent: Option<&[usize]>,
    node_budget: u64,
) -> (Vec<usize>, CliqueStats) {
    let done = CliqueStats {
        nodes: 0,
        complete: true,
    };
    if g.order() == 0 {
        return (Vec::new(), done);
    }
    let order = smallest_last_order(g);
    let relabeled = g.relabel(&order);
    let mut position = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let best = match incumbent {
        Some(c) => {
            assert!(g.is_clique(c), "incumbent is not a clique");
            c.iter().map(|&v| position[v]).collect()
        }
        None => vec![0],
    };
    let mut search = Search {
        g: &relabeled,
        best,
        current: Vec::new(),
        stats: done,
        budget: node_budget,
    };
    search.expand(Bitset::full(g.order()));
    let mut clique: Vec<usize> = search.best.iter().map(|&v| order[v]).collect();
    clique.sort_unstable();
    (clique, search.stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Maximum clique size by trying every vertex subset.
    fn brute_force(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&mask| {
                let vs: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn lcg_graph(order: usize, density_percent: u64, seed: u64) -> Graph {
        let mut state = seed;
        let mut g = Graph::new(order);
        for a in 0..order {
            for b in a + 1..order {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if (state >> 33) % 100 < density_percent {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    #[test]
    fn bitset_basics() {
        let mut b = Bitset::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(b.count(), 3);
        b.remove(64);
        assert!(!b.contains(64));
        assert_eq!(Bitset::full(70).count(), 70);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for seed in 0..60 {
            for density in [20, 50, 80, 95] {
                let g = lcg_graph(14, density, seed);
                let (clique, _) = max_clique(&g, None);
                assert!(g.is_clique(&clique));
                assert_eq!(clique.len(), brute_force(&g), "seed={seed} density={density}");
            }
        }
    }

    #[test]
    fn empty_and_edgeless() {
        assert!(max_clique(&Graph::new(0), None).0.is_empty());
        assert!(max_clique(&Graph::new(0), None).1.complete);
        assert_eq!(max_clique(&Graph::new(5), None).0.len(), 1);
    }

    #[test]
    fn budget_stops_search() {
        let g = lcg_graph(60, 90, 7);
        let (full, stats) = max_clique(&g, None);
        assert!(stats.complete);
        let (partial, stats) = max_clique_budgeted(&g, None, 3);
        assert!(!stats.complete);
        assert!(g.is_clique(&partial));
        assert!(partial.len() <= full.len());
    }

    #[test]
    fn incumbent_is_kept_when_optimal() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        let (c, _) = max_clique(&g, Some(&[2, 3]));
        assert_eq!(c, vec![2, 3]);
    }
}
