//! Branch-and-bound clique searches over a bitset adjacency matrix.
//!
//! A `None` answer from either search is an exhaustive negative, not a
//! heuristic one: the backtracking enumerates every extension that could
//! still reach the requested size.

/// Symmetric adjacency over `n` vertices, one bitset row per vertex.
#[derive(Clone, Debug)]
pub(crate) struct AdjMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl AdjMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        AdjMatrix {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn connect(&mut self, i: usize, j: usize) {
        debug_assert!(i != j && i < self.n && j < self.n);
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }
}

#[derive(Clone, PartialEq, Eq)]
struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(64).max(1)];
        let tail = n % 64;
        if n == 0 {
            words = vec![0];
        } else if tail != 0 {
            *words.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        VertexSet { words }
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn intersect_row(&self, row: &[u64]) -> VertexSet {
        VertexSet {
            words: self
                .words
                .iter()
                .zip(row)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Finds a clique with exactly `size` vertices, or proves none exists.
/// Deterministic: explores vertices in ascending order.
pub(crate) fn find_clique(adj: &AdjMatrix, size: usize) -> Option<Vec<usize>> {
    if size == 0 {
        return Some(Vec::new());
    }
    if size > adj.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(size);
    let candidates = VertexSet::full(adj.len());
    extend_clique(adj, size, &candidates, &mut chosen)
}

fn extend_clique(
    adj: &AdjMatrix,
    size: usize,
    candidates: &VertexSet,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == size {
        return Some(chosen.clone());
    }
    if chosen.len() + candidates.count() < size {
        return None;
    }
    let mut rest = candidates.clone();
    for v in candidates.iter() {
        rest.remove(v);
        chosen.push(v);
        let next = rest.intersect_row(adj.row(v));
        if chosen.len() + next.count() >= size {
            if let Some(found) = extend_clique(adj, size, &next, chosen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// Finds `count` pairwise-disjoint cliques of exactly `size` vertices each,
/// or proves no such family exists. Cliques are enumerated in lexicographic
/// order, so the result is deterministic.
pub(crate) fn find_disjoint_cliques(
    adj: &AdjMatrix,
    size: usize,
    count: usize,
) -> Option<Vec<Vec<usize>>> {
    let ground = VertexSet::full(adj.len());
    let mut family = Vec::with_capacity(count);
    if extend_family(adj, size, count, &ground, &mut family) {
        Some(family)
    } else {
        None
    }
}

fn extend_family(
    adj: &AdjMatrix,
    size: usize,
    count: usize,
    ground: &VertexSet,
    family: &mut Vec<Vec<usize>>,
) -> bool {
    if family.len() == count {
        return true;
    }
    if ground.count() < size * (count - family.len()) {
        return false;
    }
    let mut clique = Vec::with_capacity(size);
    for_each_clique(adj, size, ground, &mut clique, &mut |c| {
        let mut rest = ground.clone();
        for &v in c {
            rest.remove(v);
        }
        family.push(c.to_vec());
        if extend_family(adj, size, count, &rest, family) {
            return true;
        }
        family.pop();
        false
    })
}

/// Calls `visit` for every `size`-clique inside `candidates`, in
/// lexicographic order, stopping early when the visitor returns true.
fn for_each_clique(
    adj: &AdjMatrix,
    size: usize,
    candidates: &VertexSet,
    clique: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if clique.len() == size {
        return visit(clique);
    }
    if clique.len() + candidates.count() < size {
        return false;
    }
    let mut rest = candidates.clone();
    for v in candidates.iter() {
        rest.remove(v);
        clique.push(v);
        let next = rest.intersect_row(adj.row(v));
        if for_each_clique(adj, size, &next, clique, visit) {
            return true;
        }
        clique.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> AdjMatrix {
        let mut adj = AdjMatrix::new(n);
        for i in 0..n {
            for j in i + 1..n {
                adj.connect(i, j);
            }
        }
        adj
    }

    fn disjoint_cliques(sizes: &[usize]) -> AdjMatrix {
        let n: usize = sizes.iter().sum();
        let mut adj = AdjMatrix::new(n);
        let mut start = 0;
        for &s in sizes {
            for i in start..start + s {
                for j in i + 1..start + s {
                    adj.connect(i, j);
                }
            }
            start += s;
        }
        adj
    }

    #[test]
    fn clique_in_complete_graph() {
        let adj = complete(10);
        assert_eq!(find_clique(&adj, 10).unwrap().len(), 10);
        assert!(find_clique(&adj, 11).is_none());
    }

    #[test]
    fn clique_absent_in_sparse_graph() {
        let adj = disjoint_cliques(&[3, 3, 2]);
        assert!(find_clique(&adj, 3).is_some());
        assert!(find_clique(&adj, 4).is_none());
    }

    #[test]
    fn disjoint_cliques_found_and_refuted() {
        let adj = disjoint_cliques(&[4, 4, 4]);
        assert!(find_disjoint_cliques(&adj, 4, 3).is_some());
        assert!(find_disjoint_cliques(&adj, 4, 4).is_none());
        assert!(find_disjoint_cliques(&adj, 5, 1).is_none());
    }

    #[test]
    fn disjoint_cliques_inside_one_big_clique() {
        let adj = complete(13);
        let found = find_disjoint_cliques(&adj, 6, 2).unwrap();
        let mut all: Vec<usize> = found.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), 12);
        assert!(find_disjoint_cliques(&adj, 7, 2).is_none());
    }

    #[test]
    fn backtracking_across_first_choice() {
        // A 4-clique {0,1,2,3} overlapping a separate triangle {3,4,5}: taking
        // the greedy first triangle {0,1,2} works, but {0,1,3} would block
        // {3,4,5}; both orders must be handled.
        let mut adj = AdjMatrix::new(6);
        for i in 0..4 {
            for j in i + 1..4 {
                adj.connect(i, j);
            }
        }
        adj.connect(3, 4);
        adj.connect(3, 5);
        adj.connect(4, 5);
        assert!(find_disjoint_cliques(&adj, 3, 2).is_some());
        assert!(find_disjoint_cliques(&adj, 3, 3).is_none());
    }
}
