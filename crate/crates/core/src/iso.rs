//! Backtracking isomorphism search for small vertex- and edge-labeled graphs.

/// Label of the edge `i -> j` as seen from `i`. Multiple edges are oriented,
/// so the label records whether `i` is the longer end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeKey {
    pub multiplicity: u8,
    pub from_longer: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct LabeledGraph<K> {
    keys: Vec<K>,
    adj: Vec<Vec<Option<EdgeKey>>>,
}

impl<K: Eq + Clone> LabeledGraph<K> {
    pub fn new(keys: Vec<K>) -> Self {
        let n = keys.len();
        LabeledGraph { keys, adj: vec![vec![None; n]; n] }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Adds an edge; `longer` is `Some(i)` or `Some(j)` for a multiple edge.
    pub fn connect(&mut self, i: usize, j: usize, multiplicity: u8, longer: Option<usize>) {
        let orient = |end: usize| longer.map(|l| l == end);
        self.adj[i][j] = Some(EdgeKey { multiplicity, from_longer: orient(i) });
        self.adj[j][i] = Some(EdgeKey { multiplicity, from_longer: orient(j) });
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<EdgeKey> {
        self.adj[i][j]
    }

    fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().filter(|e| e.is_some()).count()
    }

    /// Vertex order for the search: each vertex after the first is adjacent
    /// to an earlier one whenever possible, which prunes early.
    fn search_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            let start = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (self.degree(v), usize::MAX - v)).unwrap();
            placed[start] = true;
            order.push(start);
            let mut head = order.len() - 1;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for w in 0..n {
                    if !placed[w] && self.adj[v][w].is_some() {
                        placed[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        order
    }
}

/// Calls `visit` with every isomorphism `a -> b`, given as `map[i] = image of i`.
/// Stops early when `visit` returns `false`. Images are tried in increasing
/// order, so enumeration order is deterministic.
pub fn for_each_isomorphism<K: Eq + Clone>(
    a: &LabeledGraph<K>,
    b: &LabeledGraph<K>,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    let n = a.len();
    if n != b.len() {
        return;
    }
    let order = a.search_order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let degrees_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let degrees_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    extend(a, b, &order, 0, &mut map, &mut used, &degrees_a, &degrees_b, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn extend<K: Eq + Clone>(
    a: &LabeledGraph<K>,
    b: &LabeledGraph<K>,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    degrees_a: &[usize],
    degrees_b: &[usize],
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return visit(map);
    }
    let v = order[depth];
    for w in 0..b.len() {
        if used[w] || a.keys[v] != b.keys[w] || degrees_a[v] != degrees_b[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| a.adj[v][u] == b.adj[w][map[u]]);
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        let keep_going = extend(a, b, order, depth + 1, map, used, degrees_a, degrees_b, visit);
        used[w] = false;
        map[v] = usize::MAX;
        if !keep_going {
            return false;
        }
    }
    true
}

pub fn are_isomorphic<K: Eq + Clone>(a: &LabeledGraph<K>, b: &LabeledGraph<K>) -> bool {
    let mut found = false;
    for_each_isomorphism(a, b, |_| {
        found = true;
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> LabeledGraph<u8> {
        let mut g = LabeledGraph::new(vec![0; n]);
        for i in 0..n {
            g.connect(i, (i + 1) % n, 1, None);
        }
        g
    }

    #[test]
    fn cycle_automorphisms_form_the_dihedral_group() {
        for n in 3..8 {
            let g = cycle(n);
            let mut count = 0;
            for_each_isomorphism(&g, &g, |_| {
                count += 1;
                true
            });
            assert_eq!(count, 2 * n);
        }
    }

    #[test]
    fn orientation_of_multiple_edges_matters() {
        let mut a = LabeledGraph::new(vec![0u8; 3]);
        a.connect(0, 1, 1, None);
        a.connect(1, 2, 2, Some(1));
        let mut b = LabeledGraph::new(vec![0u8; 3]);
        b.connect(0, 1, 1, None);
        b.connect(1, 2, 2, Some(2));
        assert!(!are_isomorphic(&a, &b));
        assert!(are_isomorphic(&a, &a));
    }

    #[test]
    fn vertex_keys_matter() {
        let mut a = LabeledGraph::new(vec![0u8, 1]);
        a.connect(0, 1, 1, None);
        let mut b = LabeledGraph::new(vec![0u8, 0]);
        b.connect(0, 1, 1, None);
        assert!(!are_isomorphic(&a, &b));
    }
}
