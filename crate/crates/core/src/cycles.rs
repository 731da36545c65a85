//! Long-cycle search by exhaustive DFS over simple paths.

use crate::graph::Graph;

/// Finds a simple cycle of length at least `n` (number of edges, equal to the
/// number of vertices on the cycle), returned as a vertex sequence without
/// repeating the start. Values of `n` below 3 behave like 3 since simple
/// cycles cannot be shorter.
///
/// The search anchors each candidate cycle at its smallest vertex and prunes
/// branches whose reachable vertex pool cannot reach the target length.
/// Exponential in the worst case; intended for small graphs.
pub fn find_cycle_at_least(g: &Graph, n: usize) -> Option<Vec<usize>> {
    let need = n.max(3);
    if g.n() < need {
        return None;
    }
    let adj = g.adjacency();
    let mut on_path = vec![false; g.n()];
    for anchor in 0..g.n() {
        let mut path = vec![anchor];
        on_path[anchor] = true;
        let found = extend(g, &adj, anchor, need, &mut path, &mut on_path);
        on_path[anchor] = false;
        if found {
            debug_assert!(is_simple_cycle(g, &path));
            return Some(path);
        }
    }
    None
}

fn extend(
    g: &Graph,
    adj: &[Vec<usize>],
    anchor: usize,
    need: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() >= need && g.has_edge(last, anchor) {
        return true;
    }
    if path.len() + reachable_free(adj, anchor, last, on_path) < need {
        return false;
    }
    for &w in &adj[last] {
        if w <= anchor || on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend(g, adj, anchor, need, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}

// Number of vertices > anchor reachable from `from` without crossing the
// current path; an upper bound on how much the path can still grow.
fn reachable_free(adj: &[Vec<usize>], anchor: usize, from: usize, on_path: &[bool]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![from];
    seen[from] = true;
    let mut count = 0;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if w > anchor && !on_path[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count
}

/// True when `cyc` lists distinct vertices of `g` that form a simple cycle,
/// including the closing edge.
pub fn is_simple_cycle(g: &Graph, cyc: &[usize]) -> bool {
    if cyc.len() < 3 {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cyc {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cyc.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(cyc[cyc.len() - 1], cyc[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_graph_has_its_cycle() {
        let c6 = Graph::cycle(6).unwrap();
        let cyc = find_cycle_at_least(&c6, 6).unwrap();
        assert_eq!(cyc.len(), 6);
        assert!(is_simple_cycle(&c6, &cyc));
        assert!(find_cycle_at_least(&c6, 7).is_none());
    }

    #[test]
    fn trees_have_no_cycles() {
        let star = Graph::with_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(find_cycle_at_least(&star, 3).is_none());
        assert!(find_cycle_at_least(&Graph::path(6), 3).is_none());
    }

    #[test]
    fn small_n_means_any_cycle() {
        let k3 = Graph::complete(3);
        let cyc = find_cycle_at_least(&k3, 1).unwrap();
        assert_eq!(cyc.len(), 3);
    }

    #[test]
    fn finds_long_cycle_in_dense_graph() {
        // K5 is Hamiltonian
        let cyc = find_cycle_at_least(&Graph::complete(5), 5).unwrap();
        assert_eq!(cyc.len(), 5);
        assert!(is_simple_cycle(&Graph::complete(5), &cyc));
    }

    #[test]
    fn chorded_cycle() {
        // C6 plus a chord still has the 6-cycle
        let mut g = Graph::cycle(6).unwrap();
        g.add_edge(0, 3).unwrap();
        let cyc = find_cycle_at_least(&g, 6).unwrap();
        assert!(is_simple_cycle(&g, &cyc));
        assert_eq!(cyc.len(), 6);
    }

    #[test]
    fn cycle_validation_rejects_junk() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_simple_cycle(&c4, &[0, 1, 2, 3]));
        assert!(!is_simple_cycle(&c4, &[0, 1, 2])); // 2-0 is not an edge
        assert!(!is_simple_cycle(&c4, &[0, 1, 1, 2]));
        assert!(!is_simple_cycle(&c4, &[0, 1]));
        assert!(!is_simple_cycle(&c4, &[0, 1, 9, 3]));
    }
}
