//! Enumeration of pattern copies inside a host graph.
//!
//! A plain copy is the edge image of an injective vertex map that sends
//! pattern edges to host edges. An induced copy additionally requires pattern
//! non-edges to map to host non-edges, so the image vertex set induces
//! exactly the copy. Copies are deduplicated as edge sets: embeddings that
//! differ only by an automorphism (or by where isolated pattern vertices
//! land) count once.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// All copies of `pattern` in `host`, as deduplicated, sorted edge sets.
#[derive(Clone, Debug)]
pub struct CopySet {
    pub pattern: Graph,
    pub host: Graph,
    pub induced: bool,
    pub copies: Vec<Vec<Edge>>,
}

impl CopySet {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }
}

/// Backtracking embedding search over an adjacency-guided vertex order with
/// degree pruning. Deterministic: copies come out sorted lexicographically.
pub fn enumerate_copies(host: &Graph, pattern: &Graph, induced: bool) -> Result<CopySet> {
    if pattern.edge_count() == 0 {
        return Err(Error::EmptyPattern);
    }
    let mut copies: Vec<Vec<Edge>> = Vec::new();
    if pattern.n() <= host.n() {
        let edge_list = host.edge_vec();
        // edge sets dedup as bitmasks over host edge indices while they fit;
        // the matcher leaf then allocates nothing
        let mut edge_index = vec![usize::MAX; host.n() * host.n()];
        let masks_fit = edge_list.len() <= 128;
        if masks_fit {
            for (i, e) in edge_list.iter().enumerate() {
                edge_index[e.u() * host.n() + e.v()] = i;
                edge_index[e.v() * host.n() + e.u()] = i;
            }
        }
        let order = matching_order(pattern);
        let pattern_edges: Vec<(usize, usize)> = pattern.edges().map(|e| e.endpoints()).collect();
        let mut masks: BTreeSet<u128> = BTreeSet::new();
        let mut slow_copies: BTreeSet<Vec<Edge>> = BTreeSet::new();
        let mut state = Matcher {
            induced,
            order: &order,
            pattern_edges: &pattern_edges,
            host_adj: adjacency_matrix(host),
            pat_adj: adjacency_matrix(pattern),
            host_n: host.n(),
            pat_n: pattern.n(),
            edge_index: &edge_index,
            masks_fit,
            host_deg: host.degrees(),
            pat_deg: pattern.degrees(),
            assignment: vec![usize::MAX; pattern.n()],
            used: vec![false; host.n()],
            masks: &mut masks,
            slow_copies: &mut slow_copies,
        };
        state.extend(0);
        copies = if masks_fit {
            masks
                .into_iter()
                .map(|mask| {
                    (0..edge_list.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| edge_list[i])
                        .collect()
                })
                .collect()
        } else {
            slow_copies.into_iter().collect()
        };
        copies.sort_unstable();
    }
    Ok(CopySet {
        pattern: pattern.clone(),
        host: host.clone(),
        induced,
        copies,
    })
}

// Vertex order: highest degree first, then greedily the vertex with the most
// already-ordered neighbors. Isolated pattern vertices sink to the end.
fn matching_order(pattern: &Graph) -> Vec<usize> {
    let deg = pattern.degrees();
    let adj = pattern.adjacency();
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (placed-neighbors, degree, vertex)
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let anchored = adj[v].iter().filter(|w| placed[**w]).count();
            let key = (anchored, deg[v], v);
            best = Some(match best {
                None => key,
                Some(b) => {
                    // more anchored neighbors wins, then higher degree, then lower index
                    if (key.0, key.1, std::cmp::Reverse(key.2)) > (b.0, b.1, std::cmp::Reverse(b.2))
                    {
                        key
                    } else {
                        b
                    }
                }
            });
        }
        let v = best.unwrap().2;
        placed[v] = true;
        order.push(v);
    }
    order
}

// Flat n*n adjacency matrix; the matcher's inner loop probes it constantly.
fn adjacency_matrix(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut m = vec![false; n * n];
    for e in g.edges() {
        m[e.u() * n + e.v()] = true;
        m[e.v() * n + e.u()] = true;
    }
    m
}

struct Matcher<'a> {
    induced: bool,
    order: &'a [usize],
    pattern_edges: &'a [(usize, usize)],
    host_adj: Vec<bool>,
    pat_adj: Vec<bool>,
    host_n: usize,
    pat_n: usize,
    edge_index: &'a [usize],
    masks_fit: bool,
    host_deg: Vec<usize>,
    pat_deg: Vec<usize>,
    assignment: Vec<usize>,
    used: Vec<bool>,
    masks: &'a mut BTreeSet<u128>,
    slow_copies: &'a mut BTreeSet<Vec<Edge>>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            if self.masks_fit {
                let mut mask = 0u128;
                for &(u, v) in self.pattern_edges {
                    let idx =
                        self.edge_index[self.assignment[u] * self.host_n + self.assignment[v]];
                    mask |= 1 << idx;
                }
                self.masks.insert(mask);
            } else {
                let mut image: Vec<Edge> = self
                    .pattern_edges
                    .iter()
                    .map(|&(u, v)| {
                        Edge::new(self.assignment[u], self.assignment[v])
                            .expect("injective map keeps endpoints distinct")
                    })
                    .collect();
                image.sort_unstable();
                self.slow_copies.insert(image);
            }
            return;
        }
        let p = self.order[depth];
        'candidates: for h in 0..self.host_n {
            if self.used[h] || self.host_deg[h] < self.pat_deg[p] {
                continue;
            }
            for &q in &self.order[..depth] {
                let pat_edge = self.pat_adj[p * self.pat_n + q];
                let host_edge = self.host_adj[h * self.host_n + self.assignment[q]];
                let ok = if self.induced {
                    pat_edge == host_edge
                } else {
                    !pat_edge || host_edge
                };
                if !ok {
                    continue 'candidates;
                }
            }
            self.assignment[p] = h;
            self.used[h] = true;
            self.extend(depth + 1);
            self.used[h] = false;
            self.assignment[p] = usize::MAX;
        }
    }
}
