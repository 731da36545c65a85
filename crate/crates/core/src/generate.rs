//! Isomorph-free enumeration of small graphs.
//!
//! Graphs are keyed by a canonical form: the maximum, over all vertex
//! relabelings, of the upper-triangle adjacency bit string (same column order
//! as graph6), packed into a `u128`. The permutation search fills positions
//! one vertex at a time and prunes whenever the partial bit string falls
//! behind the best complete one, which keeps the all-permutations approach
//! usable through the supported orders.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap: `C(16,2) = 120` triangle bits fit a `u128`.
pub const MAX_ENUM_VERTICES: usize = 16;

/// Canonical isomorphism key of a graph on at most [`MAX_ENUM_VERTICES`]
/// vertices. Two graphs get the same key exactly when they are isomorphic.
pub fn canonical_key(g: &Graph) -> Result<u128> {
    let n = g.n();
    if n > MAX_ENUM_VERTICES {
        return Err(Error::OrderTooLarge {
            requested: n,
            cap: MAX_ENUM_VERTICES,
        });
    }
    if n < 2 {
        return Ok(0);
    }
    let mut rows = vec![0u16; n];
    for e in g.edges() {
        rows[e.u()] |= 1 << e.v();
        rows[e.v()] |= 1 << e.u();
    }
    // candidates sorted by degree descending: dense prefixes first makes the
    // max-search prune hard
    let mut by_degree: Vec<usize> = (0..n).collect();
    let deg = g.degrees();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));

    let total_bits = (n * (n - 1) / 2) as u32;
    let mut best: u128 = 0;
    let mut have_best = false;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(
        &rows,
        &by_degree,
        total_bits,
        &mut perm,
        &mut used,
        0,
        0,
        &mut best,
        &mut have_best,
    );
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn search(
    rows: &[u16],
    by_degree: &[usize],
    total_bits: u32,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    value: u128,
    bits: u32,
    best: &mut u128,
    have_best: &mut bool,
) {
    let n = rows.len();
    let depth = perm.len();
    if depth == n {
        if !*have_best || value > *best {
            *best = value;
            *have_best = true;
        }
        return;
    }
    for &v in by_degree {
        if used[v] {
            continue;
        }
        // bits contributed by placing v at position `depth`: adjacency to the
        // already placed vertices, in position order
        let mut value = value;
        let mut bits = bits;
        for &u in perm.iter() {
            value = (value << 1) | u128::from(rows[v] >> u & 1);
            bits += 1;
        }
        if *have_best {
            // compare the partial string against the best's prefix
            let best_prefix = *best >> (total_bits - bits);
            if value < best_prefix {
                continue;
            }
        }
        perm.push(v);
        used[v] = true;
        search(
            rows, by_degree, total_bits, perm, used, value, bits, best, have_best,
        );
        used[v] = false;
        perm.pop();
    }
}

/// All graphs on exactly `order` vertices, one representative per isomorphism
/// class, in ascending key order. Built level by level: every class on `k`
/// vertices arises from some class on `k - 1` vertices by attaching one
/// vertex, so extending canonical representatives with every neighbor mask
/// reaches everything.
pub fn nonisomorphic_graphs(order: usize) -> Result<Vec<Graph>> {
    if order > MAX_ENUM_VERTICES {
        return Err(Error::OrderTooLarge {
            requested: order,
            cap: MAX_ENUM_VERTICES,
        });
    }
    if order == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut level: Vec<(u128, Graph)> = vec![(0, Graph::empty(1))];
    for k in 2..=order {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut next: Vec<(u128, Graph)> = Vec::new();
        for (_, parent) in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut child = Graph::empty(k);
                for e in parent.edges() {
                    child.add_edge(e.u(), e.v()).expect("parent edges fit");
                }
                for u in 0..(k - 1) {
                    if mask >> u & 1 == 1 {
                        child.add_edge(u, k - 1).expect("new edges fit");
                    }
                }
                let key = canonical_key(&child)?;
                if seen.insert(key) {
                    next.push((key, child));
                }
            }
        }
        next.sort_by_key(|(key, _)| *key);
        level = next;
    }
    Ok(level.into_iter().map(|(_, g)| g).collect())
}
