//! Connectivity queries: components, bridges, 3-connectivity, and the
//! pattern-class test used by the identification pipeline.
//!
//! Everything here is brute force on purpose. At the orders this crate works
//! with it is fast enough, and the answers double as their own certificates:
//! a bridge is an edge whose deletion leaves more components, a 2-cut is an
//! explicit vertex pair, and so on.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph};

/// Vertex partition into connected components, each sorted, ordered by their
/// smallest vertex. A 0-vertex graph has no components.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// A graph with zero vertices counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// All bridges: edges whose deletion increases the component count.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let base = connected_components(g).len();
    g.edges()
        .filter(|e| {
            let without = g.delete_edge(e).expect("iterating existing edges");
            connected_components(&without).len() > base
        })
        .collect()
}

/// 3-vertex-connectivity by exhausting all vertex pairs: the graph must be
/// connected, have at least four vertices, and stay connected after removing
/// any two vertices.
pub fn is_three_connected(g: &Graph) -> bool {
    if g.n() < 4 || !is_connected(g) {
        return false;
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let (rest, _) = g.remove_vertices(&[u, v]);
            if !is_connected(&rest) {
                return false;
            }
        }
    }
    true
}

/// Strongest structural class a pattern graph falls into.
///
/// `Gamma3`: 3-connected, or the triangle. `Gamma2Prime`: connected with at
/// least one edge and no bridge. `Gamma3` implies `Gamma2Prime`; the
/// strongest class is reported.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaClass {
    Gamma3,
    Gamma2Prime,
    Neither,
}

impl std::fmt::Display for GammaClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GammaClass::Gamma3 => write!(f, "gamma3"),
            GammaClass::Gamma2Prime => write!(f, "gamma2'"),
            GammaClass::Neither => write!(f, "neither"),
        }
    }
}

pub fn classify_gamma(g: &Graph) -> GammaClass {
    let is_triangle = g.n() == 3 && g.edge_count() == 3;
    if is_triangle || is_three_connected(g) {
        GammaClass::Gamma3
    } else if g.edge_count() >= 1 && is_connected(g) && bridges(g).is_empty() {
        GammaClass::Gamma2Prime
    } else {
        GammaClass::Neither
    }
}
