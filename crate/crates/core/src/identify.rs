//! Edge identification: collapse one edge onto another.
//!
//! Given edges `x = (a, b)` and `x' = (c, d)` with disjoint endpoints, the
//! identified graph drops vertices `a` and `b`, keeps all edges among the
//! survivors, and rewires every former neighbor of `a` to `c` and every
//! former neighbor of `b` to `d`. Rewiring that would produce a self-loop is
//! dropped and coinciding edges are merged, so the result is again simple.
//! `x` itself disappears while `x'` survives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, OrientedEdgePair};

/// Result of an identification: the new graph plus the order-preserving
/// old-to-new vertex map (`None` for the two deleted vertices).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Identification {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
}

impl Identification {
    /// Where an original vertex ends up, with the deleted endpoints of `x`
    /// following their rewiring targets.
    pub fn image_of(&self, pair: &OrientedEdgePair, old: usize) -> Option<usize> {
        let (a, b) = pair.x;
        let (c, d) = pair.x_prime;
        let target = if old == a {
            c
        } else if old == b {
            d
        } else {
            old
        };
        self.old_to_new.get(target).copied().flatten()
    }
}

pub fn identify(g: &Graph, pair: &OrientedEdgePair) -> Result<Identification> {
    let (a, b) = pair.x;
    let (c, d) = pair.x_prime;
    for &(p, q) in &[(a, b), (c, d)] {
        let e = crate::graph::Edge::new(p, q)?;
        if !g.contains(&e) {
            return Err(Error::EdgeNotInGraph { edge: e });
        }
    }
    if a == c || a == d || b == c || b == d {
        return Err(Error::SharedEndpoint {
            x0: a,
            x1: b,
            y0: c,
            y1: d,
        });
    }

    let map_endpoint = |v: usize| {
        if v == a {
            c
        } else if v == b {
            d
        } else {
            v
        }
    };

    let (shell, old_to_new) = g.remove_vertices(&[a, b]);
    let mut out = Graph::empty(shell.n());
    for e in g.edges() {
        let (u, v) = (map_endpoint(e.u()), map_endpoint(e.v()));
        if u == v {
            continue; // rewiring collapsed this edge to a loop
        }
        let (nu, nv) = (
            old_to_new[u].expect("mapped endpoints survive"),
            old_to_new[v].expect("mapped endpoints survive"),
        );
        if !out.has_edge(nu, nv) {
            out.add_edge(nu, nv)?;
        }
    }

    debug_assert!(out.has_edge(old_to_new[c].unwrap(), old_to_new[d].unwrap()));
    debug_assert_eq!(out.n(), g.n() - 2);
    debug_assert!(out.edge_count() < g.edge_count());

    Ok(Identification {
        graph: out,
        old_to_new,
    })
}
