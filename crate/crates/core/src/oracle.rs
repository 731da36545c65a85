//! Brute-force reference implementations.
//!
//! These walk all `2^|E|` colorings and judge each one with
//! [`verify_coloring`], bypassing the clause solver entirely. They exist to
//! cross-check the engine and to certify small instances; anything the fast
//! path concludes should match what these conclude.

use crate::coloring::{verify_coloring, ArrowsVerdict, Color, EdgeColoring, Goal, Pin};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hosts above this many edges are refused; the scan is exponential.
pub const MAX_ORACLE_EDGES: usize = 24;

fn coloring_from_bits(host: &Graph, bits: u64) -> EdgeColoring {
    let mut c = EdgeColoring::empty();
    for (i, e) in host.edges().enumerate() {
        let color = if bits >> i & 1 == 1 {
            Color::Blue
        } else {
            Color::Red
        };
        c.set(e, color);
    }
    c
}

fn check_size(host: &Graph) -> Result<()> {
    if host.edge_count() > MAX_ORACLE_EDGES {
        return Err(Error::OracleTooLarge {
            edges: host.edge_count(),
            max: MAX_ORACLE_EDGES,
        });
    }
    Ok(())
}

/// First good coloring honoring the pins in enumeration order, if any.
pub fn naive_find_good_coloring(
    host: &Graph,
    goal: &Goal,
    pins: &[Pin],
) -> Result<Option<EdgeColoring>> {
    check_size(host)?;
    let m = host.edge_count();
    for bits in 0u64..(1 << m) {
        let c = coloring_from_bits(host, bits);
        if pins.iter().all(|p| c.satisfies_pin(p)) && verify_coloring(host, goal, &c)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Arrowing by exhaustive scan.
pub fn naive_arrows(host: &Graph, goal: &Goal) -> Result<ArrowsVerdict> {
    Ok(match naive_find_good_coloring(host, goal, &[])? {
        Some(c) => ArrowsVerdict::DoesNotArrow(c),
        None => ArrowsVerdict::Arrows,
    })
}

/// Every good coloring honoring the pins.
pub fn naive_good_colorings(host: &Graph, goal: &Goal, pins: &[Pin]) -> Result<Vec<EdgeColoring>> {
    check_size(host)?;
    let m = host.edge_count();
    let mut out = Vec::new();
    for bits in 0u64..(1 << m) {
        let c = coloring_from_bits(host, bits);
        if pins.iter().all(|p| c.satisfies_pin(p)) && verify_coloring(host, goal, &c)? {
            out.push(c);
        }
    }
    Ok(out)
}
