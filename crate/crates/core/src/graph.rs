//! Simple undirected graphs on vertices `0..n` with normalized edge sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge {
                u: a,
                v: b,
                reason: "self-loop",
            });
        }
        Ok(if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }

    /// Key used in JSON maps: `"u-v"`.
    pub fn key(&self) -> String {
        format!("{}-{}", self.u, self.v)
    }

    pub fn parse_key(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('-').collect();
        let bad = || Error::InvalidClaim(format!("bad edge key {s:?}, expected \"u-v\""));
        if parts.len() != 2 {
            return Err(bad());
        }
        let u: usize = parts[0].trim().parse().map_err(|_| bad())?;
        let v: usize = parts[1].trim().parse().map_err(|_| bad())?;
        Edge::new(u, v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (u, v) = <(usize, usize)>::deserialize(deserializer)?;
        Edge::new(u, v).map_err(D::Error::custom)
    }
}

/// Distance between two edges: the minimum shortest-path distance between an
/// endpoint of one and an endpoint of the other. `Infinite` when no such path
/// exists. Zero exactly when the edges share a vertex (or are equal).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum EdgeDistance {
    Finite(usize),
    Infinite,
}

impl EdgeDistance {
    pub fn finite(&self) -> Option<usize> {
        match self {
            EdgeDistance::Finite(d) => Some(*d),
            EdgeDistance::Infinite => None,
        }
    }
}

impl PartialOrd for EdgeDistance {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeDistance {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use EdgeDistance::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for EdgeDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeDistance::Finite(d) => write!(f, "{d}"),
            EdgeDistance::Infinite => write!(f, "infinite"),
        }
    }
}

/// Two ordered edges `x = (a, b)` and `x' = (c, d)` selecting an identification:
/// the endpoints of `x` are deleted, neighbors of `a` rewire to `c` and
/// neighbors of `b` rewire to `d`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrientedEdgePair {
    pub x: (usize, usize),
    pub x_prime: (usize, usize),
}

impl OrientedEdgePair {
    pub fn new(x: (usize, usize), x_prime: (usize, usize)) -> Result<Self> {
        if x.0 == x.1 {
            return Err(Error::InvalidEdge {
                u: x.0,
                v: x.1,
                reason: "self-loop",
            });
        }
        if x_prime.0 == x_prime.1 {
            return Err(Error::InvalidEdge {
                u: x_prime.0,
                v: x_prime.1,
                reason: "self-loop",
            });
        }
        Ok(OrientedEdgePair { x, x_prime })
    }

    /// The other orientation of the same unordered pair: swaps the roles of
    /// `a` and `b`.
    pub fn flipped(&self) -> Self {
        OrientedEdgePair {
            x: (self.x.1, self.x.0),
            x_prime: self.x_prime,
        }
    }
}

impl fmt::Display for OrientedEdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{}-{},{}",
            self.x.0, self.x.1, self.x_prime.0, self.x_prime.1
        )
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn with_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in pairs {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).expect("complete graph edges are valid");
            }
        }
        g
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u).expect("path edges are valid");
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidClaim(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    /// Disjoint union: vertices of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.n += other.n;
        for e in other.edges() {
            g.add_edge(e.u() + self.n, e.v() + self.n)
                .expect("shifted edges are valid");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match Edge::new(a, b) {
            Ok(e) => self.edges.contains(&e),
            Err(_) => false,
        }
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let e = Edge::new(a, b)?;
        if e.v() >= self.n {
            return Err(Error::VertexOutOfRange {
                v: e.v(),
                n: self.n,
            });
        }
        if !self.edges.insert(e) {
            return Err(Error::DuplicateEdge { edge: e });
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u()] += 1;
            d[e.v()] += 1;
        }
        d
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.u()].push(e.v());
            adj[e.v()].push(e.u());
        }
        adj
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, d)| **d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// Same vertex set, edge set minus `e`.
    pub fn delete_edge(&self, e: &Edge) -> Result<Graph> {
        if !self.edges.contains(e) {
            return Err(Error::EdgeNotInGraph { edge: *e });
        }
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// Removes the given vertices, keeping edges between survivors. Surviving
    /// vertices are reindexed preserving their order; the returned map sends
    /// old indices to new ones (`None` for removed vertices).
    pub fn remove_vertices(&self, drop: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut gone = vec![false; self.n];
        for &v in drop {
            if v < self.n {
                gone[v] = true;
            }
        }
        let mut old_to_new = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone[v] {
                old_to_new[v] = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::empty(next);
        for e in &self.edges {
            if let (Some(u), Some(v)) = (old_to_new[e.u()], old_to_new[e.v()]) {
                g.add_edge(u, v).expect("reindexed edges are valid");
            }
        }
        (g, old_to_new)
    }

    /// Subgraph induced by `keep`, reindexed; returns the new-to-old vertex map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let keep_set: BTreeSet<usize> = keep.iter().copied().filter(|&v| v < self.n).collect();
        let drop: Vec<usize> = (0..self.n).filter(|v| !keep_set.contains(v)).collect();
        let (g, old_to_new) = self.remove_vertices(&drop);
        let mut new_to_old = vec![0; g.n()];
        for (old, new) in old_to_new.iter().enumerate() {
            if let Some(new) = new {
                new_to_old[*new] = old;
            }
        }
        (g, new_to_old)
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.n];
        if src >= self.n {
            return dist;
        }
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `from` to `to` as a vertex sequence, if one exists.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        if from >= self.n || to >= self.n {
            return None;
        }
        let adj = self.adjacency();
        let mut prev: Vec<Option<usize>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while let Some(p) = prev[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    /// Minimum endpoint distance between two edges of the graph.
    pub fn edge_distance(&self, e: &Edge, f: &Edge) -> Result<EdgeDistance> {
        for edge in [e, f] {
            if !self.edges.contains(edge) {
                return Err(Error::EdgeNotInGraph { edge: *edge });
            }
        }
        let mut best: Option<usize> = None;
        for src in [e.u(), e.v()] {
            let dist = self.bfs_distances(src);
            for tgt in [f.u(), f.v()] {
                if let Some(d) = dist[tgt] {
                    best = Some(best.map_or(d, |b| b.min(d)));
                }
            }
        }
        Ok(best.map_or(EdgeDistance::Infinite, EdgeDistance::Finite))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        Ok(serde_json::from_str(s)?)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edges.len())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.iter().map(|e| e.endpoints()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::with_edges(repr.n, repr.edges).map_err(D::Error::custom)
    }
}
