//! Parsing of graph-valued command-line arguments.
//!
//! Graphs cross the CLI boundary as graph6 strings. The shorthands `K<n>`,
//! `C<n>` and `P<n>` (complete, cycle, path on `n` vertices) are accepted
//! anywhere a graph is expected and expanded before parsing; they can never
//! collide with graph6 because digits are below the graph6 byte range.

use arrowing_core::graph6::parse_graph6;
use arrowing_core::{Edge, Error, Goal, Graph, Mode, OrientedEdgePair, Pin, Result};

pub fn parse_graph_arg(s: &str) -> Result<Graph> {
    let s = s.trim();
    if let Some(g) = parse_shorthand(s)? {
        return Ok(g);
    }
    parse_graph6(s)
}

fn parse_shorthand(s: &str) -> Result<Option<Graph>> {
    let mut chars = s.chars();
    let Some(kind) = chars.next() else {
        return Ok(None);
    };
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Ok(None);
    }
    if !matches!(kind, 'K' | 'C' | 'P') {
        return Ok(None);
    }
    let n: usize = rest
        .parse()
        .map_err(|_| Error::InvalidClaim(format!("bad graph shorthand {s:?}")))?;
    Ok(Some(match kind {
        'K' => Graph::complete(n),
        'P' => Graph::path(n),
        'C' => Graph::cycle(n)?,
        _ => unreachable!(),
    }))
}

/// `"<graph>,<graph>"` plus the mode flag.
pub fn parse_goal_arg(s: &str, mode: Mode) -> Result<Goal> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidClaim(format!(
            "goal must be two comma-separated graphs, got {s:?}"
        )));
    }
    Goal::new(parse_graph_arg(parts[0])?, parse_graph_arg(parts[1])?, mode)
}

/// `"u,v"`.
pub fn parse_signal_edge(s: &str) -> Result<Edge> {
    let bad = || Error::InvalidClaim(format!("bad edge {s:?}, expected \"u,v\""));
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(bad());
    }
    let u: usize = parts[0].trim().parse().map_err(|_| bad())?;
    let v: usize = parts[1].trim().parse().map_err(|_| bad())?;
    Edge::new(u, v)
}

/// `"u-v=R"` or `"u-v=B"`.
pub fn parse_pin(s: &str) -> Result<Pin> {
    let bad = || Error::InvalidClaim(format!("bad pin {s:?}, expected \"u-v=R\" or \"u-v=B\""));
    let (edge_part, color_part) = s.split_once('=').ok_or_else(bad)?;
    let edge = Edge::parse_key(edge_part.trim())?;
    let color = match color_part.trim() {
        "R" | "r" => arrowing_core::Color::Red,
        "B" | "b" => arrowing_core::Color::Blue,
        _ => return Err(bad()),
    };
    Ok(Pin::new(edge, color))
}

/// `"a,b-c,d"`: identify edge (a,b) onto edge (c,d).
pub fn parse_orientation(s: &str) -> Result<OrientedEdgePair> {
    let bad = || Error::InvalidClaim(format!("bad orientation {s:?}, expected \"a,b-c,d\""));
    let (x_part, xp_part) = s.split_once('-').ok_or_else(bad)?;
    let x = parse_signal_edge(x_part)?;
    let xp = parse_signal_edge(xp_part)?;
    // the orientation is ordered; re-split to keep the written order
    let nums = |part: &str| -> Result<(usize, usize)> {
        let ps: Vec<&str> = part.split(',').collect();
        Ok((
            ps[0].trim().parse().map_err(|_| bad())?,
            ps[1].trim().parse().map_err(|_| bad())?,
        ))
    };
    let _ = (x, xp); // validated as edges above
    OrientedEdgePair::new(nums(x_part)?, nums(xp_part)?)
}
