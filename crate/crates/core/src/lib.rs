//! Decide the graph arrowing relation, verify and minimize senders, and build
//! certified minimal graphs containing long cycles.
//!
//! An edge 2-coloring of a host graph is *good* for a pattern pair `(G, H)`
//! when it produces no red copy of `G` and no blue copy of `H`; the host
//! *arrows* the pair when no good coloring exists. On top of that decision
//! this crate verifies *senders* (graphs whose two signal edges have linked
//! colors in every good coloring), minimizes them, searches small orders for
//! them exhaustively, certifies arrowing-minimal graphs, and runs the
//! identification construction that turns a minimal negative sender into a
//! minimal graph with a long cycle.
//!
//! Every verdict is designed to be re-checkable: witness colorings verify
//! against an independent copy scan ([`verify_coloring`]), exhaustive
//! searches leave attestations with node counts, and the brute-force
//! [`oracle`] module re-derives small results without the clause engine.

pub mod budget;
pub mod coloring;
pub mod connectivity;
pub mod copies;
pub mod cycles;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod identify;
pub mod oracle;
pub mod pipeline;
pub mod sender;

pub use budget::Budget;
pub use coloring::{
    arrows, enumerate_good_colorings, find_good_coloring, verify_coloring, ArrowsReport,
    ArrowsVerdict, ClauseSystem, Color, ColoringSearch, EdgeColoring, Enumeration, Goal, Mode, Pin,
};
pub use connectivity::{
    bridges, classify_gamma, connected_components, is_connected, is_three_connected, GammaClass,
};
pub use copies::{enumerate_copies, CopySet};
pub use cycles::{find_cycle_at_least, is_simple_cycle};
pub use error::{Error, Result};
pub use generate::{canonical_key, nonisomorphic_graphs};
pub use graph::{Edge, EdgeDistance, Graph, OrientedEdgePair};
pub use graph6::{parse_graph6, to_graph6};
pub use identify::{identify, Identification};
pub use pipeline::{
    build_cyclic_minimal, identified_arrows_check, is_ramsey_minimal, validate_cyclic_result,
    validate_minimality_certificate, Attestation, CycleOrigin, CyclicMinimalResult, CyclicOutcome,
    IdentifiedCheck, MinimalityCertificate, MinimalityFailure, MinimalityOutcome,
    OrientationReport,
};
pub use sender::{
    audit_minimality, check_sender, minimize_sender, search_senders, validate_sender_certificate,
    CheckOutcome, ForbiddenQuery, MinimizedSender, Polarity, SearchCheckpoint, SenderCertificate,
    SenderClaim, SenderFailure, SenderSearch,
};

/// Version stamp embedded in certificates.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
