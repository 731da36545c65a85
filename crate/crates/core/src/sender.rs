//! Senders: gadget graphs whose two signal edges have linked colors.
//!
//! A graph with signal edges `e`, `f` is a positive sender for a goal when it
//! has good colorings, every good coloring gives `e` and `f` the same color,
//! and both colors occur on `e` across good colorings. A negative sender
//! forces the two signal colors to differ instead.
//!
//! [`check_sender`] resolves a claim with four pinned queries: two
//! satisfiable ones that produce the witness colorings (and so also show good
//! colorings exist), and two exhaustive unsatisfiable ones ruling out the
//! polarity-violating color combinations. The certificate stores the
//! witnesses plus attestations for the exhausted queries.

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, Meter};
use crate::coloring::{verify_coloring, ClauseSystem, Color, EdgeColoring, Goal, Pin};
use crate::error::{Error, Result};
use crate::generate::nonisomorphic_graphs;
use crate::graph::{Edge, Graph};
use crate::ENGINE_VERSION;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl std::fmt::Display for Polarity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Polarity::Positive => write!(f, "positive"),
            Polarity::Negative => write!(f, "negative"),
        }
    }
}

impl Polarity {
    /// The two `(color of e, color of f)` combinations a sender of this
    /// polarity must rule out.
    pub fn forbidden_combinations(&self) -> [(Color, Color); 2] {
        match self {
            Polarity::Negative => [(Color::Red, Color::Red), (Color::Blue, Color::Blue)],
            Polarity::Positive => [(Color::Red, Color::Blue), (Color::Blue, Color::Red)],
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SenderClaim {
    pub host: Graph,
    pub e: Edge,
    pub f: Edge,
    pub goal: Goal,
    pub polarity: Polarity,
}

impl SenderClaim {
    pub fn new(host: Graph, e: Edge, f: Edge, goal: Goal, polarity: Polarity) -> Result<Self> {
        if e == f {
            return Err(Error::InvalidClaim("signal edges must be distinct".into()));
        }
        for edge in [&e, &f] {
            if !host.contains(edge) {
                return Err(Error::EdgeNotInGraph { edge: *edge });
            }
        }
        Ok(SenderClaim {
            host,
            e,
            f,
            goal,
            polarity,
        })
    }
}

/// Attestation that one pinned query was run to exhaustion and found nothing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ForbiddenQuery {
    pub pins: Vec<Pin>,
    /// Always `true` in a valid certificate: the search space was fully
    /// explored, not cut off by the budget.
    pub exhausted: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SenderCertificate {
    pub claim: SenderClaim,
    /// Good coloring with `e` red.
    pub red_witness: EdgeColoring,
    /// Good coloring with `e` blue.
    pub blue_witness: EdgeColoring,
    pub forbidden_queries: Vec<ForbiddenQuery>,
    pub engine_version: String,
    pub budget_nodes: u64,
}

/// Which sender condition broke, with a counterexample where one exists.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "condition")]
pub enum SenderFailure {
    /// No good colorings at all.
    NoGoodColorings,
    /// Good colorings exist but `e` never takes this color.
    MissingSignalColor { color: Color },
    /// A good coloring realizes a forbidden color combination on `(e, f)`.
    PolarityViolated { counterexample: EdgeColoring },
}

impl std::fmt::Display for SenderFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SenderFailure::NoGoodColorings => write!(f, "host has no good colorings"),
            SenderFailure::MissingSignalColor { color } => {
                write!(f, "no good coloring gives e the color {color}")
            }
            SenderFailure::PolarityViolated { .. } => {
                write!(f, "a good coloring violates the claimed polarity")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum CheckOutcome {
    Verified(Box<SenderCertificate>),
    Failed(SenderFailure),
}

impl CheckOutcome {
    pub fn certificate(self) -> Option<SenderCertificate> {
        match self {
            CheckOutcome::Verified(c) => Some(*c),
            CheckOutcome::Failed(_) => None,
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, CheckOutcome::Verified(_))
    }
}

/// Verifies a sender claim. Budget exhaustion surfaces as
/// [`Error::BudgetExhausted`], distinct from a failed claim.
pub fn check_sender(claim: &SenderClaim, budget: &Budget) -> Result<CheckOutcome> {
    let mut meter = budget.meter();
    check_sender_with_meter(claim, budget.max_nodes, &mut meter)
}

pub(crate) fn check_sender_with_meter(
    claim: &SenderClaim,
    budget_nodes: u64,
    meter: &mut Meter,
) -> Result<CheckOutcome> {
    // revalidate: claims can arrive deserialized
    let claim = SenderClaim::new(
        claim.host.clone(),
        claim.e,
        claim.f,
        claim.goal.clone(),
        claim.polarity,
    )?;
    let cs = ClauseSystem::build(&claim.host, &claim.goal, &[])?;
    let pinned = |pins: &[Pin], meter: &mut Meter| -> Result<(Option<EdgeColoring>, u64)> {
        let before = meter.used();
        let result = cs.solve_pinned(pins, meter)?;
        Ok((result, meter.used() - before))
    };

    let (red_result, _) = pinned(&[Pin::new(claim.e, Color::Red)], meter)?;
    let (blue_result, _) = pinned(&[Pin::new(claim.e, Color::Blue)], meter)?;
    let (red_witness, blue_witness) = match (red_result, blue_result) {
        (None, None) => return Ok(CheckOutcome::Failed(SenderFailure::NoGoodColorings)),
        (Some(_), None) => {
            return Ok(CheckOutcome::Failed(SenderFailure::MissingSignalColor {
                color: Color::Blue,
            }))
        }
        (None, Some(_)) => {
            return Ok(CheckOutcome::Failed(SenderFailure::MissingSignalColor {
                color: Color::Red,
            }))
        }
        (Some(r), Some(b)) => (r, b),
    };

    let mut forbidden_queries = Vec::new();
    for (ce, cf) in claim.polarity.forbidden_combinations() {
        let pins = vec![Pin::new(claim.e, ce), Pin::new(claim.f, cf)];
        let (result, nodes) = pinned(&pins, meter)?;
        match result {
            Some(counterexample) => {
                return Ok(CheckOutcome::Failed(SenderFailure::PolarityViolated {
                    counterexample,
                }))
            }
            None => forbidden_queries.push(ForbiddenQuery {
                pins,
                exhausted: true,
                nodes,
            }),
        }
    }

    let certificate = SenderCertificate {
        claim,
        red_witness,
        blue_witness,
        forbidden_queries,
        engine_version: ENGINE_VERSION.into(),
        budget_nodes,
    };
    validate_sender_certificate(&certificate)?;
    Ok(CheckOutcome::Verified(Box::new(certificate)))
}

/// Closure check: everything about a certificate that can be re-established
/// from its own data. Witnesses re-verify against the copy scan and carry the
/// right signal colors; the forbidden-query attestations cover exactly the
/// two polarity-violating combinations and claim exhaustion. (The attested
/// unsatisfiability itself is the recorded search outcome; re-running the
/// search is the caller's choice.)
pub fn validate_sender_certificate(cert: &SenderCertificate) -> Result<()> {
    let bad = |msg: &str| Err(Error::CertificateInvalid(msg.into()));
    let claim = &cert.claim;
    if claim.e == claim.f {
        return bad("signal edges are equal");
    }
    for edge in [&claim.e, &claim.f] {
        if !claim.host.contains(edge) {
            return bad("signal edge missing from host");
        }
    }
    for (witness, expected_e) in [
        (&cert.red_witness, Color::Red),
        (&cert.blue_witness, Color::Blue),
    ] {
        if !verify_coloring(&claim.host, &claim.goal, witness)? {
            return bad("witness coloring is not good");
        }
        if witness.get(&claim.e) != Some(expected_e) {
            return bad("witness does not give e its advertised color");
        }
        // condition 2 instance: the witness itself must respect the polarity
        let expected_f = match claim.polarity {
            Polarity::Positive => expected_e,
            Polarity::Negative => expected_e.flipped(),
        };
        if witness.get(&claim.f) != Some(expected_f) {
            return bad("witness violates the claimed polarity on f");
        }
    }
    let expected: Vec<Vec<Pin>> = claim
        .polarity
        .forbidden_combinations()
        .iter()
        .map(|(ce, cf)| vec![Pin::new(claim.e, *ce), Pin::new(claim.f, *cf)])
        .collect();
    if cert.forbidden_queries.len() != 2 {
        return bad("expected exactly two forbidden queries");
    }
    for (query, want) in cert.forbidden_queries.iter().zip(&expected) {
        if &query.pins != want {
            return bad("forbidden query pins do not match the polarity");
        }
        if !query.exhausted {
            return bad("forbidden query was not exhausted");
        }
    }
    Ok(())
}

/// Minimization result: the certificate for the shrunken sender plus how the
/// original host maps onto it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MinimizedSender {
    pub certificate: SenderCertificate,
    /// Edges deleted from the original host, in deletion order (original
    /// vertex numbering).
    pub removed_edges: Vec<Edge>,
    /// Old-to-new vertex map (`None` for pruned isolated vertices).
    pub old_to_new: Vec<Option<usize>>,
}

/// Greedily deletes edges (never the signals) while the claim keeps
/// verifying, then prunes isolated vertices. The fixed lexicographic
/// deletion order makes the result reproducible.
///
/// The returned graph is minimal in the subgraph sense: no single further
/// edge deletion leaves a sender (the final full pass established that), and
/// once a single deletion breaks the polarity condition, so does every deeper
/// deletion, because good colorings restrict to good colorings. Isolated
/// vertices are pruned only if the pruned claim still verifies; patterns with
/// isolated vertices can make vertex count matter.
pub fn minimize_sender(cert: &SenderCertificate, budget: &Budget) -> Result<MinimizedSender> {
    validate_sender_certificate(cert)?;
    let mut current = cert.clone();
    let mut removed: Vec<Edge> = Vec::new();

    loop {
        let mut improved = false;
        let candidates: Vec<Edge> = current
            .claim
            .host
            .edges()
            .filter(|x| *x != current.claim.e && *x != current.claim.f)
            .collect();
        for x in candidates {
            let smaller = current.claim.host.delete_edge(&x)?;
            let claim = SenderClaim::new(
                smaller,
                current.claim.e,
                current.claim.f,
                current.claim.goal.clone(),
                current.claim.polarity,
            )?;
            if let CheckOutcome::Verified(next) = check_sender(&claim, budget)? {
                current = *next;
                removed.push(x);
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }

    let isolated = current.claim.host.isolated_vertices();
    let host_n = current.claim.host.n();
    let identity_map: Vec<Option<usize>> = (0..host_n).map(Some).collect();
    if isolated.is_empty() {
        return Ok(MinimizedSender {
            certificate: current,
            removed_edges: removed,
            old_to_new: identity_map,
        });
    }

    let (pruned, old_to_new) = current.claim.host.remove_vertices(&isolated);
    let remap = |e: &Edge| -> Edge {
        Edge::new(
            old_to_new[e.u()].expect("signal endpoints have degree > 0"),
            old_to_new[e.v()].expect("signal endpoints have degree > 0"),
        )
        .expect("reindexing keeps endpoints distinct")
    };
    let pruned_claim = SenderClaim::new(
        pruned,
        remap(&current.claim.e),
        remap(&current.claim.f),
        current.claim.goal.clone(),
        current.claim.polarity,
    )?;
    match check_sender(&pruned_claim, budget)? {
        CheckOutcome::Verified(pruned_cert) => Ok(MinimizedSender {
            certificate: *pruned_cert,
            removed_edges: removed,
            old_to_new,
        }),
        // Dropping vertices changed where the patterns can embed (possible
        // only with isolated pattern vertices); keep the unpruned host.
        CheckOutcome::Failed(_) => Ok(MinimizedSender {
            certificate: current,
            removed_edges: removed,
            old_to_new: identity_map,
        }),
    }
}

/// Post-hoc audit of minimality: returns the first non-signal edge whose
/// deletion still leaves a verified sender, or `None` when the certificate's
/// host is edge-minimal.
pub fn audit_minimality(cert: &SenderCertificate, budget: &Budget) -> Result<Option<Edge>> {
    for x in cert.claim.host.edges() {
        if x == cert.claim.e || x == cert.claim.f {
            continue;
        }
        let claim = SenderClaim::new(
            cert.claim.host.delete_edge(&x)?,
            cert.claim.e,
            cert.claim.f,
            cert.claim.goal.clone(),
            cert.claim.polarity,
        )?;
        if check_sender(&claim, budget)?.is_verified() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Position reached by an interrupted sender search; restart from here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCheckpoint {
    pub order: usize,
    pub graph_index: usize,
    pub pair_index: usize,
}

#[derive(Debug)]
pub struct SenderSearch {
    pub certificates: Vec<SenderCertificate>,
    /// True when every candidate within the vertex bound was examined.
    pub exhausted: bool,
    /// Where to resume when the budget ran out.
    pub checkpoint: Option<SearchCheckpoint>,
    pub graphs_examined: u64,
    pub claims_checked: u64,
    pub nodes: u64,
}

/// Largest `max_vertices` the search accepts by default.
pub const SEARCH_VERTEX_CAP: usize = 8;

/// Exhaustive sender search: every graph up to `max_vertices` vertices (one
/// per isomorphism class, including disconnected ones) and every unordered
/// signal pair. `budget.max_nodes` bounds the total solver nodes across the
/// whole search; when it runs out the result carries a resume checkpoint
/// instead of an error.
pub fn search_senders(
    goal: &Goal,
    polarity: Polarity,
    max_vertices: usize,
    budget: &Budget,
    resume: Option<SearchCheckpoint>,
) -> Result<SenderSearch> {
    if max_vertices > SEARCH_VERTEX_CAP {
        return Err(Error::OrderTooLarge {
            requested: max_vertices,
            cap: SEARCH_VERTEX_CAP,
        });
    }
    let mut meter = budget.meter();
    let mut certificates = Vec::new();
    let mut graphs_examined = 0u64;
    let mut claims_checked = 0u64;

    for order in 1..=max_vertices {
        if resume.is_some_and(|c| order < c.order) {
            continue;
        }
        let graphs = nonisomorphic_graphs(order)?;
        for (graph_index, host) in graphs.iter().enumerate() {
            if resume.is_some_and(|c| order == c.order && graph_index < c.graph_index) {
                continue;
            }
            graphs_examined += 1;
            let edges = host.edge_vec();
            let mut pair_index = 0usize;
            for i in 0..edges.len() {
                for j in (i + 1)..edges.len() {
                    let skip = resume.is_some_and(|c| {
                        order == c.order
                            && graph_index == c.graph_index
                            && pair_index < c.pair_index
                    });
                    let this_pair = pair_index;
                    pair_index += 1;
                    if skip {
                        continue;
                    }
                    let claim =
                        SenderClaim::new(host.clone(), edges[i], edges[j], goal.clone(), polarity)?;
                    claims_checked += 1;
                    match check_sender_with_meter(&claim, budget.max_nodes, &mut meter) {
                        Ok(CheckOutcome::Verified(cert)) => certificates.push(*cert),
                        Ok(CheckOutcome::Failed(_)) => {}
                        Err(Error::BudgetExhausted { .. }) => {
                            return Ok(SenderSearch {
                                certificates,
                                exhausted: false,
                                checkpoint: Some(SearchCheckpoint {
                                    order,
                                    graph_index,
                                    pair_index: this_pair,
                                }),
                                graphs_examined,
                                claims_checked,
                                nodes: meter.used(),
                            })
                        }
                        Err(other) => return Err(other),
                    }
                }
            }
        }
    }

    Ok(SenderSearch {
        certificates,
        exhausted: true,
        checkpoint: None,
        graphs_examined,
        claims_checked,
        nodes: meter.used(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn goal_p3p3() -> Goal {
        Goal::plain(Graph::path(3), Graph::path(3)).unwrap()
    }

    fn goal_k3k3() -> Goal {
        Goal::plain(Graph::complete(3), Graph::complete(3)).unwrap()
    }

    fn budget() -> Budget {
        Budget::default()
    }

    fn edge(u: usize, v: usize) -> Edge {
        Edge::new(u, v).unwrap()
    }

    fn p3_negative_claim() -> SenderClaim {
        SenderClaim::new(
            Graph::path(3),
            edge(0, 1),
            edge(1, 2),
            goal_p3p3(),
            Polarity::Negative,
        )
        .unwrap()
    }

    #[test]
    fn p3_is_a_negative_sender() {
        // The only good colorings of P3 against (P3,P3) are RB and BR, so the
        // signal colors always differ. Cross-checked against the exhaustive
        // oracle.
        let claim = p3_negative_claim();
        let all = oracle::naive_good_colorings(&claim.host, &claim.goal, &[]).unwrap();
        assert_eq!(all.len(), 2);
        for c in &all {
            assert_ne!(c.get(&claim.e), c.get(&claim.f));
        }

        let cert = check_sender(&claim, &budget())
            .unwrap()
            .certificate()
            .expect("P3 claim verifies");
        validate_sender_certificate(&cert).unwrap();
        assert_eq!(cert.red_witness.get(&claim.e), Some(Color::Red));
        assert_eq!(cert.blue_witness.get(&claim.e), Some(Color::Blue));
    }

    #[test]
    fn p5_is_a_positive_sender() {
        // Good colorings of P5 against (P3,P3) alternate, so edges one and
        // three always match. Oracle first: exactly two good colorings.
        let p5 = Graph::path(5);
        let e1 = edge(0, 1);
        let e3 = edge(2, 3);
        let all = oracle::naive_good_colorings(&p5, &goal_p3p3(), &[]).unwrap();
        assert_eq!(all.len(), 2);
        for c in &all {
            assert_eq!(c.get(&e1), c.get(&e3));
        }

        let claim = SenderClaim::new(p5, e1, e3, goal_p3p3(), Polarity::Positive).unwrap();
        let cert = check_sender(&claim, &budget())
            .unwrap()
            .certificate()
            .expect("P5 claim verifies");
        validate_sender_certificate(&cert).unwrap();
    }

    #[test]
    fn k3_fails_condition_two_with_counterexample() {
        let k3 = Graph::complete(3);
        let claim = SenderClaim::new(
            k3.clone(),
            edge(0, 1),
            edge(0, 2),
            goal_k3k3(),
            Polarity::Negative,
        )
        .unwrap();
        match check_sender(&claim, &budget()).unwrap() {
            CheckOutcome::Failed(SenderFailure::PolarityViolated { counterexample }) => {
                assert!(verify_coloring(&k3, &goal_k3k3(), &counterexample).unwrap());
                assert_eq!(counterexample.get(&claim.e), counterexample.get(&claim.f));
            }
            other => panic!("expected a condition-2 failure, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_claims_are_input_errors() {
        let p3 = Graph::path(3);
        assert!(matches!(
            SenderClaim::new(
                p3.clone(),
                edge(0, 1),
                edge(0, 1),
                goal_p3p3(),
                Polarity::Negative
            ),
            Err(Error::InvalidClaim(_))
        ));
        assert!(matches!(
            SenderClaim::new(p3, edge(0, 1), edge(0, 2), goal_p3p3(), Polarity::Negative),
            Err(Error::EdgeNotInGraph { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_unknown_not_failure() {
        let claim = p3_negative_claim();
        assert!(matches!(
            check_sender(&claim, &Budget::nodes(1)),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn minimize_prunes_isolated_vertex() {
        // P3 plus an isolated vertex: nothing deletable, vertex pruned.
        let host = Graph::path(3).disjoint_union(&Graph::empty(1));
        let claim = SenderClaim::new(
            host,
            edge(0, 1),
            edge(1, 2),
            goal_p3p3(),
            Polarity::Negative,
        )
        .unwrap();
        let cert = check_sender(&claim, &budget())
            .unwrap()
            .certificate()
            .unwrap();
        let min = minimize_sender(&cert, &budget()).unwrap();
        assert_eq!(min.certificate.claim.host, Graph::path(3));
        assert!(min.removed_edges.is_empty());
        assert_eq!(min.old_to_new, vec![Some(0), Some(1), Some(2), None]);
    }

    #[test]
    fn minimize_p5_with_pendant_reaches_p4() {
        // P5 plus a pendant edge at vertex 4, signals e1={0,1} and e3={2,3}.
        // Deleting 3-4 keeps a positive sender (paths 0-1-2-3 and the stray
        // edge), then 4-5 goes, and the alternating constraint on P4 keeps
        // e1 and e3 locked together. P4 is the greedy fixpoint: deleting 1-2
        // frees the signals from each other.
        let mut host = Graph::path(5).disjoint_union(&Graph::empty(1));
        host.add_edge(4, 5).unwrap();
        let claim = SenderClaim::new(
            host,
            edge(0, 1),
            edge(2, 3),
            goal_p3p3(),
            Polarity::Positive,
        )
        .unwrap();
        let cert = check_sender(&claim, &budget())
            .unwrap()
            .certificate()
            .unwrap();
        let min = minimize_sender(&cert, &budget()).unwrap();
        assert_eq!(min.certificate.claim.host, Graph::path(4));
        assert_eq!(min.certificate.claim.e, edge(0, 1));
        assert_eq!(min.certificate.claim.f, edge(2, 3));
        // audit: no single deletion survives
        assert_eq!(audit_minimality(&min.certificate, &budget()).unwrap(), None);
    }

    #[test]
    fn minimize_is_a_fixpoint_on_minimal_hosts() {
        let claim = p3_negative_claim();
        let cert = check_sender(&claim, &budget())
            .unwrap()
            .certificate()
            .unwrap();
        let min = minimize_sender(&cert, &budget()).unwrap();
        assert_eq!(min.certificate.claim.host, Graph::path(3));
        assert!(min.removed_edges.is_empty());
    }

    #[test]
    fn search_finds_p3_certificate() {
        let found = search_senders(&goal_p3p3(), Polarity::Negative, 3, &budget(), None).unwrap();
        assert!(found.exhausted);
        let hit = found.certificates.iter().any(|c| {
            c.claim.host.n() == 3 && c.claim.host.edge_count() == 2 && c.claim.e != c.claim.f
        });
        assert!(hit, "the P3 sender must appear, got {found:?}");
    }

    #[test]
    fn search_with_one_vertex_is_empty() {
        let found = search_senders(&goal_p3p3(), Polarity::Negative, 1, &budget(), None).unwrap();
        assert!(found.certificates.is_empty());
        assert!(found.exhausted);
    }

    #[test]
    fn no_negative_triangle_senders_through_four_vertices() {
        // Exhaustive result at this bound: none of the 52 claims verifies.
        let found = search_senders(&goal_k3k3(), Polarity::Negative, 4, &budget(), None).unwrap();
        assert!(found.exhausted);
        assert!(found.certificates.is_empty());
        assert_eq!(found.claims_checked, 52);
    }

    #[test]
    fn search_checkpoint_resumes_without_losing_results() {
        // Run with a starving budget until it checkpoints, then resume; the
        // union of certificates must match a single unbounded run.
        let full = search_senders(&goal_p3p3(), Polarity::Negative, 3, &budget(), None).unwrap();
        // half the total exhausts mid-search but still clears any one claim
        let starved = Budget::nodes((full.nodes / 2).max(1));
        let mut collected = Vec::new();
        let mut resume = None;
        let mut rounds = 0;
        loop {
            let part =
                search_senders(&goal_p3p3(), Polarity::Negative, 3, &starved, resume).unwrap();
            collected.extend(part.certificates);
            rounds += 1;
            if part.exhausted {
                break;
            }
            resume = part.checkpoint;
            assert!(rounds < 1000, "search must make progress");
        }
        assert!(
            rounds > 1,
            "tiny budget should force at least one checkpoint"
        );
        assert_eq!(collected.len(), full.certificates.len());
    }

    #[test]
    fn search_vertex_cap() {
        assert!(matches!(
            search_senders(&goal_p3p3(), Polarity::Negative, 9, &budget(), None),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    // Sender decision straight from the definition: list every good coloring
    // and test the three conditions on the list.
    fn naive_is_sender(claim: &SenderClaim) -> bool {
        let all = oracle::naive_good_colorings(&claim.host, &claim.goal, &[]).unwrap();
        if all.is_empty() {
            return false;
        }
        let relation = all.iter().all(|c| {
            let (ce, cf) = (c.get(&claim.e), c.get(&claim.f));
            match claim.polarity {
                Polarity::Positive => ce == cf,
                Polarity::Negative => ce != cf,
            }
        });
        let red = all.iter().any(|c| c.get(&claim.e) == Some(Color::Red));
        let blue = all.iter().any(|c| c.get(&claim.e) == Some(Color::Blue));
        relation && red && blue
    }

    #[test]
    fn check_sender_agrees_with_the_definition_on_all_small_hosts() {
        // Every graph on up to 4 vertices, every signal pair, both goals and
        // polarities: the pinned-query checker and the definition must agree.
        let goals = [goal_p3p3(), goal_k3k3()];
        let mut agreed = 0;
        for order in 2..=4 {
            for host in crate::generate::nonisomorphic_graphs(order).unwrap() {
                let edges = host.edge_vec();
                for i in 0..edges.len() {
                    for j in (i + 1)..edges.len() {
                        for goal in &goals {
                            for polarity in [Polarity::Positive, Polarity::Negative] {
                                let claim = SenderClaim::new(
                                    host.clone(),
                                    edges[i],
                                    edges[j],
                                    goal.clone(),
                                    polarity,
                                )
                                .unwrap();
                                let fast = check_sender(&claim, &budget()).unwrap().is_verified();
                                assert_eq!(
                                    fast,
                                    naive_is_sender(&claim),
                                    "host {:?} e={} f={} {:?}",
                                    host,
                                    edges[i],
                                    edges[j],
                                    polarity
                                );
                                agreed += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(agreed > 100, "the sweep must cover a real claim population");
    }
}
