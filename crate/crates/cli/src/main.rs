//! Command-line front end.
//!
//! Exit codes: 0 = the relation or claim holds (or the query succeeded),
//! 1 = it does not hold (a witness or reason is printed), 2 = input error,
//! 3 = node budget exhausted before an answer was reached.

mod catalog;
mod graphs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use arrowing_core::{
    arrows, audit_minimality, bridges, build_cyclic_minimal, check_sender, classify_gamma,
    connected_components, enumerate_copies, find_good_coloring, identify, is_connected,
    is_ramsey_minimal, minimize_sender, search_senders, to_graph6, ArrowsVerdict, Budget,
    CheckOutcome, CyclicOutcome, EdgeColoring, Error, Goal, Graph, MinimalityOutcome, Mode, Pin,
    Polarity, SearchCheckpoint, SenderCertificate, SenderClaim, ENGINE_VERSION,
};

use catalog::CertKind;
use graphs::{parse_goal_arg, parse_graph_arg, parse_orientation, parse_pin, parse_signal_edge};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "arrowing",
    version,
    about = "Arrowing decisions, sender certificates, and minimal graphs with long cycles",
    after_help = "Graphs are graph6 strings; K<n>, C<n>, P<n> shorthands are accepted anywhere."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Make output byte-identical across runs (fixes timestamps)
    #[arg(long, global = true)]
    deterministic: bool,

    /// Node budget per search (total across a whole `sender search`)
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,

    /// JSONL catalog file; verified certificates are appended to it
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Plain,
    Strong,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Plain => Mode::Plain,
            ModeArg::Strong => Mode::Strong,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolarityArg {
    Positive,
    Negative,
}

impl From<PolarityArg> for Polarity {
    fn from(p: PolarityArg) -> Polarity {
        match p {
            PolarityArg::Positive => Polarity::Positive,
            PolarityArg::Negative => Polarity::Negative,
        }
    }
}

#[derive(Args)]
struct GoalArgs {
    /// Goal pair as two comma-separated graphs, e.g. "Bw,Bw" or "K3,K3"
    #[arg(long)]
    goal: String,

    /// Copies counted plainly or as induced subgraphs
    #[arg(long, value_enum, default_value_t = ModeArg::Plain)]
    mode: ModeArg,
}

impl GoalArgs {
    fn parse(&self) -> Result<Goal, Error> {
        parse_goal_arg(&self.goal, self.mode.into())
    }
}

#[derive(Args)]
struct SignalArgs {
    /// First signal edge, as "u,v"
    #[arg(short = 'e', long = "edge-e", value_name = "U,V")]
    e: String,

    /// Second signal edge, as "u,v"
    #[arg(short = 'f', long = "edge-f", value_name = "U,V")]
    f: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the host arrows the goal pair
    Arrows {
        /// Host graph
        #[arg(long)]
        host: String,
        #[command(flatten)]
        goal: GoalArgs,
    },
    /// Find a good coloring of the host, optionally with pinned edge colors
    GoodColoring {
        #[arg(long)]
        host: String,
        #[command(flatten)]
        goal: GoalArgs,
        /// Pin an edge color, e.g. "0-1=R" (repeatable)
        #[arg(long = "pin", value_name = "U-V=C")]
        pins: Vec<String>,
    },
    /// Verify, minimize, or search for senders
    Sender {
        #[command(subcommand)]
        action: SenderAction,
    },
    /// Identify edge x onto edge x' and print the resulting graph
    Identify {
        #[arg(long)]
        host: String,
        /// Orientation "a,b-c,d": delete (a,b), rewiring a->c and b->d
        #[arg(long)]
        orient: String,
    },
    /// Certify arrowing-minimality
    Rminimal {
        #[command(subcommand)]
        action: RminimalAction,
    },
    /// Run the sender-to-long-cycle construction
    Pipeline {
        #[command(subcommand)]
        action: PipelineAction,
    },
    /// Inspect a graph
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// List, show, or re-verify stored certificates
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum SenderAction {
    /// Verify a sender claim and emit its certificate
    Check {
        #[arg(long)]
        host: String,
        #[command(flatten)]
        goal: GoalArgs,
        #[command(flatten)]
        signals: SignalArgs,
        #[arg(long, value_enum)]
        polarity: PolarityArg,
    },
    /// Verify a claim, then delete edges and prune vertices while it survives
    Minimize {
        #[arg(long)]
        host: String,
        #[command(flatten)]
        goal: GoalArgs,
        #[command(flatten)]
        signals: SignalArgs,
        #[arg(long, value_enum)]
        polarity: PolarityArg,
        /// Re-check afterwards that no single deletion was missed
        #[arg(long)]
        audit: bool,
    },
    /// Exhaustively search all graphs up to a vertex bound for senders
    Search {
        #[command(flatten)]
        goal: GoalArgs,
        #[arg(long, value_enum)]
        polarity: PolarityArg,
        /// Largest host order to enumerate (cap 8)
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        /// Resume from a checkpoint "order,graph,pair" of an earlier run
        #[arg(long)]
        resume: Option<String>,
    },
}

#[derive(Subcommand)]
enum RminimalAction {
    /// Check that the host arrows but every single-edge deletion does not
    Check {
        #[arg(long)]
        host: String,
        #[command(flatten)]
        goal: GoalArgs,
    },
}

#[derive(Subcommand)]
enum PipelineAction {
    /// From a negative sender claim to a certified minimal graph with a cycle
    Cycle {
        #[arg(long)]
        host: String,
        #[command(flatten)]
        goal: GoalArgs,
        #[command(flatten)]
        signals: SignalArgs,
        /// Requested minimum cycle length
        #[arg(short = 'n', long = "cycle-length")]
        n: usize,
    },
}

#[derive(Subcommand)]
enum GraphAction {
    /// Order, size, connectivity, class, and optional pattern copy counts
    Info {
        #[arg(long)]
        host: String,
        /// Count copies of this pattern in the host
        #[arg(long)]
        pattern: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per stored record
    List,
    /// Print a stored record as JSON
    Show { id: String },
    /// Re-run the closure checks of a stored certificate
    Verify { id: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context {
        json: cli.json,
        deterministic: cli.deterministic,
        budget: Budget::nodes(cli.budget),
        catalog: cli.catalog.clone(),
    };
    match run(cli.command, &ctx) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExhausted { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

struct Context {
    json: bool,
    deterministic: bool,
    budget: Budget,
    catalog: Option<PathBuf>,
}

impl Context {
    fn timestamp(&self) -> String {
        if self.deterministic {
            "1970-01-01T00:00:00Z".into()
        } else {
            chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
        }
    }

    fn emit(&self, value: serde_json::Value, text: String) {
        if self.json {
            println!("{value}");
        } else {
            println!("{text}");
        }
    }

    fn record_certificate<T: serde::Serialize>(
        &self,
        kind: CertKind,
        goal: &Goal,
        host: &Graph,
        cert: &T,
    ) -> Result<Option<String>, Error> {
        let Some(path) = &self.catalog else {
            return Ok(None);
        };
        let record = catalog::make_record(
            kind,
            goal_summary(goal)?,
            to_graph6(host)?,
            self.timestamp(),
            ENGINE_VERSION.into(),
            self.budget.max_nodes,
            cert,
        )?;
        catalog::append(path, &record)?;
        Ok(Some(record.id))
    }
}

fn goal_summary(goal: &Goal) -> Result<String, Error> {
    Ok(format!(
        "{},{} {}",
        to_graph6(goal.g())?,
        to_graph6(goal.h())?,
        goal.mode()
    ))
}

fn coloring_text(c: &EdgeColoring) -> String {
    c.iter()
        .map(|(e, col)| format!("{e}={col}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn goal_json(goal: &Goal) -> Result<serde_json::Value, Error> {
    Ok(json!({
        "g": to_graph6(goal.g())?,
        "h": to_graph6(goal.h())?,
        "mode": goal.mode().to_string(),
    }))
}

fn run(command: Command, ctx: &Context) -> Result<ExitCode, Error> {
    match command {
        Command::Arrows { host, goal } => cmd_arrows(&host, &goal, ctx),
        Command::GoodColoring { host, goal, pins } => cmd_good_coloring(&host, &goal, &pins, ctx),
        Command::Identify { host, orient } => cmd_identify(&host, &orient, ctx),
        Command::Graph {
            action: GraphAction::Info { host, pattern },
        } => cmd_graph_info(&host, pattern.as_deref(), ctx),
        Command::Sender { action } => match action {
            SenderAction::Check {
                host,
                goal,
                signals,
                polarity,
            } => cmd_sender_check(&host, &goal, &signals, polarity.into(), ctx),
            SenderAction::Minimize {
                host,
                goal,
                signals,
                polarity,
                audit,
            } => cmd_sender_minimize(&host, &goal, &signals, polarity.into(), audit, ctx),
            SenderAction::Search {
                goal,
                polarity,
                max_vertices,
                resume,
            } => cmd_sender_search(&goal, polarity.into(), max_vertices, resume.as_deref(), ctx),
        },
        Command::Rminimal {
            action: RminimalAction::Check { host, goal },
        } => cmd_rminimal_check(&host, &goal, ctx),
        Command::Pipeline {
            action:
                PipelineAction::Cycle {
                    host,
                    goal,
                    signals,
                    n,
                },
        } => cmd_pipeline_cycle(&host, &goal, &signals, n, ctx),
        Command::Catalog { action } => cmd_catalog(action, ctx),
    }
}

fn cmd_arrows(host: &str, goal_args: &GoalArgs, ctx: &Context) -> Result<ExitCode, Error> {
    let host_graph = parse_graph_arg(host)?;
    let goal = goal_args.parse()?;
    let report = arrows(&host_graph, &goal, &ctx.budget)?;
    let (verdict_str, witness, code) = match &report.verdict {
        ArrowsVerdict::Arrows => ("arrows", None, ExitCode::SUCCESS),
        ArrowsVerdict::DoesNotArrow(w) => ("does_not_arrow", Some(w.clone()), ExitCode::from(1)),
    };
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "arrows",
        "host": to_graph6(&host_graph)?,
        "goal": goal_json(&goal)?,
        "verdict": verdict_str,
        "witness": witness,
        "nodes": report.nodes,
    });
    let text = match &witness {
        None => format!("arrows: yes ({} nodes, exhaustive)", report.nodes),
        Some(w) => format!(
            "arrows: no ({} nodes)\nwitness: {}",
            report.nodes,
            coloring_text(w)
        ),
    };
    ctx.emit(value, text);
    Ok(code)
}

fn cmd_good_coloring(
    host: &str,
    goal_args: &GoalArgs,
    pin_args: &[String],
    ctx: &Context,
) -> Result<ExitCode, Error> {
    let host_graph = parse_graph_arg(host)?;
    let goal = goal_args.parse()?;
    let pins: Vec<Pin> = pin_args
        .iter()
        .map(|s| parse_pin(s))
        .collect::<Result<_, _>>()?;
    let search = find_good_coloring(&host_graph, &goal, &pins, &ctx.budget)?;
    let (code, text) = match &search.coloring {
        Some(c) => (
            ExitCode::SUCCESS,
            format!("good coloring: {}", coloring_text(c)),
        ),
        None => (
            ExitCode::from(1),
            format!("no good coloring ({} nodes, exhaustive)", search.nodes),
        ),
    };
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "good-coloring",
        "host": to_graph6(&host_graph)?,
        "goal": goal_json(&goal)?,
        "coloring": search.coloring,
        "nodes": search.nodes,
    });
    ctx.emit(value, text);
    Ok(code)
}

fn cmd_identify(host: &str, orient: &str, ctx: &Context) -> Result<ExitCode, Error> {
    let host_graph = parse_graph_arg(host)?;
    let orientation = parse_orientation(orient)?;
    let id = identify(&host_graph, &orientation)?;
    let result_g6 = to_graph6(&id.graph)?;
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "identify",
        "host": to_graph6(&host_graph)?,
        "orientation": orientation,
        "result": result_g6,
        "result_edges": id.graph,
        "vertex_map": id.old_to_new,
    });
    let map_text = id
        .old_to_new
        .iter()
        .enumerate()
        .map(|(old, new)| match new {
            Some(n) => format!("{old}->{n}"),
            None => format!("{old}->x"),
        })
        .collect::<Vec<_>>()
        .join(" ");
    ctx.emit(value, format!("{result_g6}\nvertex map: {map_text}"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_graph_info(host: &str, pattern: Option<&str>, ctx: &Context) -> Result<ExitCode, Error> {
    let g = parse_graph_arg(host)?;
    let comps = connected_components(&g);
    let bridge_list = bridges(&g);
    let gamma = classify_gamma(&g);
    let mut copy_info = serde_json::Value::Null;
    let mut copy_text = String::new();
    if let Some(pattern) = pattern {
        let p = parse_graph_arg(pattern)?;
        let plain = enumerate_copies(&g, &p, false)?;
        let induced = enumerate_copies(&g, &p, true)?;
        copy_text = format!(
            "\ncopies of pattern: {} plain, {} induced",
            plain.len(),
            induced.len()
        );
        copy_info = json!({
            "pattern": to_graph6(&p)?,
            "plain": plain.len(),
            "induced": induced.len(),
        });
    }
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "graph-info",
        "graph6": to_graph6(&g)?,
        "n": g.n(),
        "edges": g.edge_count(),
        "edge_list": g,
        "connected": is_connected(&g),
        "components": comps.len(),
        "bridges": bridge_list,
        "gamma_class": gamma,
        "copies": copy_info,
    });
    let text = format!(
        "n = {}, edges = {}\nconnected: {} ({} component{})\nbridges: {}\nclass: {}{}",
        g.n(),
        g.edge_count(),
        is_connected(&g),
        comps.len(),
        if comps.len() == 1 { "" } else { "s" },
        if bridge_list.is_empty() {
            "none".to_string()
        } else {
            bridge_list
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        },
        gamma,
        copy_text,
    );
    ctx.emit(value, text);
    Ok(ExitCode::SUCCESS)
}

fn build_claim(
    host: &str,
    goal_args: &GoalArgs,
    signals: &SignalArgs,
    polarity: Polarity,
) -> Result<SenderClaim, Error> {
    SenderClaim::new(
        parse_graph_arg(host)?,
        parse_signal_edge(&signals.e)?,
        parse_signal_edge(&signals.f)?,
        goal_args.parse()?,
        polarity,
    )
}

fn sender_cert_json(cert: &SenderCertificate) -> Result<serde_json::Value, Error> {
    Ok(serde_json::to_value(cert)?)
}

fn cmd_sender_check(
    host: &str,
    goal_args: &GoalArgs,
    signals: &SignalArgs,
    polarity: Polarity,
    ctx: &Context,
) -> Result<ExitCode, Error> {
    let claim = build_claim(host, goal_args, signals, polarity)?;
    match check_sender(&claim, &ctx.budget)? {
        CheckOutcome::Verified(cert) => {
            let catalog_id =
                ctx.record_certificate(CertKind::Sender, &claim.goal, &claim.host, &*cert)?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "sender-check",
                "verdict": "verified",
                "certificate": sender_cert_json(&cert)?,
                "catalog_id": catalog_id,
            });
            let mut text = format!(
                "sender verified: {} sender with e={}, f={}\nred witness:  {}\nblue witness: {}",
                claim.polarity,
                claim.e,
                claim.f,
                coloring_text(&cert.red_witness),
                coloring_text(&cert.blue_witness),
            );
            if let Some(id) = &catalog_id {
                text.push_str(&format!("\ncatalog id: {id}"));
            }
            ctx.emit(value, text);
            Ok(ExitCode::SUCCESS)
        }
        CheckOutcome::Failed(failure) => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "sender-check",
                "verdict": "failed",
                "failure": failure,
            });
            ctx.emit(value, format!("not a sender: {failure}"));
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_sender_minimize(
    host: &str,
    goal_args: &GoalArgs,
    signals: &SignalArgs,
    polarity: Polarity,
    audit: bool,
    ctx: &Context,
) -> Result<ExitCode, Error> {
    let claim = build_claim(host, goal_args, signals, polarity)?;
    let cert = match check_sender(&claim, &ctx.budget)? {
        CheckOutcome::Verified(cert) => *cert,
        CheckOutcome::Failed(failure) => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "sender-minimize",
                "verdict": "failed",
                "failure": failure,
            });
            ctx.emit(value, format!("not a sender: {failure}"));
            return Ok(ExitCode::from(1));
        }
    };
    let minimized = minimize_sender(&cert, &ctx.budget)?;
    let final_cert = &minimized.certificate;
    if audit {
        if let Some(edge) = audit_minimality(final_cert, &ctx.budget)? {
            return Err(Error::CertificateInvalid(format!(
                "audit found a deletable edge {edge} in the minimized sender"
            )));
        }
    }
    let catalog_id = ctx.record_certificate(
        CertKind::Sender,
        &final_cert.claim.goal,
        &final_cert.claim.host,
        final_cert,
    )?;
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "sender-minimize",
        "verdict": "verified",
        "minimized_host": to_graph6(&final_cert.claim.host)?,
        "e": final_cert.claim.e,
        "f": final_cert.claim.f,
        "removed_edges": minimized.removed_edges,
        "vertex_map": minimized.old_to_new,
        "audited": audit,
        "certificate": sender_cert_json(final_cert)?,
        "catalog_id": catalog_id,
    });
    let mut text = format!(
        "minimal sender: {} (n = {}, edges = {}), e={}, f={}\nremoved {} edge(s)",
        to_graph6(&final_cert.claim.host)?,
        final_cert.claim.host.n(),
        final_cert.claim.host.edge_count(),
        final_cert.claim.e,
        final_cert.claim.f,
        minimized.removed_edges.len(),
    );
    if audit {
        text.push_str("\naudit: no single deletion survives");
    }
    if let Some(id) = &catalog_id {
        text.push_str(&format!("\ncatalog id: {id}"));
    }
    ctx.emit(value, text);
    Ok(ExitCode::SUCCESS)
}

fn parse_checkpoint(s: &str) -> Result<SearchCheckpoint, Error> {
    let bad = || {
        Error::InvalidClaim(format!(
            "bad checkpoint {s:?}, expected \"order,graph,pair\""
        ))
    };
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    Ok(SearchCheckpoint {
        order: parts[0].trim().parse().map_err(|_| bad())?,
        graph_index: parts[1].trim().parse().map_err(|_| bad())?,
        pair_index: parts[2].trim().parse().map_err(|_| bad())?,
    })
}

fn cmd_sender_search(
    goal_args: &GoalArgs,
    polarity: Polarity,
    max_vertices: usize,
    resume: Option<&str>,
    ctx: &Context,
) -> Result<ExitCode, Error> {
    let goal = goal_args.parse()?;
    let resume = resume.map(parse_checkpoint).transpose()?;
    let search = search_senders(&goal, polarity, max_vertices, &ctx.budget, resume)?;
    let mut catalog_ids = Vec::new();
    for cert in &search.certificates {
        if let Some(id) =
            ctx.record_certificate(CertKind::Sender, &cert.claim.goal, &cert.claim.host, cert)?
        {
            catalog_ids.push(id);
        }
    }
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "sender-search",
        "goal": goal_json(&goal)?,
        "polarity": polarity,
        "max_vertices": max_vertices,
        "exhausted": search.exhausted,
        "checkpoint": search.checkpoint,
        "graphs_examined": search.graphs_examined,
        "claims_checked": search.claims_checked,
        "nodes": search.nodes,
        "certificates": search.certificates,
        "catalog_ids": catalog_ids,
    });
    let mut text = String::new();
    for cert in &search.certificates {
        text.push_str(&format!(
            "sender: host {} e={} f={}\n",
            to_graph6(&cert.claim.host)?,
            cert.claim.e,
            cert.claim.f
        ));
    }
    text.push_str(&format!(
        "{} sender(s) found in {} graph(s), {} claim(s), {} nodes",
        search.certificates.len(),
        search.graphs_examined,
        search.claims_checked,
        search.nodes
    ));
    if !search.exhausted {
        if let Some(cp) = &search.checkpoint {
            text.push_str(&format!(
                "\nbudget exhausted; resume with --resume {},{},{}",
                cp.order, cp.graph_index, cp.pair_index
            ));
        }
    }
    ctx.emit(value, text);
    if search.exhausted {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}

fn cmd_rminimal_check(host: &str, goal_args: &GoalArgs, ctx: &Context) -> Result<ExitCode, Error> {
    let host_graph = parse_graph_arg(host)?;
    let goal = goal_args.parse()?;
    match is_ramsey_minimal(&host_graph, &goal, &ctx.budget)? {
        MinimalityOutcome::Certified(cert) => {
            let catalog_id =
                ctx.record_certificate(CertKind::Minimal, &goal, &host_graph, &*cert)?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "rminimal-check",
                "verdict": "minimal",
                "certificate": serde_json::to_value(&*cert)?,
                "catalog_id": catalog_id,
            });
            let mut text = format!(
                "minimal: {} arrows the goal and all {} single-edge deletions admit good colorings",
                to_graph6(&host_graph)?,
                cert.per_edge_witnesses.len()
            );
            if let Some(id) = &catalog_id {
                text.push_str(&format!("\ncatalog id: {id}"));
            }
            ctx.emit(value, text);
            Ok(ExitCode::SUCCESS)
        }
        MinimalityOutcome::Failed(failure) => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "rminimal-check",
                "verdict": "not_minimal",
                "failure": failure,
            });
            ctx.emit(value, format!("not minimal: {failure}"));
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_pipeline_cycle(
    host: &str,
    goal_args: &GoalArgs,
    signals: &SignalArgs,
    n: usize,
    ctx: &Context,
) -> Result<ExitCode, Error> {
    let claim = build_claim(host, goal_args, signals, Polarity::Negative)?;
    let cert = match check_sender(&claim, &ctx.budget)? {
        CheckOutcome::Verified(cert) => *cert,
        CheckOutcome::Failed(failure) => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "pipeline-cycle",
                "verdict": "claim_failed",
                "failure": failure,
            });
            ctx.emit(value, format!("not a negative sender: {failure}"));
            return Ok(ExitCode::from(1));
        }
    };
    let minimized = minimize_sender(&cert, &ctx.budget)?;
    match build_cyclic_minimal(&minimized.certificate, n, &ctx.budget)? {
        CyclicOutcome::Built(result) => {
            let catalog_id = ctx.record_certificate(
                CertKind::CyclicMinimal,
                &result.source.claim.goal,
                &result.result,
                &*result,
            )?;
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "pipeline-cycle",
                "verdict": "built",
                "minimized_sender": to_graph6(&minimized.certificate.claim.host)?,
                "result": serde_json::to_value(&*result)?,
                "result_graph6": to_graph6(&result.result)?,
                "catalog_id": catalog_id,
            });
            let mut text = format!(
                "built: {} (n = {}) is minimal for the goal and carries a cycle of length {} (requested {})\ncycle: {:?}\norientation: {}",
                to_graph6(&result.result)?,
                result.result.n(),
                result.cycle.len(),
                n,
                result.cycle,
                result.orientation_used,
            );
            if let Some(id) = &catalog_id {
                text.push_str(&format!("\ncatalog id: {id}"));
            }
            ctx.emit(value, text);
            Ok(ExitCode::SUCCESS)
        }
        CyclicOutcome::Failed(reports) => {
            let value = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "pipeline-cycle",
                "verdict": "failed",
                "orientation_reports": reports,
            });
            let mut text = String::from("construction failed:");
            for r in &reports {
                text.push_str(&format!(
                    "\n  orientation {}: {}",
                    r.orientation,
                    match &r.minimality_failure {
                        Some(f) => format!("minimality failed ({f})"),
                        None if !r.cycle_found => "no long-enough cycle found".to_string(),
                        None => "ok".to_string(),
                    }
                ));
            }
            ctx.emit(value, text);
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_catalog(action: CatalogAction, ctx: &Context) -> Result<ExitCode, Error> {
    let path = ctx
        .catalog
        .as_ref()
        .ok_or_else(|| Error::InvalidClaim("catalog commands need --catalog PATH".into()))?;
    match action {
        CatalogAction::List => {
            let records = catalog::load(path)?;
            if ctx.json {
                let value = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "catalog-list",
                    "records": records.iter().map(|r| json!({
                        "id": r.id,
                        "kind": r.kind,
                        "goal": r.goal,
                        "host": r.host,
                        "timestamp": r.timestamp,
                    })).collect::<Vec<_>>(),
                });
                println!("{value}");
            } else {
                for r in &records {
                    println!(
                        "{}  {}  goal {}  host {}  {}",
                        r.id, r.kind, r.goal, r.host, r.timestamp
                    );
                }
                println!("{} record(s)", records.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        CatalogAction::Show { id } => {
            let record = catalog::find(path, &id)?;
            println!("{}", serde_json::to_string_pretty(&record)?);
            Ok(ExitCode::SUCCESS)
        }
        CatalogAction::Verify { id } => {
            let record = catalog::find(path, &id)?;
            match catalog::verify(&record) {
                Ok(()) => {
                    ctx.emit(
                        json!({
                            "schema_version": SCHEMA_VERSION,
                            "command": "catalog-verify",
                            "id": id,
                            "verdict": "ok",
                        }),
                        format!("OK: record {id} re-verifies from stored data"),
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    ctx.emit(
                        json!({
                            "schema_version": SCHEMA_VERSION,
                            "command": "catalog-verify",
                            "id": id,
                            "verdict": "failed",
                            "reason": e.to_string(),
                        }),
                        format!("FAILED: {e}"),
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}
