//! Thin command-line frontend over the library: parsing, dispatch and JSON
//! emission. Exit codes: 0 success, 1 malformed input, 2 verification or
//! equivalence failure, 3 oracle budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use packdom::error::Error;
use packdom::gadget::{self, Direction, HsVariant, IsVariant, TdsVariant};
use packdom::geometry::{self, PointSet};
use packdom::graph::{self, Graph};
use packdom::multipacking::{self, WeightFunction};
use packdom::oracle::{self, Broadcast, PackingWitness, SetSystem};
use packdom::{cactus, family, selftest};

#[derive(Parser)]
#[command(
    name = "packdom",
    version,
    about = "Multipacking and broadcast domination toolkit"
)]
struct Cli {
    /// Seed for randomized generators (reserved; all built-in commands are
    /// deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search-node cap for the exact oracles (overrides PACKDOM_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural class flags of a graph.
    Classify { graph: PathBuf },
    /// Multipacking: exact oracle, diametral approximation, verification.
    Mp {
        #[command(subcommand)]
        cmd: MpCmd,
    },
    /// Broadcast domination: exact oracle and verification.
    Gammab {
        #[command(subcommand)]
        cmd: GammabCmd,
    },
    /// Lower/upper bound report for a connected graph.
    Bounds { graph: PathBuf },
    /// Fractional multipacking certificates.
    Frac {
        #[command(subcommand)]
        cmd: FracCmd,
    },
    /// Constructive multipacking for a cactus, with its size guarantee.
    Cactus { graph: PathBuf },
    /// Four-point hyperbolicity of a connected graph.
    Hyperbolicity { graph: PathBuf },
    /// Certificate family generators.
    Family {
        which: FamilyKind,
        #[arg(long)]
        k: usize,
    },
    /// Hardness-reduction gadget builders and solution mappers.
    Gadget {
        #[command(subcommand)]
        cmd: GadgetCmd,
    },
    /// Euclidean point-set solvers.
    Geo {
        #[command(subcommand)]
        cmd: GeoCmd,
    },
    /// Runs the acceptance criteria suite.
    Selftest,
}

#[derive(Subcommand)]
enum MpCmd {
    /// Exact maximum (r-)multipacking by branch-and-bound.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Every-third-vertex multipacking on a diametral path.
    Approx { graph: PathBuf },
    /// Verify a witness file {"M":[...]} against the graph.
    Verify {
        graph: PathBuf,
        witness: PathBuf,
        #[arg(long)]
        r: Option<u32>,
    },
}

#[derive(Subcommand)]
enum GammabCmd {
    /// Exact broadcast domination number by iterative deepening.
    Exact { graph: PathBuf },
    /// Verify a broadcast file {"f":{"v":w,...}} against the graph.
    Verify { graph: PathBuf, broadcast: PathBuf },
}

#[derive(Subcommand)]
enum FracCmd {
    /// Verify a weight file {"w":{"v":"p/q",...}} against the graph.
    Verify { graph: PathBuf, weights: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Pentagon,
    Fk,
    Hk,
}

#[derive(Clone, Copy, ValueEnum)]
enum HsVariantArg {
    Chordal,
    Hhyp,
    Bip,
    Claw,
}

impl From<HsVariantArg> for HsVariant {
    fn from(v: HsVariantArg) -> Self {
        match v {
            HsVariantArg::Chordal => HsVariant::Chordal,
            HsVariantArg::Hhyp => HsVariant::HalfHyperbolic,
            HsVariantArg::Bip => HsVariant::Bipartite,
            HsVariantArg::Claw => HsVariant::ClawFree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TdsVariantArg {
    Regular,
    Conv,
}

impl From<TdsVariantArg> for TdsVariant {
    fn from(v: TdsVariantArg) -> Self {
        match v {
            TdsVariantArg::Regular => TdsVariant::Regular,
            TdsVariantArg::Conv => TdsVariant::Conv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IsVariantArg {
    Pb,
    Chordal,
    Bip,
}

impl From<IsVariantArg> for IsVariant {
    fn from(v: IsVariantArg) -> Self {
        match v {
            IsVariantArg::Pb => IsVariant::PlanarBipartite,
            IsVariantArg::Chordal => IsVariant::Chordal,
            IsVariantArg::Bip => IsVariant::Bipartite,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Fwd,
    Bwd,
}

#[derive(Subcommand)]
enum GadgetCmd {
    /// Hitting set -> multipacking. Source file: "n m" then one line of
    /// space-separated element indices per set.
    Hs2mp {
        source: PathBuf,
        #[arg(long)]
        variant: HsVariantArg,
        #[arg(long)]
        k: usize,
    },
    /// Total dominating set -> multipacking. Source: graph file.
    Tds2mp {
        source: PathBuf,
        #[arg(long)]
        variant: TdsVariantArg,
        #[arg(long)]
        k: usize,
    },
    /// Independent set -> r-multipacking. Source: graph file.
    Is2rmp {
        source: PathBuf,
        #[arg(long)]
        variant: IsVariantArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Map a witness across a reduction (rebuilt from the same arguments).
    Map {
        source: PathBuf,
        /// Witness JSON: {"M":[...]} of source elements (fwd) or gadget
        /// vertices (bwd).
        witness: PathBuf,
        #[arg(long)]
        dir: Dir,
        #[arg(long)]
        kind: GadgetFamily,
        #[arg(long)]
        variant: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Normalize an r-multipacking of an is2rmp gadget to path endpoints.
    Reassign {
        source: PathBuf,
        witness: PathBuf,
        #[arg(long)]
        variant: IsVariantArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetFamily {
    Hs2mp,
    Tds2mp,
    Is2rmp,
}

#[derive(Subcommand)]
enum GeoCmd {
    /// Nearest-neighbor graph of a point file.
    Nng { points: PathBuf },
    /// Minimum dominating broadcast via the edge cover.
    Mdb { points: PathBuf },
    /// Exact maximum (r-)multipacking of a point set.
    Mp {
        points: PathBuf,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Maximum r-multipacking of a 1D point set by dynamic programming.
    LineRmp {
        points: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Broadcast domination bounds from the kissing constants.
    Bounds { points: PathBuf },
}

fn effective_budget(cli_flag: Option<u64>) -> u64 {
    cli_flag
        .or_else(|| {
            std::env::var("PACKDOM_BUDGET")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(oracle::DEFAULT_BUDGET)
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    Graph::parse(&std::fs::read_to_string(path)?)
}

fn read_points(path: &PathBuf) -> Result<PointSet, Error> {
    PointSet::from_text(&std::fs::read_to_string(path)?)
}

fn read_witness(path: &PathBuf) -> Result<PackingWitness, Error> {
    PackingWitness::from_json_str(&std::fs::read_to_string(path)?)
}

fn emit(value: serde_json::Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{value}");
    }
}

/// A check that failed without being an input error: exit 2.
fn failed(value: serde_json::Value, pretty: bool) -> Result<serde_json::Value, Error> {
    emit(value, pretty);
    Err(Error::Verification("check failed".into()))
}

fn run(cli: Cli) -> Result<(), Error> {
    let budget = effective_budget(cli.budget);
    let pretty = cli.pretty;
    let out = match cli.cmd {
        Cmd::Classify { graph } => {
            let g = read_graph(&graph)?;
            serde_json::to_value(graph::classify(&g))?
        }
        Cmd::Mp { cmd } => match cmd {
            MpCmd::Exact { graph, r } => {
                let g = read_graph(&graph)?;
                let (size, w) = oracle::mp_exact_with(&g, r, budget)?;
                let ok = match r {
                    Some(r) => oracle::verify_r_multipacking(&g, &w, r)?,
                    None => oracle::verify_multipacking(&g, &w)?,
                };
                if !ok {
                    return Err(Error::Verification(
                        "oracle witness failed re-verification".into(),
                    ));
                }
                serde_json::json!({ "size": size, "M": w.members })
            }
            MpCmd::Approx { graph } => {
                let g = read_graph(&graph)?;
                let w = multipacking::diametral_approx(&g)?;
                if !oracle::verify_multipacking(&g, &w)? {
                    return Err(Error::Verification(
                        "approximation failed re-verification".into(),
                    ));
                }
                serde_json::json!({ "size": w.len(), "M": w.members })
            }
            MpCmd::Verify { graph, witness, r } => {
                let g = read_graph(&graph)?;
                let w = read_witness(&witness)?;
                let ok = match r {
                    Some(r) => oracle::verify_r_multipacking(&g, &w, r)?,
                    None => oracle::verify_multipacking(&g, &w)?,
                };
                let doc = serde_json::json!({ "ok": ok, "size": w.len() });
                if !ok {
                    return failed(doc, pretty).map(|_| ());
                }
                doc
            }
        },
        Cmd::Gammab { cmd } => match cmd {
            GammabCmd::Exact { graph } => {
                let g = read_graph(&graph)?;
                let (cost, f) = oracle::gamma_b_exact_with(&g, budget)?;
                if !oracle::verify_broadcast(&g, &f)?.dominating {
                    return Err(Error::Verification(
                        "oracle broadcast failed re-verification".into(),
                    ));
                }
                let mut doc = f.to_json();
                doc["cost"] = cost.into();
                doc
            }
            GammabCmd::Verify { graph, broadcast } => {
                let g = read_graph(&graph)?;
                let f = Broadcast::from_json_str(&std::fs::read_to_string(&broadcast)?)?;
                let chk = oracle::verify_broadcast(&g, &f)?;
                let doc = serde_json::to_value(chk)?;
                if !chk.dominating {
                    return failed(doc, pretty).map(|_| ());
                }
                doc
            }
        },
        Cmd::Bounds { graph } => {
            let g = read_graph(&graph)?;
            serde_json::to_value(multipacking::bounds_report(
                &g,
                multipacking::ORACLE_THRESHOLD,
            )?)?
        }
        Cmd::Frac { cmd } => match cmd {
            FracCmd::Verify { graph, weights } => {
                let g = read_graph(&graph)?;
                let w = WeightFunction::from_json_str(&std::fs::read_to_string(&weights)?)?;
                let (feasible, value) = multipacking::verify_fractional_multipacking(&g, &w)?;
                let doc = serde_json::json!({ "feasible": feasible, "value": value.to_string() });
                if !feasible {
                    return failed(doc, pretty).map(|_| ());
                }
                doc
            }
        },
        Cmd::Cactus { graph } => {
            let g = read_graph(&graph)?;
            let w = cactus::cactus_multipacking(&g)?;
            if !oracle::verify_multipacking(&g, &w)? {
                return Err(Error::Verification("witness failed re-verification".into()));
            }
            let rad = graph::Metric::new(&g).rad();
            serde_json::json!({
                "M": w.members,
                "size": w.len(),
                "rad": rad,
                "bound": cactus::guaranteed_size(rad),
            })
        }
        Cmd::Hyperbolicity { graph } => {
            let g = read_graph(&graph)?;
            let delta = graph::hyperbolicity(&g)?;
            serde_json::json!({ "delta": delta, "halves": delta.halves() })
        }
        Cmd::Family { which, k } => {
            let bundle = match which {
                FamilyKind::Pentagon => family::pentagon_chain(k)?,
                FamilyKind::Fk => family::hexagon_triangle_chain(k)?,
                FamilyKind::Hk => family::k24_chain(k)?,
            };
            if !oracle::verify_multipacking(&bundle.graph, &bundle.mp_witness)? {
                return Err(Error::Verification("family witness failed".into()));
            }
            let chk = oracle::verify_broadcast(&bundle.graph, &bundle.broadcast)?;
            if !chk.dominating || chk.cost != bundle.claimed_gamma_b {
                return Err(Error::Verification("family broadcast failed".into()));
            }
            if let Some(fr) = &bundle.fractional {
                let (ok, value) = multipacking::verify_fractional_multipacking(&bundle.graph, fr)?;
                if !ok || value != multipacking::Rat::from_integer(bundle.claimed_gamma_b as i64) {
                    return Err(Error::Verification(
                        "family fractional certificate failed".into(),
                    ));
                }
            }
            serde_json::json!({
                "graph": bundle.graph.to_json(),
                "labels": bundle.labels,
                "mp_witness": bundle.mp_witness.to_json(),
                "broadcast": bundle.broadcast.to_json(),
                "fractional": bundle.fractional.as_ref().map(|w| w.to_json()),
                "claimed": { "mp": bundle.claimed_mp, "gamma_b": bundle.claimed_gamma_b },
            })
        }
        Cmd::Gadget { cmd } => run_gadget(cmd, pretty)?,
        Cmd::Geo { cmd } => match cmd {
            GeoCmd::Nng { points } => {
                let p = read_points(&points)?;
                serde_json::to_value(geometry::build_nng(&p)?)?
            }
            GeoCmd::Mdb { points } => {
                let p = read_points(&points)?;
                let (cost, f) = geometry::mdb(&p)?;
                if !geometry::verify_point_broadcast(&p, &f)? {
                    return Err(Error::Verification(
                        "broadcast failed re-verification".into(),
                    ));
                }
                let mut doc = f.to_json();
                doc["cost"] = cost.into();
                doc
            }
            GeoCmd::Mp { points, r } => {
                let p = read_points(&points)?;
                let (size, members) = geometry::mp_points_exact(&p, r, budget)?;
                let ok = geometry::verify_point_r_multipacking(
                    &p,
                    &members,
                    r.unwrap_or(p.n().saturating_sub(1)),
                )?;
                if !ok {
                    return Err(Error::Verification("witness failed re-verification".into()));
                }
                serde_json::json!({ "size": size, "M": members })
            }
            GeoCmd::LineRmp { points, r } => {
                let p = read_points(&points)?;
                let (size, members) = geometry::line_r_multipacking(&p, r)?;
                if !geometry::verify_point_r_multipacking(&p, &members, r)? {
                    return Err(Error::Verification("witness failed re-verification".into()));
                }
                serde_json::json!({ "size": size, "M": members })
            }
            GeoCmd::Bounds { points } => {
                let p = read_points(&points)?;
                serde_json::to_value(geometry::bounds_points(&p)?)?
            }
        },
        Cmd::Selftest => {
            let reports = selftest::run_all(false);
            for r in &reports {
                eprintln!(
                    "criterion {:2} {:32} {}",
                    r.id,
                    r.name,
                    if r.passed { "PASS" } else { "FAIL" }
                );
            }
            let doc = selftest::reports_json(&reports);
            if reports.iter().any(|r| !r.passed) {
                return failed(doc, pretty).map(|_| ());
            }
            doc
        }
    };
    emit(out, pretty);
    Ok(())
}

fn run_gadget(cmd: GadgetCmd, pretty: bool) -> Result<serde_json::Value, Error> {
    let _ = pretty;
    match cmd {
        GadgetCmd::Hs2mp { source, variant, k } => {
            let sys = SetSystem::from_text(&std::fs::read_to_string(&source)?)?;
            let inst = gadget::hs_to_mp(variant.into(), &sys, k)?;
            gadget::validate_structure(&inst)?;
            Ok(inst.to_json())
        }
        GadgetCmd::Tds2mp { source, variant, k } => {
            let g = Graph::parse(&std::fs::read_to_string(&source)?)?;
            let inst = gadget::tds_to_mp(variant.into(), &g, k)?;
            gadget::validate_structure(&inst)?;
            Ok(inst.to_json())
        }
        GadgetCmd::Is2rmp {
            source,
            variant,
            k,
            r,
        } => {
            let g = Graph::parse(&std::fs::read_to_string(&source)?)?;
            let inst = gadget::is_to_rmp(variant.into(), &g, k, r)?;
            gadget::validate_structure(&inst)?;
            Ok(inst.to_json())
        }
        GadgetCmd::Map {
            source,
            witness,
            dir,
            kind,
            variant,
            k,
            r,
        } => {
            let w = PackingWitness::from_json_str(&std::fs::read_to_string(&witness)?)?;
            let inst = match kind {
                GadgetFamily::Hs2mp => {
                    let sys = SetSystem::from_text(&std::fs::read_to_string(&source)?)?;
                    let v = parse_hs_variant(&variant)?;
                    gadget::hs_to_mp(v, &sys, k)?
                }
                GadgetFamily::Tds2mp => {
                    let g = Graph::parse(&std::fs::read_to_string(&source)?)?;
                    let v = parse_tds_variant(&variant)?;
                    gadget::tds_to_mp(v, &g, k)?
                }
                GadgetFamily::Is2rmp => {
                    let g = Graph::parse(&std::fs::read_to_string(&source)?)?;
                    let v = parse_is_variant(&variant)?;
                    let r = r.ok_or_else(|| Error::InvalidArgument("--r required".into()))?;
                    gadget::is_to_rmp(v, &g, k, r)?
                }
            };
            let direction = match dir {
                Dir::Fwd => Direction::Forward,
                Dir::Bwd => Direction::Backward,
            };
            let mapped = gadget::map_solution(&inst, direction, &w.members)?;
            Ok(serde_json::json!({ "M": mapped }))
        }
        GadgetCmd::Reassign {
            source,
            witness,
            variant,
            k,
            r,
        } => {
            let g = Graph::parse(&std::fs::read_to_string(&source)?)?;
            let inst = gadget::is_to_rmp(variant.into(), &g, k, r)?;
            let w = read_witness(&witness)?.with_r(r as u32);
            let out = gadget::reassign(&inst, &w)?;
            Ok(serde_json::json!({ "M": out.members, "size": out.len() }))
        }
    }
}

fn parse_hs_variant(s: &str) -> Result<HsVariant, Error> {
    match s {
        "chordal" => Ok(HsVariant::Chordal),
        "hhyp" => Ok(HsVariant::HalfHyperbolic),
        "bip" => Ok(HsVariant::Bipartite),
        "claw" => Ok(HsVariant::ClawFree),
        other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
    }
}

fn parse_tds_variant(s: &str) -> Result<TdsVariant, Error> {
    match s {
        "regular" => Ok(TdsVariant::Regular),
        "conv" => Ok(TdsVariant::Conv),
        other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
    }
}

fn parse_is_variant(s: &str) -> Result<IsVariant, Error> {
    match s {
        "pb" => Ok(IsVariant::PlanarBipartite),
        "chordal" => Ok(IsVariant::Chordal),
        "bip" => Ok(IsVariant::Bipartite),
        other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = match &e {
                Error::Inconclusive { .. } => 3,
                Error::Verification(_) | Error::Infeasible(_) | Error::NotIsometric => 2,
                _ => 1,
            };
            // "check failed" already printed its JSON document.
            if !matches!(&e, Error::Verification(msg) if msg == "check failed") {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
