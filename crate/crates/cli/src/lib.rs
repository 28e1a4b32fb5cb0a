//! Library half of the `met-atlas` command line: argument definitions,
//! partition-flag parsing, group input files, and the serializers for
//! graphs, paths and verdicts.

pub mod input;
pub mod partspec;
pub mod serialize;

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use met_atlas_core::group::{codim2_single_class_check, group_closure, CLOSURE_CAP};
use met_atlas_core::orbit::{closure_strata, orbit_dim, Algebra, AlgebraKind, NilpotentOrbit};
use met_atlas_core::polarization::polarizations;
use met_atlas_core::{build_graph, connect, net_centers, Partition};

/// Environment variable overriding enumeration caps (group closure).
pub const CAP_ENV: &str = "MET_ATLAS_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "met-atlas",
    about = "Symplectic resolutions of nilpotent orbit closures: polarizations, MET graphs, and quotient-singularity checks",
    version
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Sl,
    So,
    Sp,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> AlgebraKind {
        match a {
            AlgebraArg::Sl => AlgebraKind::Sl,
            AlgebraArg::So => AlgebraKind::So,
            AlgebraArg::Sp => AlgebraKind::Sp,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct OrbitSelector {
    /// Classical family: sl, so or sp.
    #[arg(long)]
    pub algebra: AlgebraArg,
    /// Matrix size n.
    #[arg(long)]
    pub n: usize,
    /// Jordan type, comma separated with optional exponents: 3,2,1 or 2^3,1^2.
    #[arg(long)]
    pub partition: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit dimension and closure strata.
    Orbit {
        #[command(flatten)]
        selector: OrbitSelector,
        #[command(subcommand)]
        action: OrbitAction,
    },
    /// List the flag types of the symplectic resolutions of the orbit closure.
    Polarizations {
        #[command(flatten)]
        selector: OrbitSelector,
    },
    /// Build the resolution graph with classified edges.
    Graph {
        #[command(flatten)]
        selector: OrbitSelector,
    },
    /// Shortest chain of moves between two resolutions, with the net MET centers.
    Connect {
        #[command(flatten)]
        selector: OrbitSelector,
        /// Source node label, e.g. Y_321 or Y_3223^+.
        #[arg(long)]
        from: String,
        /// Target node label.
        #[arg(long)]
        to: String,
    },
    /// Finite matrix group analysis over a cyclotomic field.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrbitAction {
    /// Orbit dimension.
    Dim,
    /// Jordan types in the closure, by decreasing dimension.
    Strata,
}

#[derive(Debug, Subcommand)]
pub enum GroupAction {
    /// Run the codimension-2 single-class check and its corollaries.
    Check {
        /// Input JSON file (dim, cyclotomic_order, generators, optional cap).
        #[arg(long)]
        input: PathBuf,
    },
}

fn selected_orbit(selector: &OrbitSelector) -> Result<NilpotentOrbit> {
    let parts = partspec::parse_partition(&selector.partition)?;
    let partition = Partition::new(&parts).map_err(|e| anyhow!("{e}"))?;
    let algebra = Algebra::new(selector.algebra.into(), selector.n).map_err(|e| anyhow!("{e}"))?;
    NilpotentOrbit::new(algebra, partition).map_err(|e| anyhow!("{e}"))
}

/// Executes a parsed command and returns its full output.
pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Orbit { selector, action } => {
            let orbit = selected_orbit(selector)?;
            match action {
                OrbitAction::Dim => {
                    let dim = orbit_dim(&orbit);
                    match cli.format {
                        Format::Json => serialize::orbit_dim_json(&orbit, dim),
                        _ => Ok(format!("dim {} = {}\n", orbit, dim)),
                    }
                }
                OrbitAction::Strata => {
                    let strata = closure_strata(&orbit);
                    match cli.format {
                        Format::Json => serialize::strata_json(&orbit, &strata),
                        _ => {
                            let mut out = format!("closure strata of {}:\n", orbit);
                            for s in &strata {
                                let so = NilpotentOrbit::new(orbit.algebra(), s.clone())
                                    .expect("stratum is a Jordan type");
                                out.push_str(&format!("  {}  dim {}\n", s, orbit_dim(&so)));
                            }
                            Ok(out)
                        }
                    }
                }
            }
        }
        Command::Polarizations { selector } => {
            let orbit = selected_orbit(selector)?;
            let flags = polarizations(&orbit).map_err(|e| anyhow!("{e}"))?;
            match cli.format {
                Format::Json => serialize::polarizations_json(&orbit, &flags),
                _ => {
                    let mut out = format!(
                        "{} has {} polarization{}:\n",
                        orbit,
                        flags.len(),
                        if flags.len() == 1 { "" } else { "s" }
                    );
                    for f in &flags {
                        out.push_str(&format!("  {}  jumps {:?}\n", f.label(), f.expanded()));
                    }
                    Ok(out)
                }
            }
        }
        Command::Graph { selector } => {
            let orbit = selected_orbit(selector)?;
            let graph = build_graph(&orbit).map_err(|e| anyhow!("{e}"))?;
            match cli.format {
                Format::Json => serialize::graph_json(&graph),
                Format::Dot => Ok(serialize::graph_dot(&graph)),
                Format::Text => Ok(serialize::graph_text(&graph)),
            }
        }
        Command::Connect { selector, from, to } => {
            let orbit = selected_orbit(selector)?;
            let graph = build_graph(&orbit).map_err(|e| anyhow!("{e}"))?;
            let path = connect(&graph, from, to).map_err(|e| anyhow!("{e}"))?;
            let centers = net_centers(&path);
            match cli.format {
                Format::Json => serialize::path_json(&graph, &path, &centers),
                _ => Ok(serialize::path_text(&graph, &path, &centers)),
            }
        }
        Command::Group { action } => {
            let GroupAction::Check { input: path } = action;
            let raw =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let spec = input::parse_group_input(&raw)?;
            let cap = closure_cap(spec.cap)?;
            let group = group_closure(spec.field, spec.dim, spec.generators, cap)
                .map_err(|e| anyhow!("{e}"))?;
            let verdict = codim2_single_class_check(&group).map_err(|e| anyhow!("{e}"))?;
            match cli.format {
                Format::Json => serialize::verdict_json(&group, &verdict),
                _ => Ok(serialize::verdict_text(&group, &verdict)),
            }
        }
    }
}

/// Cap resolution: environment override, then the file value, then the
/// built-in default.
fn closure_cap(from_file: Option<usize>) -> Result<usize> {
    if let Ok(raw) = std::env::var(CAP_ENV) {
        let cap: usize = raw
            .parse()
            .map_err(|_| anyhow!("{CAP_ENV} must be a positive integer, got {raw:?}"))?;
        if cap == 0 {
            bail!("{CAP_ENV} must be positive");
        }
        return Ok(cap);
    }
    Ok(from_file.unwrap_or(CLOSURE_CAP))
}
