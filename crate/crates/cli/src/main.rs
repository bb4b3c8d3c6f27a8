//! `tlink`: catalogue, build, invariant, check-transitive, screen and render.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use tlink::catalogue::{enumerate_catalogue_with, Archimedean};
use tlink::congruence::{
    periodicity_screen_with_budget, run_job, transitivity_screen_with_budget, JobOutcome, ScreenJob,
};
use tlink::linkdiag::{
    crossing_orbits, diagram_symmetries, from_map_with_seed, BraidWord, DiagramSymmetry, SeedPair,
};
use tlink::planarmap::{
    antiprism_map, bouquet_map, cycle_map, dipole_map, double_all_edges, double_edge_orbit, double_edges,
    edge_orbits, platonic, prism_map, prism_spokes, CombinatorialMap,
};
use tlink::render::render_svg;
use tlink::skein::{SkeinEngine, DEFAULT_CROSSING_BUDGET};
use tlink::{Error, LinkDiagram};

#[derive(Parser)]
#[command(name = "tlink", version, about = "Transitive link diagrams and their specialized HOMFLY invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalogue of crossing-transitive diagrams.
    Catalogue {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_crossings: u64,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        /// Follow each entry by its mirror image.
        #[arg(long)]
        mirrors: bool,
    },
    /// Build a diagram from a braid word or a vertex-transitive map.
    Build(BuildArgs),
    /// Evaluate P_n.
    Invariant {
        #[arg(long)]
        pn: u32,
        #[arg(long = "in")]
        input: PathBuf,
        /// Wrap the polynomial with n, crossing count and elapsed time.
        #[arg(long)]
        meta: bool,
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        budget: usize,
    },
    /// Decide crossing-transitivity by brute force.
    CheckTransitive {
        #[arg(long = "in")]
        input: PathBuf,
        /// Only use symmetries preserving the orientation of the 3-sphere.
        #[arg(long)]
        positive: bool,
    },
    /// Run a periodicity or transitivity congruence screen.
    Screen(ScreenArgs),
    /// Draw a diagram as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["braid", "map"]))]
struct BuildArgs {
    /// Letters such as "1,1,1" or "1 -2 1 -2" (i means sigma_i, -i its inverse).
    #[arg(long, allow_hyphen_values = true, requires = "strands")]
    braid: Option<String>,
    #[arg(long)]
    strands: Option<usize>,
    /// tetrahedron, cube, octahedron, dodecahedron, icosahedron, an Archimedean
    /// solid such as truncated-tetrahedron, or cycle-K, prism-K, antiprism-K,
    /// dipole-K, bouquet-K.
    #[arg(long, conflicts_with = "braid")]
    map: Option<String>,
    /// Edges to double: "all", "spokes" (prisms), an orbit index from the
    /// automorphism group, or a comma-separated list of darts.
    #[arg(long, requires = "map")]
    double: Option<String>,
    #[arg(long, default_value_t = 0, requires = "map")]
    seed: usize,
    /// Which opposite dart pair at the seed crossing goes over.
    #[arg(long, value_enum, default_value_t = Pair::First, requires = "map")]
    seed_pair: Pair,
    #[arg(long, value_enum, default_value_t = Format::Pd)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pd,
    Gauss,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("kind").required(true).args(["period", "transitive", "batch"]))]
struct ScreenArgs {
    #[arg(long, requires = "factor")]
    period: Option<u64>,
    #[arg(long)]
    factor: Option<PathBuf>,
    #[arg(long)]
    transitive: Option<u64>,
    /// JSON array of {diagram, factor?, p, n} jobs.
    #[arg(long, conflicts_with_all = ["pn", "input", "factor"])]
    batch: Option<PathBuf>,
    #[arg(long, required_unless_present = "batch")]
    pn: Option<u32>,
    #[arg(long = "in", required_unless_present = "batch")]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
    budget: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {}", e.name(), e);
            ExitCode::from(1)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> tlink::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(command: Command) -> tlink::Result<()> {
    match command {
        Command::Catalogue {
            max_crossings,
            json,
            table: _,
            mirrors,
        } => {
            let entries = enumerate_catalogue_with(max_crossings as usize, mirrors)?;
            if json {
                return print_json(&entries);
            }
            println!("{:>9}  {:>10}  {:<17}  {:<6}  name", "crossings", "components", "family", "mirror");
            for e in &entries {
                let family = serde_json::to_value(e.family)?;
                let mut line = format!(
                    "{:>9}  {:>10}  {:<17}  {:<6}  {}",
                    e.crossings,
                    e.components,
                    family.as_str().unwrap_or_default(),
                    if e.mirror { "yes" } else { "" },
                    e.name
                );
                if !e.evaluable {
                    line.push_str("  (beyond skein budget)");
                }
                if let Some(note) = e.note {
                    line.push_str(&format!("  [{}]", note));
                }
                println!("{}", line);
            }
            Ok(())
        }
        Command::Build(args) => {
            let d = build(&args)?;
            match args.format {
                Format::Pd => print_json(&d),
                Format::Gauss => print_json(&d.to_gauss()),
            }
        }
        Command::Invariant {
            pn,
            input,
            meta,
            budget,
        } => {
            let d = input::read_diagram(&input)?;
            let start = Instant::now();
            let p = SkeinEngine::new(pn).with_budget(budget).evaluate(&d)?;
            if meta {
                print_json(&json!({
                    "n": pn,
                    "crossings": d.num_crossings(),
                    "components": d.components(),
                    "elapsed_ms": start.elapsed().as_secs_f64() * 1e3,
                    "polynomial": p,
                }))
            } else {
                println!("{}", serde_json::to_string(&p)?);
                Ok(())
            }
        }
        Command::CheckTransitive { input, positive } => {
            let d = input::read_diagram(&input)?;
            let mut group = diagram_symmetries(&d)?;
            if positive {
                group.retain(DiagramSymmetry::preserves_ambient_orientation);
            }
            let orbits = crossing_orbits(d.num_crossings(), &group);
            print_json(&json!({
                "transitive": orbits.len() <= 1,
                "positive": positive,
                "crossings": d.num_crossings(),
                "symmetries": group.len(),
                "orbits": orbits,
            }))
        }
        Command::Screen(args) => screen(args),
        Command::Render { input, out } => {
            let d = input::read_diagram(&input)?;
            print_json(&render_svg(&d, &out)?)
        }
    }
}

fn screen(args: ScreenArgs) -> tlink::Result<()> {
    if let Some(path) = args.batch {
        let jobs: Vec<ScreenJob> = serde_json::from_str(&input::read_text(&path)?)?;
        let outcomes: Vec<JobOutcome> = jobs.par_iter().map(|j| run_job(j).into()).collect();
        return print_json(&outcomes);
    }
    // clap guarantees both when not batching
    let (n, path) = (args.pn.unwrap_or_default(), args.input.unwrap_or_default());
    let d = input::read_diagram(&path)?;
    let report = match (args.period, args.transitive) {
        (Some(p), _) => {
            let factor = input::read_diagram(&args.factor.unwrap_or_default())?;
            periodicity_screen_with_budget(&d, &factor, p, n, args.budget)?
        }
        (None, Some(m)) => transitivity_screen_with_budget(&d, m, n, args.budget)?,
        (None, None) => unreachable!("clap requires one screen kind"),
    };
    print_json(&report)
}

fn usage_error(msg: String) -> ! {
    Cli::command().error(clap::error::ErrorKind::ValueValidation, msg).exit()
}

fn build(args: &BuildArgs) -> tlink::Result<LinkDiagram> {
    if let Some(word) = &args.braid {
        let letters = tlink::linkdiag::parse_letters(word)?;
        return Ok(BraidWord::new(args.strands.unwrap_or_default(), letters)?.closure());
    }
    let name = args.map.as_deref().unwrap_or_default();
    let pair = match args.seed_pair {
        Pair::First => SeedPair::First,
        Pair::Second => SeedPair::Second,
    };
    if let (Some(a), None) = (Archimedean::from_name(name), &args.double) {
        if args.seed == 0 && matches!(pair, SeedPair::First) {
            return a.diagram();
        }
    }
    let m = named_map(name)?;
    let m = match &args.double {
        None => m,
        Some(spec) => double(&m, name, spec)?,
    };
    from_map_with_seed(&m, args.seed, pair)
}

fn named_map(name: &str) -> tlink::Result<CombinatorialMap> {
    if let Some(a) = Archimedean::from_name(name) {
        return Ok(a.solid());
    }
    if let Some((family, k)) = name.rsplit_once('-') {
        if let Ok(k) = k.parse::<usize>() {
            return match family {
                "cycle" => cycle_map(k),
                "prism" => prism_map(k),
                "antiprism" => antiprism_map(k),
                "dipole" => dipole_map(k),
                "bouquet" => bouquet_map(k),
                _ => Err(Error::UnknownSolid(name.into())),
            };
        }
    }
    platonic(name)
}

fn double(m: &CombinatorialMap, name: &str, spec: &str) -> tlink::Result<CombinatorialMap> {
    match spec {
        "all" => return Ok(double_all_edges(m)),
        "spokes" => {
            let k = name
                .strip_prefix("prism-")
                .and_then(|k| k.parse().ok())
                .unwrap_or_else(|| usage_error("--double spokes needs a prism-K map".into()));
            return Ok(double_edges(m, &prism_spokes(k)));
        }
        _ => {}
    }
    if spec.contains(',') {
        let darts: Vec<usize> = spec
            .split(',')
            .map(|t| t.trim().parse().unwrap_or_else(|_| usage_error(format!("bad dart `{}` in --double", t))))
            .collect();
        return double_edge_orbit(m, &darts);
    }
    let index: usize = spec
        .parse()
        .unwrap_or_else(|_| usage_error(format!("--double expects all, spokes, an orbit index or darts, got `{}`", spec)));
    let orbits = edge_orbits(m)?;
    let orbit = orbits.get(index).ok_or(Error::IndexOutOfRange {
        index: index as i64,
        bound: orbits.len() as i64,
    })?;
    double_edge_orbit(m, orbit)
}
