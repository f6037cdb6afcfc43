//! Command-line front end. Exit status: 0 on success or expected verdicts,
//! 1 on a verification failure, 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::claims::{run_all, run_claim, ClaimConfig, ClaimId};
use crate::coloring::{exact_chromatic, induction_color_with_palette};
use crate::dot::export_dot;
use crate::embedding::{EmbeddingJson, PlanarEmbedding};
use crate::error::{Error, Result};
use crate::generators::{
    base_map_5, build_figure1, complete_multipartite, flower_counterexample, random_planar_map,
};
use crate::graph::{MapGraph, MapJson};
use crate::hyperdim::{
    adjacency_graph, curve_map, neighborly_boxes, test_conjecture, ConjectureVerdict,
};
use crate::planarity::{edge_bound_filter, euler_check, find_kuratowski, is_planar};

#[derive(Debug, Parser)]
#[command(name = "fourcolor", version, about = "Planar map coloring toolkit")]
pub struct Cli {
    /// Output format for commands that print a map.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// In DOT output, also draw dashed edges between faces that do not touch.
    #[arg(long, global = true)]
    pub show_dotted: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a map read from a file or standard input.
    Color {
        input: Option<PathBuf>,
        /// Minimum number of colors via exact search (default).
        #[arg(long, conflicts_with = "induction")]
        exact: bool,
        /// Face-by-face extension with backtracking.
        #[arg(long)]
        induction: bool,
        /// Palette size.
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Decide planarity, optionally printing a Kuratowski witness.
    Planarity {
        input: Option<PathBuf>,
        #[arg(long)]
        witness: bool,
    },
    /// Euler characteristic of an embedding.
    Euler { input: Option<PathBuf> },
    /// Emit a named or random instance.
    Generate {
        #[command(subcommand)]
        what: Generate,
        /// Write to this file instead of standard output.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run the claim checks and print a JSON report.
    Claims {
        #[arg(long)]
        claim: Option<ClaimId>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the (n + 2)-color bound on curves or voxel regions.
    Hyperdim {
        #[command(subcommand)]
        check: Hyperdim,
    },
}

#[derive(Debug, Subcommand)]
pub enum Generate {
    /// The unfolded polyhedron with faces AEGHD, BFGHC, ABCD, ABFE, CDH.
    Figure1,
    /// Five faces, all adjacent except D and E.
    Base5,
    /// Complete 4-partite map with parts of the given sizes.
    Multipartite { i: usize, j: usize, k: usize, l: usize },
    /// Random maximal planar map.
    Random { n: usize, seed: u64 },
    /// Seven-face map whose bundled precoloring cannot be extended.
    Flower,
    /// Pairwise adjacent voxel regions.
    Boxes { m: usize },
    /// Curve cut into segments.
    Curve {
        n: usize,
        #[arg(long)]
        closed: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Hyperdim {
    /// Every open curve up to N segments and every closed one from 3 to N.
    CheckN1 { n: usize },
    /// The neighborly voxel family with M regions.
    CheckN3 { m: usize },
}

/// Runs the CLI against the given streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return 2;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    match dispatch(&cli, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "fourcolor: {e}");
            2
        }
    }
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|source| Error::ReadFile { path: p.display().to_string(), source }),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_map(path: Option<&Path>, stdin: &mut dyn Read) -> Result<MapGraph> {
    let json: MapJson = serde_json::from_str(&read_input(path, stdin)?)?;
    MapGraph::from_json(&json)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Color { input, induction, k, .. } => {
            let map = read_map(input.as_deref(), stdin)?;
            if *k == 0 {
                return Err(Error::EmptyPalette);
            }
            let coloring = if *induction {
                induction_color_with_palette(&map, None, *k)?
            } else {
                exact_chromatic(&map, *k).witness
            };
            let Some(col) = coloring else {
                writeln!(stderr, "fourcolor: map is not {k}-colorable")?;
                return Ok(1);
            };
            let text = match cli.format {
                Format::Json => to_json(&col.to_json(&map))?,
                Format::Dot => export_dot(&map, Some(&col), cli.show_dotted),
            };
            stdout.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Planarity { input, witness } => {
            let map = read_map(input.as_deref(), stdin)?;
            let planar = is_planar(&map);
            let mut out = serde_json::json!({
                "planar": planar,
                "edge_bound": edge_bound_filter(&map).ok(),
            });
            if *witness && !planar {
                let w = find_kuratowski(&map).expect("non-planar graphs have a witness");
                out["witness"] = serde_json::to_value(w.to_json(&map))?;
            }
            stdout.write_all(to_json(&out)?.as_bytes())?;
            Ok(0)
        }
        Command::Euler { input } => {
            let json: EmbeddingJson = serde_json::from_str(&read_input(input.as_deref(), stdin)?)?;
            let report = euler_check(&PlanarEmbedding::from_json(&json)?);
            stdout.write_all(to_json(&report)?.as_bytes())?;
            Ok(0)
        }
        Command::Generate { what, output } => {
            let text = generate(what, cli.format, cli.show_dotted)?;
            match output {
                Some(path) => fs::write(path, text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Claims { claim, seed } => {
            let statuses = match claim {
                Some(id) => vec![run_claim(*id, &ClaimConfig::with_seed(*seed))?],
                None => run_all(*seed)?,
            };
            stdout.write_all(to_json(&statuses)?.as_bytes())?;
            let failed: Vec<String> = statuses
                .iter()
                .filter(|s| s.is_failure())
                .map(|s| s.claim.to_string())
                .collect();
            if failed.is_empty() {
                Ok(0)
            } else {
                writeln!(stderr, "fourcolor: unexpected verdicts: {}", failed.join(", "))?;
                Ok(1)
            }
        }
        Command::Hyperdim { check } => match check {
            Hyperdim::CheckN1 { n } => {
                let mut reports = Vec::new();
                for len in 1..=*n {
                    reports.push(test_conjecture(1, format!("P{len}"), &curve_map(len, false)?)?);
                    if len >= 3 {
                        reports.push(test_conjecture(1, format!("C{len}"), &curve_map(len, true)?)?);
                    }
                }
                stdout.write_all(to_json(&reports)?.as_bytes())?;
                let consistent = reports.iter().all(|r| r.verdict == ConjectureVerdict::Consistent);
                Ok(if consistent { 0 } else { 1 })
            }
            Hyperdim::CheckN3 { m } => {
                let graph = adjacency_graph(&neighborly_boxes(*m)?);
                let report = test_conjecture(3, format!("neighborly_boxes({m})"), &graph)?;
                stdout.write_all(to_json(&report)?.as_bytes())?;
                Ok(0)
            }
        },
    }
}

fn render_map(map: &MapGraph, format: Format, show_dotted: bool) -> Result<String> {
    match format {
        Format::Json => to_json(&map.to_json()),
        Format::Dot => Ok(export_dot(map, None, show_dotted)),
    }
}

fn generate(what: &Generate, format: Format, show_dotted: bool) -> Result<String> {
    match what {
        Generate::Figure1 => {
            let fix = build_figure1();
            match format {
                Format::Json => to_json(&fix.embedding.to_json()),
                Format::Dot => Ok(export_dot(&fix.dual(), None, show_dotted)),
            }
        }
        Generate::Base5 => render_map(&base_map_5().0, format, show_dotted),
        Generate::Multipartite { i, j, k, l } => {
            render_map(&complete_multipartite(*i, *j, *k, *l)?, format, show_dotted)
        }
        Generate::Random { n, seed } => render_map(&random_planar_map(*n, *seed)?, format, show_dotted),
        Generate::Flower => {
            let fl = flower_counterexample();
            match format {
                Format::Json => to_json(&fl.to_json()),
                Format::Dot => Ok(export_dot(&fl.map, Some(&fl.precol), show_dotted)),
            }
        }
        Generate::Boxes { m } => {
            let cx = neighborly_boxes(*m)?;
            match format {
                Format::Json => to_json(&cx.to_json()),
                Format::Dot => Ok(export_dot(&adjacency_graph(&cx), None, show_dotted)),
            }
        }
        Generate::Curve { n, closed } => render_map(&curve_map(*n, *closed)?, format, show_dotted),
    }
}

