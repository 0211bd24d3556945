//! Command-line surface.
//!
//! Reports go to standard output as `key: value` lines; reasons for a
//! failed check go to standard error. Exit status is 0 on success, 1 when a
//! check fails and 2 for usage errors or unreadable input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::cancellation::{
    admits_canceling_pairs, annotate_catalog, certify_ball, find_canceling_sequence, maximal_trees, Certification,
    MaximalTree,
};
use crate::census::{classify_catalog, enumerate_special, Catalog, EnumerateOptions};
use crate::encoding::{acyclic_encoding_check, reconstruct_from_encoding, retraction_report, PieceKind};
use crate::io::{parse_encoding, parse_model, read_catalog, render_catalog, render_kirby, render_model, write_catalog};
use crate::kirby::{shadow_to_kirby, simplify_kirby, ShadowedPolyhedron};
use crate::polyhedron::{homology_profile, PolyhedronModel};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "shadow-census", version, about = "Census and analysis of special polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate closed special polyhedra with N true vertices.
    Enumerate {
        #[arg(long)]
        vertices: usize,
        /// Write the catalog here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Count acyclic classes in a catalog.
    Classify {
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Integral homology of a model file.
    Homology {
        #[arg(long)]
        model: PathBuf,
    },
    /// Canceling-pair search on catalog records.
    Cancel {
        #[arg(long)]
        catalog: PathBuf,
        /// Only this record; all acyclic records otherwise.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Abstract Kirby data of a catalog record.
    Kirby {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        index: usize,
        /// Doubled gleams, one per region, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        gleams: String,
        /// Index of the maximal tree in enumeration order.
        #[arg(long)]
        tree: Option<usize>,
    },
    /// Check that a model is a shadow of the 4-ball.
    Certify {
        #[arg(long)]
        model: PathBuf,
    },
    /// Reconstruct and check a graph encoding.
    Encode {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Write the model file of a catalog record.
    Model {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        index: usize,
    },
}

/// How a command ended, besides its output.
enum Outcome {
    Ok,
    CheckFailed(Vec<String>),
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::CheckFailed(reasons)) => {
            for r in reasons {
                let _ = writeln!(err, "{r}");
            }
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } | Error::Version { .. } | Error::Precondition(_) | Error::Structural(_) => 2,
                _ => 1,
            }
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::precondition(format!("cannot write output: {e}"))
}

fn load_model(path: &Path) -> Result<PolyhedronModel> {
    parse_model(&crate::io::read_file(path)?)
}

fn record_index(catalog: &Catalog, index: usize) -> Result<usize> {
    if index >= catalog.records.len() {
        return Err(Error::precondition(format!(
            "index {index} outside a catalog of {} records",
            catalog.records.len()
        )));
    }
    Ok(index)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Enumerate {
            vertices,
            out: path,
            jobs,
        } => {
            let options = EnumerateOptions {
                jobs: jobs.max(1),
                ..EnumerateOptions::default()
            };
            let mut catalog = enumerate_special(vertices, &options)?;
            annotate_catalog(&mut catalog)?;
            match path {
                Some(p) => {
                    write_catalog(&catalog, &p)?;
                    writeln!(out, "records: {}", catalog.records.len()).map_err(io_err)?;
                    writeln!(out, "histogram: {}", histogram_line(&catalog)).map_err(io_err)?;
                }
                None => out.write_all(render_catalog(&catalog).as_bytes()).map_err(io_err)?,
            }
        }
        Command::Classify { catalog } => {
            let catalog = read_catalog(&catalog)?;
            let report = classify_catalog(&catalog)?;
            let by_regions: Vec<String> = report
                .acyclic_by_regions
                .iter()
                .map(|(r, c)| format!("{r}:{c}"))
                .collect();
            let indices: Vec<String> = report.acyclic_records.iter().map(ToString::to_string).collect();
            writeln!(out, "vertices: {}", catalog.vertex_count).map_err(io_err)?;
            writeln!(out, "total: {}", report.total).map_err(io_err)?;
            writeln!(out, "histogram: {}", histogram_line(&catalog)).map_err(io_err)?;
            writeln!(out, "acyclic: {}", report.acyclic).map_err(io_err)?;
            writeln!(out, "acyclic-by-regions: {}", by_regions.join(" ")).map_err(io_err)?;
            writeln!(out, "acyclic-records: {}", indices.join(" ")).map_err(io_err)?;
        }
        Command::Homology { model } => {
            let model = load_model(&model)?;
            let h = homology_profile(&model)?;
            writeln!(out, "{h}").map_err(io_err)?;
            writeln!(out, "euler: {}", model.euler_characteristic()).map_err(io_err)?;
            writeln!(out, "acyclic: {}", h.is_acyclic()).map_err(io_err)?;
        }
        Command::Cancel { catalog, index } => {
            let catalog = read_catalog(&catalog)?;
            let indices: Vec<usize> = match index {
                Some(i) => vec![record_index(&catalog, i)?],
                None => (0..catalog.records.len())
                    .filter(|&i| catalog.records[i].acyclic)
                    .collect(),
            };
            for i in indices {
                let record = &catalog.records[i];
                let search = admits_canceling_pairs(&record.model())?;
                let witness = match &search.witness {
                    Some(w) => format!(
                        "tree={} pairs={}",
                        list_or_dash(&w.tree.edges),
                        w.sequence
                            .pairs
                            .iter()
                            .map(|(e, r)| format!("({e},{r})"))
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    None => "none".into(),
                };
                writeln!(
                    out,
                    "record {i} key={} admits={} trees={}/{} witness {witness}",
                    record.key,
                    u8::from(search.admits()),
                    search.trees_admitting,
                    search.trees_total
                )
                .map_err(io_err)?;
            }
        }
        Command::Kirby {
            catalog,
            index,
            gleams,
            tree,
        } => {
            let catalog = read_catalog(&catalog)?;
            let record = &catalog.records[record_index(&catalog, index)?];
            let doubled = gleams
                .split(',')
                .map(|g| {
                    g.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::precondition(format!("invalid gleam `{g}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            let model = record.model();
            let shadow = ShadowedPolyhedron::new(model.clone(), doubled)?;
            let (t, sequence) = match tree {
                Some(ti) => {
                    let t: MaximalTree = maximal_trees(record.piece.graph())?
                        .nth(ti)
                        .ok_or_else(|| Error::precondition(format!("no maximal tree {ti}")))?;
                    let seq = find_canceling_sequence(&model, &t, record.vertex_count)?;
                    (t, seq)
                }
                None => match admits_canceling_pairs(&model)?.witness {
                    Some(w) => (w.tree, Some(w.sequence)),
                    None => (
                        maximal_trees(record.piece.graph())?
                            .next()
                            .ok_or_else(|| Error::Internal("graph without a maximal tree".into()))?,
                        None,
                    ),
                },
            };
            let data = shadow_to_kirby(&shadow, &t)?;
            writeln!(out, "tree: {}", list_or_dash(&t.edges)).map_err(io_err)?;
            out.write_all(render_kirby(&data).as_bytes()).map_err(io_err)?;
            match sequence {
                Some(seq) => {
                    let s = simplify_kirby(&data, &seq)?;
                    writeln!(out, "simplified:").map_err(io_err)?;
                    out.write_all(render_kirby(&s.data).as_bytes()).map_err(io_err)?;
                    writeln!(out, "terminal: {}", s.terminal).map_err(io_err)?;
                }
                None => writeln!(out, "simplified: none (no canceling sequence for this tree)").map_err(io_err)?,
            }
        }
        Command::Certify { model } => {
            let model = load_model(&model)?;
            match certify_ball(&model)? {
                Certification::Certified(c) => {
                    writeln!(out, "certified: true").map_err(io_err)?;
                    writeln!(out, "{}", c.homology).map_err(io_err)?;
                    for (piece, w) in &c.witnesses {
                        writeln!(
                            out,
                            "witness piece={piece} tree={} pairs={}",
                            list_or_dash(&w.tree.edges),
                            w.sequence
                                .pairs
                                .iter()
                                .map(|(e, r)| format!("({e},{r})"))
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                        .map_err(io_err)?;
                    }
                    writeln!(out, "non-qualifying: {}", list_or_dash(&c.non_qualifying)).map_err(io_err)?;
                    for h in &c.hypotheses {
                        writeln!(out, "hypothesis: {h}").map_err(io_err)?;
                    }
                }
                Certification::Failed(reasons) => {
                    writeln!(out, "certified: false").map_err(io_err)?;
                    return Ok(Outcome::CheckFailed(reasons.iter().map(ToString::to_string).collect()));
                }
            }
        }
        Command::Encode { graph } => {
            let g = parse_encoding(&crate::io::read_file(&graph)?)?;
            let model = reconstruct_from_encoding(&g)?;
            let h = homology_profile(&model)?;
            out.write_all(render_model(&model).as_bytes()).map_err(io_err)?;
            writeln!(out, "{h}").map_err(io_err)?;
            let r = retraction_report(&g, &model)?;
            writeln!(
                out,
                "retraction: injective={} graph-rank={} image-rank={}",
                r.injective(),
                r.graph_rank,
                r.image_rank
            )
            .map_err(io_err)?;
            if g.kinds().iter().filter(|&&k| k == PieceKind::B).count() == 1 {
                let report = acyclic_encoding_check(&g)?;
                writeln!(out, "acyclic: {}", report.acyclic()).map_err(io_err)?;
                writeln!(out, "violations: {}", report.violations.len()).map_err(io_err)?;
                for v in &report.violations {
                    writeln!(out, "violation: {v}").map_err(io_err)?;
                }
                writeln!(out, "consistent: {}", report.consistent()).map_err(io_err)?;
                writeln!(out, "note: {}", report.note).map_err(io_err)?;
            }
            if !r.injective() {
                return Ok(Outcome::CheckFailed(vec!["graph homology does not inject".into()]));
            }
        }
        Command::Model { catalog, index } => {
            let catalog = read_catalog(&catalog)?;
            let record = &catalog.records[record_index(&catalog, index)?];
            out.write_all(render_model(&record.model()).as_bytes())
                .map_err(io_err)?;
        }
    }
    Ok(Outcome::Ok)
}

fn histogram_line(catalog: &Catalog) -> String {
    catalog
        .histogram
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn list_or_dash(items: &[usize]) -> String {
    if items.is_empty() {
        "-".into()
    } else {
        items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}
