use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use thickness_core::constructions::generate;
use thickness_core::io::{
    self, load_from_path, load_graph_from_path, witness_document, DotMode, LabeledGraph,
};
use thickness_core::oracle::{exact_thickness, OracleKind, OracleResult, DEFAULT_NODE_BUDGET};
use thickness_core::selftest::{self, DEFAULT_N_MAX};
use thickness_core::{
    base_pages, thickness_formula, Decomposition, Edge, Error, GraphFamily, Page, VertexRef,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "thickness",
    version,
    about = "Planar decompositions of complete multipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Knn,
    K1nn,
    K2nn,
    K11nn,
}

impl From<Family> for GraphFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Knn => GraphFamily::Knn,
            Family::K1nn => GraphFamily::K1nn,
            Family::K2nn => GraphFamily::K2nn,
            Family::K11nn => GraphFamily::K11nn,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    PerPage,
    ColoredUnion,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a decomposition with the minimum number of pages.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a decomposition document.
    Verify {
        file: PathBuf,
        #[arg(long)]
        expect_count: Option<usize>,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the thickness formula value.
    Formula {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
    },
    /// Write the p + 1 base pages of K_{4p,4p}.
    Base {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact thickness of a small graph.
    Oracle {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Write the witness decomposition here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Export a decomposition as DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "per-page")]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the acceptance sweep.
    Selftest {
        /// Largest n swept (default: $THICKNESS_SELFTEST_N_MAX, else 48).
        #[arg(long)]
        n_max: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Construction { .. }) => EXIT_MISMATCH,
                _ => EXIT_INVALID,
            };
            ExitCode::from(code)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Gen { family, n, out } => {
            let d = generate(&family.into(), n)?;
            emit(&io::save(&d), out.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            file,
            expect_count,
            json,
        } => {
            let d = load_from_path(&file)?;
            let report = d.verify(expect_count)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                let verdict = if report.overall { "ok" } else { "FAILED" };
                println!("{}: {verdict}, {} pages", file.display(), report.page_count);
                for line in report.problems() {
                    println!("  {line}");
                }
            }
            Ok(if report.overall { 0 } else { EXIT_MISMATCH })
        }
        Command::Formula { family, n } => {
            println!("{}", thickness_formula(&family.into(), n)?);
            Ok(0)
        }
        Command::Base { p, out } => {
            let n = 4 * p;
            let d = Decomposition {
                family: GraphFamily::Knn,
                n,
                part_sizes: vec![n, n],
                pages: base_pages(p)?,
                provenance: format!("base decomposition of K_{{{n},{n}}}"),
            };
            emit(&io::save(&d), out.as_deref())?;
            Ok(0)
        }
        Command::Oracle {
            file,
            max_k,
            budget,
            witness,
        } => {
            let g = load_graph_from_path(&file)?;
            let r = exact_thickness(&g.graph, max_k, budget);
            oracle_report(&g, &r, witness.as_deref())
        }
        Command::ExportDot { file, mode, out } => {
            let d = load_from_path(&file)?;
            let mode = match mode {
                Mode::PerPage => DotMode::PerPage,
                Mode::ColoredUnion => DotMode::ColoredUnion,
            };
            for path in io::write_dot_files(&io::export_dot(&d, mode), &out)? {
                println!("{}", path.display());
            }
            Ok(0)
        }
        Command::Selftest { n_max } => {
            let n_max = n_max
                .or_else(selftest::n_max_from_env)
                .unwrap_or(DEFAULT_N_MAX);
            let mut ok = true;
            for line in selftest::run(n_max) {
                println!("{line}");
                ok &= line.ok();
            }
            Ok(if ok { 0 } else { EXIT_MISMATCH })
        }
    }
}

fn oracle_report(g: &LabeledGraph, r: &OracleResult, witness: Option<&Path>) -> Result<u8> {
    let named = g.part_sizes.as_deref().and_then(GraphFamily::recognize);
    let formula = named
        .as_ref()
        .and_then(|(f, n)| thickness_formula(f, *n).ok());
    let nodes = r.nodes_explored;
    let code = match r.kind {
        OracleKind::Exact(k) => {
            println!("thickness {k} (exact, {nodes} nodes)");
            if let Some(path) = witness {
                let pages = r.witness.as_ref().expect("exact results carry a witness");
                fs::write(path, witness_text(g, pages)?)
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            match formula {
                Some(f) if f != k => {
                    println!("formula gives {f}");
                    EXIT_MISMATCH
                }
                _ => 0,
            }
        }
        OracleKind::LowerBoundOnly(b) => {
            println!("thickness at least {b} (no decomposition found up to the page limit, {nodes} nodes)");
            match formula {
                Some(f) if f < b => {
                    println!("formula gives {f}");
                    EXIT_MISMATCH
                }
                _ => 0,
            }
        }
        OracleKind::BudgetExhausted => {
            println!(
                "budget exhausted after {nodes} nodes; thickness at least {}",
                r.lower_bound
            );
            EXIT_BUDGET
        }
    };
    Ok(code)
}

// Graphs given by a supported part list get a typed document that `verify`
// accepts; anything else gets a label-only witness.
fn witness_text(g: &LabeledGraph, pages: &[Vec<(usize, usize)>]) -> Result<String> {
    let labeled: Vec<Vec<[String; 2]>> = pages
        .iter()
        .map(|p| {
            p.iter()
                .map(|&(a, b)| [g.labels[a].clone(), g.labels[b].clone()])
                .collect()
        })
        .collect();
    let provenance = format!("exact search witness, page count {}", pages.len());
    let typed = g.part_sizes.as_ref().and_then(|sizes| {
        let pages = labeled
            .iter()
            .map(|p| {
                p.iter()
                    .map(|[a, b]| {
                        Edge::new(a.parse::<VertexRef>().ok()?, b.parse::<VertexRef>().ok()?).ok()
                    })
                    .collect::<Option<Vec<Edge>>>()
                    .and_then(|edges| Page::from_edges(edges).ok())
            })
            .collect::<Option<Vec<Page>>>()?;
        let (family, n) =
            GraphFamily::recognize(sizes).unwrap_or((GraphFamily::Custom(sizes.clone()), 0));
        Some(Decomposition {
            family,
            n,
            part_sizes: sizes.clone(),
            pages,
            provenance: provenance.clone(),
        })
    });
    Ok(match typed {
        Some(d) => io::save(&d),
        None => witness_document(&labeled, &provenance).to_json(),
    })
}
