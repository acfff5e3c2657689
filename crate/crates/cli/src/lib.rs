//! The `rct` command line.
//!
//! Exit status is 0 on success, 1 when the requested check fails or an
//! input is rejected, and 2 on usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use rct_core::cliques::{check_witnessing, WitnessMode};
use rct_core::coding::{build_sk, build_tk, build_tr, check_kfbc};
use rct_core::io::{coding_tree_to_dot, to_canonical_json};
use rct_core::ramseylab::{
    finite_ramsey_check, verify_sierpinski_persistence, Persistence, RamseyOutcome, EXHAUSTIVE_BUDGET,
    PERSISTENCE_MAX_DEPTH,
};
use rct_core::similarity::enumerate_types;
use rct_core::{BinSeq, CodingTree, FiniteGraph, Mode};

#[derive(Parser, Debug)]
#[command(name = "rct", version, about = "Coding trees, strong subtrees and similarity types")]
pub struct Cli {
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "RCT_JOBS")]
    pub jobs: Option<usize>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a coding-tree prefix.
    Build {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Clique size forbidden by Henson trees.
        #[arg(long, required_if_eq_any([("kind", "sk"), ("kind", "tk")]))]
        k: Option<usize>,
        /// Number of coding nodes, pseudo-coding nodes not counted.
        #[arg(long)]
        coding: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the graph coded by a tree.
    Decode {
        #[arg(long)]
        tree: PathBuf,
        /// Keep the pseudo-coding vertices.
        #[arg(long)]
        include_pseudo: bool,
    },
    /// Check a Henson tree against the K_k-free branching criterion.
    CheckFbc {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check that a subtree witnesses all of its pre-cliques.
    CheckWitness {
        #[arg(long)]
        tree: PathBuf,
        /// `{"nodes": [...], "coding": [...]}`; the whole tree if omitted.
        #[arg(long)]
        subtree: Option<PathBuf>,
        /// Only pre-cliques at the level where they first appear.
        #[arg(long)]
        new_only: bool,
    },
    /// Similarity types of antichains coding a graph.
    Types {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[arg(long, value_enum, default_value = "strong")]
        mode: TypeMode,
        #[arg(long)]
        depth: usize,
    },
    /// Decide n -> (m)^k_r by exhaustive search.
    Ramsey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Check that both Sierpiński colors survive in every strong subtree.
    Sierpinski {
        #[arg(long)]
        depth: usize,
    },
    /// Graphviz rendering of a tree.
    ExportDot {
        #[arg(long)]
        tree: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Sk,
    Tk,
    Tr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TypeMode {
    Strong,
    Strict,
}

#[derive(Deserialize)]
struct SubtreeFile {
    nodes: Vec<BinSeq>,
    #[serde(default)]
    coding: Vec<BinSeq>,
}

/// A failed run: the message and the exit status.
struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(1, e.to_string())
    }
}

struct Output {
    text: String,
    status: i32,
}

fn ok(text: String) -> Output {
    Output { text, status: 0 }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure(1, format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Failure(1, format!("{}: {e}", path.display())))
}

fn canonical<T: Serialize>(v: &T) -> Result<String, Failure> {
    Ok(to_canonical_json(v)?)
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Build {
            kind,
            k,
            coding,
            format,
        } => {
            let tree = match kind {
                Kind::Sk => build_sk(k.expect("required by clap"), *coding)?,
                Kind::Tk => build_tk(k.expect("required by clap"), *coding)?,
                Kind::Tr => build_tr(*coding),
            };
            match format {
                Format::Json => Ok(ok(canonical(&tree)?)),
                Format::Dot => Ok(ok(coding_tree_to_dot(&tree))),
            }
        }
        Command::Decode { tree, include_pseudo } => {
            let tree: CodingTree = read_json(tree)?;
            Ok(ok(canonical(&tree.decode(*include_pseudo))?))
        }
        Command::CheckFbc { tree, k } => {
            let tree: CodingTree = read_json(tree)?;
            let report = check_kfbc(&tree, *k)?;
            let status = i32::from(!report.is_ok());
            Ok(Output {
                text: canonical(&report)?,
                status,
            })
        }
        Command::CheckWitness {
            tree,
            subtree,
            new_only,
        } => {
            let tree: CodingTree = read_json(tree)?;
            let (nodes, coding) = match subtree {
                Some(path) => {
                    let s: SubtreeFile = read_json(path)?;
                    (s.nodes, s.coding)
                }
                None => (tree.tree().nodes().cloned().collect(), tree.all_coding().to_vec()),
            };
            let mode = if *new_only {
                WitnessMode::NewOnly
            } else {
                WitnessMode::All
            };
            let report = check_witnessing(&tree, &nodes, &coding, mode)?;
            Ok(Output {
                text: canonical(&report)?,
                status: i32::from(!report.is_ok()),
            })
        }
        Command::Types {
            graph,
            host,
            mode,
            depth,
        } => {
            let graph: FiniteGraph = read_json(graph)?;
            let host: CodingTree = read_json(host)?;
            let mode = match mode {
                TypeMode::Strong => Mode::Strong,
                TypeMode::Strict => Mode::Strict,
            };
            let e = enumerate_types(&graph, &host, mode, *depth)?;
            Ok(ok(canonical(&json!({
                "count": e.count(),
                "saturated": e.saturated,
                "types": e.types,
            }))?))
        }
        Command::Ramsey { n, k, r, m } => {
            let outcome = finite_ramsey_check(*n, *k, *r, *m)?;
            let status = i32::from(matches!(outcome, RamseyOutcome::Counterexample { .. }));
            let record = json!({
                "budget": EXHAUSTIVE_BUDGET.to_string(),
                "exhaustive": true,
                "k": k,
                "m": m,
                "n": n,
                "r": r,
                "result": outcome,
            });
            Ok(Output {
                text: canonical(&record)?,
                status,
            })
        }
        Command::Sierpinski { depth } => {
            let outcome = verify_sierpinski_persistence(*depth)?;
            let status = i32::from(matches!(outcome, Persistence::Counterexample { .. }));
            let record = json!({
                "budget": PERSISTENCE_MAX_DEPTH,
                "depth": depth,
                "result": outcome,
            });
            Ok(Output {
                text: canonical(&record)?,
                status,
            })
        }
        Command::ExportDot { tree } => {
            let tree: CodingTree = read_json(tree)?;
            Ok(ok(coding_tree_to_dot(&tree)))
        }
    }
}

/// Runs the command line, writing results to `stdout` (or `--out`) and
/// diagnostics to `stderr`. Returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // The global pool can be set only once per process; later calls
        // keep the first size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let (text, status) = match dispatch(&cli.command) {
        Ok(out) => (out.text, out.status),
        Err(Failure(status, msg)) => {
            let body = to_canonical_json(&json!({ "error": msg })).unwrap_or_else(|_| format!("{msg}\n"));
            let _ = stderr.write_all(body.as_bytes());
            return status;
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "{msg}");
        return 1;
    }
    status
}
