//! `interleave`: exact interleaving distances from JSON inputs.

use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::sync::OnceLock;

use clap::{Parser, Subcommand, ValueEnum};
use interleave_core::compare::{d_gh_formigrams, DEFAULT_PAIR_GUARD};
use interleave_core::filtration::{d_t_int, d_t_r};
use interleave_core::io;
use interleave_core::lattice::DEFAULT_MIN_REPS_GUARD;
use interleave_core::persistence::h0_barcode;
use interleave_core::{Dendrogram, Error, ErrorKind, ExtDist, Rat};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "interleave", version, about = "Exact interleaving distances between poset-valued persistence modules")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on subpartitions.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Operations on formigrams.
    Formigram {
        #[command(subcommand)]
        op: FormigramOp,
    },
    /// Dendrograms, single linkage and ultrametrics.
    Dendro {
        #[command(subcommand)]
        op: DendroOp,
    },
    /// Erosion distance between two barcodes.
    Erosion { a: String, b: String },
    /// Bottleneck distance between two barcodes.
    Bottleneck { a: String, b: String },
    /// Degree-zero barcode of a real-line filtration.
    H0 { filtration: String },
    /// Tripod distance between two filtrations.
    Tripod {
        #[arg(long, value_enum, default_value_t = Indexing::R)]
        indexing: Indexing,
        #[arg(long)]
        max_size: Option<usize>,
        a: String,
        b: String,
    },
    /// Two-parameter hierarchical clusterings on grids.
    Clustering {
        #[command(subcommand)]
        op: ClusteringOp,
    },
    /// Staircases over the interval poset or the plane.
    Staircase {
        #[command(subcommand)]
        op: StaircaseOp,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Indexing {
    R,
    Int,
}

#[derive(Subcommand)]
enum LatticeOp {
    Join { a: String, b: String },
    Meet { a: String, b: String },
    Refines { a: String, b: String },
    /// Join-irreducible parts.
    Parts { a: String },
    /// Minimal join representations by irreducible elements.
    MinReps {
        #[arg(long)]
        max_size: Option<usize>,
        a: String,
    },
}

#[derive(Subcommand)]
enum FormigramOp {
    Validate { a: String },
    Smooth {
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
        a: String,
    },
    /// The cosheaf code: one staircase per pair of points.
    Code { a: String },
    /// Interleaving distance over a common ground set.
    Df { a: String, b: String },
    /// Gromov-Hausdorff distance over different ground sets.
    Dgh {
        #[arg(long)]
        max_size: Option<usize>,
        a: String,
        b: String,
    },
}

#[derive(Subcommand)]
enum DendroOp {
    /// Single-linkage dendrogram of a metric.
    Slhc { metric: String },
    /// Ultrametric of a dendrogram.
    Ultrametric { a: String },
    /// Gromov-Hausdorff distance between dendrograms.
    Gh {
        #[arg(long)]
        max_size: Option<usize>,
        a: String,
        b: String,
    },
}

#[derive(Subcommand)]
enum ClusteringOp {
    Di { a: String, b: String },
}

#[derive(Subcommand)]
enum StaircaseOp {
    Hausdorff { a: String, b: String },
    /// Entry profile along the flow lines, for plotting.
    Profile { a: String },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e.kind() {
            ErrorKind::Invalid => 2,
            ErrorKind::Mismatch => 3,
            ErrorKind::Guard => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_json(path: &str) -> Result<Value, Failure> {
    // Stdin is read once, so `-` may stand for both operands.
    static STDIN: OnceLock<std::io::Result<String>> = OnceLock::new();
    let text = if path == "-" {
        match STDIN.get_or_init(|| {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }) {
            Ok(s) => Ok(s.clone()),
            Err(e) => Err(std::io::Error::new(e.kind(), e.to_string())),
        }
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {path}: {e}"),
    })?;
    serde_json::from_str(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{path}: invalid JSON: {e}"),
    })
}

fn load<T>(path: &str, parse: fn(&Value) -> interleave_core::Result<T>) -> Result<T, Failure> {
    let v = read_json(path)?;
    parse(&v).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{path}: {}", f.message);
        f
    })
}

fn guard(flag: Option<usize>, default: usize) -> usize {
    match flag {
        Some(n) if n != default => {
            eprintln!("warning: size guard set to {n} (default {default}); exhaustive search may be slow");
            n
        }
        _ => default,
    }
}

fn distance(d: ExtDist) -> Value {
    io::distance_to_json(&d)
}

fn dendrogram(path: &str) -> Result<Dendrogram, Failure> {
    Ok(Dendrogram::new(load(path, io::formigram_from_json)?)?)
}

fn run(cmd: Command) -> Result<Value, Failure> {
    Ok(match cmd {
        Command::Lattice { op } => match op {
            LatticeOp::Join { a, b } => {
                let (p, q) = (load(&a, io::subpartition_from_json)?, load(&b, io::subpartition_from_json)?);
                io::subpartition_to_json(&p.join(&q)?)
            }
            LatticeOp::Meet { a, b } => {
                let (p, q) = (load(&a, io::subpartition_from_json)?, load(&b, io::subpartition_from_json)?);
                io::subpartition_to_json(&p.meet(&q)?)
            }
            LatticeOp::Refines { a, b } => {
                let (p, q) = (load(&a, io::subpartition_from_json)?, load(&b, io::subpartition_from_json)?);
                json!({ "refines": p.refines(&q)? })
            }
            LatticeOp::Parts { a } => {
                let p = load(&a, io::subpartition_from_json)?;
                let parts: Vec<Value> = p.irreducible_parts().iter().map(io::subpartition_to_json).collect();
                json!({ "parts": parts })
            }
            LatticeOp::MinReps { max_size, a } => {
                let p = load(&a, io::subpartition_from_json)?;
                let reps = p.minimal_join_representations(guard(max_size, DEFAULT_MIN_REPS_GUARD))?;
                let reps: Vec<Vec<Value>> = reps
                    .iter()
                    .map(|r| r.iter().map(io::subpartition_to_json).collect())
                    .collect();
                json!({ "representations": reps })
            }
        },
        Command::Formigram { op } => match op {
            FormigramOp::Validate { a } => {
                let f = load(&a, io::formigram_from_json)?;
                if let Err(v) = f.validate() {
                    return Err(Failure {
                        code: 2,
                        message: format!("{a}: not a formigram: {v}"),
                    });
                }
                json!({ "valid": true })
            }
            FormigramOp::Smooth { epsilon, a } => {
                let eps: Rat = epsilon.parse()?;
                io::formigram_to_json(&load(&a, io::formigram_from_json)?.smooth(&eps)?)
            }
            FormigramOp::Code { a } => io::code_to_json(&load(&a, io::formigram_from_json)?.cosheaf_code()),
            FormigramOp::Df { a, b } => {
                let (f, g) = (load(&a, io::formigram_from_json)?, load(&b, io::formigram_from_json)?);
                distance(f.d_f(&g)?)
            }
            FormigramOp::Dgh { max_size, a, b } => {
                let (f, g) = (load(&a, io::formigram_from_json)?, load(&b, io::formigram_from_json)?);
                distance(d_gh_formigrams(&f, &g, guard(max_size, DEFAULT_PAIR_GUARD))?)
            }
        },
        Command::Dendro { op } => match op {
            DendroOp::Slhc { metric } => {
                let d = load(&metric, io::metric_from_json)?.single_linkage()?;
                io::formigram_to_json(d.formigram())
            }
            DendroOp::Ultrametric { a } => io::ultrametric_to_json(&dendrogram(&a)?.ultrametric()),
            DendroOp::Gh { max_size, a, b } => {
                let (f, g) = (dendrogram(&a)?, dendrogram(&b)?);
                distance(d_gh_formigrams(f.formigram(), g.formigram(), guard(max_size, DEFAULT_PAIR_GUARD))?)
            }
        },
        Command::Erosion { a, b } => {
            let (p, q) = (load(&a, io::barcode_from_json)?, load(&b, io::barcode_from_json)?);
            distance(p.erosion(&q))
        }
        Command::Bottleneck { a, b } => {
            let (p, q) = (load(&a, io::barcode_from_json)?, load(&b, io::barcode_from_json)?);
            distance(p.bottleneck(&q))
        }
        Command::H0 { filtration } => {
            io::barcode_to_json(&h0_barcode(&load(&filtration, io::rfiltration_from_json)?)?)
        }
        Command::Tripod { indexing, max_size, a, b } => {
            let limit = guard(max_size, DEFAULT_PAIR_GUARD);
            match indexing {
                Indexing::R => {
                    let (f, g) = (load(&a, io::rfiltration_from_json)?, load(&b, io::rfiltration_from_json)?);
                    f.validate()?;
                    g.validate()?;
                    distance(d_t_r(&f, &g, limit)?)
                }
                Indexing::Int => {
                    let (f, g) = (load(&a, io::intfiltration_from_json)?, load(&b, io::intfiltration_from_json)?);
                    f.validate()?;
                    g.validate()?;
                    distance(d_t_int(&f, &g, limit)?)
                }
            }
        }
        Command::Clustering { op: ClusteringOp::Di { a, b } } => {
            let (f, g) = (load(&a, io::grid_from_json)?, load(&b, io::grid_from_json)?);
            distance(f.d_i(&g)?)
        }
        Command::Staircase { op } => match op {
            StaircaseOp::Hausdorff { a, b } => {
                let (u, v) = (load(&a, io::staircase_from_json)?, load(&b, io::staircase_from_json)?);
                distance(u.hausdorff(&v)?)
            }
            StaircaseOp::Profile { a } => io::profile_to_json(&load(&a, io::staircase_from_json)?.profile()),
        },
    })
}

/// Plain rendering: bare values for single-field results, indented JSON
/// otherwise.
fn render_text(v: &Value) -> String {
    match v {
        Value::Object(m) if m.len() == 1 => match m.values().next() {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Bool(b)) => b.to_string(),
            _ => serde_json::to_string_pretty(v).expect("serializable"),
        },
        _ => serde_json::to_string_pretty(v).expect("serializable"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            match cli.format {
                Format::Json => println!("{v}"),
                Format::Text => println!("{}", render_text(&v)),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
