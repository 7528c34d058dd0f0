//! Command-line front end: compute invariants of a graph file, generate
//! named families, build reduction instances, and run verification sweeps.
//!
//! Exit codes: 0 success / all records pass, 1 verification failure,
//! 2 usage or input error, 3 capacity exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use genpos::error::{Error, Result};
use genpos::graph::Graph;
use genpos::io::{self, Format};
use genpos::reduction;
use genpos::solvers::{self, InvariantReport, DEFAULT_MONOPHONIC_CAP};
use genpos::verify::{self, Theorem};
use genpos::{bitset::VertexSet, families};

#[derive(Parser)]
#[command(
    name = "genpos",
    version,
    about = "exact solvers for position-type graph invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of a graph read from a file.
    Compute {
        /// gp, gp-, geodetic, mp, mp-, omega, omega-, iuc, ids, lines,
        /// universal-line
        #[arg(long)]
        invariant: String,
        /// input graph file
        #[arg(long = "in")]
        input: PathBuf,
        /// g6 or edges (default: inferred from the file extension)
        #[arg(long)]
        format: Option<String>,
        /// one JSON object per record instead of text
        #[arg(long)]
        json: bool,
        /// order cap for the monophonic solvers (default 16)
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Generate a named graph family instance.
    Generate {
        #[arg(long)]
        family: String,
        /// comma-separated integers, e.g. --params 2,2,1
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        /// write the graph here (format inferred from extension) instead
        /// of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build the decision-problem reduction instance for a graph and k.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        format: Option<String>,
        /// write the reduced graph here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification sweep; exits 1 if any record fails.
    Verify {
        #[arg(long)]
        theorem: String,
        /// override the sweep's default parameter range
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) | Error::Parse { .. } => ExitCode::from(2),
                Error::Capacity(_) => ExitCode::from(3),
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute {
            invariant,
            input,
            format,
            json,
            cap,
        } => compute(&invariant, &input, format.as_deref(), json, cap),
        Command::Generate {
            family,
            params,
            out,
            json,
        } => generate(&family, &params, out.as_deref(), json),
        Command::Reduce {
            input,
            k,
            format,
            out,
            json,
        } => reduce(&input, k, format.as_deref(), out.as_deref(), json),
        Command::Verify {
            theorem,
            max_n,
            json,
        } => run_verify(&theorem, max_n, json),
    }
}

fn parse_format(flag: Option<&str>) -> Result<Option<Format>> {
    flag.map(Format::from_flag).transpose()
}

fn load(input: &Path, format: Option<&str>) -> Result<Graph> {
    let doc = io::read_graph_document(input, parse_format(format)?)?;
    Ok(doc.graph)
}

fn print_report(report: &InvariantReport, json: bool) {
    if json {
        println!("{}", report.to_json());
        return;
    }
    let value = match report.value {
        Some(v) => v.to_string(),
        None => "UNDEFINED".to_string(),
    };
    println!("{} = {}", report.invariant.name(), value);
    let witness: Vec<String> = report.witness.iter().map(|v| v.to_string()).collect();
    println!("witness: [{}]", witness.join(", "));
    println!(
        "explored {} nodes ({})",
        report.nodes_explored,
        report.method.name()
    );
}

/// Same record shape as the set solvers so the JSON stream stays
/// schema-stable across invariants.
fn line_record(invariant: &str, value: usize, witness: VertexSet, pairs: u64) -> serde_json::Value {
    serde_json::json!({
        "invariant": invariant,
        "value": value,
        "witness": witness.iter().collect::<Vec<_>>(),
        "nodes_explored": pairs,
        "method": "pruned",
    })
}

fn compute(
    invariant: &str,
    input: &Path,
    format: Option<&str>,
    json: bool,
    cap: Option<usize>,
) -> Result<ExitCode> {
    let g = load(input, format)?;
    let cap = cap.unwrap_or(DEFAULT_MONOPHONIC_CAP);
    let pair_count = (g.n() * g.n().saturating_sub(1) / 2) as u64;
    match invariant {
        "gp" => print_report(&solvers::gp_number(&g), json),
        "gp-" => print_report(&solvers::lower_gp_number(&g), json),
        "geodetic" => print_report(&solvers::geodetic_number(&g), json),
        "mp" => print_report(&solvers::mp_number(&g, cap)?, json),
        "mp-" => print_report(&solvers::lower_mp_number(&g, cap)?, json),
        "omega" => print_report(&solvers::clique_numbers(&g).0, json),
        "omega-" => print_report(&solvers::clique_numbers(&g).1, json),
        "iuc" => {
            let (upper, lower) = solvers::iuc_numbers(&g);
            print_report(&upper, json);
            print_report(&lower, json);
        }
        "ids" => print_report(&solvers::min_independent_dominating_set(&g), json),
        "lines" => {
            let count = solvers::count_distinct_lines(&g)?;
            if json {
                println!(
                    "{}",
                    line_record("lines", count, VertexSet::empty(g.n()), pair_count)
                );
            } else {
                println!("lines = {count}");
            }
        }
        "universal-line" => {
            let hit = solvers::has_universal_line(&g)?;
            let mut witness = VertexSet::empty(g.n());
            if let Some((u, v)) = hit {
                witness.insert(u);
                witness.insert(v);
            }
            if json {
                println!(
                    "{}",
                    line_record(
                        "universal-line",
                        hit.is_some() as usize,
                        witness,
                        pair_count
                    )
                );
            } else {
                match hit {
                    Some((u, v)) => println!("universal-line = 1 (line of {u} and {v})"),
                    None => println!("universal-line = 0"),
                }
            }
        }
        other => {
            return Err(Error::input(format!(
                "unknown invariant {other:?}; expected one of gp, gp-, geodetic, mp, mp-, omega, omega-, iuc, ids, lines, universal-line"
            )))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_or_print(g: &Graph, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            let text = io::emit(g, Format::infer(path))?;
            fs::write(path, text)
                .map_err(|e| Error::input(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{}", io::emit_edge_list(g));
            Ok(())
        }
    }
}

/// Metadata goes to stdout when the graph goes to a file, to stderr when
/// the graph itself occupies stdout — either way stdout stays parseable.
fn emit_metadata(meta: &str, graph_on_stdout: bool) {
    if graph_on_stdout {
        eprintln!("{meta}");
    } else {
        println!("{meta}");
    }
}

fn generate(family: &str, params: &[usize], out: Option<&Path>, json: bool) -> Result<ExitCode> {
    let generated = families::generate(family, params)?;
    let meta = if json {
        generated.spec.to_json().to_string()
    } else {
        let mut text = format!(
            "{} {:?}: {} vertices, {} edges",
            generated.spec.family,
            generated.spec.params,
            generated.graph.n(),
            generated.graph.m()
        );
        for (inv, value) in &generated.spec.expected {
            match value {
                Some(v) => text.push_str(&format!("\nexpected {} = {v}", inv.name())),
                None => text.push_str(&format!("\nexpected {} = UNDEFINED", inv.name())),
            }
        }
        text
    };
    emit_metadata(&meta, out.is_none());
    write_or_print(&generated.graph, out)?;
    Ok(ExitCode::SUCCESS)
}

fn reduce(
    input: &Path,
    k: usize,
    format: Option<&str>,
    out: Option<&Path>,
    json: bool,
) -> Result<ExitCode> {
    let g = load(input, format)?;
    let instance = reduction::build_lgp_instance(&g, k)?;
    let meta = if json {
        instance.to_json().to_string()
    } else {
        format!(
            "reduced {} vertices, k = {} -> {} vertices, k' = {}",
            instance.source.n(),
            instance.k,
            instance.target.n(),
            instance.k_prime
        )
    };
    emit_metadata(&meta, out.is_none());
    write_or_print(&instance.target, out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(theorem: &str, max_n: Option<usize>, json: bool) -> Result<ExitCode> {
    let theorem = Theorem::from_name(theorem)?;
    let records = verify::run(theorem, max_n)?;
    let mut all_pass = true;
    for record in &records {
        all_pass &= record.pass;
        if json {
            println!("{}", record.to_json());
        } else {
            println!("{}", record.to_line());
        }
    }
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
