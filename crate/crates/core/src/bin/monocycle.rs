use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use monocycle::formula::{brute_force_nae, eval_nae, pad_to_width, parse_dimacs};
use monocycle::gadgets::{k4_loop, tree_gadget};
use monocycle::graph::{brute_force_coloring, is_valid_coloring, to_dot, DotOptions};
use monocycle::search::{search_min_gadget_with_progress, Objective, ResumeToken, SearchOptions};
use monocycle::{
    decide_col, predicted_sizes, reduce, reduce_necklace, verify_super_edge, Clause, Coloring, Error, Formula,
    Gadget, Graph, Literal, Variant, VerifyMethod,
};

#[derive(Parser)]
#[command(name = "monocycle", version, about = "2-colorings without monochromatic k-cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the reduction graph of a DIMACS formula.
    Reduce {
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        necklace: bool,
        /// Pad short clauses to width k by repeating their first literal.
        #[arg(long)]
        pad: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide whether a graph has a coloring with no monochromatic k-cycle.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Sat)]
        method: Method,
    },
    /// Check a coloring against a graph.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        k: usize,
    },
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Compare NAE satisfiability with colorability of the reduction graph.
    Roundtrip(RoundtripArgs),
    /// Write a graph in Graphviz DOT format.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Emit a K4 loop (param = length) or a tree gadget (param = k).
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        param: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check existence and forcing for a gadget.
    Verify {
        gadget: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Sat)]
        method: Method,
    },
    /// Search all small graphs for the best gadget.
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Vertices)]
        objective: ObjectiveArg,
        #[arg(long)]
        workers: Option<usize>,
        /// Check every connected candidate, even with vertices on no k-cycle.
        #[arg(long)]
        no_prune: bool,
        #[arg(long, value_name = "SECONDS")]
        time_limit: Option<u64>,
        #[arg(long)]
        max_graphs: Option<u64>,
        #[arg(long)]
        resume: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RoundtripArgs {
    /// DIMACS input; omit with --random.
    cnf: Option<PathBuf>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    necklace: bool,
    /// Check this many random formulas instead of a file.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    vars: u32,
    #[arg(long, default_value_t = 2)]
    clauses: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Sat,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Loop,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Vertices,
    Edges,
}

/// Exit 0 or 1; input errors become exit 2 in `main`.
enum Outcome {
    Yes,
    No,
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(fs::read_to_string(path)?)
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    Ok(fs::write(path, text)?)
}

fn load_graph(path: &Path) -> Result<Graph, Error> {
    Graph::from_json(&read(path)?)
}

fn random_formula(rng: &mut StdRng, vars: u32, clauses: usize, k: usize) -> Formula {
    let clauses = (0..clauses)
        .map(|_| {
            Clause::new(
                (0..k)
                    .map(|_| {
                        let v = rng.gen_range(1..=vars);
                        if rng.gen_bool(0.5) {
                            Literal::neg(v)
                        } else {
                            Literal::pos(v)
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    Formula::new(vars, clauses).expect("literals are in range")
}

fn roundtrip_one(formula: &Formula, k: usize, necklace: bool) -> Result<serde_json::Value, Error> {
    let padded = if formula.max_width() < k { pad_to_width(formula, k)? } else { formula.clone() };
    let nae = brute_force_nae(&padded)?;
    let out = if necklace { reduce_necklace(&padded)? } else { reduce(&padded, k)? };
    let coloring = decide_col(&out.graph, k);
    let extracted = match &coloring {
        Some(c) => eval_nae(&padded, &out.extract_assignment(c))?,
        None => false,
    };
    Ok(serde_json::json!({
        "formula": padded.to_dimacs().trim_end(),
        "nae_satisfiable": nae.is_some(),
        "colorable": coloring.is_some(),
        "extracted_assignment_ok": coloring.is_none() || extracted,
        "agree": nae.is_some() == coloring.is_some() && (coloring.is_none() || extracted),
        "vertices": out.graph.num_vertices(),
        "edges": out.graph.num_edges(),
    }))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Reduce { cnf, k, necklace, pad, out } => {
            let mut formula = parse_dimacs(&read(&cnf)?)?;
            if pad {
                formula = pad_to_width(&formula, k)?;
            }
            let (output, variant) = if necklace {
                if k != 3 {
                    return Err(Error::InvalidArgument("--necklace needs --k 3".into()));
                }
                (reduce_necklace(&formula)?, Variant::Necklace)
            } else {
                (reduce(&formula, k)?, Variant::Basic)
            };
            write(&out, &output.to_json())?;
            let prediction =
                predicted_sizes(k, formula.num_vars as usize, formula.num_clauses(), variant)?;
            print!("{}", prediction.table());
            println!(
                "constructed: {} vertices, {} edges",
                output.graph.num_vertices(),
                output.graph.num_edges()
            );
            Ok(Outcome::Yes)
        }
        Command::Solve { graph, k, method } => {
            let graph = load_graph(&graph)?;
            let coloring = match method {
                Method::Sat => decide_col(&graph, k),
                Method::Brute => brute_force_coloring(&graph, k)?,
            };
            match coloring {
                Some(c) => {
                    println!("{}", c.to_json());
                    Ok(Outcome::Yes)
                }
                None => {
                    eprintln!("no valid coloring for k = {k}");
                    Ok(Outcome::No)
                }
            }
        }
        Command::Check { graph, coloring, k } => {
            let graph = load_graph(&graph)?;
            let coloring = Coloring::from_json(&read(&coloring)?)?;
            if is_valid_coloring(&graph, k, &coloring)? {
                println!("valid");
                Ok(Outcome::Yes)
            } else {
                println!("invalid");
                Ok(Outcome::No)
            }
        }
        Command::Gadget(GadgetCommand::Gen { family, param, out }) => {
            let gadget = match family {
                Family::Loop => k4_loop(param)?,
                Family::Tree => tree_gadget(param)?,
            };
            write(&out, &gadget.to_json())?;
            Ok(Outcome::Yes)
        }
        Command::Gadget(GadgetCommand::Verify { gadget, method }) => {
            let gadget = Gadget::from_json(&read(&gadget)?)?;
            let method = match method {
                Method::Sat => VerifyMethod::Sat,
                Method::Brute => VerifyMethod::Exhaustive,
            };
            let report = verify_super_edge(&gadget, method)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.certified() { Outcome::Yes } else { Outcome::No })
        }
        Command::Gadget(GadgetCommand::Search {
            k,
            max_vertices,
            objective,
            workers,
            no_prune,
            time_limit,
            max_graphs,
            resume,
            out,
        }) => {
            let mut options = SearchOptions::new(k, max_vertices);
            options.objective = match objective {
                ObjectiveArg::Vertices => Objective::Vertices,
                ObjectiveArg::Edges => Objective::Edges,
            };
            options.prune = !no_prune;
            options.workers = workers;
            options.time_limit = time_limit.map(Duration::from_secs);
            options.max_graphs = max_graphs;
            options.resume = resume.map(|t| t.parse::<ResumeToken>()).transpose()?;
            let report = search_min_gadget_with_progress(&options, |p| {
                if p.checked == p.canonical_graphs {
                    eprintln!(
                        "n = {}: {} canonical graphs, {} gadgets",
                        p.vertices, p.canonical_graphs, p.gadgets
                    );
                }
            })?;
            let json = report.to_json();
            match out {
                Some(path) => write(&path, &json)?,
                None => println!("{json}"),
            }
            Ok(if report.winner.is_some() { Outcome::Yes } else { Outcome::No })
        }
        Command::Roundtrip(args) => {
            let formulas = match (&args.cnf, args.random) {
                (Some(path), None) => vec![parse_dimacs(&read(path)?)?],
                (None, Some(count)) => {
                    let mut rng = StdRng::seed_from_u64(args.seed);
                    (0..count).map(|_| random_formula(&mut rng, args.vars, args.clauses, args.k)).collect()
                }
                _ => return Err(Error::InvalidArgument("give either a CNF file or --random".into())),
            };
            let mut all_agree = true;
            for formula in &formulas {
                let line = roundtrip_one(formula, args.k, args.necklace)?;
                all_agree &= line["agree"] == true;
                println!("{line}");
            }
            Ok(if all_agree { Outcome::Yes } else { Outcome::No })
        }
        Command::ExportDot { graph, coloring, out } => {
            let text = read(&graph)?;
            // Gadget files carry a designated pair worth drawing bold.
            let (graph, highlight) = match Gadget::from_json(&text) {
                Ok(g) => (g.graph, Some((g.x, g.y))),
                Err(_) => (Graph::from_json(&text)?, None),
            };
            let coloring = coloring.map(|p| read(&p).and_then(|t| Coloring::from_json(&t))).transpose()?;
            if let Some(c) = &coloring {
                if c.len() != graph.num_vertices() {
                    return Err(Error::PartialColoring { got: c.len(), expected: graph.num_vertices() });
                }
            }
            let options = DotOptions { coloring: coloring.as_ref(), highlight, labels: None };
            write(&out, &to_dot(&graph, &options))?;
            Ok(Outcome::Yes)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
