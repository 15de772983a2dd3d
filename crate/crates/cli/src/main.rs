use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use induced_menger::figures::check_figures;
use induced_menger::gen::{instance_from_system, random_moves};
use induced_menger::io::{parse, to_canonical, GraphDoc, MovesDoc, PathSystemDoc};
use induced_menger::verify::{run_verify, VerifyOptions};
use induced_menger::exit_code;
use induced_menger_core::colouring::{greedy_partition, greedy_strong_colouring, outside_edges};
use induced_menger_core::disjoint::{menger, min_total_length_disjoint_paths, MengerResult};
use induced_menger_core::extract::{extract_nonadjacent, extract_subcubic, select_nonadjacent_minorfree, Extraction};
use induced_menger_core::graph::Vertex;
use induced_menger_core::oracle::{max_disjoint_paths_bruteforce, max_nonadjacent_paths, min_separator_bruteforce, OracleBudget};
use induced_menger_core::pathsys::{decompose, normalize, replay};
use induced_menger_core::search::two_nonadjacent_paths;
use induced_menger_core::{disjoint::max_disjoint_paths, Error, Result};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

const SCHEMAS: &str = "\
JSON formats (vertex ids are 0-based, path numbers in moves are 1-based):
  graph        {\"n\": int, \"edges\": [[u,v],...], \"labels\": {\"id\": name}?, \"X\": [ids]?, \"Y\": [ids]?, \"paths\": [[ids],...]?}
  path system  {\"graph\": <graph>, \"A\": [ids], \"B\": [ids], \"Q\": [[ids] x5]}
  moves        {\"moves\": [{\"pair\": [i,j]} | {\"cycle\": [i,j,...]}, ...]}
  paths        {\"paths\": [[ids],...]}    separator  {\"separator\": [ids]}
  oracle       {\"count\": int, \"witness\": [...]}
Files are read from --input (stdin when absent) and written to --output
(stdout when absent).

Exit codes: 0 success, 1 mathematical negative (separator found, claim
refuted), 2 usage, input or budget error, 3 internal invariant violation.";

#[derive(Parser)]
#[command(name = "induced-menger", version, about = "Pairwise non-adjacent X-Y paths and the five-path state search", after_long_help = SCHEMAS)]
struct Cli {
    /// Input JSON file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output JSON file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for verify-claim.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(long, global = true)]
    budget_vertices: Option<usize>,
    #[arg(long, global = true)]
    budget_paths: Option<usize>,
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Seed for the random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// k disjoint X-Y paths, or a separator of size below k.
    Menger {
        #[arg(short)]
        k: usize,
        /// Minimize the total length of the paths.
        #[arg(long)]
        min_length: bool,
    },
    /// Edge classes that are induced matchings.
    StrongColor {
        /// Colour only the edges between path vertices that are not path edges.
        #[arg(long)]
        outside_only: bool,
    },
    /// k pairwise non-adjacent X-Y paths from the given disjoint paths.
    Extract {
        #[arg(short)]
        k: usize,
        /// Use the at-most-one-outside-edge pipeline (needs 16k paths).
        #[arg(long, conflicts_with = "minorfree")]
        subcubic: bool,
        /// Pick an independent set of paths; H is the excluded clique size.
        #[arg(long, value_name = "H")]
        minorfree: Option<usize>,
    },
    /// Five-path systems and move sequences.
    Pathsys {
        #[command(subcommand)]
        op: PathsysOp,
    },
    /// Run the closure search over state collections and print a certificate.
    VerifyClaim {
        /// Directory for periodic checkpoints.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint directory.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Close under the ten pair moves only.
        #[arg(long)]
        pairs_only: bool,
        /// Keep collections that contain a permuted copy of another.
        #[arg(long)]
        no_trim: bool,
        #[arg(long)]
        max_processed: Option<u64>,
    },
    /// Two non-adjacent X-Y paths from five disjoint ones.
    Solve5,
    /// Exhaustive optimum with a witness.
    Oracle {
        #[arg(long, value_enum)]
        what: What,
    },
    /// Recompute the claimed properties of the figure fixtures.
    CheckFigures,
}

#[derive(Subcommand)]
enum PathsysOp {
    /// Graph with X, Y and five paths to a path system.
    Normalize,
    /// Path system to a move sequence.
    Decompose,
    /// Move sequence to a path system.
    Replay,
    /// A random move sequence, or with --instance a random five-path instance.
    Random {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long)]
        instance: bool,
        #[arg(long, default_value_t = 0)]
        subdivisions: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Nonadjacent,
    Disjoint,
    Separator,
}

struct Output {
    doc: String,
    code: u8,
}

fn ok(v: &Value) -> Output {
    Output { doc: to_canonical(v), code: 0 }
}

fn read_input(cli: &Cli) -> Result<String> {
    let mut text = String::new();
    match &cli.input {
        Some(p) => text = fs::read_to_string(p).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?,
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn budget(cli: &Cli) -> OracleBudget {
    let d = OracleBudget::default();
    OracleBudget {
        max_vertices: cli.budget_vertices.unwrap_or(d.max_vertices),
        max_paths: cli.budget_paths.unwrap_or(d.max_paths),
        max_search_nodes: cli.budget_nodes.unwrap_or(d.max_search_nodes),
    }
}

fn extraction_json(x: &Extraction) -> Value {
    let levels: Vec<Value> = x
        .trace
        .levels
        .iter()
        .map(|l| {
            json!({
                "class": l.class_index,
                "class_size": l.class_size,
                "contracted_vertices": l.contracted_vertices,
                "contracted_edges": l.contracted_edges,
                "flow": l.flow_value,
                "required": l.required,
                "lifted": l.lifted,
            })
        })
        .collect();
    json!({ "paths": x.paths.paths, "trace": levels })
}

fn run(cli: &Cli) -> Result<Output> {
    let graph_doc = || -> Result<GraphDoc> { parse(&read_input(cli)?, "graph JSON") };
    match &cli.cmd {
        Cmd::Menger { k, min_length } => {
            let inst = graph_doc()?.instance()?;
            let res = if *min_length {
                match min_total_length_disjoint_paths(&inst, *k) {
                    Ok(pc) => MengerResult::Paths(pc),
                    Err(Error::NotEnoughPaths { separator, .. }) => MengerResult::Separator(separator),
                    Err(e) => return Err(e),
                }
            } else {
                menger(&inst, *k)?
            };
            Ok(match res {
                MengerResult::Paths(pc) => ok(&json!({ "paths": pc.paths })),
                MengerResult::Separator(s) => Output { doc: to_canonical(&json!({ "separator": s })), code: 1 },
            })
        }
        Cmd::StrongColor { outside_only } => {
            let doc = graph_doc()?;
            let g = doc.graph()?;
            let part = if *outside_only {
                let pc = doc.paths()?;
                pc.validate(&g)?;
                greedy_partition(&g, &outside_edges(&g, &pc))
            } else {
                greedy_strong_colouring(&g)
            };
            let classes: Vec<Vec<[Vertex; 2]>> = part
                .classes
                .iter()
                .map(|c| c.iter().map(|&(u, v)| [u, v]).collect())
                .collect();
            Ok(ok(&json!(classes)))
        }
        Cmd::Extract { k, subcubic, minorfree } => {
            let doc = graph_doc()?;
            let (inst, pc) = (doc.instance()?, doc.paths()?);
            if let Some(h) = minorfree {
                pc.validate_for(&inst)?;
                let sel = select_nonadjacent_minorfree(&inst.graph, &pc, *h)?;
                if !sel.exact {
                    eprintln!("warning: {} paths exceed the exact limit, the selection is greedy", pc.len());
                }
                if sel.paths.len() < *k {
                    return Err(Error::NotEnoughPaths { found: sel.paths.len(), required: *k, separator: Vec::new() });
                }
                return Ok(ok(&json!({ "paths": sel.paths.paths, "exact": sel.exact, "bound": sel.bound })));
            }
            let x = if *subcubic {
                extract_subcubic(&inst, &pc, *k)?.extraction
            } else {
                pc.validate_for(&inst)?;
                let part = greedy_partition(&inst.graph, &outside_edges(&inst.graph, &pc));
                extract_nonadjacent(&inst, &pc, &part, *k)?
            };
            Ok(ok(&extraction_json(&x)))
        }
        Cmd::Pathsys { op } => match op {
            PathsysOp::Normalize => {
                let doc = graph_doc()?;
                let (ps, _) = normalize(&doc.instance()?, &doc.paths()?)?;
                Ok(ok(&serde_json::to_value(PathSystemDoc::from_system(&ps)).unwrap()))
            }
            PathsysOp::Decompose => {
                let doc: PathSystemDoc = parse(&read_input(cli)?, "path system JSON")?;
                let moves = decompose(&doc.system()?)?;
                Ok(ok(&serde_json::to_value(MovesDoc::from_moves(&moves)).unwrap()))
            }
            PathsysOp::Replay => {
                let doc: MovesDoc = parse(&read_input(cli)?, "moves JSON")?;
                let ps = replay(&doc.moves()?)?;
                Ok(ok(&serde_json::to_value(PathSystemDoc::from_system(&ps)).unwrap()))
            }
            PathsysOp::Random { max_len, instance, subdivisions } => {
                let mut rng = StdRng::seed_from_u64(cli.seed);
                let moves = random_moves(&mut rng, *max_len);
                if *instance {
                    let (inst, pc) = instance_from_system(&mut rng, &replay(&moves)?, *subdivisions);
                    Ok(ok(&serde_json::to_value(GraphDoc::from_instance(&inst, Some(&pc))).unwrap()))
                } else {
                    Ok(ok(&serde_json::to_value(MovesDoc::from_moves(&moves)).unwrap()))
                }
            }
        },
        Cmd::VerifyClaim { checkpoint, resume, pairs_only, no_trim, max_processed } => {
            let cert = run_verify(&VerifyOptions {
                threads: cli.threads,
                checkpoint_dir: checkpoint.clone(),
                resume: *resume,
                pairs_only: *pairs_only,
                trim_minimal: !no_trim,
                max_processed: *max_processed,
                ..VerifyOptions::default()
            })?;
            let code = u8::from(cert.empty_collection_reached);
            Ok(Output { doc: to_canonical(&cert), code })
        }
        Cmd::Solve5 => {
            let doc = graph_doc()?;
            let (p1, p2) = two_nonadjacent_paths(&doc.instance()?, &doc.paths()?)?;
            Ok(ok(&json!({ "paths": [p1, p2] })))
        }
        Cmd::Oracle { what } => {
            let inst = graph_doc()?.instance()?;
            let b = budget(cli);
            let v = match what {
                What::Nonadjacent => {
                    let p = max_nonadjacent_paths(&inst, &b)?;
                    json!({ "count": p.count, "witness": p.witness })
                }
                What::Disjoint => {
                    let count = max_disjoint_paths_bruteforce(&inst, &b)?;
                    let witness = max_disjoint_paths(&inst);
                    if witness.len() != count {
                        return Err(Error::Invariant(format!(
                            "exhaustive count {count} differs from the flow value {}",
                            witness.len()
                        )));
                    }
                    json!({ "count": count, "witness": witness.paths })
                }
                What::Separator => {
                    let s = min_separator_bruteforce(&inst, &b)?;
                    json!({ "count": s.len(), "witness": s })
                }
            };
            Ok(ok(&v))
        }
        Cmd::CheckFigures => {
            let checks = check_figures(&budget(cli))?;
            let pass = checks.iter().all(|c| c.pass);
            for c in checks.iter().filter(|c| !c.pass) {
                eprintln!("{}: {} expected {}, observed {}", c.figure, c.property, c.expected, c.observed);
            }
            Ok(Output { doc: to_canonical(&json!({ "pass": pass, "checks": checks })), code: u8::from(!pass) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &out.doc).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{}", out.doc);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
