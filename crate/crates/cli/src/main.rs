//! `deckrec`: decks, recognition and 2-reconstruction from the command line.
//!
//! Graphs travel as graph6 lines and decks in the deck file format, on stdin
//! and stdout. Exit codes: 0 success, 1 usage, 2 parse, 3 unrecognized deck,
//! 4 inconsistent deck, 5 outside the oracle range.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use deckrec::generators;
use deckrec::oracle::{self, GraphClass};
use deckrec::{
    canonical_form, compute_deck, parse_graph6, recognize_deck, reconstruct_from_deck, Category, Deck, Graph,
};

#[derive(Parser)]
#[command(name = "deckrec", version, about = "Graph decks and 2-reconstruction of regular graphs")]
struct Cli {
    /// Worker threads for deck and oracle computations (default: all cores).
    #[arg(long, global = true, value_name = "M")]
    workers: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph as graph6.
    ///
    /// Names: petersen, cycle N, path N, complete N, multipartite A B ...,
    /// hypercube D, rook A B, paley Q, subdivided-star, collision L (two
    /// lines), union G6 G6.
    Generate { name: String, params: Vec<String> },
    /// Print the k-deck of the graph6 graph on stdin.
    Deck {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Recognize the structure behind an (n-2)-deck.
    Recognize {
        #[command(flatten)]
        input: Input,
    },
    /// Rebuild a graph from its (n-2)-deck and verify the result.
    Reconstruct {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive checks over all graphs on at most 7 vertices.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// List the graphs whose deck equals the deck on stdin.
    Preimages {
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Check that every graph in a class has a unique (n-l)-deck.
    Certify {
        #[arg(long, conflicts_with = "wdr")]
        srg: bool,
        #[arg(long)]
        wdr: bool,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        l: usize,
    },
    /// List groups of non-isomorphic graphs sharing a k-deck.
    Collide {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
}

#[derive(Args)]
struct Input {
    /// Read from this file instead of stdin.
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Parse(String),
    Lib(deckrec::Error),
    /// Message already printed; exit with this code.
    Quiet(u8),
}

impl From<deckrec::Error> for Failure {
    fn from(e: deckrec::Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn exit_code(category: Category) -> u8 {
    match category {
        Category::Usage => 1,
        Category::Parse => 2,
        Category::Unrecognized => 3,
        Category::Inconsistent => 4,
        Category::OracleRange => 5,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let code = match failure {
                Failure::Usage(msg) => {
                    eprintln!("error: {msg}");
                    1
                }
                Failure::Parse(msg) => {
                    eprintln!("error: {msg}");
                    2
                }
                Failure::Lib(e) => {
                    eprintln!("error: {e}");
                    exit_code(e.category())
                }
                Failure::Quiet(code) => code,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(Failure::Usage("--workers must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let (payload, status) = match cli.command {
        Command::Generate { name, params } => (generate(&name, &params)?, Ok(())),
        Command::Deck { k, input } => (deck(k, &input)?, Ok(())),
        Command::Recognize { input } => recognize(&input)?,
        Command::Reconstruct { input } => (reconstruct(&input)?, Ok(())),
        Command::Oracle(sub) => (oracle_command(sub)?, Ok(())),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, &payload)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut out = io::stdout().lock();
            let _ = out.write_all(payload.as_bytes()).and_then(|_| out.flush());
        }
    }
    status
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.file {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
        }
        None => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_deck(input: &Input) -> Result<Deck, Failure> {
    Ok(Deck::parse_file(&read_input(input)?)?)
}

fn number(name: &str, raw: &str) -> Result<usize, Failure> {
    raw.parse().map_err(|_| Failure::Usage(format!("{name}: expected a non-negative integer, got {raw:?}")))
}

fn generate(name: &str, params: &[String]) -> Outcome {
    let arity = |want: usize| -> Result<(), Failure> {
        if params.len() == want {
            Ok(())
        } else {
            Err(Failure::Usage(format!("{name} takes {want} parameter(s), got {}", params.len())))
        }
    };
    let nums = || params.iter().map(|p| number(name, p)).collect::<Result<Vec<_>, _>>();
    let graphs: Vec<Graph> = match name {
        "petersen" => {
            arity(0)?;
            vec![generators::petersen()]
        }
        "subdivided-star" => {
            arity(0)?;
            vec![generators::subdivided_star()]
        }
        "cycle" | "path" | "complete" | "hypercube" | "paley" => {
            arity(1)?;
            let x = nums()?[0];
            vec![match name {
                "cycle" => generators::cycle(x),
                "path" => generators::path(x),
                "complete" => generators::complete(x),
                "hypercube" => generators::hypercube(x),
                _ => generators::paley(x),
            }?]
        }
        "rook" => {
            arity(2)?;
            let p = nums()?;
            vec![generators::rook(p[0], p[1])?]
        }
        "multipartite" => vec![generators::complete_multipartite(&nums()?)?],
        "collision" => {
            arity(1)?;
            let (a, b) = generators::collision_pair(nums()?[0])?;
            vec![a, b]
        }
        "union" => {
            arity(2)?;
            let g = parse_graph6(&params[0])?;
            let h = parse_graph6(&params[1])?;
            vec![generators::disjoint_union(&g, &h)?]
        }
        _ => return Err(Failure::Usage(format!("unknown generator {name:?}"))),
    };
    Ok(graphs.iter().map(|g| format!("{g}\n")).collect())
}

fn deck(k: usize, input: &Input) -> Outcome {
    let text = read_input(input)?;
    let line =
        text.lines().find(|l| !l.trim().is_empty()).ok_or_else(|| Failure::Parse("no graph6 line on input".into()))?;
    let g = parse_graph6(line.trim())?;
    Ok(compute_deck(&g, k)?.to_file_string())
}

/// Prints the recognized branch; an unrecognized deck still prints a line.
fn recognize(input: &Input) -> Result<(String, Result<(), Failure>), Failure> {
    let deck = read_deck(input)?;
    match recognize_deck(deck.n(), &deck)? {
        Some(branch) => Ok((format!("{branch}\n"), Ok(()))),
        None => Ok(("unrecognized\n".into(), Err(Failure::Quiet(3)))),
    }
}

fn reconstruct(input: &Input) -> Outcome {
    let deck = read_deck(input)?;
    let (g, report) = reconstruct_from_deck(deck.n(), &deck)?;
    let mut out = format!("{}\nbranch {}\n", canonical_form(&g), report.branch);
    if let Some(code) = &report.card_code {
        let _ = writeln!(out, "card {code}");
    }
    if let Some((a, b)) = report.class_sizes {
        let _ = writeln!(out, "classes {a} {b}");
    }
    let _ = writeln!(out, "verified {}", report.verified);
    Ok(out)
}

fn oracle_command(sub: OracleCommand) -> Outcome {
    let mut out = String::new();
    match sub {
        OracleCommand::Preimages { cap, input } => {
            let deck = read_deck(&input)?;
            let result = oracle::find_deck_preimages(deck.n(), &deck, cap)?;
            let _ = writeln!(out, "deck {:016x}", result.deck_code);
            let _ = writeln!(out, "preimages {}{}", result.preimages.len(), if result.truncated { "+" } else { "" });
            for code in &result.preimages {
                let _ = writeln!(out, "{code}");
            }
        }
        OracleCommand::Certify { srg, wdr, n, l } => {
            let class = match (srg, wdr) {
                (true, _) => GraphClass::Srg,
                (_, true) => GraphClass::Wdr,
                _ => GraphClass::All,
            };
            let certs = oracle::certify(n, l, class)?;
            for c in &certs {
                let pipeline = c.pipeline_agrees.map_or("n/a".to_string(), |b| b.to_string());
                let preimages = if c.preimages > 1 { "2+" } else { "1" };
                let _ = writeln!(
                    out,
                    "{}\tpreimages {preimages}\treconstructible {}\tpipeline {pipeline}",
                    c.code, c.reconstructible
                );
            }
            let ok = certs.iter().filter(|c| c.reconstructible).count();
            let _ = writeln!(out, "{ok} of {} graphs {l}-reconstructible", certs.len());
        }
        OracleCommand::Collide { n, k } => {
            let groups = oracle::find_collisions(n, k)?;
            for group in &groups {
                let line: Vec<&str> = group.iter().map(|c| c.as_str()).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
            let _ = writeln!(out, "{} groups", groups.len());
        }
    }
    Ok(out)
}
