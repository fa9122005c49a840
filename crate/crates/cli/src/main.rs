use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use quadtour::commands::{self, CheckWhat, DomWhat, ExportFormat, GenKind, Outcome, SearchMode, Suite};
use quadtour::sweep::with_threads;
use quadtour::CliResult;

#[derive(Parser)]
#[command(name = "quadtour", version, about = "Quadrangular tournaments: generate, check, search, verify")]
struct Cli {
    /// Print the full JSON report instead of the summary.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for search and verify sweeps (0 = all cores).
    #[arg(long, global = true, env = "QL_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a tournament as a matrix file.
    Gen {
        #[command(subcommand)]
        kind: Gen,
        /// Output path; stdout when absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Quadrangularity or combinatorial orthogonality of a matrix file.
    Check {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "quad")]
        what: WhatCheck,
    },
    /// Domination number, domination graph or competition graph.
    Dom {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "number")]
        what: WhatDom,
    },
    /// Search rotational symbols of order n.
    #[command(group(ArgGroup::new("mode").args(["all", "first", "family"])))]
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        first: bool,
        #[arg(long)]
        family: bool,
    },
    /// Cross-check the structural characterizations against the definition.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: WhatSuite,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Verify a single tournament instead of the built-in corpus.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Render a matrix file as DOT or JSON adjacency.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Gen {
    Rotational {
        #[arg(long)]
        n: usize,
        /// Comma-separated members, e.g. 1,3,4,5,9.
        #[arg(long, value_delimiter = ',', required = true)]
        symbol: Vec<usize>,
    },
    Un {
        #[arg(long)]
        n: usize,
    },
    Qr {
        #[arg(long)]
        p: usize,
    },
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
    Augment {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        transmitter: bool,
        #[arg(long)]
        receiver: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatCheck {
    Quad,
    Out,
    In,
    Orth,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatDom {
    Number,
    Graph,
    Competition,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatSuite {
    All,
    Theorems,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Gen { kind, out } => {
            let kind = match kind {
                Gen::Rotational { n, symbol } => GenKind::Rotational { n, symbol },
                Gen::Un { n } => GenKind::Un { n },
                Gen::Qr { p } => GenKind::Qr { p },
                Gen::Random { n, seed } => GenKind::Random { n, seed },
                Gen::Augment { input, transmitter, receiver } => GenKind::Augment {
                    input,
                    transmitter,
                    receiver,
                },
            };
            commands::gen(&kind, out.as_deref())
        }
        Command::Check { input, what } => {
            let what = match what {
                WhatCheck::Quad => CheckWhat::Quad,
                WhatCheck::Out => CheckWhat::Out,
                WhatCheck::In => CheckWhat::In,
                WhatCheck::Orth => CheckWhat::Orth,
            };
            commands::check(&input, what)
        }
        Command::Dom { input, what } => {
            let what = match what {
                WhatDom::Number => DomWhat::Number,
                WhatDom::Graph => DomWhat::Graph,
                WhatDom::Competition => DomWhat::Competition,
            };
            commands::dom(&input, what)
        }
        Command::Search { n, first, family, .. } => {
            let mode = if first {
                SearchMode::First
            } else if family {
                SearchMode::Family
            } else {
                SearchMode::All
            };
            with_threads(cli.threads, || commands::search(n, mode))?
        }
        Command::Verify { suite, n_max, input } => {
            let suite = match suite {
                WhatSuite::All => Suite::All,
                WhatSuite::Theorems => Suite::Theorems,
                WhatSuite::Exhaustive => Suite::Exhaustive,
            };
            with_threads(cli.threads, || commands::verify(suite, n_max, input.as_deref()))?
        }
        Command::Export { input, format } => {
            let format = match format {
                Format::Dot => ExportFormat::Dot,
                Format::Json => ExportFormat::Json,
            };
            commands::export(&input, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(o) => {
            if json {
                print!("{}", o.report.to_json());
            } else if let Some(raw) = &o.raw {
                print!("{raw}");
            } else {
                print!("{}", o.report.to_human());
            }
            ExitCode::from(o.exit)
        }
        Err(e) => {
            eprintln!("quadtour: {e}");
            ExitCode::from(commands::EXIT_USAGE)
        }
    }
}
