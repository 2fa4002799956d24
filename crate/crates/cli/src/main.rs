use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use p5free_cli::commands::{self, Mode, Outcome, Print, Status};
use p5free_cli::{parse_graphs, Format};
use p5free_core::generate::Kind;

/// Recognize graphs with no induced P5 and no induced complement of P5,
/// with decomposition-tree certificates.
#[derive(Parser)]
#[command(name = "p5free", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print certificate documents (JSON, one per line) instead of summaries.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; report through the exit status only.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when absent or `-`.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Input format: graph6 (one graph per line) or edgelist.
    #[arg(long, default_value = "graph6")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership; certificate is a decomposition tree or a witness.
    Recognize(Input),
    /// Check a certificate document against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Certificate document (JSON).
        #[arg(long)]
        cert: PathBuf,
    },
    /// Emit a random member built from the composition operations.
    Generate {
        /// split, pentagon-sub, unified or mixed.
        #[arg(long, default_value = "mixed")]
        kind: Kind,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output format of the graph.
        #[arg(long, default_value = "graph6")]
        format: Format,
        /// Write the graph here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also write the certificate document here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check every labeled graph on up to N vertices.
    Enumerate {
        /// Largest vertex count (at most 7).
        #[arg(long)]
        n: usize,
        /// agree: recognition and split recognition against brute force;
        /// count: number of members for each vertex count.
        #[arg(long, default_value = "agree")]
        mode: Mode,
    },
    /// Print a split divide of a prime graph with no induced P5, co-P5, C5.
    Divide(Input),
    /// Print the X/Y structure partition of such a graph containing a co-C4.
    Structure(Input),
}

fn read_input(input: &Input) -> anyhow::Result<Vec<p5free_core::Graph>> {
    let bytes = match &input.input {
        Some(p) if p.as_os_str() != "-" => std::fs::read(p).with_context(|| format!("reading {}", p.display()))?,
        _ => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).context("reading standard input")?;
            buf
        }
    };
    let what = input.input.as_ref().map_or("standard input".to_string(), |p| p.display().to_string());
    parse_graphs(&bytes, input.format).with_context(|| format!("parsing {what}"))
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let print = Print { json: cli.json, quiet: cli.quiet };
    Ok(match cli.command {
        Command::Recognize(input) => commands::recognize(&read_input(&input)?, print),
        Command::Verify { input, cert } => {
            let graphs = read_input(&input)?;
            let text = std::fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            commands::verify(&graphs, &text, print)
        }
        Command::Generate { kind, n, seed, format, output, cert } => {
            let (mut out, doc) = commands::generate(kind, n, seed, format, print);
            if out.status == Status::Yes {
                if let Some(path) = cert {
                    std::fs::write(&path, doc.to_json() + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                }
                if let Some(path) = output {
                    let text =
                        p5free_cli::write_graph(&p5free_core::graph6::decode(doc.graph6.as_deref().unwrap())?, format);
                    std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                    if !print.json {
                        out.stdout.clear();
                    }
                }
            }
            out
        }
        Command::Enumerate { n, mode } => commands::enumerate(n, mode, print),
        Command::Divide(input) => commands::divide(&read_input(&input)?, print),
        Command::Structure(input) => commands::structure(&read_input(&input)?, print),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(cli).unwrap_or_else(|e| Outcome::usage(format!("error: {e:#}")));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.status as u8)
}
