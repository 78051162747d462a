use std::process::ExitCode;

use affine_critical::cli::{self, Command, RunConfig};
use affine_critical::linkage::Relation;
use affine_critical::{AffineWeight, Error};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "affcrit", version, about = "Critical-level affine weight combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Option<Cmd>,

    /// Run from a saved configuration (the `config_echo` of an earlier run).
    #[arg(long, global = true)]
    config: Option<String>,
}

#[derive(clap::Args, Clone)]
struct Common {
    /// Preset (A1, A2, B2, G2) or a JSON file `{"cartan": [[...]]}`.
    #[arg(long, default_value = "A1")]
    system: String,
    /// Weight as JSON: {"fin": ["p/q", ...], "level": "p/q", "degree": "p/q"}.
    #[arg(long)]
    weight: Option<String>,
    #[arg(long)]
    depth: Option<u32>,
    #[arg(long)]
    radius: Option<i64>,
    /// Write the JSON document here instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand, Clone)]
enum Cmd {
    /// Classify a weight as subgeneric, generic, non-subgeneric or non-critical.
    SubgenericCheck(Common),
    /// Enumerate a linkage class inside a window.
    ClassEnum {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "restricted")]
        relation: String,
    },
    /// The chain of a subgeneric weight.
    ClassChain(Common),
    /// Hom dimensions between indecomposable projectives along the chain.
    HomTable(Common),
    /// Sum-formula terms below a weight.
    JantzenRhs(Common),
    /// Truncated Verma character.
    VermaChar(Common),
    /// The truncated zigzag path algebra and its verification report.
    Zigzag {
        #[command(flatten)]
        common: Common,
        /// Include the multiplication table of basis paths.
        #[arg(long)]
        cayley: bool,
    },
}

fn build_config(cmd: Cmd) -> Result<RunConfig, Error> {
    let (command, common, relation, cayley) = match cmd {
        Cmd::SubgenericCheck(c) => (Command::SubgenericCheck, c, None, false),
        Cmd::ClassEnum { common, relation } => (Command::ClassEnum, common, Some(relation.parse::<Relation>()?), false),
        Cmd::ClassChain(c) => (Command::ClassChain, c, None, false),
        Cmd::HomTable(c) => (Command::HomTable, c, None, false),
        Cmd::JantzenRhs(c) => (Command::JantzenRhs, c, None, false),
        Cmd::VermaChar(c) => (Command::VermaChar, c, None, false),
        Cmd::Zigzag { common, cayley } => (Command::Zigzag, common, None, cayley),
    };
    let weight = common.weight.as_deref().map(AffineWeight::from_json).transpose()?;
    Ok(RunConfig {
        command,
        cartan: cli::resolve_system(&common.system)?,
        system: common.system,
        weight,
        depth: common.depth,
        radius: common.radius,
        relation,
        cayley,
        out: common.out,
    })
}

fn execute(args: Cli) -> Result<(), Error> {
    let config = match (args.config, args.command) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))?;
            RunConfig::from_json(&text)?
        }
        (None, Some(cmd)) => build_config(cmd)?,
        (None, None) => return Err(Error::Parse("no command given; see --help".into())),
    };
    let text = cli::render(&cli::run(&config)?);
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::InvalidArgument(format!("writing {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 3 })
        }
    }
}
