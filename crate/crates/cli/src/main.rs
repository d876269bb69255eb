//! `weakorder`: command-line front end for the weakorder library.
//!
//! Exit codes: 0 on success, 1 when a computation rejects its input, 2 on
//! usage or parse errors.

mod dispatch;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "weakorder", version, about = "Weak order on permutations, total orders and TITOs")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Permutations in one-line notation, e.g. 25143.
    Sn(Command),
    /// Finitary total orders of the integers, written `start:w1,w2,...`.
    Tot(Command),
    /// Translation-invariant total orders in window notation (needs --n).
    Tito(Command),
    /// Extended weak order: TITOs up to reversing blocks of size 1.
    Dyer(Command),
    /// Finite posets read from JSON files.
    Lab(Command),
    /// SVG arc diagrams and Hasse diagrams.
    Render(Command),
}

#[derive(Args, Debug, Clone)]
#[command(allow_negative_numbers = true)]
pub struct Command {
    #[arg(value_enum)]
    pub action: Action,
    pub args: Vec<String>,
    /// Number of residues (TITOs) or size of the symmetric group.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Arc diagram style for wrapped arcs.
    #[arg(long, value_enum, default_value_t = Mode::Line)]
    pub mode: Mode,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Join,
    Meet,
    Arcs,
    Cjr,
    Walls,
    Flip,
    Leq,
    Normalize,
    Quotient,
    Check,
    Enumerate,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Svg,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Line,
    Circle,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out) = match &cli.group {
        Group::Sn(c) => (dispatch::sn(c), &c.out),
        Group::Tot(c) => (dispatch::tot(c), &c.out),
        Group::Tito(c) => (dispatch::tito(c), &c.out),
        Group::Dyer(c) => (dispatch::dyer(c), &c.out),
        Group::Lab(c) => (dispatch::lab(c), &c.out),
        Group::Render(c) => (dispatch::render(c), &c.out),
    };
    match result {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
