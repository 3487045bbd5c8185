use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use neutrosophic_cli::{format_outcomes, parse_program, run_program, OutputFormat};
use neutrosophic_core::{ConstantMode, EvalConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Complements use {1}
    Classical,
    /// Complements use {1+}
    Literal,
}

/// Evaluate a neutrosophic logic program.
#[derive(Debug, Parser)]
#[command(name = "nlogic", version)]
struct Args {
    /// Program file; standard input when omitted or `-`
    file: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "classical")]
    mode: Mode,

    /// Sample each connective's scalar formula instead of composing set operations
    #[arg(long)]
    correlated: bool,

    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Print the parsed program in canonical form instead of running it
    #[arg(long)]
    emit_program: bool,
}

fn read_input(file: Option<&PathBuf>) -> std::io::Result<String> {
    match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match read_input(args.file.as_ref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("nlogic: {e}");
            return ExitCode::from(1);
        }
    };
    let program = match parse_program(&source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("nlogic: {e}");
            return ExitCode::from(1);
        }
    };
    if args.emit_program {
        print!("{program}");
        return ExitCode::SUCCESS;
    }
    let cfg = EvalConfig {
        constant_mode: match args.mode {
            Mode::Classical => ConstantMode::Classical,
            Mode::Literal => ConstantMode::Literal,
        },
        correlated: args.correlated,
    };
    match run_program(&program, cfg) {
        Ok(outcomes) => {
            print!("{}", format_outcomes(&outcomes, args.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("nlogic: {e}");
            ExitCode::from(2)
        }
    }
}
