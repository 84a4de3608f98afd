use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use pmcg::run::parse_seed_set;
use pmcg::{parse, render, run, Flags, Format};

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Tsv,
}

/// Runs a twist-factorization program and prints the result.
#[derive(Parser)]
#[command(name = "pmcg", version)]
struct Cli {
    /// Program file, or `-` for standard input.
    source: Option<String>,
    /// Program text given inline instead of a file.
    #[arg(short = 'e', long = "eval", conflicts_with = "source")]
    eval: Option<String>,
    /// Longest half-twist word placing a candidate curve (also the lantern search bound).
    #[arg(long, default_value_t = 2)]
    bound: usize,
    /// Longest half-twist word tried as a global conjugator.
    #[arg(long = "dedupe-bound", default_value_t = 2)]
    dedupe_bound: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Growth iterations for `stretch`.
    #[arg(long, default_value_t = 20)]
    iters: usize,
    /// Seed curve for `stretch`, the convex curve around the set, e.g. "{1,2}".
    #[arg(long = "seed-set")]
    seed_set: Option<String>,
    /// Most search prefixes before giving up with exit code 2.
    #[arg(long, default_value_t = 20_000_000)]
    ceiling: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write the output into this directory as `<command>.<format>`.
    #[arg(long = "out-dir")]
    out_dir: Option<std::path::PathBuf>,
}

fn read_source(cli: &Cli) -> Result<String, String> {
    if let Some(text) = &cli.eval {
        return Ok(text.clone());
    }
    match cli.source.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
            Ok(s)
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let source = match read_source(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("pmcg: {e}");
            return ExitCode::from(1);
        }
    };
    let program = match parse(&source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("pmcg: input error at {e}");
            return ExitCode::from(1);
        }
    };
    let seed_set = match cli.seed_set.as_deref().map(parse_seed_set).transpose() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("pmcg: {e}");
            return ExitCode::from(1);
        }
    };
    let flags = Flags {
        bound: cli.bound,
        dedupe_bound: cli.dedupe_bound,
        threads: cli.threads,
        iters: cli.iters,
        seed_set,
        ceiling: cli.ceiling,
    };
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Tsv => Format::Tsv,
    };
    match run(&program, &flags) {
        Ok(doc) => {
            let text = render(&doc, format);
            eprintln!("pmcg: {} finished in {} ms", program.command, started.elapsed().as_millis());
            if let Some(dir) = &cli.out_dir {
                let ext = if matches!(format, Format::Json) { "json" } else { "tsv" };
                let name = program.command.to_string().replace(['(', ')', ',', ';'], "_");
                let path = dir.join(format!("{name}.{ext}"));
                if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, &text)) {
                    eprintln!("pmcg: writing {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("pmcg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
