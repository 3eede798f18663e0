use std::process::ExitCode;

use abc_cli::commands::{self, COMMANDS};
use abc_cli::instance::{parse_documents, parse_rational_list};
use abc_cli::{corpus_run, run_command, CliError, Command, Format, Options};
use clap::{Parser, ValueEnum};
use serde_json::{json, Map};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "abc",
    version,
    about = "Exact checks of valuation-theoretic ABC inequalities for polynomials"
)]
struct Cli {
    /// One of: norm, counting, radical, sqfree, hasse, wronskian, independence,
    /// verify-basic, verify-abc1, verify-abc2, corollaries, corpus-run
    command: String,
    /// Instance document (one instance or an array of them)
    #[arg(long)]
    instance: Option<String>,
    /// Sample radii as comma-separated rationals, e.g. "-1,0,1/2"
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 8)]
    oracle_degree_cap: u32,
    /// Number of instances for corpus-run
    #[arg(long, default_value_t = 24)]
    count: usize,
}

fn usage() -> String {
    let names: Vec<&str> = COMMANDS.iter().map(|(n, _)| *n).collect();
    format!(
        "usage: abc <command> [--instance PATH] [flags]\ncommands: {}",
        names.join(", ")
    )
}

/// Errors beat violations, which beat hypothesis failures.
fn worst(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        0 => 0,
        2 => 1,
        _ => 2,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let cmd: Command = cli.command.parse()?;
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let opts = Options {
        rho: cli.rho.as_deref().map(parse_rational_list).transpose()?,
        ell: cli.ell,
        s: cli.s,
        k: cli.k,
        seed: cli.seed,
        max_n: cli.max_n,
        oracle_degree_cap: cli.oracle_degree_cap,
        count: cli.count,
    };
    let mut header = Map::new();
    if cmd == Command::CorpusRun {
        header.insert("seed".into(), json!(cli.seed));
        header.insert("count".into(), json!(cli.count));
        header.insert("max_n".into(), json!(cli.max_n));
        let (reports, exit) = corpus_run(&opts)?;
        return Ok((commands::render(format, cmd, header, &reports), exit));
    }
    let path = cli
        .instance
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("{} needs --instance", cmd.name())))?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    header.insert("instance".into(), json!(path));
    let mut reports = Vec::new();
    let mut exit = 0;
    for inst in parse_documents(&text)? {
        let out = run_command(cmd, &inst, &opts)?;
        exit = worst(exit, out.exit);
        reports.push(out.body);
    }
    Ok((commands::render(format, cmd, header, &reports), exit))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            if code == 1 {
                eprintln!("{}", usage());
            }
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, exit)) => {
            print!("{out}");
            ExitCode::from(exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Usage(_)) {
                eprintln!("{}", usage());
            }
            ExitCode::from(1)
        }
    }
}
