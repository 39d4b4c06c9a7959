use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use branchdual::job::{self, Command, JobOptions, JobSpec, Report};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "branchdual",
    version,
    about = "Invariants and inverse systems of curve branches in k[[t]]"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Generators, comma separated, e.g. "t^3+t^4, t^5"
    #[arg(long)]
    gens: Option<String>,
    /// Operators in u, semicolon separated, e.g. "u^3 - 1/20 u^5; u"
    #[arg(long)]
    v: Option<String>,
    /// Reparametrization for transport, e.g. "t + t^2"
    #[arg(long)]
    h: Option<String>,
    /// Characteristic "e0;b1,b2,..."
    #[arg(long = "char")]
    characteristic: Option<String>,
    /// Truncation size for transport without generators
    #[arg(long)]
    conductor: Option<usize>,
    /// Working-precision ceiling
    #[arg(long)]
    trunc: Option<usize>,
    /// Emit the JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// delta, conductor, e0, e1, mu, Hilbert function
    Analyze(Common),
    /// Reduced basis of the inverse system
    InverseSystem(Common),
    /// Algebra-forming test for --v
    CheckAf(Common),
    /// Ann(V) inside the algebra
    Annihilate(Common),
    /// Standard filtration with cutting derivations
    Filtration(Common),
    /// Derivation space, or derivation tests for --v
    Derivations(Common),
    /// Gorenstein criteria of the value semigroup
    Gorenstein(Common),
    /// Numerical semigroup data
    Semigroup(Common),
    /// Saturation from a characteristic
    Saturation(Common),
    /// Transport an inverse system along t -> h
    Transport(Common),
    /// Multiplicities and e1 along the resolution
    BlowupChain(Common),
    /// Laurent representatives of the canonical module
    Canonical(Common),
    /// Check the duality round trip
    Verify(Common),
    /// Run a JSON job file (one job or an array)
    Job {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every golden case in a directory
    Golden { dir: PathBuf },
}

fn spec(command: Command, c: &Common) -> JobSpec {
    JobSpec {
        command,
        generators: c.gens.iter().cloned().collect(),
        options: JobOptions {
            trunc: c.trunc,
            v: c.v.iter().cloned().collect(),
            h: c.h.clone(),
            characteristic: c.characteristic.clone(),
            conductor: c.conductor,
        },
    }
}

fn emit(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json_string());
    } else {
        print!("{}", report.to_text());
    }
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(u8::try_from(c).unwrap_or(1))
}

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    let (command, common) = match &cli.command {
        Cmd::Analyze(c) => (Command::Analyze, c),
        Cmd::InverseSystem(c) => (Command::InverseSystem, c),
        Cmd::CheckAf(c) => (Command::CheckAf, c),
        Cmd::Annihilate(c) => (Command::Annihilate, c),
        Cmd::Filtration(c) => (Command::Filtration, c),
        Cmd::Derivations(c) => (Command::Derivations, c),
        Cmd::Gorenstein(c) => (Command::Gorenstein, c),
        Cmd::Semigroup(c) => (Command::Semigroup, c),
        Cmd::Saturation(c) => (Command::Saturation, c),
        Cmd::Transport(c) => (Command::Transport, c),
        Cmd::BlowupChain(c) => (Command::BlowupChain, c),
        Cmd::Canonical(c) => (Command::Canonical, c),
        Cmd::Verify(c) => (Command::Verify, c),
        Cmd::Job { file, json } => {
            let text = std::fs::read_to_string(file)
                .with_context(|| format!("reading {}", file.display()))?;
            let jobs = match job::parse_jobs(&text) {
                Ok(jobs) => jobs,
                Err(e) => {
                    emit(&job::error_report("job", &e), *json);
                    return Ok(code(job::exit_code(&e)));
                }
            };
            let reports: Vec<Report> = jobs.iter().map(job::run).collect();
            if *json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    print!("{}", r.to_text());
                }
            }
            let worst = reports
                .iter()
                .map(|r| r.exit_code)
                .find(|&c| c != 0)
                .unwrap_or(0);
            return Ok(code(worst));
        }
        Cmd::Golden { dir } => {
            let outcomes =
                job::run_golden(dir).with_context(|| format!("golden corpus {}", dir.display()))?;
            let mut failed = 0;
            for o in &outcomes {
                println!(
                    "{} {}:{}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.file,
                    o.name
                );
                if let Some(d) = &o.detail {
                    println!("    {d}");
                }
                failed += usize::from(!o.passed);
            }
            println!("{} passed, {} failed", outcomes.len() - failed, failed);
            return Ok(code(i32::from(failed > 0)));
        }
    };
    let report = job::run(&spec(command, common));
    emit(&report, common.json);
    Ok(code(report.exit_code))
}
