use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use chevalley_core::constants::{compute_all_positive_with, QuartetFormula};
use chevalley_core::export::{self, Format};
use chevalley_core::quartets::{quartet_report, theorems, QuartetTable};
use chevalley_core::verify::{cross_check_formulas, verify_all};
use chevalley_core::{Diagram, Kind, RootSystem};

#[derive(Debug, Parser)]
#[command(
    name = "chevalley",
    version,
    about = "Chevalley basis structure constants for finite root systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Md => Format::Md,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
struct Common {
    /// Diagram type: A, B, C, D, E, F or G
    #[arg(long, short = 'd')]
    diagram: Kind,
    #[arg(long, short = 'n')]
    rank: usize,
    #[arg(
        long,
        short = 'f',
        value_enum,
        env = "CHEVALLEY_FORMAT",
        default_value = "md"
    )]
    format: OutputFormat,
    /// Write to this file instead of standard output
    #[arg(long, short = 'o')]
    out: Option<PathBuf>,
    /// Largest rank accepted for the classical types A to D
    #[arg(long, default_value_t = 12)]
    max_rank: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Positive roots in regular order with squared lengths
    Roots(Common),
    /// Special and extraspecial pairs with seeded constants
    Pairs(Common),
    /// Quartet table and summary
    Quartets {
        #[command(flatten)]
        common: Common,
        /// Include root coordinates in every row
        #[arg(long)]
        coords: bool,
    },
    /// Structure constants on positive roots (sparse, i < j)
    Constants {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        force_general: bool,
    },
    /// Certify a computed or imported matrix; exits 1 on any failing check
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        force_general: bool,
        /// Matrix file (JSON or CSV, by extension) to verify instead of computing one
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Median fill time, specialized formula against the general one
    Bench {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 20)]
        reps: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Run(String),
}

impl From<chevalley_core::Error> for Failure {
    fn from(e: chevalley_core::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn system(c: &Common) -> Result<RootSystem, Failure> {
    let d = Diagram::new(c.diagram, c.rank).map_err(|e| Failure::Usage(e.to_string()))?;
    let classical = matches!(c.diagram, Kind::A | Kind::B | Kind::C | Kind::D);
    if classical && c.rank > c.max_rank {
        return Err(Failure::Usage(format!(
            "rank {} exceeds --max-rank {}",
            c.rank, c.max_rank
        )));
    }
    Ok(RootSystem::build(d))
}

fn emit(c: &Common, text: &str) -> Result<(), Failure> {
    match &c.out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Run(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn median(mut xs: Vec<u128>) -> u128 {
    xs.sort_unstable();
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2
    }
}

fn time_fill(s: &RootSystem, formula: QuartetFormula, reps: usize) -> Result<Vec<u128>, Failure> {
    (0..reps)
        .map(|_| {
            let t = Instant::now();
            let m = compute_all_positive_with(s, formula)?;
            let ns = t.elapsed().as_nanos();
            std::hint::black_box(m);
            Ok(ns)
        })
        .collect()
}

fn bench(c: &Common, reps: usize) -> Result<(), Failure> {
    if reps == 0 {
        return Err(Failure::Usage("--reps must be positive".into()));
    }
    let s = system(c)?;
    let specialized = QuartetFormula::specialized_for(s.kind());
    let a = compute_all_positive_with(&s, specialized)?;
    let b = compute_all_positive_with(&s, QuartetFormula::General)?;
    if a != b {
        return Err(Failure::Run(format!(
            "{specialized} and general fills disagree on {}",
            s.diagram()
        )));
    }
    // Interleave so drift in machine load hits both paths alike.
    let mut spec_ns = Vec::with_capacity(reps);
    let mut gen_ns = Vec::with_capacity(reps);
    for _ in 0..reps {
        spec_ns.extend(time_fill(&s, specialized, 1)?);
        gen_ns.extend(time_fill(&s, QuartetFormula::General, 1)?);
    }
    let (ms, mg) = (median(spec_ns), median(gen_ns));
    let ratio = ms as f64 / mg.max(1) as f64;
    let text = match Format::from(c.format) {
        Format::Json => format!(
            "{{\n  \"diagram\": \"{}\",\n  \"reps\": {reps},\n  \"specialized\": \"{specialized}\",\n  \"timing\": {{\n    \"specialized_median_ns\": {ms},\n    \"general_median_ns\": {mg},\n    \"ratio\": {ratio:.4}\n  }}\n}}\n",
            s.diagram()
        ),
        Format::Csv => format!(
            "diagram,reps,specialized,specialized_median_ns,general_median_ns,ratio\n{},{reps},{specialized},{ms},{mg},{ratio:.4}\n",
            s.diagram()
        ),
        Format::Md => format!(
            "Fill benchmark for {} over {reps} repetitions\n\n| path | median (ns) |\n|:---|---:|\n| {specialized} | {ms} |\n| general | {mg} |\n\nratio specialized / general: {ratio:.4}\n",
            s.diagram()
        ),
    };
    emit(c, &text)
}

fn verify(c: &Common, force_general: bool, input: Option<&PathBuf>) -> Result<bool, Failure> {
    let s = system(c)?;
    let matrix = match input {
        Some(p) => {
            let text =
                fs::read_to_string(p).map_err(|e| Failure::Run(format!("{}: {e}", p.display())))?;
            let fmt = match p.extension().and_then(|e| e.to_str()) {
                Some("csv") => Format::Csv,
                _ => Format::Json,
            };
            export::import_matrix(&s, &text, fmt)?
        }
        None => compute_all_positive_with(&s, QuartetFormula::for_kind(s.kind(), force_general))?,
    };
    let mut report = verify_all(&s, &matrix);
    if input.is_none() {
        if let Some(suite) = theorems::theorem_suite(&s) {
            report = report.merge(suite?);
        }
        if !matches!(s.kind(), Kind::F | Kind::G) {
            report = report.merge(cross_check_formulas(&s)?);
        }
    }
    emit(c, &export::report(&report, c.format.into())?)?;
    if !report.passed {
        eprintln!("{report}");
    }
    Ok(report.passed)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Roots(c) => {
            let s = system(&c)?;
            emit(&c, &export::roots(&s, c.format.into())?)?;
        }
        Command::Pairs(c) => {
            let s = system(&c)?;
            emit(&c, &export::pairs(&s, c.format.into())?)?;
        }
        Command::Quartets { common: c, coords } => {
            let s = system(&c)?;
            let table = QuartetTable::build(&s);
            let summary = quartet_report(&s);
            emit(
                &c,
                &export::quartets(&s, &table, &summary, coords, c.format.into())?,
            )?;
        }
        Command::Constants {
            common: c,
            force_general,
        } => {
            let s = system(&c)?;
            let m =
                compute_all_positive_with(&s, QuartetFormula::for_kind(s.kind(), force_general))?;
            emit(&c, &export::matrix(&s, &m, c.format.into())?)?;
        }
        Command::Verify {
            common: c,
            force_general,
            input,
        } => {
            return verify(&c, force_general, input.as_ref());
        }
        Command::Bench { common: c, reps } => bench(&c, reps)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
