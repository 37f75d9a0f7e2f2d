use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use apolar::betti::Format;
use apolar::forms::{Seed, DEFAULT_COEFF_BOUND};
use apolar::harness::{self, IdealSpec, TableSpec, VerificationReport};
use apolar::{MonomialOrder, Polynomial};

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Exact verifications for annihilators of generic and symmetric forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Leading monomials of ann(G) for random G form initial segments in every degree.
    VerifyInitial(InitialArgs),
    /// The explicit basis of ann(H_e) is a minimal Gröbner basis with the predicted initial ideal.
    VerifyGb(GbArgs),
    /// Betti numbers of in(I) for generic forms match those of m^d.
    VerifyBetti(BettiArgs),
    /// x_n is a strong Lefschetz element for the predicted initial ideal.
    VerifyLefschetz(GbArgs),
    /// Minimal generators of ann(H_{2d+1}) in degree d+2 for d = 1..=D.
    ConjectureHOdd(HOddArgs),
    /// in(ann(G)) is contained in in(I) for generic forms of degree floor(e/2)+1.
    ConjectureInclusion(InclusionArgs),
    /// Render a Betti table.
    Table(TableArgs),
}

#[derive(Args)]
struct Common {
    /// Seed for all random forms
    #[arg(long, env = "APOLAR_SEED", default_value_t = 1)]
    seed: u64,
    /// Coefficients are drawn from [-B, B] without 0
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
    coeff_bound: u64,
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Report wall-clock time (otherwise elapsed_ms is 0 and output is reproducible)
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct InitialArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    e: u32,
    #[arg(long, default_value = "degrevlex")]
    order: MonomialOrder,
    #[arg(long, default_value_t = 3)]
    trials: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct GbArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    e: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BettiArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    /// Add a random form of this degree (repeatable)
    #[arg(long = "extra-degree")]
    extra_degrees: Vec<u32>,
    /// Add an explicit form from a polynomial JSON file (repeatable)
    #[arg(long = "extra-form")]
    extra_forms: Vec<PathBuf>,
    #[arg(long)]
    degree_cap: Option<u32>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct HOddArgs {
    #[arg(long)]
    n: usize,
    /// Largest d to probe
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct InclusionArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    e: u32,
    #[arg(long, default_value_t = 3)]
    trials: u32,
    #[arg(long)]
    degree_cap: Option<u32>,
    /// Number of forms of degree floor(e/2)+1 (default dim R_d - dim R_{d-1})
    #[arg(long)]
    forms: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    /// R/m^d
    Power,
    /// R/in(ann(G)) from the predicted generators
    Ann,
    /// R/in(ann(G)) from the closed-form count
    AnnFormula,
    /// R/in(I) for dim R_d - dim R_{d-1} random forms of degree d
    Generic,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    kind: TableKind,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    e: Option<u32>,
    #[arg(long = "extra-degree")]
    extra_degrees: Vec<u32>,
    #[arg(long = "extra-form")]
    extra_forms: Vec<PathBuf>,
    #[arg(long)]
    degree_cap: Option<u32>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
        }
    }
}

fn read_forms(paths: &[PathBuf]) -> Result<Vec<Polynomial>, String> {
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            Polynomial::from_json_str(&text).map_err(|e| format!("{}: {e}", p.display()))
        })
        .collect()
}

fn emit(report: apolar::Result<VerificationReport>, common: &Common) -> Result<ExitCode, String> {
    let mut report = report.map_err(|e| e.to_string())?;
    if !common.timing {
        report.elapsed_ms = 0;
    }
    match common.format {
        OutFormat::Text => print!("{}", report.render_text()),
        OutFormat::Json => print!("{}", report.to_json_string()),
    }
    Ok(ExitCode::from(report.verdict.exit_code() as u8))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::VerifyInitial(a) => {
            let c = &a.common;
            emit(
                harness::cmd_verify_initial(a.n, a.e, a.order, Seed(c.seed), a.trials, c.coeff_bound),
                c,
            )
        }
        Command::VerifyGb(a) => emit(harness::cmd_verify_gb(a.n, a.e), &a.common),
        Command::VerifyBetti(a) => {
            let c = &a.common;
            let forms = read_forms(&a.extra_forms)?;
            emit(
                harness::cmd_verify_betti(
                    a.n,
                    a.d,
                    &a.extra_degrees,
                    &forms,
                    Seed(c.seed),
                    c.coeff_bound,
                    a.degree_cap,
                ),
                c,
            )
        }
        Command::VerifyLefschetz(a) => emit(harness::cmd_verify_lefschetz(a.n, a.e), &a.common),
        Command::ConjectureHOdd(a) => emit(harness::cmd_conjecture_h_odd(a.n, a.d), &a.common),
        Command::ConjectureInclusion(a) => {
            let c = &a.common;
            emit(
                harness::cmd_conjecture_inclusion(
                    a.n,
                    a.e,
                    Seed(c.seed),
                    a.trials,
                    c.coeff_bound,
                    a.degree_cap,
                    a.forms,
                ),
                c,
            )
        }
        Command::Table(a) => {
            let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| format!("--{flag} is required for this table"));
            let spec = match a.kind {
                TableKind::Power => TableSpec::MaximalPower { d: need(a.d, "d")? },
                TableKind::Ann => TableSpec::PredictedAnn { e: need(a.e, "e")? },
                TableKind::AnnFormula => TableSpec::AnnFormula { e: need(a.e, "e")? },
                TableKind::Generic => {
                    let mut ideal = IdealSpec::minimal(a.n, need(a.d, "d")?);
                    ideal.extra_degrees = a.extra_degrees.clone();
                    ideal.extra_forms = read_forms(&a.extra_forms)?;
                    TableSpec::Generic {
                        ideal,
                        seed: Seed(a.common.seed),
                        coeff_bound: a.common.coeff_bound,
                        degree_cap: a.degree_cap,
                    }
                }
            };
            let table = harness::cmd_table(a.n, &spec).map_err(|e| e.to_string())?;
            print!("{}", table.render(a.common.format.into()));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
