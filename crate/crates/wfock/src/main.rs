//! Thin command-line front end; all logic lives in `wfock::cli`.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use wfock::cli::{run, Command, JobConfig, OutputFormat};
use wfock::partition::Partition;
use wfock::screening::{ScreeningSpec, Sign, TParam};

#[derive(Parser)]
#[command(
    name = "wfock",
    about = "Exact Jack symmetric functions and W-algebra singular vectors in Fock modules",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,

    /// Output format
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: OutputFormat,

    /// Jack cache file (defaults to $WFOCK_CACHE when set)
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads for parallel summand evaluation
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Bits of precision for decimal renderings
    #[arg(long, global = true, default_value_t = 128)]
    precision: u32,
}

#[derive(Args)]
struct SpecArgs {
    /// Rank parameter N of the algebra (N >= 3)
    #[arg(long, default_value_t = 3)]
    n: usize,

    /// Comma-separated screening counts r_1,...,r_{N-1}
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    r: Vec<i64>,

    /// Comma-separated rectangle data s_1,...,s_{N-1}
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    s: Vec<i64>,

    /// Jack parameter: a positive rational p/q or "symbolic"
    #[arg(long, default_value = "symbolic")]
    t: String,

    /// Screening family: + or -
    #[arg(long, default_value = "+")]
    sign: String,
}

impl SpecArgs {
    fn build(&self) -> Result<(ScreeningSpec, TParam), String> {
        let sign = match self.sign.as_str() {
            "+" | "plus" => Sign::Plus,
            "-" | "minus" => Sign::Minus,
            other => return Err(format!("bad sign `{other}` (use + or -)")),
        };
        let spec = ScreeningSpec::new(self.n, self.r.clone(), self.s.clone(), sign)
            .map_err(|e| e.to_string())?;
        let t: TParam = self.t.parse().map_err(|e| format!("{e}"))?;
        Ok((spec, t))
    }
}

#[derive(Subcommand)]
enum CliCommand {
    /// Compute a Jack function in the power-sum basis
    Jack {
        /// Partition, e.g. 2,1
        #[arg(long, value_name = "PARTS")]
        partition: String,
        /// Jack parameter for an extra specialized listing
        #[arg(long, default_value = "symbolic")]
        t: String,
    },
    /// Compute a skew Jack function
    Skew {
        #[arg(long, value_name = "PARTS")]
        lambda: String,
        #[arg(long, value_name = "PARTS")]
        mu: String,
    },
    /// Compute the singular vector of a screening spec
    Singular(SpecArgs),
    /// Certify a singular vector by annihilation and eigenvalue checks
    Verify(SpecArgs),
    /// Certify against the brute-force kernel oracle as well
    Oracle(SpecArgs),
    /// Enumerate specs whose target weight vanishes at t = u/v
    Example3 {
        /// The parameter u/v (coprime positive integers)
        #[arg(long)]
        t: String,
        /// How many specs to list
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Run the golden suite and print a summary table
    Selftest,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "text" => Ok(OutputFormat::Text),
        "json" => Ok(OutputFormat::Json),
        "latex" => Ok(OutputFormat::Latex),
        other => Err(format!("unknown format `{other}`")),
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn main() {
    let cli = Cli::parse();
    let mut t = TParam::Symbolic;
    let command = match &cli.command {
        CliCommand::Jack { partition, t: ts } => {
            t = match ts.parse() {
                Ok(v) => v,
                Err(e) => return fail(format!("{e}")),
            };
            match parse_partition(partition) {
                Ok(p) => Command::Jack { partition: p },
                Err(e) => return fail(e),
            }
        }
        CliCommand::Skew { lambda, mu } => {
            match (parse_partition(lambda), parse_partition(mu)) {
                (Ok(lambda), Ok(mu)) => Command::Skew { lambda, mu },
                (Err(e), _) | (_, Err(e)) => return fail(e),
            }
        }
        CliCommand::Singular(args) => match args.build() {
            Ok((spec, tp)) => {
                t = tp;
                Command::Singular { spec }
            }
            Err(e) => return fail(e),
        },
        CliCommand::Verify(args) => match args.build() {
            Ok((spec, tp)) => {
                t = tp;
                Command::Verify { spec }
            }
            Err(e) => return fail(e),
        },
        CliCommand::Oracle(args) => match args.build() {
            Ok((spec, tp)) => {
                t = tp;
                Command::Oracle { spec }
            }
            Err(e) => return fail(e),
        },
        CliCommand::Example3 { t: ts, count } => {
            t = match ts.parse() {
                Ok(v) => v,
                Err(e) => return fail(format!("{e}")),
            };
            Command::Example3 { count: *count }
        }
        CliCommand::Selftest => Command::Selftest,
    };

    let cache = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os("WFOCK_CACHE").map(PathBuf::from));

    let config = JobConfig {
        command,
        t,
        format: cli.format,
        cache,
        jobs: cli.jobs,
        precision: cli.precision,
    };
    let outcome = run(&config);
    println!("{}", outcome.output);
    std::process::exit(outcome.exit_code);
}

fn fail(msg: String) -> () {
    eprintln!("error: {msg}");
    std::process::exit(2);
}
