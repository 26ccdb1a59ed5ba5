use std::process::ExitCode;

use burchnall::cli::{self, exit, Format, Identity, SuiteConfig};
use burchnall::families::{Family, ParamPoint};
use burchnall::Error;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "burchnall",
    version,
    about = "Exact residual checks for Askey-scheme expansion identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded identity cases and write a report.
    Verify {
        /// Family tags to include (default: all).
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        /// Identity ids to include (default: all).
        #[arg(long, value_delimiter = ',')]
        identities: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// Parameter samples per identity and family.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Explicit parameter overriding sampled values, as name=value.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Report path (default: stdout).
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Record wall-clock time per case; the report is then not reproducible.
        #[arg(long)]
        timings: bool,
    },
    /// Print every term of one expansion at explicit parameters.
    Expand {
        identity: String,
        #[arg(long)]
        family: Option<String>,
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(short, long, default_value_t = 1)]
        n: usize,
        #[arg(short, long, default_value_t = 0)]
        m: usize,
        /// Toda scalar for the modified-weight expansions.
        #[arg(long)]
        scalar: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print b_n, c_n of a Toda lattice solution with both residuals.
    Toda {
        family: String,
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Seed for parameters not given explicitly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List families, their parameters and identity ids.
    List,
}

fn usage(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit::USAGE as u8)
}

fn code(pass: bool) -> ExitCode {
    ExitCode::from(if pass { exit::PASS } else { exit::FAILURE } as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            families,
            identities,
            max_n,
            max_m,
            trials,
            seed,
            params,
            output,
            format,
            timings,
        } => {
            let families = match families.iter().map(|f| Family::parse(f)).collect::<Result<Vec<_>, _>>() {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let params = match cli::parse_assignments(&params) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let format = match format {
                OutFormat::Json => Format::Json,
                OutFormat::Markdown => Format::Markdown,
            };
            let cfg = SuiteConfig {
                families,
                identities,
                max_n,
                max_m,
                trials,
                seed,
                params,
                timings,
                format,
            };
            let report = match cli::verify(&cfg) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            let text = report.render();
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(exit::USAGE as u8);
                    }
                    let t = report.totals;
                    eprintln!(
                        "{} cases: {} passed, {} failed, {} errors",
                        t.cases, t.passed, t.failed, t.errors
                    );
                }
                None => print!("{text}"),
            }
            code(report.all_pass())
        }
        Command::Expand {
            identity,
            family,
            params,
            n,
            m,
            scalar,
            json,
        } => {
            let params = match cli::parse_assignments(&params) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            if let Some(f) = family {
                let fam = match Family::parse(&f) {
                    Ok(f) => f,
                    Err(e) => return usage(e),
                };
                let expected = Identity::parse(&identity).map(|i| i.families());
                if let Ok(ex) = expected {
                    if !ex.contains(&fam) {
                        return usage(Error::Parse(format!("{identity} does not belong to {fam}")));
                    }
                }
            }
            match cli::expand(&identity, &params, n, m, scalar.as_deref()) {
                Ok(t) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&t).expect("table serializes"));
                    } else {
                        println!("{t}");
                    }
                    code(t.residual_is_zero())
                }
                Err(e) => usage(e),
            }
        }
        Command::Toda {
            family,
            params,
            max_n,
            seed,
        } => {
            let fam = match Family::parse(&family) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            let params = match cli::parse_assignments(&params) {
                Ok(p) => p,
                Err(e) => return usage(e),
            };
            let mut nu: ParamPoint = fam.sample(&mut ChaCha8Rng::seed_from_u64(seed));
            for (k, v) in params {
                if !fam.param_names().contains(&k.as_str()) {
                    return usage(Error::Parse(format!("{fam} has no parameter `{k}`")));
                }
                match burchnall::algebra::parse_rational(&v) {
                    Ok(r) => nu = nu.with(&k, r),
                    Err(e) => return usage(e),
                }
            }
            match cli::toda_table(&nu, max_n) {
                Ok(rows) => {
                    println!("{fam} at {}", nu.describe());
                    let mut pass = true;
                    for r in rows {
                        pass &= r.residual_b == "0" && r.residual_c == "0";
                        println!(
                            "n={}: b = {}, c = {}, residuals ({}, {})",
                            r.n, r.b, r.c, r.residual_c, r.residual_b
                        );
                    }
                    code(pass)
                }
                Err(e) => usage(e),
            }
        }
        Command::List => {
            println!("families:");
            for f in Family::ALL {
                println!("  {:<20} {}", f.tag(), f.param_names().join(", "));
            }
            println!("identities:");
            for id in Identity::all() {
                let fams = id.families().iter().map(|f| f.tag()).collect::<Vec<_>>().join(", ");
                println!("  {:<32} {} [{}]", id.id(), id.summary(), fams);
            }
            code(true)
        }
    }
}
