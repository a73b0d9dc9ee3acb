mod output;
mod variety;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ulrich_core::reproduce::{self, Fault, ReproduceOptions};
use ulrich_core::{
    classify, cohomology, enumerate_ulrich, irr_generic, EnumerateOptions, Error,
    IsotropicGrassmannian, Weight,
};

use output::{Format, Provenance, WeightRecord};

/// Cohomology and Ulrich bundles on isotropic Grassmannians.
///
/// Exit codes: 0 success or Ulrich, 1 not Ulrich or a failed check,
/// 2 parse error, 3 invalid weight, 4 search too large.
#[derive(Parser)]
#[command(name = "ulrich", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads for the enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// `C:n=4:k=2`, `IGr(2,8)`, `LGr(2,4)`, `OGr(3,10)`, `OGr(4,8):minus` or `Q5`.
    variety: String,
    /// Coordinates `a,b/2,...` or fundamental-weight coefficients `w:c1,...,cn`.
    #[arg(long, short, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of the bundle twisted by O(t) for each t in a range.
    Cohomology {
        #[command(flatten)]
        target: Target,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "0..0", allow_hyphen_values = true)]
        twists: String,
    },
    /// The multiset Irr(lambda) with the root behind each value.
    Irr {
        #[command(flatten)]
        target: Target,
    },
    /// Decide whether the bundle is Ulrich.
    IsUlrich {
        #[command(flatten)]
        target: Target,
    },
    /// Closed-form list of irreducible equivariant Ulrich bundles.
    Classify {
        variety: String,
        /// Cross-check against the exhaustive search.
        #[arg(long)]
        verify: bool,
        /// Run the search even beyond the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Exhaustive search for Ulrich weights.
    Enumerate {
        variety: String,
        /// Run the search even beyond the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run the reproduction checks and report pass/fail for each.
    Reproduce {
        /// Only run these check ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = ReproduceOptions::default().seed)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    WrongBDimension,
}

/// Failure carrying a process exit code.
struct Exit(u8);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        eprintln!("error: {e}");
        Exit(match e {
            Error::Parse(_) | Error::InvalidRank { .. } | Error::NodeOutOfRange { .. } => 2,
            Error::LengthMismatch { .. }
            | Error::InvalidWeight(_)
            | Error::NotLDominant(_)
            | Error::NotDominant(_) => 3,
            Error::SearchTooLarge { .. } => 4,
        })
    }
}

fn target(t: &Target) -> Result<(IsotropicGrassmannian, Weight), Exit> {
    let x = variety::parse_variety(&t.variety)?;
    let lambda = variety::parse_weight(&x, &t.weight)?;
    x.require_l_dominant(&lambda)?;
    Ok((x, lambda))
}

fn records(
    x: &IsotropicGrassmannian,
    weights: &[Weight],
    provenance: impl Fn(&Weight) -> Provenance,
) -> Result<Vec<WeightRecord>, Exit> {
    weights
        .iter()
        .map(|w| Ok(WeightRecord::new(x, w, provenance(w))?))
        .collect()
}

fn run(cli: Cli) -> Result<u8, Exit> {
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Exit::from(Error::Parse(format!("thread pool: {e}"))))?;
    }
    match cli.command {
        Command::Cohomology { target: t, twists } => {
            let (x, lambda) = target(&t)?;
            let range = variety::parse_twists(&twists)?;
            let omega = x.omega();
            let mut rows = Vec::new();
            for tw in range {
                let twisted = &lambda + &omega.scaled(tw);
                rows.push((tw, cohomology(&x, &twisted)?));
            }
            output::cohomology(format, &x, &lambda, &rows);
            Ok(0)
        }
        Command::Irr { target: t } => {
            let (x, lambda) = target(&t)?;
            output::irr(format, &x, &lambda, &irr_generic(&x, &lambda)?);
            Ok(0)
        }
        Command::IsUlrich { target: t } => {
            let (x, lambda) = target(&t)?;
            let cert = irr_generic(&x, &lambda)?;
            output::verdict(format, &x, &lambda, &cert);
            Ok(if cert.is_ulrich { 0 } else { 1 })
        }
        Command::Classify {
            variety: v,
            verify,
            force,
        } => {
            let x = variety::parse_variety(&v)?;
            let listed = classify(&x);
            if !verify {
                let recs = records(&x, &listed, |_| Provenance::ClosedForm)?;
                output::weights(format, &x, &recs, None);
                return Ok(0);
            }
            let found = enumerate_ulrich(&x, EnumerateOptions { force })?;
            let mut all = listed.clone();
            all.extend(found.iter().filter(|w| !listed.contains(w)).cloned());
            let all = ulrich_core::classification::canonical_order(all);
            let recs = records(&x, &all, |w| {
                match (listed.contains(w), found.contains(w)) {
                    (true, true) => Provenance::Both,
                    (true, false) => Provenance::ClosedForm,
                    _ => Provenance::Enumerated,
                }
            })?;
            let matched = listed == found;
            output::weights(format, &x, &recs, Some(matched));
            Ok(if matched { 0 } else { 1 })
        }
        Command::Enumerate { variety: v, force } => {
            let x = variety::parse_variety(&v)?;
            let found = enumerate_ulrich(&x, EnumerateOptions { force })?;
            let listed = classify(&x);
            let recs = records(&x, &found, |w| {
                if listed.contains(w) {
                    Provenance::Both
                } else {
                    Provenance::Enumerated
                }
            })?;
            output::weights(format, &x, &recs, None);
            Ok(0)
        }
        Command::Reproduce {
            only,
            seed,
            inject_fault,
        } => {
            let opts = ReproduceOptions {
                seed,
                fault: inject_fault.map(|FaultArg::WrongBDimension| Fault::WrongBDimension),
            };
            let report = reproduce::run(opts, &only);
            output::report(format, &report);
            Ok(if report.passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) | Err(Exit(code)) => ExitCode::from(code),
    }
}
