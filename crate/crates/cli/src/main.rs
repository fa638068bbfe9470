//! `hvector`: command-line front end for the h-vector bound library.

mod reproduce;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hvector_core::apolarity::{hilbert_of_form, search_form, Form, DEFAULT_PRIME};
use hvector_core::binomial::{expand, ShiftSpec};
use hvector_core::bounds::{
    gorenstein_necessary, lower_bound, table_csv, unimodality_table, Feasibility,
};
use hvector_core::constructions::{
    asymptotic_csv, asymptotic_table, geometric_samples, lemma11_decompose, lift_hvector,
    linear_samples, trivial_extension, upper_bound_h2,
};
use hvector_core::{Error, HVector};

#[derive(Parser)]
#[command(
    name = "hvector",
    version,
    about = "Bounds and certificates for the degree-two entry of Gorenstein h-vectors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the i-binomial expansion of n
    Expand { n: u64, i: u32 },
    /// Evaluate the shifted sum (n_(i))_a^b
    #[command(allow_negative_numbers = true)]
    Shift { n: u64, i: u32, a: i64, b: i64 },
    /// Lower bound on h_2 for codimension r and socle degree e >= 4
    Lower { r: u64, e: u32 },
    /// Constructive upper bound on h_2 for socle degree 4, r >= 4
    Upper { r: u64 },
    /// Write r >= 4 as m + C(m+1,3) + C(a+1,2) + b
    Decompose { r: u64 },
    /// CSV table of lower bounds for r = 2..=rmax
    Table {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        rmax: u64,
    },
    /// Trivial extension of a level h-vector, e.g. 1,3,6,10
    Trivialext { h: HVector },
    /// Add one to every interior entry of a symmetric h-vector
    Lift { h: HVector },
    /// Necessary-condition filter for a symmetric h-vector.
    ///
    /// Searches decompositions h = b + c along a linear form, recursing on
    /// b up to --max-depth levels (default: the socle degree). The search
    /// is exponential in the socle degree for large entries.
    Feasible {
        h: HVector,
        #[arg(long)]
        max_depth: Option<u32>,
    },
    /// CSV comparison of both bounds against (6r)^(2/3)
    Asymptotics(AsymptoticsArgs),
    /// Apolar algebras of explicit forms
    #[command(subcommand)]
    Apolar(ApolarCommand),
    /// Re-check every reference value and print PASS/FAIL lines
    Reproduce,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("sweep").required(true).args(["step", "geometric"])))]
struct AsymptoticsArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(4..))]
    rmin: u64,
    #[arg(long)]
    rmax: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    step: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    geometric: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ApolarCommand {
    /// h-vector of R/Ann(F) for the form in FILE
    Hilbert {
        #[arg(long)]
        form: PathBuf,
    },
    /// Randomized search for a form realizing a target h-vector
    Search {
        #[arg(long)]
        target: HVector,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, env = "HVECTOR_PRIME", default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the witness form here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) => Failure::Compute(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Compute(format!("cannot write {}: {e}", path.display()))),
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Expand { n, i } => println!("{}", expand(n, i)?),
        Command::Shift { n, i, a, b } => {
            let value = expand(n, i)?
                .try_eval_shift(ShiftSpec::new(a, b))
                .ok_or(Error::Overflow("shifted sum"))?;
            println!("{value}");
        }
        Command::Lower { r, e } => {
            let rep = lower_bound(r, e)?;
            println!(
                "lower={} ({}+{})",
                rep.lower, rep.term_first, rep.term_second
            );
        }
        Command::Upper { r } => {
            let up = upper_bound_h2(r)?;
            let t = up.triple;
            println!(
                "upper={} m={} a={} b={} level={} certificate={}",
                up.value, t.m, t.a, t.b, up.level, up.certificate
            );
        }
        Command::Decompose { r } => {
            let t = lemma11_decompose(r)?;
            println!("m={} a={} b={}", t.m, t.a, t.b);
        }
        Command::Table { e, rmax } => emit(None, &table_csv(&unimodality_table(e, rmax)?))?,
        Command::Trivialext { h } => println!("{}", trivial_extension(&h)?),
        Command::Lift { h } => println!("{}", lift_hvector(&h)?),
        Command::Feasible { h, max_depth } => {
            let depth = max_depth.unwrap_or_else(|| h.trimmed().len().saturating_sub(1) as u32);
            match gorenstein_necessary(&h, depth)? {
                Feasibility::Feasible(d) => println!("feasible b={} c={}", d.b, d.c),
                Feasibility::Infeasible => println!("infeasible"),
            }
        }
        Command::Asymptotics(args) => {
            if args.rmax < args.rmin {
                return Err(Failure::Usage(format!(
                    "--rmax {} is below --rmin {}",
                    args.rmax, args.rmin
                )));
            }
            let samples = match (args.step, args.geometric) {
                (Some(step), _) => linear_samples(args.rmin, args.rmax, step),
                (None, Some(factor)) => geometric_samples(args.rmin, args.rmax, factor),
                (None, None) => unreachable!("clap enforces the sweep group"),
            };
            emit(
                args.out.as_ref(),
                &asymptotic_csv(&asymptotic_table(&samples)?),
            )?;
        }
        Command::Apolar(ApolarCommand::Hilbert { form }) => {
            let text = fs::read_to_string(&form)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", form.display())))?;
            println!("{}", hilbert_of_form(&Form::parse(&text)?)?);
        }
        Command::Apolar(ApolarCommand::Search {
            target,
            trials,
            prime,
            seed,
            out,
        }) => {
            let outcome = search_form(&target, trials, prime, seed)?;
            let tried = format!(
                "{} structured and {} random candidates",
                outcome.structured_tried, outcome.random_tried
            );
            match outcome.witness {
                Some(w) => {
                    println!("found {target} via {} after {tried}", w.origin);
                    emit(out.as_ref(), &w.form.to_text())?;
                }
                None => println!("no witness for {target} after {tried}"),
            }
        }
        Command::Reproduce => {
            if !reproduce::run_all(&mut io::stdout())? {
                return Err(Failure::Compute(
                    "reproduce: at least one check failed".into(),
                ));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
