//! `jacres`: batch driver for the jacres-core library.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use jacres_core::{Error, Limits};

#[derive(Parser, Debug)]
#[command(name = "jacres", version, about = "Jacobians, residues and integral closure orders of local complete intersections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// System file (`ring:`, `f:` and optional `coeff:` lines).
    pub file: PathBuf,
    /// Emit a single JSON object instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quotient dimension and containment index.
    Dim(Common),
    /// Ideal membership of `--poly` with a certificate.
    Member {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
    /// Whether the Jacobian lies in the ideal, and socle generation.
    Jactest(Common),
    /// Socle of the quotient algebra.
    Socle(Common),
    /// Trace residue of `--poly` (default 1), or the residue against
    /// powers `f^m` with `--powers`.
    Residue {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_delimiter = ',')]
        powers: Option<Vec<u32>>,
    },
    /// Residue pairing from the Bezoutian and its non-degeneracy.
    Pairing(Common),
    /// Asymptotic Samuel function of `--poly` (default: the Jacobian).
    Samuel {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        arcs: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        mcap: u32,
    },
    /// Orders along arcs and the Cramer identity.
    Arcs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        arcs: PathBuf,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Łojasiewicz lower bound for the Jacobian.
    Loja {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        arcs: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        mcap: u32,
    },
    /// Hessian criterion for a single hypersurface `f`.
    Hessian(Common),
    /// Membership, trace and theorem probes over a coefficient ring.
    Relative {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: Option<String>,
        /// Radical witness; may be repeated.
        #[arg(long)]
        witness: Vec<String>,
        /// Truncation `(u)^N` for polynomial coefficient rings.
        #[arg(long)]
        precision: Option<u32>,
    },
}

pub struct Output {
    pub text: String,
    pub json: String,
}

fn limits() -> Result<Limits, Error> {
    let mut l = Limits::default();
    if let Ok(v) = std::env::var("JACRES_MAX_STEPS") {
        let steps = v
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidInput(format!("JACRES_MAX_STEPS must be a nonnegative integer, got `{v}`")))?;
        l = l.with_max_steps(steps);
    }
    Ok(l)
}

fn run(cmd: Command) -> Result<(Output, bool), Error> {
    let l = limits()?;
    use commands as c;
    Ok(match cmd {
        Command::Dim(co) => (c::dim(&co, &l)?, co.json),
        Command::Member { common, poly } => (c::member(&common, &poly, &l)?, common.json),
        Command::Jactest(co) => (c::jactest(&co, &l)?, co.json),
        Command::Socle(co) => (c::socle(&co, &l)?, co.json),
        Command::Residue { common, poly, powers } => {
            (c::residue(&common, poly.as_deref(), powers.as_deref(), &l)?, common.json)
        }
        Command::Pairing(co) => (c::pairing(&co, &l)?, co.json),
        Command::Samuel {
            common,
            poly,
            arcs,
            mcap,
        } => (c::samuel(&common, poly.as_deref(), arcs.as_deref(), mcap, &l)?, common.json),
        Command::Arcs { common, arcs, poly } => (c::arcs(&common, &arcs, poly.as_deref(), &l)?, common.json),
        Command::Loja { common, arcs, mcap } => (c::loja(&common, arcs.as_deref(), mcap, &l)?, common.json),
        Command::Hessian(co) => (c::hessian(&co, &l)?, co.json),
        Command::Relative {
            common,
            poly,
            witness,
            precision,
        } => (c::relative(&common, poly.as_deref(), &witness, precision, &l)?, common.json),
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconclusive(_) => 2,
        Error::Violation(_) => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok((out, json)) => {
            let mut body = if json { out.json } else { out.text };
            body.push('\n');
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("jacres: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
