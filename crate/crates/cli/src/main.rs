use std::fmt::Display;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fockspace::canonical::{Computation, Report};
use fockspace::charge::{precedes, tau, tau_inv};
use fockspace::format::{
    laurent_latex, parse_charge, parse_multipartition, parse_partition, to_csv, to_json, to_latex,
};
use fockspace::matrix::Entry;
use fockspace::{matrix_a, matrix_delta, matrix_j, Gate, LabeledMatrix, Multicharge, Params};

#[derive(Parser)]
#[command(name = "fockspace", version, about = "Transition matrices of higher-level q-Fock spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The bar-involution matrix A(q)
    Barmatrix(MatrixArgs),
    /// The canonical basis matrix Delta(q)
    Canonical(MatrixArgs),
    /// A Jantzen-type matrix J
    Jantzen {
        #[command(flatten)]
        args: MatrixArgs,
        #[arg(long, value_enum)]
        ordering: Ordering,
    },
    /// Check A'(1)=2J and Delta'(1)=J*Delta(1)
    Verify {
        #[command(flatten)]
        space: Space,
        /// Check every degree from 0 up to --m
        #[arg(long)]
        sweep: bool,
        /// With --sweep, replace --charge by every charge with entries in [-R, R]
        #[arg(long, value_name = "R", requires = "sweep")]
        radius: Option<i64>,
    },
    /// Move between a charged partition and its charged multipartition
    Tau {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long, conflicts_with = "multipartition", required_unless_present = "multipartition")]
        partition: Option<String>,
        #[arg(long)]
        multipartition: Option<String>,
    },
    /// List the multipartitions of a degree in display order
    Order {
        #[command(flatten)]
        space: Space,
        /// Also list every pair a < b
        #[arg(long)]
        relations: bool,
    },
}

#[derive(Args)]
struct Space {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    l: usize,
    #[arg(long, allow_hyphen_values = true)]
    charge: Option<String>,
    #[arg(long)]
    m: usize,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    space: Space,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ordering {
    Prec,
    Dom,
}

enum Outcome {
    Ok,
    Failed,
}

impl Space {
    fn charge(&self) -> Result<Multicharge> {
        let text = self.charge.as_deref().context("--charge is required")?;
        Ok(parse_charge(text)?)
    }

    fn params(&self) -> Result<Params> {
        Ok(Params::new(self.n, self.l, self.charge()?, self.m)?)
    }
}

fn emit<T: Entry + Display>(
    out: &mut impl Write,
    params: &Params,
    m: &LabeledMatrix<T>,
    format: Format,
    latex: impl Fn(&T) -> String,
) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", to_json(params, m))?,
        Format::Csv => write!(out, "{}", to_csv(m))?,
        Format::Latex => {
            writeln!(out, "% {params}; rows and columns keyed as listed on the right")?;
            write!(out, "{}", to_latex(m, latex))?;
        }
    }
    Ok(())
}

fn report_lines(out: &mut impl Write, label: &str, report: &Report) -> Result<()> {
    for v in &report.violations {
        writeln!(out, "  {label}: {v}")?;
    }
    Ok(())
}

fn verify_one(out: &mut impl Write, params: &Params, verbose: bool) -> Result<bool> {
    let comp = Computation::new(params)?;
    let a = comp.verify_a()?;
    let delta = comp.verify_delta()?;
    let status = |r: &Report| if r.passed() { "ok" } else { "FAILED" };
    if verbose {
        writeln!(out, "A'(1)=2J {}; Delta'(1)=J*Delta(1) {}", status(&a), status(&delta))?;
    } else {
        writeln!(
            out,
            "{params}: A'(1)=2J {}; Delta'(1)=J*Delta(1) {}",
            status(&a),
            status(&delta)
        )?;
    }
    report_lines(out, "A", &a)?;
    report_lines(out, "Delta", &delta)?;
    Ok(a.passed() && delta.passed())
}

fn charges_in_box(l: usize, radius: i64) -> Vec<Multicharge> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-radius..=radius).map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Multicharge::new).collect()
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome> {
    match cli.command {
        Command::Barmatrix(args) => {
            let params = args.space.params()?;
            emit(out, &params, &matrix_a(&params)?, args.format, laurent_latex)?;
        }
        Command::Canonical(args) => {
            let params = args.space.params()?;
            let delta = matrix_delta(&matrix_a(&params)?)?;
            emit(out, &params, &delta, args.format, laurent_latex)?;
        }
        Command::Jantzen { args, ordering } => {
            let params = args.space.params()?;
            let gate = match ordering {
                Ordering::Prec => Gate::Prec,
                Ordering::Dom => Gate::Dom,
            };
            emit(out, &params, &matrix_j(gate, &params), args.format, i64::to_string)?;
        }
        Command::Verify { space, sweep, radius } => {
            if !sweep {
                let ok = verify_one(out, &space.params()?, true)?;
                return Ok(if ok { Outcome::Ok } else { Outcome::Failed });
            }
            let charges = match radius {
                Some(r) if r >= 0 => charges_in_box(space.l, r),
                Some(r) => bail!("radius must be non-negative, got {r}"),
                None => vec![space.charge()?],
            };
            let mut all = true;
            for charge in charges {
                for m in 0..=space.m {
                    let params = Params::new(space.n, space.l, charge.clone(), m)?;
                    all &= verify_one(out, &params, false)?;
                }
            }
            writeln!(out, "{}", if all { "all ok" } else { "FAILED" })?;
            return Ok(if all { Outcome::Ok } else { Outcome::Failed });
        }
        Command::Tau {
            n,
            l,
            charge,
            partition,
            multipartition,
        } => {
            let mc = parse_charge(&charge)?;
            Params::new(n, l, mc.clone(), 0)?;
            if let Some(text) = partition {
                let lam = parse_partition(&text)?;
                let (mp, found) = tau(&lam, mc.total(), n, l);
                if found != mc {
                    bail!("{text} at charge {} corresponds to multicharge ({found}), not ({mc})", mc.total());
                }
                writeln!(out, "{mp}")?;
            } else if let Some(text) = multipartition {
                let mp = parse_multipartition(&text)?;
                if mp.level() != l {
                    bail!("{text} has {} components, expected {l}", mp.level());
                }
                let (lam, _) = tau_inv(&mp, &mc, n);
                writeln!(out, "{lam}")?;
            }
        }
        Command::Order { space, relations } => {
            let params = space.params()?;
            let order = params.basis();
            for (i, mp) in order.iter().enumerate() {
                let (lam, _) = tau_inv(mp, &params.charge, params.n);
                writeln!(out, "{i}\t{mp}\t{lam}")?;
            }
            if relations {
                for a in &order {
                    for b in &order {
                        if precedes(a, b, &params.charge, params.n) {
                            writeln!(out, "{a} < {b}")?;
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Outcome::Ok), Ok(())) => ExitCode::SUCCESS,
        (Ok(Outcome::Failed), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
