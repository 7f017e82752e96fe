use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfring::ring::{parse_ring_spec, DEFAULT_SEED};
use qfring::{BuildOptions, Error, Limits, Module, Presentation, Ring};

mod report;

#[derive(Parser, Debug)]
#[command(
    name = "qfring",
    version,
    about = "Finite commutative rings and their modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest ring order that may be built.
    #[arg(long, global = true, value_name = "N", value_parser = positive)]
    max_ring_size: Option<u64>,

    /// Largest |R|^k a presentation on k generators may expand to.
    #[arg(long, global = true, value_name = "N", value_parser = positive)]
    max_module_size: Option<u64>,

    /// Largest candidate space for homomorphism enumeration.
    #[arg(long, global = true, value_name = "N", value_parser = positive)]
    max_hom: Option<u64>,

    /// Seed for sampled axiom checks on large rings.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
}

fn positive(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be a positive integer".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semisimple, quasi-Frobenius and SG-semisimple verdicts with certificates.
    Classify { spec: String },
    /// The ideal lattice with orders and annihilators.
    Ideals { spec: String },
    /// Orthogonal idempotents and local factors.
    Decompose { spec: String },
    /// Module-level decisions.
    #[command(subcommand)]
    Module(ModuleCommand),
    /// Minimal free resolution of a presented module over a local ring.
    Resolve {
        #[command(flatten)]
        module: ModuleArgs,
        /// Number of free modules P_0..P_{N-1}.
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
    /// Runs the invariant suite over a ring catalog.
    VerifyPaper {
        /// Named catalog.
        #[arg(long, value_enum, default_value_t = CatalogName::Default)]
        catalog: CatalogName,
        /// Restrict the catalog to these rings. Repeatable.
        #[arg(long = "ring", value_name = "SPEC")]
        rings: Vec<String>,
        /// Negate the quasi-Frobenius classifier, to test the harness.
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ModuleCommand {
    /// Decides strong Gorenstein projectivity and prints the witness.
    Sgp(ModuleArgs),
}

#[derive(Args, Debug)]
struct ModuleArgs {
    /// Ring specification.
    #[arg(long)]
    ring: String,
    /// Relation matrix: rows separated by ';', entries by ','.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    rel: String,
    /// Number of generators, needed when there are no relations.
    #[arg(long)]
    gens: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CatalogName {
    /// Base rings plus products of pairs.
    Default,
    /// Base rings only.
    Base,
}

/// Exit codes.
const OK: u8 = 0;
const VIOLATION: u8 = 1;
const PARSE: u8 = 2;
const GUARD: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Validation(_)
        | Error::AxiomViolation(_)
        | Error::NonLocalRing
        | Error::Precondition(_) => PARSE,
        Error::GuardExceeded { .. } => GUARD,
        Error::RingMismatch | Error::Internal(_) => VIOLATION,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { PARSE } else { OK });
        }
    };
    let mut out = std::io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn options(g: &Global) -> BuildOptions {
    let d = Limits::default();
    let cap = |v: Option<u64>, default: usize| {
        v.map_or(default, |n| usize::try_from(n).unwrap_or(usize::MAX))
    };
    BuildOptions {
        limits: Limits {
            max_ring_size: cap(g.max_ring_size, d.max_ring_size),
            max_lattice_size: d.max_lattice_size,
            max_module_tuples: cap(g.max_module_size, d.max_module_tuples),
            max_hom_candidates: g.max_hom.map_or(d.max_hom_candidates, u128::from),
        },
        seed: g.seed.unwrap_or(DEFAULT_SEED),
    }
}

fn ring(text: &str, g: &Global) -> qfring::Result<Ring> {
    Ring::build(&parse_ring_spec(text)?, &options(g))
}

fn module(args: &ModuleArgs, g: &Global) -> qfring::Result<Module> {
    let r = ring(&args.ring, g)?;
    let mut p = Presentation::parse(&r, &args.rel)?;
    if let Some(k) = args.gens {
        if p.relations().is_empty() {
            p = Presentation::free(&r, k);
        } else if p.generators() != k {
            return Err(Error::Precondition(format!(
                "--gens {k} but the matrix has {} rows",
                p.generators()
            )));
        }
    }
    Module::from_presentation(p)
}

fn run(cli: &Cli, out: &mut impl Write) -> qfring::Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Classify { spec } => {
            let rep = qfring::classify(&ring(spec, g)?)?;
            report::emit(out, g.json, &rep, report::classification_text)?;
        }
        Command::Ideals { spec } => {
            let rep = report::ideals(&ring(spec, g)?)?;
            report::emit(out, g.json, &rep, report::ideals_text)?;
        }
        Command::Decompose { spec } => {
            let rep = report::decomposition(&ring(spec, g)?)?;
            report::emit(out, g.json, &rep, report::decomposition_text)?;
        }
        Command::Module(ModuleCommand::Sgp(args)) => {
            let m = module(args, g)?;
            let rep = report::sgp(&m)?;
            report::emit(out, g.json, &rep, report::sgp_text)?;
        }
        Command::Resolve {
            module: args,
            length,
        } => {
            let m = module(args, g)?;
            let rep = report::resolution(&m, *length)?;
            report::emit(out, g.json, &rep, report::resolution_text)?;
        }
        Command::VerifyPaper {
            catalog,
            rings,
            inject_fault,
        } => {
            let fault = inject_fault.then_some(qfring::verify::Fault::NegateQuasiFrobenius);
            let rep = if !rings.is_empty() {
                let specs = rings
                    .iter()
                    .map(|s| parse_ring_spec(s))
                    .collect::<qfring::Result<Vec<_>>>()?;
                qfring::verify::verify_catalog(&specs, fault)?
            } else if *catalog == CatalogName::Base {
                qfring::verify::verify_catalog(&qfring::catalog::base_specs(), fault)?
            } else {
                qfring::verify::verify_default(fault)?
            };
            let passed = rep.all_passed();
            report::emit(out, g.json, &report::verify(rep), report::verify_text)?;
            return Ok(if passed { OK } else { VIOLATION });
        }
    }
    Ok(OK)
}
