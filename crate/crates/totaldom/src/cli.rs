//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 guard exceeded,
//! 3 audit completed but found discrepancies (or a conjecture violation).

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::audit;
use crate::error::Error;
use crate::families::{self, Family, FamilySpec, Fidelity};
use crate::graph::{self, Graph};
use crate::oracle;
use crate::poly::Polynomial;
use crate::reduction;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser)]
#[command(name = "totaldom", version, about = "Total domination polynomials: enumeration, reduction, family formulas, audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file ("n m" header, one "u v" line per edge, '#' comments)
    #[arg(long, conflicts_with_all = ["family", "n", "q"])]
    input: Option<PathBuf>,
    /// Family name: barbell, h3, f, t-chain, g-chain, q-chain, q1, q2,
    /// qprime, qdelta, q-plus-e, o-chain, o1, o2, odelta
    #[arg(long, requires = "n")]
    family: Option<String>,
    /// Family index n
    #[arg(long)]
    n: Option<usize>,
    /// Cycle length for the friendship family `f`
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Reduction,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FidelityArg {
    Printed,
    Derived,
}

impl From<FidelityArg> for Fidelity {
    fn from(f: FidelityArg) -> Self {
        match f {
            FidelityArg::Printed => Fidelity::Printed,
            FidelityArg::Derived => Fidelity::Derived,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FidelityFilter {
    Both,
    Printed,
    Derived,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a generated family instance
    Gen {
        #[command(flatten)]
        input: InputArgs,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the total domination polynomial
    Dt {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
        /// Formula fidelity (method=formula only)
        #[arg(long, value_enum, default_value = "derived")]
        fidelity: FidelityArg,
        /// Print the reduction trace (method=reduction only)
        #[arg(long)]
        trace: bool,
        /// Oracle order guard
        #[arg(long, default_value_t = oracle::DEFAULT_ORDER_GUARD)]
        guard: usize,
    },
    /// Print the total domination number
    Gamma {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = oracle::DEFAULT_ORDER_GUARD)]
        guard: usize,
    },
    /// Integer roots of D_t and the root-membership conjecture verdict
    Roots {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = oracle::DEFAULT_ORDER_GUARD)]
        guard: usize,
    },
    /// Decompose the input as a base graph plus pendant 2-paths
    RecognizeH3 {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Verify the reduction identities on seeded random graphs
    Identities {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Compare a family's formula against enumeration over an n range
    Audit {
        /// Family name
        #[arg(long)]
        family: String,
        /// Cycle length for the friendship family `f`
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "both")]
        fidelity: FidelityFilter,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, default_value_t = oracle::DEFAULT_ORDER_GUARD)]
        guard: usize,
    },
}

fn family_from_name(name: &str, n: usize, q: Option<usize>) -> Result<Family, Error> {
    Ok(match name {
        "barbell" => Family::Barbell,
        "h3" => Family::H3Of(Graph::path(n)),
        "f" => Family::Friendship {
            q: q.ok_or_else(|| Error::InvalidParameter("family f requires --q".into()))?,
        },
        "t-chain" => Family::TriChainT,
        "g-chain" => Family::TriChainG,
        "q-chain" => Family::ParaQ,
        "q1" => Family::ParaQ1,
        "q2" => Family::ParaQ2,
        "qprime" => Family::ParaQPrime,
        "qdelta" => Family::ParaQDelta,
        "q-plus-e" => Family::ParaQPlusE,
        "o-chain" => Family::OrthoO,
        "o1" => Family::OrthoO1,
        "o2" => Family::OrthoO2,
        "odelta" => Family::OrthoODelta,
        other => {
            return Err(Error::InvalidParameter(format!("unknown family: {other}")));
        }
    })
}

enum Input {
    File(Graph),
    Family(FamilySpec, Graph),
}

impl Input {
    fn graph(&self) -> &Graph {
        match self {
            Input::File(g) => g,
            Input::Family(_, g) => g,
        }
    }
}

fn resolve_input(args: &InputArgs, fidelity: Fidelity) -> Result<Input, Error> {
    match (&args.input, &args.family) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)?;
            Ok(Input::File(graph::parse_edge_list(&text)?))
        }
        (None, Some(name)) => {
            let n = args
                .n
                .ok_or_else(|| Error::InvalidParameter("--family requires --n".into()))?;
            let family = family_from_name(name, n, args.q)?;
            let spec = FamilySpec { family, n, fidelity };
            let g = families::generate(&spec)?;
            Ok(Input::Family(spec, g))
        }
        _ => Err(Error::InvalidParameter(
            "provide exactly one of --input FILE or --family NAME --n K".into(),
        )),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::OrderGuardExceeded { .. }
        | Error::ReductionCeilingExceeded { .. }
        | Error::IsomorphismGuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

fn formula_polynomial(spec: &FamilySpec) -> Result<Polynomial, Error> {
    use crate::families::{OrthoWhich, ParaWhich, TriWhich};
    match &spec.family {
        Family::Barbell => families::dt_closed_barbell(spec.n, Fidelity::Printed),
        Family::H3Of(h) => families::dt_closed_h3(h.order()),
        Family::Friendship { q } => {
            if *q != 4 {
                return Err(Error::InvalidParameter(
                    "the friendship recurrence is stated for q = 4".into(),
                ));
            }
            families::dt_recurrence_friendship4(spec.n, spec.fidelity)
        }
        Family::TriChainT => families::dt_recurrence_tri_chain(spec.n, TriWhich::T),
        Family::TriChainG => families::dt_recurrence_tri_chain(spec.n, TriWhich::G),
        Family::ParaQ => families::dt_recurrence_para(spec.n, ParaWhich::Q, spec.fidelity),
        Family::ParaQ1 => families::dt_recurrence_para(spec.n, ParaWhich::Q1, spec.fidelity),
        Family::ParaQ2 => families::dt_recurrence_para(spec.n, ParaWhich::Q2, spec.fidelity),
        Family::ParaQPrime => {
            families::dt_recurrence_para(spec.n, ParaWhich::QPrime, spec.fidelity)
        }
        Family::ParaQDelta => {
            families::dt_recurrence_para(spec.n, ParaWhich::QDelta, spec.fidelity)
        }
        Family::ParaQPlusE => {
            families::dt_recurrence_para(spec.n, ParaWhich::QPlusE, spec.fidelity)
        }
        Family::OrthoO => families::dt_recurrence_ortho(spec.n, OrthoWhich::O),
        Family::OrthoO1 => families::dt_recurrence_ortho(spec.n, OrthoWhich::O1),
        Family::OrthoO2 => families::dt_recurrence_ortho(spec.n, OrthoWhich::O2),
        Family::OrthoODelta => families::dt_recurrence_ortho(spec.n, OrthoWhich::ODelta),
    }
}

fn run_command(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Gen { input, output } => {
            let resolved = resolve_input(&input, Fidelity::Derived)?;
            if matches!(resolved, Input::File(_)) {
                return Err(Error::InvalidParameter(
                    "gen requires --family, not --input".into(),
                ));
            }
            let text = graph::to_edge_list(resolved.graph());
            match output {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Command::Dt {
            input,
            method,
            fidelity,
            trace,
            guard,
        } => {
            let resolved = resolve_input(&input, fidelity.into())?;
            let p = match method {
                Method::Oracle => oracle::dt_polynomial_with_guard(resolved.graph(), guard)?,
                Method::Reduction => {
                    let (p, tr) = reduction::dt_via_reduction(resolved.graph())?;
                    if trace {
                        print!("{}", tr.render());
                    }
                    p
                }
                Method::Formula => match &resolved {
                    Input::Family(spec, _) => formula_polynomial(spec)?,
                    Input::File(_) => {
                        return Err(Error::InvalidParameter(
                            "--method formula requires --family".into(),
                        ));
                    }
                },
            };
            println!("{}", p.dense_string());
            println!("{}", p.human_string());
            Ok(EXIT_OK)
        }
        Command::Gamma { input, guard } => {
            let resolved = resolve_input(&input, Fidelity::Derived)?;
            match oracle::gamma_t_with_guard(resolved.graph(), guard) {
                Ok(g) => {
                    println!("{g}");
                    Ok(EXIT_OK)
                }
                Err(Error::NoTotalDominatingSet) => {
                    println!("no total dominating set");
                    Ok(EXIT_OK)
                }
                Err(e) => Err(e),
            }
        }
        Command::Roots { input, guard } => {
            let resolved = resolve_input(&input, Fidelity::Derived)?;
            let p = oracle::dt_polynomial_with_guard(resolved.graph(), guard)?;
            let roots = p.integer_roots()?;
            let rendered: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            println!("integer roots: {{{}}}", rendered.join(", "));
            let (ok, violators) = families::conjecture_membership(&p)?;
            if ok {
                println!("conjecture: all integer roots within {{-3, -2, -1, 0}}");
                Ok(EXIT_OK)
            } else {
                let bad: Vec<String> = violators.iter().map(|r| r.to_string()).collect();
                println!("conjecture VIOLATED by roots: {{{}}}", bad.join(", "));
                Ok(EXIT_MISMATCH)
            }
        }
        Command::RecognizeH3 { input } => {
            let resolved = resolve_input(&input, Fidelity::Derived)?;
            match families::recognize_h3(resolved.graph()) {
                Some(rec) => {
                    println!("H(3) over base of order {}", rec.base.order());
                    println!("base vertices: {:?}", rec.base_vertices);
                    for p in &rec.pairs {
                        println!("pair: base {} - mid {} - leaf {}", p.base_vertex, p.mid, p.leaf);
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    println!("not H(3)");
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Identities {
            samples,
            max_order,
            seed,
        } => {
            let report = audit::audit_identities(samples, max_order, seed)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            Ok(if report.all_passed { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Audit {
            family,
            q,
            min,
            max,
            fidelity,
            format,
            guard,
        } => {
            let family = family_from_name(&family, max, q)?;
            let mut report = audit::audit_family(&family, min, max, guard)?;
            if fidelity != FidelityFilter::Both {
                let keep = match fidelity {
                    FidelityFilter::Printed => Fidelity::Printed,
                    FidelityFilter::Derived => Fidelity::Derived,
                    FidelityFilter::Both => unreachable!(),
                };
                let records = report
                    .records
                    .into_iter()
                    .filter(|r| r.fidelity.is_none() || r.fidelity == Some(keep))
                    .collect();
                report = audit::AuditReport::from_records(records, guard);
            }
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
                }
                Format::Table => print!("{}", report.render_table()),
            }
            Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
        }
    }
}

/// Parse argv and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
