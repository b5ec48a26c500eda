//! `triplewise` command-line front end.
//!
//! Exit codes: 0 on success, 1 when an enumeration budget or bound is
//! exceeded, 2 on input or validation errors (also after `--keep-going`
//! recovered from bad lines).

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use triplewise::conditions::Condition;
use triplewise::oi::DECOMPOSITION_BOUND;
use triplewise::oracle::{Mode, DEFAULT_BUDGET};

use commands::TheoremKind;
use report::{JsonReport, Output, SCHEMA};

#[derive(Parser)]
#[command(
    name = "triplewise",
    version,
    about = "Majority-rule transitivity analysis over alternative triples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Ordered,
    Multiset,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Ordered => Mode::Ordered,
            ModeArg::Multiset => Mode::Multiset,
        }
    }
}

#[derive(Args)]
struct ProfileArgs {
    /// Profile file.
    #[arg(long)]
    profile: Option<PathBuf>,
    /// Oriented triple `a,b,c`; every triple when omitted.
    #[arg(long, value_name = "A,B,C")]
    triple: Option<String>,
    /// One summary row per triple instead of full reports.
    #[arg(long)]
    all_triples: bool,
    /// Skip malformed lines, report them, and exit 2 after the analysis.
    #[arg(long)]
    keep_going: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Pairwise counts, margins and the majority relation.
    Aggregate(ProfileArgs),
    /// The eight domain conditions per triple, with witnesses.
    Check(ProfileArgs),
    /// Reduction trace and residual per triple.
    Reduce(ProfileArgs),
    /// Standard form B_{k,l} per triple.
    Classify(ProfileArgs),
    /// Strict cycles and their members per triple.
    Cycles(ProfileArgs),
    /// One-cycle sufficient condition.
    Theorem1(ProfileArgs),
    /// Two antagonistic cycles, extremal restriction on the rest.
    Corollary1(ProfileArgs),
    /// Two antagonistic cycles, Inada conditions on the rest.
    Corollary2(ProfileArgs),
    /// Balanced decomposition into a zero-margin part and an ordinal rest.
    Decompose {
        #[command(flatten)]
        args: ProfileArgs,
        /// Largest voter count searched.
        #[arg(long, default_value_t = DECOMPOSITION_BOUND)]
        bound: usize,
    },
    /// Exhaustive axiom checks over small sets.
    Axioms {
        /// Largest set size (at most 4).
        #[arg(long, default_value_t = 3)]
        bound: usize,
        /// Labels for the triple.
        #[arg(long, value_name = "A,B,C")]
        triple: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Transitivity census over every profile of n voters.
    Census {
        #[arg(long)]
        n: usize,
        /// all, concerned or strict.
        #[arg(long, default_value = "all")]
        types: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Ordered)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Bounded checks of sufficiency or necessity claims.
    Verify {
        /// Condition whose sufficiency is checked.
        #[arg(
            long,
            conflicts_with = "necessity",
            required_unless_present = "necessity"
        )]
        condition: Option<String>,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Orderings over x, y, z separated by `;` for the necessity search.
        #[arg(long)]
        necessity: Option<String>,
        #[arg(long, default_value_t = 2)]
        count_bound: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Ordered)]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Aggregate(_) => "aggregate",
            Command::Check(_) => "check",
            Command::Reduce(_) => "reduce",
            Command::Classify(_) => "classify",
            Command::Cycles(_) => "cycles",
            Command::Theorem1(_) => "theorem1",
            Command::Corollary1(_) => "corollary1",
            Command::Corollary2(_) => "corollary2",
            Command::Decompose { .. } => "decompose",
            Command::Axioms { .. } => "axioms",
            Command::Census { .. } => "census",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Rendered report plus whether input diagnostics were tolerated.
struct Run {
    stdout: String,
    recovered: bool,
}

fn emit(command: &str, triple: Option<[String; 3]>, format: Format, out: Output) -> Result<String> {
    match format {
        Format::Text => Ok(out.text),
        Format::Json => {
            let doc = JsonReport {
                schema: SCHEMA,
                command,
                triple,
                result: out.result,
                witnesses: out.witnesses,
            };
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Csv => bail!("--format csv is only available for census"),
    }
}

fn profile_command(name: &str, args: &ProfileArgs, bound: usize) -> Result<Run> {
    if args.format == Format::Csv {
        bail!("--format csv is only available for census");
    }
    let loaded = input::load(input::profile_path(&args.profile)?, args.keep_going)?;
    for d in &loaded.diagnostics {
        eprintln!("error: {d}");
    }
    let profile = &loaded.profile;
    let alts = profile.alternatives();
    let chosen = match (name, args.triple.as_deref()) {
        ("aggregate", None) => Vec::new(),
        (_, selection) => input::triples(alts, selection)?,
    };
    let triple_names = args.triple.as_ref().map(|_| report::names(alts, chosen[0]));
    let summary = args.all_triples;
    let out = match name {
        "aggregate" => commands::aggregate_cmd(profile, chosen.first().copied())?,
        "check" => commands::check_cmd(profile, &chosen, summary)?,
        "reduce" => commands::reduce_cmd(profile, &chosen, summary)?,
        "classify" => commands::classify_cmd(profile, &chosen)?,
        "cycles" => commands::cycles_cmd(profile, &chosen, summary)?,
        "theorem1" => commands::theorem_cmd(profile, &chosen, TheoremKind::Theorem1, summary)?,
        "corollary1" => commands::theorem_cmd(profile, &chosen, TheoremKind::Corollary1, summary)?,
        "corollary2" => commands::theorem_cmd(profile, &chosen, TheoremKind::Corollary2, summary)?,
        "decompose" => commands::decompose_cmd(profile, &chosen, bound)?,
        other => unreachable!("{other} is not a profile command"),
    };
    Ok(Run {
        stdout: emit(name, triple_names, args.format, out)?,
        recovered: !loaded.diagnostics.is_empty(),
    })
}

fn execute(command: Command) -> Result<Run> {
    let name = command.name();
    let done = |stdout| Run {
        stdout,
        recovered: false,
    };
    match command {
        Command::Aggregate(a)
        | Command::Check(a)
        | Command::Reduce(a)
        | Command::Classify(a)
        | Command::Cycles(a)
        | Command::Theorem1(a)
        | Command::Corollary1(a)
        | Command::Corollary2(a) => profile_command(name, &a, DECOMPOSITION_BOUND),
        Command::Decompose { args, bound } => profile_command(name, &args, bound),
        Command::Axioms {
            bound,
            triple,
            format,
        } => {
            let labels = input::labels(triple.as_deref())?;
            let out = commands::axioms_cmd(&labels, bound)?;
            Ok(done(emit(name, triple.map(|_| labels), format, out)?))
        }
        Command::Census {
            n,
            types,
            mode,
            budget,
            format,
        } => {
            let (out, census) = commands::census_cmd(n, &types, mode.into(), budget)?;
            match format {
                Format::Csv => Ok(done(census.to_csv()?)),
                _ => Ok(done(emit(name, None, format, out)?)),
            }
        }
        Command::Verify {
            condition,
            n_max,
            necessity,
            count_bound,
            mode,
            budget,
            format,
        } => {
            let out = match (condition, necessity) {
                (Some(c), _) => {
                    let Some(condition) = Condition::from_name(&c) else {
                        bail!("unknown condition `{c}`");
                    };
                    commands::verify_condition_cmd(condition, n_max, mode.into(), budget)?
                }
                (None, Some(types)) => commands::verify_necessity_cmd(&types, count_bound, budget)?,
                (None, None) => bail!("verify needs --condition or --necessity"),
            };
            Ok(done(emit(name, None, format, out)?))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let over_budget = err.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<triplewise::Error>(),
            Some(
                triplewise::Error::BudgetExceeded { .. } | triplewise::Error::BoundExceeded { .. }
            )
        )
    });
    if over_budget {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok(run) => {
            print!("{}", run.stdout);
            ExitCode::from(if run.recovered { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
