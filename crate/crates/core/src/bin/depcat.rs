//! `depcat`: generate structure documents, check their laws, and emit reports.
//!
//! Exit status: 0 when every law holds, 1 on a law failure, 2 on bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use depcat::instances::{
    budget_from_env, deserialize, generate, mutate, run_suites, serialize, FamChoice, InstanceSpec, Model, RunReport,
    Suite,
};
use depcat::ring::RingTables;
use depcat::{Error, LawId, Result};

const BUDGET_HELP: &str = "Enumeration budget for intensional topos families: fibres of size up to N. \
Defaults to 2, or to DEPCAT_BUDGET when that is set";

#[derive(Parser)]
#[command(name = "depcat", version, about = "Finite fam-, Sigma- and dependent-arrow structures with exhaustive law checks")]
#[command(after_help = "Exit status: 0 all laws hold, 1 a law fails, 2 input error.\n\
Environment: DEPCAT_BUDGET overrides the default enumeration budget (2).")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a structure document; it is law-checked before it is written.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file; standard output if omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        #[arg(long, global = true, help = BUDGET_HELP)]
        budget: Option<usize>,
    },
    /// Run law suites on a document and print a text report.
    Check {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// Plant a defect aimed at LAW (e.g. s2, cat.assoc) and confirm the check catches it.
        /// Exits 0 if detected, 1 if not, 2 if no such defect can be planted.
        #[arg(long, value_name = "LAW", conflicts_with = "suites")]
        mutate: Option<String>,
    },
    /// Run law suites on a document and print the report in the chosen format.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated suites: category, fam, sigma, transport, dep, depsigma, elsigma,
    /// exdo2, counting, weak, cofam, trivial, or all. Defaults to every applicable suite.
    #[arg(long, value_name = "LIST")]
    suites: Option<String>,
    #[arg(long, value_name = "N", help = BUDGET_HELP)]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum GenKind {
    /// Finite sets 0..=N with every layer defined intensionally.
    Finset {
        #[arg(long, default_value_t = 3)]
        max_object_size: usize,
        #[arg(long, default_value_t = 2)]
        fiber_cap: usize,
    },
    /// A commutative ring as a one-object category, through the depsigma layer.
    Ring {
        /// The integers modulo M.
        #[arg(long, value_name = "M", conflicts_with = "tables", required_unless_present = "tables")]
        modulus: Option<usize>,
        /// A JSON file with "add" and "mul" tables over 0..n.
        #[arg(long, value_name = "FILE")]
        tables: Option<PathBuf>,
    },
    /// A discrete category.
    Discrete {
        #[arg(long)]
        objects: usize,
        #[arg(long, value_enum, default_value_t = FamArg::Coslice)]
        fam: FamArg,
    },
    /// A poset on 0..N, closed reflexively and transitively.
    Poset {
        #[arg(long)]
        objects: usize,
        /// Comma-separated pairs such as "0<=1,1<=2".
        #[arg(long, default_value = "")]
        relation: String,
        #[arg(long, value_enum, default_value_t = FamArg::Coslice)]
        fam: FamArg,
    },
    /// A finite monoid from its multiplication table, `table[g][f] = g∘f`, element 0 the unit.
    Monoid {
        /// Rows separated by ';', entries by spaces or commas, e.g. "0 1; 1 0".
        #[arg(long)]
        table: String,
        #[arg(long, value_enum, default_value_t = FamArg::Coslice)]
        fam: FamArg,
    },
    /// Re-check and re-emit an existing document.
    File { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamArg {
    None,
    Coslice,
    Constant,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<FamArg> for FamChoice {
    fn from(f: FamArg) -> FamChoice {
        match f {
            FamArg::None => FamChoice::None,
            FamArg::Coslice => FamChoice::Coslice,
            FamArg::Constant => FamChoice::Constant,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { kind, output, budget } => {
            let doc = generate(&spec(kind)?, budget_or_env(budget)?)?;
            let text = serialize(&doc);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, mutate: Some(law), .. } => {
            let law = LawId::parse(&law).ok_or_else(|| Error::InvalidSpec(format!("unknown law id {law:?}")))?;
            let outcome = mutate(&load(&file)?, law)?;
            print!("{outcome}");
            Ok(exit(outcome.detected()))
        }
        Command::Check { file, run, mutate: None } => {
            let report = run_with(&load(&file)?, &run)?;
            print!("{report}");
            Ok(exit(report.passed()))
        }
        Command::Report { file, format, run } => {
            let report = run_with(&load(&file)?, &run)?;
            match format {
                Format::Text => print!("{report}"),
                Format::Json => print!("{}", report.to_json()),
            }
            Ok(exit(report.passed()))
        }
    }
}

fn exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn budget_or_env(budget: Option<usize>) -> Result<usize> {
    budget.map_or_else(budget_from_env, Ok)
}

fn run_with(model: &Model, args: &RunArgs) -> Result<RunReport> {
    let suites = args.suites.as_deref().map(Suite::parse_list).transpose()?;
    run_suites(model, suites.as_deref(), budget_or_env(args.budget)?)
}

fn load(path: &Path) -> Result<Model> {
    Model::from_document(&deserialize(&std::fs::read(path)?)?)
}

fn spec(kind: GenKind) -> Result<InstanceSpec> {
    Ok(match kind {
        GenKind::Finset {
            max_object_size,
            fiber_cap,
        } => InstanceSpec::finset(max_object_size, fiber_cap),
        GenKind::Ring { modulus: Some(m), .. } => InstanceSpec::ring(m)?,
        GenKind::Ring { tables, .. } => {
            let path = tables.ok_or_else(|| Error::InvalidSpec("ring needs --modulus or --tables".into()))?;
            let tables: RingTables = serde_json::from_slice(&std::fs::read(&path)?)
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?;
            InstanceSpec::Ring { tables }
        }
        GenKind::Discrete { objects, fam } => InstanceSpec::Discrete {
            objects,
            fam: fam.into(),
        },
        GenKind::Poset { objects, relation, fam } => InstanceSpec::Poset {
            objects,
            relation: parse_relation(&relation)?,
            fam: fam.into(),
        },
        GenKind::Monoid { table, fam } => InstanceSpec::Monoid {
            table: parse_table(&table)?,
            fam: fam.into(),
        },
        GenKind::File { path } => InstanceSpec::File { path },
    })
}

fn parse_relation(s: &str) -> Result<Vec<(usize, usize)>> {
    let bad = |p: &str| Error::InvalidSpec(format!("relation pair {p:?} is not of the form x<=y"));
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (x, y) = p.split_once("<=").or_else(|| p.split_once('<')).ok_or_else(|| bad(p))?;
            Ok((x.trim().parse().map_err(|_| bad(p))?, y.trim().parse().map_err(|_| bad(p))?))
        })
        .collect()
}

fn parse_table(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .map(str::trim)
        .filter(|row| !row.is_empty())
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| Error::InvalidSpec(format!("monoid table entry {x:?} is not a number"))))
                .collect()
        })
        .collect()
}
