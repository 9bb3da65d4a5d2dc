use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod render;

use latpath_core::{
    boundary, count_paths, decompose, enumerate_paths, run_suites, total_dimension, total_weight,
    Error, Grid, ModelSpec, Region, Suite, DEFAULT_ENUM_GUARD,
};
use num_bigint::BigUint;
use render::{Format, Output};

/// Exact weighted lattice path counts and tilting-module multiplicities.
#[derive(Parser, Debug)]
#[command(name = "latpath", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weighted path counts at one level, or every level up to it.
    Count {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, visible_alias = "n-max")]
        n: i64,
        /// Only this endpoint.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
        #[arg(long)]
        all_levels: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Multiplicities of T(k) in T(1)^N.
    Decompose {
        #[arg(long)]
        l: i64,
        #[arg(long)]
        n: i64,
        /// Also report sum mult * dim next to 2^N.
        #[arg(long)]
        dims: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Every path to (M, N) with its weight.
    Enumerate {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Largest N enumerated exhaustively.
        #[arg(long, env = "LATPATH_ENUM_GUARD", default_value_t = DEFAULT_ENUM_GUARD)]
        seed_guard: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run invariant suites; exit 1 on the first mismatch.
    Verify {
        /// Comma-separated; all suites when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        /// Comma-separated moduli; suite defaults when omitted.
        #[arg(long, value_delimiter = ',')]
        l: Vec<i64>,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Boundary points of a strip.
    Boundary {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 2)]
        strip: i64,
        #[arg(long, visible_alias = "n")]
        n_max: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelName::Uq)]
    model: ModelName,
    #[arg(long)]
    l: i64,
    /// Filter position (filter model); defaults to l - 1.
    #[arg(long)]
    d: Option<i64>,
    /// Filter type (filter model).
    #[arg(long = "type", default_value_t = 1)]
    filter_type: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModelName {
    Unrestricted,
    Wall,
    Filter,
    Auxiliary,
    Uq,
}

impl ModelArgs {
    fn build(&self) -> latpath_core::Result<ModelSpec> {
        let l = self.l;
        match self.model {
            ModelName::Unrestricted => ModelSpec::unrestricted(l),
            ModelName::Wall => ModelSpec::wall_only(l, 0),
            ModelName::Filter => {
                ModelSpec::single_filter(l, self.d.unwrap_or(l - 1), self.filter_type)
            }
            ModelName::Auxiliary => ModelSpec::auxiliary(l),
            ModelName::Uq => ModelSpec::uq(l),
        }
    }
}

/// Bad flags or a query outside a model's domain; exits with status 2.
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn run(command: Command) -> Result<(Output, Format), UsageError> {
    match command {
        Command::Count {
            model,
            n,
            m,
            all_levels,
            format,
        } => {
            let spec = model.build()?;
            if n < 0 {
                return Err(Error::NegativePosition(n).into());
            }
            if let Some(m) = m {
                if (m + n) % 2 != 0 {
                    return Err(Error::Parity { x: m, n }.into());
                }
            }
            let table = count_paths(&spec, n)?;
            let levels = if all_levels { 0..=n } else { n..=n };
            let rows = levels
                .map(|level| {
                    let row = table.level(level).expect("level within the table");
                    let row = row
                        .iter()
                        .filter(|(&x, _)| m.is_none_or(|m| m == x))
                        .map(|(&x, v)| (x, v.clone()))
                        .collect();
                    (level, row)
                })
                .collect();
            Ok((
                Output::Counts {
                    l: model.l,
                    model: spec.kind().name(),
                    n,
                    all_levels,
                    rows,
                },
                format,
            ))
        }
        Command::Decompose { l, n, dims, format } => {
            let dec = decompose(n, l)?;
            let check = dims.then(|| (total_dimension(&dec, l), BigUint::from(1u8) << n as usize));
            let mults = dec.iter().map(|(k, v)| (k, v.clone())).collect();
            Ok((Output::Decomposition { l, n, mults, check }, format))
        }
        Command::Enumerate {
            model,
            n,
            m,
            seed_guard,
            format,
        } => {
            let spec = model.build()?;
            let paths = enumerate_paths(&spec, m, n, seed_guard)?;
            let total = total_weight(&paths);
            Ok((
                Output::Paths {
                    l: model.l,
                    model: spec.kind().name(),
                    m,
                    n,
                    paths,
                    total,
                },
                format,
            ))
        }
        Command::Verify {
            suite,
            l,
            n_max,
            format,
        } => {
            let suites = if suite.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suite
            };
            let grid = Grid {
                ls: (!l.is_empty()).then_some(l),
                n_max,
            };
            let reports = run_suites(&suites, &grid)?;
            if let Some(c) = reports.iter().find_map(|r| r.counterexample.as_ref()) {
                eprintln!("counterexample {c}");
            }
            Ok((Output::Reports(reports), format))
        }
        Command::Boundary {
            model,
            strip,
            n_max,
            format,
        } => {
            let spec = model.build()?;
            if strip < 1 {
                return Err(UsageError(format!(
                    "strips are numbered from 1, got {strip}"
                )));
            }
            let name = spec.kind().name();
            let region = Region::strip(spec, strip, n_max);
            let points = boundary(&region).into_iter().collect();
            Ok((
                Output::Boundary {
                    l: model.l,
                    model: name,
                    strip,
                    n_max,
                    points,
                },
                format,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, format)) => {
            print!("{}", out.render(format));
            if out.is_mismatch() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("latpath: {msg}");
            ExitCode::from(2)
        }
    }
}
