//! Command-line definition and dispatch.

use std::path::PathBuf;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use phi_descent_core::criteria::{verdict_with, CriteriaError, Status};
use phi_descent_core::gauss::gauss_pair;
use phi_descent_core::ntheory::{is_prime_u64, Triple};
use phi_descent_core::quadforms::{discriminant, QuadFormError, DEFAULT_DISCRIMINANT_BOUND};
use phi_descent_core::search::search_solutions;

use crate::acceptance::{self, Suite};
use crate::cache::ClassGroupCache;
use crate::render::{self, ScanRow, VerdictDoc};
use crate::scan;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 10;

pub const DISC_BOUND_ENV: &str = "PHI_DESCENT_DISC_BOUND";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Internal(#[from] anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Decides whether c * y^l = Phi_p(x) has integer solutions.
#[derive(Debug, Parser)]
#[command(name = "phi-descent", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; the default depends on the subcommand.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Largest |D| for which class groups are computed.
    #[arg(long, global = true, env = DISC_BOUND_ENV, default_value_t = DEFAULT_DISCRIMINANT_BOUND)]
    pub disc_bound: u64,
    /// Prefix text output with a provenance line.
    #[arg(long, global = true)]
    pub meta: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verdict for one triple (p, c, l).
    Check {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        l: u32,
    },
    /// Verdict table over p <= p-max, c <= c-max, l in l-set.
    Scan {
        #[arg(long)]
        p_max: u64,
        #[arg(long)]
        c_max: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        l_set: Vec<u32>,
    },
    /// The polynomials A_p, B_p with 4 Phi_p = A_p^2 - (-1)^((p-1)/2) p B_p^2.
    Gauss {
        #[arg(long)]
        p: u64,
    },
    /// Reduced forms of the class group of discriminant (-1)^((p-1)/2) p.
    Classgroup {
        #[arg(long)]
        p: u64,
    },
    /// Brute-force solutions with |x| <= x-bound.
    Search {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        l: u32,
        #[arg(long, default_value_t = 100)]
        x_bound: u64,
    },
    /// Runs the acceptance checks.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Scan { .. } => "scan",
            Command::Gauss { .. } => "gauss",
            Command::Classgroup { .. } => "classgroup",
            Command::Search { .. } => "search",
            Command::Selftest => "selftest",
        }
    }

    fn default_format(&self) -> Format {
        match self {
            Command::Scan { .. } => Format::Csv,
            Command::Selftest => Format::Text,
            _ => Format::Json,
        }
    }
}

/// Rendered output and the exit code it should end with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub body: String,
    pub code: u8,
}

fn triple(p: u64, c: u64, l: u32) -> Result<Triple, CliError> {
    Triple::new(p, c, l).map_err(|e| usage(e.to_string()))
}

fn odd_prime(p: u64) -> Result<u64, CliError> {
    if p >= 5 && is_prime_u64(p) {
        Ok(p)
    } else {
        Err(usage(format!("p must be a prime >= 5, got {p}")))
    }
}

fn within_bound(p: u64, bound: u64) -> Result<(), CliError> {
    if p > bound {
        return Err(usage(format!(
            "|D| = {p} exceeds the discriminant bound {bound} (--disc-bound or {DISC_BOUND_ENV})"
        )));
    }
    Ok(())
}

fn criteria_error(e: CriteriaError) -> CliError {
    match e {
        CriteriaError::ClassGroup(QuadFormError::BoundExceeded {
            discriminant,
            bound,
        }) => usage(format!(
            "|D| = {} exceeds the discriminant bound {bound} (--disc-bound or {DISC_BOUND_ENV})",
            discriminant.magnitude()
        )),
        e => CliError::Internal(e.into()),
    }
}

fn not_csv(command: &str) -> CliError {
    usage(format!("{command} has no csv output"))
}

/// Validates the arguments, computes, and renders, without touching stdout.
pub fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    let global = &cli.global;
    let format = global
        .format
        .unwrap_or_else(|| cli.command.default_format());
    if global.meta && format != Format::Text {
        return Err(usage("--meta requires --format text"));
    }
    let groups = ClassGroupCache::new(global.disc_bound);
    let ok = |body: String| Rendered {
        body,
        code: EXIT_OK,
    };

    let mut rendered = match &cli.command {
        &Command::Check { p, c, l } => {
            let t = triple(p, c, l)?;
            let v = verdict_with(&t, &groups).map_err(criteria_error)?;
            let code = match v.status() {
                Status::NoSolutions => EXIT_OK,
                Status::Inconclusive => EXIT_INCONCLUSIVE,
            };
            let body = match format {
                Format::Json => render::to_json(&VerdictDoc::from(&v))?,
                Format::Csv => render::scan_csv(&[ScanRow::from(&v)])?,
                Format::Text => format!("{v}\n"),
            };
            Rendered { body, code }
        }
        Command::Scan {
            p_max,
            c_max,
            l_set,
        } => {
            let (p_max, c_max) = (*p_max, *c_max);
            if p_max < 5 {
                return Err(usage(format!("--p-max must be >= 5, got {p_max}")));
            }
            if c_max < 3 {
                return Err(usage(format!("--c-max must be >= 3, got {c_max}")));
            }
            if let Some(l) = l_set.iter().find(|&&l| l < 2) {
                return Err(usage(format!("every l in --l-set must be >= 2, got {l}")));
            }
            within_bound(p_max, global.disc_bound)?;
            let mut ls = l_set.clone();
            ls.sort_unstable();
            ls.dedup();
            let triples = scan::triples(p_max, c_max, &ls);
            let verdicts = scan::verdicts(&triples, &groups).map_err(criteria_error)?;
            let rows: Vec<ScanRow> = verdicts.iter().map(ScanRow::from).collect();
            ok(match format {
                Format::Json => render::to_json(&render::ScanDoc {
                    schema: render::SCHEMA.to_owned(),
                    p_max,
                    c_max,
                    l_set: ls,
                    rows,
                })?,
                Format::Csv => render::scan_csv(&rows)?,
                Format::Text => render::scan_text(&rows),
            })
        }
        &Command::Gauss { p } => {
            let pair = gauss_pair(odd_prime(p)?).context("computing the Gauss pair")?;
            let doc = render::GaussDoc::from(&pair);
            ok(match format {
                Format::Json => render::to_json(&doc)?,
                Format::Csv => render::gauss_csv(&doc)?,
                Format::Text => render::gauss_text(&doc),
            })
        }
        &Command::Classgroup { p } => {
            within_bound(odd_prime(p)?, global.disc_bound)?;
            let group =
                phi_descent_core::criteria::ClassGroups::class_group(&groups, &discriminant(p))
                    .context("computing the class group")?;
            let doc = render::ClassGroupDoc::new(p, &group);
            ok(match format {
                Format::Json => render::to_json(&doc)?,
                Format::Csv => render::classgroup_csv(&doc)?,
                Format::Text => render::classgroup_text(&doc),
            })
        }
        &Command::Search { p, c, l, x_bound } => {
            let t = triple(p, c, l)?;
            if x_bound > i64::MAX as u64 {
                return Err(usage(format!("--x-bound must be <= {}", i64::MAX)));
            }
            let found = search_solutions(&t, x_bound);
            let doc = render::SearchDoc::new(&t, x_bound, &found);
            ok(match format {
                Format::Json => render::to_json(&doc)?,
                Format::Csv => render::search_csv(&doc)?,
                Format::Text => render::search_text(&doc),
            })
        }
        Command::Selftest => {
            let suite = Suite {
                groups,
                ..Suite::default()
            };
            let doc = acceptance::report(&acceptance::run_all(&suite));
            let code = if doc.passed { EXIT_OK } else { EXIT_INTERNAL };
            let body = match format {
                Format::Json => render::to_json(&doc)?,
                Format::Csv => return Err(not_csv("selftest")),
                Format::Text => render::selftest_text(&doc),
            };
            Rendered { body, code }
        }
    };
    if global.meta {
        rendered.body = format!(
            "# phi-descent {} {} schema={} disc-bound={}\n{}",
            env!("CARGO_PKG_VERSION"),
            cli.command.name(),
            render::SCHEMA,
            global.disc_bound,
            rendered.body
        );
    }
    Ok(rendered)
}

/// [`execute`], then writes the output to `--out` or stdout.
pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let rendered = execute(cli)?;
    match &cli.global.out {
        Some(path) => std::fs::write(path, &rendered.body)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(rendered.body.as_bytes())
                .context("writing to stdout")?;
            stdout.flush().context("writing to stdout")?;
        }
    }
    Ok(rendered.code)
}
