//! Command-line surface over the weyltori library.
//!
//! Every subcommand delegates to the library and renders one [`Table`]
//! in the requested format. Output is deterministic: identical
//! invocations produce byte-identical bytes. Exit codes: 0 success,
//! 1 usage or validation error, 2 internal-consistency or stabilization
//! failure, 3 enumeration budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use weyltori::charpoly::CharacterPolynomial;
use weyltori::coinvariant::{
    multiplicity_series, multiplicity_series_molien, stable_multiplicity_series, top_degree,
    PaddedFamily,
};
use weyltori::partitions::DoublePartition;
use weyltori::rational::{render_rational, Integer, Rational};
use weyltori::report::{
    self, character_table_table, classes_table, exit_code_for, formal_tori_table, limit_table,
    series_table, stable_multiplicity_table, tori_table, OutputFormat, Table,
};
use weyltori::tori::{
    closed_form_table1, lehrer_graded_coefficients, stable_limit_series, tori_statistic,
};
use weyltori::weyl::{group_order, GroupKind};
use weyltori::{Error, Result};

/// Exact Weyl-group statistics of stable maximal tori.
#[derive(Parser)]
#[command(name = "weyltori", version, about, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,

    #[command(subcommand)]
    command: Command,
}

/// Global run configuration shared by all subcommands.
#[derive(Args)]
struct ConfigArgs {
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: OutputFormat,

    /// Size limit on any group enumeration or table build implied by the
    /// command (counted in group elements).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for internal parallelism (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Character-table cache directory (defaults to $WEYLTORI_CACHE if
    /// set; in-memory only otherwise).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Conjugacy classes of W_n with sizes and centralizer orders.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "bc", value_parser = parse_kind)]
        kind: GroupKind,
    },
    /// Full character table of W_n.
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "bc", value_parser = parse_kind)]
        kind: GroupKind,
    },
    /// Graded multiplicity of one irreducible in the coinvariant algebra.
    Coinv {
        /// Irreducible label, e.g. "(2,1),(1)".
        #[arg(long)]
        label: String,
        #[arg(long)]
        n: usize,
        /// Highest degree to print (default: the top degree n² resp.
        /// n(n−1)/2).
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long, default_value = "bc", value_parser = parse_kind)]
        kind: GroupKind,
    },
    /// Stable multiplicities of a padded family, e.g. "(n-2,1),(1)".
    StableMult {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 15)]
        dmax: usize,
    },
    /// Exact statistic of a character polynomial over stable maximal
    /// tori.
    Tori {
        /// Character polynomial, e.g. "C(X1+Y1,2) - (X2+Y2)".
        #[arg(long)]
        p: String,
        #[arg(long)]
        n: usize,
        /// Prime power q ≥ 2, or "formal" for the coefficient list in
        /// 1/q.
        #[arg(long)]
        q: String,
        #[arg(long, default_value = "bc", value_parser = parse_kind)]
        kind: GroupKind,
        /// Print the expectation (total / q^{#roots}) as the headline
        /// value.
        #[arg(long)]
        normalized: bool,
    },
    /// n → ∞ limit series of a statistic, with partial sums at q.
    ToriLimit {
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 20)]
        dmax: usize,
        #[arg(long)]
        q: i64,
    },
    /// Re-derive the built-in reference tables and diff against their
    /// closed forms.
    PaperTables {
        /// Which table: 1 (torus statistics), 2 (stable multiplicities),
        /// or all.
        #[arg(long, default_value = "all")]
        which: String,
    },
}

fn parse_kind(s: &str) -> std::result::Result<GroupKind, String> {
    GroupKind::from_str(s).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    OutputFormat::from_str(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes, not usage errors.
            let code: u8 = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.config.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err) as u8)
        }
    }
}

/// Applies the --budget cap to a command that materializes data for all
/// |W_n| group elements.
fn check_budget(config: &ConfigArgs, n: usize, kind: GroupKind) -> Result<()> {
    if let Some(cap) = config.budget {
        let order = group_order(n, kind);
        if order > Integer::from(cap) {
            return Err(Error::BudgetExceeded {
                required: format!("group of order {order}"),
                cap,
            });
        }
    }
    Ok(())
}

fn character_table_for(
    config: &ConfigArgs,
    n: usize,
    kind: GroupKind,
) -> Result<std::sync::Arc<weyltori::characters::CharacterTable>> {
    match &config.cache_dir {
        Some(dir) => report::character_table_cached_in(dir, n, kind),
        None => report::character_table_maybe_cached(n, kind),
    }
}

fn run(cli: &Cli) -> Result<()> {
    let table = build_table(cli)?;
    print!("{}", table.render(cli.config.format)?);
    Ok(())
}

fn build_table(cli: &Cli) -> Result<Table> {
    match &cli.command {
        Command::Classes { n, kind } => Ok(classes_table(*n, *kind)),
        Command::Chartable { n, kind } => {
            check_budget(&cli.config, *n, *kind)?;
            let table = character_table_for(&cli.config, *n, *kind)?;
            Ok(character_table_table(&table))
        }
        Command::Coinv {
            label,
            n,
            dmax,
            kind,
        } => {
            check_budget(&cli.config, *n, *kind)?;
            let label = DoublePartition::parse(label)?;
            if label.total() != *n {
                return Err(Error::SizeMismatch(format!(
                    "label {label} has size {} but n = {n}",
                    label.total()
                )));
            }
            let series = match kind {
                GroupKind::Bc => multiplicity_series(&label)?,
                GroupKind::A => multiplicity_series_molien(&label, *kind)?,
            };
            let dmax = dmax.unwrap_or_else(|| top_degree(*n, *kind));
            Ok(series_table(
                format!(
                    "multiplicity of V{label} in the degree-d coinvariant space, rank {n} ({kind})"
                ),
                &series,
                dmax,
            ))
        }
        Command::StableMult { family, dmax } => {
            let family = PaddedFamily::parse(family)?;
            let series = stable_multiplicity_series(&family, *dmax)?;
            Ok(stable_multiplicity_table(&family, &series, *dmax))
        }
        Command::Tori {
            p,
            n,
            q,
            kind,
            normalized,
        } => {
            let p = CharacterPolynomial::parse(p)?;
            if q == "formal" {
                let series = lehrer_graded_coefficients(&p, *n, *kind)?;
                return Ok(formal_tori_table(&p, &series, *n));
            }
            let q: Integer = q
                .parse()
                .map_err(|_| Error::Validation(format!("q must be an integer or \"formal\", got {q:?}")))?;
            let stat = tori_statistic(&p, *n, &q, *kind)?;
            Ok(tori_table(&stat, *normalized))
        }
        Command::ToriLimit { p, dmax, q } => {
            let p = CharacterPolynomial::parse(p)?;
            let series = stable_limit_series(&p, *dmax)?;
            limit_table(&series, &Integer::from(*q))
        }
        Command::PaperTables { which } => paper_tables(which),
    }
}

/// Reference row of stable multiplicities for degrees 0..=15, keyed by
/// family literal.
const STABLE_REFERENCE: [(&str, [i64; 16]); 7] = [
    ("(n),()", [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("(n-1),(1)", [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]),
    ("(n-1,1),()", [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]),
    ("(n-2),(2)", [0, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 3, 0, 4, 0]),
    ("(n-2),(1,1)", [0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 3, 0]),
    ("(n-2,1,1),()", [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0]),
    ("(n-2,1),(1)", [0, 0, 0, 1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6, 0, 7]),
];

fn paper_tables(which: &str) -> Result<Table> {
    let do_one = which == "1" || which == "all";
    let do_two = which == "2" || which == "all";
    if !do_one && !do_two {
        return Err(Error::Validation(format!(
            "--which must be 1, 2, or all, got {which:?}"
        )));
    }
    let mut rows = Vec::new();
    if do_one {
        for n in 2..=6usize {
            for q in [2i64, 3, 5] {
                // Errors out with a detailed diff on any mismatch.
                let report = closed_form_table1(n, &Integer::from(q))?;
                for row in &report.rows {
                    rows.push(vec![
                        "1".to_string(),
                        format!("n={n}, q={q}: {}", row.statistic),
                        row.polynomial.clone(),
                        render_rational(&row.computed),
                        "ok".to_string(),
                    ]);
                }
            }
        }
    }
    if do_two {
        for (literal, reference) in STABLE_REFERENCE {
            let family = PaddedFamily::parse(literal)?;
            let series = stable_multiplicity_series(&family, 15)?;
            let values: Vec<Rational> = (0..=15).map(|d| series.coefficient(d)).collect();
            for (d, value) in values.iter().enumerate() {
                if *value != Rational::from_integer(Integer::from(reference[d])) {
                    return Err(Error::InternalConsistency(format!(
                        "stable multiplicity of {literal} at degree {d}: computed {value}, reference {}",
                        reference[d]
                    )));
                }
            }
            rows.push(vec![
                "2".to_string(),
                format!("family {literal}"),
                String::new(),
                values
                    .iter()
                    .map(render_rational)
                    .collect::<Vec<_>>()
                    .join(","),
                "ok".to_string(),
            ]);
        }
    }
    Ok(Table::new(
        "reference tables re-derived and checked against closed forms",
        ["table", "entry", "polynomial", "value", "status"]
            .map(String::from)
            .to_vec(),
        rows,
    ))
}
