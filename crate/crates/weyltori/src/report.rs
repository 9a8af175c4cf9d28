//! Deterministic rendering and persistence of computation results.
//!
//! Every command-line and example output funnels through [`Table`]: a
//! titled rectangular grid of strings. Big integers and rationals are
//! rendered as decimal strings (`-3/4`, `1267650600228229401496703205376`)
//! so no consumer ever sees floating point. The same invocation always
//! produces byte-identical output: rows come from ordered containers and
//! the JSON encoder is given pre-sorted fields.
//!
//! Character tables can be persisted to a directory (keyed by rank, kind,
//! and schema version) and reloaded across processes; unreadable or
//! corrupt cache files are ignored and the table recomputed.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::characters::{character_table, CharacterTable};
use crate::charpoly::CharacterPolynomial;
use crate::coinvariant::PaddedFamily;
use crate::error::{Error, Result};
use crate::rational::{render_rational, Integer, Rational};
use crate::series::GradedSeries;
use crate::tori::{LimitSeries, Table1Report, ToriStatistic};
use crate::weyl::{conjugacy_classes, GroupKind};

/// Version tag stamped into every JSON document and cache file; bump when
/// the serialized shape changes.
pub const SCHEMA_VERSION: u32 = 1;

/// Output encodings for rendered tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl Default for OutputFormat {
    fn default() -> Self {
        OutputFormat::Json
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" => Ok(OutputFormat::Markdown),
            other => Err(Error::Validation(format!(
                "unknown output format {other:?}; expected json, csv, or markdown"
            ))),
        }
    }
}

/// A titled grid of pre-rendered cells, the common shape of all reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub schema_version: u32,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(
        title: impl Into<String>,
        columns: Vec<String>,
        rows: Vec<Vec<String>>,
    ) -> Self {
        Table {
            schema_version: SCHEMA_VERSION,
            title: title.into(),
            columns,
            rows,
        }
    }

    /// Renders to the requested format. JSON and CSV end with a single
    /// newline; CSV holds the header and data rows only (the title is
    /// metadata and lives in the JSON and markdown forms).
    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => {
                let body = serde_json::to_string_pretty(self)
                    .map_err(|e| Error::Validation(format!("serialization failed: {e}")))?;
                Ok(format!("{body}\n"))
            }
            OutputFormat::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer
                    .write_record(&self.columns)
                    .and_then(|()| {
                        self.rows
                            .iter()
                            .try_for_each(|row| writer.write_record(row))
                    })
                    .map_err(|e| Error::Validation(format!("csv encoding failed: {e}")))?;
                let bytes = writer
                    .into_inner()
                    .map_err(|e| Error::Validation(format!("csv encoding failed: {e}")))?;
                String::from_utf8(bytes)
                    .map_err(|e| Error::Validation(format!("csv produced invalid UTF-8: {e}")))
            }
            OutputFormat::Markdown => {
                let mut out = String::new();
                out.push_str(&format!("## {}\n\n", self.title));
                out.push_str(&format!("| {} |\n", self.columns.join(" | ")));
                out.push_str(&format!(
                    "|{}\n",
                    self.columns.iter().map(|_| " --- |").collect::<String>()
                ));
                for row in &self.rows {
                    out.push_str(&format!("| {} |\n", row.join(" | ")));
                }
                Ok(out)
            }
        }
    }
}

fn cell_int(v: &Integer) -> String {
    v.to_string()
}

fn cell_rat(v: &Rational) -> String {
    render_rational(v)
}

/// Conjugacy classes of W_n with sizes and centralizer orders.
pub fn classes_table(n: usize, kind: GroupKind) -> Table {
    let rows = conjugacy_classes(n, kind)
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                c.label.to_string(),
                cell_int(&c.size),
                cell_int(&c.centralizer_order),
            ]
        })
        .collect();
    Table::new(
        format!("conjugacy classes of W_{n} ({kind})"),
        ["index", "label", "size", "centralizer_order"]
            .map(String::from)
            .to_vec(),
        rows,
    )
}

/// Full character table: one row per irreducible, one column per class.
pub fn character_table_table(table: &CharacterTable) -> Table {
    let mut columns = vec!["label".to_string()];
    columns.extend(table.classes().iter().map(|c| c.label.to_string()));
    let rows = table
        .labels()
        .iter()
        .enumerate()
        .map(|(row, label)| {
            let mut cells = vec![label.to_string()];
            cells.extend((0..table.classes().len()).map(|col| cell_int(table.value(row, col))));
            cells
        })
        .collect();
    Table::new(
        format!("character table of W_{} ({})", table.n(), table.kind()),
        columns,
        rows,
    )
}

/// Degree-by-degree rows of a graded series of multiplicities.
pub fn series_table(title: impl Into<String>, series: &GradedSeries, dmax: usize) -> Table {
    let rows = (0..=dmax)
        .map(|d| vec![d.to_string(), cell_rat(&series.coefficient(d))])
        .collect();
    Table::new(title, ["d", "multiplicity"].map(String::from).to_vec(), rows)
}

/// A single torus statistic as a one-row table; `normalized` selects
/// whether the headline value is the expectation or the raw total.
pub fn tori_table(stat: &ToriStatistic, normalized: bool) -> Table {
    let value = if normalized {
        &stat.expectation
    } else {
        &stat.total
    };
    Table::new(
        format!(
            "torus statistic of P = {} at n = {}, q = {} ({})",
            stat.polynomial, stat.n, stat.q, stat.kind
        ),
        ["n", "kind", "q", "polynomial", "value", "total", "expectation"]
            .map(String::from)
            .to_vec(),
        vec![vec![
            stat.n.to_string(),
            stat.kind.to_string(),
            stat.q.to_string(),
            stat.polynomial.clone(),
            cell_rat(value),
            cell_rat(&stat.total),
            cell_rat(&stat.expectation),
        ]],
    )
}

/// The formal-q view of a statistic: the exact coefficients ⟨P, R_n^d⟩ of
/// the expectation as a polynomial in 1/q.
pub fn formal_tori_table(p: &CharacterPolynomial, series: &GradedSeries, n: usize) -> Table {
    let dmax = series.degree().unwrap_or(0);
    let mut table = series_table(
        format!(
            "expectation of P = {} at rank {n} as a polynomial in 1/q (total = q^{}·expectation)",
            p.render(),
            2 * n * n
        ),
        series,
        dmax,
    );
    table.columns = ["d", "coefficient of q^-d"].map(String::from).to_vec();
    table
}

/// Limit series rows: coefficient, witness agreement, and partial sums at
/// a concrete q.
pub fn limit_table(series: &LimitSeries, q: &Integer) -> Result<Table> {
    let sums = series.partial_sums(q)?;
    let decay = series.tail_decay_start(q)?;
    let rows = series
        .entries()
        .iter()
        .zip(&sums)
        .map(|(e, sum)| {
            vec![
                e.d.to_string(),
                cell_rat(&e.value),
                e.probe_n.to_string(),
                e.stabilized.to_string(),
                cell_rat(sum),
            ]
        })
        .collect();
    let decay_note = match decay {
        Some(d0) => format!("terms decay from d = {d0} on"),
        None => "series is identically zero".to_string(),
    };
    Ok(Table::new(
        format!(
            "limit series of P = {} with partial sums at q = {q} ({decay_note})",
            series.polynomial()
        ),
        ["d", "coefficient", "probe_n", "stabilized", "partial_sum"]
            .map(String::from)
            .to_vec(),
        rows,
    ))
}

/// The five-statistic summary table.
pub fn table1_table(report: &Table1Report) -> Table {
    let rows = report
        .rows
        .iter()
        .map(|row| {
            vec![
                row.statistic.to_string(),
                row.polynomial.clone(),
                cell_rat(&row.computed),
                cell_rat(&row.limit),
            ]
        })
        .collect();
    Table::new(
        format!(
            "torus statistics at n = {}, q = {} (each value checked against its closed form)",
            report.n, report.q
        ),
        ["statistic", "character polynomial", "value", "limit at q"]
            .map(String::from)
            .to_vec(),
        rows,
    )
}

/// Stable multiplicities of one padded family, one row per degree.
pub fn stable_multiplicity_table(
    family: &PaddedFamily,
    series: &GradedSeries,
    dmax: usize,
) -> Table {
    series_table(
        format!("stable multiplicities of the family {family}"),
        series,
        dmax,
    )
}

/// Maps an error to the process exit code contract: 1 for usage and
/// validation problems, 2 for internal-consistency or stabilization
/// failures, 3 for exceeded budgets.
pub fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::BudgetExceeded { .. } => 3,
        Error::InternalConsistency(_) | Error::NotStabilized { .. } => 2,
        Error::Validation(_)
        | Error::KindMismatch { .. }
        | Error::SizeMismatch(_)
        | Error::Parse { .. } => 1,
    }
}

#[derive(Serialize, Deserialize)]
struct CachedCharacterTable {
    schema_version: u32,
    n: usize,
    kind: GroupKind,
    labels: Vec<String>,
    classes: Vec<String>,
    values: Vec<Vec<String>>,
}

fn cache_file(dir: &Path, n: usize, kind: GroupKind) -> PathBuf {
    dir.join(format!("chartable-v{SCHEMA_VERSION}-{kind}-{n}.json"))
}

fn load_cached_table(path: &Path, n: usize, kind: GroupKind) -> Option<CharacterTable> {
    let text = fs::read_to_string(path).ok()?;
    let cached: CachedCharacterTable = serde_json::from_str(&text).ok()?;
    if cached.schema_version != SCHEMA_VERSION || cached.n != n || cached.kind != kind {
        return None;
    }
    let values: Option<Vec<Vec<Integer>>> = cached
        .values
        .iter()
        .map(|row| row.iter().map(|v| Integer::from_str(v).ok()).collect())
        .collect();
    CharacterTable::from_parts(n, kind, values?).ok()
}

fn store_cached_table(path: &Path, table: &CharacterTable) -> Result<()> {
    let cached = CachedCharacterTable {
        schema_version: SCHEMA_VERSION,
        n: table.n(),
        kind: table.kind(),
        labels: table.labels().iter().map(|l| l.to_string()).collect(),
        classes: table
            .classes()
            .iter()
            .map(|c| c.label.to_string())
            .collect(),
        values: table
            .labels()
            .iter()
            .enumerate()
            .map(|(row, _)| {
                (0..table.classes().len())
                    .map(|col| table.value(row, col).to_string())
                    .collect()
            })
            .collect(),
    };
    let body = serde_json::to_string(&cached)
        .map_err(|e| Error::Validation(format!("cache serialization failed: {e}")))?;
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)
            .map_err(|e| Error::Validation(format!("cannot create cache dir: {e}")))?;
    }
    fs::write(path, body).map_err(|e| Error::Validation(format!("cannot write cache: {e}")))
}

/// Environment variable naming the character-table cache directory.
pub const CACHE_ENV_VAR: &str = "WEYLTORI_CACHE";

/// Like [`character_table`], but consulting and maintaining a disk cache
/// in `dir`. A missing, stale, or corrupt cache entry is recomputed and
/// rewritten; cache write failures are not fatal.
pub fn character_table_cached_in(
    dir: &Path,
    n: usize,
    kind: GroupKind,
) -> Result<Arc<CharacterTable>> {
    let path = cache_file(dir, n, kind);
    if let Some(table) = load_cached_table(&path, n, kind) {
        return Ok(Arc::new(table));
    }
    let table = character_table(n, kind)?;
    let _ = store_cached_table(&path, &table);
    Ok(table)
}

/// Consults the directory named by [`CACHE_ENV_VAR`] if set, else computes
/// in memory.
pub fn character_table_maybe_cached(n: usize, kind: GroupKind) -> Result<Arc<CharacterTable>> {
    match std::env::var_os(CACHE_ENV_VAR) {
        Some(dir) => character_table_cached_in(Path::new(&dir), n, kind),
        None => character_table(n, kind),
    }
}
