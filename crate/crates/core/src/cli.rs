//! Command implementations behind the `powergenus` binary.
//!
//! Every command returns a [`CommandOutput`]: the text to print and a
//! [`Status`] that maps onto the process exit code (0 for success or an
//! exact value, 2 when only bounds were established, 1 for failures).
//! Errors are returned as [`Error`] and also exit with 1.
//!
//! Group targets are either catalog labels such as `[16,9]` or recipe
//! expressions such as `direct(cyclic(2),cyclic(6))`; labels may appear
//! inside recipes and resolve through the active catalog.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Catalog, TABLE2_LABELS, TABLE2_SPECTRA};
use crate::classifier::{classify, verify_lemma_in, ClassifyOptions, OrientableVerdict, Verdict};
use crate::error::{Error, Result};
use crate::genus::certificate::{verify, write_certificate};
use crate::genus::{crosscap_exact, genus_exact, Budget, GenusOptions, GenusResult, Surface};
use crate::graph::{parse_edge_list, power_graph, to_dot, to_edge_list};
use crate::group::recipe::Recipe;
use crate::group::{FiniteGroup, SixProfile};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    /// One JSON object per line, fixed field order.
    Records,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "records" => Ok(Format::Records),
            other => Err(Error::InvalidParameter(format!(
                "unknown format {other:?} (text|records)"
            ))),
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub budget: Budget,
    pub format: Format,
    /// Where to write the report (or the certificate, for `genus`).
    pub output: Option<PathBuf>,
    pub jobs: usize,
    /// Catalog file replacing the built-in one.
    pub catalog: Option<PathBuf>,
    /// Prefix reports with a `#` line carrying the generation time.
    pub timestamp: bool,
    /// Let the engine answer complete and complete bipartite graphs from
    /// closed formulas. Off forces a search and hence a certificate.
    pub formulas: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            budget: Budget::default(),
            format: Format::Text,
            output: None,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            catalog: None,
            timestamp: true,
            formulas: true,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.budget.max_nodes == 0 || self.budget.max_time.is_zero() {
            return Err(Error::InvalidParameter("budget caps must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParameter("--jobs must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_budget_seconds(mut self, secs: f64) -> Result<Self> {
        if !(secs.is_finite() && secs > 0.0) {
            return Err(Error::InvalidParameter(format!("bad time budget {secs}")));
        }
        self.budget.max_time = Duration::from_secs_f64(secs);
        Ok(self)
    }

    pub fn load_catalog(&self) -> Result<ActiveCatalog> {
        match &self.catalog {
            Some(path) => Ok(ActiveCatalog::Loaded(Box::new(Catalog::load(path)?))),
            None => Ok(ActiveCatalog::Builtin(Catalog::builtin())),
        }
    }

    fn engine(&self) -> GenusOptions {
        GenusOptions {
            budget: self.budget,
            use_formulas: self.formulas,
        }
    }
}

/// The built-in catalog or one loaded from `--catalog`.
#[derive(Debug)]
pub enum ActiveCatalog {
    Builtin(&'static Catalog),
    Loaded(Box<Catalog>),
}

impl std::ops::Deref for ActiveCatalog {
    type Target = Catalog;

    fn deref(&self) -> &Catalog {
        match self {
            ActiveCatalog::Builtin(c) => c,
            ActiveCatalog::Loaded(c) => c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    BoundsOnly,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::BoundsOnly => 2,
            Status::Failed => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub status: Status,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        CommandOutput {
            text,
            status: Status::Success,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Edges,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Table1,
    Table2,
    Lemma(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogAction {
    Dump,
    Validate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    GroupInfo(String),
    PowerGraph(String, ExportFormat),
    Genus(PathBuf, Surface),
    Classify(Option<String>),
    Report(ReportKind),
    Verify(PathBuf),
    Catalog(CatalogAction),
}

/// Runs `command` on a thread pool of `config.jobs` workers and writes the
/// report to `config.output` when one is set (except for `genus`, where the
/// output path names the certificate).
pub fn run(config: &RunConfig, command: &Command) -> Result<CommandOutput> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let mut out = pool.install(|| match command {
        Command::GroupInfo(target) => cmd_group_info(config, target),
        Command::PowerGraph(target, format) => cmd_powergraph(config, target, *format),
        Command::Genus(path, surface) => cmd_genus(config, path, *surface),
        Command::Classify(target) => cmd_classify(config, target.as_deref()),
        Command::Report(kind) => cmd_report(config, kind),
        Command::Verify(path) => cmd_verify(config, path),
        Command::Catalog(action) => cmd_catalog(config, action),
    })?;
    if config.timestamp && !matches!(command, Command::PowerGraph(..) | Command::Catalog(CatalogAction::Dump)) {
        out.text.insert_str(0, &timestamp_header());
    }
    if let (Some(path), false) = (&config.output, matches!(command, Command::Genus(..))) {
        std::fs::write(path, &out.text)?;
        out.text = format!("wrote {}\n", path.display());
    }
    Ok(out)
}

fn timestamp_header() -> String {
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
    format!("# powergenus {} at unix time {secs}\n", env!("CARGO_PKG_VERSION"))
}

/// Builds a group from a catalog label or a recipe expression.
pub fn resolve_group(catalog: &Catalog, target: &str) -> Result<FiniteGroup> {
    let recipe: Recipe = target.trim().parse()?;
    if let Recipe::Label(label) = &recipe {
        return catalog.get(label);
    }
    let g = recipe.build_with(&mut |label| catalog.get(label))?;
    Ok(g.with_label(recipe.to_string()))
}

#[derive(Serialize)]
struct GroupInfo<'a> {
    group: &'a str,
    order: usize,
    spectrum: Vec<usize>,
    multiplicities: String,
    six_profile: SixProfile,
    involutions: usize,
    center: usize,
}

pub fn cmd_group_info(config: &RunConfig, target: &str) -> Result<CommandOutput> {
    let catalog = config.load_catalog()?;
    let g = resolve_group(&catalog, target)?;
    let spectrum = g.order_spectrum();
    let info = GroupInfo {
        group: g.label().unwrap_or(target),
        order: g.order(),
        spectrum: spectrum.orders(),
        multiplicities: spectrum.to_string(),
        six_profile: g.six_profile(),
        involutions: g.count_involutions(),
        center: g.center().len(),
    };
    let text = match config.format {
        Format::Records => record(&info),
        Format::Text => format!(
            "group: {}\norder: {}\nspectrum: {}\nmultiplicities: {}\nsix-profile: {}\ninvolutions: {}\ncenter: {}\n",
            info.group,
            info.order,
            spectrum.set_string(),
            info.multiplicities,
            info.six_profile,
            info.involutions,
            info.center
        ),
    };
    Ok(CommandOutput::ok(text))
}

pub fn cmd_powergraph(config: &RunConfig, target: &str, format: ExportFormat) -> Result<CommandOutput> {
    let catalog = config.load_catalog()?;
    let g = resolve_group(&catalog, target)?;
    let graph = power_graph(&g);
    let text = match format {
        ExportFormat::Edges => to_edge_list(&graph),
        ExportFormat::Dot => to_dot(&graph, "power_graph"),
    };
    Ok(CommandOutput::ok(text))
}

#[derive(Serialize)]
struct GenusRecord<'a> {
    graph: String,
    surface: Surface,
    lower: usize,
    upper: Option<usize>,
    exact: Option<usize>,
    nodes: u64,
    certificate: Option<&'a str>,
}

/// One-line summary: `exact 1`, `bounds [1, 2]` or `bounds [3, -]`.
pub fn summary(result: &GenusResult) -> String {
    match (result.exact(), result.upper) {
        (Some(v), _) => format!("exact {v}"),
        (None, Some(u)) => format!("bounds [{}, {u}]", result.lower),
        (None, None) => format!("bounds [{}, -]", result.lower),
    }
}

pub fn cmd_genus(config: &RunConfig, path: &Path, surface: Surface) -> Result<CommandOutput> {
    let graph = parse_edge_list(&std::fs::read_to_string(path)?)?;
    let result = match surface {
        Surface::Orientable => genus_exact(&graph, &config.engine())?,
        Surface::Nonorientable => crosscap_exact(&graph, &config.engine())?,
    };
    let certificate = match result.embedding() {
        Some(e) => {
            let cert_path = config.output.clone().unwrap_or_else(|| path.with_extension("cert"));
            std::fs::write(&cert_path, write_certificate(&graph, e))?;
            Some(cert_path)
        }
        None => None,
    };
    let cert_str = certificate.as_ref().map(|p| p.display().to_string());
    let text = match config.format {
        Format::Records => record(&GenusRecord {
            graph: path.display().to_string(),
            surface,
            lower: result.lower,
            upper: result.upper,
            exact: result.exact(),
            nodes: result.nodes(),
            certificate: cert_str.as_deref(),
        }),
        Format::Text => {
            let mut t = format!("{}\n{result}\n", summary(&result));
            for level in &result.levels {
                let _ = writeln!(
                    t,
                    "  level {}: {:?} after {} nodes",
                    level.level, level.outcome, level.nodes
                );
            }
            match &cert_str {
                Some(c) => {
                    let _ = writeln!(t, "certificate: {c}");
                }
                None => t.push_str("certificate: none (rerun with --no-formulas to search for one)\n"),
            }
            t
        }
    };
    let status = if result.is_exact() {
        Status::Success
    } else {
        Status::BoundsOnly
    };
    Ok(CommandOutput { text, status })
}

fn label_key(label: &str) -> (usize, usize, String) {
    let nums: Vec<usize> = label
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .filter_map(|s| s.trim().parse().ok())
        .collect();
    match nums[..] {
        [n, m] => (n, m, String::new()),
        _ => (usize::MAX, usize::MAX, label.to_string()),
    }
}

fn classify_options(config: &RunConfig) -> ClassifyOptions {
    ClassifyOptions {
        engine: config.engine(),
        ..ClassifyOptions::default()
    }
}

/// Classifies every catalog group in parallel; results come back sorted by
/// order, then label.
pub fn classify_catalog(catalog: &Catalog, options: &ClassifyOptions) -> Result<Vec<Verdict>> {
    let mut verdicts = catalog
        .groups()
        .par_iter()
        .map(|(_, g)| classify(g, options))
        .collect::<Result<Vec<_>>>()?;
    verdicts.sort_by_cached_key(|v| (v.order, label_key(v.label.as_deref().unwrap_or(""))));
    Ok(verdicts)
}

/// With no target, classifies the whole catalog.
pub fn cmd_classify(config: &RunConfig, target: Option<&str>) -> Result<CommandOutput> {
    let catalog = config.load_catalog()?;
    let options = classify_options(config);
    let verdicts = match target {
        Some(t) => vec![classify(&resolve_group(&catalog, t)?, &options)?],
        None => classify_catalog(&catalog, &options)?,
    };
    let mut text = String::new();
    for v in &verdicts {
        match config.format {
            Format::Records => text.push_str(&record(v)),
            Format::Text => {
                let _ = write!(text, "{v}");
            }
        }
    }
    Ok(CommandOutput::ok(text))
}

#[derive(Serialize)]
struct Table1Row {
    label: String,
    order: usize,
    spectrum: Vec<usize>,
    six_profile: SixProfile,
    decided_by: String,
}

#[derive(Serialize)]
struct Table2Row {
    label: String,
    order: usize,
    spectrum: Vec<usize>,
    orders_within_1_2_3_4_6: bool,
    three_hexagons: bool,
    meet_in_order_three: bool,
    listed: bool,
    spectrum_matches: bool,
}

/// The groups whose power graph has genus two, in table order.
pub fn table1_rows(catalog: &Catalog, options: &ClassifyOptions) -> Result<Vec<Verdict>> {
    Ok(classify_catalog(catalog, options)?
        .into_iter()
        .filter(|v| v.orientable.as_ref().is_some_and(OrientableVerdict::is_two))
        .collect())
}

/// Catalog groups meeting all three hexagon conditions: orders within
/// {1,2,3,4,6}, exactly three cyclic subgroups of order 6, and two of them
/// meeting in order 3. Sorted by order, then label.
pub fn table2_groups(catalog: &Catalog) -> Vec<(String, FiniteGroup)> {
    let mut rows: Vec<(String, FiniteGroup)> = catalog
        .groups()
        .into_iter()
        .filter(|(_, g)| table2_conditions(g) == [true; 3])
        .map(|(e, g)| (e.label.clone(), g))
        .collect();
    rows.sort_by_cached_key(|(l, g)| (g.order(), label_key(l)));
    rows
}

pub fn table2_conditions(g: &FiniteGroup) -> [bool; 3] {
    let six = g.six_profile();
    [
        g.order_spectrum().is_subset_of(&[1, 2, 3, 4, 6]),
        six.count == 3,
        six.any_pair(3),
    ]
}

pub fn cmd_report(config: &RunConfig, kind: &ReportKind) -> Result<CommandOutput> {
    let catalog = config.load_catalog()?;
    let records = config.format == Format::Records;
    let mut text = String::new();
    match kind {
        ReportKind::Table1 => {
            if !records {
                text.push_str("label     order  orders           six-profile       decided by\n");
            }
            for v in table1_rows(&catalog, &classify_options(config))? {
                let spectrum = crate::OrderSpectrum::from_multiplicities(v.spectrum.iter().map(|&k| (k, 1)).collect());
                let decided_by = v
                    .steps_for(Surface::Orientable)
                    .last()
                    .map(|s| s.rule_id.clone())
                    .unwrap_or_default();
                let row = Table1Row {
                    label: v.label.clone().unwrap_or_default(),
                    order: v.order,
                    spectrum: v.spectrum.clone(),
                    six_profile: v.six_profile.clone(),
                    decided_by,
                };
                if records {
                    text.push_str(&record(&row));
                } else {
                    let _ = writeln!(
                        text,
                        "{:<9} {:>5}  {:<16} {:<17} {}",
                        row.label,
                        row.order,
                        spectrum.set_string(),
                        row.six_profile.to_string(),
                        row.decided_by
                    );
                }
            }
        }
        ReportKind::Table2 => {
            if !records {
                text.push_str("label     order  orders         (a) (b) (c)  listed  spectrum\n");
            }
            for (label, g) in table2_groups(&catalog) {
                let [a, b, c] = table2_conditions(&g);
                let spectrum = g.order_spectrum();
                let expected = TABLE2_SPECTRA.iter().find(|(l, _)| *l == label).map(|(_, s)| *s);
                let row = Table2Row {
                    order: g.order(),
                    spectrum: spectrum.orders(),
                    orders_within_1_2_3_4_6: a,
                    three_hexagons: b,
                    meet_in_order_three: c,
                    listed: TABLE2_LABELS.contains(&label.as_str()),
                    spectrum_matches: expected == Some(&spectrum.orders()[..]),
                    label,
                };
                if records {
                    text.push_str(&record(&row));
                } else {
                    let mark = |b: bool| if b { "yes" } else { "no" };
                    let _ = writeln!(
                        text,
                        "{:<9} {:>5}  {:<14} {:<3} {:<3} {:<3}  {:<6}  {}",
                        row.label,
                        row.order,
                        spectrum.set_string(),
                        mark(a),
                        mark(b),
                        mark(c),
                        mark(row.listed),
                        if row.spectrum_matches { "matches" } else { "DIFFERS" }
                    );
                }
            }
        }
        ReportKind::Lemma(id) => {
            let report = verify_lemma_in(id, &catalog)?;
            text = if records {
                record(&report)
            } else {
                format!("{report}\n")
            };
            let status = if report.passed() {
                Status::Success
            } else {
                Status::Failed
            };
            return Ok(CommandOutput { text, status });
        }
    }
    Ok(CommandOutput::ok(text))
}

pub fn cmd_verify(config: &RunConfig, path: &Path) -> Result<CommandOutput> {
    let report = verify(&std::fs::read_to_string(path)?)?;
    let text = match config.format {
        Format::Records => record(&report),
        Format::Text => format!("{report}\n"),
    };
    let status = if report.ok { Status::Success } else { Status::Failed };
    Ok(CommandOutput { text, status })
}

pub fn cmd_catalog(config: &RunConfig, action: &CatalogAction) -> Result<CommandOutput> {
    let catalog = config.load_catalog()?;
    match action {
        CatalogAction::Dump => Ok(CommandOutput::ok(catalog.to_text())),
        CatalogAction::Validate => {
            let report = catalog.validate_all();
            let text = match config.format {
                Format::Records => record(&report),
                Format::Text => {
                    let mut t = format!(
                        "{}: {} entries, {} isomorphism pairs checked, {} failures\n",
                        if report.passed() { "PASS" } else { "FAIL" },
                        report.entries_checked,
                        report.isomorphism_pairs_checked,
                        report.failures.len()
                    );
                    for f in &report.failures {
                        let _ = writeln!(t, "  {}: {}", f.label, f.reason);
                    }
                    t
                }
            };
            let status = if report.passed() {
                Status::Success
            } else {
                Status::Failed
            };
            Ok(CommandOutput { text, status })
        }
    }
}

fn record<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("report rows serialize");
    line.push('\n');
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet() -> RunConfig {
        RunConfig {
            timestamp: false,
            jobs: 2,
            ..RunConfig::default()
        }
    }

    #[test]
    fn label_keys_sort_numerically() {
        let mut v = vec!["[24,14]", "[8,1]", "[24,7]"];
        v.sort_by_key(|l| label_key(l));
        assert_eq!(v, ["[8,1]", "[24,7]", "[24,14]"]);
    }

    #[test]
    fn config_checks() {
        let mut c = quiet();
        c.jobs = 0;
        assert!(c.validate().is_err());
        assert!(quiet().with_budget_seconds(0.0).is_err());
        assert_eq!("records".parse::<Format>().unwrap(), Format::Records);
    }

    #[test]
    fn group_info_of_a_label() {
        let out = cmd_group_info(&quiet(), "[16,9]").unwrap();
        assert!(out.text.contains("order: 16\n"), "{}", out.text);
        assert!(out.text.contains("spectrum: {1,2,4,8}\n"));
        assert!(out.text.contains("involutions: 1\n"));
    }
}
