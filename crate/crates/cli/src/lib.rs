//! Command-line front end: reads a group catalog, runs the requested
//! computation and prints JSON or CSV.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 a
//! verification check failed.

pub mod catalog;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use edim_core::chartab::{character_table, verify_orthogonality, Character, OrthogonalityReport};
use edim_core::edbounds::{
    dirichlet_prime_with_cap, edbounds_report, family_report, ContrapositiveBound, EdBoundsReport,
    FamilyEntry, FamilyKind, FamilySpec, JordanTable,
};
use edim_core::jordan::{corpus_scan, CorpusRow, CorpusSummary};
use edim_core::monomial::{
    induce_monomial, minimal_faithful_characters, verify_embedding, EmbeddingReport,
    MonomialRepJson, DEFAULT_SIZE_LIMIT,
};
use edim_core::repdim::{rdim_with_table, verify_certificate};
use edim_core::subgroups::abelian_subgroups_min_index;
use edim_core::{construct_with, FiniteGroup, Limits, Subgroup};
use serde::Serialize;
use thiserror::Error;

pub use catalog::{load_catalog, parse_catalog, CatalogEntry, CatalogError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "edim", version, about = "Representation and essential dimension bounds for finite groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest group order to enumerate.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Largest group order for abelian subgroup searches.
    #[arg(long, global = true)]
    max_jordan_order: Option<usize>,
    /// Cap on k when searching 1 + k·p^n for a prime.
    #[arg(long, global = true)]
    prime_cap: Option<u64>,
    /// Corrupt results before verification (testing aid).
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    /// Group catalog (JSON).
    #[arg(long)]
    catalog: PathBuf,
    /// Restrict to the entry with this name.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal faithful representation degree of each catalog group.
    Rdim(CatalogArgs),
    /// Character tables.
    Chartab(CatalogArgs),
    /// Lower and upper bounds on essential dimension.
    Edbounds {
        #[command(flatten)]
        catalog: CatalogArgs,
        /// Jordan constants, {"kind": "strong", "1": 1, ...}.
        #[arg(long)]
        jordan_table: Option<PathBuf>,
    },
    /// Monomial embedding induced from an abelian subgroup.
    Embed {
        #[command(flatten)]
        catalog: CatalogArgs,
        /// center, jordan-witness or sylow:<p>.
        #[arg(long, default_value = "jordan-witness", value_parser = parse_subgroup_choice)]
        subgroup: SubgroupChoice,
        /// Largest allowed dimension of the induced representation.
        #[arg(long, default_value_t = DEFAULT_SIZE_LIMIT)]
        max_size: usize,
        /// Include every monomial matrix in the output.
        #[arg(long)]
        matrices: bool,
    },
    /// Minimal indices of abelian and normal abelian subgroups.
    Jordan(CatalogArgs),
    /// Bounds along a family of groups.
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKindArg,
        /// Inclusive index range, e.g. 3..20.
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<u64>,
        /// Unit generators for semidirect_custom, comma separated.
        #[arg(long, value_delimiter = ',')]
        units: Vec<u64>,
        /// Prime for the gamma family.
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long)]
        jordan_table: Option<PathBuf>,
    },
    /// Smallest prime congruent to 1 modulo p^n.
    Prime {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyKindArg {
    SemidirectFullUnits,
    SemidirectCustom,
    Gamma,
    DihedralOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SubgroupChoice {
    Center,
    JordanWitness,
    Sylow(u64),
}

fn parse_subgroup_choice(s: &str) -> Result<SubgroupChoice, String> {
    match s {
        "center" => Ok(SubgroupChoice::Center),
        "jordan-witness" => Ok(SubgroupChoice::JordanWitness),
        _ => s
            .strip_prefix("sylow:")
            .and_then(|p| p.parse().ok())
            .map(SubgroupChoice::Sylow)
            .ok_or_else(|| format!("expected center, jordan-witness or sylow:<p>, got {s:?}")),
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{entry}: {source}")]
    Core {
        entry: String,
        source: edim_core::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_COMPUTATION,
        }
    }

    /// `module/tag` naming the origin of the failure.
    pub fn tag(&self) -> String {
        match self {
            CliError::Usage(_) => "cli/Usage".into(),
            CliError::Catalog(e) => format!("cli/{}", e.tag()),
            CliError::Core { source, .. } => format!("{}/{}", source.module(), source.tag()),
            CliError::Input(_) => "cli/InvalidInput".into(),
            CliError::Output(_) => "cli/Output".into(),
        }
    }
}

fn core_err(entry: &str) -> impl FnOnce(edim_core::Error) -> CliError + '_ {
    move |source| CliError::Core {
        entry: entry.to_string(),
        source,
    }
}

/// Runs the command line `argv` (program name first) against the process's
/// stdout and stderr.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut emitter = Emitter::new(cli.format);
    let result = execute(&cli, &mut emitter);
    let flushed = emitter.finish(out);
    match (result, flushed) {
        (Ok(true), Ok(())) => EXIT_OK,
        (Ok(false), Ok(())) => {
            let _ = writeln!(err, "verification failed");
            EXIT_VERIFICATION
        }
        (Err(e), _) | (Ok(_), Err(e)) => {
            let _ = writeln!(err, "error [{}]: {e}", e.tag());
            e.exit_code()
        }
    }
}

/// Buffers rows and writes them once the command has finished.
struct Emitter {
    format: Format,
    json: Vec<u8>,
    csv: csv::Writer<Vec<u8>>,
}

impl Emitter {
    fn new(format: Format) -> Self {
        Emitter {
            format,
            json: Vec::new(),
            csv: csv::Writer::from_writer(Vec::new()),
        }
    }

    fn emit(&mut self, json: &impl Serialize, csv_row: &impl Serialize) -> Result<(), CliError> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.json, json).map_err(|e| CliError::Output(e.to_string()))?;
                self.json.push(b'\n');
            }
            Format::Csv => self
                .csv
                .serialize(csv_row)
                .map_err(|e| CliError::Output(e.to_string()))?,
        }
        Ok(())
    }

    fn finish(self, out: &mut dyn Write) -> Result<(), CliError> {
        let bytes = match self.format {
            Format::Json => self.json,
            Format::Csv => self.csv.into_inner().map_err(|e| CliError::Output(e.to_string()))?,
        };
        out.write_all(&bytes).map_err(|e| CliError::Output(e.to_string()))
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_order: self.max_order.unwrap_or(d.max_order),
            max_jordan_order: self.max_jordan_order.unwrap_or(d.max_jordan_order),
            prime_cap: self.prime_cap.unwrap_or(d.prime_cap),
        }
    }
}

fn select(args: &CatalogArgs) -> Result<Vec<CatalogEntry>, CliError> {
    let entries = load_catalog(&args.catalog)?;
    match &args.name {
        None => Ok(entries),
        Some(name) => {
            let hit: Vec<_> = entries.into_iter().filter(|e| &e.name == name).collect();
            if hit.is_empty() {
                Err(CliError::Usage(format!("no catalog entry named {name:?}")))
            } else {
                Ok(hit)
            }
        }
    }
}

fn load_jordan_table(path: Option<&Path>) -> Result<Option<JordanTable>, CliError> {
    let Some(path) = path else { return Ok(None) };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| CliError::Input(format!("jordan table {}: {e}", path.display())))
}

fn build(entry: &CatalogEntry, limits: &Limits) -> Result<FiniteGroup, CliError> {
    construct_with(&entry.spec, limits).map_err(core_err(&entry.name))
}

/// Runs the command; `Ok(false)` means a verification check failed.
fn execute(cli: &Cli, em: &mut Emitter) -> Result<bool, CliError> {
    let limits = cli.limits();
    match &cli.command {
        Command::Rdim(args) => cmd_rdim(&select(args)?, &limits, cli.inject_fault, em),
        Command::Chartab(args) => cmd_chartab(&select(args)?, &limits, cli.inject_fault, em),
        Command::Edbounds {
            catalog,
            jordan_table,
        } => {
            let jt = load_jordan_table(jordan_table.as_deref())?;
            cmd_edbounds(&select(catalog)?, jt.as_ref(), &limits, cli.inject_fault, em)
        }
        Command::Embed {
            catalog,
            subgroup,
            max_size,
            matrices,
        } => {
            if catalog.name.is_none() {
                return Err(CliError::Usage("embed needs --name".into()));
            }
            let entries = select(catalog)?;
            cmd_embed(&entries[0], *subgroup, *max_size, *matrices, &limits, cli.inject_fault, em)
        }
        Command::Jordan(args) => cmd_jordan(&select(args)?, &limits, em),
        Command::Family {
            kind,
            range,
            units,
            p,
            jordan_table,
        } => {
            let kind = match kind {
                FamilyKindArg::SemidirectFullUnits => FamilyKind::SemidirectFullUnits,
                FamilyKindArg::SemidirectCustom => {
                    if units.is_empty() {
                        return Err(CliError::Usage("semidirect_custom needs --units".into()));
                    }
                    FamilyKind::SemidirectCustom { units: units.clone() }
                }
                FamilyKindArg::Gamma => FamilyKind::Gamma { p: *p },
                FamilyKindArg::DihedralOdd => FamilyKind::DihedralOdd,
            };
            let spec = FamilySpec {
                kind,
                start: *range.start(),
                end: *range.end(),
            };
            let jt = load_jordan_table(jordan_table.as_deref())?;
            cmd_family(&spec, jt.as_ref(), &limits, em)
        }
        Command::Prime { p, n } => cmd_prime(*p, *n, &limits, em),
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

#[derive(Serialize)]
struct RdimOut<'a> {
    name: &'a str,
    order: usize,
    total_degree: u64,
    constituents: &'a [usize],
    constituent_degrees: Vec<u64>,
    verified: bool,
}

#[derive(Serialize)]
struct RdimCsv<'a> {
    name: &'a str,
    order: usize,
    total_degree: u64,
    constituents: String,
    constituent_degrees: String,
    verified: bool,
}

fn cmd_rdim(entries: &[CatalogEntry], limits: &Limits, fault: bool, em: &mut Emitter) -> Result<bool, CliError> {
    let mut ok = true;
    for entry in entries {
        let g = build(entry, limits)?;
        let table = character_table(&g).map_err(core_err(&entry.name))?;
        let mut cert = rdim_with_table(&g, &table).map_err(core_err(&entry.name))?;
        if fault {
            if let Some(i) = cert.constituents.pop() {
                cert.total_degree -= table.irreducibles[i].degree;
            }
        }
        let verified = verify_certificate(&table, &cert);
        ok &= verified;
        let degrees: Vec<u64> = cert.constituents.iter().map(|&i| table.irreducibles[i].degree).collect();
        em.emit(
            &RdimOut {
                name: &entry.name,
                order: g.order(),
                total_degree: cert.total_degree,
                constituents: &cert.constituents,
                constituent_degrees: degrees.clone(),
                verified,
            },
            &RdimCsv {
                name: &entry.name,
                order: g.order(),
                total_degree: cert.total_degree,
                constituents: join(&cert.constituents),
                constituent_degrees: join(&degrees),
                verified,
            },
        )?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct ChartabOut<'a> {
    name: &'a str,
    order: usize,
    exponent: u64,
    prime: u64,
    class_sizes: Vec<usize>,
    class_rep_orders: &'a [u64],
    characters: &'a [Character],
    orthogonality: OrthogonalityReport,
}

#[derive(Serialize)]
struct ChartabCsv<'a> {
    name: &'a str,
    character: usize,
    degree: u64,
    /// Per class: `m:c_0 c_1 …`, the multiplicities of the powers of `ζ_m`.
    values: String,
}

fn cmd_chartab(entries: &[CatalogEntry], limits: &Limits, fault: bool, em: &mut Emitter) -> Result<bool, CliError> {
    let mut ok = true;
    for entry in entries {
        let g = build(entry, limits)?;
        let mut table = character_table(&g).map_err(core_err(&entry.name))?;
        if fault {
            if let Some(v) = table.irreducibles.last_mut().and_then(|c| c.values.last_mut()) {
                v.multiplicities[0] += 1;
            }
        }
        let report = verify_orthogonality(&table);
        ok &= report.passed;
        match em.format {
            Format::Json => em.emit(
                &ChartabOut {
                    name: &entry.name,
                    order: g.order(),
                    exponent: table.exponent,
                    prime: table.prime,
                    class_sizes: table.class_sizes(),
                    class_rep_orders: &table.rep_orders,
                    characters: &table.irreducibles,
                    orthogonality: report,
                },
                &(),
            )?,
            Format::Csv => {
                for (i, chi) in table.irreducibles.iter().enumerate() {
                    let values = chi
                        .values
                        .iter()
                        .map(|v| format!("{}:{}", v.order, join(&v.multiplicities).replace(';', " ")))
                        .collect::<Vec<_>>()
                        .join(";");
                    em.emit(
                        &(),
                        &ChartabCsv {
                            name: &entry.name,
                            character: i,
                            degree: chi.degree,
                            values,
                        },
                    )?;
                }
            }
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct EdBoundsCsv<'a> {
    name: &'a str,
    order: usize,
    ed_lower: u64,
    ed_upper: u64,
    ed_exact: Option<u64>,
    lower_source: &'a str,
    sylow_bound: u64,
    sylow_prime: Option<u64>,
    contrapositive_bound: Option<u64>,
    roots_of_unity_assumed: bool,
}

impl<'a> From<&'a EdBoundsReport> for EdBoundsCsv<'a> {
    fn from(r: &'a EdBoundsReport) -> Self {
        EdBoundsCsv {
            name: &r.group_name,
            order: r.order,
            ed_lower: r.ed_lower,
            ed_upper: r.ed_upper,
            ed_exact: r.ed_exact,
            lower_source: &r.lower_source,
            sylow_bound: r.sylow_bound,
            sylow_prime: r.sylow_prime,
            contrapositive_bound: r.contrapositive.as_ref().map(|c| c.bound),
            roots_of_unity_assumed: r.roots_of_unity_assumed,
        }
    }
}

fn cmd_edbounds(
    entries: &[CatalogEntry],
    jt: Option<&JordanTable>,
    limits: &Limits,
    fault: bool,
    em: &mut Emitter,
) -> Result<bool, CliError> {
    let mut ok = true;
    for entry in entries {
        let g = build(entry, limits)?;
        let mut report = edbounds_report(&entry.name, &g, jt).map_err(core_err(&entry.name))?;
        if fault {
            report.ed_lower = report.ed_upper + 1;
        }
        ok &= report.consistent();
        em.emit(&report, &EdBoundsCsv::from(&report))?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct EmbedOut<'a> {
    name: &'a str,
    order: usize,
    subgroup: String,
    subgroup_order: usize,
    index: usize,
    characters: usize,
    size: usize,
    rdim: u64,
    rdim_within_bound: bool,
    report: &'a EmbeddingReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    representation: Option<MonomialRepJson>,
}

#[derive(Serialize)]
struct EmbedCsv<'a> {
    name: &'a str,
    order: usize,
    subgroup: &'a str,
    subgroup_order: usize,
    index: usize,
    characters: usize,
    size: usize,
    bound: usize,
    rdim: u64,
    passed: bool,
    failed_check: Option<&'a str>,
}

fn cmd_embed(
    entry: &CatalogEntry,
    choice: SubgroupChoice,
    max_size: usize,
    matrices: bool,
    limits: &Limits,
    fault: bool,
    em: &mut Emitter,
) -> Result<bool, CliError> {
    let err = core_err(&entry.name);
    let g = build(entry, limits)?;
    let (label, a): (String, Subgroup) = match choice {
        SubgroupChoice::Center => ("center".into(), g.center()),
        SubgroupChoice::JordanWitness => (
            "jordan-witness".into(),
            abelian_subgroups_min_index(&g, true, limits.max_jordan_order)
                .map_err(core_err(&entry.name))?
                .witness,
        ),
        SubgroupChoice::Sylow(p) => (format!("sylow:{p}"), g.sylow(p).map_err(core_err(&entry.name))?),
    };
    let chars = minimal_faithful_characters(&g, &a).map_err(core_err(&entry.name))?;
    let mut rep = induce_monomial(&g, &a, &chars, max_size).map_err(core_err(&entry.name))?;
    if fault && rep.images.len() > 1 {
        let m = &mut rep.images[1];
        m.exponents[0] = (m.exponents[0] + 1) % m.root_order.max(2);
        m.root_order = m.root_order.max(2);
    }
    let report = verify_embedding(&g, &rep);
    let rdim = edim_core::rdim(&g).map_err(err)?.total_degree;
    let within = rdim <= report.bound as u64;
    em.emit(
        &EmbedOut {
            name: &entry.name,
            order: g.order(),
            subgroup: label.clone(),
            subgroup_order: a.order(),
            index: g.order() / a.order(),
            characters: rep.characters_used(),
            size: rep.size(),
            rdim,
            rdim_within_bound: within,
            report: &report,
            representation: matrices.then(|| MonomialRepJson::new(&g, &rep)),
        },
        &EmbedCsv {
            name: &entry.name,
            order: g.order(),
            subgroup: &label,
            subgroup_order: a.order(),
            index: g.order() / a.order(),
            characters: rep.characters_used(),
            size: rep.size(),
            bound: report.bound,
            rdim,
            passed: report.passed,
            failed_check: report.failed_check.as_deref(),
        },
    )?;
    Ok(report.passed && within)
}

#[derive(Serialize)]
struct JordanCsv<'a> {
    name: &'a str,
    order: Option<usize>,
    weak_index: Option<usize>,
    strong_index: Option<usize>,
    weak_witness_orders: String,
    strong_witness_orders: String,
    skipped: Option<&'a str>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a CorpusSummary,
}

fn cmd_jordan(entries: &[CatalogEntry], limits: &Limits, em: &mut Emitter) -> Result<bool, CliError> {
    let specs: Vec<_> = entries.iter().map(|e| (e.name.clone(), e.spec.clone())).collect();
    let mut rows = Vec::new();
    let summary = corpus_scan(&specs, limits, |r| rows.push(r.clone()));
    for row in &rows {
        let csv_row = match row {
            CorpusRow::Certificate(c) => JordanCsv {
                name: &c.name,
                order: Some(c.order),
                weak_index: Some(c.weak_index),
                strong_index: Some(c.strong_index),
                weak_witness_orders: join(&c.weak_witness_orders),
                strong_witness_orders: join(&c.strong_witness_orders),
                skipped: None,
            },
            CorpusRow::Skipped(s) => JordanCsv {
                name: &s.name,
                order: None,
                weak_index: None,
                strong_index: None,
                weak_witness_orders: String::new(),
                strong_witness_orders: String::new(),
                skipped: Some(&s.reason),
            },
        };
        em.emit(row, &csv_row)?;
    }
    if em.format == Format::Json {
        em.emit(&SummaryLine { summary: &summary }, &())?;
    }
    Ok(summary.square_relation_held)
}

#[derive(Serialize)]
struct FamilyCsv<'a> {
    index: u64,
    name: &'a str,
    order: Option<usize>,
    rdim: Option<u64>,
    ed_lower_sylow: Option<u64>,
    ed_exact: Option<u64>,
    center_index: Option<usize>,
    h_order: Option<usize>,
    lemma_bound: Option<u64>,
    decomposition: String,
    claim_holds: Option<bool>,
    contrapositive_bound: Option<u64>,
    skipped: Option<&'a str>,
}

fn cmd_family(
    spec: &FamilySpec,
    jt: Option<&JordanTable>,
    limits: &Limits,
    em: &mut Emitter,
) -> Result<bool, CliError> {
    let mut ok = true;
    for entry in family_report(spec, jt, limits) {
        let csv_row = match &entry {
            FamilyEntry::Row(r) => {
                ok &= r.claim.as_ref().is_none_or(|c| c.holds())
                    && r.lemma_bound.is_none_or(|b| r.rdim >= b)
                    && r.ed_lower_sylow <= r.rdim;
                FamilyCsv {
                    index: r.index,
                    name: &r.name,
                    order: Some(r.order),
                    rdim: Some(r.rdim),
                    ed_lower_sylow: Some(r.ed_lower_sylow),
                    ed_exact: r.ed_exact,
                    center_index: Some(r.center_index),
                    h_order: r.h_order,
                    lemma_bound: r.lemma_bound,
                    decomposition: r.claim.as_ref().map_or_else(String::new, |c| {
                        join(&c.decomposition.iter().map(|(q, a)| format!("{q}^{a}")).collect::<Vec<_>>())
                    }),
                    claim_holds: r.claim.as_ref().map(|c| c.holds()),
                    contrapositive_bound: r.contrapositive.as_ref().map(|c: &ContrapositiveBound| c.bound),
                    skipped: None,
                }
            }
            FamilyEntry::Skip(s) => FamilyCsv {
                index: s.index,
                name: &s.name,
                order: None,
                rdim: None,
                ed_lower_sylow: None,
                ed_exact: None,
                center_index: None,
                h_order: None,
                lemma_bound: None,
                decomposition: String::new(),
                claim_holds: None,
                contrapositive_bound: None,
                skipped: Some(&s.skipped),
            },
        };
        em.emit(&entry, &csv_row)?;
    }
    Ok(ok)
}

#[derive(Serialize)]
struct PrimeOut {
    p: u64,
    n: u32,
    q: u64,
}

fn cmd_prime(p: u64, n: u32, limits: &Limits, em: &mut Emitter) -> Result<bool, CliError> {
    let q = dirichlet_prime_with_cap(p, n, limits.prime_cap).map_err(core_err("prime"))?;
    let modulus = p.pow(n);
    let verified = (q - 1) % modulus == 0 && edim_core::arith::is_prime(q);
    let row = PrimeOut { p, n, q };
    em.emit(&row, &row)?;
    Ok(verified)
}
