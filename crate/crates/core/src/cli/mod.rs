//! Command-line front end of the `casimir` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (or an I/O error occurs), 2 on usage errors.

mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::cache::CharacterCache;
use crate::cartan::CartanType;
use crate::character::{
    binomial, decompose_character_with, exterior_power_characters, krho_box_character,
    DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, ideal_counts_by_size, ideal_weight_sum};
use crate::root_system::RootSystem;
use crate::spectrum::{
    big_number, spectrum_table, verify_theorems, CheckStatus, SpectrumConfig, Strategy,
    VerificationReport,
};
use crate::weight::Weight;
use crate::Rational;

pub use render::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "casimir",
    version,
    about = "Maximal Casimir eigenvalues on exterior powers of simple Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Comma-separated Cartan types, e.g. A2,B3,G2
    #[arg(long = "type", global = true, value_delimiter = ',', value_parser = parse_type)]
    types: Vec<CartanType>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Largest number of subsets / exterior-power terms to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1000..))]
    budget: u64,

    /// Directory for cached irreducible characters
    #[arg(long, global = true, env = "CASIMIR_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads [default: available cores]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    /// Include weight lists and ideal memberships
    #[arg(long, global = true)]
    full: bool,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// m_i and M_i for every degree i
    Spectrum,
    /// Ideal counts per size, or every ideal of size k
    Ideals {
        #[arg(long)]
        k: Option<usize>,
    },
    /// Weights of V_{k rho} as a box product, checked against Freudenthal
    Krho {
        #[arg(long)]
        k: u32,
    },
    /// Machine-check every claim about m_i and M_i [default types: rank <= 3]
    Verify,
    /// Irreducible components of the exterior powers of g
    DecomposeExterior {
        #[arg(long)]
        i: Option<usize>,
    },
}

fn parse_type(s: &str) -> std::result::Result<CartanType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Ideals { k: Option<usize> },
    Krho { k: u32 },
    Verify,
    DecomposeExterior { i: Option<usize> },
}

/// A validated invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub cartan_types: Vec<CartanType>,
    pub command: Command,
    pub format: Format,
    pub budget: u64,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
    pub full: bool,
}

impl RunConfig {
    pub fn try_parse_from<I, T>(args: I) -> std::result::Result<RunConfig, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let command = match cli.command {
            CommandArgs::Spectrum => Command::Spectrum,
            CommandArgs::Ideals { k } => Command::Ideals { k },
            CommandArgs::Krho { k } => Command::Krho { k },
            CommandArgs::Verify => Command::Verify,
            CommandArgs::DecomposeExterior { i } => Command::DecomposeExterior { i },
        };
        let mut cartan_types = cli.common.types;
        if cartan_types.is_empty() {
            if command == Command::Verify {
                cartan_types = CartanType::all_up_to_rank(3);
            } else {
                return Err(Cli::command().error(
                    ErrorKind::MissingRequiredArgument,
                    "--type is required for this command",
                ));
            }
        }
        let jobs = cli.common.jobs.map(|j| j as usize).unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
        Ok(RunConfig {
            cartan_types,
            command,
            format: cli.common.format,
            budget: cli.common.budget,
            cache_dir: cli.common.cache_dir,
            jobs,
            full: cli.common.full,
        })
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn main_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            }
        }
    }
}

/// One type's worth of output.
struct Section {
    label: String,
    title: String,
    json: Value,
    table: Table,
    failed: bool,
    messages: Vec<String>,
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cache = match &config.cache_dir {
        Some(dir) => match CharacterCache::on_disk(dir) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_FAILURE;
            }
        },
        None => CharacterCache::in_memory(),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_FAILURE;
        }
    };

    let results: Vec<Result<(Section, Option<VerificationReport>)>> = pool.install(|| {
        config
            .cartan_types
            .par_iter()
            .map(|&t| section(config, &cache, t))
            .collect()
    });

    let mut code = EXIT_OK;
    let mut sections = Vec::new();
    let mut reports = Vec::new();
    for res in results {
        match res {
            Ok((s, report)) => {
                for m in &s.messages {
                    let _ = writeln!(err, "{m}");
                }
                if s.failed {
                    code = code.max(EXIT_FAILURE);
                }
                sections.push(s);
                reports.extend(report);
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                code = code.max(if is_usage(&e) { EXIT_USAGE } else { EXIT_FAILURE });
            }
        }
    }

    let text = match config.format {
        Format::Json => {
            // one type per line
            let items: Vec<String> = sections.iter().map(|s| s.json.to_string()).collect();
            format!("[\n{}\n]\n", items.join(",\n"))
        }
        Format::Csv => {
            let tables: Vec<(String, &Table)> =
                sections.iter().map(|s| (s.label.clone(), &s.table)).collect();
            render::csv_document(&tables)
        }
        Format::Md if config.command == Command::Verify => verify_matrix(&reports).to_markdown(),
        Format::Md => sections
            .iter()
            .map(|s| format!("## {}\n\n{}", s.title, s.table.to_markdown()))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_FAILURE;
    }
    code
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownSeries(_)
            | Error::BadTypeString(_)
            | Error::InvalidRank { .. }
            | Error::BudgetExceeded { .. }
            | Error::DegreeOutOfRange { .. }
            | Error::IdealSizeOutOfRange { .. }
    )
}

fn section(
    config: &RunConfig,
    cache: &CharacterCache,
    t: CartanType,
) -> Result<(Section, Option<VerificationReport>)> {
    let rs = RootSystem::new(t);
    let spectrum_config = SpectrumConfig {
        budget: config.budget,
    };
    Ok(match config.command {
        Command::Spectrum => (spectrum_section(&rs, &spectrum_config, cache, config.full)?, None),
        Command::Ideals { k } => (ideals_section(&rs, k, config.full)?, None),
        Command::Krho { k } => (krho_section(&rs, k, config.budget, cache, config.full)?, None),
        Command::Verify => {
            let report = verify_theorems(&rs, &spectrum_config, cache)?;
            (verify_section(&rs, &report, config.full), Some(report))
        }
        Command::DecomposeExterior { i } => {
            (decompose_section(&rs, i, config.budget, cache, config.full)?, None)
        }
    })
}

fn header(rs: &RootSystem) -> String {
    let n = rs.dimension();
    format!(
        "{}: n = {n}, r = {}, l = {}, n/3 = {}",
        rs.cartan_type(),
        rs.num_positive_roots(),
        rs.rank(),
        Rational::new(n as i64, 3)
    )
}

fn spectrum_section(
    rs: &RootSystem,
    config: &SpectrumConfig,
    cache: &CharacterCache,
    full: bool,
) -> Result<Section> {
    let t = rs.cartan_type();
    let rows = match spectrum_table(rs, config, cache) {
        Ok(rows) => rows,
        Err(e @ Error::StrategyDisagreement { .. }) => {
            return Ok(Section {
                label: t.to_string(),
                title: header(rs),
                json: json!({ "type": t, "error": e.to_string() }),
                table: Table::new(&["i", "m", "components", "dim", "strategies"]),
                failed: true,
                messages: vec![format!("{t}: {e}")],
            })
        }
        Err(e) => return Err(e),
    };

    let mut headers = vec!["i", "m", "components", "dim", "strategies"];
    if full {
        headers.push("ideals");
    }
    let mut table = Table::new(&headers);
    let mut json_rows = Vec::new();
    for row in &rows {
        let mut cells = vec![
            row.i.to_string(),
            row.m.to_string(),
            render::components(&row.highest_weights, ";"),
            row.eigenspace_dim.to_string(),
            render::joined(&row.strategies, ";"),
        ];
        let mut v = row.to_json(rs);
        if full {
            let ideals: Vec<Value> = row.ideals.iter().map(|a| a.to_json(rs)).collect();
            cells.push(render::joined(
                row.ideals.iter().map(|a| a.to_json(rs)),
                ";",
            ));
            let obj = v.as_object_mut().expect("row is an object");
            obj.insert("ideals".into(), Value::Array(ideals));
            if let Some(subsets) = &row.argmax_subsets {
                let labels: Vec<Vec<String>> = subsets
                    .iter()
                    .map(|s| s.iter().map(|l| l.to_string()).collect())
                    .collect();
                obj.insert("argmax".into(), json!(labels));
            }
        }
        table.push(cells);
        json_rows.push(v);
    }
    Ok(Section {
        label: t.to_string(),
        title: header(rs),
        json: json!({
            "type": t,
            "n": rs.dimension(),
            "r": rs.num_positive_roots(),
            "l": rs.rank(),
            "rows": json_rows,
        }),
        table,
        failed: false,
        messages: Vec::new(),
    })
}

fn ideals_section(rs: &RootSystem, k: Option<usize>, full: bool) -> Result<Section> {
    let t = rs.cartan_type();
    let Some(k) = k else {
        let counts = ideal_counts_by_size(rs);
        let total: usize = counts.iter().sum();
        let mut table = Table::new(&["size", "count"]);
        for (size, c) in counts.iter().enumerate() {
            table.push(vec![size.to_string(), c.to_string()]);
        }
        table.push(vec!["total".into(), total.to_string()]);
        return Ok(Section {
            label: t.to_string(),
            title: format!("{t}: ad-nilpotent ideals by size"),
            json: json!({ "type": t, "r": rs.num_positive_roots(), "counts": counts, "total": total }),
            table,
            failed: false,
            messages: Vec::new(),
        });
    };

    let ideals = enumerate_ideals(rs, Some(k))?;
    let scored: Vec<(Weight, Rational)> = ideals
        .iter()
        .map(|a| {
            let w = ideal_weight_sum(rs, a);
            let c = rs.casimir_eigenvalue(&w);
            (w, c)
        })
        .collect();
    let best = scored.iter().map(|(_, c)| *c).max().expect("some ideal of each size");

    let mut headers = vec!["#", "sum", "cas", "achieving"];
    if full {
        headers.push("members");
    }
    let mut table = Table::new(&headers);
    let mut items = Vec::new();
    for (idx, (a, (w, c))) in ideals.iter().zip(&scored).enumerate() {
        let achieving = *c == best;
        let mut cells = vec![
            (idx + 1).to_string(),
            w.to_string(),
            c.to_string(),
            if achieving { "yes" } else { "" }.to_string(),
        ];
        let mut item = Map::new();
        item.insert("sum".into(), json!(w));
        item.insert("cas".into(), json!(c.to_string()));
        item.insert("achieving".into(), json!(achieving));
        if full {
            let members = a.to_json(rs);
            cells.push(members.to_string());
            item.insert("members".into(), members);
        }
        table.push(cells);
        items.push(Value::Object(item));
    }
    Ok(Section {
        label: t.to_string(),
        title: format!("{t}: ideals of size {k}, maximal Cas = {best}"),
        json: json!({ "type": t, "k": k, "m": best.to_string(), "ideals": items }),
        table,
        failed: false,
        messages: Vec::new(),
    })
}

fn krho_section(
    rs: &RootSystem,
    k: u32,
    budget: u64,
    cache: &CharacterCache,
    full: bool,
) -> Result<Section> {
    let t = rs.cartan_type();
    let r = rs.num_positive_roots();
    let expected = (k as u128 + 1).checked_pow(r as u32);
    match expected {
        Some(m) if m <= budget as u128 => {}
        _ => {
            return Err(Error::BudgetExceeded {
                what: "box character of V_{k rho}",
                needed: expected.unwrap_or(u128::MAX),
                budget,
                hint: "",
            })
        }
    }
    let expected = expected.expect("checked above");
    let lambda = rs.rho().scale(k as i32);
    let boxed = krho_box_character(rs, k);
    let freudenthal = cache.irreducible(rs, &lambda)?;
    let equal = boxed == *freudenthal;
    let mass = boxed.total_mass();
    let verdict = if equal { "EQUAL" } else { "DIFFERENT" };

    let mut headers = vec!["k", "lambda", "mass", "expected", "distinct", "verdict"];
    if full {
        headers.push("weights");
    }
    let mut table = Table::new(&headers);
    let mut cells = vec![
        k.to_string(),
        lambda.to_string(),
        mass.to_string(),
        expected.to_string(),
        boxed.len().to_string(),
        verdict.to_string(),
    ];
    let mut v = json!({
        "type": t,
        "k": k,
        "lambda": lambda,
        "mass": mass,
        "expected_mass": expected,
        "distinct_weights": boxed.len(),
        "verdict": verdict,
    });
    if full {
        let entries = boxed.sorted_entries();
        cells.push(render::components(&entries, ";"));
        v.as_object_mut()
            .expect("object")
            .insert("weights".into(), json!(entries));
    }
    table.push(cells);
    let failed = !equal || mass != expected;
    Ok(Section {
        label: t.to_string(),
        title: format!("{t}: weights of V_{{{k} rho}}"),
        json: v,
        table,
        failed,
        messages: if failed {
            vec![format!("{t}: box product and Freudenthal differ for k = {k}")]
        } else {
            Vec::new()
        },
    })
}

fn ideal_only_degrees(report: &VerificationReport) -> Vec<usize> {
    report
        .rows
        .iter()
        .filter(|row| row.strategies.len() == 1 && row.strategies.contains(&Strategy::Ideal))
        .map(|row| row.i)
        .collect()
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "skipped",
    }
}

fn verify_section(rs: &RootSystem, report: &VerificationReport, full: bool) -> Section {
    let t = rs.cartan_type();
    let mut table = Table::new(&["check", "status", "detail"]);
    for c in &report.checks {
        table.push(vec![
            c.id.to_string(),
            status_word(c.status).to_string(),
            c.detail.clone(),
        ]);
    }
    let mut v = report.to_json();
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("ideal_only_degrees".into(), json!(ideal_only_degrees(report)));
    if full {
        let rows: Vec<Value> = report.rows.iter().map(|row| row.to_json(rs)).collect();
        obj.insert("rows".into(), Value::Array(rows));
    }
    let messages = report
        .failures()
        .map(|c| format!("{t}: {} failed ({}): {}", c.id, c.claim, c.detail))
        .collect();
    Section {
        label: t.to_string(),
        title: header(rs),
        json: v,
        table,
        failed: !report.passed(),
        messages,
    }
}

/// Checks down, types across.
fn verify_matrix(reports: &[VerificationReport]) -> Table {
    let mut headers = vec!["check".to_string()];
    headers.extend(reports.iter().map(|r| r.cartan_type.to_string()));
    let mut table = Table::new(&headers);

    let mut ids: Vec<&'static str> = Vec::new();
    for r in reports {
        for c in &r.checks {
            if !ids.contains(&c.id) {
                ids.push(c.id);
            }
        }
    }
    for id in ids {
        let mut row = vec![id.to_string()];
        row.extend(
            reports
                .iter()
                .map(|r| r.check(id).map_or("n/a", |c| status_word(c.status)).to_string()),
        );
        table.push(row);
    }
    let mut row = vec!["observed p".to_string()];
    row.extend(
        reports
            .iter()
            .map(|r| r.observed_p.map_or("-".to_string(), |p| p.to_string())),
    );
    table.push(row);
    let mut row = vec!["IDEAL-only degrees".to_string()];
    row.extend(reports.iter().map(|r| {
        let d = ideal_only_degrees(r);
        if d.is_empty() {
            "none".to_string()
        } else {
            render::joined(d, ",")
        }
    }));
    table.push(row);
    let mut row = vec!["all pass".to_string()];
    row.extend(
        reports
            .iter()
            .map(|r| if r.passed() { "yes" } else { "NO" }.to_string()),
    );
    table.push(row);
    table
}

fn decompose_section(
    rs: &RootSystem,
    degree: Option<usize>,
    budget: u64,
    cache: &CharacterCache,
    full: bool,
) -> Result<Section> {
    let t = rs.cartan_type();
    let n = rs.dimension();
    let in_budget = |i: usize| binomial(n, i) <= budget as u128;
    let degrees: Vec<usize> = match degree {
        Some(i) if i > n => return Err(Error::DegreeOutOfRange { degree: i, max: n }),
        Some(i) if !in_budget(i) => {
            return Err(Error::BudgetExceeded {
                what: "exterior power character",
                needed: binomial(n, i),
                budget,
                hint: "",
            })
        }
        Some(i) => vec![i],
        None => (0..=n).collect(),
    };
    let top = (0..=n / 2).rev().find(|&i| in_budget(i)).unwrap_or(0);
    let lower = exterior_power_characters(rs, top);

    let mut table = Table::new(&["i", "weight", "mult", "dim", "cas", "max"]);
    let mut json_degrees = Vec::new();
    let mut skipped = Vec::new();
    for i in degrees {
        let ch = if i <= top {
            lower[i].clone()
        } else if n - i <= top {
            lower[n - i].dual()
        } else {
            skipped.push(i);
            continue;
        };
        let dec = decompose_character_with(rs, &ch, cache)?;
        let mut comps: Vec<(Weight, u64, Rational)> = dec
            .components()
            .iter()
            .map(|(w, &m)| (w.clone(), m, rs.casimir_eigenvalue(w)))
            .collect();
        comps.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| a.0.cmp(&b.0)));
        let best = comps[0].2;
        let entries = full.then(|| ch.sorted_entries());
        let mut json_comps = Vec::new();
        for (w, m, c) in &comps {
            let dim = rs.weyl_dim(w)?;
            table.push(vec![
                i.to_string(),
                w.to_string(),
                m.to_string(),
                dim.to_string(),
                c.to_string(),
                if *c == best { "yes" } else { "" }.to_string(),
            ]);
            json_comps.push(json!({
                "weight": w,
                "mult": m,
                "dim": big_number(&dim),
                "cas": c.to_string(),
                "max": *c == best,
            }));
        }
        let mut v = json!({
            "i": i,
            "dim": binomial(n, i),
            "components": json_comps,
        });
        if let Some(entries) = entries {
            v.as_object_mut()
                .expect("object")
                .insert("weights".into(), json!(entries));
        }
        json_degrees.push(v);
    }
    let mut title = format!("{t}: exterior powers of g (n = {n})");
    if !skipped.is_empty() {
        title.push_str(&format!(
            ", degrees over budget: {}",
            render::joined(&skipped, ",")
        ));
    }
    Ok(Section {
        label: t.to_string(),
        title,
        json: json!({
            "type": t,
            "n": n,
            "degrees": json_degrees,
            "skipped_degrees": skipped,
        }),
        table,
        failed: false,
        messages: Vec::new(),
    })
}
