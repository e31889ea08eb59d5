//! bhlab: compute Bernoulli-Hurwitz number families and verify their
//! congruences.
//!
//! Exit codes: 0 on success (and all-pass verification), 1 on check
//! failures or runtime errors, 2 on usage errors.

mod cache;
mod descriptor;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bhlab_core::congruence::{
    hurwitz_denominator_law, kummer_sweep, template_sweep, universal_von_staudt_sweep,
    von_staudt_sweep, CongruenceTemplate,
};
use bhlab_core::families::{build_table, default_normalization, normalization_tags, ExportedTable};
use bhlab_core::{CurveSpec, Family, Report};

use cache::CacheStore;
use descriptor::{sha256_hex, RequestDescriptor};

#[derive(Parser)]
#[command(name = "bhlab", version, about = "Exact Bernoulli-Hurwitz number laboratory")]
struct Cli {
    /// Compute everything fresh, neither reading nor writing the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads for sweeps (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a table of numbers and print it (default format: text).
    Compute(TableArgs),
    /// Compute a table of numbers for export (default format: json).
    Export(TableArgs),
    /// Run a congruence check and report every cell.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Evaluate a congruence template file over a (p, n) grid.
    Sweep(SweepArgs),
    /// Inspect or empty the result cache.
    Cache {
        #[command(subcommand)]
        action: CacheCommand,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Number family: bernoulli, hurwitz, gbh, or universal.
    #[arg(long)]
    family: String,

    /// Curve exponents "a,b" (gbh only).
    #[arg(long)]
    curve: Option<String>,

    /// Normalization tag; defaults to the family's first registered tag.
    #[arg(long)]
    normalization: Option<String>,

    /// Largest index to compute.
    #[arg(long, default_value_t = 20)]
    max_n: u64,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Bernoulli denominators against the sum of 1/p over (p-1) | n.
    VonStaudt {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
    },
    /// Classical congruences B_m/m = B_n/n mod p for m = n mod (p-1).
    Kummer {
        #[arg(long, default_value_t = 50)]
        p_max: u64,
        #[arg(long, default_value_t = 60)]
        n_max: u64,
    },
    /// Fractional parts of universal Bernoulli polynomials.
    UniversalVonStaudt {
        #[arg(long, default_value_t = 16)]
        max_n: u64,
    },
    /// Denominator support law for the quarter-period numbers.
    HurwitzSupport {
        #[arg(long, default_value_t = 40)]
        max_m: u64,
    },
    /// A congruence template loaded from a JSON file.
    Template {
        file: PathBuf,
        #[arg(long, default_value_t = 13)]
        p_max: u64,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Template JSON file to evaluate.
    #[arg(long)]
    template: PathBuf,

    #[arg(long, default_value_t = 13)]
    p_max: u64,

    #[arg(long, default_value_t = 30)]
    n_max: u64,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CacheCommand {
    /// List cache entries.
    Ls,
    /// Remove every cache entry.
    Clear,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Csv,
    Text,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<bhlab_core::Error> for Failure {
    fn from(e: bhlab_core::Error) -> Failure {
        match e {
            bhlab_core::Error::InvalidRequest(_)
            | bhlab_core::Error::InvalidCurve { .. }
            | bhlab_core::Error::Template(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    let store = CacheStore::open(cli.no_cache);
    let result = match cli.command {
        Command::Compute(args) => table_command(&args, &store, Format::Text),
        Command::Export(args) => table_command(&args, &store, Format::Json),
        Command::Verify { check } => verify_command(check),
        Command::Sweep(args) => sweep_command(&args, &store),
        Command::Cache { action } => cache_command(action, &store),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
    }
}

fn table_command(
    args: &TableArgs,
    store: &CacheStore,
    default_format: Format,
) -> Result<ExitCode, Failure> {
    let family: Family = args.family.parse()?;
    let curve = args
        .curve
        .as_deref()
        .map(|text| text.parse::<CurveSpec>())
        .transpose()?;
    match (family, curve) {
        (Family::Gbh, None) => {
            return Err(Failure::Usage("family gbh needs --curve a,b".into()));
        }
        (f, Some(_)) if f != Family::Gbh => {
            return Err(Failure::Usage(format!("family {} does not take a curve", f)));
        }
        _ => {}
    }
    let tag = args
        .normalization
        .as_deref()
        .unwrap_or_else(|| default_normalization(family));
    if !normalization_tags(family).contains(&tag) {
        return Err(Failure::Usage(format!(
            "family {} has no normalization {:?} (expected one of {:?})",
            family,
            tag,
            normalization_tags(family)
        )));
    }

    let descriptor =
        RequestDescriptor::table(family.name(), curve.map(|c| c.pair()), tag, args.max_n);
    let exported = obtain_table(store, &descriptor, family, curve, tag, args.max_n)?;
    let format = args.format.unwrap_or(default_format);
    emit(&render(&exported, format), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

/// Exact cache hit, else slice of a wider cached table, else fresh build.
fn obtain_table(
    store: &CacheStore,
    descriptor: &RequestDescriptor,
    family: Family,
    curve: Option<CurveSpec>,
    tag: &str,
    max_n: u64,
) -> Result<ExportedTable, Failure> {
    let key = descriptor.key();
    if let Some(entry) = store.get(&key) {
        match ExportedTable::from_json(&entry.payload) {
            Ok(table) => return Ok(table),
            Err(e) => eprintln!(
                "warning: cache entry {} does not hold a table: {}; recomputing",
                key, e
            ),
        }
    }

    let curve_pair = curve.map(|c| c.pair());
    let mut candidates: Vec<(u64, String, ExportedTable)> = Vec::new();
    for entry in store.entries() {
        if entry.key == key {
            continue;
        }
        let Ok(table) = ExportedTable::from_json(&entry.payload) else {
            continue;
        };
        if table.family != family.name() || table.curve != curve_pair || table.normalization != tag
        {
            continue;
        }
        match table.max_index() {
            Some(top) if top >= max_n => candidates.push((top, entry.key, table)),
            _ => {}
        }
    }
    candidates.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    if let Some((_, _, wider)) = candidates.into_iter().next() {
        let sliced = wider.truncated(max_n);
        store.put(&key, sliced.to_json());
        return Ok(sliced);
    }

    let exported = build_table(family, curve, Some(tag), max_n)?.to_exported();
    store.put(&key, exported.to_json());
    Ok(exported)
}

fn render(table: &ExportedTable, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    }
}

fn emit(content: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {}", path.display(), e))),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn verify_command(check: VerifyCommand) -> Result<ExitCode, Failure> {
    let report = match check {
        VerifyCommand::VonStaudt { max_n } => von_staudt_sweep(max_n),
        VerifyCommand::Kummer { p_max, n_max } => kummer_sweep(p_max, n_max),
        VerifyCommand::UniversalVonStaudt { max_n } => universal_von_staudt_sweep(max_n),
        VerifyCommand::HurwitzSupport { max_m } => hurwitz_denominator_law(max_m)?,
        VerifyCommand::Template { file, p_max, n_max } => {
            let template = load_template(&file)?;
            template_sweep(&template, p_max, n_max)?
        }
    };
    emit_report(&report, None)
}

fn sweep_command(args: &SweepArgs, store: &CacheStore) -> Result<ExitCode, Failure> {
    let text = fs::read_to_string(&args.template).map_err(|e| {
        Failure::Usage(format!("cannot read template {}: {}", args.template.display(), e))
    })?;
    let template = CongruenceTemplate::from_json(&text)?;
    let descriptor = RequestDescriptor::sweep(&sha256_hex(text.as_bytes()), args.p_max, args.n_max);
    let key = descriptor.key();

    let mut report = None;
    if let Some(entry) = store.get(&key) {
        match Report::from_json(&entry.payload) {
            Ok(r) => report = Some(r),
            Err(e) => eprintln!(
                "warning: cache entry {} does not hold a report: {}; recomputing",
                key, e
            ),
        }
    }
    let report = match report {
        Some(r) => r,
        None => {
            let r = template_sweep(&template, args.p_max, args.n_max)?;
            store.put(&key, r.to_json());
            r
        }
    };
    emit_report(&report, args.out.as_deref())
}

fn load_template(path: &Path) -> Result<CongruenceTemplate, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read template {}: {}", path.display(), e)))?;
    Ok(CongruenceTemplate::from_json(&text)?)
}

fn emit_report(report: &Report, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let mut json = report.to_json();
    json.push('\n');
    emit(&json, out)?;
    eprintln!(
        "{}: {} pass, {} fail, {} skip",
        report.template_id, report.summary.pass, report.summary.fail, report.summary.skip
    );
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cache_command(action: CacheCommand, store: &CacheStore) -> Result<ExitCode, Failure> {
    // cache inspection works even under --no-cache
    let store = CacheStore::at(store.dir().to_path_buf());
    match action {
        CacheCommand::Ls => {
            for entry in store.entries() {
                println!(
                    "{}  {}  {} bytes",
                    entry.key,
                    entry.engine_version,
                    entry.payload.len()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        CacheCommand::Clear => {
            let removed = store.clear().map_err(|e| {
                Failure::Runtime(format!("cannot clear {}: {}", store.dir().display(), e))
            })?;
            eprintln!("removed {} entries from {}", removed, store.dir().display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
