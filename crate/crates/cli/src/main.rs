mod cache;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modq::registry::{check_catalog, expand, run_registry, series_catalog, Native, Var};
use modq::report::Status;
use modq::{Error, Exponent};

use cache::{Cache, Key};
use render::Format;

#[derive(Parser)]
#[command(name = "modq", version, about = "Exact q-series and modular identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Variable {
    Q,
    Qd,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named series, polynomial or matrix to an inclusive order.
    Expand {
        /// Registry name, e.g. eta, E4, A@N3, phi@333, W@236.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        /// Largest exponent shown (rational), in the chosen variable. Default: 60 in q.
        #[arg(long, value_parser = parse_order)]
        order: Option<Exponent>,
        #[arg(long = "var", value_enum, default_value = "q")]
        variable: Variable,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, env = "MODQ_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        /// Skip the cache for this run.
        #[arg(long)]
        no_cache: bool,
        /// List registry names instead.
        #[arg(long)]
        list: bool,
    },
    /// Run identity checks whose names match a glob; one report per line.
    Verify {
        #[arg(required_unless_present = "list")]
        pattern: Option<String>,
        /// Override every check's default order, read in that check's own variable.
        #[arg(long, value_parser = parse_order)]
        order: Option<Exponent>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include wall-clock time per check.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        list: bool,
    },
    /// Inspect or empty the expand cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[arg(long, env = "MODQ_CACHE_DIR", global = true)]
        cache_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    List,
    Clear,
    Path,
}

fn parse_order(s: &str) -> Result<Exponent, String> {
    let r: Exponent = s.trim().parse().map_err(|_| format!("not a rational number: {s:?}"))?;
    if r <= Exponent::from_integer(0) {
        return Err("order must be positive".to_string());
    }
    Ok(r)
}

/// 2 for usage problems, 3 for requests beyond what can be computed.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::UnknownName(_) | Error::NoDiscVariable(_) | Error::Parse(_) => 2,
        _ => 3,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("modq: {e}");
    ExitCode::from(error_code(e))
}

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn cache_for(dir: Option<PathBuf>) -> Cache {
    Cache::new(dir.unwrap_or_else(cache::default_dir))
}

fn cmd_expand(
    name: &str,
    order: Option<Exponent>,
    variable: Variable,
    format: Format,
    cache_dir: Option<PathBuf>,
    no_cache: bool,
) -> ExitCode {
    let var = match variable {
        Variable::Q => Var::Q,
        Variable::Qd => Var::Qd,
    };
    let var_name = match var {
        Var::Q => "q",
        Var::Qd => "qd",
    };
    let order = match order {
        Some(o) => o,
        None => {
            let entry = match modq::registry::find_series(name) {
                Ok(e) => e,
                Err(e) => return fail(&e),
            };
            match (entry.native, var) {
                (Native::Qd(orb), Var::Qd) => Exponent::from_integer(60 * orb.cover()),
                _ => Exponent::from_integer(60),
            }
        }
    };
    let key = Key {
        name: name.to_string(),
        order: order.to_string(),
        variable: var_name.to_string(),
        format: format!("{format:?}").to_lowercase(),
    };
    let cache = (!no_cache).then(|| cache_for(cache_dir));
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        eprintln!("modq: cache hit for {name} (order {order}, {var_name})");
        return emit(&hit);
    }
    let value = match expand(name, order, var) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let text = match format {
        Format::Json => render::expand_json(name, var_name, order, &value),
        Format::Table => render::expand_table(name, var_name, order, &value),
    };
    if let Some(c) = &cache {
        if let Err(e) = c.put(&key, &text) {
            eprintln!("modq: cache write to {} failed: {e}", c.dir().display());
        }
    }
    emit(&text)
}

fn list_series() -> ExitCode {
    let mut out = String::new();
    for e in series_catalog() {
        let native = match e.native {
            Native::Q => "q".to_string(),
            Native::Qd(orb) => format!("qd (q = qd^{})", orb.cover()),
        };
        out.push_str(&format!("{}\t{native}\n", e.name));
    }
    emit(&out)
}

fn list_checks() -> ExitCode {
    let mut out = String::new();
    for c in check_catalog() {
        let var = match c.variable {
            Var::Q => "q",
            Var::Qd => "qd",
        };
        out.push_str(&format!("{}\t{} in {var}\n", c.name, c.default_order));
    }
    emit(&out)
}

fn cmd_verify(pattern: &str, order: Option<Exponent>, jobs: u32, format: Format, timings: bool) -> ExitCode {
    let reports = match run_registry(pattern, order, jobs as usize) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let text = match format {
        Format::Json => reports.iter().map(|r| r.to_json(timings) + "\n").collect(),
        Format::Table => render::report_table(&reports, timings),
    };
    let code = emit(&text);
    if code != ExitCode::SUCCESS {
        return code;
    }
    if reports.iter().any(|r| r.status == Status::Mismatch) {
        ExitCode::from(1)
    } else if reports.iter().any(|r| r.status == Status::Insufficient) {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_cache(action: CacheAction, dir: Option<PathBuf>) -> ExitCode {
    let cache = cache_for(dir);
    let result = match action {
        CacheAction::Path => Ok(format!("{}\n", cache.dir().display())),
        CacheAction::List => cache.list().map(|v| {
            v.iter()
                .map(|(k, bytes)| format!("{}\t{}\t{}\t{}\t{bytes}\n", k.name, k.variable, k.order, k.format))
                .collect()
        }),
        CacheAction::Clear => cache.clear().map(|n| format!("removed {n} entries\n")),
    };
    match result {
        Ok(text) => emit(&text),
        Err(e) => {
            eprintln!("modq: cache at {}: {e}", cache.dir().display());
            ExitCode::from(3)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Expand { list: true, .. } => list_series(),
        Command::Expand { name, order, variable, format, cache_dir, no_cache, .. } => {
            cmd_expand(&name.expect("required by clap"), order, variable, format, cache_dir, no_cache)
        }
        Command::Verify { list: true, .. } => list_checks(),
        Command::Verify { pattern, order, jobs, format, timings, .. } => {
            cmd_verify(&pattern.expect("required by clap"), order, jobs, format, timings)
        }
        Command::Cache { action, cache_dir } => cmd_cache(action, cache_dir),
    }
}
