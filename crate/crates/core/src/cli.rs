//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit code:
//! 0 success, 1 verification failure, 2 usage, input or parse error,
//! 3 capacity limit or indeterminate isomorphism search.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::class_ring::{chi_k_gset, ClassRing, RElement};
use crate::error::{Error, Result};
use crate::groups::{indecomposable_factors, Registry, RegistrySnapshot};
use crate::io::{load_group, load_gset};
use crate::series::{ExponentSign, TruncSeries};
use crate::verify::{run_suite_with, SuiteOptions};

#[derive(Debug, Parser)]
#[command(name = "kfgr", version, about = "Classes of finite G-sets, inertia maps and power-structure identities")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Registry snapshot to replay before and save after the command, so class
    /// ids stay stable across invocations.
    #[arg(long, global = true, value_name = "FILE")]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group commands.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// G-set commands.
    Gset {
        #[command(subcommand)]
        command: GsetCommand,
    },
    /// Higher-order Euler characteristic chi^(k) of a G-set.
    Chi {
        #[arg(long = "order", short = 'k')]
        order: usize,
        file: PathBuf,
    },
    /// Universal Euler characteristic of a G-set.
    ChiUn { file: PathBuf },
    /// Kapranov zeta function of a G-set.
    Zeta {
        #[arg(long)]
        trunc: usize,
        file: PathBuf,
    },
    /// Configuration-space series of a G-set.
    ConfigLambda {
        #[arg(long)]
        trunc: usize,
        file: PathBuf,
    },
    /// Iterated inertia map alpha_r applied to a G-set class or a generator T[G].
    Alpha {
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        pow: usize,
        /// G-set file, or a group (file or builtin name) standing for T[G].
        source: String,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, default_value_t = 1500)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exponent sign of the product formula checked by the macdonald suite.
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        sign: i64,
        /// Random cases per randomized battery.
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Structure summary of a group given as a file or builtin name.
    Show { src: String },
}

#[derive(Debug, Subcommand)]
enum GsetCommand {
    /// Class of a G-set in the class ring.
    Class { file: PathBuf },
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_limit() {
                3
            } else {
                2
            }
        }
    }
}

fn load_registry(path: Option<&Path>) -> Result<Registry> {
    match path {
        Some(p) if p.is_file() => {
            let snap: RegistrySnapshot = serde_json::from_str(&std::fs::read_to_string(p)?)?;
            Registry::replay(&snap)
        }
        _ => Ok(Registry::new()),
    }
}

fn emit(out: &mut dyn Write, json_mode: bool, text: String, value: Value) -> Result<()> {
    if json_mode {
        writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn series_output(ring: &ClassRing, s: &TruncSeries<RElement>) -> (String, Value) {
    let euler: Vec<String> = s.coeffs().iter().map(|c| ring.euler0(c).to_string()).collect();
    let text = format!("{}\neuler0: {}", s.render(ring), euler.join(", "));
    let mut v = s.to_json(ring);
    v["euler0"] = json!(s.coeffs().iter().map(|c| crate::series::bigint_json(&ring.euler0(c))).collect::<Vec<_>>());
    (text, v)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let registry = Arc::new(load_registry(cli.registry.as_deref())?);
    let ring = ClassRing::new(registry.clone());
    let j = cli.json;
    let code = match &cli.command {
        Command::Group {
            command: GroupCommand::Show { src },
        } => {
            let g = load_group(src)?;
            let id = ring.class_id(&g)?;
            let classes = g.conjugacy_classes();
            let sizes: Vec<usize> = (0..classes.len()).map(|c| classes.class_size(c)).collect();
            let factors: Option<Vec<String>> = indecomposable_factors(&registry, &g)
                .ok()
                .map(|f| f.iter().map(|&i| registry.name(i)).collect());
            let name = registry.name(id);
            // the permutations a G-set file must list, one per generator, in this order
            let generators = g.provenance().map(|p| p.generators.clone());
            let text = format!(
                "name: {name}\nclass: {id}\norder: {}\nabelian: {}\nconjugacy classes: {} (sizes {:?})\ncenter order: {}\nderived subgroup order: {}\nindecomposable factors: {}\ngenerators: {}",
                g.order(),
                g.is_abelian(),
                classes.len(),
                sizes,
                g.center().len(),
                g.derived_subgroup().len(),
                factors.as_ref().map(|f| f.join(", ")).unwrap_or_else(|| "not computed (order above cap)".into()),
                generators.as_ref().map(|gs| format!("{gs:?}")).unwrap_or_else(|| "table only".into()),
            );
            let value = json!({
                "name": name,
                "class": id.0,
                "order": g.order(),
                "abelian": g.is_abelian(),
                "class_sizes": sizes,
                "center_order": g.center().len(),
                "derived_order": g.derived_subgroup().len(),
                "factors": factors,
                "generators": generators,
            });
            emit(out, j, text, value)?;
            0
        }
        Command::Gset {
            command: GsetCommand::Class { file },
        } => {
            let x = load_gset(file)?;
            let a = ring.class_of(&x)?;
            emit(out, j, ring.render_element(&a), ring.element_json(&a))?;
            0
        }
        Command::Chi { order, file } => {
            let x = load_gset(file)?;
            let v = chi_k_gset(&x, *order);
            emit(out, j, v.to_string(), json!({ "k": order, "chi": crate::series::bigint_json(&v) }))?;
            0
        }
        Command::ChiUn { file } => {
            let x = load_gset(file)?;
            let a = ring.chi_un(&x)?;
            emit(out, j, ring.render_element(&a), ring.element_json(&a))?;
            0
        }
        Command::Zeta { trunc, file } => {
            let x = load_gset(file)?;
            let s = ring.kapranov_zeta(&ring.class_of(&x)?, *trunc)?;
            let (text, value) = series_output(&ring, &s);
            emit(out, j, text, value)?;
            0
        }
        Command::ConfigLambda { trunc, file } => {
            let x = load_gset(file)?;
            let s = ring.config_lambda_series(&x, *trunc)?;
            let (text, value) = series_output(&ring, &s);
            emit(out, j, text, value)?;
            0
        }
        Command::Alpha { r, pow, source } => {
            if *r == 0 {
                return Err(Error::Precondition("--r must be at least 1".into()));
            }
            let start = if Path::new(source).is_file() && load_gset(source).is_ok() {
                ring.class_of(&load_gset(source)?)?
            } else {
                ring.generator(&load_group(source)?)?
            };
            let a = (0..*pow).try_fold(start, |acc, _| ring.alpha_r(&acc, *r))?;
            emit(out, j, ring.render_element(&a), ring.element_json(&a))?;
            0
        }
        Command::Verify {
            suite,
            trunc,
            max_order,
            seed,
            sign,
            cases,
        } => {
            let sign = ExponentSign::from_value(*sign)
                .ok_or_else(|| Error::Parse(format!("--sign must be 1 or -1, got {sign}")))?;
            let opts = SuiteOptions {
                trunc: *trunc,
                max_order: *max_order,
                seed: *seed,
                sign,
                cases: *cases,
            };
            let report = run_suite_with(suite, &opts, &ring)?;
            emit(out, j, report.render().trim_end().to_string(), report.to_json())?;
            report.exit_code()
        }
    };
    if let Some(path) = &cli.registry {
        std::fs::write(path, serde_json::to_string_pretty(&registry.snapshot())?)?;
    }
    Ok(code)
}
