//! Argument handling and dispatch for the `modrep` binary.

pub mod config;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use modrep::dim_classifier::{
    compare_with_rows, dim_irreducible_with, enumerate_small_irreducibles_with, multiplicity, Limits, Strategy,
};
use modrep::freudenthal::{weyl_dimension, weyl_multiplicity};
use modrep::tensor_constructions::Construction;
use modrep::weyl_orbits::{orbit_size, premet_lower_bound, subdominant_weights};
use modrep::{Prime, Rank, Weight};

use config::FileConfig;

#[derive(Debug, Parser)]
#[command(name = "modrep", version, about = "Dimensions and weight multiplicities of irreducible SL(l+1)-modules in characteristic p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct Common {
    /// Rank l of SL(l+1).
    #[arg(long)]
    pub rank: Option<usize>,
    /// Characteristic p.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    /// Highest weight, `i:a,j:b` or `[a1,...,al]`.
    #[arg(long)]
    pub weight: Option<String>,
    /// Subdominant weight for `mult`.
    #[arg(long)]
    pub sub: Option<String>,
    /// Exponent s of the bound (l+1)^s.
    #[arg(long)]
    pub exp: Option<u32>,
    /// oracle-first, gram-only or oracle-only.
    #[arg(long)]
    pub strategy: Option<String>,
    /// Largest number of lattice basis vectors the Gram engine may hold.
    #[arg(long)]
    pub cap_monomials: Option<usize>,
    /// Largest rank for the tensor constructions.
    #[arg(long)]
    pub cap_tensor_rank: Option<usize>,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    /// TOML file with defaults for the flags above.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// dim L(λ) with its per-weight breakdown.
    Dim(Common),
    /// m_λ(μ) with its source.
    Mult(Common),
    /// Orbit size, Premet bound and Weyl dimension of a dominant weight.
    Orbit(Common),
    /// All p-restricted λ with dim L(λ) <= (l+1)^s, up to duality.
    Enumerate(Common),
    /// Enumeration compared with the tabulated rows.
    Verify(Common),
    /// Dimensions of an explicit tensor model: l1l2, l1llm1 or 2l1ll.
    Construct {
        name: String,
        #[command(flatten)]
        common: Common,
    },
    /// Quick consistency checks.
    Selftest(Common),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dim(_) => "dim",
            Command::Mult(_) => "mult",
            Command::Orbit(_) => "orbit",
            Command::Enumerate(_) => "enumerate",
            Command::Verify(_) => "verify",
            Command::Construct { .. } => "construct",
            Command::Selftest(_) => "selftest",
        }
    }

    fn common(&self) -> &Common {
        match self {
            Command::Dim(c)
            | Command::Mult(c)
            | Command::Orbit(c)
            | Command::Enumerate(c)
            | Command::Verify(c)
            | Command::Selftest(c) => c,
            Command::Construct { common, .. } => common,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] modrep::Error),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource() => 2,
            _ => 1,
        }
    }
}

/// Settings after merging the config file and flags.
#[derive(Debug, Clone, Serialize)]
pub struct Resolved {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(rename = "char", skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exp: Option<u32>,
    pub strategy: Strategy,
    pub cap_monomials: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap_tensor_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

impl Resolved {
    fn rank(&self) -> Result<Rank, CliError> {
        let l = self.rank.ok_or_else(|| CliError::Usage("--rank is required".into()))?;
        Ok(Rank::new(l)?)
    }

    fn prime(&self) -> Result<Prime, CliError> {
        let p = self
            .characteristic
            .ok_or_else(|| CliError::Usage("--char is required".into()))?;
        Ok(Prime::new(p)?)
    }

    fn weight(&self) -> Result<Weight, CliError> {
        let text = self.weight.as_deref().ok_or_else(|| CliError::Usage("--weight is required".into()))?;
        Ok(Weight::parse(text, self.rank()?)?)
    }

    fn sub(&self) -> Result<Weight, CliError> {
        let text = self.sub.as_deref().ok_or_else(|| CliError::Usage("--sub is required".into()))?;
        Ok(Weight::parse(text, self.rank()?)?)
    }

    fn exp(&self) -> Result<u32, CliError> {
        match self.exp {
            Some(s) if s >= 1 => Ok(s),
            Some(s) => Err(CliError::Usage(format!("--exp must be positive, got {s}"))),
            None => Err(CliError::Usage("--exp is required".into())),
        }
    }

    fn limits(&self) -> Limits {
        Limits {
            lattice: self.cap_monomials,
        }
    }
}

fn resolve(command: &Command) -> Result<Resolved, CliError> {
    let c = command.common();
    let file = match &c.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            FileConfig::from_toml_str(&text)?
        }
        None => FileConfig::default(),
    };
    let flags = FileConfig {
        rank: c.rank,
        characteristic: c.characteristic,
        weight: c.weight.clone(),
        sub: c.sub.clone(),
        exp: c.exp,
        strategy: c.strategy.clone(),
        cap_monomials: c.cap_monomials,
        cap_tensor_rank: c.cap_tensor_rank,
        threads: c.threads,
    };
    let m = file.overridden_by(flags);
    let strategy = match m.strategy.as_deref() {
        Some(s) => s.parse::<Strategy>()?,
        None => Strategy::default(),
    };
    if m.threads == Some(0) {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    Ok(Resolved {
        command: command.name(),
        construction: match command {
            Command::Construct { name, .. } => Some(name.clone()),
            _ => None,
        },
        rank: m.rank,
        characteristic: m.characteristic,
        weight: m.weight,
        sub: m.sub,
        exp: m.exp,
        strategy,
        cap_monomials: m.cap_monomials.unwrap_or(Limits::default().lattice),
        cap_tensor_rank: m.cap_tensor_rank,
        threads: m.threads,
    })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Every JSON number becomes its decimal string.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(stringify_numbers).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

fn cmd_dim(cfg: &Resolved) -> Result<Value, CliError> {
    let (w, p) = (cfg.weight()?, cfg.prime()?);
    if w.is_zero() {
        return Err(CliError::Usage("the zero weight is excluded; give a nonzero weight".into()));
    }
    Ok(to_value(&dim_irreducible_with(&w, p, cfg.strategy, cfg.limits())?))
}

fn cmd_mult(cfg: &Resolved) -> Result<Value, CliError> {
    let (w, mu, p) = (cfg.weight()?, cfg.sub()?, cfg.prime()?);
    let (m, provenance) = multiplicity(&w, &mu, p, cfg.strategy, cfg.limits())?;
    Ok(json!({
        "lambda": w,
        "mu": mu,
        "char": p,
        "multiplicity": m,
        "provenance": provenance,
        "weyl_multiplicity": weyl_multiplicity(&w, &mu)?,
    }))
}

fn cmd_orbit(cfg: &Resolved) -> Result<Value, CliError> {
    let w = cfg.weight()?;
    Ok(json!({
        "weight": w,
        "orbit_size": orbit_size(&w)?.to_string(),
        "premet_lower_bound": premet_lower_bound(&w)?.to_string(),
        "weyl_dimension": weyl_dimension(&w)?.to_string(),
        "subdominant_count": subdominant_weights(&w)?.len(),
    }))
}

fn cmd_enumerate(cfg: &Resolved) -> Result<Value, CliError> {
    let l = cfg.rank()?.get();
    let report = enumerate_small_irreducibles_with(l, cfg.prime()?, cfg.exp()?, cfg.strategy, cfg.limits())?;
    Ok(to_value(&report))
}

fn cmd_verify(cfg: &Resolved) -> Result<Value, CliError> {
    let l = cfg.rank()?.get();
    let s = cfg.exp()?;
    if !(3..=4).contains(&s) {
        return Err(CliError::Usage(format!("tables exist for --exp 3 and 4, not {s}")));
    }
    let report = enumerate_small_irreducibles_with(l, cfg.prime()?, s, cfg.strategy, cfg.limits())?;
    let v = compare_with_rows(&report);
    let mut out = to_value(&v);
    out["clean"] = Value::Bool(v.is_clean());
    Ok(out)
}

fn cmd_construct(cfg: &Resolved) -> Result<Value, CliError> {
    let name = cfg.construction.as_deref().unwrap_or_default();
    let c = Construction::parse(name)?;
    let (l, p) = (cfg.rank()?.get(), cfg.prime()?);
    let rep = c.build(l, p, cfg.cap_tensor_rank)?;
    let mut out = to_value(&rep);
    out["dim_irreducible"] = if rep.lambda.is_restricted(p.get()) {
        let d = dim_irreducible_with(&rep.lambda, p, cfg.strategy, cfg.limits())?;
        out["agrees"] = Value::Bool(d.value == BigUint::from(rep.irreducible));
        Value::String(d.value.to_string())
    } else {
        Value::Null
    };
    Ok(out)
}

fn check(name: &str, run: impl FnOnce() -> Result<bool, CliError>) -> Value {
    let (pass, detail) = match run() {
        Ok(b) => (b, Value::Null),
        Err(e) => (false, Value::String(e.to_string())),
    };
    json!({ "name": name, "pass": pass, "detail": detail })
}

fn cmd_selftest(cfg: &Resolved) -> Result<Value, CliError> {
    let limits = cfg.limits();
    let w = |l: usize, terms: &[(usize, i64)]| Weight::from_terms(Rank::new(l).expect("rank"), terms);
    let p = |n: u64| Prime::new(n).expect("prime");
    let dim = |l, t: &[(usize, i64)], q, s| -> Result<BigUint, CliError> {
        Ok(dim_irreducible_with(&w(l, t), p(q), s, limits)?.value)
    };
    let checks = vec![
        check("adjoint l=6 p=7 is 47", || Ok(dim(6, &[(1, 1), (6, 1)], 7, cfg.strategy)? == 47u32.into())),
        check("l1+l2 l=19 p=3 is 1520", || Ok(dim(19, &[(1, 1), (2, 1)], 3, cfg.strategy)? == 1520u32.into())),
        check("2l1+2l7 at 0, p=3 is 27", || {
            let lam = w(7, &[(1, 2), (7, 2)]);
            Ok(multiplicity(&lam, &w(7, &[]), p(3), cfg.strategy, limits)?.0 == 27)
        }),
        check("l2+l3 at l5, p=2 is 4", || {
            let lam = w(5, &[(2, 1), (3, 1)]);
            Ok(multiplicity(&lam, &w(5, &[(5, 1)]), p(2), cfg.strategy, limits)?.0 == 4)
        }),
        check("gram-only agrees on 2l1+l4, l=4, p=3", || {
            Ok(dim(4, &[(1, 2), (4, 1)], 3, Strategy::GramOnly)? == dim(4, &[(1, 2), (4, 1)], 3, Strategy::OracleFirst)?)
        }),
        check("l1l2 model at l=4, p=3 is 40/30", || {
            let r = Construction::L1L2.build(4, p(3), cfg.cap_tensor_rank)?;
            Ok(r.kernel_or_image == 40 && r.irreducible == 30)
        }),
        check("2l1ll model at l=3, p=5 is 32", || {
            Ok(Construction::TwoL1Ll.build(3, p(5), cfg.cap_tensor_rank)?.irreducible == 32)
        }),
        check("cubic table at l=19, p=5", || {
            let rep = enumerate_small_irreducibles_with(19, p(5), 3, cfg.strategy, limits)?;
            Ok(compare_with_rows(&rep).is_clean())
        }),
    ];
    let failed = checks.iter().filter(|c| c["pass"] != Value::Bool(true)).count();
    Ok(json!({ "checks": checks, "passed": checks.len() - failed, "failed": failed }))
}

fn dispatch(cmd: &Command, cfg: &Resolved) -> Result<Value, CliError> {
    match cmd {
        Command::Dim(_) => cmd_dim(cfg),
        Command::Mult(_) => cmd_mult(cfg),
        Command::Orbit(_) => cmd_orbit(cfg),
        Command::Enumerate(_) => cmd_enumerate(cfg),
        Command::Verify(_) => cmd_verify(cfg),
        Command::Construct { .. } => cmd_construct(cfg),
        Command::Selftest(_) => cmd_selftest(cfg),
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first), runs the command and renders output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok(text) => match &cli.command.common().output {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
                Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
            },
            None => Outcome { code: 0, stdout: text, stderr: String::new() },
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cmd: &Command) -> Result<String, CliError> {
    let cfg = resolve(cmd)?;
    let result = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| dispatch(cmd, &cfg))?,
        None => dispatch(cmd, &cfg)?,
    };
    let failed_selftest = cmd.name() == "selftest" && result["failed"] != json!(0);
    let doc = stringify_numbers(json!({ "config": to_value(&cfg), "result": result }));
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    if failed_selftest {
        return Err(CliError::Usage(format!("selftest failed\n{text}")));
    }
    Ok(text)
}
