use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

/// Electromagnetic Steklov eigenvalues of the penalized curl-curl operator on
/// the unit ball, resonance lists and the classical scalar Steklov spectrum.
#[derive(Debug, Parser)]
#[command(name = "steklov-ball", version, args_override_self = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel evaluation (0 = rayon default)
    #[arg(long, global = true, env = "STEKLOV_BALL_THREADS")]
    pub threads: Option<usize>,
    /// File of `key = value` lines supplying flag defaults
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues for l = 1..l_max at one k^2
    #[command(args_override_self = true)]
    Eigs(EigsArgs),
    /// Eigenvalues over an (l, k^2) grid
    #[command(args_override_self = true)]
    Sweep(SweepArgs),
    /// Run the verification suites
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
    /// Roots of the Bessel-type functions behind resonances and zero eigenvalues
    #[command(args_override_self = true)]
    Zeros(ZerosArgs),
    /// Classical scalar Steklov spectrum of the n-ball
    #[command(args_override_self = true)]
    Classical(ClassicalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Bessel,
    Neumann,
    Magnetic,
    Family1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Specfun,
    Harmonics,
    Eigenvalues,
    Residuals,
    WeakIdentity,
    Resonances,
    Classical,
    Sweep,
}

#[derive(Debug, Clone, Args)]
pub struct EigsArgs {
    /// Eigenvalue family; both when omitted
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub l_max: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: f64,
    #[arg(long, default_value_t = 1.0)]
    pub theta: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value = "1")]
    pub family: FamilyArg,
    /// Degree or inclusive range `a:b`
    #[arg(long, default_value = "1:10")]
    pub l: Span<u64>,
    /// Value or inclusive range `a:b`
    #[arg(long, allow_hyphen_values = true, default_value = "-100:100")]
    pub k2: Span<f64>,
    #[arg(long, default_value_t = 2001)]
    pub samples: usize,
    #[arg(long, default_value_t = 1.0)]
    pub theta: f64,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run only these suites (repeatable); all when omitted
    #[arg(long, value_enum)]
    pub suite: Vec<Suite>,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=12))]
    pub l_max: u64,
    /// Factor applied to every tolerance
    #[arg(long, default_value_t = 1.0)]
    pub tol: f64,
    /// Relative perturbation applied to every eigenvalue before checking
    #[arg(long, hide = true, allow_hyphen_values = true)]
    pub perturb_lambda: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ZerosArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Degree or inclusive range `a:b`
    #[arg(long, default_value = "1")]
    pub l: Span<u64>,
    #[arg(long, default_value_t = 1.0)]
    pub theta: f64,
    #[arg(long, default_value_t = 5)]
    pub count: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ClassicalArgs {
    #[arg(long, default_value_t = 3)]
    pub dim: usize,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Number of eigenvalues counted with multiplicity
    #[arg(long, default_value_t = 10)]
    pub count: usize,
}

/// A single value or an inclusive `a:b` range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Span<T> {
    pub start: T,
    pub end: T,
}

impl<T: Copy> Span<T> {
    pub fn is_single(&self) -> bool
    where
        T: PartialEq,
    {
        self.start == self.end
    }
}

impl<T> FromStr for Span<T>
where
    T: FromStr + PartialOrd + Copy,
{
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<T>().map_err(|_| format!("cannot parse `{t}`"));
        // a leading '-' belongs to the first number, so split after it
        let split = s.char_indices().skip(1).find(|&(_, c)| c == ':').map(|(i, _)| i);
        let span = match split {
            Some(i) => Span { start: parse(&s[..i])?, end: parse(&s[i + 1..])? },
            None => {
                let v = parse(s)?;
                Span { start: v, end: v }
            }
        };
        if span.start > span.end {
            return Err(format!("range `{s}` is decreasing"));
        }
        Ok(span)
    }
}

const GLOBAL_VALUE_FLAGS: [&str; 4] = ["--format", "--out", "--threads", "--config"];

/// Reads `key = value` lines. Blank lines and `#` comments are skipped.
pub fn read_config(path: &Path) -> Result<Vec<(String, String)>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut pairs = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!("{}:{}: expected key = value", path.display(), no + 1));
        };
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        pairs.push((key, v.trim().to_string()));
    }
    Ok(pairs)
}

fn config_path(args: &[String]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Index of the subcommand token, skipping values of global flags.
fn subcommand_position(args: &[String]) -> Option<usize> {
    let names: Vec<String> = Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect();
    let mut i = 1;
    while i < args.len() {
        let a = &args[i];
        if GLOBAL_VALUE_FLAGS.contains(&a.as_str()) {
            i += 2;
            continue;
        }
        if names.contains(a) {
            return Some(i);
        }
        i += 1;
    }
    None
}

/// Rewrites `args` so that config-file values come first and every
/// command-line flag follows them; with `args_override_self` the later
/// occurrence wins, so flags beat the file. Keys are checked against the
/// chosen subcommand.
pub fn inject_config(args: Vec<String>) -> Result<Vec<String>, String> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let pairs = read_config(&path)?;
    let Some(pos) = subcommand_position(&args) else {
        return Ok(args);
    };
    let root = Cli::command();
    let sub = root.find_subcommand(&args[pos]).expect("subcommand exists");
    let known: Vec<String> = root
        .get_arguments()
        .chain(sub.get_arguments())
        .filter_map(|a| a.get_long().map(str::to_string))
        .collect();
    let mut injected = Vec::new();
    for (key, value) in pairs {
        if key == "config" {
            continue;
        }
        if !known.contains(&key) {
            return Err(format!("config key `{key}` is not a flag of `{}`", args[pos]));
        }
        injected.push(format!("--{key}={value}"));
    }
    let mut out = vec![args[0].clone(), args[pos].clone()];
    out.extend(injected);
    out.extend(args[1..pos].iter().cloned());
    out.extend(args[pos + 1..].iter().cloned());
    Ok(out)
}
