use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heatkernel::darboux::ParamVector;
use heatkernel::exact::{parse_rational, Rational};

#[derive(Parser, Debug)]
#[command(name = "heatkernel", version, about = "Closed-form heat kernels of Darboux-transformed discrete Laplacians")]
pub struct Cli {
    /// Flat `key = value` file; its entries act as flags given before the command line ones.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Assemble u(n, m, t) = e^{-2t} Σ_j β_j(t) I_j(2t).
    #[command(args_override_self = true)]
    Kernel(KernelArgs),
    /// Tabulate τ(n) on [-range, range].
    #[command(args_override_self = true)]
    Tau(TauArgs),
    /// Print the band operator L, symbolically or at given sites.
    #[command(args_override_self = true)]
    Operator(OperatorArgs),
    /// Tabulate e^{-t} I_k(t).
    #[command(args_override_self = true)]
    Bessel(BesselArgs),
    /// Run one of the verification suites.
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Number of steps at x = 1.
    #[arg(long = "R", default_value_t = 0)]
    pub r_steps: usize,
    /// Number of steps at x = -1.
    #[arg(long = "S", default_value_t = 0)]
    pub s_steps: usize,
    /// Times r_1, r_2, … as exact rationals, comma separated (e.g. `1/2,-3/4`).
    #[arg(long = "r", value_name = "LIST", allow_hyphen_values = true, conflicts_with_all = ["alpha", "beta"])]
    pub times: Option<String>,
    /// r_1 = α (with --beta).
    #[arg(long, allow_hyphen_values = true, requires = "beta")]
    pub alpha: Option<String>,
    /// r_2 = -β/4 (with --alpha).
    #[arg(long, allow_hyphen_values = true, requires = "alpha")]
    pub beta: Option<String>,
}

impl ParamArgs {
    pub fn params(&self) -> Result<ParamVector, String> {
        if let (Some(a), Some(b)) = (&self.alpha, &self.beta) {
            return Ok(ParamVector::from_alpha_beta(self.r_steps, self.s_steps, rational(a)?, rational(b)?));
        }
        match &self.times {
            Some(list) => {
                let r = list.split(',').map(|s| rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
                ParamVector::new(self.r_steps, self.s_steps, r).map_err(|e| e.to_string())
            }
            None if self.r_steps + self.s_steps == 0 => Ok(ParamVector::free()),
            None => Err("give the times with --r or the pair --alpha/--beta".into()),
        }
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Comma-separated reals.
pub fn real_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|_| format!("cannot parse {v:?} as a real number")))
        .collect()
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub m: i64,
    /// Times at which to also evaluate the kernel, comma separated.
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct TauArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 5)]
    pub range: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct OperatorArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Evaluate the coefficients at this site.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "range")]
    pub at: Option<i64>,
    /// Evaluate the coefficients on [-range, range].
    #[arg(long)]
    pub range: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BesselArgs {
    /// Arguments, comma separated.
    #[arg(long)]
    pub t: String,
    #[arg(long, default_value_t = 10)]
    pub kmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Exact residual of u_t = L u.
    Pde,
    /// Closed form against the truncated-lattice evolution.
    Oracle,
    /// Orthogonality of p_n by contour quadrature.
    Orth,
    /// Re-summation of e^{t(x+1/x)} used by the assembler.
    Decomp,
    /// Bessel identities, resummed tails and the interpolation identities.
    Identities,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, allow_hyphen_values = true, requires = "m")]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    pub m: Option<i64>,
    /// Half-width of the site grid.
    #[arg(long)]
    pub range: Option<i64>,
    /// Times, comma separated.
    #[arg(long)]
    pub t: Option<String>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Lattice half-width for the oracle mode.
    #[arg(long, default_value_t = 200)]
    pub window: i64,
    /// Seed for the randomized instances of the identities mode.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Base index for the decomposition mode.
    #[arg(long)]
    pub k: Option<i64>,
    /// max(R, S) for the decomposition mode.
    #[arg(long = "T")]
    pub big_t: Option<usize>,
    /// Largest Bessel order for the identities mode.
    #[arg(long, default_value_t = 20)]
    pub kmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Splices the entries of `--config FILE` in right after the subcommand, so
/// later command-line flags override them.
pub fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>, String> {
    let strings: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let mut path = None;
    for (i, a) in strings.iter().enumerate() {
        if a == "--config" {
            path = strings.get(i + 1).cloned();
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        }
    }
    let Some(path) = path else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read config {path}: {e}"))?;
    let mut extra = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{path}:{}: expected `key = value`", lineno + 1))?;
        let key = key.trim();
        if key == "config" {
            return Err(format!("{path}:{}: nested config files are not supported", lineno + 1));
        }
        extra.push(OsString::from(format!("--{key}={}", value.trim())));
    }
    let Some(sub) = (1..strings.len()).find(|&i| !strings[i].starts_with('-') && strings[i - 1] != "--config") else {
        return Ok(args);
    };
    let mut out = args[..=sub].to_vec();
    out.extend(extra);
    out.extend_from_slice(&args[sub + 1..]);
    Ok(out)
}

impl Cli {
    pub fn parse_with_config(args: Vec<OsString>) -> Result<Self, Failure> {
        let args = expand_config(args).map_err(Failure::Usage)?;
        Cli::try_parse_from(args).map_err(Failure::Clap)
    }
}

#[derive(Debug)]
pub enum Failure {
    Clap(clap::Error),
    Usage(String),
    Library(heatkernel::Error),
    /// A verification check failed; the message names the first failing case.
    Check(String),
}

impl From<heatkernel::Error> for Failure {
    fn from(e: heatkernel::Error) -> Self {
        Failure::Library(e)
    }
}
