use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "rovib", version, about = "Ro-vibrational energies and wavefunctions of Manning-Rosen and Poschl-Teller potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Energy table over states and blends
    Energy {
        #[command(flatten)]
        common: Common,
        /// Add oracle columns: off, approx, exact or both
        #[arg(long, allow_hyphen_values = true)]
        oracle: Option<String>,
    },
    /// Differences between l(l+1)/r^2 and its approximations on a radial grid
    ApproxError {
        #[command(flatten)]
        common: Common,
        /// Radial grid min,max,count
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Angular momentum
        #[arg(long)]
        l: Option<String>,
    },
    /// Energy over a (lambda, nu) grid
    Sweep {
        #[command(flatten)]
        common: Common,
        /// lambda range min,max,count
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// nu range min,max,count
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Run the invariant and oracle checks
    Verify {
        #[command(flatten)]
        common: Common,
        /// Set to off to skip the oracle comparisons
        #[arg(long, allow_hyphen_values = true)]
        oracle: Option<String>,
    },
    /// Normalized radial wavefunction on a grid
    Wavefunction {
        #[command(flatten)]
        common: Common,
        /// Radial grid min,max,count
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
}

#[derive(Args, Debug, Default)]
pub struct Common {
    /// mr or pt
    #[arg(long)]
    pub potential: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Manning-Rosen screening length
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Manning-Rosen strength
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub xi2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub hbar: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Blends as "lambda,nu;lambda,nu;..."
    #[arg(long, allow_hyphen_values = true)]
    pub blends: Option<String>,
    /// States as "n,l:n,l:..."
    #[arg(long, allow_hyphen_values = true)]
    pub states: Option<String>,
    /// Expansion point of the Pekeris approximation (default: potential minimum)
    #[arg(long, allow_hyphen_values = true)]
    pub r0: Option<String>,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Read key = value settings from this file; flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write the effective settings to this file
    #[arg(long)]
    pub save_config: Option<PathBuf>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Energy { .. } => "energy",
            Command::ApproxError { .. } => "approx-error",
            Command::Sweep { .. } => "sweep",
            Command::Verify { .. } => "verify",
            Command::Wavefunction { .. } => "wavefunction",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Energy { common, .. }
            | Command::ApproxError { common, .. }
            | Command::Sweep { common, .. }
            | Command::Verify { common, .. }
            | Command::Wavefunction { common, .. } => common,
        }
    }

    /// Flag values keyed like the config file.
    pub fn flag_values(&self) -> BTreeMap<String, String> {
        let c = self.common();
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: &Option<String>| {
            if let Some(v) = v {
                m.insert(k.to_string(), v.clone());
            }
        };
        put("potential", &c.potential);
        put("alpha", &c.alpha);
        put("b", &c.b);
        put("A", &c.a);
        put("xi1", &c.xi1);
        put("xi2", &c.xi2);
        put("hbar", &c.hbar);
        put("mu", &c.mu);
        put("blends", &c.blends);
        put("states", &c.states);
        put("r0", &c.r0);
        match self {
            Command::Energy { oracle, .. } | Command::Verify { oracle, .. } => put("oracle", oracle),
            Command::ApproxError { grid, l, .. } => {
                put("grid", grid);
                put("l", l);
            }
            Command::Sweep { lambda, nu, .. } => {
                put("lambda", lambda);
                put("nu", nu);
            }
            Command::Wavefunction { grid, .. } => put("grid", grid),
        }
        if let Some(out) = &c.out {
            m.insert("out".into(), out.display().to_string());
        }
        m
    }
}
