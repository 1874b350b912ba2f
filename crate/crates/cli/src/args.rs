use clap::{Args, Parser, Subcommand, ValueEnum};
use numeric_core::{parse_rational, Rational};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "jtqes", version, about = "Juddian points and quasi-exact spectra of the generalized E x e Jahn-Teller Hamiltonian")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Determinant roots on the energy baselines, validated exactly and against the oracle
    Juddian(CommonArgs),
    /// Converged low-lying spectrum of one J sector
    Spectrum(CommonArgs),
    /// Superalgebra identities, the recurrence bridge and invariant-space closure
    AlgebraCheck(CommonArgs),
    /// Compare computed determinants with the listed P1, P2, P3
    ComparePrinted(CommonArgs),
    /// List the physical presets and their parameter constraints
    Presets(CommonArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Juddian(_) => "juddian",
            Command::Spectrum(_) => "spectrum",
            Command::AlgebraCheck(_) => "algebra-check",
            Command::ComparePrinted(_) => "compare-printed",
            Command::Presets(_) => "presets",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Juddian(a)
            | Command::Spectrum(a)
            | Command::AlgebraCheck(a)
            | Command::ComparePrinted(a)
            | Command::Presets(a) => a,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ordering {
    SubstituteOnly,
    SubstituteThenReplace,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s)
}

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// Spin-like label k (2k a nonnegative integer), e.g. 1/2
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub k: Option<Rational>,
    /// Sector label j
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub j: Option<Rational>,
    /// Coupling of the (1/2 + 2mu) sigma0 term
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub mu: Option<Rational>,
    /// Coupling kappa, or START:END:STEP to sweep it
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<String>,
    /// Upper end of the kappa search range
    #[arg(long, value_parser = rational)]
    pub kappa_max: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub eta: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub rho: Option<Rational>,
    /// Dimer coupling, 2mu = G
    #[arg(long = "G", value_parser = rational, allow_hyphen_values = true)]
    pub g: Option<Rational>,
    /// Physical preset (see `jtqes presets`)
    #[arg(long)]
    pub case: Option<String>,
    /// Preset label within a case family
    #[arg(long)]
    pub label: Option<String>,
    /// How (eta, rho) combine with the j -> -j-1 replacement of a preset
    #[arg(long, value_enum)]
    pub ordering: Option<Ordering>,
    /// Number of oracle eigenvalues
    #[arg(long)]
    pub window: Option<usize>,
    /// Root enclosure width (juddian) or convergence tolerance (spectrum)
    #[arg(long, value_parser = rational)]
    pub tol: Option<Rational>,
    /// Random draws for compare-printed and algebra-check
    #[arg(long)]
    pub draws: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Skip the numerical oracle
    #[arg(long)]
    pub no_oracle: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// FIELD=START:END:STEP, repeatable; grids are combined as a product
    #[arg(long)]
    pub sweep: Vec<String>,
}
