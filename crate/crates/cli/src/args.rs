use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "ladders",
    version,
    about = "Multisegment RSK, derivatives and the multipartition dictionary"
)]
pub struct Cli {
    /// Print the full report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// RSK transform of a multisegment into ladders.
    Rsk(RskArgs),
    /// Derivatives, BZ sweeps, RSK descriptors and grading shifts.
    Derive(DeriveArgs),
    /// Multipartition classification and the ladder dictionary.
    Specht(SpechtArgs),
    /// Standard tableaux, hook lengths and residue sequences of a shape.
    Tableaux(TableauxArgs),
    /// Property suites over bounded enumerations.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct RskArgs {
    /// Multisegment such as "[1,1]+[1,2]", or "0" for the empty one.
    pub input: String,
    /// Also print the bitableau (P, Q).
    #[arg(long)]
    pub bitableau: bool,
    /// Also print the width.
    #[arg(long)]
    pub width: bool,
}

#[derive(Args, Debug)]
pub struct DeriveArgs {
    /// One multisegment; several only with --phi.
    #[arg(required = true)]
    pub inputs: Vec<String>,
    /// Sweep single derivatives along the BZ sequence T, ..., -T.
    #[arg(long, value_name = "T", allow_negative_numbers = true,
          conflicts_with_all = ["single", "gamma_descriptor", "derived", "phi"])]
    pub bz: Option<i64>,
    /// Derive only the segments beginning at j.
    #[arg(long, value_name = "J", allow_negative_numbers = true,
          conflicts_with_all = ["gamma_descriptor", "derived", "phi"])]
    pub single: Option<i64>,
    /// Ladders and grading shift of the RSK-standard descriptor.
    #[arg(long, conflicts_with = "phi")]
    pub gamma_descriptor: bool,
    /// Use the derived bitableau (P', Q) for the descriptor.
    #[arg(long, conflicts_with = "phi")]
    pub derived: bool,
    /// Grading shift Phi = C - C' of a product of the inputs.
    #[arg(long)]
    pub phi: bool,
}

#[derive(Args, Debug)]
pub struct SpechtArgs {
    /// Weakly decreasing charges, e.g. "2,1,-1".
    #[arg(long, allow_hyphen_values = true)]
    pub charge: String,
    /// Components separated by '|', parts by ',', e.g. "3,1||2".
    #[arg(long, allow_hyphen_values = true)]
    pub parts: String,
    /// Run the full dictionary check against the RSK transform.
    #[arg(long)]
    pub verify_rsk: bool,
    /// Print the padded proper multipartition.
    #[arg(long)]
    pub pad: bool,
    /// Remove first columns and compare with the multisegment derivative.
    #[arg(long)]
    pub derive: bool,
}

#[derive(Args, Debug)]
pub struct TableauxArgs {
    /// Partition, e.g. "3,2".
    #[arg(long)]
    pub shape: String,
    /// Charge for residue sequences.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Combi,
    Rsk,
    Specht,
    Strings,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Combi => "combi",
            Suite::Rsk => "rsk",
            Suite::Specht => "specht",
            Suite::Strings => "strings",
            Suite::All => "all",
        }
    }
}

/// Deliberate mutations used to confirm that the suites catch bugs.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negate the non-symmetric form inside Phi.
    EllSign,
}

#[derive(Args, Debug, Clone)]
pub struct CheckArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Smallest simple-root index in the enumerated support.
    #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
    pub min: i64,
    /// Largest simple-root index in the enumerated support.
    #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
    pub max: i64,
    #[arg(long, default_value_t = 3)]
    pub max_segments: usize,
    /// Largest multipartition size for the specht suite.
    #[arg(long, default_value_t = 5)]
    pub max_size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of seeded random instances beyond the enumeration.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

impl CheckArgs {
    /// Command line that reruns exactly this check.
    pub fn reproduction(&self) -> String {
        let mut cmd = format!(
            "ladders check --suite {} --min {} --max {} --max-segments {} --max-size {} --seed {} --samples {}",
            self.suite.name(),
            self.min,
            self.max,
            self.max_segments,
            self.max_size,
            self.seed,
            self.samples
        );
        if let Some(Fault::EllSign) = self.inject_fault {
            cmd.push_str(" --inject-fault ell-sign");
        }
        cmd
    }
}
