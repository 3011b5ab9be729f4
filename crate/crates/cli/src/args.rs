use crate::presets::Preset;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "soc-lab", version, about = "Spatial outage capacity of Poisson bipolar networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean success probability, moments M_b, D_b and variance.
    Eval(EvalArgs),
    /// Meta distribution η(θ, ε).
    Meta(MetaArgs),
    /// Density of reliable links along a sweep.
    #[command(name = "lambda-eps")]
    LambdaEps(LambdaEpsArgs),
    /// Spatial outage capacity and its optimum.
    Soc(SocArgs),
    /// Upper and lower bounds on the SOC over an ε grid.
    Bounds(BoundsArgs),
    /// Small-ε closed forms.
    Asymptotic(AsymptoticArgs),
    /// Monte Carlo histogram of link success probabilities.
    Simulate(SimulateArgs),
    /// Transmission capacity against the SOC.
    #[command(name = "compare-tc")]
    CompareTc(CompareTcArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LinkArg {
    Fixed,
    Rayleigh,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    /// Figure parameter set; explicit flags override it.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// SIR threshold, linear.
    #[arg(long, conflicts_with = "theta_db", allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// SIR threshold in dB.
    #[arg(long, allow_negative_numbers = true)]
    pub theta_db: Option<f64>,
    /// Path loss exponent (> 2).
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, value_enum)]
    pub link: Option<LinkArg>,
    /// Link distance for the fixed model.
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    /// Receiver density for the nearest-receiver model.
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
}

#[derive(Debug, Clone, Args)]
pub struct DensityArgs {
    /// Density of potential transmitters.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Transmit probability.
    #[arg(long)]
    pub p: Option<f64>,
    /// Density of active transmitters λp.
    #[arg(long)]
    pub nu: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct EpsArgs {
    /// Outage target.
    #[arg(long)]
    pub eps: Option<f64>,
    /// ε grid: a:b:n, log:a:b:n or a comma list.
    #[arg(long)]
    pub eps_grid: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Emit JSON instead of CSV.
    #[arg(long)]
    pub json: bool,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct McArgs {
    /// Window side length.
    #[arg(long)]
    pub window: Option<f64>,
    #[arg(long)]
    pub realizations: Option<usize>,
    #[arg(long, value_enum, default_value = "torus")]
    pub boundary: BoundaryArg,
    /// Guard band width for `--boundary guard`.
    #[arg(long)]
    pub guard_width: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Torus,
    Guard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetaMethodArg {
    GilPelaez,
    Beta,
    Mc,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SocMethodArg {
    Exact,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExactArg {
    Exact,
    Beta,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepArg {
    Nu,
    Lambda,
    P,
    Eps,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub density: DensityArgs,
    /// Moment orders.
    #[arg(long, default_value = "1,2")]
    pub b: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MetaArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub density: DensityArgs,
    #[command(flatten)]
    pub eps: EpsArgs,
    #[arg(long, value_enum, default_value = "gil-pelaez")]
    pub method: MetaMethodArg,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LambdaEpsArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub density: DensityArgs,
    #[command(flatten)]
    pub eps: EpsArgs,
    #[arg(long, value_enum, default_value = "nu")]
    pub sweep: SweepArg,
    /// Values of the swept variable.
    #[arg(long)]
    pub grid: Option<String>,
    /// Additional transmit probabilities (one curve each).
    #[arg(long)]
    pub p_grid: Option<String>,
    #[arg(long, value_enum, default_value = "gil-pelaez")]
    pub method: MetaMethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SocArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub eps: EpsArgs,
    #[arg(long, value_enum, default_value = "exact")]
    pub method: SocMethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub eps: EpsArgs,
    /// How the SOC column itself is computed.
    #[arg(long, value_enum, default_value = "beta")]
    pub exact: ExactArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AsymptoticArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub eps: EpsArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub density: DensityArgs,
    #[arg(long, default_value_t = 20)]
    pub bins: usize,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareTcArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub eps: EpsArgs,
    #[arg(long, value_enum, default_value = "exact")]
    pub method: SocMethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}
